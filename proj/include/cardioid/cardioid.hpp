#pragma once

#include "coefficients.hpp"
#include "geometry.hpp"
#include "radii.hpp"
#include "report.hpp"
#include "series.hpp"
#include "solve.hpp"
#include "subordination.hpp"
