#pragma once

// Umbrella header.

#include "convball/bigfloat.hpp"
#include "convball/continuity.hpp"
#include "convball/errors.hpp"
#include "convball/expr.hpp"
#include "convball/linalg.hpp"
#include "convball/majorant.hpp"
#include "convball/operator_spec.hpp"
#include "convball/problem_file.hpp"
#include "convball/problems.hpp"
#include "convball/quadrature.hpp"
#include "convball/real.hpp"
#include "convball/root_search.hpp"
#include "convball/solvers.hpp"
#include "convball/tables.hpp"
