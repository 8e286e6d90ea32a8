// starmat.hpp -- umbrella header.

#pragma once

#include "starmat/affine_solution.hpp"
#include "starmat/bigint.hpp"
#include "starmat/coxeter.hpp"
#include "starmat/enumerate.hpp"
#include "starmat/exact_matrix.hpp"
#include "starmat/reference_tables.hpp"
#include "starmat/star_shape.hpp"
#include "starmat/table_report.hpp"
#include "starmat/weighted_graph.hpp"
