#pragma once

// Exact-arithmetic computational Lie theory: simple root systems, alcove and
// parahoric combinatorics, facet/star data, dimension formulas, and the
// graded kernel oracle. Header-only; everything is pure and immutable.

#include "alcove/cohomology.hpp"
#include "alcove/facets.hpp"
#include "alcove/graded_kernel.hpp"
#include "alcove/numeric.hpp"
#include "alcove/parahoric.hpp"
#include "alcove/root_system.hpp"
#include "alcove/verify.hpp"
