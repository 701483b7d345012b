#ifndef RCGRAPH_RCGRAPH_HPP
#define RCGRAPH_RCGRAPH_HPP

// Umbrella header: rc-graphs, Schubert polynomials, the generalized Schensted
// insertion and its inverse, and the Littlewood-Richardson cross-checks.

#include "rcgraph/errors.hpp"
#include "rcgraph/graph.hpp"
#include "rcgraph/insertion.hpp"
#include "rcgraph/inverse.hpp"
#include "rcgraph/json_io.hpp"
#include "rcgraph/lr.hpp"
#include "rcgraph/permutation.hpp"
#include "rcgraph/render.hpp"
#include "rcgraph/schubert.hpp"
#include "rcgraph/tableau.hpp"

#endif
