#pragma once

#include "jaco/conjectures.hpp"
#include "jaco/dompath.hpp"
#include "jaco/exact_arith.hpp"
#include "jaco/format.hpp"
#include "jaco/general_graph.hpp"
#include "jaco/graph_params.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/sequences.hpp"
#include "jaco/table1.hpp"
