#pragma once

// Convenience header pulling in the whole library.

#include "bbc/algorithms/dispatch.hpp"
#include "bbc/algorithms/double_spaced.hpp"
#include "bbc/algorithms/forest_partition.hpp"
#include "bbc/algorithms/interval_bipartite.hpp"
#include "bbc/algorithms/sparse_peel.hpp"
#include "bbc/chordal.hpp"
#include "bbc/exact.hpp"
#include "bbc/generators.hpp"
#include "bbc/graph.hpp"
#include "bbc/io.hpp"
#include "bbc/maxflow.hpp"
#include "bbc/random.hpp"
#include "bbc/rational.hpp"
#include "bbc/report.hpp"
#include "bbc/structure.hpp"
#include "bbc/verify.hpp"
