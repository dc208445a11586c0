#pragma once

#include <vector>

#include "pwll/cg.hpp"
#include "pwll/graph.hpp"
#include "pwll/types.hpp"

namespace pwll {

struct NodeWeights {
  Vector gamma;  // 1 + max(raw, 0)
  Vector raw;    // mean-zero Poisson solution
};

// Solves L w = f with f_i = sum_{k in labeled} (delta_ik - 1/N) in the
// mean-zero gauge and maps it through gamma = 1 + max(w, 0).
// warm_start, when non-empty, seeds CG (typically the previous raw).
// Throws EmptyLabeledSet and SolverDiverged.
NodeWeights solve_gamma(const SimilarityGraph& graph,
                        const std::vector<Index>& labeled,
                        const CgOptions& options = {},
                        const Vector& warm_start = Vector());

// The Poisson source term for a label set.
Vector poisson_source(Index n, const std::vector<Index>& labeled);

}  // namespace pwll
