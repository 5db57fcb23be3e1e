#pragma once

#include <vector>

#include "wsstad/tube.hpp"

namespace wsstad {

/// Score for chaining two boxes from adjacent frames. Gated on IoU > lambda;
/// below the gate the score is 0.
double linking_score(const ScoredBox& a, const ScoredBox& b, const LinkParams& params);

/// Greedy per-category linking. `dets` must all belong to one video. Tubes
/// shorter than zeta1 are discarded but still consume their boxes.
std::vector<Tube> build_unary_tubes(const std::vector<ScoredBox>& dets,
                                    const LinkParams& params);

/// Greedy cross-category clustering; per-frame clusters collapse to their
/// union box. Tubes shorter than zeta2 are discarded but consume their boxes.
std::vector<Tube> build_multivariate_tubes(const std::vector<ScoredBox>& dets,
                                           const LinkParams& params);

/// Unary followed by multivariate tubes, ids assigned in emission order.
std::vector<Tube> build_all_tubes(const std::vector<ScoredBox>& dets,
                                  const LinkParams& params);

}  // namespace wsstad
