#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsstad/geometry.hpp"
#include "wsstad/types.hpp"

namespace wsstad {

enum class TubeKind { unary, multivariate };

struct TubeEntry {
  std::int64_t frame = 0;
  Box box;

  bool operator==(const TubeEntry&) const = default;
};

/// A chronologically contiguous sequence of per-frame boxes. Unary tubes track
/// one object of one category; multivariate entries are union boxes over the
/// per-frame member clusters.
struct Tube {
  std::string id;
  std::string video_id;
  TubeKind kind = TubeKind::unary;
  std::optional<std::string> category;  // unary only
  std::vector<TubeEntry> entries;       // sorted, consecutive frames
  std::vector<std::vector<ScoredBox>> member_boxes;  // aligned with entries

  FrameSpan span() const {
    if (entries.empty()) return {};
    return {entries.front().frame, entries.back().frame + 1};
  }
};

/// Linking/clustering knobs: IoU gate lambda, IoU trade-off eta, and the
/// minimum emitted lengths for unary and multivariate tubes.
struct LinkParams {
  double lambda = 0.1;
  double eta = 2.0;
  std::int64_t zeta1 = 100;
  std::int64_t zeta2 = 50;

  void validate() const {
    if (lambda < 0 || lambda >= 1) throw std::invalid_argument("lambda must be in [0,1)");
    if (eta < 0) throw std::invalid_argument("eta must be >= 0");
    if (zeta1 < 1 || zeta2 < 1) throw std::invalid_argument("zeta thresholds must be >= 1");
  }
};

}  // namespace wsstad
