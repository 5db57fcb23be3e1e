#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>

namespace wsstad {

/// Axis-aligned box with continuous pixel coordinates, x1 <= x2 and y1 <= y2.
/// Zero-area boxes are allowed.
struct Box {
  double x1 = 0;
  double y1 = 0;
  double x2 = 0;
  double y2 = 0;

  bool operator==(const Box&) const = default;
};

inline double area(const Box& b) { return (b.x2 - b.x1) * (b.y2 - b.y1); }

inline bool valid(const Box& b) { return b.x1 <= b.x2 && b.y1 <= b.y2; }

/// Intersection over union. Degenerate cases with zero union area yield 0.
inline double iou(const Box& a, const Box& b) {
  const double iw = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  const double ih = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (iw <= 0 || ih <= 0) return 0.0;
  const double inter = iw * ih;
  const double uni = area(a) + area(b) - inter;
  if (uni <= 0) return 0.0;
  return inter / uni;
}

/// Minimal axis-aligned box enclosing all inputs. The list must be nonempty.
inline Box union_box(std::span<const Box> boxes) {
  if (boxes.empty()) throw std::invalid_argument("union_box: empty box list");
  Box out = boxes[0];
  for (const Box& b : boxes.subspan(1)) {
    out.x1 = std::min(out.x1, b.x1);
    out.y1 = std::min(out.y1, b.y1);
    out.x2 = std::max(out.x2, b.x2);
    out.y2 = std::max(out.y2, b.y2);
  }
  return out;
}

/// One detector output: a scored, categorized box in one frame of one video.
struct ScoredBox {
  Box box;
  double score = 0;  // in [0, 1]
  std::string category;
  std::int64_t frame = 0;
  std::string video_id;

  bool operator==(const ScoredBox&) const = default;
};

/// Total order used to break score ties reproducibly.
inline bool detection_before(const ScoredBox& a, const ScoredBox& b) {
  return std::tie(a.frame, a.box.x1, a.box.y1, a.box.x2, a.box.y2, a.category) <
         std::tie(b.frame, b.box.x1, b.box.y1, b.box.x2, b.box.y2, b.category);
}

}  // namespace wsstad
