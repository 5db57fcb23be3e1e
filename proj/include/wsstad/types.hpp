#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wsstad {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

/// Half-open frame interval [begin, end).
struct FrameSpan {
  std::int64_t begin = 0;
  std::int64_t end = 0;

  std::int64_t length() const { return end - begin; }
  bool contains(std::int64_t frame) const { return frame >= begin && frame < end; }
  bool overlaps(const FrameSpan& other) const {
    return begin < other.end && other.begin < end;
  }
  bool operator==(const FrameSpan&) const = default;
};

/// Raised for malformed or inconsistent input files. CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsstad
