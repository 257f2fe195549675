#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shiftturan {

/// Exact integer used for every count and formula value.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// C(n, r) for 0 <= n <= 64 from a precomputed Pascal table; 0 when r is
/// outside [0, n]. Every entry fits in 64 bits.
std::uint64_t choose_small(int n, int r);

/// Sums 64-bit terms, spilling into a BigCount on overflow.
class CountAccumulator {
 public:
  void add(std::uint64_t term) {
    if (term > std::numeric_limits<std::uint64_t>::max() - low_) {
      spilled_ += low_;
      low_ = 0;
    }
    low_ += term;
  }

  BigCount total() const { return spilled_ + low_; }

 private:
  std::uint64_t low_ = 0;
  BigCount spilled_ = 0;
};

}  // namespace shiftturan
