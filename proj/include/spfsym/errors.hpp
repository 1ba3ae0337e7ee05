#pragma once

#include <cstdint>
#include <stdexcept>

namespace spfsym {

/// Thrown when a computation would exceed an explicit feasibility bound.
/// Bounds are never silently truncated.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when two independent computation routes disagree, or a
/// constructed witness fails its re-verification.
class VerificationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultMaxGroupOrder = 10080;  // 7! * 2
inline constexpr std::uint64_t kDefaultMaxProfiles = std::uint64_t{1} << 24;

}  // namespace spfsym
