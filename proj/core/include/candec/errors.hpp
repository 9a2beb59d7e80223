#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace candec {

/// Invalid argument: malformed permutation words, out-of-range multi-index
/// entries, domain violations of the selector maps, malformed input files.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable resource limit was exceeded (group enumeration size or
/// dense tensor dimension).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate of a tensor-space matrix entry, as ranks into [n]^r x [n]^r.
struct Coordinate {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  friend bool operator==(const Coordinate&, const Coordinate&) = default;
  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

/// The input matrix is not a linear combination of the canonical basis.
/// Carries the first violating coordinates (at most ten).
class NotInSpanError : public std::runtime_error {
 public:
  NotInSpanError(std::string message, std::vector<Coordinate> sample)
      : std::runtime_error(std::move(message)), violations(std::move(sample)) {}
  std::vector<Coordinate> violations;
};

}  // namespace candec
