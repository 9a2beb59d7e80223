#pragma once

#include <cstdint>

namespace candec {

/// Resource guards for the exhaustive parts of the library.  Everything here
/// is desk scale; the caps exist so a typo like n=40 fails fast instead of
/// allocating the universe.
struct Limits {
  /// Largest symmetric group that may be enumerated (m! <= max_group).
  std::uint64_t max_group = 3'628'800;  // 10!
  /// Largest dense tensor dimension n^r that may be materialised.
  std::uint64_t max_dimension = 100'000;
  /// Largest stacked equation count accepted by the full-system oracle.
  std::uint64_t max_oracle_rows = 4'096;
};

}  // namespace candec
