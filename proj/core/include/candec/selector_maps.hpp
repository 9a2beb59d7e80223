#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "candec/permutation.hpp"

namespace candec {

/// An element of [n]^r: r entries, each in 1..alphabet.  alphabet plays the
/// role of n; it matters for ranking, printing, and validation.
struct MultiIndex {
  std::vector<int> entries;
  int alphabet = 0;

  MultiIndex() = default;
  MultiIndex(std::vector<int> entries, int alphabet);

  int length() const { return static_cast<int>(entries.size()); }
  /// 1-based access.
  int operator[](int t) const { return entries[t - 1]; }
  /// Comma-separated rendering, e.g. "1,2,1".
  std::string to_string() const;
  static MultiIndex parse(std::string_view text, int alphabet);

  /// Same entries, larger alphabet bound.
  MultiIndex embedded(int alphabet) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Row/column address of one matrix entry of the tensor space, i.e. one
/// linear equation of the decomposition system.
struct EntrySelector {
  MultiIndex row;
  MultiIndex col;
  friend bool operator==(const EntrySelector&, const EntrySelector&) = default;
};

/// Occurrence counts of each symbol 1..alphabet.
std::vector<int> weight(const MultiIndex& index);

/// Colour pair of a permutation: position t is coloured by the factor of the
/// canonical factorisation whose top line contains t (row side), and value v
/// by the factor whose bottom line contains v (column side).  The alphabet
/// is the factorisation depth.
EntrySelector schur_selector(const Permutation& p);

/// schur_selector embedded into alphabet n; requires llds(p) <= n.
EntrySelector schur_selector_in(const Permutation& p, int n);

/// Left inverse of schur_selector: merges, colour by colour, the two-line
/// pairs (positions of c in row / positions of c in col).  Requires equal
/// weights.
Permutation schur_selector_preimage(const EntrySelector& selector);

/// Stable regime n >= r: selector ((1,...,r), word of p^{-1}), whose
/// subsystem matrix is the identity.
EntrySelector schur_selector_stable(const Permutation& p, int n);

/// Positions (1-based, increasing) of the lexicographically smallest index
/// set whose values form an increasing subsequence of length m.  Throws
/// DomainError when no increasing subsequence of length m exists.
std::vector<int> choose_increasing_positions(const Permutation& w, int m);

/// Value-side selector for w in W_n (n = w.degree()):
///  - r <= n-1: pick an increasing subsequence of length n-r (canonical
///    chooser above), let col = the complement positions in increasing order
///    and row = w applied to col.
///  - r > n-1: build the r' = n-1 selector, then append (w(1), 1) pairs.
EntrySelector partition_selector(const Permutation& w, int r);

/// Same, with an explicit choice of subsequence positions (for r <= n-1).
EntrySelector partition_selector_with(const Permutation& w, int r,
                                      std::span<const int> positions);

/// Inverse construction: place row values at the col positions, then fill
/// the remaining positions, in increasing order, with the unused values of
/// 1..n in increasing order.  Padding columns of the stable regime are
/// stripped and checked first.
Permutation partition_selector_preimage(const EntrySelector& selector);

}  // namespace candec
