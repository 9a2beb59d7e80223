#pragma once

#include <compare>
#include <vector>

#include "candec/limits.hpp"
#include "candec/permutation.hpp"

namespace candec {

/// Which centraliser algebra a basis, selector, or matrix belongs to.
enum class Side { Schur, Partition };

/// Total order used everywhere a basis is listed: Coxeter length ascending,
/// ties broken lexicographically on the one-line word.  Throws DomainError
/// on a degree mismatch.
std::strong_ordering length_order_compare(const Permutation& p,
                                          const Permutation& q);

struct LengthOrderLess {
  bool operator()(const Permutation& p, const Permutation& q) const {
    return length_order_compare(p, q) < 0;
  }
};

/// A canonical basis, listed in the fixed total order.
///  - Schur side: elements of Sym_r with llds <= n (degree r words).
///  - Partition side: elements of W_n with llis >= n - r (degree n words).
struct BasisSet {
  Side side = Side::Schur;
  int n = 0;
  int r = 0;
  std::vector<Permutation> elements;

  bool contains(const Permutation& p) const;
};

BasisSet schur_basis(int n, int r, const Limits& limits = {});
BasisSet partition_basis(int n, int r, const Limits& limits = {});
BasisSet enumerate_basis(Side side, int n, int r, const Limits& limits = {});

}  // namespace candec
