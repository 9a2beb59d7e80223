#pragma once

#include <cstdint>
#include <vector>

#include "candec/basis.hpp"
#include "candec/limits.hpp"
#include "candec/selector_maps.hpp"

namespace candec {

/// Place action: result_t = j_{p(t)}.  Requires p.degree() == j.length().
MultiIndex act_place(const MultiIndex& j, const Permutation& p);

/// Value (diagonal) action: result_t = w(j_t).  Requires w.degree() ==
/// j.alphabet.
MultiIndex act_value(const Permutation& w, const MultiIndex& j);

/// Entry of the canonical basis matrix of p at the selector's coordinate:
/// 1 iff the action of p sends the column multi-index to the row multi-index
/// (place action for the Schur side, value action for the Partition side).
int rep_entry(Side side, const Permutation& p, const EntrySelector& selector);

/// Positional rank of a multi-index: entries are digits 1..n, most
/// significant first, so rank runs 0..n^r - 1.
std::uint64_t multi_index_rank(const MultiIndex& index);
MultiIndex multi_index_unrank(std::uint64_t rank, int n, int r);

/// n^r, guarded by limits.max_dimension.
std::uint64_t tensor_dimension(int n, int r, const Limits& limits = {});

/// Row rank that the action of p sends a column rank to.
std::uint64_t apply_rep(Side side, const Permutation& p,
                        std::uint64_t col_rank, int n, int r);

/// Dense-free representation of the (0,1) basis matrix: each column holds
/// exactly one 1, at row_of_col[col].
struct PermMatrix {
  Side side = Side::Schur;
  int n = 0;
  int r = 0;
  std::vector<std::uint64_t> row_of_col;

  std::uint64_t dimension() const { return row_of_col.size(); }
  int entry(std::uint64_t row, std::uint64_t col) const {
    return row_of_col[col] == row ? 1 : 0;
  }
};

PermMatrix rep_matrix(Side side, const Permutation& p, int n, int r,
                      const Limits& limits = {});

}  // namespace candec
