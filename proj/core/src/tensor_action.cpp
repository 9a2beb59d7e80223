#include "candec/tensor_action.hpp"

#include <string>

#include "candec/errors.hpp"

namespace candec {

MultiIndex act_place(const MultiIndex& j, const Permutation& p) {
  if (p.degree() != j.length()) {
    throw DomainError("act_place: degree " + std::to_string(p.degree()) +
                      " does not match index length " +
                      std::to_string(j.length()));
  }
  MultiIndex out = j;
  for (int t = 1; t <= j.length(); ++t) out.entries[t - 1] = j[p(t)];
  return out;
}

MultiIndex act_value(const Permutation& w, const MultiIndex& j) {
  if (w.degree() != j.alphabet) {
    throw DomainError("act_value: degree " + std::to_string(w.degree()) +
                      " does not match alphabet " +
                      std::to_string(j.alphabet));
  }
  MultiIndex out = j;
  for (int t = 1; t <= j.length(); ++t) out.entries[t - 1] = w(j[t]);
  return out;
}

int rep_entry(Side side, const Permutation& p, const EntrySelector& selector) {
  if (side == Side::Schur) {
    return act_place(selector.col, p) == selector.row ? 1 : 0;
  }
  return act_value(p, selector.col) == selector.row ? 1 : 0;
}

std::uint64_t multi_index_rank(const MultiIndex& index) {
  std::uint64_t rank = 0;
  for (int t = 1; t <= index.length(); ++t) {
    rank = rank * static_cast<std::uint64_t>(index.alphabet) +
           static_cast<std::uint64_t>(index[t] - 1);
  }
  return rank;
}

MultiIndex multi_index_unrank(std::uint64_t rank, int n, int r) {
  if (n < 1 || r < 0) throw DomainError("unrank: need n >= 1, r >= 0");
  std::vector<int> entries(r);
  for (int t = r; t >= 1; --t) {
    entries[t - 1] = static_cast<int>(rank % n) + 1;
    rank /= n;
  }
  if (rank != 0) throw DomainError("unrank: rank out of range");
  return MultiIndex(std::move(entries), n);
}

std::uint64_t tensor_dimension(int n, int r, const Limits& limits) {
  if (n < 1 || r < 0) {
    throw DomainError("tensor_dimension: need n >= 1, r >= 0");
  }
  std::uint64_t dim = 1;
  for (int t = 0; t < r; ++t) {
    if (dim > limits.max_dimension / static_cast<std::uint64_t>(n)) {
      throw CapExceeded("tensor dimension cap exceeded: " +
                        std::to_string(n) + "^" + std::to_string(r) + " > " +
                        std::to_string(limits.max_dimension));
    }
    dim *= static_cast<std::uint64_t>(n);
  }
  if (dim > limits.max_dimension) {
    throw CapExceeded("tensor dimension cap exceeded");
  }
  return dim;
}

std::uint64_t apply_rep(Side side, const Permutation& p,
                        std::uint64_t col_rank, int n, int r) {
  MultiIndex col = multi_index_unrank(col_rank, n, r);
  MultiIndex row = side == Side::Schur ? act_place(col, p) : act_value(p, col);
  return multi_index_rank(row);
}

PermMatrix rep_matrix(Side side, const Permutation& p, int n, int r,
                      const Limits& limits) {
  const std::uint64_t dim = tensor_dimension(n, r, limits);
  if (side == Side::Schur && p.degree() != r) {
    throw DomainError("rep_matrix: Schur side needs a degree-r permutation");
  }
  if (side == Side::Partition && p.degree() != n) {
    throw DomainError(
        "rep_matrix: Partition side needs a degree-n permutation");
  }
  PermMatrix matrix{side, n, r, std::vector<std::uint64_t>(dim, 0)};
  for (std::uint64_t col = 0; col < dim; ++col) {
    matrix.row_of_col[col] = apply_rep(side, p, col, n, r);
  }
  return matrix;
}

}  // namespace candec
