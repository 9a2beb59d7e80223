#include "candec/basis.hpp"

#include <algorithm>
#include <string>

#include "candec/errors.hpp"

namespace candec {

std::strong_ordering length_order_compare(const Permutation& p,
                                          const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("length_order_compare: degree mismatch");
  }
  const long long lp = coxeter_length(p);
  const long long lq = coxeter_length(q);
  if (lp != lq) return lp <=> lq;
  return p.word() <=> q.word();
}

bool BasisSet::contains(const Permutation& p) const {
  return std::any_of(elements.begin(), elements.end(),
                     [&](const Permutation& q) { return q == p; });
}

namespace {

void check_group_cap(int degree, const Limits& limits) {
  std::uint64_t size = 1;
  for (int t = 2; t <= degree; ++t) {
    if (size > limits.max_group / t) {
      throw CapExceeded("group enumeration cap exceeded: " +
                        std::to_string(degree) + "! > " +
                        std::to_string(limits.max_group));
    }
    size *= static_cast<std::uint64_t>(t);
  }
  if (size > limits.max_group) {
    throw CapExceeded("group enumeration cap exceeded");
  }
}

template <typename Keep>
std::vector<Permutation> filtered_group(int degree, const Limits& limits,
                                        Keep keep) {
  check_group_cap(degree, limits);
  std::vector<Permutation> out;
  std::vector<int> word(degree);
  for (int t = 0; t < degree; ++t) word[t] = t + 1;
  do {
    Permutation p(word);
    if (keep(p)) out.push_back(std::move(p));
  } while (std::next_permutation(word.begin(), word.end()));
  std::sort(out.begin(), out.end(), LengthOrderLess{});
  return out;
}

}  // namespace

BasisSet schur_basis(int n, int r, const Limits& limits) {
  if (n < 1 || r < 0) throw DomainError("schur_basis: need n >= 1, r >= 0");
  BasisSet basis{Side::Schur, n, r, {}};
  basis.elements = filtered_group(
      r, limits, [&](const Permutation& p) { return llds(p) <= n; });
  return basis;
}

BasisSet partition_basis(int n, int r, const Limits& limits) {
  if (n < 1 || r < 0) {
    throw DomainError("partition_basis: need n >= 1, r >= 0");
  }
  BasisSet basis{Side::Partition, n, r, {}};
  basis.elements = filtered_group(n, limits, [&](const Permutation& p) {
    return llis_oracle(p.word()) >= n - r;
  });
  return basis;
}

BasisSet enumerate_basis(Side side, int n, int r, const Limits& limits) {
  return side == Side::Schur ? schur_basis(n, r, limits)
                             : partition_basis(n, r, limits);
}

}  // namespace candec
