#include "candec/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "candec/errors.hpp"

namespace candec {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size(), 0);
  const int m = degree();
  for (int v : word_) {
    if (v < 1 || v > m || seen[v - 1]) {
      throw DomainError("not a permutation word of 1.." + std::to_string(m));
    }
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw DomainError("negative degree");
  std::vector<int> w(degree);
  for (int t = 0; t < degree; ++t) w[t] = t + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + comma, value);
    if (ec != std::errc() || ptr != text.data() + comma) {
      throw DomainError("malformed permutation word: '" + std::string(text) +
                        "'");
    }
    w.push_back(value);
    pos = comma + 1;
  }
  if (!text.empty() && text.back() == ',') {
    throw DomainError("malformed permutation word: trailing comma");
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int t = 1; t <= degree(); ++t) inv[word_[t - 1] - 1] = t;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int t = 1; t <= degree(); ++t) {
    if (word_[t - 1] != t) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (int t = 0; t < degree(); ++t) {
    if (t) out << ',';
    out << word_[t];
  }
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("compose: degree mismatch");
  }
  std::vector<int> w(p.degree());
  for (int t = 1; t <= p.degree(); ++t) w[t - 1] = p(q(t));
  return Permutation(std::move(w));
}

long long coxeter_length(const Permutation& p) {
  const auto& w = p.word();
  long long count = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (w[a] > w[b]) ++count;
    }
  }
  return count;
}

Subsequence initial_increasing_subsequence(std::span<const int> values) {
  if (values.empty()) {
    throw DomainError("initial_increasing_subsequence: empty word");
  }
  Subsequence out;
  int last = values[0];
  out.positions.push_back(1);
  out.values.push_back(last);
  for (std::size_t t = 1; t < values.size(); ++t) {
    if (values[t] > last) {
      last = values[t];
      out.positions.push_back(static_cast<int>(t + 1));
      out.values.push_back(last);
    }
  }
  return out;
}

CanonicalFactorisation canonical_factorisation(const Permutation& p) {
  CanonicalFactorisation fact;
  // Surviving columns of the two-line array, as (position, value) pairs.
  std::vector<int> positions(p.degree());
  std::vector<int> values(p.degree());
  for (int t = 1; t <= p.degree(); ++t) {
    positions[t - 1] = t;
    values[t - 1] = p(t);
  }
  while (!values.empty()) {
    Subsequence run = initial_increasing_subsequence(values);
    FactorPart part;
    std::vector<char> taken(values.size(), 0);
    for (std::size_t a = 0; a < run.positions.size(); ++a) {
      const int idx = run.positions[a] - 1;
      part.positions.push_back(positions[idx]);
      part.values.push_back(values[idx]);
      taken[idx] = 1;
    }
    fact.parts.push_back(std::move(part));
    std::vector<int> next_positions, next_values;
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
      if (!taken[idx]) {
        next_positions.push_back(positions[idx]);
        next_values.push_back(values[idx]);
      }
    }
    positions = std::move(next_positions);
    values = std::move(next_values);
  }
  return fact;
}

int llds(const Permutation& p) { return canonical_factorisation(p).depth(); }

int llis_oracle(std::span<const int> values) {
  // Patience piles: tails[d] = smallest possible tail of an increasing
  // subsequence of length d+1.
  std::vector<int> tails;
  for (int v : values) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

int llds_oracle(std::span<const int> values) {
  std::vector<int> reversed(values.rbegin(), values.rend());
  return llis_oracle(reversed);
}

namespace {

template <typename Compare>
int longest_monotone_brute_force(std::span<const int> values, Compare cmp) {
  if (values.size() > 12) {
    throw DomainError("brute-force subsequence scan limited to m <= 12");
  }
  const std::size_t m = values.size();
  int best = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    int last = 0;
    bool first = true, ok = true;
    int length = 0;
    for (std::size_t t = 0; t < m; ++t) {
      if (!(mask & (std::size_t{1} << t))) continue;
      if (!first && !cmp(last, values[t])) {
        ok = false;
        break;
      }
      last = values[t];
      first = false;
      ++length;
    }
    if (ok) best = std::max(best, length);
  }
  return best;
}

}  // namespace

int llis_brute_force(std::span<const int> values) {
  return longest_monotone_brute_force(values,
                                      [](int a, int b) { return a < b; });
}

int llds_brute_force(std::span<const int> values) {
  return longest_monotone_brute_force(values,
                                      [](int a, int b) { return a > b; });
}

}  // namespace candec
