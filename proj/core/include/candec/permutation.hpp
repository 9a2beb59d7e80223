#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "candec/errors.hpp"

namespace candec {

/// A permutation of [m] = {1, ..., m} stored as its one-line word
/// (word[t-1] = image of t).  The empty word is the unique element of the
/// degenerate degree-0 group.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `word` is a rearrangement of 1..m; throws DomainError.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int degree);
  /// Parses a comma-separated one-line word such as "4,2,1,7,3,8,9,6,5".
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(word_.size()); }
  /// Image of a 1-based position.
  int operator()(int position) const {
    if (position < 1 || position > degree()) {
      throw DomainError("position " + std::to_string(position) +
                        " out of range for degree " + std::to_string(degree()));
    }
    return word_[position - 1];
  }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Functional composition: compose(p, q)(t) = p(q(t)).  Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

/// Coxeter length = number of inversions of the one-line word.
long long coxeter_length(const Permutation& p);

/// A subsequence of a word, recorded as 1-based positions plus their values.
struct Subsequence {
  std::vector<int> positions;
  std::vector<int> values;
  friend bool operator==(const Subsequence&, const Subsequence&) = default;
};

/// Greedy initial increasing subsequence: start at the first entry, then
/// repeatedly take the next entry to the right that exceeds the last one
/// taken.  Throws DomainError on an empty word.
Subsequence initial_increasing_subsequence(std::span<const int> values);

/// One factor of the canonical factorisation: the original 1-based positions
/// (top line) and the word values at those positions (bottom line).
struct FactorPart {
  std::vector<int> positions;
  std::vector<int> values;
  friend bool operator==(const FactorPart&, const FactorPart&) = default;
};

/// Canonical factorisation of a permutation: repeatedly extract the initial
/// increasing subsequence and excise those columns until nothing remains.
struct CanonicalFactorisation {
  std::vector<FactorPart> parts;
  int depth() const { return static_cast<int>(parts.size()); }
};

CanonicalFactorisation canonical_factorisation(const Permutation& p);

/// Length of the longest strictly decreasing subsequence, computed as the
/// depth of the canonical factorisation.  Returns 0 only for degree 0.
int llds(const Permutation& p);

/// Patience-sorting oracles, O(m log m).  Independent of the factorisation
/// route; the test suite checks the two agree.
int llis_oracle(std::span<const int> values);
int llds_oracle(std::span<const int> values);

/// Definitional brute force over all subsequences; only for m <= 12.
int llis_brute_force(std::span<const int> values);
int llds_brute_force(std::span<const int> values);

}  // namespace candec
