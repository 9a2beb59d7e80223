#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "candec/basis.hpp"
#include "candec/errors.hpp"
#include "candec/limits.hpp"
#include "candec/selector_maps.hpp"
#include "candec/tensor_action.hpp"

namespace candec {

/// Exact rational scalar.  Serialised as "p/q", or just "p" for integers.
using Rational = mpq_class;
using BigInt = mpz_class;

std::string rational_to_string(const Rational& value);
Rational rational_from_string(const std::string& text);

/// Sparse element of End(V^{tensor r}), dim V = n: entries keyed by
/// (row rank, col rank); absent means zero.  Exact zeros are never stored.
struct Invariant {
  int n = 0;
  int r = 0;
  std::map<Coordinate, Rational> entries;

  Invariant() = default;
  Invariant(int n, int r) : n(n), r(r) {}

  void set(const MultiIndex& row, const MultiIndex& col, Rational value);
  void add(std::uint64_t row, std::uint64_t col, const Rational& value);
  Rational at(std::uint64_t row, std::uint64_t col) const;

  friend bool operator==(const Invariant&, const Invariant&) = default;
};

/// The (0,1) coefficient matrix of a subsystem; rows are indexed by the
/// selector owner, columns by the unknown, both in basis order.
struct CoeffMatrix {
  std::vector<std::vector<std::uint8_t>> rows;
  std::size_t size() const { return rows.size(); }
  int entry(std::size_t row, std::size_t col) const { return rows[row][col]; }
};

/// Selector scheme for the Schur side.  Canonical is the factorisation
/// colouring; StablePlace is the n >= r shortcut whose matrix is I.
enum class SelectorScheme { Canonical, StablePlace };

/// A basis together with one selector per element and the resulting
/// coefficient matrix, verified upper unitriangular with the off-diagonal
/// support only at strictly longer elements.
struct Subsystem {
  BasisSet basis;
  std::vector<EntrySelector> selectors;
  CoeffMatrix matrix;
};

/// Builds the subsystem for the given side.  `order_override` must list
/// exactly the basis elements in a length-compatible order (used to
/// reproduce externally fixed row orders); default is the library order.
Subsystem build_subsystem(Side side, int n, int r, const Limits& limits = {},
                          SelectorScheme scheme = SelectorScheme::Canonical,
                          const std::vector<Permutation>* order_override = nullptr);

/// Exact inverse of an upper unitriangular (0,1) matrix via the block
/// recursion [[Y,Z],[0,I]]^{-1} = [[Y^{-1},-Y^{-1}Z],[0,I]], splitting at
/// the largest trailing identity block.  Entries are integers.
std::vector<std::vector<BigInt>> invert_unitriangular(const CoeffMatrix& A);

/// Back substitution (default solve path).
std::vector<Rational> solve_back_substitution(const CoeffMatrix& A,
                                              const std::vector<Rational>& rhs);

/// Multiplication by the explicit recursive inverse.
std::vector<Rational> solve_with_inverse(const CoeffMatrix& A,
                                         const std::vector<Rational>& rhs);

/// Right-hand side of the subsystem: X read off at each selector.
std::vector<Rational> extract_rhs(const Invariant& X,
                                  const std::vector<EntrySelector>& selectors);

/// Coefficients keyed by basis element, in basis order.
struct CoefficientVector {
  std::vector<Permutation> elements;
  std::vector<Rational> values;

  std::optional<Rational> value_of(const Permutation& p) const;
  friend bool operator==(const CoefficientVector&, const CoefficientVector&);
};

/// Coordinates where sum_p c(p) * basis_matrix(p) differs from X; empty
/// means the decomposition is exact.
std::vector<Coordinate> verify_residual(const Invariant& X, Side side,
                                        const CoefficientVector& coefficients,
                                        const Limits& limits = {});

struct DecomposeOptions {
  SelectorScheme scheme = SelectorScheme::Canonical;
  bool use_explicit_inverse = false;
  const std::vector<Permutation>* order_override = nullptr;
  Limits limits{};
};

/// Full pipeline: build the subsystem, solve, verify the residual.  Throws
/// NotInSpanError (with up to ten violating coordinates) when X is not in
/// the span of the canonical basis.
CoefficientVector decompose(const Invariant& X, Side side,
                            const DecomposeOptions& options = {});

struct OracleResult {
  bool in_span = false;
  CoefficientVector coefficients;  // meaningful only when in_span
};

/// Independent check: exact Gaussian elimination over the stacked system of
/// every coordinate equation touched by the basis matrices or by X.
OracleResult oracle_full_solve(const Invariant& X, Side side,
                               const Limits& limits = {});

/// Deterministic seeded invariant: integer coefficients in [-9, 9] over the
/// basis.  Returns the invariant and the generating coefficients.
std::pair<Invariant, CoefficientVector> random_invariant(
    Side side, int n, int r, std::uint64_t seed, const Limits& limits = {});

}  // namespace candec
