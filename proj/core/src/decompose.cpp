#include "candec/decompose.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace candec {

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  mpq_class value;
  if (value.set_str(text, 10) != 0) {
    throw DomainError("malformed rational literal: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw DomainError("zero denominator: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

void Invariant::set(const MultiIndex& row, const MultiIndex& col,
                    Rational value) {
  if (row.alphabet != n || col.alphabet != n || row.length() != r ||
      col.length() != r) {
    throw DomainError("invariant entry shape mismatch");
  }
  const Coordinate coord{multi_index_rank(row), multi_index_rank(col)};
  if (value == 0) {
    entries.erase(coord);
  } else {
    entries[coord] = std::move(value);
  }
}

void Invariant::add(std::uint64_t row, std::uint64_t col,
                    const Rational& value) {
  const Coordinate coord{row, col};
  auto it = entries.find(coord);
  if (it == entries.end()) {
    if (value != 0) entries.emplace(coord, value);
    return;
  }
  it->second += value;
  if (it->second == 0) entries.erase(it);
}

Rational Invariant::at(std::uint64_t row, std::uint64_t col) const {
  auto it = entries.find(Coordinate{row, col});
  return it == entries.end() ? Rational(0) : it->second;
}

std::optional<Rational> CoefficientVector::value_of(
    const Permutation& p) const {
  for (std::size_t a = 0; a < elements.size(); ++a) {
    if (elements[a] == p) return values[a];
  }
  return std::nullopt;
}

bool operator==(const CoefficientVector& lhs, const CoefficientVector& rhs) {
  return lhs.elements == rhs.elements && lhs.values == rhs.values;
}

namespace {

void check_length_compatible(const std::vector<Permutation>& order) {
  for (std::size_t a = 1; a < order.size(); ++a) {
    if (coxeter_length(order[a - 1]) > coxeter_length(order[a])) {
      throw DomainError("order override is not length-compatible");
    }
  }
}

}  // namespace

Subsystem build_subsystem(Side side, int n, int r, const Limits& limits,
                          SelectorScheme scheme,
                          const std::vector<Permutation>* order_override) {
  if (scheme == SelectorScheme::StablePlace) {
    if (side != Side::Schur) {
      throw DomainError("stable selector scheme applies to the Schur side");
    }
    if (n < r) {
      throw DomainError("stable selector scheme requires n >= r");
    }
  }
  BasisSet basis = enumerate_basis(side, n, r, limits);
  if (order_override) {
    if (order_override->size() != basis.elements.size()) {
      throw DomainError("order override has the wrong number of elements");
    }
    std::vector<Permutation> expected = basis.elements;
    std::vector<Permutation> given = *order_override;
    std::sort(given.begin(), given.end(), LengthOrderLess{});
    if (given != expected) {
      throw DomainError("order override is not a rearrangement of the basis");
    }
    check_length_compatible(*order_override);
    basis.elements = *order_override;
  }

  const std::size_t b = basis.elements.size();
  Subsystem sys{std::move(basis), {}, {}};
  sys.selectors.reserve(b);
  for (const Permutation& p : sys.basis.elements) {
    if (side == Side::Schur) {
      sys.selectors.push_back(scheme == SelectorScheme::StablePlace
                                  ? schur_selector_stable(p, n)
                                  : schur_selector_in(p, n));
    } else {
      sys.selectors.push_back(partition_selector(p, r));
    }
  }
  sys.matrix.rows.assign(b, std::vector<std::uint8_t>(b, 0));
  for (std::size_t a = 0; a < b; ++a) {
    for (std::size_t c = 0; c < b; ++c) {
      sys.matrix.rows[a][c] = static_cast<std::uint8_t>(
          rep_entry(side, sys.basis.elements[c], sys.selectors[a]));
    }
  }
  for (std::size_t a = 0; a < b; ++a) {
    if (sys.matrix.rows[a][a] != 1) {
      throw std::logic_error("subsystem diagonal entry is not 1");
    }
    const long long len_a = coxeter_length(sys.basis.elements[a]);
    for (std::size_t c = 0; c < b; ++c) {
      if (c == a || sys.matrix.rows[a][c] == 0) continue;
      if (coxeter_length(sys.basis.elements[c]) <= len_a) {
        throw std::logic_error(
            "subsystem off-diagonal support at a non-longer element");
      }
    }
  }
  return sys;
}

namespace {

// Inverse of the leading s x s block of A, by the trailing-identity block
// recursion.
std::vector<std::vector<BigInt>> invert_leading_block(const CoeffMatrix& A,
                                                      std::size_t s) {
  std::vector<std::vector<BigInt>> inverse(s, std::vector<BigInt>(s, 0));
  if (s == 0) return inverse;
  std::size_t t = 0;
  for (std::size_t row = s; row-- > 0;) {
    bool is_identity_row = true;
    for (std::size_t col = 0; col < s; ++col) {
      const std::uint8_t expected = (col == row) ? 1 : 0;
      if (A.rows[row][col] != expected) {
        is_identity_row = false;
        break;
      }
    }
    if (!is_identity_row) break;
    ++t;
  }
  if (t == 0) {
    throw std::logic_error("matrix is not upper unitriangular");
  }
  for (std::size_t a = s - t; a < s; ++a) inverse[a][a] = 1;
  if (t == s) return inverse;

  const std::size_t head = s - t;
  const auto head_inverse = invert_leading_block(A, head);
  for (std::size_t a = 0; a < head; ++a) {
    for (std::size_t c = 0; c < head; ++c) {
      inverse[a][c] = head_inverse[a][c];
    }
  }
  // Top-right block: -Y^{-1} Z.
  for (std::size_t a = 0; a < head; ++a) {
    for (std::size_t c = head; c < s; ++c) {
      BigInt sum = 0;
      for (std::size_t k = 0; k < head; ++k) {
        if (A.rows[k][c]) sum += head_inverse[a][k];
      }
      inverse[a][c] = -sum;
    }
  }
  return inverse;
}

}  // namespace

std::vector<std::vector<BigInt>> invert_unitriangular(const CoeffMatrix& A) {
  return invert_leading_block(A, A.size());
}

std::vector<Rational> solve_back_substitution(
    const CoeffMatrix& A, const std::vector<Rational>& rhs) {
  const std::size_t b = A.size();
  if (rhs.size() != b) throw DomainError("solve: rhs size mismatch");
  std::vector<Rational> solution(b, Rational(0));
  for (std::size_t a = b; a-- > 0;) {
    Rational value = rhs[a];
    for (std::size_t c = a + 1; c < b; ++c) {
      if (A.rows[a][c]) value -= solution[c];
    }
    solution[a] = std::move(value);
  }
  return solution;
}

std::vector<Rational> solve_with_inverse(const CoeffMatrix& A,
                                         const std::vector<Rational>& rhs) {
  const std::size_t b = A.size();
  if (rhs.size() != b) throw DomainError("solve: rhs size mismatch");
  const auto inverse = invert_unitriangular(A);
  std::vector<Rational> solution(b, Rational(0));
  for (std::size_t a = 0; a < b; ++a) {
    Rational value(0);
    for (std::size_t c = a; c < b; ++c) {
      if (inverse[a][c] != 0) value += rhs[c] * inverse[a][c];
    }
    solution[a] = std::move(value);
  }
  return solution;
}

std::vector<Rational> extract_rhs(
    const Invariant& X, const std::vector<EntrySelector>& selectors) {
  std::vector<Rational> rhs;
  rhs.reserve(selectors.size());
  for (const EntrySelector& sel : selectors) {
    if (sel.row.alphabet != X.n || sel.col.alphabet != X.n ||
        sel.row.length() != X.r || sel.col.length() != X.r) {
      throw DomainError("extract_rhs: selector shape mismatch");
    }
    rhs.push_back(X.at(multi_index_rank(sel.row), multi_index_rank(sel.col)));
  }
  return rhs;
}

std::vector<Coordinate> verify_residual(const Invariant& X, Side side,
                                        const CoefficientVector& coefficients,
                                        const Limits& limits) {
  const std::uint64_t dim = tensor_dimension(X.n, X.r, limits);
  std::map<Coordinate, Rational> residual;
  for (std::size_t a = 0; a < coefficients.elements.size(); ++a) {
    const Rational& value = coefficients.values[a];
    if (value == 0) continue;
    const Permutation& p = coefficients.elements[a];
    for (std::uint64_t col = 0; col < dim; ++col) {
      const Coordinate coord{apply_rep(side, p, col, X.n, X.r), col};
      auto it = residual.find(coord);
      if (it == residual.end()) {
        residual.emplace(coord, value);
      } else {
        it->second += value;
      }
    }
  }
  for (const auto& [coord, value] : X.entries) {
    auto it = residual.find(coord);
    if (it == residual.end()) {
      residual.emplace(coord, -value);
    } else {
      it->second -= value;
    }
  }
  std::vector<Coordinate> violations;
  for (const auto& [coord, value] : residual) {
    if (value != 0) violations.push_back(coord);
  }
  return violations;
}

namespace {

[[noreturn]] void throw_not_in_span(const Invariant& X,
                                    const std::vector<Coordinate>& violations) {
  std::ostringstream message;
  message << "input is not in the span of the canonical basis; "
          << violations.size() << " violating coordinate"
          << (violations.size() == 1 ? "" : "s");
  const std::size_t shown = std::min<std::size_t>(violations.size(), 10);
  std::vector<Coordinate> sample(violations.begin(),
                                 violations.begin() + shown);
  message << ", first " << shown << ":";
  for (const Coordinate& coord : sample) {
    message << " (" << multi_index_unrank(coord.row, X.n, X.r).to_string()
            << "|" << multi_index_unrank(coord.col, X.n, X.r).to_string()
            << ")";
  }
  throw NotInSpanError(message.str(), std::move(sample));
}

}  // namespace

CoefficientVector decompose(const Invariant& X, Side side,
                            const DecomposeOptions& options) {
  Subsystem sys = build_subsystem(side, X.n, X.r, options.limits,
                                  options.scheme, options.order_override);
  const std::vector<Rational> rhs = extract_rhs(X, sys.selectors);
  std::vector<Rational> values = options.use_explicit_inverse
                                     ? solve_with_inverse(sys.matrix, rhs)
                                     : solve_back_substitution(sys.matrix, rhs);
  CoefficientVector coefficients{std::move(sys.basis.elements),
                                 std::move(values)};
  const std::vector<Coordinate> violations =
      verify_residual(X, side, coefficients, options.limits);
  if (!violations.empty()) throw_not_in_span(X, violations);
  return coefficients;
}

OracleResult oracle_full_solve(const Invariant& X, Side side,
                               const Limits& limits) {
  const BasisSet basis = enumerate_basis(side, X.n, X.r, limits);
  const std::uint64_t dim = tensor_dimension(X.n, X.r, limits);
  const std::size_t b = basis.elements.size();

  std::set<Coordinate> coords;
  for (const Permutation& p : basis.elements) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      coords.insert(Coordinate{apply_rep(side, p, col, X.n, X.r), col});
    }
  }
  for (const auto& [coord, value] : X.entries) coords.insert(coord);

  // One equation per coordinate; identical coefficient patterns collapse,
  // and a pattern collision with different right-hand sides is already an
  // inconsistency.
  std::map<std::vector<std::uint8_t>, Rational> equations;
  for (const Coordinate& coord : coords) {
    std::vector<std::uint8_t> pattern(b, 0);
    for (std::size_t a = 0; a < b; ++a) {
      pattern[a] = static_cast<std::uint8_t>(
          apply_rep(side, basis.elements[a], coord.col, X.n, X.r) ==
          coord.row);
    }
    const Rational rhs = X.at(coord.row, coord.col);
    auto [it, inserted] = equations.emplace(std::move(pattern), rhs);
    if (!inserted && it->second != rhs) {
      return {false, {}};
    }
  }
  if (equations.size() > limits.max_oracle_rows) {
    throw CapExceeded("oracle row cap exceeded: " +
                      std::to_string(equations.size()) + " > " +
                      std::to_string(limits.max_oracle_rows));
  }

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  rows.reserve(equations.size());
  rhs.reserve(equations.size());
  for (const auto& [pattern, value] : equations) {
    std::vector<Rational> row(b);
    for (std::size_t a = 0; a < b; ++a) row[a] = int(pattern[a]);
    rows.push_back(std::move(row));
    rhs.push_back(value);
  }

  // Gauss-Jordan elimination over the rationals.
  std::vector<std::size_t> pivot_row_of_col(b);
  std::vector<char> used(rows.size(), 0);
  for (std::size_t col = 0; col < b; ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t row = 0; row < rows.size(); ++row) {
      if (!used[row] && rows[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == rows.size()) {
      throw std::logic_error(
          "oracle system is rank deficient; the basis matrices must be "
          "linearly independent");
    }
    used[pivot] = 1;
    pivot_row_of_col[col] = pivot;
    const Rational lead = rows[pivot][col];
    for (std::size_t c = 0; c < b; ++c) rows[pivot][c] /= lead;
    rhs[pivot] /= lead;
    for (std::size_t row = 0; row < rows.size(); ++row) {
      if (row == pivot || rows[row][col] == 0) continue;
      const Rational factor = rows[row][col];
      for (std::size_t c = 0; c < b; ++c) {
        rows[row][c] -= factor * rows[pivot][c];
      }
      rhs[row] -= factor * rhs[pivot];
    }
  }
  for (std::size_t row = 0; row < rows.size(); ++row) {
    if (used[row]) continue;
    if (rhs[row] != 0) return {false, {}};
  }
  CoefficientVector coefficients{basis.elements, {}};
  coefficients.values.resize(b);
  for (std::size_t col = 0; col < b; ++col) {
    coefficients.values[col] = rhs[pivot_row_of_col[col]];
  }
  return {true, std::move(coefficients)};
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace

std::pair<Invariant, CoefficientVector> random_invariant(Side side, int n,
                                                         int r,
                                                         std::uint64_t seed,
                                                         const Limits& limits) {
  const BasisSet basis = enumerate_basis(side, n, r, limits);
  const std::uint64_t dim = tensor_dimension(n, r, limits);
  SplitMix64 rng{seed};
  CoefficientVector coefficients{basis.elements, {}};
  coefficients.values.reserve(basis.elements.size());
  for (std::size_t a = 0; a < basis.elements.size(); ++a) {
    coefficients.values.emplace_back(
        static_cast<long>(rng.next() % 19) - 9);
  }
  Invariant X(n, r);
  for (std::size_t a = 0; a < basis.elements.size(); ++a) {
    const Rational& value = coefficients.values[a];
    if (value == 0) continue;
    for (std::uint64_t col = 0; col < dim; ++col) {
      X.add(apply_rep(side, basis.elements[a], col, n, r), col, value);
    }
  }
  return {std::move(X), std::move(coefficients)};
}

}  // namespace candec
