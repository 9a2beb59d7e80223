#pragma once

#include <string>
#include <utility>
#include <vector>

#include "candec/basis.hpp"
#include "candec/decompose.hpp"

namespace candec {

/// All files are versioned JSON ("format": 1).  Multi-indices and one-line
/// words are 1-based comma-separated strings; scalars are "p/q" or integer
/// strings (plain JSON integers are also accepted on input).

std::string side_to_string(Side side);
Side side_from_string(const std::string& text);

/// {"format":1,"n":N,"r":R,"entries":[[row, col, value], ...]}
Invariant read_invariant_json(const std::string& text);
std::string write_invariant_json(const Invariant& X);

/// {"format":1,"side":S,"n":N,"r":R,"coefficients":{word: value, ...}}
/// Zero coefficients are omitted on output and may be omitted on input.
struct CoefficientsFile {
  Side side = Side::Schur;
  int n = 0;
  int r = 0;
  std::vector<std::pair<Permutation, Rational>> values;
};

CoefficientsFile read_coefficients_json(const std::string& text);
std::string write_coefficients_json(Side side, int n, int r,
                                    const CoefficientVector& coefficients);

/// Expands sparse (word, value) pairs over a basis, zeros elsewhere.
/// Throws DomainError if a word is not a basis element.
CoefficientVector align_coefficients(
    const BasisSet& basis,
    const std::vector<std::pair<Permutation, Rational>>& values);

/// {"format":1,"side":S,"n":N,"r":R,"elements":[{"word":W,"length":L},...]}
std::string write_basis_json(const BasisSet& basis);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace candec
