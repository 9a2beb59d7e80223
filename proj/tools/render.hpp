#pragma once

#include <string>

#include <candec/basis.hpp>
#include <candec/decompose.hpp>

namespace candec {

// "word length" per line, in basis order.
std::string render_basis_text(const BasisSet& basis);

// Two comma-separated lines: row, then col.
std::string render_selector_text(const EntrySelector& selector);

// Plain-text report: header, element table (word, length, row, col), the
// matrix A, and optionally A^-1 plus the solved coefficient formulas
// c(word) = +/- X(row;col) +/- ...
std::string render_matrix_report(const Subsystem& sys, bool with_inverse);

}  // namespace candec
