#include "render.hpp"

#include <sstream>

#include <candec/json_io.hpp>

namespace candec {

namespace {

std::string or_dash(const std::string& text) {
    return text.empty() ? "-" : text;
}

void append_term(std::ostream& out, bool first, const BigInt& coeff,
                 const EntrySelector& sel) {
    const bool negative = coeff < 0;
    const BigInt magnitude = abs(coeff);
    if (first) {
        if (negative) out << "-";
    } else {
        out << (negative ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude.get_str() << "*";
    out << "X(" << or_dash(sel.row.to_string()) << ";"
        << or_dash(sel.col.to_string()) << ")";
}

}  // namespace

std::string render_basis_text(const BasisSet& basis) {
    std::ostringstream out;
    for (const Permutation& p : basis.elements) {
        out << or_dash(p.to_string()) << " " << coxeter_length(p) << "\n";
    }
    return out.str();
}

std::string render_selector_text(const EntrySelector& selector) {
    return or_dash(selector.row.to_string()) + "\n" +
           or_dash(selector.col.to_string()) + "\n";
}

std::string render_matrix_report(const Subsystem& sys, bool with_inverse) {
    std::ostringstream out;
    const std::size_t b = sys.basis.elements.size();
    out << "format 1\n";
    out << "side " << side_to_string(sys.basis.side) << "\n";
    out << "n " << sys.basis.n << "\n";
    out << "r " << sys.basis.r << "\n";
    out << "size " << b << "\n";
    out << "elements\n";
    for (std::size_t a = 0; a < b; ++a) {
        const Permutation& p = sys.basis.elements[a];
        const EntrySelector& sel = sys.selectors[a];
        out << or_dash(p.to_string()) << " " << coxeter_length(p) << " "
            << or_dash(sel.row.to_string()) << " "
            << or_dash(sel.col.to_string()) << "\n";
    }
    out << "A\n";
    for (std::size_t a = 0; a < b; ++a) {
        for (std::size_t c = 0; c < b; ++c) {
            if (c) out << " ";
            out << sys.matrix.entry(a, c);
        }
        out << "\n";
    }
    if (!with_inverse) return out.str();

    const auto inverse = invert_unitriangular(sys.matrix);
    out << "A^-1\n";
    for (std::size_t a = 0; a < b; ++a) {
        for (std::size_t c = 0; c < b; ++c) {
            if (c) out << " ";
            out << inverse[a][c].get_str();
        }
        out << "\n";
    }
    out << "solution\n";
    for (std::size_t a = 0; a < b; ++a) {
        out << "c(" << or_dash(sys.basis.elements[a].to_string()) << ") = ";
        bool first = true;
        for (std::size_t c = 0; c < b; ++c) {
            if (inverse[a][c] == 0) continue;
            append_term(out, first, inverse[a][c], sys.selectors[c]);
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace candec
