#include "worked_examples.hpp"

#include <sstream>

#include <candec/decompose.hpp>
#include <candec/selector_maps.hpp>

#include "render.hpp"

namespace candec {

namespace {

std::string join(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (t) out << ',';
        out << values[t];
    }
    return out.str();
}

std::vector<Permutation> words(std::initializer_list<const char*> texts) {
    std::vector<Permutation> out;
    for (const char* t : texts) out.push_back(Permutation::parse(t));
    return out;
}

WorkedExample subsequence_example() {
    // A plain sequence, not a permutation word: the map only needs values.
    const std::vector<int> w = {5, 2, 1, 3, 7, 4, 6, 9};
    const Subsequence s = initial_increasing_subsequence(w);
    std::ostringstream actual;
    actual << "word " << join(w) << "\n"
           << "positions " << join(s.positions) << "\n"
           << "values " << join(s.values) << "\n";
    return {"initial-increasing-subsequence",
            "word 5,2,1,3,7,4,6,9\n"
            "positions 1,5,8\n"
            "values 5,7,9\n",
            actual.str()};
}

WorkedExample factorisation_example() {
    const Permutation w = Permutation::parse("4,2,1,7,3,8,9,6,5");
    const CanonicalFactorisation fact = canonical_factorisation(w);
    std::ostringstream actual;
    actual << "word " << w.to_string() << "\n";
    for (std::size_t c = 0; c < fact.parts.size(); ++c) {
        actual << "part " << (c + 1) << ": positions "
               << join(fact.parts[c].positions) << " values "
               << join(fact.parts[c].values) << "\n";
    }
    actual << "depth " << fact.depth() << "\n";
    return {"canonical-factorisation",
            "word 4,2,1,7,3,8,9,6,5\n"
            "part 1: positions 1,4,6,7 values 4,7,8,9\n"
            "part 2: positions 2,5,8 values 2,3,6\n"
            "part 3: positions 3,9 values 1,5\n"
            "depth 3\n",
            actual.str()};
}

WorkedExample colour_pair_example() {
    const Permutation w = Permutation::parse("4,2,1,7,3,8,9,6,5");
    const EntrySelector sel = schur_selector(w);
    const Permutation back = schur_selector_preimage(sel);
    std::ostringstream actual;
    actual << "word " << w.to_string() << "\n"
           << "row " << sel.row.to_string() << "\n"
           << "col " << sel.col.to_string() << "\n"
           << "recovered " << back.to_string() << "\n";
    return {"place-colour-pair",
            "word 4,2,1,7,3,8,9,6,5\n"
            "row 1,2,3,1,2,1,1,2,3\n"
            "col 3,2,2,1,3,2,1,1,1\n"
            "recovered 4,2,1,7,3,8,9,6,5\n",
            actual.str()};
}

WorkedExample subsystem_example(const char* name, Side side, int n, int r,
                                std::initializer_list<const char*> order,
                                std::string expected) {
    const std::vector<Permutation> listed = words(order);
    const Subsystem sys = build_subsystem(side, n, r, {},
                                          SelectorScheme::Canonical, &listed);
    return {name, std::move(expected), render_matrix_report(sys, true)};
}

WorkedExample value_pairs_example() {
    const Permutation w = Permutation::parse("4,2,1,7,3,8,9,6,5");
    std::ostringstream actual;
    actual << "word " << w.to_string() << "\n";
    for (const std::vector<int>& keep :
         {std::vector<int>{2, 3, 8, 9}, std::vector<int>{2, 3, 8}}) {
        std::vector<int> positions;
        for (int value : keep) positions.push_back(w.inverse()(value));
        const int r = w.degree() - static_cast<int>(keep.size());
        const EntrySelector sel = partition_selector_with(w, r, positions);
        const Permutation back = partition_selector_preimage(sel);
        actual << "keep " << join(keep) << "\n"
               << "row " << sel.row.to_string() << "\n"
               << "col " << sel.col.to_string() << "\n"
               << "recovered " << back.to_string() << "\n";
    }
    return {"value-selector-pairs",
            "word 4,2,1,7,3,8,9,6,5\n"
            "keep 2,3,8,9\n"
            "row 4,1,7,6,5\n"
            "col 1,3,4,8,9\n"
            "recovered 4,2,1,7,3,8,9,6,5\n"
            "keep 2,3,8\n"
            "row 4,1,7,9,6,5\n"
            "col 1,3,4,7,8,9\n"
            "recovered 4,2,1,7,3,8,9,6,5\n",
            actual.str()};
}

}  // namespace

std::vector<WorkedExample> run_worked_examples() {
    std::vector<WorkedExample> out;
    out.push_back(subsequence_example());
    out.push_back(factorisation_example());
    out.push_back(colour_pair_example());
    out.push_back(subsystem_example(
        "schur-subsystem-n3-r3", Side::Schur, 3, 3,
        {"1,2,3", "2,1,3", "1,3,2", "2,3,1", "3,1,2", "3,2,1"},
        "format 1\n"
        "side schur\n"
        "n 3\n"
        "r 3\n"
        "size 6\n"
        "elements\n"
        "1,2,3 0 1,1,1 1,1,1\n"
        "2,1,3 1 1,2,1 2,1,1\n"
        "1,3,2 1 1,1,2 1,2,1\n"
        "2,3,1 2 1,1,2 2,1,1\n"
        "3,1,2 2 1,2,2 2,2,1\n"
        "3,2,1 3 1,2,3 3,2,1\n"
        "A\n"
        "1 1 1 1 1 1\n"
        "0 1 0 0 1 0\n"
        "0 0 1 0 1 0\n"
        "0 0 0 1 0 1\n"
        "0 0 0 0 1 1\n"
        "0 0 0 0 0 1\n"
        "A^-1\n"
        "1 -1 -1 -1 1 -1\n"
        "0 1 0 0 -1 1\n"
        "0 0 1 0 -1 1\n"
        "0 0 0 1 0 -1\n"
        "0 0 0 0 1 -1\n"
        "0 0 0 0 0 1\n"
        "solution\n"
        "c(1,2,3) = X(1,1,1;1,1,1) - X(1,2,1;2,1,1) - X(1,1,2;1,2,1)"
        " - X(1,1,2;2,1,1) + X(1,2,2;2,2,1) - X(1,2,3;3,2,1)\n"
        "c(2,1,3) = X(1,2,1;2,1,1) - X(1,2,2;2,2,1) + X(1,2,3;3,2,1)\n"
        "c(1,3,2) = X(1,1,2;1,2,1) - X(1,2,2;2,2,1) + X(1,2,3;3,2,1)\n"
        "c(2,3,1) = X(1,1,2;2,1,1) - X(1,2,3;3,2,1)\n"
        "c(3,1,2) = X(1,2,2;2,2,1) - X(1,2,3;3,2,1)\n"
        "c(3,2,1) = X(1,2,3;3,2,1)\n"));
    out.push_back(subsystem_example(
        "schur-subsystem-n2-r3", Side::Schur, 2, 3,
        {"1,2,3", "2,1,3", "1,3,2", "2,3,1", "3,1,2"},
        "format 1\n"
        "side schur\n"
        "n 2\n"
        "r 3\n"
        "size 5\n"
        "elements\n"
        "1,2,3 0 1,1,1 1,1,1\n"
        "2,1,3 1 1,2,1 2,1,1\n"
        "1,3,2 1 1,1,2 1,2,1\n"
        "2,3,1 2 1,1,2 2,1,1\n"
        "3,1,2 2 1,2,2 2,2,1\n"
        "A\n"
        "1 1 1 1 1\n"
        "0 1 0 0 1\n"
        "0 0 1 0 1\n"
        "0 0 0 1 0\n"
        "0 0 0 0 1\n"
        "A^-1\n"
        "1 -1 -1 -1 1\n"
        "0 1 0 0 -1\n"
        "0 0 1 0 -1\n"
        "0 0 0 1 0\n"
        "0 0 0 0 1\n"
        "solution\n"
        "c(1,2,3) = X(1,1,1;1,1,1) - X(1,2,1;2,1,1) - X(1,1,2;1,2,1)"
        " - X(1,1,2;2,1,1) + X(1,2,2;2,2,1)\n"
        "c(2,1,3) = X(1,2,1;2,1,1) - X(1,2,2;2,2,1)\n"
        "c(1,3,2) = X(1,1,2;1,2,1) - X(1,2,2;2,2,1)\n"
        "c(2,3,1) = X(1,1,2;2,1,1)\n"
        "c(3,1,2) = X(1,2,2;2,2,1)\n"));
    out.push_back(subsystem_example(
        "partition-subsystem-n3-r2", Side::Partition, 3, 2,
        {"1,2,3", "2,1,3", "1,3,2", "2,3,1", "3,1,2", "3,2,1"},
        "format 1\n"
        "side partition\n"
        "n 3\n"
        "r 2\n"
        "size 6\n"
        "elements\n"
        "1,2,3 0 2,3 2,3\n"
        "2,1,3 1 1,3 2,3\n"
        "1,3,2 1 3,2 2,3\n"
        "2,3,1 2 3,1 2,3\n"
        "3,1,2 2 1,2 2,3\n"
        "3,2,1 3 2,1 2,3\n"
        "A\n"
        "1 0 0 0 0 0\n"
        "0 1 0 0 0 0\n"
        "0 0 1 0 0 0\n"
        "0 0 0 1 0 0\n"
        "0 0 0 0 1 0\n"
        "0 0 0 0 0 1\n"
        "A^-1\n"
        "1 0 0 0 0 0\n"
        "0 1 0 0 0 0\n"
        "0 0 1 0 0 0\n"
        "0 0 0 1 0 0\n"
        "0 0 0 0 1 0\n"
        "0 0 0 0 0 1\n"
        "solution\n"
        "c(1,2,3) = X(2,3;2,3)\n"
        "c(2,1,3) = X(1,3;2,3)\n"
        "c(1,3,2) = X(3,2;2,3)\n"
        "c(2,3,1) = X(3,1;2,3)\n"
        "c(3,1,2) = X(1,2;2,3)\n"
        "c(3,2,1) = X(2,1;2,3)\n"));
    out.push_back(subsystem_example(
        "partition-subsystem-n3-r1", Side::Partition, 3, 1,
        {"1,2,3", "2,1,3", "1,3,2", "2,3,1", "3,1,2"},
        "format 1\n"
        "side partition\n"
        "n 3\n"
        "r 1\n"
        "size 5\n"
        "elements\n"
        "1,2,3 0 3 3\n"
        "2,1,3 1 1 2\n"
        "1,3,2 1 2 3\n"
        "2,3,1 2 1 3\n"
        "3,1,2 2 3 1\n"
        "A\n"
        "1 1 0 0 0\n"
        "0 1 0 0 1\n"
        "0 0 1 0 1\n"
        "0 0 0 1 0\n"
        "0 0 0 0 1\n"
        "A^-1\n"
        "1 -1 0 0 1\n"
        "0 1 0 0 -1\n"
        "0 0 1 0 -1\n"
        "0 0 0 1 0\n"
        "0 0 0 0 1\n"
        "solution\n"
        "c(1,2,3) = X(3;3) - X(1;2) + X(3;1)\n"
        "c(2,1,3) = X(1;2) - X(3;1)\n"
        "c(1,3,2) = X(2;3) - X(3;1)\n"
        "c(2,3,1) = X(1;3)\n"
        "c(3,1,2) = X(3;1)\n"));
    out.push_back(value_pairs_example());
    return out;
}

}  // namespace candec
