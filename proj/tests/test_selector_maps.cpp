#include "doctest.h"

#include <candec/basis.hpp>
#include <candec/errors.hpp>
#include <candec/selector_maps.hpp>
#include <candec/tensor_action.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using namespace candec;

namespace {

std::vector<Permutation> all_perms(int m) {
    std::vector<int> word(m);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

MultiIndex mi(std::vector<int> entries, int alphabet) {
    return MultiIndex(std::move(entries), alphabet);
}

// First size-m index set, in lexicographic order on the position sequence,
// whose values increase; empty when none exists.
std::vector<int> first_increasing_subset(const Permutation& w, int m) {
    std::vector<int> chosen;
    std::vector<int> best;
    bool found = false;
    auto rec = [&](auto&& self, int next) -> void {
        if (found) return;
        if (static_cast<int>(chosen.size()) == m) {
            best = chosen;
            found = true;
            return;
        }
        for (int p = next; p <= w.degree(); ++p) {
            if (!chosen.empty() && w(p) <= w(chosen.back())) continue;
            chosen.push_back(p);
            self(self, p + 1);
            chosen.pop_back();
            if (found) return;
        }
    };
    rec(rec, 1);
    return best;
}

}  // namespace

TEST_CASE("multi-index basics") {
    MultiIndex j({1, 2, 1}, 2);
    CHECK(j.length() == 3);
    CHECK(j[1] == 1);
    CHECK(j[2] == 2);
    CHECK(j.to_string() == "1,2,1");
    CHECK(MultiIndex::parse("1,2,1", 2) == j);
    CHECK(MultiIndex::parse("", 3) == mi({}, 3));
    CHECK(j.embedded(5) == mi({1, 2, 1}, 5));
    CHECK(j.embedded(5) != j);  // alphabet participates in identity

    CHECK_THROWS_AS(MultiIndex({0, 1}, 2), DomainError);
    CHECK_THROWS_AS(MultiIndex({1, 3}, 2), DomainError);
    CHECK_THROWS_AS(MultiIndex::parse("1,x", 2), DomainError);
    CHECK_THROWS_AS(j.embedded(1), DomainError);

    CHECK(weight(mi({1, 2, 1, 1, 3}, 4)) == std::vector<int>{3, 1, 1, 0});
    CHECK(weight(mi({}, 2)) == std::vector<int>{0, 0});
}

TEST_CASE("place colouring of a fixed word") {
    auto sel = schur_selector(Permutation::parse("4,2,1,7,3,8,9,6,5"));
    CHECK(sel.row == mi({1, 2, 3, 1, 2, 1, 1, 2, 3}, 3));
    CHECK(sel.col == mi({3, 2, 2, 1, 3, 2, 1, 1, 1}, 3));
}

TEST_CASE("place colouring extremes") {
    CHECK(schur_selector(Permutation::identity(5)) ==
          EntrySelector{mi({1, 1, 1, 1, 1}, 1), mi({1, 1, 1, 1, 1}, 1)});
    CHECK(schur_selector(Permutation({4, 3, 2, 1})) ==
          EntrySelector{mi({1, 2, 3, 4}, 4), mi({4, 3, 2, 1}, 4)});
}

TEST_CASE("place colouring table for degree 3") {
    auto table = [](std::vector<int> w) { return schur_selector(Permutation(w)); };
    CHECK(table({1, 2, 3}) == EntrySelector{mi({1, 1, 1}, 1), mi({1, 1, 1}, 1)});
    CHECK(table({2, 1, 3}) == EntrySelector{mi({1, 2, 1}, 2), mi({2, 1, 1}, 2)});
    CHECK(table({1, 3, 2}) == EntrySelector{mi({1, 1, 2}, 2), mi({1, 2, 1}, 2)});
    CHECK(table({2, 3, 1}) == EntrySelector{mi({1, 1, 2}, 2), mi({2, 1, 1}, 2)});
    CHECK(table({3, 1, 2}) == EntrySelector{mi({1, 2, 2}, 2), mi({2, 2, 1}, 2)});
    CHECK(table({3, 2, 1}) == EntrySelector{mi({1, 2, 3}, 3), mi({3, 2, 1}, 3)});
}

TEST_CASE("embedded place selector") {
    CHECK(schur_selector_in(Permutation({2, 1, 3}), 2) ==
          EntrySelector{mi({1, 2, 1}, 2), mi({2, 1, 1}, 2)});
    CHECK(schur_selector_in(Permutation({3, 1, 2}), 2) ==
          EntrySelector{mi({1, 2, 2}, 2), mi({2, 2, 1}, 2)});
    CHECK(schur_selector_in(Permutation({2, 1, 3}), 4).row.alphabet == 4);
    CHECK_THROWS_AS(schur_selector_in(Permutation({3, 2, 1}), 2), DomainError);
}

TEST_CASE("place colouring weight and colour bound") {
    for (int r = 0; r <= 5; ++r) {
        for (const auto& p : all_perms(r)) {
            auto sel = schur_selector(p);
            CHECK(weight(sel.row) == weight(sel.col));
            CHECK(sel.row.alphabet == llds(p));
            CHECK(sel.col.alphabet == llds(p));
        }
    }
}

TEST_CASE("place colouring is injective") {
    for (int r = 0; r <= 5; ++r) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        auto everyone = all_perms(r);
        for (const auto& p : everyone) {
            auto sel = schur_selector(p);
            seen.insert({sel.row.entries, sel.col.entries});
        }
        CHECK(seen.size() == everyone.size());
    }
}

TEST_CASE("place colouring preimage") {
    CHECK(schur_selector_preimage(
              {mi({1, 2, 3, 1, 2, 1, 1, 2, 3}, 3), mi({3, 2, 2, 1, 3, 2, 1, 1, 1}, 3)}) ==
          Permutation::parse("4,2,1,7,3,8,9,6,5"));
    CHECK(schur_selector_preimage({mi({1, 1, 1}, 1), mi({1, 1, 1}, 1)}) ==
          Permutation::identity(3));
    CHECK(schur_selector_preimage({mi({1, 2}, 2), mi({2, 1}, 2)}) ==
          Permutation({2, 1}));

    for (int r = 0; r <= 6; ++r) {
        for (const auto& p : all_perms(r)) {
            CHECK(schur_selector_preimage(schur_selector(p)) == p);
            CHECK(schur_selector_preimage(schur_selector_in(p, r + 2)) == p);
        }
    }

    CHECK_THROWS_AS(schur_selector_preimage({mi({1, 1}, 2), mi({1, 2}, 2)}),
                    DomainError);
    CHECK_THROWS_AS(schur_selector_preimage({mi({1}, 1), mi({1, 1}, 1)}),
                    DomainError);
}

TEST_CASE("stable place selector") {
    CHECK(schur_selector_stable(Permutation({2, 1, 3}), 3) ==
          EntrySelector{mi({1, 2, 3}, 3), mi({2, 1, 3}, 3)});
    CHECK(schur_selector_stable(Permutation::identity(4), 4) ==
          EntrySelector{mi({1, 2, 3, 4}, 4), mi({1, 2, 3, 4}, 4)});
    CHECK(schur_selector_stable(Permutation({3, 1, 2}), 3) ==
          EntrySelector{mi({1, 2, 3}, 3), mi({2, 3, 1}, 3)});
    CHECK(schur_selector_stable(Permutation({3, 1, 2}), 5).col ==
          mi({2, 3, 1}, 5));
    CHECK_THROWS_AS(schur_selector_stable(Permutation({3, 1, 2}), 2), DomainError);

    // The defining property: the place action of p carries col to row.
    for (const auto& p : all_perms(5)) {
        auto sel = schur_selector_stable(p, 5);
        CHECK(act_place(sel.col, p) == sel.row);
    }
}

TEST_CASE("increasing-position chooser") {
    CHECK(choose_increasing_positions(Permutation({2, 1, 3}), 2) ==
          std::vector<int>{1, 3});
    CHECK(choose_increasing_positions(Permutation({3, 1, 2}), 2) ==
          std::vector<int>{2, 3});
    CHECK(choose_increasing_positions(Permutation({3, 2, 1}), 1) ==
          std::vector<int>{1});
    CHECK(choose_increasing_positions(Permutation({2, 3, 1}), 2) ==
          std::vector<int>{1, 2});
    CHECK(choose_increasing_positions(Permutation::identity(4), 4) ==
          std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(choose_increasing_positions(Permutation({3, 2, 1}), 2),
                    DomainError);
}

TEST_CASE("chooser picks the lexicographically first index set") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : all_perms(n)) {
            for (int m = 1; m <= n; ++m) {
                auto expected = first_increasing_subset(w, m);
                if (expected.empty()) {
                    CHECK_THROWS_AS(choose_increasing_positions(w, m), DomainError);
                } else {
                    CHECK(choose_increasing_positions(w, m) == expected);
                }
            }
        }
    }
}

TEST_CASE("value selector table for degree 3") {
    auto sel = [](std::vector<int> w, int r) {
        return partition_selector(Permutation(std::move(w)), r);
    };
    // r = 2: keep a length-1 subsequence, select the other two positions.
    CHECK(sel({1, 2, 3}, 2) == EntrySelector{mi({2, 3}, 3), mi({2, 3}, 3)});
    CHECK(sel({2, 1, 3}, 2) == EntrySelector{mi({1, 3}, 3), mi({2, 3}, 3)});
    CHECK(sel({1, 3, 2}, 2) == EntrySelector{mi({3, 2}, 3), mi({2, 3}, 3)});
    CHECK(sel({2, 3, 1}, 2) == EntrySelector{mi({3, 1}, 3), mi({2, 3}, 3)});
    CHECK(sel({3, 1, 2}, 2) == EntrySelector{mi({1, 2}, 3), mi({2, 3}, 3)});
    CHECK(sel({3, 2, 1}, 2) == EntrySelector{mi({2, 1}, 3), mi({2, 3}, 3)});
    // r = 1: keep a length-2 subsequence, one position remains.
    CHECK(sel({1, 2, 3}, 1) == EntrySelector{mi({3}, 3), mi({3}, 3)});
    CHECK(sel({2, 1, 3}, 1) == EntrySelector{mi({1}, 3), mi({2}, 3)});
    CHECK(sel({1, 3, 2}, 1) == EntrySelector{mi({2}, 3), mi({3}, 3)});
    CHECK(sel({2, 3, 1}, 1) == EntrySelector{mi({1}, 3), mi({3}, 3)});
    CHECK(sel({3, 1, 2}, 1) == EntrySelector{mi({3}, 3), mi({1}, 3)});
    CHECK_THROWS_AS(sel({3, 2, 1}, 1), DomainError);  // needs an increasing pair
    // r = 0: the full word must increase.
    CHECK(sel({1, 2, 3}, 0) == EntrySelector{mi({}, 3), mi({}, 3)});
    CHECK_THROWS_AS(sel({2, 1, 3}, 0), DomainError);
}

TEST_CASE("value selector with an explicit subsequence") {
    Permutation w = Permutation::parse("4,2,1,7,3,8,9,6,5");
    CHECK(partition_selector_with(w, 5, std::vector<int>{2, 5, 6, 7}) ==
          EntrySelector{mi({4, 1, 7, 6, 5}, 9), mi({1, 3, 4, 8, 9}, 9)});
    CHECK(partition_selector_with(w, 6, std::vector<int>{2, 5, 6}) ==
          EntrySelector{mi({4, 1, 7, 9, 6, 5}, 9), mi({1, 3, 4, 7, 8, 9}, 9)});

    // Positions must be increasing with increasing values, of the right size.
    CHECK_THROWS_AS(partition_selector_with(w, 5, std::vector<int>{1, 2, 6, 7}),
                    DomainError);  // values 4,2 not increasing
    CHECK_THROWS_AS(partition_selector_with(w, 5, std::vector<int>{2, 5, 6}),
                    DomainError);  // wrong size
    CHECK_THROWS_AS(partition_selector_with(w, 9, std::vector<int>{}), DomainError);
}

TEST_CASE("value selector default chooser on the long example") {
    Permutation w = Permutation::parse("4,2,1,7,3,8,9,6,5");
    auto sel = partition_selector(w, 5);
    CHECK(sel == EntrySelector{mi({2, 1, 3, 6, 5}, 9), mi({2, 3, 5, 8, 9}, 9)});
    CHECK(partition_selector_preimage(sel) == w);
}

TEST_CASE("stable value selector pads with the first value") {
    Permutation w({2, 3, 1});
    CHECK(partition_selector(w, 4) ==
          EntrySelector{mi({3, 1, 2, 2}, 3), mi({2, 3, 1, 1}, 3)});
    CHECK(partition_selector(w, 2) ==
          EntrySelector{mi({3, 1}, 3), mi({2, 3}, 3)});
    CHECK(partition_selector(Permutation::identity(1), 3) ==
          EntrySelector{mi({1, 1, 1}, 1), mi({1, 1, 1}, 1)});
}

TEST_CASE("value selector preimage") {
    CHECK(partition_selector_preimage({mi({1}, 3), mi({3}, 3)}) ==
          Permutation({2, 3, 1}));
    CHECK(partition_selector_preimage(
              {mi({4, 1, 7, 6, 5}, 9), mi({1, 3, 4, 8, 9}, 9)}) ==
          Permutation::parse("4,2,1,7,3,8,9,6,5"));

    // n-1 values pin down the whole permutation.
    for (const auto& w : all_perms(4)) {
        std::vector<int> row, col;
        for (int t = 2; t <= 4; ++t) {
            row.push_back(w(t));
            col.push_back(t);
        }
        CHECK(partition_selector_preimage({mi(row, 4), mi(col, 4)}) == w);
    }

    CHECK_THROWS_AS(partition_selector_preimage({mi({1, 1}, 3), mi({2, 3}, 3)}),
                    DomainError);  // repeated row value
    CHECK_THROWS_AS(partition_selector_preimage({mi({1, 2}, 3), mi({3, 2}, 3)}),
                    DomainError);  // col not increasing
    CHECK_THROWS_AS(partition_selector_preimage({mi({1, 2}, 3), mi({2}, 3)}),
                    DomainError);  // shape mismatch
}

TEST_CASE("value selector round trips") {
    for (int n = 1; n <= 5; ++n) {
        for (int r = 0; r <= 6; ++r) {
            for (const auto& w : partition_basis(n, r).elements) {
                auto sel = partition_selector(w, r);
                CHECK(sel.row.length() == r);
                CHECK(sel.col.length() == r);
                int head = std::min(r, n - 1);
                for (int t = 1; t < head; ++t) {
                    CHECK(sel.col[t] < sel.col[t + 1]);
                }
                CHECK(partition_selector_preimage(sel) == w);
            }
        }
    }
}

TEST_CASE("value selector is injective on each basis") {
    for (int n = 1; n <= 5; ++n) {
        for (int r = 0; r <= 5; ++r) {
            auto basis = partition_basis(n, r);
            std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
            for (const auto& w : basis.elements) {
                auto sel = partition_selector(w, r);
                seen.insert({sel.row.entries, sel.col.entries});
            }
            CHECK(seen.size() == basis.elements.size());
        }
    }
}

TEST_CASE("place selector marks its owner as the unique shortest solution") {
    for (int r = 0; r <= 5; ++r) {
        auto everyone = all_perms(r);
        for (const auto& p : everyone) {
            auto sel = schur_selector(p);
            for (const auto& q : everyone) {
                if (act_place(sel.col, q) == sel.row && !(q == p)) {
                    CHECK(coxeter_length(q) > coxeter_length(p));
                }
            }
        }
    }
}

TEST_CASE("value selector marks its owner as the unique shortest solution") {
    for (int n = 1; n <= 5; ++n) {
        auto everyone = all_perms(n);
        for (int r = 0; r <= 5; ++r) {
            for (const auto& w : partition_basis(n, r).elements) {
                auto sel = partition_selector(w, r);
                for (const auto& v : everyone) {
                    if (act_value(v, sel.col) == sel.row && !(v == w)) {
                        CHECK(coxeter_length(v) > coxeter_length(w));
                    }
                }
            }
        }
    }
}
