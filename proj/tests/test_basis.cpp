#include "doctest.h"

#include <candec/basis.hpp>
#include <candec/errors.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

using namespace candec;

namespace {

bool subset(const std::vector<Permutation>& small,
            const std::vector<Permutation>& big) {
    for (const auto& p : small) {
        if (std::find(big.begin(), big.end(), p) == big.end()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("length order") {
    Permutation a({1, 3, 2});
    Permutation b({2, 1, 3});
    CHECK(length_order_compare(a, b) == std::strong_ordering::less);
    CHECK(length_order_compare(b, a) == std::strong_ordering::greater);
    CHECK(length_order_compare(a, a) == std::strong_ordering::equal);
    CHECK(length_order_compare(Permutation::identity(3), a) ==
          std::strong_ordering::less);
    CHECK(length_order_compare(Permutation({2, 3, 1}), Permutation({3, 2, 1})) ==
          std::strong_ordering::less);
    CHECK_THROWS_AS(length_order_compare(a, Permutation::identity(2)), DomainError);
}

TEST_CASE("length order is a strict total order") {
    for (int m : {3, 4, 5}) {
        std::vector<int> word(m);
        std::iota(word.begin(), word.end(), 1);
        std::vector<Permutation> everyone;
        do {
            everyone.emplace_back(word);
        } while (std::next_permutation(word.begin(), word.end()));
        std::sort(everyone.begin(), everyone.end(), LengthOrderLess{});
        for (size_t t = 0; t + 1 < everyone.size(); ++t) {
            CHECK(length_order_compare(everyone[t], everyone[t + 1]) ==
                  std::strong_ordering::less);
            CHECK(coxeter_length(everyone[t]) <= coxeter_length(everyone[t + 1]));
        }
    }
}

TEST_CASE("schur basis small cases") {
    auto b13 = schur_basis(1, 3);
    REQUIRE(b13.elements.size() == 1);
    CHECK(b13.elements[0] == Permutation::identity(3));

    auto b23 = schur_basis(2, 3);
    std::vector<Permutation> expected = {
        Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
        Permutation({2, 3, 1}), Permutation({3, 1, 2}),
    };
    CHECK(b23.elements == expected);
    CHECK(b23.contains(Permutation({3, 1, 2})));
    CHECK_FALSE(b23.contains(Permutation({3, 2, 1})));

    auto b33 = schur_basis(3, 3);
    CHECK(b33.elements.size() == 6);  // all of Sym_3
    CHECK(b33.elements.front() == Permutation::identity(3));
    CHECK(b33.elements.back() == Permutation({3, 2, 1}));
    CHECK(b33.elements[1] == Permutation({1, 3, 2}));
    CHECK(b33.elements[2] == Permutation({2, 1, 3}));

    auto b00 = schur_basis(3, 0);
    REQUIRE(b00.elements.size() == 1);
    CHECK(b00.elements[0].degree() == 0);
}

TEST_CASE("schur basis matches definitional filter") {
    // Independent route: brute-force longest-decreasing length over subsets.
    for (int n = 1; n <= 4; ++n) {
        for (int r = 0; r <= 5; ++r) {
            auto basis = schur_basis(n, r);
            std::vector<int> word(r);
            std::iota(word.begin(), word.end(), 1);
            std::vector<Permutation> expected;
            do {
                Permutation p(word);
                if (llds_brute_force(p.word()) <= n) expected.push_back(p);
            } while (std::next_permutation(word.begin(), word.end()));
            std::sort(expected.begin(), expected.end(), LengthOrderLess{});
            CHECK(basis.elements == expected);
        }
    }
    CHECK(schur_basis(2, 5).elements.size() == 42);
}

TEST_CASE("partition basis small cases") {
    auto c31 = partition_basis(3, 1);
    std::vector<Permutation> expected = {
        Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
        Permutation({2, 3, 1}), Permutation({3, 1, 2}),
    };
    CHECK(c31.elements == expected);

    auto c32 = partition_basis(3, 2);
    CHECK(c32.elements.size() == 6);

    auto c25 = partition_basis(2, 5);
    CHECK(c25.elements.size() == 2);

    auto c30 = partition_basis(3, 0);
    REQUIRE(c30.elements.size() == 1);
    CHECK(c30.elements[0] == Permutation::identity(3));
}

TEST_CASE("partition basis matches definitional filter") {
    for (int n = 1; n <= 5; ++n) {
        for (int r = 0; r <= 5; ++r) {
            auto basis = partition_basis(n, r);
            std::vector<int> word(n);
            std::iota(word.begin(), word.end(), 1);
            std::vector<Permutation> expected;
            do {
                Permutation w(word);
                if (llis_brute_force(w.word()) >= n - r) expected.push_back(w);
            } while (std::next_permutation(word.begin(), word.end()));
            std::sort(expected.begin(), expected.end(), LengthOrderLess{});
            CHECK(basis.elements == expected);
        }
    }
}

TEST_CASE("bases are nested in the parameters") {
    for (int n = 1; n <= 5; ++n) {
        for (int r = 0; r <= 5; ++r) {
            CHECK(subset(schur_basis(n, r).elements,
                         schur_basis(n + 1, r).elements));
            CHECK(subset(partition_basis(n, r).elements,
                         partition_basis(n, r + 1).elements));
        }
    }
}

TEST_CASE("enumerate_basis dispatches") {
    CHECK(enumerate_basis(Side::Schur, 2, 3).elements ==
          schur_basis(2, 3).elements);
    CHECK(enumerate_basis(Side::Partition, 3, 1).elements ==
          partition_basis(3, 1).elements);
    CHECK(enumerate_basis(Side::Schur, 2, 3).side == Side::Schur);
    CHECK(enumerate_basis(Side::Partition, 3, 1).side == Side::Partition);
}

TEST_CASE("group enumeration cap") {
    Limits tight;
    tight.max_group = 100;  // 5! = 120 exceeds this
    CHECK_THROWS_AS(schur_basis(3, 5, tight), CapExceeded);
    CHECK_THROWS_AS(partition_basis(5, 2, tight), CapExceeded);
    CHECK(schur_basis(3, 4, tight).elements.size() > 0);

    Limits roomy;  // default 10! cap admits r = 10 but not r = 11
    CHECK_THROWS_AS(schur_basis(1, 11, roomy), CapExceeded);
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(schur_basis(0, 2), DomainError);
    CHECK_THROWS_AS(schur_basis(2, -1), DomainError);
    CHECK_THROWS_AS(partition_basis(0, 2), DomainError);
    CHECK_THROWS_AS(partition_basis(2, -1), DomainError);
}
