#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qweyl/rootdata.hpp"

using namespace qweyl;

TEST_CASE("D(g) values") {
    CHECK(RootData::build(Family::sl, 2).D() == 2);
    CHECK(RootData::build(Family::sl, 5).D() == 5);
    CHECK(RootData::build(Family::sp, 2).D() == 1);
    CHECK(RootData::build(Family::sp, 3).D() == 1);
    CHECK(RootData::parse("so5").D() == 1);  // so(4+1)
    CHECK(RootData::parse("so7").D() == 2);  // so(4+3)
    CHECK(RootData::parse("so9").D() == 1);
    CHECK(RootData::parse("so4").D() == 2);
    CHECK(RootData::parse("so8").D() == 2);
    CHECK(RootData::parse("so6").D() == 4);  // so(4+2)
    CHECK(RootData::parse("so10").D() == 4);
}

TEST_CASE("family parsing and construction errors") {
    CHECK(RootData::parse("sl3").name() == "sl3");
    CHECK(RootData::parse("sp4").name() == "sp4");
    CHECK(RootData::parse("so6").name() == "so6");
    CHECK_THROWS_AS(RootData::parse("e8"), std::invalid_argument);
    CHECK_THROWS_AS(RootData::parse("sl1"), std::invalid_argument);
    CHECK_THROWS_AS(RootData::parse("sp3"), std::invalid_argument);
    CHECK_THROWS_AS(RootData::build(Family::so_even, 1), std::invalid_argument);
}

TEST_CASE("pairing matrices") {
    // sl(n): diag (n-1)/n, off-diag -1/n
    for (int n : {2, 3, 4, 5}) {
        RootData rd = RootData::build(Family::sl, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat expect = i == j ? make_rat(n - 1, n) : make_rat(-1, n);
                CHECK(rd.pairing_entry(i, j) == expect);
                // all values in (1/D) Z
                CHECK(is_integer(Rat(rd.pairing_entry(i, j) * rd.D())));
            }
    }
    // sp/so: identity
    for (const char* name : {"sp4", "so5", "so6", "so7"}) {
        RootData rd = RootData::parse(name);
        for (int i = 0; i < rd.rank(); ++i)
            for (int j = 0; j < rd.rank(); ++j)
                CHECK(rd.pairing_entry(i, j) == (i == j ? 1 : 0));
    }
    // symmetry and bilinearity samples
    RootData rd = RootData::parse("sl3");
    Weight a(std::vector<long long>{2, 0, 1}), b(std::vector<long long>{0, 3, 1});
    CHECK(rd.pair(a, b) == rd.pair(b, a));
    CHECK(rd.pair(rd.zero(), b) == 0);
}

TEST_CASE("sl2 pairing normalization: (1,1) = 1/2") {
    RootData rd = RootData::parse("sl2");
    Weight one = rd.from_int(1);
    CHECK(rd.pair(one, one) == make_rat(1, 2));
}

TEST_CASE("sl weights live on the quotient lattice") {
    RootData rd = RootData::parse("sl3");
    Weight a(std::vector<long long>{1, 2, 3});
    Weight b(std::vector<long long>{0, 1, 2});
    CHECK(rd.canonical(a) == rd.canonical(b));
    CHECK(rd.equal_weights(a, b));
    // pairing well defined modulo the all-ones shift
    Weight c(std::vector<long long>{5, 0, 2});
    CHECK(rd.pair(a, c) == rd.pair(b, c));
}

TEST_CASE("rho") {
    // sl(n): (alpha_i, rho) = (n+1-2i)/2
    for (int n : {2, 3, 4, 5}) {
        RootData rd = RootData::build(Family::sl, n);
        for (int i = 1; i <= n; ++i)
            CHECK(rd.pair_rho(rd.basis_weight(i - 1)) == make_rat(n + 1 - 2 * i, 2));
    }
    // sum_i q^{(alpha_i, rho)} = [n]
    for (int n : {2, 3, 4, 5}) {
        RootData rd = RootData::build(Family::sl, n);
        LaurentQ s;
        for (int i = 0; i < n; ++i) s += LaurentQ::q_power(rd.pair_rho(rd.basis_weight(i)));
        CHECK(s == quantum_integer(n));
    }
}

TEST_CASE("weyl group sizes") {
    CHECK(weyl_elements(RootData::parse("sl3")).size() == 6);
    CHECK(weyl_elements(RootData::parse("sp4")).size() == 8);
    CHECK(weyl_elements(RootData::parse("so4")).size() == 4);
    CHECK(weyl_elements(RootData::parse("so5")).size() == 8);
    CHECK(weyl_elements(RootData::parse("so7")).size() == 48);
    CHECK_THROWS_AS(weyl_elements(RootData::parse("sl11")), std::domain_error);
}

TEST_CASE("weyl elements are distinct and form a group") {
    for (const char* name : {"sl3", "sp4", "so4"}) {
        RootData rd = RootData::parse(name);
        auto ws = weyl_elements(rd);
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const auto& w : ws) seen.emplace(w.perm, w.flip);
        CHECK(seen.size() == ws.size());
        // closure under composition
        for (size_t i = 0; i < ws.size(); i += 3)
            for (size_t j = 0; j < ws.size(); j += 2) {
                auto c = ws[i].compose(ws[j]);
                CHECK(seen.count({c.perm, c.flip}) == 1);
            }
    }
}

TEST_CASE("action, sign, invariance of the form") {
    RootData sl3 = RootData::parse("sl3");
    auto e = WeylElement::identity(3);
    Weight a(std::vector<long long>{2, 1, 0});
    CHECK(sl3.act(e, a) == a);
    CHECK(e.sgn() == 1);

    WeylElement t = WeylElement::identity(3);
    std::swap(t.perm[0], t.perm[1]);
    CHECK(t.sgn() == -1);
    CHECK(sl3.act(t, sl3.basis_weight(0)) == sl3.basis_weight(1));

    RootData sp2 = RootData::parse("sp2");
    WeylElement f = WeylElement::identity(1);
    f.flip[0] = -1;
    CHECK(f.sgn() == -1);
    CHECK(sp2.act(f, sp2.from_int(3)) == sp2.from_int(-3));

    std::mt19937_64 rng(5);
    for (const char* name : {"sl2", "sl4", "sp4", "so5", "so6"}) {
        RootData rd = RootData::parse(name);
        auto ws = weyl_elements(rd);
        std::uniform_int_distribution<int> coord(-5, 5);
        std::uniform_int_distribution<size_t> pick(0, ws.size() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<long long> va(rd.rank()), vb(rd.rank());
            for (auto& x : va) x = coord(rng);
            for (auto& x : vb) x = coord(rng);
            Weight wa(va), wb(vb);
            const auto& w = ws[pick(rng)];
            CHECK(rd.pair(rd.act(w, wa), rd.act(w, wb)) == rd.pair(wa, wb));
        }
    }
}

TEST_CASE("sgn is a homomorphism") {
    for (const char* name : {"sl3", "sp4"}) {
        RootData rd = RootData::parse(name);
        auto ws = weyl_elements(rd);
        for (const auto& w1 : ws)
            for (const auto& w2 : ws)
                CHECK(w1.compose(w2).sgn() == w1.sgn() * w2.sgn());
    }
}

TEST_CASE("so_even flips have even parity") {
    auto ws = weyl_elements(RootData::parse("so6"));
    for (const auto& w : ws) {
        int neg = 0;
        for (int f : w.flip)
            if (f < 0) ++neg;
        CHECK(neg % 2 == 0);
    }
}

TEST_CASE("weight windows") {
    RootData sl2 = RootData::parse("sl2");
    auto win = weight_window(sl2, 20);
    CHECK(win.size() == 41); // lambda in [-20, 20]
    RootData sp4 = RootData::parse("sp4");
    CHECK(weight_window(sp4, 2).size() == 25);
}

TEST_CASE("rank-1 integer coordinates") {
    RootData sl2 = RootData::parse("sl2");
    CHECK(sl2.to_int(sl2.from_int(-7)) == -7);
    CHECK(sl2.from_int(-3) == Weight(std::vector<long long>{0, 3}));
    RootData sp2 = RootData::parse("sp2");
    CHECK(sp2.to_int(sp2.from_int(9)) == 9);
}
