#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qweyl/algebra.hpp"
#include "qweyl/latticefn.hpp"

using namespace qweyl;

namespace {

Weight rand_weight(const RootData& rd, std::mt19937_64& rng, int bound = 2) {
    std::uniform_int_distribution<int> coord(-bound, bound);
    std::vector<long long> v(rd.rank());
    for (auto& x : v) x = coord(rng);
    return rd.canonical(Weight(v));
}

LaurentQ rand_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 2), num(-4, 4), den(1, 2), c(-5, 5);
    LaurentQ x;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        x += LaurentQ::monomial(make_rat(c(rng), 1), make_rat(num(rng), den(rng)));
    return x;
}

AlgebraElement rand_element(const RootData& rd, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 3);
    AlgebraElement x(rd);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        x += AlgebraElement::monomial(rd, rand_weight(rd, rng), rand_weight(rd, rng),
                                      rand_coeff(rng));
    return x;
}

} // namespace

TEST_CASE("monomial basics") {
    RootData rd = RootData::parse("sl2");
    CHECK(AlgebraElement::monomial(rd, rd.zero(), rd.zero(), LaurentQ(1)) ==
          AlgebraElement::unit(rd));
    AlgebraElement e = AlgebraElement::e_pow(rd, 1);
    CHECK(e.coeff(rd.zero(), rd.from_int(1)) == LaurentQ(1));
    CHECK(AlgebraElement::monomial(rd, rd.from_int(1), rd.from_int(1), LaurentQ()).is_zero());
}

TEST_CASE("q-commutation: E Q = q^{1/2} Q E in sl2") {
    RootData rd = RootData::parse("sl2");
    AlgebraElement lhs = AlgebraElement::e_pow(rd, 1) * AlgebraElement::q_pow(rd, 1);
    AlgebraElement rhs = LaurentQ::q_power(1, 2) *
                         (AlgebraElement::q_pow(rd, 1) * AlgebraElement::e_pow(rd, 1));
    CHECK(lhs == rhs);

    std::mt19937_64 rng(3);
    AlgebraElement x = rand_element(rd, rng);
    CHECK(x * AlgebraElement::unit(rd) == x);
    CHECK(AlgebraElement::unit(rd) * x == x);
}

TEST_CASE("sp family squares: (Q_i E_i)^2 = q Q_{2i} E_{2i}") {
    for (const char* name : {"sp2", "sp4"}) {
        RootData rd = RootData::parse(name);
        for (int i = 0; i < rd.rank(); ++i) {
            Weight a = rd.basis_weight(i);
            AlgebraElement qe = AlgebraElement::monomial(rd, a, a, LaurentQ(1));
            AlgebraElement expect =
                AlgebraElement::monomial(rd, 2 * a, 2 * a, LaurentQ::q_power(1, 1));
            CHECK(qe * qe == expect);
        }
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(23);
    for (const char* name : {"sl2", "sl3", "sp4"}) {
        RootData rd = RootData::parse(name);
        for (int i = 0; i < 200; ++i) {
            AlgebraElement a = rand_element(rd, rng), b = rand_element(rd, rng),
                           c = rand_element(rd, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("weyl action") {
    RootData sl2 = RootData::parse("sl2");
    auto ws = weyl_elements(sl2);
    AlgebraElement x = AlgebraElement::e_pow(sl2, 1) + AlgebraElement::e_pow(sl2, -1);
    for (const auto& w : ws) CHECK(weyl_act(w, x) == x);

    RootData sl3 = RootData::parse("sl3");
    WeylElement t = WeylElement::identity(3);
    std::swap(t.perm[0], t.perm[1]);
    AlgebraElement y =
        AlgebraElement::monomial(sl3, sl3.basis_weight(0), sl3.basis_weight(1), LaurentQ(1));
    AlgebraElement expect =
        AlgebraElement::monomial(sl3, sl3.basis_weight(1), sl3.basis_weight(0), LaurentQ(1));
    CHECK(weyl_act(t, y) == expect);
}

TEST_CASE("weyl action is an algebra automorphism") {
    std::mt19937_64 rng(29);
    for (const char* name : {"sl2", "sl3", "sp4"}) {
        RootData rd = RootData::parse(name);
        auto ws = weyl_elements(rd);
        std::uniform_int_distribution<size_t> pick(0, ws.size() - 1);
        for (int i = 0; i < 50; ++i) {
            const auto& w = ws[pick(rng)];
            AlgebraElement a = rand_element(rd, rng), b = rand_element(rd, rng);
            CHECK(weyl_act(w, a * b) == weyl_act(w, a) * weyl_act(w, b));
        }
    }
}

TEST_CASE("symmetrize and is_invariant") {
    RootData rd = RootData::parse("sl2");
    CHECK(is_invariant(AlgebraElement::unit(rd)));
    AlgebraElement e = AlgebraElement::e_pow(rd, 1);
    CHECK(is_invariant(e + AlgebraElement::e_pow(rd, -1)));
    CHECK(!is_invariant(e));
    CHECK(symmetrize(e) == e + AlgebraElement::e_pow(rd, -1));
    std::mt19937_64 rng(31);
    for (const char* name : {"sl3", "sp4", "so6"}) {
        RootData r2 = RootData::parse(name);
        CHECK(is_invariant(symmetrize(rand_element(r2, rng))));
    }
}

TEST_CASE("epsilon") {
    RootData rd = RootData::parse("sl2");
    LaurentQ qh = LaurentQ::q_power(1, 2), qhm = LaurentQ::q_power(-1, 2);
    AlgebraElement gen1 = AlgebraElement::e_pow(rd, 1) + AlgebraElement::e_pow(rd, -1) -
                          (qh + qhm) * AlgebraElement::unit(rd);
    CommPoly eps1 = epsilon(gen1);
    CommPoly expect1 = CommPoly::monomial(rd, rd.from_int(1), rd.zero(), Rat(1)) +
                       CommPoly::monomial(rd, rd.from_int(-1), rd.zero(), Rat(1)) +
                       CommPoly::monomial(rd, rd.zero(), rd.zero(), Rat(-2));
    CHECK(eps1 == expect1);

    CHECK(epsilon(AlgebraElement::unit(rd)) == CommPoly::unit(rd));

    // E Q + E^{-1} Q^{-1} - q (Q + Q^{-1})  evaluates to  EQ + E^{-1}Q^{-1} - Q - Q^{-1}
    auto E = [&](long k) { return AlgebraElement::e_pow(rd, k); };
    auto Q = [&](long k) { return AlgebraElement::q_pow(rd, k); };
    AlgebraElement gen2 = E(1) * Q(1) + E(-1) * Q(-1) -
                          LaurentQ::q_power(1, 1) * (Q(1) + Q(-1));
    CommPoly eps2 = epsilon(gen2);
    CommPoly expect2 = CommPoly::monomial(rd, rd.from_int(1), rd.from_int(1), Rat(1)) +
                       CommPoly::monomial(rd, rd.from_int(-1), rd.from_int(-1), Rat(1)) +
                       CommPoly::monomial(rd, rd.zero(), rd.from_int(1), Rat(-1)) +
                       CommPoly::monomial(rd, rd.zero(), rd.from_int(-1), Rat(-1));
    CHECK(eps2 == expect2);
}

TEST_CASE("epsilon is a ring homomorphism") {
    std::mt19937_64 rng(37);
    for (const char* name : {"sl2", "sl3", "sp4"}) {
        RootData rd = RootData::parse(name);
        for (int i = 0; i < 60; ++i) {
            AlgebraElement a = rand_element(rd, rng), b = rand_element(rd, rng);
            CHECK(epsilon(a * b) == epsilon(a) * epsilon(b));
            CHECK(epsilon(a + b) == epsilon(a) + epsilon(b));
        }
    }
}

TEST_CASE("poisson basics") {
    RootData rd = RootData::parse("sl2");
    std::mt19937_64 rng(41);
    AlgebraElement x = rand_element(rd, rng);
    CHECK(poisson(x, x).is_zero());

    // bracket depends only on the classical class: adding (q-1) z changes nothing
    AlgebraElement y = rand_element(rd, rng), z = rand_element(rd, rng);
    AlgebraElement xq = x + (LaurentQ::q_power(1, 1) - LaurentQ(1)) * z;
    CHECK(poisson(x, y) == poisson(xq, y));
}

TEST_CASE("poisson on tau lifts matches the closed torus formulas") {
    // sl(n): {tau_{1,0}, tau_{0,1}} = tau_{1,1} - tau_{1,0} tau_{0,1}/n
    for (int n : {2, 3}) {
        RootData rd = RootData::build(Family::sl, n);
        CommPoly lhs = poisson(tau_lift(rd, 1, 0), tau_lift(rd, 0, 1));
        CommPoly rhs = epsilon(tau_lift(rd, 1, 1)) -
                       make_rat(1, n) * (epsilon(tau_lift(rd, 1, 0)) * epsilon(tau_lift(rd, 0, 1)));
        CHECK(lhs == rhs);
    }
    // sp/so: {tau_{a,b}, tau_{c,d}} = det * (tau_{a+c,b+d} - tau_{a-c,b-d})
    for (const char* name : {"sp4", "so5"}) {
        RootData rd = RootData::parse(name);
        long a = 2, b = 1, c = 1, d = 1;
        CommPoly lhs = poisson(tau_lift(rd, a, b), tau_lift(rd, c, d));
        Rat det = Rat(a * d - b * c);
        CommPoly rhs = det * (epsilon(tau_lift(rd, a + c, b + d)) -
                              epsilon(tau_lift(rd, a - c, b - d)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("poisson bracket laws on lifted classes") {
    std::mt19937_64 rng(43);
    for (const char* name : {"sl2", "sp4"}) {
        RootData rd = RootData::parse(name);
        std::uniform_int_distribution<int> lab(-2, 2);
        for (int i = 0; i < 50; ++i) {
            CommPoly x = epsilon(tau_lift(rd, lab(rng), lab(rng)));
            CommPoly y = epsilon(tau_lift(rd, lab(rng), lab(rng)));
            CommPoly z = epsilon(tau_lift(rd, lab(rng), lab(rng)));
            CHECK(poisson(x, y) == -poisson(y, x));
            CHECK(poisson(x, y * z) == poisson(x, y) * z + y * poisson(x, z));
            CommPoly jac = poisson(x, poisson(y, z)) + poisson(y, poisson(z, x)) +
                           poisson(z, poisson(x, y));
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("weyl action commutes with epsilon and poisson") {
    std::mt19937_64 rng(47);
    for (const char* name : {"sl2", "sp4"}) {
        RootData rd = RootData::parse(name);
        auto ws = weyl_elements(rd);
        std::uniform_int_distribution<size_t> pick(0, ws.size() - 1);
        std::uniform_int_distribution<int> lab(-2, 2);
        for (int i = 0; i < 30; ++i) {
            const auto& w = ws[pick(rng)];
            AlgebraElement a = rand_element(rd, rng);
            CHECK(epsilon(weyl_act(w, a)) == weyl_act(w, epsilon(a)));
            AlgebraElement x = tau_lift(rd, lab(rng), lab(rng));
            AlgebraElement y = tau_lift(rd, lab(rng), lab(rng));
            CHECK(weyl_act(w, poisson(x, y)) == poisson(weyl_act(w, x), weyl_act(w, y)));
        }
    }
}

TEST_CASE("tau_lift") {
    RootData sl2 = RootData::parse("sl2");
    CHECK(tau_lift(sl2, 1, 0) ==
          AlgebraElement::e_pow(sl2, 1) + AlgebraElement::e_pow(sl2, -1));
    CHECK(tau_lift(sl2, 0, 0) == LaurentQ(2) * AlgebraElement::unit(sl2));

    RootData sl3 = RootData::parse("sl3");
    CHECK(tau_lift(sl3, 0, 0) == LaurentQ(3) * AlgebraElement::unit(sl3));
    // sum_i E_i Q_i = sum_i q^{(a_i,a_i)} Q_i E_i with (a_i, a_i) = 2/3
    AlgebraElement t11 = tau_lift(sl3, 1, 1);
    for (int i = 0; i < 3; ++i) {
        Weight a = sl3.basis_weight(i);
        CHECK(t11.coeff(a, a) == LaurentQ::q_power(2, 3));
    }

    RootData sp4 = RootData::parse("sp4");
    CHECK(tau_lift(sp4, 0, 0) == LaurentQ(4) * AlgebraElement::unit(sp4));
    for (const char* name : {"sl2", "sl3", "sp4", "so5", "so6"}) {
        RootData rd = RootData::parse(name);
        CHECK(is_invariant(tau_lift(rd, 2, -1)));
    }
}

TEST_CASE("mirror") {
    RootData rd = RootData::parse("sl2");
    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
        AlgebraElement x = rand_element(rd, rng);
        CHECK(mirror(mirror(x)) == x);
    }
    CHECK(mirror(AlgebraElement::q_pow(rd, 3)) == AlgebraElement::q_pow(rd, -3));
    // ring map: mirror(xy) = mirror(x) mirror(y)
    for (int i = 0; i < 40; ++i) {
        AlgebraElement x = rand_element(rd, rng), y = rand_element(rd, rng);
        CHECK(mirror(x * y) == mirror(x) * mirror(y));
    }
}

TEST_CASE("operator faithfulness via delta functions") {
    RootData rd = RootData::parse("sl2");
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement x = rand_element(rd, rng);
        if (x.is_zero()) continue;
        long long maxdeg = 0;
        for (const auto& [k, c] : x.terms())
            maxdeg = std::max(maxdeg, std::abs(rd.to_int(k.e_wt)));
        int radius = (int)maxdeg + 1;
        bool nonzero = false;
        for (long long mu = -radius; mu <= radius && !nonzero; ++mu) {
            LatticeFunction d = LatticeFunction::delta(rd, rd.from_int(mu));
            for (long long lam = -2 * radius; lam <= 2 * radius && !nonzero; ++lam)
                if (!apply(x, d, lam).is_zero()) nonzero = true;
        }
        CHECK(nonzero);
    }
}

TEST_CASE("curve elements") {
    RootData rd = RootData::parse("sl2");
    auto E = [&](long k) { return AlgebraElement::e_pow(rd, k); };
    CHECK(curve_element(rd, 1, 0) == -(E(1) + E(-1)));
    CHECK_THROWS_AS(curve_element(rd, 0, 0), std::invalid_argument);
    AlgebraElement c10 = curve_element(rd, 1, 0);
    CHECK(curve_element(rd, 2, 0) ==
          c10 * c10 - LaurentQ(2) * AlgebraElement::unit(rd));
    for (long p : {1L, 2L, 3L})
        for (long qq : {-5L, -1L, 0L, 2L})
            if (!(p == 0 && qq == 0)) CHECK(is_invariant(curve_element(rd, p, qq)));
}

TEST_CASE("curve product-to-sum identity") {
    RootData rd = RootData::parse("sl2");
    AlgebraElement lhs = curve_element(rd, 1, 0) * curve_element(rd, 0, 1);
    AlgebraElement rhs = LaurentQ::q_power(1, 4) * curve_element(rd, 1, 1) +
                         LaurentQ::q_power(-1, 4) * curve_element(rd, 1, -1);
    CHECK(lhs == rhs);
}

TEST_CASE("rendering") {
    RootData rd = RootData::parse("sl2");
    AlgebraElement x = LaurentQ::q_power(3, 2) *
                       AlgebraElement::monomial(rd, rd.from_int(1), rd.from_int(-1), LaurentQ(1));
    CHECK(x.str() == "q^{3/2}*Q[1,0]E[0,1]");
    CHECK(AlgebraElement::zero(rd).str() == "0");
}
