#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qweyl/charvariety.hpp"

using namespace qweyl;

TEST_CASE("tau_poly basics") {
    RootData sl2 = RootData::parse("sl2");
    CommPoly t10 = tau_poly(sl2, 1, 0);
    CommPoly expect = CommPoly::monomial(sl2, sl2.from_int(1), sl2.zero(), Rat(1)) +
                      CommPoly::monomial(sl2, sl2.from_int(-1), sl2.zero(), Rat(1));
    CHECK(t10 == expect);

    for (const char* name : {"sl2", "sl3", "sp4", "so5"}) {
        RootData rd = RootData::parse(name);
        Rat dim = rd.family() == Family::sl ? Rat(rd.n()) : Rat(2 * rd.n());
        CHECK(tau_poly(rd, 0, 0) == dim * CommPoly::unit(rd));
        CHECK(is_invariant(tau_poly(rd, 2, 1)));
    }
}

TEST_CASE("tau relations against symmetric functions in sl3") {
    // tau_{1,0} tau_{-1,0} = sum x_i * sum x_i^{-1} on the diagonal torus:
    // in the lattice model sum_{i,j} E_{a_i - a_j} = n + sum_{i != j} E_{a_i - a_j}.
    RootData rd = RootData::parse("sl3");
    CommPoly prod = tau_poly(rd, 1, 0) * tau_poly(rd, -1, 0);
    CommPoly expect = Rat(3) * CommPoly::unit(rd);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                expect += CommPoly::monomial(rd, rd.basis_weight(i) - rd.basis_weight(j),
                                             rd.zero(), Rat(1));
    CHECK(prod == expect);
}

TEST_CASE("tau inversion symmetry") {
    for (const char* name : {"sl2", "sp4", "so5", "so6"}) {
        RootData rd = RootData::parse(name);
        for (long a = -3; a <= 3; ++a)
            for (long b = -2; b <= 2; ++b)
                CHECK(tau_poly(rd, a, b) == tau_poly(rd, -a, -b));
    }
}

TEST_CASE("theta compatibility: epsilon of the lift is the trace polynomial") {
    for (const char* name : {"sl2", "sl3", "sl4", "sp4", "so4", "so5", "so7"}) {
        RootData rd = RootData::parse(name);
        for (long a = -4; a <= 4; ++a)
            for (long b = -4; b <= 4; ++b)
                CHECK(epsilon(tau_lift(rd, a, b)) == tau_poly(rd, a, b));
    }
}

TEST_CASE("goldman bracket closed forms") {
    RootData sl2 = RootData::parse("sl2");
    CommPoly g = goldman_bracket(sl2, {1, 0}, {0, 1});
    CHECK(g == tau_poly(sl2, 1, 1) - make_rat(1, 2) * (tau_poly(sl2, 1, 0) * tau_poly(sl2, 0, 1)));

    RootData sp4 = RootData::parse("sp4");
    CHECK(goldman_bracket(sp4, {1, 0}, {0, 1}) ==
          tau_poly(sp4, 1, 1) - tau_poly(sp4, 1, -1));
    CHECK(goldman_bracket(sp4, {1, 1}, {1, 1}).is_zero());

    RootData so5 = RootData::parse("so5");
    CHECK(goldman_bracket(so5, {2, 1}, {1, 1}) ==
          tau_poly(so5, 3, 2) - tau_poly(so5, 1, 0));
}

TEST_CASE("goldman bracket is antisymmetric") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> lab(-3, 3);
    for (const char* name : {"sl2", "sl3", "sp4", "so5"}) {
        RootData rd = RootData::parse(name);
        for (int i = 0; i < 30; ++i) {
            TorusTrace t1{lab(rng), lab(rng)}, t2{lab(rng), lab(rng)};
            CHECK(goldman_bracket(rd, t1, t2) == -goldman_bracket(rd, t2, t1));
            CHECK(goldman_bracket(rd, t1, t1).is_zero());
        }
    }
}

TEST_CASE("bracket comparison sweeps") {
    for (const char* name : {"sl2", "sl3"}) {
        BracketReport rep = compare_brackets(RootData::parse(name), 2, 1);
        CHECK(rep.pass);
        CHECK(rep.checked == 625);
    }
    for (const char* name : {"sp4", "so4", "so5"}) {
        BracketReport rep = compare_brackets(RootData::parse(name), 1, 2);
        CHECK(rep.pass);
        CHECK(rep.checked == 81);
    }
}

TEST_CASE("perturbed pairing is detected") {
    // Negative control: compare sl2 lifts against the sp-family Goldman
    // formula; the sweep must report witnesses.
    RootData sl2 = RootData::parse("sl2");
    bool found = false;
    for (long a = -1; a <= 1 && !found; ++a)
        for (long b = -1; b <= 1 && !found; ++b)
            for (long c = -1; c <= 1 && !found; ++c)
                for (long d = -1; d <= 1 && !found; ++d) {
                    Rat det = Rat(a) * Rat(d) - Rat(b) * Rat(c);
                    if (det == 0) continue;
                    CommPoly wrong =
                        det * (tau_poly(sl2, a + c, b + d) - tau_poly(sl2, a - c, b - d));
                    if (poisson(tau_lift(sl2, a, b), tau_lift(sl2, c, d)) != wrong) found = true;
                }
    CHECK(found);
}
