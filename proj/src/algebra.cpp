#include "qweyl/algebra.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qweyl {

static void require_same(const RootData& a, const RootData& b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": root datum mismatch");
}

// ---------------------------------------------------------------------------
// AlgebraElement

void AlgebraElement::add_term(const Weight& a, const Weight& b, const LaurentQ& c) {
    if (c.is_zero()) return;
    Key k{rd_.canonical(a), rd_.canonical(b)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::unit(const RootData& rd) {
    return monomial(rd, rd.zero(), rd.zero(), LaurentQ(1));
}

AlgebraElement AlgebraElement::monomial(const RootData& rd, const Weight& a, const Weight& b,
                                        const LaurentQ& c) {
    AlgebraElement x(rd);
    x.add_term(a, b, c);
    return x;
}

AlgebraElement AlgebraElement::e_gen(const RootData& rd, const Weight& b) {
    return monomial(rd, rd.zero(), b, LaurentQ(1));
}

AlgebraElement AlgebraElement::q_gen(const RootData& rd, const Weight& a) {
    return monomial(rd, a, rd.zero(), LaurentQ(1));
}

AlgebraElement AlgebraElement::e_pow(const RootData& rd, long long k) {
    return e_gen(rd, rd.from_int(k));
}

AlgebraElement AlgebraElement::q_pow(const RootData& rd, long long k) {
    return q_gen(rd, rd.from_int(k));
}

LaurentQ AlgebraElement::coeff(const Weight& a, const Weight& b) const {
    auto it = terms_.find(Key{rd_.canonical(a), rd_.canonical(b)});
    return it == terms_.end() ? LaurentQ() : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    require_same(rd_, o.rd_, "AlgebraElement::operator+=");
    for (const auto& [k, c] : o.terms_) add_term(k.q_wt, k.e_wt, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    require_same(rd_, o.rd_, "AlgebraElement::operator-=");
    for (const auto& [k, c] : o.terms_) add_term(k.q_wt, k.e_wt, -c);
    return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement r(a.rd_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require_same(a.rd_, b.rd_, "AlgebraElement::operator*");
    AlgebraElement r(a.rd_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            // (Q_a E_b)(Q_c E_d) = q^{(b,c)} Q_{a+c} E_{b+d}
            Rat e = a.rd_.pair(ka.e_wt, kb.q_wt);
            r.add_term(ka.q_wt + kb.q_wt, ka.e_wt + kb.e_wt,
                       ca * cb * LaurentQ::q_power(e));
        }
    }
    return r;
}

AlgebraElement operator*(const LaurentQ& s, const AlgebraElement& a) {
    AlgebraElement r(a.rd_);
    for (const auto& [k, c] : a.terms_) r.add_term(k.q_wt, k.e_wt, s * c);
    return r;
}

AlgebraElement AlgebraElement::pow(long k) const {
    if (k < 0) throw std::invalid_argument("AlgebraElement::pow: negative power");
    AlgebraElement r = unit(rd_);
    for (long i = 0; i < k; ++i) r *= *this;
    return r;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, raw] : terms_) {
        LaurentQ c = raw;
        bool neg = false;
        if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
            neg = true;
            c = -c;
        }
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const bool is_unit_mono = k.q_wt.is_zero() && k.e_wt.is_zero();
        std::string cs = c.str();
        const bool needs_paren = c.terms().size() > 1;
        if (is_unit_mono) {
            os << (needs_paren ? "(" + cs + ")" : cs);
            continue;
        }
        if (c.is_one()) {
            // bare monomial
        } else if (needs_paren) {
            os << "(" << cs << ")*";
        } else {
            os << cs << "*";
        }
        if (!k.q_wt.is_zero()) os << "Q" << k.q_wt.str();
        if (!k.e_wt.is_zero()) os << "E" << k.e_wt.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CommPoly

void CommPoly::add_term(const Weight& e_wt, const Weight& q_wt, const Rat& c) {
    if (c == 0) return;
    Key k{rd_.canonical(e_wt), rd_.canonical(q_wt)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CommPoly CommPoly::monomial(const RootData& rd, const Weight& e_wt, const Weight& q_wt,
                            const Rat& c) {
    CommPoly p(rd);
    p.add_term(e_wt, q_wt, c);
    return p;
}

Rat CommPoly::coeff(const Weight& e_wt, const Weight& q_wt) const {
    auto it = terms_.find(Key{rd_.canonical(e_wt), rd_.canonical(q_wt)});
    return it == terms_.end() ? Rat(0) : it->second;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    require_same(rd_, o.rd_, "CommPoly::operator+=");
    for (const auto& [k, c] : o.terms_) add_term(k.e_wt, k.q_wt, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    require_same(rd_, o.rd_, "CommPoly::operator-=");
    for (const auto& [k, c] : o.terms_) add_term(k.e_wt, k.q_wt, -c);
    return *this;
}

CommPoly operator-(const CommPoly& a) {
    CommPoly r(a.rd_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    require_same(a.rd_, b.rd_, "CommPoly::operator*");
    CommPoly r(a.rd_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.e_wt + kb.e_wt, ka.q_wt + kb.q_wt, ca * cb);
    return r;
}

CommPoly operator*(const Rat& s, const CommPoly& a) {
    CommPoly r(a.rd_);
    if (s == 0) return r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, s * c);
    return r;
}

CommPoly CommPoly::invert_q() const {
    CommPoly r(rd_);
    for (const auto& [k, c] : terms_) r.add_term(k.e_wt, -k.q_wt, c);
    return r;
}

Rat CommPoly::eval_point(const Rat& e_val, const Rat& q_val) const {
    if (rd_.rank() != 1 && !(rd_.family() == Family::sl && rd_.n() == 2))
        throw std::domain_error("eval_point: rank-1 lattices only");
    if (e_val == 0 || q_val == 0)
        throw std::domain_error("eval_point: zero coordinate (Laurent pole)");
    auto ipow = [](const Rat& x, long long k) {
        Rat r(1);
        Rat b = k < 0 ? Rat(1) / x : x;
        for (long long i = 0, m = k < 0 ? -k : k; i < m; ++i) r *= b;
        return r;
    };
    Rat s(0);
    for (const auto& [k, c] : terms_)
        s += c * ipow(e_val, rd_.to_int(k.e_wt)) * ipow(q_val, rd_.to_int(k.q_wt));
    return s;
}

std::string CommPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rat v = c;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        const bool is_unit_mono = k.e_wt.is_zero() && k.q_wt.is_zero();
        if (is_unit_mono) {
            os << v.get_str();
            continue;
        }
        if (v != 1) os << v.get_str() << "*";
        if (!k.e_wt.is_zero()) os << "E" << k.e_wt.str();
        if (!k.q_wt.is_zero()) os << "Q" << k.q_wt.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Weyl action, symmetrization, classical limit

AlgebraElement weyl_act(const WeylElement& w, const AlgebraElement& x) {
    AlgebraElement r(x.rd_);
    for (const auto& [k, c] : x.terms_)
        r.add_term(x.rd_.act(w, k.q_wt), x.rd_.act(w, k.e_wt), c);
    return r;
}

CommPoly weyl_act(const WeylElement& w, const CommPoly& x) {
    CommPoly r(x.rd_);
    for (const auto& [k, c] : x.terms_)
        r.add_term(x.rd_.act(w, k.e_wt), x.rd_.act(w, k.q_wt), c);
    return r;
}

AlgebraElement symmetrize(const AlgebraElement& x) {
    AlgebraElement r(x.root_data());
    for (const auto& w : weyl_elements(x.root_data())) r += weyl_act(w, x);
    return r;
}

CommPoly symmetrize(const CommPoly& x) {
    CommPoly r(x.root_data());
    for (const auto& w : weyl_elements(x.root_data())) r += weyl_act(w, x);
    return r;
}

bool is_invariant(const AlgebraElement& x) {
    for (const auto& w : weyl_generators(x.root_data()))
        if (weyl_act(w, x) != x) return false;
    return true;
}

bool is_invariant(const CommPoly& x) {
    for (const auto& w : weyl_generators(x.root_data()))
        if (weyl_act(w, x) != x) return false;
    return true;
}

CommPoly epsilon(const AlgebraElement& x) {
    CommPoly r(x.root_data());
    for (const auto& [k, c] : x.terms()) r += CommPoly::monomial(x.root_data(), k.e_wt, k.q_wt, c.eval_q1());
    return r;
}

AlgebraElement lift(const CommPoly& x) {
    AlgebraElement r(x.root_data());
    for (const auto& [k, c] : x.terms())
        r += AlgebraElement::monomial(x.root_data(), k.q_wt, k.e_wt, LaurentQ(c));
    return r;
}

CommPoly poisson(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement z = x * y - y * x;
    CommPoly r(x.root_data());
    for (const auto& [k, c] : z.terms()) {
        HJet j = c.h_jet();
        if (j.c0 != 0)
            throw std::logic_error("poisson: commutator has nonzero constant layer");
        r += CommPoly::monomial(x.root_data(), k.e_wt, k.q_wt, j.c1);
    }
    return r;
}

CommPoly poisson(const CommPoly& x, const CommPoly& y) { return poisson(lift(x), lift(y)); }

// ---------------------------------------------------------------------------
// tau lifts, mirror, torus curves

AlgebraElement tau_lift(const RootData& rd, long a, long b) {
    AlgebraElement r(rd);
    for (int i = 0; i < rd.rank(); ++i) {
        Weight ea = rd.canonical(rd.basis_weight(i, a));
        Weight qb = rd.canonical(rd.basis_weight(i, b));
        r += AlgebraElement::e_gen(rd, ea) * AlgebraElement::q_gen(rd, qb);
        if (rd.family() != Family::sl)
            r += AlgebraElement::e_gen(rd, -ea) * AlgebraElement::q_gen(rd, -qb);
    }
    return r;
}

AlgebraElement mirror(const AlgebraElement& x) {
    AlgebraElement r(x.rd_);
    for (const auto& [k, c] : x.terms_) r.add_term(-k.q_wt, k.e_wt, c.bar());
    return r;
}

AlgebraElement curve_element(const RootData& rd, long p, long q) {
    if (!(rd.family() == Family::sl && rd.n() == 2))
        throw std::invalid_argument("curve_element: defined on the sl2 algebra");
    if (p == 0 && q == 0) throw std::invalid_argument("curve_element: (0,0) is not a curve");
    long g = std::gcd(std::abs(p), std::abs(q));
    long pp = p / g, qq = q / g;
    LaurentQ sign((pp + qq) % 2 == 0 ? 1 : -1);
    AlgebraElement prim =
        sign * LaurentQ::q_power(-pp * qq, 4) *
        (AlgebraElement::e_pow(rd, pp) * AlgebraElement::q_pow(rd, qq) +
         AlgebraElement::e_pow(rd, -pp) * AlgebraElement::q_pow(rd, -qq));
    if (g == 1) return prim;
    // T_g(prim): T_0 = 2, T_1 = x, T_{k+1} = x T_k - T_{k-1}
    AlgebraElement tkm1 = LaurentQ(2) * AlgebraElement::unit(rd);
    AlgebraElement tk = prim;
    for (long k = 1; k < g; ++k) {
        AlgebraElement tkp1 = prim * tk - tkm1;
        tkm1 = std::move(tk);
        tk = std::move(tkp1);
    }
    return tk;
}

} // namespace qweyl
