#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/laurent.hpp"
#include "qweyl/rootdata.hpp"

namespace qweyl {

class CommPoly;

/**
 * Element of the quantum Weyl algebra of a root datum, stored in normal
 * form: a finite sum of terms c_{a,b} Q_a E_b with Laurent coefficients,
 * keyed by the canonical weight pair (a, b). Multiplication uses
 *   (Q_a E_b)(Q_c E_d) = q^{(b,c)} Q_{a+c} E_{b+d}.
 *
 * Normal form makes equality of elements equality of term maps; the
 * operators Q_a E_b act faithfully on lattice functions, so this is also
 * equality of operators.
 */
class AlgebraElement {
public:
    struct Key {
        Weight q_wt; // subscript of Q
        Weight e_wt; // subscript of E
        friend bool operator<(const Key& x, const Key& y) {
            if (x.q_wt != y.q_wt) return x.q_wt < y.q_wt;
            return x.e_wt < y.e_wt;
        }
        friend bool operator==(const Key& x, const Key& y) {
            return x.q_wt == y.q_wt && x.e_wt == y.e_wt;
        }
    };
    using TermMap = std::map<Key, LaurentQ>;

    explicit AlgebraElement(const RootData& rd) : rd_(rd) {}

    static AlgebraElement zero(const RootData& rd) { return AlgebraElement(rd); }
    static AlgebraElement unit(const RootData& rd);
    /// c * Q_a E_b (weights canonicalized).
    static AlgebraElement monomial(const RootData& rd, const Weight& a, const Weight& b,
                                   const LaurentQ& c);
    static AlgebraElement e_gen(const RootData& rd, const Weight& b);
    static AlgebraElement q_gen(const RootData& rd, const Weight& a);
    /// Rank-1 shorthand: E^k, Q^k for the lattice coordinate k.
    static AlgebraElement e_pow(const RootData& rd, long long k);
    static AlgebraElement q_pow(const RootData& rd, long long k);

    const RootData& root_data() const { return rd_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentQ coeff(const Weight& a, const Weight& b) const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { a += b; return a; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { a -= b; return a; }
    friend AlgebraElement operator-(const AlgebraElement& a);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement& operator*=(const AlgebraElement& o) { *this = *this * o; return *this; }
    friend AlgebraElement operator*(const LaurentQ& s, const AlgebraElement& a);
    AlgebraElement pow(long k) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.rd_ == b.rd_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    std::string str() const;

private:
    RootData rd_;
    TermMap terms_;
    void add_term(const Weight& a, const Weight& b, const LaurentQ& c);
    friend AlgebraElement weyl_act(const WeylElement&, const AlgebraElement&);
    friend AlgebraElement mirror(const AlgebraElement&);
};

/**
 * Element of the commutative group algebra of Lambda^2 with rational
 * coefficients: the classical limit. Monomials are written E^a Q^b with
 * (a, b) a pair of canonical weights.
 */
class CommPoly {
public:
    struct Key {
        Weight e_wt;
        Weight q_wt;
        friend bool operator<(const Key& x, const Key& y) {
            if (x.e_wt != y.e_wt) return x.e_wt < y.e_wt;
            return x.q_wt < y.q_wt;
        }
        friend bool operator==(const Key& x, const Key& y) {
            return x.e_wt == y.e_wt && x.q_wt == y.q_wt;
        }
    };
    using TermMap = std::map<Key, Rat>;

    explicit CommPoly(const RootData& rd) : rd_(rd) {}

    static CommPoly zero(const RootData& rd) { return CommPoly(rd); }
    static CommPoly unit(const RootData& rd) { return monomial(rd, rd.zero(), rd.zero(), Rat(1)); }
    static CommPoly monomial(const RootData& rd, const Weight& e_wt, const Weight& q_wt,
                             const Rat& c);

    const RootData& root_data() const { return rd_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Weight& e_wt, const Weight& q_wt) const;

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { a += b; return a; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { a -= b; return a; }
    friend CommPoly operator-(const CommPoly& a);
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    CommPoly& operator*=(const CommPoly& o) { *this = *this * o; return *this; }
    friend CommPoly operator*(const Rat& s, const CommPoly& a);

    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        return a.rd_ == b.rd_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

    /// E -> E, Q -> Q^{-1} substitution (used by the mirror A-ideals).
    CommPoly invert_q() const;

    /// Exact evaluation at nonzero rational (E, Q); rank-1 lattices only.
    Rat eval_point(const Rat& e_val, const Rat& q_val) const;

    std::string str() const;

private:
    RootData rd_;
    TermMap terms_;
    void add_term(const Weight& e_wt, const Weight& q_wt, const Rat& c);
    friend CommPoly weyl_act(const WeylElement&, const CommPoly&);
};

AlgebraElement weyl_act(const WeylElement& w, const AlgebraElement& x);
CommPoly weyl_act(const WeylElement& w, const CommPoly& x);

/// Sum of w.x over the full Weyl group.
AlgebraElement symmetrize(const AlgebraElement& x);
CommPoly symmetrize(const CommPoly& x);

/// Checks w.x == x for every Weyl group generator.
bool is_invariant(const AlgebraElement& x);
bool is_invariant(const CommPoly& x);

/// Evaluation q = 1: coefficient-wise eval_q1, Q_a E_b -> E^b Q^a.
CommPoly epsilon(const AlgebraElement& x);

/**
 * First-order Poisson bracket: the commutator xy - yx expanded with
 * q = e^h has every coefficient divisible by h; the bracket is the
 * h-linear layer. Throws std::logic_error if some constant layer is
 * nonzero (which would signal an arithmetic bug, not bad input).
 */
CommPoly poisson(const AlgebraElement& x, const AlgebraElement& y);
/// Bracket on classical classes, computed through monomial lifts.
CommPoly poisson(const CommPoly& x, const CommPoly& y);
/// The monomial lift used by the CommPoly overload: (a,b) -> Q_b E_a... see impl.
AlgebraElement lift(const CommPoly& x);

/**
 * Normal-ordered preimage of the trace function tau_{a,b}:
 *   sl(n):  sum_i E_i^a Q_i^b,
 *   sp/so:  sum_i (E_i^a Q_i^b + E_i^{-a} Q_i^{-b}),
 * with E^a Q^b meaning the algebra product, re-ordered on construction.
 */
AlgebraElement tau_lift(const RootData& rd, long a, long b);

/// Q -> Q^{-1}, q -> q^{-1} (a bar-semilinear ring map); involution.
AlgebraElement mirror(const AlgebraElement& x);

/**
 * Torus-curve element of the rank-1 algebra: for coprime (p,q) the element
 * (-1)^{p+q} q^{-pq/4} (E^p Q^q + E^{-p} Q^{-q}) (products), and T_g of the
 * primitive class when gcd(p,q) = g > 1, via the Chebyshev recursion
 * T_0 = 2, T_1 = x, T_{k+1} = x T_k - T_{k-1}.
 */
AlgebraElement curve_element(const RootData& rd, long p, long q);

} // namespace qweyl
