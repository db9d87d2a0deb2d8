#pragma once

#include <map>
#include <string>
#include <vector>

#include "qweyl/rat.hpp"

namespace qweyl {

/// First-order jet of a Laurent polynomial under q = e^h: value and
/// derivative coefficient mod h^2. Forms the ring of dual numbers.
struct HJet {
    Rat c0; // value at h = 0
    Rat c1; // coefficient of h

    friend HJet operator+(const HJet& a, const HJet& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend HJet operator*(const HJet& a, const HJet& b) {
        return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0};
    }
    friend bool operator==(const HJet& a, const HJet& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
    friend bool operator!=(const HJet& a, const HJet& b) { return !(a == b); }
};

/**
 * Laurent polynomial in q^{1/D} with rational coefficients, D a positive
 * integer depending on the value. Exponents are exact rationals; the term
 * map is canonical (no zero coefficients), so equality of values is
 * equality of maps.
 */
class LaurentQ {
public:
    using TermMap = std::map<Rat, Rat>; // exponent -> nonzero coefficient

    LaurentQ() = default;
    LaurentQ(long c) { if (c != 0) terms_[Rat(0)] = Rat(c); }
    LaurentQ(const Rat& c) { if (c != 0) terms_[Rat(0)] = c; }

    /// c * q^e
    static LaurentQ monomial(const Rat& coeff, const Rat& exp) {
        LaurentQ r;
        if (coeff != 0) r.terms_[exp] = coeff;
        return r;
    }
    static LaurentQ q_power(const Rat& exp) { return monomial(Rat(1), exp); }
    static LaurentQ q_power(long num, long den) { return q_power(make_rat(num, den)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    /// True if the value is c*q^e for a single term (or zero).
    bool is_monomial() const { return terms_.size() <= 1; }

    const TermMap& terms() const { return terms_; }

    /// Coefficient of q^e (zero if absent).
    Rat coeff(const Rat& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Smallest positive integer D with D*e integral for every exponent e.
    long denom() const;

    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { a += b; return a; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { a -= b; return a; }
    friend LaurentQ operator-(const LaurentQ& a);
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    LaurentQ& operator*=(const LaurentQ& o) { *this = *this * o; return *this; }
    friend LaurentQ operator*(const Rat& s, const LaurentQ& a);
    friend LaurentQ operator*(const LaurentQ& a, const Rat& s) { return s * a; }

    friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }
    /// Map-lexicographic order; used only as a container key order.
    friend bool operator<(const LaurentQ& a, const LaurentQ& b) { return a.terms_ < b.terms_; }

    /// Sum of coefficients: evaluation at q = 1.
    Rat eval_q1() const;

    /// q -> q^{-1}: negates every exponent. Ring involution.
    LaurentQ bar() const;

    /// Expansion mod h^2 under q = e^h:  q^e = 1 + e h.
    HJet h_jet() const;

    /// Exact quotient; throws std::domain_error if the division leaves a
    /// remainder or the divisor is zero.
    LaurentQ div_exact(const LaurentQ& divisor) const;

    /// Inverse of a single-term value c*q^e.
    LaurentQ monomial_inverse() const;

    LaurentQ pow(long k) const;

    std::string str() const;
    static LaurentQ parse(const std::string& text);

private:
    TermMap terms_;
    void add_term(const Rat& exp, const Rat& coeff);
};

/// [n] = (q^{n/2} - q^{-n/2})/(q^{1/2} - q^{-1/2}), with [0] = 0 and
/// [-n] = -[n].
LaurentQ quantum_integer(long n);

inline Rat eval_q1(const LaurentQ& x) { return x.eval_q1(); }
inline LaurentQ bar(const LaurentQ& x) { return x.bar(); }
inline HJet h_jet(const LaurentQ& x) { return x.h_jet(); }

} // namespace qweyl
