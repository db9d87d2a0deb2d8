#include "qweyl/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qweyl {

void LaurentQ::add_term(const Rat& exp, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

long LaurentQ::denom() const {
    mpz_class d(1);
    for (const auto& [e, c] : terms_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_den_mpz_t());
    if (!d.fits_slong_p()) throw std::domain_error("LaurentQ::denom: overflow");
    return d.get_si();
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentQ operator-(const LaurentQ& a) {
    LaurentQ r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentQ operator*(const Rat& s, const LaurentQ& a) {
    LaurentQ r;
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
}

Rat LaurentQ::eval_q1() const {
    Rat s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentQ LaurentQ::bar() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

HJet LaurentQ::h_jet() const {
    HJet j{Rat(0), Rat(0)};
    for (const auto& [e, c] : terms_) {
        j.c0 += c;
        j.c1 += c * e;
    }
    return j;
}

LaurentQ LaurentQ::monomial_inverse() const {
    if (terms_.size() != 1)
        throw std::domain_error("monomial_inverse: value is not a single term");
    const auto& [e, c] = *terms_.begin();
    return monomial(Rat(1) / c, -e);
}

LaurentQ LaurentQ::pow(long k) const {
    if (k < 0) return monomial_inverse().pow(-k);
    LaurentQ r(1);
    LaurentQ base = *this;
    long m = k;
    while (m > 0) {
        if (m & 1) r *= base;
        base *= base;
        m >>= 1;
    }
    return r;
}

// Exact division as dense univariate division in t = q^{1/L}, where L is a
// common denominator of all exponents involved. If the quotient exists it
// has exponents in [min(num)-min(den), max(num)-max(den)]; once the leading
// shift falls below that window the division is inexact.
LaurentQ LaurentQ::div_exact(const LaurentQ& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("div_exact: division by zero");
    if (is_zero()) return LaurentQ();

    long L = lcm_long(denom(), divisor.denom());

    auto scaled = [L](const TermMap& m) {
        std::map<long, Rat> out;
        for (const auto& [e, c] : m) out.emplace(to_long(Rat(e * L)), c);
        return out;
    };
    std::map<long, Rat> num = scaled(terms_);
    const std::map<long, Rat> den = scaled(divisor.terms_);

    const long dlead = den.rbegin()->first;
    const Rat& dcoef = den.rbegin()->second;
    const long shift_min = num.begin()->first - den.begin()->first;

    LaurentQ quot;
    while (!num.empty()) {
        const long shift = num.rbegin()->first - dlead;
        if (shift < shift_min) throw std::domain_error("div_exact: inexact division");
        Rat factor = num.rbegin()->second / dcoef;
        quot.add_term(make_rat(shift, L), factor);
        for (const auto& [e, c] : den) {
            long k = e + shift;
            auto it = num.find(k);
            if (it == num.end()) {
                num.emplace(k, -factor * c);
            } else {
                it->second -= factor * c;
                if (it->second == 0) num.erase(it);
            }
        }
    }
    return quot;
}

LaurentQ quantum_integer(long n) {
    if (n == 0) return LaurentQ();
    if (n < 0) return -quantum_integer(-n);
    // [n] = q^{(n-1)/2} + q^{(n-3)/2} + ... + q^{-(n-1)/2}
    LaurentQ r;
    for (long k = 0; k < n; ++k) r += LaurentQ::q_power(make_rat(n - 1 - 2 * k, 2));
    return r;
}

std::string LaurentQ::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponents
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& e = it->first;
        Rat c = it->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (e == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            if (e == 1) {
                os << "q";
            } else {
                os << "q^{" << e.get_str() << "}";
            }
        }
    }
    return os.str();
}

} // namespace qweyl
