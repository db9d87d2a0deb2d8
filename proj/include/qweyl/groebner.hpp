#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweyl/algebra.hpp"

namespace qweyl {

/// Raised when a computation hits its resource guard. Callers must treat
/// this as "no answer", never as a membership verdict.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Monomials in the variables (e, E, u, U, t): e and E present the Laurent
 * variable pair with relation eE = 1, likewise u, U; t is the Rabinowitsch
 * variable for radical membership.
 */
constexpr int kNumVars = 5;
using Mono = std::array<int, kNumVars>;

int total_degree(const Mono& m);
/// Graded reverse lexicographic order.
bool grevlex_less(const Mono& a, const Mono& b);

struct GrevlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_less(b, a); }
};

/// Polynomial over the rationals with grevlex-leading term first.
class MultiPoly {
public:
    using TermMap = std::map<Mono, Rat, GrevlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(const Rat& c);
    static MultiPoly monomial(const Mono& m, const Rat& c);
    static MultiPoly variable(int idx);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    const Mono& leading_mono() const;
    const Rat& leading_coeff() const;
    int degree() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rat& s, const MultiPoly& a);
    /// a * c x^m
    MultiPoly times_term(const Mono& m, const Rat& c) const;
    MultiPoly monic() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string str() const;

private:
    TermMap terms_;
    void add_term(const Mono& m, const Rat& c);
};

struct GroebnerGuards {
    size_t max_basis = 20000;
    int max_degree = 200;
    long max_steps = 500000;
    /// Reads QWEYL_GUARD_STEPS when set.
    static GroebnerGuards from_env();
};

/// Remainder of p on division by the list (fully reduced tail).
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

/// Buchberger with product criterion; returns the reduced Groebner basis.
std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens, const GroebnerGuards& guards);

/// Rank-1 Laurent monomials E^a Q^b encoded as e/E/u/U monomials.
MultiPoly encode_comm(const CommPoly& p);
/// Inverse on the image of encode_comm (and on any representative:
/// exponents of each variable pair are subtracted). Rejects t.
CommPoly decode_comm(const MultiPoly& p, const RootData& rd);

/**
 * Finitely generated ideal of the rank-1 Laurent ring, presented by
 * doubling variables with unit relations. The Groebner basis (of the
 * encoded ideal together with eE-1, uU-1) is computed once on demand.
 */
class LaurentIdeal {
public:
    explicit LaurentIdeal(std::vector<CommPoly> gens);

    const std::vector<CommPoly>& generators() const { return gens_; }
    const RootData& root_data() const { return rd_; }

    /// Computes (or returns) the reduced basis. Throws GuardExceeded.
    const std::vector<MultiPoly>& basis(const GroebnerGuards& guards = GroebnerGuards::from_env()) const;
    bool basis_computed() const { return basis_.has_value(); }

private:
    RootData rd_;
    std::vector<CommPoly> gens_;
    mutable std::optional<std::vector<MultiPoly>> basis_;
};

/// Normal form of p against the ideal's basis is zero.
bool member(const CommPoly& p, const LaurentIdeal& ideal,
            const GroebnerGuards& guards = GroebnerGuards::from_env());

/// Rabinowitsch: 1 in ideal + (1 - t p).
bool radical_member(const CommPoly& p, const LaurentIdeal& ideal,
                    const GroebnerGuards& guards = GroebnerGuards::from_env());

/// Mutual membership of the generator lists.
bool same_ideal(const LaurentIdeal& a, const LaurentIdeal& b,
                const GroebnerGuards& guards = GroebnerGuards::from_env());

/// Exact values of the generators at a nonzero rational point (E, Q).
std::vector<Rat> point_probe(const std::vector<CommPoly>& gens, const Rat& e_val,
                             const Rat& q_val);

/// The classical A-ideals of the built-in knots:
/// "unknot", "trefoil-left", "trefoil-right".
LaurentIdeal a_ideal_preset(const std::string& knot);

/// w = E^{-1}Q^3 (E-1)(E Q^{-6}+1), the common factor of the trefoil A-ideal.
CommPoly trefoil_w_poly(const RootData& rd);

} // namespace qweyl
