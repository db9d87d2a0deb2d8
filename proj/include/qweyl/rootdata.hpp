#pragma once

#include <string>
#include <vector>

#include "qweyl/laurent.hpp"
#include "qweyl/rat.hpp"

namespace qweyl {

enum class Family { sl, sp, so_even, so_odd };

/// Lattice weight in the coordinates of its root datum: the redundant
/// alpha_1..alpha_n basis for sl(n) (defined modulo the all-ones vector),
/// the basis dual to H_1..H_n for sp/so.
struct Weight {
    std::vector<long long> c;

    Weight() = default;
    explicit Weight(std::vector<long long> v) : c(std::move(v)) {}

    size_t size() const { return c.size(); }

    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a);
    friend Weight operator*(long long k, const Weight& a);
    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

    bool is_zero() const;
    std::string str() const; // "[a1,...,an]"
};

/// Signed permutation: coordinate i of the image is flip[i] * x[perm[i]].
/// For sl families every flip is +1.
struct WeylElement {
    std::vector<int> perm;  // 0-based
    std::vector<int> flip;  // entries +1 / -1

    static WeylElement identity(int rank);
    bool is_identity() const;
    int sgn() const; // determinant: sign(perm) * prod(flip)
    WeylElement compose(const WeylElement& other) const; // this after other
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.perm == b.perm && a.flip == b.flip;
    }
};

/**
 * Root and weight-lattice data for one classical Lie algebra. Immutable
 * after construction; cheap to copy.
 *
 * Coordinates have length n for every family. For sl(n) the weight lattice
 * is Z^n modulo the all-ones vector and weights are canonicalized by
 * subtracting the minimum coordinate; the pairing (a,b) = sum a_i b_i -
 * (sum a)(sum b)/n is well defined on the quotient. For sp/so the lattice
 * is Z^n with the identity pairing.
 */
class RootData {
public:
    static RootData build(Family f, int n);
    /// Accepts "sl2", "sl3", "sp4", "so5", ... (the integer is the matrix size).
    static RootData parse(const std::string& name);

    Family family() const { return family_; }
    int n() const { return n_; }
    /// Coordinate rank: the length of weight vectors.
    int rank() const { return rank_; }
    /// Root-of-q denominator D(g).
    long D() const { return D_; }
    std::string name() const;

    Weight zero() const { return Weight(std::vector<long long>(rank_, 0)); }
    Weight basis_weight(int i, long long mult = 1) const; // canonical rep of mult*alpha_i

    /// Canonical representative (identity except for sl, which subtracts
    /// the minimum coordinate).
    Weight canonical(const Weight& w) const;
    bool equal_weights(const Weight& a, const Weight& b) const {
        return canonical(a) == canonical(b);
    }

    /// Dual Killing pairing; exact rational in (1/D)Z.
    Rat pair(const Weight& a, const Weight& b) const;
    Rat pairing_entry(int i, int j) const;

    /// Twice the half-sum of positive roots, as an integral weight.
    const Weight& two_rho() const { return two_rho_; }
    /// (a, rho), exact.
    Rat pair_rho(const Weight& a) const;

    Weight act(const WeylElement& w, const Weight& a) const;

    friend bool operator==(const RootData& a, const RootData& b) {
        return a.family_ == b.family_ && a.n_ == b.n_;
    }
    friend bool operator!=(const RootData& a, const RootData& b) { return !(a == b); }

    /// Rank-1 families (sl2, sp2): integer coordinate of a weight.
    long long to_int(const Weight& w) const;
    Weight from_int(long long k) const;

private:
    Family family_;
    int n_;
    int rank_;
    long D_;
    Weight two_rho_;

    RootData(Family f, int n);
    void check_rank(const Weight& w) const;
};

/// Full Weyl group; throws std::domain_error beyond 10^6 elements.
std::vector<WeylElement> weyl_elements(const RootData& rd);
/// A generating set (adjacent transpositions plus the family's sign flips).
std::vector<WeylElement> weyl_generators(const RootData& rd);
/// |W| without enumeration.
unsigned long long weyl_order(const RootData& rd);

/// All canonical weights with coordinates bounded by `radius`: for sl the
/// canonical box [0,r]^n with some zero coordinate, for sp/so [-r,r]^n.
std::vector<Weight> weight_window(const RootData& rd, int radius);

} // namespace qweyl
