#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qweyl/algebra.hpp"

namespace qweyl {

/**
 * A function Lambda -> LaurentQ evaluated on demand. Evaluations are
 * memoized; the cache is safe under concurrent use (same key always maps
 * to the same value, so racing writes are idempotent).
 */
class LatticeFunction {
public:
    using Evaluator = std::function<LaurentQ(const Weight&)>;

    LatticeFunction(const RootData& rd, Evaluator ev)
        : rd_(rd), state_(std::make_shared<State>(std::move(ev))) {}

    static LatticeFunction zero(const RootData& rd) {
        return LatticeFunction(rd, [](const Weight&) { return LaurentQ(); });
    }
    /// Indicator of a single lattice point.
    static LatticeFunction delta(const RootData& rd, const Weight& mu);

    const RootData& root_data() const { return rd_; }

    LaurentQ eval(const Weight& lambda) const;
    /// Rank-1 convenience.
    LaurentQ eval(long long lambda) const { return eval(rd_.from_int(lambda)); }

private:
    struct State {
        explicit State(Evaluator e) : ev(std::move(e)) {}
        Evaluator ev;
        std::map<Weight, LaurentQ> memo;
        std::mutex mu;
    };
    RootData rd_;
    std::shared_ptr<State> state_;
};

/// Operator action: (c Q_a E_b) f (lambda) = c q^{(a,lambda)} f(lambda+b),
/// summed over the terms of x.
LaurentQ apply(const AlgebraElement& x, const LatticeFunction& f, const Weight& lambda);
LaurentQ apply(const AlgebraElement& x, const LatticeFunction& f, long long lambda);

/// The lattice function x.f (memoized like any other).
LatticeFunction apply_op(const AlgebraElement& x, const LatticeFunction& f);

/**
 * Quantum dimension function of the unknot: the Weyl-group character sum
 *   J(lambda) = sum_w sgn(w) q^{(lambda, w rho)} / sum_w sgn(w) q^{(rho, w rho)},
 * an exact quotient in LaurentQ (std::logic_error on division failure).
 */
LatticeFunction unknot_j(const RootData& rd);

struct CheckReport {
    bool pass = true;
    long checked = 0;
    std::vector<std::string> witnesses; // first few failures, human-readable

    void fail(const std::string& w) {
        pass = false;
        if (witnesses.size() < 8) witnesses.push_back(w);
    }
};

/// Verifies f(w.lambda) = sgn(w) f(lambda) on the window of the given radius.
CheckReport equivariance_check(const LatticeFunction& f, int radius);

/// Verifies that every generator annihilates f on the window; reports the
/// first counterexamples with their nonzero values.
CheckReport annihilation_check(const std::vector<AlgebraElement>& gens,
                               const LatticeFunction& f, int radius);

/// Default annihilation window per lattice rank.
int default_radius(const RootData& rd);

} // namespace qweyl
