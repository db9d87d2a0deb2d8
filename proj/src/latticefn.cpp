#include "qweyl/latticefn.hpp"

#include <sstream>

namespace qweyl {

LatticeFunction LatticeFunction::delta(const RootData& rd, const Weight& mu) {
    Weight m = rd.canonical(mu);
    return LatticeFunction(rd, [rd, m](const Weight& lambda) {
        return rd.canonical(lambda) == m ? LaurentQ(1) : LaurentQ();
    });
}

LaurentQ LatticeFunction::eval(const Weight& lambda) const {
    Weight key = rd_.canonical(lambda);
    {
        std::lock_guard<std::mutex> lock(state_->mu);
        auto it = state_->memo.find(key);
        if (it != state_->memo.end()) return it->second;
    }
    LaurentQ v = state_->ev(key);
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->memo.emplace(std::move(key), std::move(v)).first->second;
}

LaurentQ apply(const AlgebraElement& x, const LatticeFunction& f, const Weight& lambda) {
    if (x.root_data() != f.root_data())
        throw std::invalid_argument("apply: root datum mismatch");
    const RootData& rd = x.root_data();
    LaurentQ out;
    for (const auto& [k, c] : x.terms()) {
        Rat e = rd.pair(k.q_wt, lambda);
        out += c * LaurentQ::q_power(e) * f.eval(lambda + k.e_wt);
    }
    return out;
}

LaurentQ apply(const AlgebraElement& x, const LatticeFunction& f, long long lambda) {
    return apply(x, f, x.root_data().from_int(lambda));
}

LatticeFunction apply_op(const AlgebraElement& x, const LatticeFunction& f) {
    return LatticeFunction(f.root_data(),
                           [x, f](const Weight& lambda) { return apply(x, f, lambda); });
}

LatticeFunction unknot_j(const RootData& rd) {
    auto elements = std::make_shared<std::vector<WeylElement>>(weyl_elements(rd));
    // denominator: sum_w sgn(w) q^{(rho, w rho)}
    LaurentQ denom;
    for (const auto& w : *elements) {
        Rat e = rd.pair(rd.two_rho(), rd.act(w, rd.two_rho())) / 4;
        denom += Rat(w.sgn()) * LaurentQ::q_power(e);
    }
    if (denom.is_zero()) throw std::logic_error("unknot_j: vanishing Weyl denominator");
    return LatticeFunction(rd, [rd, elements, denom](const Weight& lambda) {
        LaurentQ num;
        for (const auto& w : *elements) {
            Rat e = rd.pair(lambda, rd.act(w, rd.two_rho())) / 2;
            num += Rat(w.sgn()) * LaurentQ::q_power(e);
        }
        try {
            return num.div_exact(denom);
        } catch (const std::domain_error&) {
            throw std::logic_error("unknot_j: Weyl denominator does not divide numerator at " +
                                   lambda.str());
        }
    });
}

CheckReport equivariance_check(const LatticeFunction& f, int radius) {
    const RootData& rd = f.root_data();
    auto ws = weyl_elements(rd);
    CheckReport rep;
    for (const Weight& lambda : weight_window(rd, radius)) {
        LaurentQ base = f.eval(lambda);
        for (const auto& w : ws) {
            ++rep.checked;
            LaurentQ lhs = f.eval(rd.act(w, lambda));
            LaurentQ rhs = Rat(w.sgn()) * base;
            if (lhs != rhs) {
                std::ostringstream os;
                os << "f(w." << lambda.str() << ") = " << lhs.str() << " but sgn(w)*f = "
                   << rhs.str();
                rep.fail(os.str());
            }
        }
    }
    return rep;
}

CheckReport annihilation_check(const std::vector<AlgebraElement>& gens,
                               const LatticeFunction& f, int radius) {
    CheckReport rep;
    const RootData& rd = f.root_data();
    auto window = weight_window(rd, radius);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        for (const Weight& lambda : window) {
            ++rep.checked;
            LaurentQ v = apply(gens[gi], f, lambda);
            if (!v.is_zero()) {
                std::ostringstream os;
                os << "generator " << gi + 1 << " at " << lambda.str() << " gives " << v.str();
                rep.fail(os.str());
            }
        }
    }
    return rep;
}

int default_radius(const RootData& rd) {
    // lattice rank 1 means sl2 or sp2
    bool rank1 = rd.rank() == 1 || (rd.family() == Family::sl && rd.n() == 2);
    return rank1 ? 20 : 6;
}

} // namespace qweyl
