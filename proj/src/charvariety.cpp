#include "qweyl/charvariety.hpp"

#include <thread>

namespace qweyl {

CommPoly tau_poly(const RootData& rd, long a, long b) { return epsilon(tau_lift(rd, a, b)); }

CommPoly goldman_bracket(const RootData& rd, const TorusTrace& t1, const TorusTrace& t2) {
    Rat det = Rat(t1.a) * Rat(t2.b) - Rat(t1.b) * Rat(t2.a);
    if (det == 0) return CommPoly::zero(rd);
    CommPoly sum = tau_poly(rd, t1.a + t2.a, t1.b + t2.b);
    if (rd.family() == Family::sl) {
        CommPoly prod = tau_poly(rd, t1.a, t1.b) * tau_poly(rd, t2.a, t2.b);
        return det * (sum - make_rat(1, rd.n()) * prod);
    }
    return det * (sum - tau_poly(rd, t1.a - t2.a, t1.b - t2.b));
}

BracketReport compare_brackets(const RootData& rd, int range, int workers) {
    BracketReport rep;
    rep.algebra = rd.name();
    rep.range = range;

    const long side = 2L * range + 1;
    const long total = side * side * side * side;
    rep.checked = total;

    struct Failure {
        long idx;
        BracketMismatch mm;
    };
    std::vector<std::vector<Failure>> partial;

    auto run_chunk = [&](long begin, long end, std::vector<Failure>& out) {
        for (long idx = begin; idx < end; ++idx) {
            long rest = idx;
            long a = rest % side - range; rest /= side;
            long b = rest % side - range; rest /= side;
            long c = rest % side - range; rest /= side;
            long d = rest - range;
            CommPoly lhs = poisson(tau_lift(rd, a, b), tau_lift(rd, c, d));
            CommPoly rhs = goldman_bracket(rd, TorusTrace{a, b}, TorusTrace{c, d});
            if (lhs != rhs)
                out.push_back({idx, {a, b, c, d, lhs.str(), rhs.str()}});
        }
    };

    int nw = workers;
    if (nw < 1) nw = 1;
    if ((long)nw > total) nw = (int)total;
    partial.resize(nw);
    if (nw == 1) {
        run_chunk(0, total, partial[0]);
    } else {
        std::vector<std::thread> threads;
        long chunk = (total + nw - 1) / nw;
        for (int w = 0; w < nw; ++w) {
            long begin = w * chunk, end = std::min(total, begin + chunk);
            threads.emplace_back(run_chunk, begin, end, std::ref(partial[w]));
        }
        for (auto& t : threads) t.join();
    }
    for (const auto& chunk : partial)
        for (const auto& f : chunk) {
            rep.pass = false;
            if (rep.failures.size() < 16) rep.failures.push_back(f.mm);
        }
    return rep;
}

} // namespace qweyl
