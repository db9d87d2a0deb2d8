#include "qweyl/knots.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qweyl {

namespace {

RootData sl2() { return RootData::parse("sl2"); }

AlgebraElement E(const RootData& rd, long k) { return AlgebraElement::e_pow(rd, k); }
AlgebraElement Q(const RootData& rd, long k) { return AlgebraElement::q_pow(rd, k); }
LaurentQ qp(long num, long den) { return LaurentQ::q_power(num, den); }

} // namespace

KnotPreset unknot_preset() {
    RootData rd = sl2();
    AlgebraElement g1 =
        E(rd, 1) + E(rd, -1) - (qp(1, 2) + qp(-1, 2)) * AlgebraElement::unit(rd);
    AlgebraElement g2 = E(rd, 1) * Q(rd, 1) + E(rd, -1) * Q(rd, -1) -
                        qp(1, 1) * (Q(rd, 1) + Q(rd, -1));
    return KnotPreset{"unknot", rd, {g1, g2},
                      "skein presentation of the unknot peripheral ideal"};
}

std::vector<AlgebraElement> trefoil_left_generators_curve() {
    RootData rd = sl2();
    auto c = [&](long p, long q) { return curve_element(rd, p, q); };
    auto t = [&](long k) { return qp(k, 4); };
    AlgebraElement one = AlgebraElement::unit(rd);

    AlgebraElement k1 = c(1, -5) - t(-8) * c(1, -1) + t(-3) * c(0, 5) - t(1) * c(0, 1);
    AlgebraElement k2 = c(2, -6) - (t(6) + t(-6)) * c(1, 0) + (t(4) + t(-4)) * c(1, -6) +
                        c(0, 6) - (LaurentQ(2) * (t(4) + t(-4))) * one;
    AlgebraElement k3 = c(2, -7) + t(-5) * c(1, -7) + (t(-5) - t(-1)) * c(1, -3) -
                        t(5) * c(1, -1) + (t(2) - t(-2)) * c(0, 3) - t(-6) * c(0, 1);
    return {k1, k2, k3};
}

std::vector<AlgebraElement> trefoil_left_generators_literal(const Rat& e1, const Rat& e2) {
    RootData rd = sl2();
    auto pair_term = [&](long a, long b) { // E^a Q^b + E^{-a} Q^{-b}, products
        return E(rd, a) * Q(rd, b) + E(rd, -a) * Q(rd, -b);
    };
    AlgebraElement one = AlgebraElement::unit(rd);

    AlgebraElement g1 = qp(5, 4) * pair_term(1, -5) - qp(-7, 4) * pair_term(1, -1) -
                        qp(-3, 4) * pair_term(0, 5) + qp(1, 4) * pair_term(0, 1);
    AlgebraElement g2 = qp(3, 1) * pair_term(2, -6) + (qp(3, 2) + qp(-3, 2)) * pair_term(1, 0) -
                        (LaurentQ::q_power(e1) + LaurentQ::q_power(e2)) * pair_term(1, -6) +
                        pair_term(0, 6) - (LaurentQ(2) * (qp(1, 1) + qp(-1, 1))) * one;
    AlgebraElement g3 = -qp(-7, 2) * pair_term(2, -7) + qp(-3, 1) * pair_term(1, -7) +
                        (qp(-2, 1) - qp(-1, 1)) * pair_term(1, -3) - qp(1, 1) * pair_term(1, -1) -
                        (qp(1, 2) - qp(-1, 2)) * pair_term(0, 3) + qp(-3, 2) * pair_term(0, 1);
    return {g1, g2, g3};
}

// ---------------------------------------------------------------------------
// R-matrix braid closure

namespace {

// Coefficients of the braiding (flip o R) on V_n (x) V_n in the weight basis
// m_0..m_{n-1}:  K m_j = v^{n-1-2j} m_j,  E m_j = [j] m_{j-1},
// F m_j = [n-1-j] m_{j+1},  v = q^{1/2},
//   R = v^{wt (x) wt / 2} sum_k v^{k(k-1)/2} (v-v^{-1})^k / [k]! E^k (x) F^k.
// sigma(m_i (x) m_j) = sum_k C_k(i,j) m_{j+k} (x) m_{i-k}; the flip makes the
// total basis index i+j an invariant of sigma.
LaurentQ braiding_coeff(int n, int i, int j, int k) {
    auto wt = [n](int a) { return n - 1 - 2 * a; };
    LaurentQ vdiff = qp(1, 2) - qp(-1, 2);
    LaurentQ efprod(1), kfact(1), vpow_k(1);
    for (int s = 1; s <= k; ++s) {
        efprod *= quantum_integer(i - s + 1) * quantum_integer(n - j - s);
        kfact *= quantum_integer(s);
        vpow_k *= vdiff;
    }
    LaurentQ coeff = qp((long)wt(i - k) * wt(j + k), 4) * qp((long)k * (k - 1), 4) *
                     vpow_k * efprod;
    return coeff.div_exact(kfact);
}

// Dense integer Laurent polynomial in t = q^{1/4}. All braiding
// coefficients and closure traces are integral in t, which keeps the
// heavy matrix arithmetic in machine integers.
struct QuarterPoly {
    int lo = 0;                 // exponent (in quarter units) of c[0]
    std::vector<__int128> c;

    bool zero() const { return c.empty(); }

    void trim() {
        size_t a = 0, b = c.size();
        while (b > a && c[b - 1] == 0) --b;
        while (a < b && c[a] == 0) ++a;
        if (a > 0 || b < c.size()) {
            c = std::vector<__int128>(c.begin() + a, c.begin() + b);
            lo += (int)a;
        }
    }

    static QuarterPoly from_laurent(const LaurentQ& x) {
        QuarterPoly p;
        if (x.is_zero()) return p;
        long min_idx = 0, max_idx = 0;
        bool first = true;
        for (const auto& [e, coef] : x.terms()) {
            Rat idx = e * 4;
            if (!is_integer(idx) || !is_integer(coef))
                throw std::logic_error("QuarterPoly: value is not integral in q^{1/4}");
            long i = to_long(idx);
            if (first || i < min_idx) min_idx = i;
            if (first || i > max_idx) max_idx = i;
            first = false;
        }
        p.lo = (int)min_idx;
        p.c.assign(max_idx - min_idx + 1, 0);
        for (const auto& [e, coef] : x.terms())
            p.c[to_long(Rat(e * 4)) - min_idx] = to_long(coef);
        return p;
    }

    LaurentQ to_laurent() const {
        LaurentQ out;
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            __int128 v = c[i];
            bool neg = v < 0;
            if (neg) v = -v;
            mpz_class m;
            mpz_class hi((unsigned long)(unsigned __int128)(((unsigned __int128)v) >> 64));
            mpz_class lo64((unsigned long)(unsigned __int128)v);
            m = hi;
            m <<= 64;
            m += lo64;
            if (neg) m = -m;
            out += LaurentQ::monomial(Rat(m), make_rat((long)(lo + (long)i), 4));
        }
        return out;
    }

    QuarterPoly& operator+=(const QuarterPoly& o) {
        if (o.zero()) return *this;
        if (zero()) { *this = o; return *this; }
        int nlo = std::min(lo, o.lo);
        int nhi = std::max(lo + (int)c.size(), o.lo + (int)o.c.size());
        std::vector<__int128> nc(nhi - nlo, 0);
        for (size_t i = 0; i < c.size(); ++i) nc[lo - nlo + i] = c[i];
        for (size_t i = 0; i < o.c.size(); ++i) {
            __int128 r;
            if (__builtin_add_overflow(nc[o.lo - nlo + i], o.c[i], &r))
                throw std::overflow_error("QuarterPoly: addition overflow");
            nc[o.lo - nlo + i] = r;
        }
        lo = nlo;
        c = std::move(nc);
        trim();
        return *this;
    }

    friend QuarterPoly operator*(const QuarterPoly& a, const QuarterPoly& b) {
        QuarterPoly r;
        if (a.zero() || b.zero()) return r;
        r.lo = a.lo + b.lo;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) {
                if (b.c[j] == 0) continue;
                __int128 prod, sum;
                if (__builtin_mul_overflow(a.c[i], b.c[j], &prod) ||
                    __builtin_add_overflow(r.c[i + j], prod, &sum))
                    throw std::overflow_error("QuarterPoly: multiplication overflow");
                r.c[i + j] = sum;
            }
        }
        r.trim();
        return r;
    }
};

// Trace of (K^{-1} (x) K^{-1}) sigma^power over V_n (x) V_n, computed layer
// by layer: sigma preserves the total basis index S = i + j, so the trace
// splits into small matrix powers.
LaurentQ closure_trace_dense(int n, int power) {
    QuarterPoly total;
    for (int S = 0; S <= 2 * (n - 1); ++S) {
        int i_min = std::max(0, S - (n - 1));
        int i_max = std::min(n - 1, S);
        int s = i_max - i_min + 1;
        // M[row][col]: sigma(m_i (x) m_{S-i}) with i = i_min+col lands on
        // row index j+k = i_min+row of the same layer.
        std::vector<std::vector<QuarterPoly>> M(s, std::vector<QuarterPoly>(s));
        for (int col = 0; col < s; ++col) {
            int i = i_min + col, j = S - i;
            for (int k = 0; k <= std::min(i, n - 1 - j); ++k) {
                int row = (j + k) - i_min;
                M[row][col] = QuarterPoly::from_laurent(braiding_coeff(n, i, j, k));
            }
        }
        // P = M^{power-1}, then tr(W M^power) = sum_a W_a sum_c P_{a c} M_{c a}
        std::vector<std::vector<QuarterPoly>> P(s, std::vector<QuarterPoly>(s));
        for (int a = 0; a < s; ++a) P[a][a] = QuarterPoly::from_laurent(LaurentQ(1));
        for (int step = 0; step + 1 < power; ++step) {
            std::vector<std::vector<QuarterPoly>> next(s, std::vector<QuarterPoly>(s));
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b)
                    for (int d = 0; d < s; ++d) {
                        if (P[a][d].zero() || M[d][b].zero()) continue;
                        next[a][b] += P[a][d] * M[d][b];
                    }
            P = std::move(next);
        }
        for (int a = 0; a < s; ++a) {
            int i = i_min + a;
            long wts = (long)(n - 1 - 2 * i) + (n - 1 - 2 * (S - i));
            QuarterPoly weight = QuarterPoly::from_laurent(qp(-wts, 2));
            QuarterPoly diag;
            if (power == 0) {
                diag = QuarterPoly::from_laurent(LaurentQ(1));
            } else {
                for (int d = 0; d < s; ++d) {
                    if (P[a][d].zero() || M[d][a].zero()) continue;
                    diag += P[a][d] * M[d][a];
                }
            }
            total += weight * diag;
        }
    }
    return total.to_laurent();
}

} // namespace

LaurentQ torus2_closure_invariant(int color, int power) {
    if (color < 1) throw std::invalid_argument("torus2_closure_invariant: color >= 1");
    if (power < 0) throw std::invalid_argument("torus2_closure_invariant: power >= 0");
    return closure_trace_dense(color, power);
}

// Reference implementation: sparse application of sigma to every basis
// vector with full rational arithmetic. Used to cross-check the dense
// layer computation.
LaurentQ torus2_closure_invariant_reference(int color, int power) {
    if (color < 1) throw std::invalid_argument("torus2_closure_invariant: color >= 1");
    using TensorVec = std::map<std::pair<int, int>, LaurentQ>;
    auto act = [color](const TensorVec& in) {
        TensorVec out;
        for (const auto& [ij, c] : in) {
            int i = ij.first, j = ij.second;
            for (int k = 0; k <= std::min(i, color - 1 - j); ++k) {
                LaurentQ add = c * braiding_coeff(color, i, j, k);
                if (add.is_zero()) continue;
                auto key = std::make_pair(j + k, i - k);
                auto it = out.find(key);
                if (it == out.end()) {
                    out.emplace(key, std::move(add));
                } else {
                    it->second += add;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    };
    LaurentQ total;
    for (int i = 0; i < color; ++i) {
        for (int j = 0; j < color; ++j) {
            TensorVec v;
            v[{i, j}] = LaurentQ(1);
            for (int p = 0; p < power; ++p) v = act(v);
            auto it = v.find({i, j});
            if (it == v.end()) continue;
            long wts = (long)(color - 1 - 2 * i) + (color - 1 - 2 * j);
            total += qp(-wts, 2) * it->second;
        }
    }
    return total;
}

LaurentQ torus2_twist(int color) {
    LaurentQ framed = torus2_closure_invariant(color, 1);
    LaurentQ theta = framed.div_exact(quantum_integer(color));
    if (!theta.is_monomial() || theta.is_zero())
        throw std::logic_error("torus2_twist: twist is not a monomial");
    return theta;
}

namespace {

// Zero-framed closure of sigma^3 and the twist, cached per color: these are
// the framing-independent parts shared by every oracle instance.
struct OracleCache {
    std::map<int, std::pair<LaurentQ, LaurentQ>> data; // color -> (J0, theta)
    std::mutex mu;

    std::pair<LaurentQ, LaurentQ> get(int n) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = data.find(n);
            if (it != data.end()) return it->second;
        }
        LaurentQ theta = torus2_twist(n);
        LaurentQ zero_framed =
            torus2_closure_invariant(n, 3) * theta.monomial_inverse().pow(3);
        std::lock_guard<std::mutex> lock(mu);
        return data.emplace(n, std::make_pair(zero_framed, theta)).first->second;
    }
};

OracleCache& oracle_cache() {
    static OracleCache cache;
    return cache;
}

} // namespace

// Pinned by resolve_trefoil_generators: the zero-framed oracle is
// annihilated by the built-in generators as-is.
const int kTrefoilFramingShift = 0;

LatticeFunction trefoil_colored_jones_oracle(Chirality c, int framing_shift) {
    RootData rd = sl2();
    return LatticeFunction(rd, [rd, c, framing_shift](const Weight& lambda) {
        long long lam = rd.to_int(lambda);
        if (lam == 0) return LaurentQ();
        long sign = lam > 0 ? 1 : -1;
        int n = (int)(lam > 0 ? lam : -lam);
        auto [zero_framed, theta] = oracle_cache().get(n);
        LaurentQ shifted = zero_framed * theta.pow(framing_shift);
        if (c == Chirality::left) shifted = shifted.bar();
        return Rat(sign) * shifted;
    });
}

KnotPreset trefoil_preset(Chirality c) {
    std::vector<AlgebraElement> gens = trefoil_left_generators_curve();
    if (c == Chirality::right)
        for (auto& g : gens) g = mirror(g);
    return KnotPreset{c == Chirality::left ? "trefoil-left" : "trefoil-right", sl2(),
                      std::move(gens),
                      "torus-curve expansion of the trefoil peripheral ideal"};
}

KnotPreset knot_preset(const std::string& name) {
    if (name == "unknot") return unknot_preset();
    if (name == "trefoil-left") return trefoil_preset(Chirality::left);
    if (name == "trefoil-right") return trefoil_preset(Chirality::right);
    throw std::invalid_argument("unknown knot preset '" + name + "'");
}

TrefoilResolution resolve_trefoil_generators(int lambda_max) {
    TrefoilResolution res;
    RootData rd = sl2();

    struct Candidate {
        std::string label;
        std::vector<AlgebraElement> gens;
    };
    std::vector<Candidate> candidates;
    candidates.push_back({"curve", trefoil_left_generators_curve()});
    for (const char* e1 : {"1/2", "3/2", "5/2", "3"}) {
        for (const char* e2 : {"-5/2", "5/2"}) {
            candidates.push_back({std::string("literal:e=") + e1 + ",e2=" + e2,
                                  trefoil_left_generators_literal(parse_rat(e1), parse_rat(e2))});
        }
    }

    for (const auto& cand : candidates) {
        for (Chirality side : {Chirality::left, Chirality::right}) {
            for (int f = -6; f <= 6; ++f) {
                LatticeFunction oracle = trefoil_colored_jones_oracle(side, f);
                bool ok = true;
                for (long long lam = 1; lam <= lambda_max && ok; ++lam)
                    for (const auto& g : cand.gens) {
                        if (!apply(g, oracle, lam).is_zero()) {
                            ok = false;
                            break;
                        }
                    }
                if (ok) {
                    std::ostringstream os;
                    os << cand.label << " annihilates the "
                       << (side == Chirality::left ? "left" : "right")
                       << " oracle at framing_shift=" << f;
                    res.log.push_back(os.str());
                    const bool main_side = side == Chirality::left;
                    if (res.found) {
                        if (main_side) res.unique = false;
                    } else if (main_side) {
                        res.found = true;
                        res.route = cand.label;
                        res.framing_shift = f;
                    }
                }
            }
        }
    }
    return res;
}

} // namespace qweyl
