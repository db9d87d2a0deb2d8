#include "qweyl/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "qweyl/expr.hpp"

namespace qweyl {

int total_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool grevlex_less(const Mono& a, const Mono& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // equal degree: a < b iff the rightmost nonzero entry of a-b is positive
    for (int i = kNumVars - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

static Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
    return r;
}

static bool mono_divides(const Mono& a, const Mono& b) { // a | b
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

static Mono mono_div(const Mono& a, const Mono& b) { // a / b
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
    return r;
}

static Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Mono{0, 0, 0, 0, 0}, c);
}

MultiPoly MultiPoly::monomial(const Mono& m, const Rat& c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

MultiPoly MultiPoly::variable(int idx) {
    Mono m{0, 0, 0, 0, 0};
    m[idx] = 1;
    return monomial(m, Rat(1));
}

const Mono& MultiPoly::leading_mono() const {
    if (terms_.empty()) throw std::logic_error("leading_mono of zero");
    return terms_.begin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero");
    return terms_.begin()->second;
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : total_degree(leading_mono()); }

void MultiPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

MultiPoly operator*(const Rat& s, const MultiPoly& a) {
    MultiPoly r;
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
    return r;
}

MultiPoly MultiPoly::times_term(const Mono& m, const Rat& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mono_mul(mm, m), c * cc);
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return (Rat(1) / leading_coeff()) * *this;
}

std::string MultiPoly::str() const {
    static const char* names[kNumVars] = {"e", "E", "u", "U", "t"};
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        bool constant = total_degree(m) == 0;
        if (v != 1 || constant) os << v.get_str() << (constant ? "" : "*");
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            os << names[i];
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// division and Buchberger

GroebnerGuards GroebnerGuards::from_env() {
    GroebnerGuards g;
    if (const char* env = std::getenv("QWEYL_GUARD_STEPS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) g.max_steps = v;
    }
    return g;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    MultiPoly rem;
    MultiPoly work = p;
    while (!work.is_zero()) {
        const Mono& lm = work.leading_mono();
        const Rat& lc = work.leading_coeff();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (mono_divides(g.leading_mono(), lm)) {
                work -= g.times_term(mono_div(lm, g.leading_mono()), lc / g.leading_coeff());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem += MultiPoly::monomial(lm, lc);
            work -= MultiPoly::monomial(lm, lc);
        }
    }
    return rem;
}

static MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    Mono l = mono_lcm(f.leading_mono(), g.leading_mono());
    MultiPoly a = f.times_term(mono_div(l, f.leading_mono()), Rat(1) / f.leading_coeff());
    MultiPoly b = g.times_term(mono_div(l, g.leading_mono()), Rat(1) / g.leading_coeff());
    return a - b;
}

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens, const GroebnerGuards& guards) {
    std::vector<MultiPoly> basis;
    for (auto& g : gens) {
        MultiPoly r = normal_form(g, basis);
        if (!r.is_zero()) basis.push_back(r.monic());
    }

    // pair queue ordered by lcm degree (normal selection)
    struct Pair {
        int deg;
        size_t i, j;
        bool operator<(const Pair& o) const {
            return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
        }
    };
    std::set<Pair> pairs;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i)
            pairs.insert(
                {total_degree(mono_lcm(basis[i].leading_mono(), basis[j].leading_mono())), i, j});
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    long steps = 0;
    while (!pairs.empty()) {
        if (++steps > guards.max_steps)
            throw GuardExceeded("groebner: step limit exceeded");
        Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const MultiPoly& f = basis[pr.i];
        const MultiPoly& g = basis[pr.j];
        // product criterion: coprime leading monomials reduce to zero
        if (mono_lcm(f.leading_mono(), g.leading_mono()) ==
            mono_mul(f.leading_mono(), g.leading_mono()))
            continue;
        MultiPoly s = normal_form(s_polynomial(f, g), basis);
        if (s.is_zero()) continue;
        if (s.degree() > guards.max_degree)
            throw GuardExceeded("groebner: degree limit exceeded");
        basis.push_back(s.monic());
        if (basis.size() > guards.max_basis)
            throw GuardExceeded("groebner: basis size limit exceeded");
        push_pairs_for(basis.size() - 1);
    }

    // reduce to the unique reduced basis: drop redundant leading terms,
    // then tail-reduce every element against the others
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mono_divides(basis[j].leading_mono(), basis[i].leading_mono())) {
                // break ties so exactly one of equal leading monomials survives
                if (basis[j].leading_mono() == basis[i].leading_mono())
                    redundant = j < i;
                else
                    redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return grevlex_less(a.leading_mono(), b.leading_mono());
    });
    return reduced;
}

// ---------------------------------------------------------------------------
// Laurent encoding

MultiPoly encode_comm(const CommPoly& p) {
    const RootData& rd = p.root_data();
    MultiPoly out;
    for (const auto& [k, c] : p.terms()) {
        long long a = rd.to_int(k.e_wt);
        long long b = rd.to_int(k.q_wt);
        Mono m{0, 0, 0, 0, 0};
        if (a >= 0) m[0] = (int)a; else m[1] = (int)-a;
        if (b >= 0) m[2] = (int)b; else m[3] = (int)-b;
        out += MultiPoly::monomial(m, c);
    }
    return out;
}

CommPoly decode_comm(const MultiPoly& p, const RootData& rd) {
    CommPoly out(rd);
    for (const auto& [m, c] : p.terms()) {
        if (m[4] != 0)
            throw std::invalid_argument("decode_comm: monomial contains the Rabinowitsch variable");
        out += CommPoly::monomial(rd, rd.from_int(m[0] - m[1]), rd.from_int(m[2] - m[3]), c);
    }
    return out;
}

static std::vector<MultiPoly> unit_relations() {
    // eE - 1, uU - 1
    MultiPoly r1 = MultiPoly::monomial(Mono{1, 1, 0, 0, 0}, Rat(1)) - MultiPoly(Rat(1));
    MultiPoly r2 = MultiPoly::monomial(Mono{0, 0, 1, 1, 0}, Rat(1)) - MultiPoly(Rat(1));
    return {r1, r2};
}

LaurentIdeal::LaurentIdeal(std::vector<CommPoly> gens)
    : rd_(gens.empty() ? RootData::parse("sl2") : gens.front().root_data()),
      gens_(std::move(gens)) {
    for (const auto& g : gens_)
        if (g.root_data() != rd_)
            throw std::invalid_argument("LaurentIdeal: mixed root data");
}

const std::vector<MultiPoly>& LaurentIdeal::basis(const GroebnerGuards& guards) const {
    if (!basis_) {
        std::vector<MultiPoly> input = unit_relations();
        for (const auto& g : gens_) input.push_back(encode_comm(g));
        basis_ = buchberger(std::move(input), guards);
    }
    return *basis_;
}

bool member(const CommPoly& p, const LaurentIdeal& ideal, const GroebnerGuards& guards) {
    return normal_form(encode_comm(p), ideal.basis(guards)).is_zero();
}

bool radical_member(const CommPoly& p, const LaurentIdeal& ideal, const GroebnerGuards& guards) {
    if (member(p, ideal, guards)) return true;
    std::vector<MultiPoly> input = unit_relations();
    for (const auto& g : ideal.generators()) input.push_back(encode_comm(g));
    // 1 - t p
    input.push_back(MultiPoly(Rat(1)) -
                    MultiPoly::variable(4) * encode_comm(p));
    auto basis = buchberger(std::move(input), guards);
    return normal_form(MultiPoly(Rat(1)), basis).is_zero();
}

bool same_ideal(const LaurentIdeal& a, const LaurentIdeal& b, const GroebnerGuards& guards) {
    for (const auto& g : a.generators())
        if (!member(g, b, guards)) return false;
    for (const auto& g : b.generators())
        if (!member(g, a, guards)) return false;
    return true;
}

std::vector<Rat> point_probe(const std::vector<CommPoly>& gens, const Rat& e_val,
                             const Rat& q_val) {
    std::vector<Rat> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.eval_point(e_val, q_val));
    return out;
}

CommPoly trefoil_w_poly(const RootData& rd) {
    return parse_comm_expr(rd, "E^{-1}Q^3(E - 1)(EQ^{-6} + 1)");
}

LaurentIdeal a_ideal_preset(const std::string& knot) {
    RootData rd = RootData::parse("sl2");
    if (knot == "unknot") {
        return LaurentIdeal({parse_comm_expr(rd, "E + E^{-1} - 2"),
                             parse_comm_expr(rd, "EQ + E^{-1}Q^{-1} - Q - Q^{-1}")});
    }
    if (knot == "trefoil-left" || knot == "trefoil-right") {
        CommPoly w = trefoil_w_poly(rd);
        std::vector<CommPoly> gens = {w * parse_comm_expr(rd, "Q - Q^{-1}"),
                                      w * parse_comm_expr(rd, "E - E^{-1}"),
                                      w * parse_comm_expr(rd, "EQ^{-1} - E^{-1}Q")};
        if (knot == "trefoil-right")
            for (auto& g : gens) g = g.invert_q();
        return LaurentIdeal(std::move(gens));
    }
    throw std::invalid_argument("unknown knot '" + knot + "'");
}

} // namespace qweyl
