#include "qweyl/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qweyl {

Weight operator+(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Weight: rank mismatch");
    Weight r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Weight: rank mismatch");
    Weight r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

Weight operator*(long long k, const Weight& a) {
    Weight r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

bool Weight::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << "]";
    return os.str();
}

WeylElement WeylElement::identity(int rank) {
    WeylElement e;
    e.perm.resize(rank);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.flip.assign(rank, 1);
    return e;
}

bool WeylElement::is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != (int)i || flip[i] != 1) return false;
    return true;
}

int WeylElement::sgn() const {
    int s = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    for (int f : flip)
        if (f < 0) s = -s;
    return s;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
    // (this o other): apply `other` first.
    if (perm.size() != other.perm.size())
        throw std::invalid_argument("WeylElement: rank mismatch");
    WeylElement r;
    size_t n = perm.size();
    r.perm.resize(n);
    r.flip.resize(n);
    // (w x)_i = flip_i x_{perm_i}; ((w1 w2) x)_i = w1.flip_i (w2 x)_{w1.perm_i}
    //         = w1.flip_i w2.flip_{w1.perm_i} x_{w2.perm_{w1.perm_i}}
    for (size_t i = 0; i < n; ++i) {
        r.perm[i] = other.perm[perm[i]];
        r.flip[i] = flip[i] * other.flip[perm[i]];
    }
    return r;
}

RootData::RootData(Family f, int n) : family_(f), n_(n) {
    switch (f) {
    case Family::sl:
        if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
        rank_ = n;
        D_ = n;
        // 2*rho = sum (n+1-2i) alpha_i, i = 1..n
        {
            std::vector<long long> r(n);
            for (int i = 1; i <= n; ++i) r[i - 1] = n + 1 - 2 * i;
            two_rho_ = Weight(std::move(r));
        }
        break;
    case Family::sp:
        if (n < 1) throw std::invalid_argument("sp(2n) needs n >= 1");
        rank_ = n;
        D_ = 1;
        {
            std::vector<long long> r(n);
            for (int i = 1; i <= n; ++i) r[i - 1] = 2 * (n - i + 1);
            two_rho_ = Weight(std::move(r));
        }
        break;
    case Family::so_odd: // so(2n+1)
        if (n < 1) throw std::invalid_argument("so(2n+1) needs n >= 1");
        rank_ = n;
        // so(4k+1) -> 1, so(4k+3) -> 2
        D_ = ((2 * n + 1) % 4 == 1) ? 1 : 2;
        {
            std::vector<long long> r(n);
            for (int i = 1; i <= n; ++i) r[i - 1] = 2 * (n - i) + 1;
            two_rho_ = Weight(std::move(r));
        }
        break;
    case Family::so_even: // so(2n)
        if (n < 2) throw std::invalid_argument("so(2n) needs n >= 2");
        rank_ = n;
        // so(4k) -> 2, so(4k+2) -> 4
        D_ = (n % 2 == 0) ? 2 : 4;
        {
            std::vector<long long> r(n);
            for (int i = 1; i <= n; ++i) r[i - 1] = 2 * (n - i);
            two_rho_ = Weight(std::move(r));
        }
        break;
    }
}

RootData RootData::build(Family f, int n) { return RootData(f, n); }

RootData RootData::parse(const std::string& name) {
    if (name.size() < 3) throw std::invalid_argument("unknown algebra '" + name + "'");
    std::string fam = name.substr(0, 2);
    int m = 0;
    try {
        m = std::stoi(name.substr(2));
    } catch (...) {
        throw std::invalid_argument("unknown algebra '" + name + "'");
    }
    if (fam == "sl") return build(Family::sl, m);
    if (fam == "sp") {
        if (m % 2 != 0) throw std::invalid_argument("sp needs even matrix size: '" + name + "'");
        return build(Family::sp, m / 2);
    }
    if (fam == "so") {
        if (m % 2 == 0) return build(Family::so_even, m / 2);
        return build(Family::so_odd, (m - 1) / 2);
    }
    throw std::invalid_argument("unknown algebra '" + name + "'");
}

std::string RootData::name() const {
    std::ostringstream os;
    switch (family_) {
    case Family::sl: os << "sl" << n_; break;
    case Family::sp: os << "sp" << 2 * n_; break;
    case Family::so_even: os << "so" << 2 * n_; break;
    case Family::so_odd: os << "so" << 2 * n_ + 1; break;
    }
    return os.str();
}

void RootData::check_rank(const Weight& w) const {
    if ((int)w.size() != rank_)
        throw std::invalid_argument("weight rank mismatch for " + name());
}

Weight RootData::basis_weight(int i, long long mult) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("basis_weight: index out of range");
    std::vector<long long> v(rank_, 0);
    v[i] = mult;
    return canonical(Weight(std::move(v)));
}

Weight RootData::canonical(const Weight& w) const {
    check_rank(w);
    if (family_ != Family::sl) return w;
    long long m = *std::min_element(w.c.begin(), w.c.end());
    if (m == 0) return w;
    Weight r = w;
    for (auto& x : r.c) x -= m;
    return r;
}

Rat RootData::pair(const Weight& a, const Weight& b) const {
    check_rank(a);
    check_rank(b);
    if (family_ == Family::sl) {
        long long dot = 0, sa = 0, sb = 0;
        for (int i = 0; i < rank_; ++i) {
            dot += a.c[i] * b.c[i];
            sa += a.c[i];
            sb += b.c[i];
        }
        return Rat((long)dot) - Rat((long)sa) * Rat((long)sb) / Rat(n_);
    }
    long long dot = 0;
    for (int i = 0; i < rank_; ++i) dot += a.c[i] * b.c[i];
    return Rat((long)dot);
}

Rat RootData::pairing_entry(int i, int j) const {
    return pair(basis_weight(i), basis_weight(j));
}

Rat RootData::pair_rho(const Weight& a) const { return pair(a, two_rho_) / 2; }

Weight RootData::act(const WeylElement& w, const Weight& a) const {
    check_rank(a);
    if ((int)w.perm.size() != rank_)
        throw std::invalid_argument("WeylElement rank mismatch for " + name());
    std::vector<long long> v(rank_);
    for (int i = 0; i < rank_; ++i) v[i] = (long long)w.flip[i] * a.c[w.perm[i]];
    return canonical(Weight(std::move(v)));
}

long long RootData::to_int(const Weight& w) const {
    check_rank(w);
    if (family_ == Family::sl && n_ == 2) return w.c[0] - w.c[1];
    if (rank_ == 1) return w.c[0];
    throw std::domain_error("to_int: not a rank-1 lattice");
}

Weight RootData::from_int(long long k) const {
    if (family_ == Family::sl && n_ == 2)
        return canonical(Weight(std::vector<long long>{k, 0}));
    if (rank_ == 1) return Weight(std::vector<long long>{k});
    throw std::domain_error("from_int: not a rank-1 lattice");
}

unsigned long long weyl_order(const RootData& rd) {
    unsigned long long f = 1;
    for (int i = 2; i <= rd.rank(); ++i) f *= i;
    switch (rd.family()) {
    case Family::sl: return f;
    case Family::sp:
    case Family::so_odd: return f << rd.rank();
    case Family::so_even: return f << (rd.rank() - 1);
    }
    return f;
}

std::vector<WeylElement> weyl_elements(const RootData& rd) {
    if (weyl_order(rd) > 1000000ULL)
        throw std::domain_error("weyl_elements: group too large to enumerate");
    int n = rd.rank();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<WeylElement> out;
    const bool flips = rd.family() != Family::sl;
    const bool even_only = rd.family() == Family::so_even;
    do {
        if (!flips) {
            WeylElement w;
            w.perm = p;
            w.flip.assign(n, 1);
            out.push_back(std::move(w));
            continue;
        }
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            if (even_only && __builtin_parity(mask)) continue;
            WeylElement w;
            w.perm = p;
            w.flip.resize(n);
            for (int i = 0; i < n; ++i) w.flip[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<WeylElement> weyl_generators(const RootData& rd) {
    int n = rd.rank();
    std::vector<WeylElement> gens;
    for (int i = 0; i + 1 < n; ++i) {
        WeylElement w = WeylElement::identity(n);
        std::swap(w.perm[i], w.perm[i + 1]);
        gens.push_back(std::move(w));
    }
    switch (rd.family()) {
    case Family::sl: break;
    case Family::sp:
    case Family::so_odd: {
        WeylElement w = WeylElement::identity(n);
        w.flip[n - 1] = -1;
        gens.push_back(std::move(w));
        break;
    }
    case Family::so_even: {
        WeylElement w = WeylElement::identity(n);
        w.flip[n - 1] = -1;
        w.flip[n - 2] = -1;
        gens.push_back(std::move(w));
        break;
    }
    }
    return gens;
}

std::vector<Weight> weight_window(const RootData& rd, int radius) {
    int n = rd.rank();
    std::vector<Weight> out;
    if (rd.family() == Family::sl) {
        // canonical box [0,r]^n containing a zero coordinate
        std::vector<long long> v(n, 0);
        while (true) {
            if (*std::min_element(v.begin(), v.end()) == 0)
                out.push_back(Weight(v));
            int i = n - 1;
            while (i >= 0 && v[i] == radius) v[i--] = 0;
            if (i < 0) break;
            ++v[i];
        }
        return out;
    }
    std::vector<long long> v(n, -radius);
    while (true) {
        out.push_back(Weight(v));
        int i = n - 1;
        while (i >= 0 && v[i] == radius) v[i--] = -radius;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

} // namespace qweyl
