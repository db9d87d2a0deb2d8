#include "qweyl/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace qweyl {

namespace {

class ExprScanner {
public:
    ExprScanner(const RootData& rd, const std::string& text, bool allow_q)
        : rd_(rd), s_(text), allow_q_(allow_q) {}

    AlgebraElement run() {
        AlgebraElement r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    const RootData& rd_;
    const std::string& s_;
    bool allow_q_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " +
                                    msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_atom_start() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == 'q' || c == 'E' || c == 'Q' || c == '(' || std::isdigit((unsigned char)c);
    }

    long long integer() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_])) fail("expected integer");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) fail("integer too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    Rat rational() {
        long long num = integer();
        if (eat('/')) {
            long long den = integer();
            if (den == 0) fail("zero denominator");
            return make_rat((long)num, (long)den);
        }
        return Rat((long)num);
    }

    Weight vec() {
        expect('[');
        std::vector<long long> v;
        v.push_back(integer());
        while (eat(',')) v.push_back(integer());
        expect(']');
        if ((int)v.size() != rd_.rank())
            fail("weight vector has length " + std::to_string(v.size()) + ", expected " +
                 std::to_string(rd_.rank()));
        return rd_.canonical(Weight(std::move(v)));
    }

    Rat exponent() {
        if (eat('{')) {
            Rat e = rational();
            expect('}');
            return e;
        }
        return Rat((long)integer());
    }

    AlgebraElement expr() {
        bool neg = eat('-');
        AlgebraElement r = term();
        if (neg) r = -r;
        while (true) {
            if (eat('+')) {
                r += term();
            } else if (eat('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }

    AlgebraElement term() {
        AlgebraElement r = factor();
        while (true) {
            if (eat('*')) {
                r *= factor();
            } else if (at_atom_start()) {
                r *= factor();
            } else {
                return r;
            }
        }
    }

    AlgebraElement factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected a factor");
        char c = s_[pos_];
        if (c == 'q') {
            ++pos_;
            if (!allow_q_) fail("the symbol q is not allowed here");
            Rat e(1);
            if (eat('^')) e = exponent();
            return LaurentQ::q_power(e) * AlgebraElement::unit(rd_);
        }
        if (c == 'E' || c == 'Q') {
            ++pos_;
            Weight w;
            bool have_vec = peek('[');
            if (have_vec) {
                w = vec();
            } else {
                try {
                    w = rd_.from_int(1); // rank-1 shorthand
                } catch (const std::domain_error&) {
                    fail("bare E/Q needs a rank-1 algebra; write E[...] instead");
                }
            }
            if (eat('^')) {
                Rat e = exponent();
                if (!is_integer(e)) fail("generator exponent must be an integer");
                long k = to_long(e);
                std::vector<long long> scaled = w.c;
                for (auto& x : scaled) x *= k;
                w = rd_.canonical(Weight(std::move(scaled)));
            }
            return c == 'E' ? AlgebraElement::e_gen(rd_, w) : AlgebraElement::q_gen(rd_, w);
        }
        if (c == '(') {
            ++pos_;
            AlgebraElement inner = expr();
            expect(')');
            if (eat('^')) {
                Rat e = exponent();
                if (!is_integer(e) || e < 0) fail("parenthesized exponent must be a nonnegative integer");
                return inner.pow(to_long(e));
            }
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            Rat v = rational();
            return LaurentQ(v) * AlgebraElement::unit(rd_);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }
};

} // namespace

AlgebraElement parse_algebra_expr(const RootData& rd, const std::string& text) {
    return ExprScanner(rd, text, true).run();
}

CommPoly parse_comm_expr(const RootData& rd, const std::string& text) {
    return epsilon(ExprScanner(rd, text, false).run());
}

LaurentQ LaurentQ::parse(const std::string& text) {
    RootData rd = RootData::parse("sl2");
    AlgebraElement x = parse_algebra_expr(rd, text);
    LaurentQ out;
    for (const auto& [k, c] : x.terms()) {
        if (!k.q_wt.is_zero() || !k.e_wt.is_zero())
            throw std::invalid_argument("LaurentQ::parse: expression contains E or Q");
        out += c;
    }
    return out;
}

} // namespace qweyl
