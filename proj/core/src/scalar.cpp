#include "heiscat/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace heiscat {

namespace {

// Dense univariate polynomial over Q, used for the t-direction of the
// bivariate gcd.
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_divexact(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    if (a.empty()) return {};
    UniPoly q(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
    }
    if (!a.empty()) throw scalar_error("uni_divexact: not divisible");
    return q;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

// View of a bivariate poly as a polynomial in z with UniPoly coefficients.
std::map<int, UniPoly> z_coeffs(const Poly& p) {
    std::map<int, UniPoly> out;
    for (const auto& [key, c] : p.terms()) {
        auto& v = out[key.first];
        if ((int)v.size() <= key.second) v.resize(key.second + 1, Rational(0));
        v[key.second] = c;
    }
    for (auto& [e, v] : out) uni_trim(v);
    return out;
}

Poly from_z_coeffs(const std::map<int, UniPoly>& m) {
    Poly out;
    for (const auto& [ez, v] : m)
        for (size_t et = 0; et < v.size(); ++et)
            if (v[et] != 0) out.set(ez, (int)et, v[et]);
    return out;
}

UniPoly t_content(const std::map<int, UniPoly>& m) {
    UniPoly g;
    for (const auto& [e, v] : m) g = uni_gcd(g, v);
    return g;
}

std::map<int, UniPoly> divide_content(const std::map<int, UniPoly>& m, const UniPoly& c) {
    std::map<int, UniPoly> out;
    for (const auto& [e, v] : m) out[e] = uni_divexact(v, c);
    return out;
}

} // namespace

Poly::Poly(Rational c) {
    if (c != 0) terms_[{0, 0}] = std::move(c);
}

Poly Poly::z(int e) { return monomial(e, 0, Rational(1)); }
Poly Poly::t(int e) { return monomial(0, e, Rational(1)); }

Poly Poly::monomial(int ez, int et, Rational c) {
    if (ez < 0 || et < 0) throw scalar_error("Poly exponents must be nonnegative");
    Poly p;
    if (c != 0) p.terms_[{ez, et}] = std::move(c);
    return p;
}

void Poly::set(int ez, int et, Rational c) {
    if (c == 0)
        terms_.erase({ez, et});
    else
        terms_[{ez, et}] = std::move(c);
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw scalar_error("Poly is not constant");
    return terms_.begin()->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (c != 0) r.terms_[k] = std::move(c);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

int Poly::deg_z() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int Poly::deg_t() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

Poly::Key Poly::lead_key() const {
    if (terms_.empty()) throw scalar_error("lead_key of zero polynomial");
    return terms_.rbegin()->first;
}

Rational Poly::lead_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

Rational Poly::eval(const Rational& z0, const Rational& t0) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Rational m = c;
        for (int i = 0; i < k.first; ++i) m *= z0;
        for (int i = 0; i < k.second; ++i) m *= t0;
        acc += m;
    }
    return acc;
}

std::pair<Poly, int> Poly::subst_t_inverse() const {
    int m = deg_t();
    Poly out;
    for (const auto& [k, c] : terms_) out.set(k.first, m - k.second, c);
    return {out, m};
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lex order reads most naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_var = it->first.first > 0 || it->first.second > 0;
        if (!has_var || c != 1) {
            os << c.str();
            if (has_var) os << "*";
        }
        if (it->first.first > 0) {
            os << "z";
            if (it->first.first > 1) os << "^" << it->first.first;
            if (it->first.second > 0) os << "*";
        }
        if (it->first.second > 0) {
            os << "t";
            if (it->first.second > 1) os << "^" << it->first.second;
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        Poly g = a.is_zero() ? b : a;
        return divexact(g, Poly(g.lead_coeff()));
    }
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));

    auto ma = z_coeffs(a);
    auto mb = z_coeffs(b);
    UniPoly ca = t_content(ma);
    UniPoly cb = t_content(mb);
    UniPoly g0 = uni_gcd(ca, cb);

    // Primitive Euclidean algorithm in z over Q[t].
    auto pa = divide_content(ma, ca);
    auto pb = divide_content(mb, cb);
    if (pa.rbegin()->first < pb.rbegin()->first) std::swap(pa, pb);

    while (true) {
        if (pb.empty()) break;
        int da = pa.rbegin()->first;
        int db = pb.rbegin()->first;
        if (da < db) {
            std::swap(pa, pb);
            continue;
        }
        // Pseudo-remainder of pa by pb in z.
        UniPoly lcb = pb.rbegin()->second;
        std::map<int, UniPoly> r = pa;
        for (int i = 0; i <= da - db + 1 && !r.empty() && r.rbegin()->first >= db; ) {
            int dr = r.rbegin()->first;
            UniPoly lr = r.rbegin()->second;
            // r <- lcb*r - lr * z^(dr-db) * pb
            std::map<int, UniPoly> rr;
            for (auto& [e, v] : r) rr[e] = uni_mul(v, lcb);
            for (auto& [e, v] : pb) {
                UniPoly sub = uni_mul(v, lr);
                auto& dst = rr[e + dr - db];
                if (dst.size() < sub.size()) dst.resize(sub.size(), Rational(0));
                for (size_t j = 0; j < sub.size(); ++j) dst[j] -= sub[j];
                uni_trim(dst);
            }
            for (auto it = rr.begin(); it != rr.end();) {
                if (it->second.empty())
                    it = rr.erase(it);
                else
                    ++it;
            }
            r = std::move(rr);
        }
        if (r.empty()) {
            pa = pb;
            pb.clear();
            break;
        }
        UniPoly cr = t_content(r);
        pa = pb;
        pb = divide_content(r, cr);
    }

    Poly gz = from_z_coeffs(pa);
    Poly g = from_z_coeffs(std::map<int, UniPoly>{{0, g0}}) * gz;
    return divexact(g, Poly(g.lead_coeff()));
}

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw scalar_error("division by zero polynomial");
    if (a.is_zero()) return Poly();
    Poly r = a;
    Poly q;
    Poly::Key lb = b.lead_key();
    Rational cb = b.lead_coeff();
    while (!r.is_zero()) {
        Poly::Key lr = r.lead_key();
        int ez = lr.first - lb.first;
        int et = lr.second - lb.second;
        if (ez < 0 || et < 0) throw scalar_error("divexact: not divisible");
        Poly m = Poly::monomial(ez, et, r.lead_coeff() / cb);
        q = q + m;
        r = r - m * b;
    }
    return q;
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw scalar_error("division by zero");
    reduce();
}

Scalar Scalar::z(int e) {
    if (e >= 0) return Scalar(Poly::z(e), Poly(Rational(1)));
    return Scalar(Poly(Rational(1)), Poly::z(-e));
}

Scalar Scalar::t(int e) {
    if (e >= 0) return Scalar(Poly::t(e), Poly(Rational(1)));
    return Scalar(Poly(Rational(1)), Poly::t(-e));
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    Rational lc = den_.lead_coeff();
    if (lc != 1) {
        num_ = divexact(num_, Poly(lc));
        den_ = divexact(den_, Poly(lc));
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw scalar_error("division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw scalar_error("division by zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator<(const Scalar& o) const {
    auto cmp = [](const Poly& a, const Poly& b) -> int {
        auto ia = a.terms().begin();
        auto ib = b.terms().begin();
        for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        }
        if (ia != a.terms().end()) return 1;
        if (ib != b.terms().end()) return -1;
        return 0;
    };
    int c = cmp(num_, o.num_);
    if (c != 0) return c < 0;
    return cmp(den_, o.den_) < 0;
}

Rational Scalar::specialize(const Rational& z0, const Rational& t0) const {
    if (z0 == 0 || t0 == 0)
        throw scalar_error("specialization requires z0 != 0 and t0 != 0");
    Rational d = den_.eval(z0, t0);
    if (d == 0)
        throw nongeneric_specialization("denominator " + den_.str() +
                                        " vanishes at the chosen point");
    return num_.eval(z0, t0) / d;
}

Scalar Scalar::swap_t() const {
    auto [pn, sn] = num_.subst_t_inverse();
    auto [pd, sd] = den_.subst_t_inverse();
    Poly n = pn;
    Poly d = pd;
    if (sd > sn)
        n = n * Poly::t(sd - sn);
    else if (sn > sd)
        d = d * Poly::t(sn - sd);
    return Scalar(n, d);
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& src) : s(src) {}

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw scalar_error("parse error at position " + std::to_string(i) + ": " + msg);
    }

    int parse_int() {
        skip();
        bool neg = eat('-');
        skip();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) fail("exponent too large");
            ++i;
        }
        return neg ? -(int)v : (int)v;
    }

    Scalar parse_expr() {
        Scalar acc = parse_term();
        while (true) {
            skip();
            if (eat('+'))
                acc += parse_term();
            else if (i < s.size() && s[i] == '-') {
                ++i;
                acc -= parse_term();
            } else
                break;
        }
        return acc;
    }

    Scalar parse_term() {
        Scalar acc = parse_factor();
        while (true) {
            skip();
            if (eat('*'))
                acc *= parse_factor();
            else if (eat('/')) {
                Scalar d = parse_factor();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else
                break;
        }
        return acc;
    }

    Scalar parse_factor() {
        skip();
        if (eat('-')) return -parse_factor();
        Scalar base = parse_atom();
        skip();
        if (eat('^')) {
            int e;
            if (eat('(')) {
                e = parse_int();
                if (!eat(')')) fail("expected )");
            } else {
                e = parse_int();
            }
            return base.pow(e);
        }
        return base;
    }

    Scalar parse_atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            Scalar r = parse_expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        char c = s[i];
        if (c == 'z') {
            ++i;
            return Scalar::z();
        }
        if (c == 't') {
            ++i;
            return Scalar::t();
        }
        if (std::isdigit((unsigned char)c)) {
            BigInt v = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                v = v * 10 + (s[i] - '0');
                ++i;
            }
            return Scalar(Rational(v));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Scalar Scalar::from_string(const std::string& s) {
    Parser p(s);
    Scalar r = p.parse_expr();
    p.skip();
    if (p.i != s.size()) p.fail("trailing input");
    return r;
}

} // namespace heiscat
