#include "heiscat/wreath.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace heiscat {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {}

Perm Perm::transposition(int n, int i) {
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

bool Perm::is_identity() const {
    for (int j = 1; j <= n(); ++j)
        if ((*this)(j) != j) return false;
    return true;
}

Perm Perm::compose(const Perm& o) const {
    std::vector<int> img(n());
    for (int j = 1; j <= n(); ++j) img[j - 1] = (*this)(o(j));
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(n());
    for (int j = 1; j <= n(); ++j) img[(*this)(j) - 1] = j;
    return Perm(std::move(img));
}

int Perm::length() const {
    int inv = 0;
    for (int a = 1; a <= n(); ++a)
        for (int b = a + 1; b <= n(); ++b)
            if ((*this)(a) > (*this)(b)) ++inv;
    return inv;
}

int Perm::last_descent() const {
    for (int i = 1; i < n(); ++i)
        if ((*this)(i) > (*this)(i + 1)) return i;
    return 0;
}

std::vector<int> Perm::reduced_word() const {
    // Peel descents from the right: w = w' s_i with i the leftmost descent.
    Perm w = *this;
    std::vector<int> rev;
    while (true) {
        int i = w.last_descent();
        if (i == 0) break;
        rev.push_back(i);
        w = w.compose(Perm::transposition(n(), i));
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

WreathElem::WreathElem(std::shared_ptr<const Frobenius> A, int n)
    : A_(std::move(A)), n_(n) {
    if (n < 0) throw wreath_error("negative strand count");
}

WreathElem WreathElem::zero(std::shared_ptr<const Frobenius> A, int n) {
    return WreathElem(std::move(A), n);
}

WreathElem WreathElem::one(std::shared_ptr<const Frobenius> A, int n) {
    WreathElem e(A, n);
    // Expand the unit of A at every position; for most algebras the unit is
    // a single basis vector and this stays one monomial.
    std::vector<std::pair<WreathMono, Scalar>> partial;
    WreathMono m;
    m.exps.assign(n, 0);
    m.toks.assign(n, 0);
    m.perm = Perm(n);
    partial.push_back({m, Scalar(1)});
    const auto& unit = A->unit_coords();
    for (int pos = 0; pos < n; ++pos) {
        std::vector<std::pair<WreathMono, Scalar>> next;
        for (const auto& [mono, c] : partial) {
            for (int b = 0; b < A->dim(); ++b) {
                if (unit[b].is_zero()) continue;
                WreathMono m2 = mono;
                m2.toks[pos] = b;
                next.push_back({m2, c * unit[b]});
            }
        }
        partial = std::move(next);
    }
    for (auto& [mono, c] : partial) e.add_term(mono, c);
    return e;
}

void WreathElem::add_term(const WreathMono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WreathElem WreathElem::sigma(std::shared_ptr<const Frobenius> A, int n, int i) {
    if (i < 1 || i >= n) throw wreath_error("sigma index out of range");
    WreathElem e = one(A, n);
    WreathElem out(A, n);
    for (const auto& [m, c] : e.terms_) {
        WreathMono m2 = m;
        m2.perm = Perm::transposition(n, i);
        out.add_term(m2, c);
    }
    return out;
}

WreathElem WreathElem::sigma_inv(std::shared_ptr<const Frobenius> A, int n, int i) {
    // sigma^{-1} = sigma - z tau.
    return sigma(A, n, i) - tau(A, n, i) * Scalar::z();
}

WreathElem WreathElem::x(std::shared_ptr<const Frobenius> A, int n, int i, int e) {
    if (i < 1 || i > n) throw wreath_error("x index out of range");
    WreathElem out = one(A, n);
    WreathElem shifted(A, n);
    for (const auto& [m, c] : out.terms_) {
        WreathMono m2 = m;
        m2.exps[i - 1] += e;
        shifted.add_term(m2, c);
    }
    return shifted;
}

WreathElem WreathElem::token(std::shared_ptr<const Frobenius> A, int n, int i,
                             const AlgElem& a) {
    if (i < 1 || i > n) throw wreath_error("token index out of range");
    return one(A, n).rmul_token(i, a);
}

WreathElem WreathElem::tau(std::shared_ptr<const Frobenius> A, int n, int i) {
    if (i < 1 || i >= n) throw wreath_error("tau index out of range");
    WreathElem acc(A, n);
    for (int b = 0; b < A->dim(); ++b) {
        WreathElem term = one(A, n).rmul_token_basis(i + 1, b).rmul_token(i, A->dual(b));
        acc = acc + term;
    }
    return acc;
}

WreathElem WreathElem::operator+(const WreathElem& o) const {
    WreathElem out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

WreathElem WreathElem::operator-(const WreathElem& o) const {
    WreathElem out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

WreathElem WreathElem::operator*(const Scalar& c) const {
    WreathElem out(A_, n_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

bool WreathElem::operator==(const WreathElem& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

Parity WreathElem::mono_parity(const WreathMono& m) const {
    Parity p = Parity::even;
    for (int b : m.toks) p = p + A_->parity(b);
    return p;
}

WreathElem WreathElem::rmul_token_basis(int j, int b) const {
    WreathElem out(A_, n_);
    for (const auto& [m, c] : terms_) {
        int target = m.perm(j);
        // Koszul sign for moving b past the tokens to its right.
        Parity right = Parity::even;
        for (int pos = 0; pos < target - 1; ++pos)
            right = right + A_->parity(m.toks[pos]);
        int sign = koszul_sign(right, A_->parity(b));
        const auto& prod = A_->mult(m.toks[target - 1], b);
        for (int k = 0; k < A_->dim(); ++k) {
            if (prod[k].is_zero()) continue;
            WreathMono m2 = m;
            m2.toks[target - 1] = k;
            Scalar coeff = c * prod[k];
            if (sign < 0) coeff = -coeff;
            out.add_term(m2, coeff);
        }
    }
    return out;
}

WreathElem WreathElem::rmul_token(int j, const AlgElem& a) const {
    WreathElem acc(A_, n_);
    for (int b = 0; b < A_->dim(); ++b) {
        if (a.coords()[b].is_zero()) continue;
        acc = acc + rmul_token_basis(j, b) * a.coords()[b];
    }
    return acc;
}

WreathElem WreathElem::rmul_sigma(int i) const {
    if (i < 1 || i >= n_) throw wreath_error("sigma index out of range");
    WreathElem out(A_, n_);
    Perm si = Perm::transposition(n_, i);
    for (const auto& [m, c] : terms_) {
        Perm gsi = m.perm.compose(si);
        if (gsi.length() > m.perm.length()) {
            WreathMono m2 = m;
            m2.perm = gsi;
            out.add_term(m2, c);
            continue;
        }
        // g = g'' s_i, so sigma_g sigma_i = z sigma_{g''} tau_i sigma_i + sigma_{g''}.
        WreathMono base = m;
        base.perm = gsi;
        out.add_term(base, c);

        WreathElem head(A_, n_);
        head.add_term(base, c * Scalar::z());
        for (int b = 0; b < A_->dim(); ++b) {
            WreathElem t = head.rmul_token_basis(i + 1, b).rmul_token(i, A_->dual(b));
            out = out + t.rmul_sigma(i);
        }
    }
    return out;
}

WreathElem WreathElem::rmul_x(int j, int e) const {
    if (j < 1 || j > n_) throw wreath_error("x index out of range");
    if (e == 0) return *this;
    WreathElem out(A_, n_);
    for (const auto& [m, c] : terms_) {
        if (m.perm.is_identity()) {
            WreathMono m2 = m;
            m2.exps[j - 1] += e;
            out.add_term(m2, c);
            continue;
        }
        // Peel the last letter of the canonical word: g = g' s_i.
        int i = m.perm.last_descent();
        Perm gp = m.perm.compose(Perm::transposition(n_, i));
        WreathMono head = m;
        head.perm = gp;
        WreathElem prefix(A_, n_);
        prefix.add_term(head, c);

        if (j != i && j != i + 1) {
            out = out + prefix.rmul_x(j, e).rmul_sigma(i);
            continue;
        }
        int jp = (j == i) ? i + 1 : i;
        // Main term: the dots cross to the other strand of sigma_i.
        out = out + prefix.rmul_x(jp, e).rmul_sigma(i);
        // Teleporter corrections: split exponents with these sign rules
        //   sigma x_i^e     = x_{i+1}^e sigma - z sum_{r>=1, s>=0}  x_{i+1}^r x_i^s tau   (e > 0)
        //   sigma x_i^e     = x_{i+1}^e sigma + z sum_{r<=0, s<=-1} x_{i+1}^r x_i^s tau   (e < 0)
        //   sigma x_{i+1}^e = x_i^e sigma     + z sum_{r>=1, s>=0}  x_{i+1}^r x_i^s tau   (e > 0)
        //   sigma x_{i+1}^e = x_i^e sigma     - z sum_{r<=0, s<=-1} x_{i+1}^r x_i^s tau   (e < 0)
        int base_sign = (j == i) ? -1 : 1;
        auto correction = [&](int r, int s, int sign) {
            WreathElem w = prefix.rmul_x(i + 1, r).rmul_x(i, s);
            for (int b = 0; b < A_->dim(); ++b) {
                WreathElem t = w.rmul_token_basis(i + 1, b).rmul_token(i, A_->dual(b));
                Scalar coeff = Scalar::z();
                if (sign < 0) coeff = -coeff;
                out = out + t * coeff;
            }
        };
        if (e > 0) {
            for (int r = 1; r <= e; ++r) correction(r, e - r, base_sign);
        } else {
            for (int r = 0; r >= e + 1; --r) correction(r, e - r, -base_sign);
        }
    }
    return out;
}

WreathElem WreathElem::operator*(const WreathElem& o) const {
    if (n_ != o.n_) throw wreath_error("strand count mismatch");
    WreathElem acc(A_, n_);
    for (const auto& [m, c] : o.terms_) {
        WreathElem w = *this * c;
        for (int j = n_; j >= 1; --j)
            if (m.exps[j - 1] != 0) w = w.rmul_x(j, m.exps[j - 1]);
        for (int j = n_; j >= 1; --j) w = w.rmul_token_basis(j, m.toks[j - 1]);
        for (int i : m.perm.reduced_word()) w = w.rmul_sigma(i);
        acc = acc + w;
    }
    return acc;
}

std::string WreathElem::str() const {
    if (terms_.empty()) return "0";
    // A token is suppressed in printing when it is the unit and the unit is a
    // plain basis vector.
    bool unit_is_basis0 = A_->unit_coords()[0].is_one();
    for (int b = 1; b < A_->dim(); ++b)
        if (!A_->unit_coords()[b].is_zero()) unit_is_basis0 = false;

    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> parts;
        for (int j = 1; j <= n_; ++j)
            if (m.exps[j - 1] != 0)
                parts.push_back("x" + std::to_string(j) +
                                (m.exps[j - 1] == 1
                                     ? ""
                                     : "^" + std::to_string(m.exps[j - 1])));
        for (int j = n_; j >= 1; --j) {
            int b = m.toks[j - 1];
            if (unit_is_basis0 && b == 0) continue;
            parts.push_back("tok(" + std::to_string(j) + "," + A_->basis_name(b) + ")");
        }
        for (int i : m.perm.reduced_word()) parts.push_back("s" + std::to_string(i));
        std::string mono;
        for (size_t k = 0; k < parts.size(); ++k) {
            if (k) mono += "*";
            mono += parts[k];
        }
        if (mono.empty()) mono = "1";
        if (c.is_one())
            os << mono;
        else if (mono == "1")
            os << "(" << c.str() << ")";
        else
            os << "(" << c.str() << ")*" << mono;
    }
    return os.str();
}

namespace {

struct ElemParser {
    std::shared_ptr<const Frobenius> A;
    int n;
    const std::string& s;
    size_t i = 0;

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
    [[noreturn]] void fail(const std::string& m) {
        throw wreath_error("element parse error at " + std::to_string(i) + ": " + m);
    }

    int parse_int() {
        skip();
        bool neg = eat('-');
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected integer");
        int v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }

    WreathElem parse_expr() {
        WreathElem acc = parse_term();
        while (true) {
            skip();
            if (eat('+'))
                acc = acc + parse_term();
            else if (i < s.size() && s[i] == '-') {
                ++i;
                acc = acc - parse_term();
            } else
                break;
        }
        return acc;
    }

    WreathElem parse_term() {
        WreathElem acc = parse_factor();
        while (true) {
            skip();
            if (eat('*'))
                acc = acc * parse_factor();
            else
                break;
        }
        return acc;
    }

    WreathElem parse_factor() {
        skip();
        if (i < s.size() && s[i] == '-' ) {
            ++i;
            return parse_factor() * Scalar(-1);
        }
        if (i >= s.size()) fail("unexpected end");
        if (s.compare(i, 4, "tok(") == 0) {
            i += 4;
            int j = parse_int();
            if (!eat(',')) fail("expected , in tok");
            skip();
            size_t start = i;
            while (i < s.size() && s[i] != ')') ++i;
            std::string name = s.substr(start, i - start);
            while (!name.empty() && std::isspace((unsigned char)name.back())) name.pop_back();
            if (!eat(')')) fail("expected ) after tok");
            for (int b = 0; b < A->dim(); ++b)
                if (A->basis_name(b) == name)
                    return maybe_pow(WreathElem::token(A, n, j, AlgElem::basis(*A, b)));
            fail("unknown basis element '" + name + "'");
        }
        if (s[i] == 's' && i + 1 < s.size() && std::isdigit((unsigned char)s[i + 1])) {
            ++i;
            int idx = parse_int();
            return maybe_pow(WreathElem::sigma(A, n, idx));
        }
        if (s[i] == 'x' && i + 1 < s.size() && std::isdigit((unsigned char)s[i + 1])) {
            ++i;
            int idx = parse_int();
            skip();
            int e = 1;
            if (eat('^')) e = parse_int();
            return WreathElem::x(A, n, idx, e);
        }
        // Fall back to a scalar factor (possibly parenthesized).
        size_t start = i;
        int depth = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (depth == 0 && (c == '*' || c == '+' || c == '-')) break;
            ++i;
        }
        std::string scalar_text = s.substr(start, i - start);
        if (scalar_text.empty()) fail("expected factor");
        try {
            Scalar c = Scalar::from_string(scalar_text);
            return WreathElem::one(A, n) * c;
        } catch (const scalar_error& e) {
            fail(e.what());
        }
    }

    WreathElem maybe_pow(WreathElem e) {
        skip();
        if (eat('^')) {
            int p = parse_int();
            if (p < 0) fail("negative powers are only supported on x generators");
            WreathElem acc = WreathElem::one(A, n);
            for (int k = 0; k < p; ++k) acc = acc * e;
            return acc;
        }
        return e;
    }
};

} // namespace

WreathElem WreathElem::parse(std::shared_ptr<const Frobenius> A, int n,
                             const std::string& text) {
    ElemParser p{A, n, text};
    WreathElem e = p.parse_expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return e;
}

RegularRep regular_representation(std::shared_ptr<const Frobenius> A, int n) {
    RegularRep rep;
    std::vector<Perm> perms;
    {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        do {
            perms.push_back(Perm(img));
        } while (std::next_permutation(img.begin(), img.end()));
        if (n == 0) perms = {Perm(0)};
    }
    std::vector<std::vector<int>> tok_tuples;
    if (n == 0) {
        tok_tuples = {{}};
    } else {
        std::vector<int> cur(n, 0);
        while (true) {
            tok_tuples.push_back(cur);
            int p = 0;
            while (p < n && cur[p] == A->dim() - 1) cur[p++] = 0;
            if (p == n) break;
            ++cur[p];
        }
    }
    for (const auto& toks : tok_tuples)
        for (const auto& g : perms) {
            WreathMono m;
            m.exps.assign(n, 0);
            m.toks = toks;
            m.perm = g;
            rep.index[m] = (int)rep.basis.size();
            rep.basis.push_back(m);
        }

    int dim = (int)rep.basis.size();
    auto columns_of = [&](const WreathElem& gen) {
        std::vector<std::vector<Scalar>> mat(dim, std::vector<Scalar>(dim, Scalar(0)));
        for (int c = 0; c < dim; ++c) {
            WreathElem b(A, n);
            b.add_term(rep.basis[c], Scalar(1));
            WreathElem prod = gen * b;
            for (const auto& [m, coeff] : prod.terms()) {
                auto it = rep.index.find(m);
                if (it == rep.index.end())
                    throw wreath_error("regular representation left the finite basis");
                mat[it->second][c] = coeff;
            }
        }
        return mat;
    };

    for (int i = 1; i < n; ++i)
        rep.sigma_mats.push_back(columns_of(WreathElem::sigma(A, n, i)));
    for (int j = 1; j <= n; ++j)
        for (int b = 0; b < A->dim(); ++b)
            rep.token_mats.push_back(
                columns_of(WreathElem::token(A, n, j, AlgElem::basis(*A, b))));
    return rep;
}

} // namespace heiscat
