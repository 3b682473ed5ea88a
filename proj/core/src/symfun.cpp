#include "heiscat/symfun.hpp"

#include <sstream>

namespace heiscat {

SymElem::SymElem(Scalar c) {
    if (!c.is_zero()) terms_[{}] = std::move(c);
}

SymElem SymElem::generator(const SymGen& g) {
    SymElem e;
    e.terms_[{{g, 1}}] = Scalar(1);
    return e;
}

bool SymElem::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar SymElem::scalar_part() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void SymElem::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymElem SymElem::operator+(const SymElem& o) const {
    SymElem out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

SymElem SymElem::operator-(const SymElem& o) const {
    SymElem out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

SymElem SymElem::operator*(const Scalar& c) const {
    SymElem out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

SymElem SymElem::map_scalars(const std::function<Scalar(const Scalar&)>& f) const {
    SymElem out;
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
}

std::string SymElem::str(const Frobenius& A) const {
    if (terms_.empty()) return "0";
    const auto& reps = A.center_cocenter().cocenter_rep_indices;
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (const auto& [g, e] : m) {
            if (!mono.empty()) mono += "*";
            mono += (g.side == 0 ? "eL[" : "eR[") + std::to_string(g.n) + "](" +
                    A.basis_name(reps[g.j]) + ")";
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            os << "(" << c.str() << ")";
        } else if (c.is_one()) {
            os << mono;
        } else {
            os << "(" << c.str() << ")*" << mono;
        }
    }
    return os.str();
}

SymContext::SymContext(std::shared_ptr<const Frobenius> A, int charge, int truncation)
    : A_(std::move(A)), k_(charge), trunc_(truncation) {}

Parity SymContext::gen_parity(const SymGen& g) const {
    return A_->parity(A_->center_cocenter().cocenter_rep_indices[g.j]);
}

Parity SymContext::elem_parity(const SymElem& e) const {
    bool seen = false;
    Parity out = Parity::even;
    for (const auto& [m, c] : e.terms()) {
        Parity p = Parity::even;
        for (const auto& [g, exp] : m)
            if (exp % 2) p = p + gen_parity(g);
        if (!seen) {
            out = p;
            seen = true;
        } else if (p != out) {
            throw symfun_error("mixed-parity symmetric function");
        }
    }
    return out;
}

SymElem SymContext::mul(const SymElem& a, const SymElem& b) const {
    SymElem out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // Merge mb into ma keeping generators sorted; count odd swaps.
            SymElem::Mono merged = ma;
            int sign = 1;
            bool dead = false;
            for (const auto& gb : mb) {
                Parity pb = gen_parity(gb.first);
                int pos = (int)merged.size();
                int odd_passed = 0;
                while (pos > 0 && gb.first < merged[pos - 1].first) {
                    if (is_odd(gen_parity(merged[pos - 1].first)) &&
                        merged[pos - 1].second % 2)
                        ++odd_passed;
                    --pos;
                }
                if (is_odd(pb) && (gb.second % 2) && (odd_passed % 2)) sign = -sign;
                if (pos > 0 && merged[pos - 1].first == gb.first) {
                    if (is_odd(pb)) {
                        dead = true;  // odd generator squared
                        break;
                    }
                    merged[pos - 1].second += gb.second;
                } else {
                    merged.insert(merged.begin() + pos, gb);
                }
            }
            if (dead) continue;
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(merged, c);
        }
    }
    return out;
}

SymElem SymContext::e_of(int side, const AlgElem& a, int n) const {
    if (n < 0) return SymElem();
    if (n == 0) return SymElem(a.trace());
    SymElem out;
    const auto& cc = A_->center_cocenter();
    for (int i = 0; i < A_->dim(); ++i) {
        if (a.coords()[i].is_zero()) continue;
        for (int j = 0; j < (int)cc.cocenter_reps.size(); ++j) {
            Scalar c = cc.cocenter_coords[i][j] * a.coords()[i];
            if (c.is_zero()) continue;
            out = out + SymElem::generator(SymGen{side, n, j}) * c;
        }
    }
    return out;
}

SymElem SymContext::h_basis(int side, int b, int n) const {
    auto key = std::make_tuple(side, b, n);
    auto it = h_cache_.find(key);
    if (it != h_cache_.end()) return it->second;
    SymElem out;
    if (n == 0) {
        out = SymElem(AlgElem::basis(*A_, b).trace());
    } else {
        // h_n(d) = -sum_{p=1}^{n} (-1)^p sum_c e_p(c) h_{n-p}(c^vee d).
        for (int p = 1; p <= n; ++p) {
            for (int c = 0; c < A_->dim(); ++c) {
                SymElem ep = e_of(side, AlgElem::basis(*A_, c), p);
                if (ep.is_zero()) continue;
                AlgElem cd = A_->dual(c) * AlgElem::basis(*A_, b);
                SymElem hrec;
                for (int d = 0; d < A_->dim(); ++d) {
                    if (cd.coords()[d].is_zero()) continue;
                    hrec = hrec + h_basis(side, d, n - p) * cd.coords()[d];
                }
                SymElem term = mul(ep, hrec);
                if (p % 2)
                    out = out + term;
                else
                    out = out - term;
            }
        }
    }
    h_cache_[key] = out;
    return out;
}

SymElem SymContext::h_of(int side, const AlgElem& a, int n) const {
    if (n < 0) return SymElem();
    SymElem out;
    for (int b = 0; b < A_->dim(); ++b) {
        if (a.coords()[b].is_zero()) continue;
        out = out + h_basis(side, b, n) * a.coords()[b];
    }
    return out;
}

SymElem SymContext::bubble_value(const BubbleSymbol& s) const {
    const Scalar t = Scalar::t();
    const Scalar z = Scalar::z();
    if (s.decor == BubbleDecor::genuine) {
        BubbleSymbol p = s;
        p.decor = BubbleDecor::plus;
        BubbleSymbol m = s;
        m.decor = BubbleDecor::minus;
        return bubble_value(p) + bubble_value(m);
    }
    if (s.decor == BubbleDecor::plus) {
        if (s.orient == BubbleOrientation::counterclockwise) {
            // (-1)^n (t/z) e_n(a) on the left factor; n = 0 recovers the
            // boundary constant (t/z) tr(a).
            int n = s.dots + k_;
            if (n < 0) return SymElem();
            SymElem e = e_of(0, s.token, n);
            Scalar c = t / z;
            if (n % 2) c = -c;
            return e * c;
        }
        int n = s.dots - k_;
        if (n < 0) return SymElem();
        return h_of(0, s.token, n) * (-(t.inv() / z));
    }
    // minus bubbles
    if (s.orient == BubbleOrientation::counterclockwise) {
        // (-1)^{n-1} (1/(tz)) e_n(a) on the right factor.
        int n = -s.dots;
        if (n < 0) return SymElem();
        SymElem e = e_of(1, s.token, n);
        Scalar c = t.inv() / z;
        if (n % 2 == 0) c = -c;
        return e * c;
    }
    int n = -s.dots;
    if (n < 0) return SymElem();
    return h_of(1, s.token, n) * (t / z);
}

SymElem SymContext::grassmannian_sum(int n, const AlgElem& a, const AlgElem& b,
                                     bool plus_pair) const {
    SymElem acc;
    for (int r = -trunc_ - std::abs(k_) - std::abs(n);
         r <= trunc_ + std::abs(k_) + std::abs(n); ++r) {
        int s = n - r;
        for (int c = 0; c < A_->dim(); ++c) {
            AlgElem ac = a * AlgElem::basis(*A_, c);
            AlgElem cb = A_->dual(c) * b;
            BubbleSymbol left{BubbleOrientation::counterclockwise,
                              plus_pair ? BubbleDecor::plus : BubbleDecor::minus, ac, r};
            BubbleSymbol right{BubbleOrientation::clockwise,
                               plus_pair ? BubbleDecor::plus : BubbleDecor::minus, cb, s};
            SymElem lv = bubble_value(left);
            if (lv.is_zero()) continue;
            SymElem rv = bubble_value(right);
            if (rv.is_zero()) continue;
            acc = acc + mul(lv, rv) * Scalar::z();
        }
    }
    return acc;
}

namespace {

// Column-ordered Laplace expansion along the first column: factors are
// multiplied in the order of the columns they come from.
SymElem superdet(const SymContext& ctx, const std::vector<std::vector<SymElem>>& m) {
    int n = (int)m.size();
    if (n == 0) return SymElem(Scalar(1));
    if (n == 1) return m[0][0];
    SymElem acc;
    for (int r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<SymElem>> minor;
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<SymElem> row(m[i].begin() + 1, m[i].end());
            minor.push_back(std::move(row));
        }
        SymElem term = ctx.mul(m[r][0], superdet(ctx, minor));
        if (r % 2)
            acc = acc - term;
        else
            acc = acc + term;
    }
    return acc;
}

} // namespace

SymElem SymContext::plus_ccw_by_determinant(const AlgElem& a, int dots) const {
    // plus ccw bubble with dots = r - k, valid for r <= k.
    int r = dots + k_;
    if (r < 0) return SymElem();
    if (r == 0) return SymElem(Scalar::t() / Scalar::z() * a.trace());
    if (r > k_) throw symfun_error("determinant route needs dots <= 0");
    int dimA = A_->dim();
    std::vector<int> tuple(std::max(r - 1, 0), 0);
    SymElem acc;
    while (true) {
        std::vector<std::vector<SymElem>> mat(r, std::vector<SymElem>(r));
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) {
                AlgElem left = (j == 1) ? a : A_->dual(tuple[j - 2]);
                AlgElem right = (j == r) ? AlgElem::unit(*A_)
                                         : AlgElem::basis(*A_, tuple[j - 1]);
                BubbleSymbol sym{BubbleOrientation::clockwise, BubbleDecor::genuine,
                                 left * right, i - j + k_ + 1};
                mat[i - 1][j - 1] = bubble_value(sym);
            }
        acc = acc + superdet(*this, mat);
        int p = 0;
        while (p < (int)tuple.size() && tuple[p] == dimA - 1) tuple[p++] = 0;
        if (p == (int)tuple.size()) break;
        ++tuple[p];
    }
    return acc * (Scalar::z().pow(r - 1) * Scalar::t().pow(r + 1));
}

SymElem SymContext::plus_cw_by_determinant(const AlgElem& a, int dots) const {
    // plus cw bubble with dots = r + k, valid for r <= -k.
    int r = dots - k_;
    if (r < 0) return SymElem();
    if (r == 0) return SymElem(-(Scalar::t().inv() / Scalar::z()) * a.trace());
    if (r > -k_) throw symfun_error("determinant route needs dots <= 0");
    int dimA = A_->dim();
    std::vector<int> tuple(std::max(r - 1, 0), 0);
    SymElem acc;
    while (true) {
        std::vector<std::vector<SymElem>> mat(r, std::vector<SymElem>(r));
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) {
                AlgElem left = (j == 1) ? a : A_->dual(tuple[j - 2]);
                AlgElem right = (j == r) ? AlgElem::unit(*A_)
                                         : AlgElem::basis(*A_, tuple[j - 1]);
                BubbleSymbol sym{BubbleOrientation::counterclockwise,
                                 BubbleDecor::genuine, left * right, i - j - k_ + 1};
                mat[i - 1][j - 1] = bubble_value(sym) * Scalar(-1);
            }
        acc = acc + superdet(*this, mat);
        int p = 0;
        while (p < (int)tuple.size() && tuple[p] == dimA - 1) tuple[p++] = 0;
        if (p == (int)tuple.size()) break;
        ++tuple[p];
    }
    return acc * (-(Scalar::z().pow(r - 1)) * Scalar::t().pow(-r - 1));
}

} // namespace heiscat
