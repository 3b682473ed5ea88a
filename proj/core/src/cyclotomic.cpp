#include "heiscat/cyclotomic.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace heiscat {

CycParams::CycParams(std::shared_ptr<const Frobenius> A, std::vector<AlgElem> coeffs)
    : A_(std::move(A)), coeffs_(std::move(coeffs)), flead_inv_(Scalar(0)) {
    if (coeffs_.empty()) throw cyclotomic_error("cyclotomic polynomial needs f_0");
    if (!(coeffs_[0] == AlgElem::unit(*A_)))
        throw cyclotomic_error("f_0 must be the unit");
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const AlgElem& f = coeffs_[i];
        auto p = f.parity();
        if (!p || is_odd(*p))
            throw cyclotomic_error("f_" + std::to_string(i) + " must be even");
        if (!A_->is_central(f))
            throw cyclotomic_error("f_" + std::to_string(i) + " must be central");
    }
    // f_l must be an invertible scalar multiple of the unit.
    const AlgElem& fl = coeffs_.back();
    Scalar lead(0);
    const auto& unit = A_->unit_coords();
    int pivot = -1;
    for (int i = 0; i < A_->dim(); ++i)
        if (!unit[i].is_zero()) {
            pivot = i;
            break;
        }
    lead = fl.coords()[pivot] / unit[pivot];
    if (lead.is_zero() || !(AlgElem::unit(*A_) * lead == fl))
        throw cyclotomic_error("f_l must be a nonzero scalar multiple of the unit");
    flead_inv_ = lead.inv();
}

CycParams CycParams::monic_t2(std::shared_ptr<const Frobenius> A, int level) {
    std::vector<AlgElem> coeffs;
    coeffs.push_back(AlgElem::unit(*A));
    for (int i = 1; i < level; ++i) coeffs.push_back(AlgElem::zero(*A));
    if (level >= 1) coeffs.push_back(AlgElem::unit(*A) * Scalar::t(2));
    else
        coeffs[0] = AlgElem::unit(*A);  // l = 0: f(w) = 1
    if (level == 0) {
        std::vector<AlgElem> c{AlgElem::unit(*A)};
        return CycParams(std::move(A), std::move(c));
    }
    return CycParams(std::move(A), std::move(coeffs));
}

bool CycParams::has_t2_normalization() const {
    return coeffs_.back() == AlgElem::unit(*A_) * (level() == 0 ? Scalar(1) : Scalar::t(2));
}

CycParams CycParams::from_json(std::shared_ptr<const Frobenius> A,
                               const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    int level = j.at("level").get<int>();
    std::vector<AlgElem> coeffs;
    for (const auto& vec : j.at("coeffs")) {
        std::vector<Scalar> c;
        for (const auto& v : vec)
            c.push_back(v.is_string() ? Scalar::from_string(v.get<std::string>())
                                      : Scalar((int)v.get<long>()));
        coeffs.push_back(AlgElem(A.get(), std::move(c)));
    }
    if ((int)coeffs.size() != level + 1)
        throw cyclotomic_error("expected level+1 coefficient vectors");
    return CycParams(std::move(A), std::move(coeffs));
}

std::string CycParams::str() const {
    std::ostringstream os;
    os << "f(w) = ";
    int l = level();
    for (int i = 0; i <= l; ++i) {
        if (i) os << " + ";
        os << "(" << coeffs_[i].str() << ")";
        if (l - i > 0) os << "*w^" << (l - i);
    }
    return os.str();
}

CycAlgebra::CycAlgebra(CycParams params) : params_(std::move(params)) {}

BigInt CycAlgebra::dimension(const CycParams& p, int n) {
    BigInt d = 1;
    for (int i = 0; i < n; ++i) d *= p.level() * p.algebra().dim();
    for (int i = 2; i <= n; ++i) d *= i;
    return d;
}

const CycBasis& CycAlgebra::basis(int n) {
    auto it = bases_.find(n);
    if (it != bases_.end()) return it->second;
    CycBasis b;
    int l = level();
    int dimA = algebra().dim();
    if (l == 0 && n > 0) {
        bases_[n] = b;
        return bases_[n];
    }
    std::vector<Perm> perms;
    {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i + 1;
        do {
            perms.push_back(Perm(img));
        } while (std::next_permutation(img.begin(), img.end()));
        if (n == 0) perms = {Perm(0)};
    }
    std::vector<std::vector<int>> exp_tuples{{}}, tok_tuples{{}};
    if (n > 0) {
        exp_tuples.clear();
        std::vector<int> cur(n, 0);
        while (true) {
            exp_tuples.push_back(cur);
            int p = 0;
            while (p < n && cur[p] == l - 1) cur[p++] = 0;
            if (p == n) break;
            ++cur[p];
        }
        tok_tuples.clear();
        cur.assign(n, 0);
        while (true) {
            tok_tuples.push_back(cur);
            int p = 0;
            while (p < n && cur[p] == dimA - 1) cur[p++] = 0;
            if (p == n) break;
            ++cur[p];
        }
    }
    for (const auto& exps : exp_tuples)
        for (const auto& toks : tok_tuples)
            for (const auto& g : perms) {
                WreathMono m{exps, toks, g};
                b.index[m] = (int)b.monos.size();
                b.monos.push_back(m);
            }
    bases_[n] = std::move(b);
    return bases_[n];
}

const std::vector<CosetRep>& CycAlgebra::coset_reps(int n) {
    auto it = cosets_.find(n);
    if (it != cosets_.end()) return it->second;
    std::vector<CosetRep> reps;
    for (int r = 0; r < level(); ++r)
        for (int b = 0; b < algebra().dim(); ++b)
            for (int j = 1; j <= n + 1; ++j) reps.push_back(CosetRep{r, b, j});
    auto& idx = coset_index_[n];
    for (size_t k = 0; k < reps.size(); ++k)
        idx[{reps[k].r, reps[k].b, reps[k].j}] = (int)k;
    cosets_[n] = std::move(reps);
    return cosets_[n];
}

int CycAlgebra::coset_index(int n, int r, int b, int j) {
    coset_reps(n);
    return coset_index_[n].at({r, b, j});
}

WreathElem CycAlgebra::lmul_token_basis(const WreathElem& u, int j, int b) {
    const Frobenius& A = algebra();
    WreathElem out(u.algebra_ptr(), u.strands());
    for (const auto& [m, c] : u.terms()) {
        Parity left = Parity::even;
        for (int pos = j; pos < u.strands(); ++pos) left = left + A.parity(m.toks[pos]);
        int sign = koszul_sign(left, A.parity(b));
        const auto& prod = A.mult(b, m.toks[j - 1]);
        for (int k = 0; k < A.dim(); ++k) {
            if (prod[k].is_zero()) continue;
            WreathMono m2 = m;
            m2.toks[j - 1] = k;
            Scalar coeff = c * prod[k];
            if (sign < 0) coeff = -coeff;
            out.add_term(m2, coeff);
        }
    }
    return out;
}

WreathElem CycAlgebra::lmul_token(const WreathElem& u, int j, const AlgElem& a) {
    WreathElem acc(u.algebra_ptr(), u.strands());
    for (int b = 0; b < algebra().dim(); ++b) {
        if (a.coords()[b].is_zero()) continue;
        acc = acc + lmul_token_basis(u, j, b) * a.coords()[b];
    }
    return acc;
}

WreathElem CycAlgebra::lmul_sigma(const WreathElem& u, int i) {
    const Frobenius& A = algebra();
    int n = u.strands();
    if (i < 1 || i >= n) throw cyclotomic_error("sigma index out of range");
    WreathElem out(u.algebra_ptr(), n);
    for (const auto& [m, c] : u.terms()) {
        int a = m.exps[i - 1];      // exponent on strand i
        int b = m.exps[i];          // exponent on strand i+1
        // sigma_i x_i^a x_{i+1}^b = x_i^b x_{i+1}^a sigma_i
        //   + z * sgn(b-a) * sum_{u=min(a,b)+1}^{max(a,b)} x_{i+1}^u x_i^{a+b-u} tau_i.
        auto push_after_x = [&](WreathMono base, const Scalar& coeff, bool with_sigma) {
            // Multiply sigma_i (or tau_i for corrections handled outside)
            // into tokens and the permutation.
            WreathElem head(u.algebra_ptr(), n);
            head.add_term(base, coeff);
            if (!with_sigma) {
                out = out + head;
                return;
            }
            // sigma_i against the token tuple: superpermute positions i, i+1.
            WreathElem swapped(u.algebra_ptr(), n);
            for (const auto& [hm, hc] : head.terms()) {
                WreathMono m2 = hm;
                std::swap(m2.toks[i - 1], m2.toks[i]);
                Scalar cc = hc;
                if (is_odd(A.parity(hm.toks[i - 1])) && is_odd(A.parity(hm.toks[i])))
                    cc = -cc;
                swapped.add_term(m2, cc);
            }
            // sigma_i against the permutation.
            Perm si = Perm::transposition(n, i);
            for (const auto& [hm, hc] : swapped.terms()) {
                Perm sig = si.compose(hm.perm);
                if (sig.length() > hm.perm.length()) {
                    WreathMono m2 = hm;
                    m2.perm = sig;
                    out.add_term(m2, hc);
                } else {
                    // sigma_i sigma_g = z tau_i sigma_g + sigma_{g''}.
                    WreathMono m2 = hm;
                    m2.perm = sig;  // g'' = s_i g
                    out.add_term(m2, hc);
                    WreathElem tail(u.algebra_ptr(), n);
                    tail.add_term(hm, hc * Scalar::z());
                    // tau_i = sum_b b^{(i+1)} b^vee^{(i)}: lmul b^vee at i
                    // first, then b at i+1.
                    for (int bb = 0; bb < A.dim(); ++bb) {
                        WreathElem t = lmul_token(tail, i, A.dual(bb));
                        t = lmul_token_basis(t, i + 1, bb);
                        out = out + t;
                    }
                }
            }
        };

        WreathMono main = m;
        main.exps[i - 1] = b;
        main.exps[i] = a;
        push_after_x(main, c, true);

        if (a != b) {
            int lo = std::min(a, b), hi = std::max(a, b);
            Scalar zc = Scalar::z() * c;
            if (a > b) zc = -zc;
            for (int uu = lo + 1; uu <= hi; ++uu) {
                WreathMono corr = m;
                corr.exps[i] = uu;          // x_{i+1}^u
                corr.exps[i - 1] = a + b - uu;  // x_i^{a+b-u}
                WreathElem tail(u.algebra_ptr(), n);
                tail.add_term(corr, zc);
                for (int bb = 0; bb < A.dim(); ++bb) {
                    WreathElem t = lmul_token(tail, i, A.dual(bb));
                    t = lmul_token_basis(t, i + 1, bb);
                    out = out + t;
                }
            }
        }
    }
    return out;
}

WreathElem CycAlgebra::lmul_x1_pos(const WreathElem& u) {
    int n = u.strands();
    int l = level();
    WreathElem out(u.algebra_ptr(), n);
    for (const auto& [m, c] : u.terms()) {
        if (m.exps[0] + 1 < l) {
            WreathMono m2 = m;
            ++m2.exps[0];
            out.add_term(m2, c);
            continue;
        }
        // x_1^l = -(f_1 x_1^{l-1} + ... + f_l).
        WreathMono tail = m;
        tail.exps[0] = 0;
        for (int i = 1; i <= l; ++i) {
            WreathMono m2 = tail;
            m2.exps[0] = l - i;
            WreathElem term(u.algebra_ptr(), n);
            term.add_term(m2, -c);
            out = out + lmul_token(term, 1, params_.coeff(i));
        }
    }
    return out;
}

WreathElem CycAlgebra::lmul_x1_neg(const WreathElem& u) {
    int n = u.strands();
    int l = level();
    WreathElem out(u.algebra_ptr(), n);
    for (const auto& [m, c] : u.terms()) {
        if (m.exps[0] > 0) {
            WreathMono m2 = m;
            --m2.exps[0];
            out.add_term(m2, c);
            continue;
        }
        // x_1^{-1} = -f_l^{-1} (x_1^{l-1} + f_1 x_1^{l-2} + ... + f_{l-1}).
        for (int i = 0; i <= l - 1; ++i) {
            WreathMono m2 = m;
            m2.exps[0] = l - 1 - i;
            WreathElem term(u.algebra_ptr(), n);
            term.add_term(m2, -c * params_.lead_inverse());
            out = out + lmul_token(term, 1, params_.coeff(i));
        }
    }
    return out;
}

WreathElem CycAlgebra::lmul_x(const WreathElem& u, int j, int e) {
    if (e != 1 && e != -1) throw cyclotomic_error("lmul_x expects a single step");
    int n = u.strands();
    if (j < 1 || j > n) throw cyclotomic_error("x index out of range");
    if (level() == 0 && n > 0) return WreathElem::zero(u.algebra_ptr(), n);
    if (j == 1) return e == 1 ? lmul_x1_pos(u) : lmul_x1_neg(u);
    if (e == 1) {
        // x_j = sigma_{j-1} x_{j-1} sigma_{j-1}.
        return lmul_sigma(lmul_x(lmul_sigma(u, j - 1), j - 1, 1), j - 1);
    }
    // x_j^{-1} = sigma_{j-1}^{-1} x_{j-1}^{-1} sigma_{j-1}^{-1}.
    auto lmul_sigma_inv = [&](const WreathElem& w, int i) {
        WreathElem si = lmul_sigma(w, i);
        // minus z tau_i w
        for (int b = 0; b < algebra().dim(); ++b) {
            WreathElem t = lmul_token(w, i, algebra().dual(b));
            t = lmul_token_basis(t, i + 1, b);
            si = si - t * Scalar::z();
        }
        return si;
    };
    return lmul_sigma_inv(lmul_x(lmul_sigma_inv(u, j - 1), j - 1, -1), j - 1);
}

WreathElem CycAlgebra::reduce_mono(const WreathMono& m, const Scalar& c) {
    int n = (int)m.exps.size();
    WreathElem elem(params_.algebra_ptr(), n);
    WreathMono base = m;
    for (auto& e : base.exps) e = 0;
    elem.add_term(base, c);
    for (int j = n; j >= 1; --j) {
        int e = m.exps[j - 1];
        while (e > 0 && !elem.is_zero()) {
            elem = lmul_x(elem, j, 1);
            --e;
        }
        while (e < 0 && !elem.is_zero()) {
            elem = lmul_x(elem, j, -1);
            ++e;
        }
    }
    return elem;
}

WreathElem CycAlgebra::reduce(const WreathElem& u) {
    int n = u.strands();
    if (level() == 0 && n > 0) return WreathElem::zero(u.algebra_ptr(), n);
    WreathElem out(u.algebra_ptr(), n);
    for (const auto& [m, c] : u.terms()) {
        bool in_range = true;
        for (int e : m.exps)
            if (e < 0 || e >= level()) in_range = false;
        if (in_range) {
            out.add_term(m, c);
            continue;
        }
        out = out + reduce_mono(m, c);
    }
    return out;
}

WreathElem CycAlgebra::mul(const WreathElem& u, const WreathElem& v) {
    return reduce(u * v);
}

WreathElem CycAlgebra::embed(const WreathElem& u, int bigger_n) {
    int n = u.strands();
    if (bigger_n < n) throw cyclotomic_error("embed target is smaller");
    WreathElem out = u;
    for (int m = n; m < bigger_n; ++m) {
        WreathElem next(u.algebra_ptr(), m + 1);
        const auto& unit = algebra().unit_coords();
        for (const auto& [mono, c] : out.terms()) {
            for (int b = 0; b < algebra().dim(); ++b) {
                if (unit[b].is_zero()) continue;
                WreathMono m2;
                m2.exps = mono.exps;
                m2.exps.push_back(0);
                m2.toks = mono.toks;
                m2.toks.push_back(b);
                std::vector<int> img;
                for (int j = 1; j <= m; ++j) img.push_back(mono.perm(j));
                img.push_back(m + 1);
                m2.perm = Perm(img);
                next.add_term(m2, c * unit[b]);
            }
        }
        out = next;
    }
    return out;
}

CycAlgebra::Split CycAlgebra::split(const WreathMono& m) {
    int n1 = (int)m.exps.size();  // n + 1
    int n = n1 - 1;
    if (n < 0) throw cyclotomic_error("split needs at least one strand");
    // j with g = g1 (s_n ... s_j): j = g^{-1}(n+1).
    int j = m.perm.inverse()(n1);
    // g1 = g composed with the inverse cycle (j -> n+1, p -> p-1 for p > j).
    std::vector<int> img(n);
    for (int p = 1; p <= n; ++p) {
        int src = (p < j) ? p : p + 1;
        img[p - 1] = m.perm(src);
        if (img[p - 1] > n1) throw cyclotomic_error("split: bad permutation");
    }
    // Values of g1 live in 1..n+1 minus {n+1}; they are already 1..n.
    Perm g1(img);

    WreathMono q;
    q.exps.assign(m.exps.begin(), m.exps.end() - 1);
    q.toks.assign(m.toks.begin(), m.toks.end() - 1);
    q.perm = g1;

    int b = m.toks[n1 - 1];
    int r = m.exps[n1 - 1];
    // Sign from moving the (n+1)-token right past the other tokens.
    Parity rest = Parity::even;
    for (int pos = 0; pos < n; ++pos) rest = rest + algebra().parity(m.toks[pos]);
    int sign = koszul_sign(rest, algebra().parity(b));
    return Split{sign, q, coset_index(n, r, b, j)};
}

MackeyDecomp CycAlgebra::mackey_decompose(const WreathElem& u) {
    int n1 = u.strands();
    int n = n1 - 1;
    if (n < 0) throw cyclotomic_error("mackey needs at least one strand");
    const auto& reps = coset_reps(n);
    MackeyDecomp out;
    std::map<WreathMono, WreathElem> sigma_acc;
    auto add_dot = [&](int r, int b, const WreathElem& w) {
        auto key = std::make_pair(r, b);
        auto it = out.dot_part.find(key);
        if (it == out.dot_part.end())
            out.dot_part.emplace(key, w);
        else
            it->second = it->second + w;
    };

    for (const auto& [m, c] : u.terms()) {
        Split sp = split(m);
        const CosetRep& rep = reps[sp.coset];
        Scalar coeff = sp.sign < 0 ? -c : c;
        if (rep.j == n + 1) {
            // m = sign x_{n+1}^r b^{(n+1)} q directly.
            WreathElem w(u.algebra_ptr(), n);
            w.add_term(sp.q, coeff);
            add_dot(rep.r, rep.b, w);
            continue;
        }
        // m = sign q . x_{n+1}^r b^{(n+1)} sigma_n . (sigma_{n-1} ... sigma_j)
        //   = sign q sigma_n x_n^r b^{(n)} suffix
        //     + z sum sign q x_{n+1}^{r'} x_n^{s'} tau_n b^{(n)} suffix.
        // Suffix word sigma_{n-1} ... sigma_j as a permutation of S_n.
        Perm suffix(n);
        for (int i = n - 1; i >= rep.j; --i)
            suffix = suffix.compose(Perm::transposition(n, i));

        // sigma part: w = x_n^r b^{(n)} sigma_{suffix}.
        {
            WreathMono w;
            w.exps.assign(n, 0);
            w.exps[n - 1] = rep.r;
            w.toks.assign(n, 0);
            w.perm = suffix;
            // Fill tokens with the unit except position n carrying b.
            WreathElem wel(u.algebra_ptr(), n);
            const auto& unit = algebra().unit_coords();
            std::vector<std::pair<WreathMono, Scalar>> partial{{w, coeff}};
            for (int pos = 0; pos < n - 1; ++pos) {
                std::vector<std::pair<WreathMono, Scalar>> next;
                for (auto& [mm, cc] : partial)
                    for (int bb = 0; bb < algebra().dim(); ++bb) {
                        if (unit[bb].is_zero()) continue;
                        WreathMono m2 = mm;
                        m2.toks[pos] = bb;
                        next.push_back({m2, cc * unit[bb]});
                    }
                partial = std::move(next);
            }
            for (auto& [mm, cc] : partial) {
                mm.toks[n - 1] = rep.b;
                auto it = sigma_acc.find(sp.q);
                if (it == sigma_acc.end()) {
                    WreathElem e(u.algebra_ptr(), n);
                    e.add_term(mm, cc);
                    sigma_acc.emplace(sp.q, e);
                } else {
                    it->second.add_term(mm, cc);
                }
            }
        }

        // Teleporter corrections: r' >= 1, s' >= 0, r' + s' = r.
        Parity q_parity = Parity::even;
        for (int tk : sp.q.toks) q_parity = q_parity + algebra().parity(tk);
        for (int rp = 1; rp <= rep.r; ++rp) {
            int s = rep.r - rp;
            // Start from q, multiply x_n^s (b_tel^vee b)^{(n)} sigma_suffix on
            // the right; b_tel^{(n+1)} and x_{n+1}^{r'} are pulled out front,
            // passing the tokens of q.
            WreathElem qe(u.algebra_ptr(), n);
            qe.add_term(sp.q, coeff * Scalar::z());
            for (int btel = 0; btel < algebra().dim(); ++btel) {
                AlgElem dual_b = algebra().dual(btel);
                AlgElem bfull = AlgElem::basis(algebra(), rep.b);
                WreathElem w = qe;
                if (s != 0) w = w.rmul_x(n, s);
                w = w.rmul_token(n, dual_b * bfull);
                for (int i : suffix.reduced_word()) w = w.rmul_sigma(i);
                w = reduce(w);
                if (koszul_sign(q_parity, algebra().parity(btel)) < 0)
                    w = w * Scalar(-1);
                if (!w.is_zero()) add_dot(rp, btel, w);
            }
        }
    }
    for (auto& [q, w] : sigma_acc) out.sigma_part.push_back({q, w});
    return out;
}

WreathElem CycAlgebra::mackey_reassemble(const MackeyDecomp& d, int n_plus_1) {
    int n = n_plus_1 - 1;
    WreathElem acc = WreathElem::zero(params_.algebra_ptr(), n_plus_1);
    for (const auto& [v, w] : d.sigma_part) {
        WreathElem ve(params_.algebra_ptr(), n);
        ve.add_term(v, Scalar(1));
        WreathElem term = embed(ve, n_plus_1) *
                          WreathElem::sigma(params_.algebra_ptr(), n_plus_1, n) *
                          embed(w, n_plus_1);
        acc = acc + term;
    }
    for (const auto& [key, w] : d.dot_part) {
        auto [r, b] = key;
        WreathElem head = WreathElem::x(params_.algebra_ptr(), n_plus_1, n + 1, r) *
                          WreathElem::token(params_.algebra_ptr(), n_plus_1, n + 1,
                                            AlgElem::basis(algebra(), b));
        acc = acc + head * embed(w, n_plus_1);
    }
    return reduce(acc);
}

WreathElem CycAlgebra::cyclotomic_trace(const WreathElem& u) {
    int n1 = u.strands();
    MackeyDecomp d = mackey_decompose(u);
    WreathElem acc = WreathElem::zero(params_.algebra_ptr(), n1 - 1);
    for (const auto& [key, w] : d.dot_part) {
        auto [r, b] = key;
        if (r != 0) continue;
        acc = acc + w * algebra().trace_coeff(b);
    }
    return acc;
}

WreathElem CycAlgebra::f_of_x(int n, int j) {
    int l = level();
    WreathElem acc = WreathElem::zero(params_.algebra_ptr(), n);
    for (int i = 0; i <= l; ++i) {
        WreathElem term = WreathElem::token(params_.algebra_ptr(), n, j, params_.coeff(i));
        if (l - i > 0) term = term * WreathElem::x(params_.algebra_ptr(), n, j, l - i);
        acc = acc + term;
    }
    return acc;
}

} // namespace heiscat
