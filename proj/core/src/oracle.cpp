#include "heiscat/oracle.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace heiscat {

ActionContext::ActionContext(CycParams params, int base_weight) : base_(base_weight) {
    if (!params.has_t2_normalization())
        throw oracle_error("the categorical action needs f_l = t^2");
    if (base_weight < 0) throw oracle_error("negative base weight");
    alg_ = std::make_shared<CycAlgebra>(std::move(params));
}

ScalarMat ScalarMat::identity(long n) {
    ScalarMat m;
    m.rows = m.cols = n;
    m.col.resize(n);
    for (long i = 0; i < n; ++i) m.col[i][i] = Scalar(1);
    return m;
}

ScalarMat ScalarMat::mul(const ScalarMat& o) const {
    if (cols != o.rows) throw oracle_error("matrix dimension mismatch");
    ScalarMat out;
    out.rows = rows;
    out.cols = o.cols;
    out.col.resize(o.cols);
    for (long j = 0; j < o.cols; ++j) {
        for (const auto& [k, c] : o.col[j]) {
            for (const auto& [i, a] : col[k]) {
                Scalar v = a * c;
                if (v.is_zero()) continue;
                auto it = out.col[j].find(i);
                if (it == out.col[j].end()) {
                    out.col[j][i] = v;
                } else {
                    it->second += v;
                    if (it->second.is_zero()) out.col[j].erase(it);
                }
            }
        }
    }
    return out;
}

bool ScalarMat::operator==(const ScalarMat& o) const {
    return rows == o.rows && cols == o.cols && col == o.col;
}

ScalarMat ScalarMat::operator-(const ScalarMat& o) const {
    if (rows != o.rows || cols != o.cols) throw oracle_error("matrix shape mismatch");
    ScalarMat out = *this;
    for (long j = 0; j < cols; ++j) {
        for (const auto& [i, c] : o.col[j]) {
            auto it = out.col[j].find(i);
            if (it == out.col[j].end()) {
                out.col[j][i] = -c;
            } else {
                it->second -= c;
                if (it->second.is_zero()) out.col[j].erase(it);
            }
        }
    }
    return out;
}

bool ScalarMat::is_zero() const {
    for (const auto& c : col)
        if (!c.empty()) return false;
    return true;
}

namespace {

// Sparse vector over module labels.
using Vec = std::map<long, Scalar>;

struct OracleEval {
    const ActionContext& ctx;
    CycAlgebra& alg;

    explicit OracleEval(const ActionContext& c) : ctx(c), alg(c.alg()) {}

    ModuleBasis object_basis(const Word& w) const {
        ModuleBasis b;
        b.word = w;
        int weight = ctx.base_weight();
        b.base_dim = (long)CycAlgebra::dimension(alg.params(), weight)
                         .convert_to<long>();
        b.dim = b.base_dim;
        b.weight = weight;
        // Letters act right to left.
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            ModuleBasis::Step s;
            s.letter = *it;
            s.weight_before = weight;
            if (*it == Letter::up) {
                s.cosets = (int)alg.coset_reps(weight).size();
                b.dim *= s.cosets;
                ++weight;
            } else {
                s.cosets = 0;
                --weight;
                if (weight < 0) b.zero = true;
            }
            b.steps.push_back(s);
        }
        b.weight = weight;
        // Level zero is handled implicitly: coset counts and the base
        // dimension both vanish in positive weight.
        if (b.zero) b.dim = 0;
        return b;
    }

    Parity label_parity(const ModuleBasis& mb, long label) const {
        Parity p = Parity::even;
        long idx = label;
        for (auto it = mb.steps.rbegin(); it != mb.steps.rend(); ++it) {
            if (it->letter == Letter::up) {
                int c = (int)(idx % it->cosets);
                idx /= it->cosets;
                const CosetRep& rep = alg.coset_reps(it->weight_before)[c];
                p = p + alg.algebra().parity(rep.b);
            }
        }
        const auto& mono = alg.basis(ctx.base_weight()).monos[idx];
        for (int b : mono.toks) p = p + alg.algebra().parity(b);
        return p;
    }

    WreathElem coset_elem(int weight_before, int c) const {
        const CosetRep& rep = alg.coset_reps(weight_before)[c];
        int n1 = weight_before + 1;
        auto A = alg.algebra_ptr();
        WreathElem e = WreathElem::x(A, n1, n1, rep.r) *
                       WreathElem::token(A, n1, n1, AlgElem::basis(alg.algebra(), rep.b));
        for (int i = weight_before; i >= rep.j; --i) e = e * WreathElem::sigma(A, n1, i);
        return alg.reduce(e);
    }

    // Right action of u (at the weight of `mb`) on a basis label.
    Vec right_action(const ModuleBasis& mb, int depth, long label,
                     const WreathElem& u, const Scalar& coeff) const {
        Vec out;
        if (coeff.is_zero() || u.is_zero()) return out;
        if (depth == 0) {
            // Regular module of QWA_{n0}.
            const auto& basis = alg.basis(ctx.base_weight());
            WreathElem m(alg.algebra_ptr(), ctx.base_weight());
            m.add_term(basis.monos[label], coeff);
            WreathElem prod = alg.mul(m, u);
            for (const auto& [mono, c] : prod.terms()) out[basis.index.at(mono)] += c;
            for (auto it = out.begin(); it != out.end();)
                it = it->second.is_zero() ? out.erase(it) : std::next(it);
            return out;
        }
        const auto& st = mb.steps[depth - 1];
        if (st.letter == Letter::down) {
            // Restriction: act through the embedding one weight up.
            WreathElem emb = alg.embed(u, st.weight_before);
            return right_action(mb, depth - 1, label, emb, coeff);
        }
        int cosets = st.cosets;
        long c = label % cosets;
        long rest = label / cosets;
        int wb = st.weight_before;
        WreathElem v = alg.mul(coset_elem(wb, (int)c), u);
        for (const auto& [mono, cf] : v.terms()) {
            auto sp = alg.split(mono);
            WreathElem q(alg.algebra_ptr(), wb);
            q.add_term(sp.q, Scalar(1));
            Scalar cc = coeff * cf;
            if (sp.sign < 0) cc = -cc;
            Vec inner = right_action(mb, depth - 1, rest, q, cc);
            for (const auto& [l2, c2] : inner) {
                long idx = l2 * cosets + sp.coset;
                auto it = out.find(idx);
                if (it == out.end())
                    out[idx] = c2;
                else {
                    it->second += c2;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    }

    Vec right_action(const ModuleBasis& mb, long label, const WreathElem& u) const {
        return right_action(mb, (int)mb.steps.size(), label, u, Scalar(1));
    }

    // Expand a matrix on the inner module through the letters to the left of
    // the slice: identity on their tuple components.
    static ScalarMat extend_left(const ScalarMat& m, long left_radix) {
        if (left_radix == 1) return m;
        ScalarMat out;
        out.rows = m.rows * left_radix;
        out.cols = m.cols * left_radix;
        out.col.resize(out.cols);
        for (long j = 0; j < m.cols; ++j)
            for (const auto& [i, c] : m.col[j])
                for (long t = 0; t < left_radix; ++t)
                    out.col[j * left_radix + t][i * left_radix + t] = c;
        return out;
    }

    // Matrix of one slice applied to a module with word w.
    ScalarMat slice_matrix(const Word& w, const Slice& s) const {
        Word w_out = apply_slice(w, s);
        ModuleBasis src = object_basis(w);
        ModuleBasis tgt = object_basis(w_out);
        ScalarMat out;
        out.rows = tgt.dim;
        out.cols = src.dim;
        out.col.resize((size_t)std::max<long>(src.dim, 0));
        if (src.dim == 0 || tgt.dim == 0) return out;

        // Non-primitive slices evaluate through their defining composites.
        switch (s.kind) {
            case GenKind::downdot: {
                std::vector<Slice> sub{Slice{GenKind::cupR, s.pos, 0},
                                       Slice{GenKind::updot, s.pos + 1, s.arg},
                                       Slice{GenKind::capR, s.pos + 1, 0}};
                return composite_matrix(w, sub);
            }
            case GenKind::downtok: {
                std::vector<Slice> sub{Slice{GenKind::cupR, s.pos, 0},
                                       Slice{GenKind::uptok, s.pos + 1, s.arg},
                                       Slice{GenKind::capR, s.pos + 1, 0}};
                return composite_matrix(w, sub);
            }
            case GenKind::rightcross: {
                std::vector<Slice> sub{Slice{GenKind::cupR, s.pos, 0},
                                       Slice{GenKind::upcross, s.pos + 1, s.arg},
                                       Slice{GenKind::capR, s.pos + 2, 0}};
                return composite_matrix(w, sub);
            }
            case GenKind::leftcross: {
                std::vector<Slice> sub{Slice{GenKind::cupL, s.pos + 2, 0},
                                       Slice{GenKind::upcross, s.pos + 1, s.arg},
                                       Slice{GenKind::capL, s.pos, 0}};
                return composite_matrix(w, sub);
            }
            case GenKind::downcross: {
                std::vector<Slice> sub{Slice{GenKind::cupR, s.pos, 0},
                                       Slice{GenKind::rightcross, s.pos + 1, s.arg},
                                       Slice{GenKind::capR, s.pos + 2, 0}};
                return composite_matrix(w, sub);
            }
            default: break;
        }

        int nin = gen_arity_in(s.kind);
        // Inner module: letters strictly right of the slice inputs.
        Word inner_word(w.begin() + (s.pos - 1 + nin), w.end());
        ModuleBasis inner = object_basis(inner_word);
        // Left radix: product of coset counts of letters left of the slice.
        long left_radix = 1;
        {
            Word left_word(w.begin(), w.begin() + (s.pos - 1));
            // Left letters are applied after the slice; their weights are
            // computed over the FULL word, but coset counts only depend on
            // the weight below them, which the slice preserves.
            int weight = inner.weight;
            // Account for the slice's input letters.
            for (int i = 0; i < nin; ++i)
                weight += (in_letter_of(s.kind, i) == Letter::up) ? 1 : -1;
            // replaced by outputs:
            // recompute from outputs for the target; for radix we only need
            // the letters left of the slice against the net weight, which is
            // the same for source and target.
            for (auto it = left_word.rbegin(); it != left_word.rend(); ++it) {
                if (*it == Letter::up) {
                    left_radix *= (long)alg.coset_reps(weight).size();
                    ++weight;
                } else {
                    --weight;
                    if (weight < 0) left_radix = 0;
                }
            }
        }
        if (left_radix == 0) return out;  // zero module anyway

        ScalarMat comp = component_matrix(inner, s.kind, s.arg);
        return extend_left(comp, left_radix);
    }

    static Letter in_letter_of(GenKind k, int i) {
        switch (k) {
            case GenKind::updot:
            case GenKind::uptok:
            case GenKind::upcross: return Letter::up;
            case GenKind::capR: return i == 0 ? Letter::up : Letter::down;
            case GenKind::capL: return i == 0 ? Letter::down : Letter::up;
            default: return Letter::up;
        }
    }

    ScalarMat composite_matrix(Word w, const std::vector<Slice>& slices) const {
        ScalarMat m = ScalarMat::identity(object_basis(w).dim);
        for (const auto& s : slices) {
            ScalarMat sm = slice_matrix(w, s);
            m = sm.mul(m);
            w = apply_slice(w, s);
        }
        return m;
    }

    // The component of the generator at the inner module (letters to the
    // right already applied).
    ScalarMat component_matrix(const ModuleBasis& inner, GenKind kind, int arg) const {
        int w = inner.weight;
        auto A = alg.algebra_ptr();
        switch (kind) {
            case GenKind::uptok: {
                int cosets = (int)alg.coset_reps(w).size();
                long dim = inner.dim * cosets;
                ScalarMat m{dim, dim, {}};
                m.col.resize(dim);
                for (long lab = 0; lab < inner.dim; ++lab) {
                    Parity pl = label_parity(inner, lab);
                    int sign = koszul_sign(pl, alg.algebra().parity(arg));
                    for (int c = 0; c < cosets; ++c) {
                        WreathElem v =
                            alg.lmul_token_basis(coset_elem(w, c), w + 1, arg);
                        add_split_action(m, inner, lab, c, cosets, v,
                                         sign < 0 ? Scalar(-1) : Scalar(1));
                    }
                }
                return m;
            }
            case GenKind::updot: {
                int cosets = (int)alg.coset_reps(w).size();
                long dim = inner.dim * cosets;
                ScalarMat m{dim, dim, {}};
                m.col.resize(dim);
                for (long lab = 0; lab < inner.dim; ++lab)
                    for (int c = 0; c < cosets; ++c) {
                        WreathElem v = coset_elem(w, c);
                        int e = arg;
                        while (e > 0) {
                            v = alg.lmul_x(v, w + 1, 1);
                            --e;
                        }
                        while (e < 0) {
                            v = alg.lmul_x(v, w + 1, -1);
                            ++e;
                        }
                        add_split_action(m, inner, lab, c, cosets, v, Scalar(1));
                    }
                return m;
            }
            case GenKind::upcross: {
                int cos1 = (int)alg.coset_reps(w).size();
                int cos2 = (int)alg.coset_reps(w + 1).size();
                long dim = inner.dim * cos1 * cos2;
                ScalarMat m{dim, dim, {}};
                m.col.resize(dim);
                for (long lab = 0; lab < inner.dim; ++lab)
                    for (int c1 = 0; c1 < cos1; ++c1) {
                        WreathElem c1e = alg.embed(coset_elem(w, c1), w + 2);
                        for (int c2 = 0; c2 < cos2; ++c2) {
                            WreathElem E = alg.mul(c1e, coset_elem(w + 1, c2));
                            WreathElem E2 = alg.lmul_sigma(E, w + 1);
                            if (arg < 0) {
                                for (int b = 0; b < alg.algebra().dim(); ++b) {
                                    WreathElem t =
                                        alg.lmul_token(E, w + 1, alg.algebra().dual(b));
                                    t = alg.lmul_token_basis(t, w + 2, b);
                                    E2 = E2 - t * Scalar::z();
                                }
                            }
                            // Double split: level w+2 then w+1.
                            for (const auto& [mono, cf] : E2.terms()) {
                                auto sp2 = alg.split(mono);
                                WreathElem q2(A, w + 1);
                                q2.add_term(sp2.q, sp2.sign < 0 ? -cf : cf);
                                for (const auto& [mono1, cf1] : q2.terms()) {
                                    auto sp1 = alg.split(mono1);
                                    WreathElem q1(A, w);
                                    q1.add_term(sp1.q, sp1.sign < 0 ? -cf1 : cf1);
                                    Vec inner_vec = right_action(inner, lab, q1);
                                    for (const auto& [l2, c2v] : inner_vec) {
                                        long row =
                                            (l2 * cos1 + sp1.coset) * cos2 + sp2.coset;
                                        long colidx = (lab * cos1 + c1) * cos2 + c2;
                                        auto& cell = m.col[colidx];
                                        auto it = cell.find(row);
                                        if (it == cell.end())
                                            cell[row] = c2v;
                                        else {
                                            it->second += c2v;
                                            if (it->second.is_zero()) cell.erase(it);
                                        }
                                    }
                                }
                            }
                        }
                    }
                return m;
            }
            case GenKind::cupR: {
                int cosets = (int)alg.coset_reps(w).size();
                ScalarMat m{inner.dim * cosets, inner.dim, {}};
                m.col.resize(inner.dim);
                const auto& unit = alg.algebra().unit_coords();
                for (long lab = 0; lab < inner.dim; ++lab)
                    for (int b = 0; b < alg.algebra().dim(); ++b) {
                        if (unit[b].is_zero()) continue;
                        int c = alg.coset_index(w, 0, b, w + 1);
                        m.col[lab][lab * cosets + c] = unit[b];
                    }
                return m;
            }
            case GenKind::capR: {
                // Inner has weight w; the cap's letters are (up, down): the
                // down restricts to w-1, the up inducts back to w.
                if (w == 0) {
                    // Source already collapsed to the zero module.
                    ScalarMat m{inner.dim, 0, {}};
                    return m;
                }
                int cosets = (int)alg.coset_reps(w - 1).size();
                ScalarMat m{inner.dim, inner.dim * cosets, {}};
                m.col.resize(inner.dim * cosets);
                for (long lab = 0; lab < inner.dim; ++lab)
                    for (int c = 0; c < cosets; ++c) {
                        WreathElem ce = alg.embed(coset_elem(w - 1, c), w);
                        Vec v = right_action(inner, lab, ce);
                        for (const auto& [l2, cv] : v) m.col[lab * cosets + c][l2] = cv;
                    }
                return m;
            }
            case GenKind::capL: {
                int cosets = (int)alg.coset_reps(w).size();
                ScalarMat m{inner.dim, inner.dim * cosets, {}};
                m.col.resize(inner.dim * cosets);
                Scalar pref = -(Scalar::t().inv() / Scalar::z());
                for (long lab = 0; lab < inner.dim; ++lab)
                    for (int c = 0; c < cosets; ++c) {
                        WreathElem tr = alg.cyclotomic_trace(coset_elem(w, c));
                        Vec v = right_action(inner, lab, tr);
                        for (const auto& [l2, cv] : v)
                            m.col[lab * cosets + c][l2] = cv * pref;
                    }
                return m;
            }
            case GenKind::cupL: {
                // N -> ind_{w-1}^w res N via t^{-1} Lcross(dot^l (cupR)).
                if (w == 0 || alg.level() == 0) {
                    ScalarMat m{0, inner.dim, {}};
                    m.col.resize(inner.dim);
                    return m;
                }
                int cosets = (int)alg.coset_reps(w - 1).size();
                ScalarMat m{inner.dim * cosets, inner.dim, {}};
                m.col.resize(inner.dim);
                // v0 = x_{w+1}^l in QWA_{w+1}^f.
                WreathElem v0 = alg.reduce(
                    WreathElem::x(A, w + 1, w + 1, alg.level()));
                MackeyDecomp d = alg.mackey_decompose(v0);
                Scalar pref = Scalar::t().inv();
                for (long lab = 0; lab < inner.dim; ++lab) {
                    for (const auto& [u_mono, w_elem] : d.sigma_part) {
                        WreathElem u(A, w);
                        u.add_term(u_mono, Scalar(1));
                        Vec mid = right_action(inner, lab, u);
                        if (mid.empty()) continue;
                        for (const auto& [mono, cf] : w_elem.terms()) {
                            auto sp = alg.split(mono);
                            WreathElem q(A, w - 1);
                            q.add_term(sp.q, sp.sign < 0 ? -cf : cf);
                            WreathElem qe = alg.embed(q, w);
                            for (const auto& [l2, c2] : mid) {
                                Vec fin = right_action(inner, l2,
                                                       qe * (c2 * pref));
                                for (const auto& [l3, c3] : fin) {
                                    auto& cell = m.col[lab];
                                    long row = l3 * cosets + sp.coset;
                                    auto it = cell.find(row);
                                    if (it == cell.end())
                                        cell[row] = c3;
                                    else {
                                        it->second += c3;
                                        if (it->second.is_zero()) cell.erase(it);
                                    }
                                }
                            }
                        }
                    }
                }
                return m;
            }
            default:
                throw oracle_error("unsupported generator in component_matrix");
        }
    }

    void add_split_action(ScalarMat& m, const ModuleBasis& inner, long lab, int c,
                          int cosets, const WreathElem& v, const Scalar& pre) const {
        int w = inner.weight;
        auto A = alg.algebra_ptr();
        for (const auto& [mono, cf] : v.terms()) {
            auto sp = alg.split(mono);
            WreathElem q(A, w);
            Scalar cc = cf * pre;
            if (sp.sign < 0) cc = -cc;
            q.add_term(sp.q, cc);
            Vec inner_vec = right_action(inner, lab, q);
            for (const auto& [l2, c2] : inner_vec) {
                long row = l2 * cosets + sp.coset;
                long colidx = lab * cosets + c;
                auto& cell = m.col[colidx];
                auto it = cell.find(row);
                if (it == cell.end())
                    cell[row] = c2;
                else {
                    it->second += c2;
                    if (it->second.is_zero()) cell.erase(it);
                }
            }
        }
    }

    // Evaluate a Sym coefficient as a matrix on the base module M0.
    ScalarMat coeff_matrix(const SymElem& e) const {
        long base = object_basis({}).dim;
        ScalarMat acc{base, base, {}};
        acc.col.resize(base);
        int l = alg.level();
        for (const auto& [mono, c] : e.terms()) {
            ScalarMat term = ScalarMat::identity(base);
            for (const auto& [g, exp] : mono) {
                int rep = alg.algebra().center_cocenter().cocenter_rep_indices[g.j];
                AlgElem a = AlgElem::basis(alg.algebra(), rep);
                // e_n(a)(x)1 = (-1)^n (z/t) [ccw bubble, n+l dots];
                // 1(x)e_n(a) = (-1)^{n-1} (tz) [ccw bubble, -n dots].
                Morphism bub = macro::bubble(alg.algebra_ptr(),
                                             BubbleOrientation::counterclockwise, a,
                                             g.side == 0 ? g.n + l : -g.n);
                Scalar pref = g.side == 0 ? Scalar::z() / Scalar::t()
                                          : Scalar::t() * Scalar::z();
                if ((g.side == 0 && g.n % 2) || (g.side == 1 && g.n % 2 == 0))
                    pref = -pref;
                ScalarMat bm{base, base, {}};
                bm.col.resize(base);
                for (const auto& [t, tc] : bub.terms()) {
                    ScalarMat tm = composite_matrix({}, t.slices);
                    if (!tc.is_scalar()) throw oracle_error("nested coefficient");
                    Scalar sc = tc.scalar_part();
                    for (long j = 0; j < base; ++j)
                        for (const auto& [i, v] : tm.col[j]) {
                            auto it = bm.col[j].find(i);
                            Scalar add = v * sc;
                            if (it == bm.col[j].end())
                                bm.col[j][i] = add;
                            else {
                                it->second += add;
                                if (it->second.is_zero()) bm.col[j].erase(it);
                            }
                        }
                }
                for (int rr = 0; rr < exp; ++rr) {
                    ScalarMat scaled = bm;
                    for (auto& colv : scaled.col)
                        for (auto& [i, v] : colv) v *= pref;
                    term = scaled.mul(term);
                }
            }
            for (long j = 0; j < base; ++j)
                for (const auto& [i, v] : term.col[j]) {
                    Scalar add = v * c;
                    if (add.is_zero()) continue;
                    auto it = acc.col[j].find(i);
                    if (it == acc.col[j].end())
                        acc.col[j][i] = add;
                    else {
                        it->second += add;
                        if (it->second.is_zero()) acc.col[j].erase(it);
                    }
                }
        }
        return acc;
    }

    // Extend a base-module matrix through the whole source word.
    ScalarMat extend_through_word(const ScalarMat& m, const Word& w) const {
        ModuleBasis b = object_basis(w);
        if (b.dim == 0) {
            ScalarMat z{0, 0, {}};
            return z;
        }
        long radix = b.base_dim == 0 ? 0 : b.dim / b.base_dim;
        // The base component is the most significant digit.
        ScalarMat out{b.dim, b.dim, {}};
        out.col.resize(b.dim);
        for (long j0 = 0; j0 < m.cols; ++j0)
            for (const auto& [i0, c] : m.col[j0])
                for (long t = 0; t < radix; ++t)
                    out.col[j0 * radix + t][i0 * radix + t] = c;
        return out;
    }
};

} // namespace

ModuleBasis Oracle::eval_object(const Word& w) const {
    return OracleEval(ctx_).object_basis(w);
}

ModuleMap Oracle::eval_morphism(const Morphism& f) const {
    OracleEval ev(ctx_);
    ModuleMap out;
    out.source = ev.object_basis(f.source());
    out.target = ev.object_basis(f.target());
    out.mat.rows = out.target.dim;
    out.mat.cols = out.source.dim;
    out.mat.col.resize(out.source.dim);
    for (const auto& [t, c] : f.terms()) {
        ScalarMat m = ev.extend_through_word(ev.coeff_matrix(c), f.source());
        ScalarMat d = ev.composite_matrix(t.source, t.slices);
        ScalarMat prod = d.mul(m);
        for (long j = 0; j < prod.cols; ++j)
            for (const auto& [i, v] : prod.col[j]) {
                auto it = out.mat.col[j].find(i);
                if (it == out.mat.col[j].end())
                    out.mat.col[j][i] = v;
                else {
                    it->second += v;
                    if (it->second.is_zero()) out.mat.col[j].erase(it);
                }
            }
    }
    return out;
}

bool Oracle::maps_equal(const ModuleMap& a, const ModuleMap& b) const {
    return a.source.word == b.source.word && a.target.word == b.target.word &&
           a.mat == b.mat;
}

std::vector<std::vector<Rational>> Oracle::specialize(const ModuleMap& m,
                                                      const Rational& z0,
                                                      const Rational& t0) const {
    std::vector<std::vector<Rational>> out(
        (size_t)m.mat.rows, std::vector<Rational>((size_t)m.mat.cols, Rational(0)));
    for (long j = 0; j < m.mat.cols; ++j)
        for (const auto& [i, v] : m.mat.col[j]) out[i][j] = v.specialize(z0, t0);
    return out;
}

std::string module_map_json(const ModuleMap& m) {
    nlohmann::json j;
    j["source_word"] = word_str(m.source.word);
    j["target_word"] = word_str(m.target.word);
    j["rows"] = m.mat.rows;
    j["cols"] = m.mat.cols;
    nlohmann::json entries = nlohmann::json::array();
    for (long c = 0; c < m.mat.cols; ++c)
        for (const auto& [r, v] : m.mat.col[c]) {
            nlohmann::json e;
            e["row"] = r;
            e["col"] = c;
            e["value"] = v.str();
            entries.push_back(e);
        }
    j["entries"] = entries;
    return j.dump(2);
}

} // namespace heiscat
