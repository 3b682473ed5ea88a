#include "heiscat/diagram.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace heiscat {

std::string word_str(const Word& w) {
    std::string s;
    for (Letter l : w) s += (l == Letter::up ? "^" : "v");
    return s.empty() ? "1" : s;
}

Word flip_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(l == Letter::up ? Letter::down : Letter::up);
    return out;
}

int gen_arity_in(GenKind k) {
    switch (k) {
        case GenKind::updot:
        case GenKind::downdot:
        case GenKind::uptok:
        case GenKind::downtok: return 1;
        case GenKind::upcross:
        case GenKind::downcross:
        case GenKind::rightcross:
        case GenKind::leftcross: return 2;
        case GenKind::cupR:
        case GenKind::cupL: return 0;
        case GenKind::capR:
        case GenKind::capL: return 2;
    }
    return 0;
}

int gen_arity_out(GenKind k) {
    switch (k) {
        case GenKind::updot:
        case GenKind::downdot:
        case GenKind::uptok:
        case GenKind::downtok: return 1;
        case GenKind::upcross:
        case GenKind::downcross:
        case GenKind::rightcross:
        case GenKind::leftcross: return 2;
        case GenKind::cupR:
        case GenKind::cupL: return 2;
        case GenKind::capR:
        case GenKind::capL: return 0;
    }
    return 0;
}

namespace {

void expect(bool ok, const std::string& msg) {
    if (!ok) throw diagram_error(msg);
}

Letter in_letter(GenKind k, int leg) {
    switch (k) {
        case GenKind::updot:
        case GenKind::uptok: return Letter::up;
        case GenKind::downdot:
        case GenKind::downtok: return Letter::down;
        case GenKind::upcross: return Letter::up;
        case GenKind::downcross: return Letter::down;
        case GenKind::rightcross: return leg == 0 ? Letter::up : Letter::down;
        case GenKind::leftcross: return leg == 0 ? Letter::down : Letter::up;
        case GenKind::capR: return leg == 0 ? Letter::up : Letter::down;
        case GenKind::capL: return leg == 0 ? Letter::down : Letter::up;
        default: throw diagram_error("generator has no inputs");
    }
}

Letter out_letter(GenKind k, int leg) {
    switch (k) {
        case GenKind::updot:
        case GenKind::uptok: return Letter::up;
        case GenKind::downdot:
        case GenKind::downtok: return Letter::down;
        case GenKind::upcross: return Letter::up;
        case GenKind::downcross: return Letter::down;
        case GenKind::rightcross: return leg == 0 ? Letter::down : Letter::up;
        case GenKind::leftcross: return leg == 0 ? Letter::up : Letter::down;
        case GenKind::cupR: return leg == 0 ? Letter::down : Letter::up;
        case GenKind::cupL: return leg == 0 ? Letter::up : Letter::down;
        default: throw diagram_error("generator has no outputs");
    }
}

} // namespace

Word apply_slice(const Word& w, const Slice& s) {
    int nin = gen_arity_in(s.kind);
    int nout = gen_arity_out(s.kind);
    expect(s.pos >= 1 && s.pos - 1 + nin <= (int)w.size() + (nin == 0 ? 1 : 0),
           "slice position out of range");
    if (nin == 0) expect(s.pos <= (int)w.size() + 1, "cup position out of range");
    for (int i = 0; i < nin; ++i)
        expect(w[s.pos - 1 + i] == in_letter(s.kind, i),
               "orientation mismatch applying slice");
    Word out;
    out.insert(out.end(), w.begin(), w.begin() + (s.pos - 1));
    for (int i = 0; i < nout; ++i) out.push_back(out_letter(s.kind, i));
    out.insert(out.end(), w.begin() + (s.pos - 1 + nin), w.end());
    if (s.kind == GenKind::updot || s.kind == GenKind::downdot)
        expect(s.arg != 0, "dot exponent must be nonzero");
    return out;
}

Word term_target(const DiagramTerm& t) {
    Word w = t.source;
    for (const auto& s : t.slices) w = apply_slice(w, s);
    return w;
}

Morphism::Morphism(std::shared_ptr<const Frobenius> A, Word source, Word target)
    : A_(std::move(A)), source_(std::move(source)), target_(std::move(target)) {}

Morphism Morphism::identity(std::shared_ptr<const Frobenius> A, const Word& w) {
    Morphism m(A, w, w);
    m.add_term(DiagramTerm{w, {}}, SymElem(Scalar(1)));
    return m;
}

Morphism Morphism::from_term(std::shared_ptr<const Frobenius> A, DiagramTerm t,
                             SymElem coeff) {
    Word tgt = term_target(t);
    Morphism m(A, t.source, tgt);
    m.add_term(t, coeff);
    return m;
}

Morphism Morphism::generator(std::shared_ptr<const Frobenius> A, const Word& w,
                             GenKind kind, int pos, int arg) {
    DiagramTerm t{w, {Slice{kind, pos, arg}}};
    return from_term(A, t);
}

void Morphism::add_term(const DiagramTerm& t, const SymElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_[t] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Morphism Morphism::operator+(const Morphism& o) const {
    expect(source_ == o.source_ && target_ == o.target_,
           "adding morphisms with different boundaries");
    Morphism out = *this;
    for (const auto& [t, c] : o.terms_) out.add_term(t, c);
    return out;
}

Morphism Morphism::operator-(const Morphism& o) const {
    expect(source_ == o.source_ && target_ == o.target_,
           "subtracting morphisms with different boundaries");
    Morphism out = *this;
    for (const auto& [t, c] : o.terms_) out.add_term(t, c * Scalar(-1));
    return out;
}

Morphism Morphism::operator*(const Scalar& c) const {
    Morphism out(A_, source_, target_);
    if (c.is_zero()) return out;
    for (const auto& [t, v] : terms_) out.terms_[t] = v * c;
    return out;
}

Morphism Morphism::scaled(const SymElem& c, const SymContext& ctx) const {
    Morphism out(A_, source_, target_);
    for (const auto& [t, v] : terms_) out.add_term(t, ctx.mul(v, c));
    return out;
}

namespace {

Parity term_parity(const Frobenius& A, const DiagramTerm& t) {
    Parity p = Parity::even;
    for (const auto& s : t.slices)
        if (s.kind == GenKind::uptok || s.kind == GenKind::downtok)
            p = p + A.parity(s.arg);
    return p;
}

} // namespace

Morphism Morphism::compose(const Morphism& o) const {
    expect(o.target_ == source_, "composition boundary mismatch");
    SymContext ctx(A_, 0);
    Morphism out(A_, o.source_, target_);
    for (const auto& [tf, cf] : terms_) {
        for (const auto& [tg, cg] : o.terms_) {
            DiagramTerm t;
            t.source = tg.source;
            t.slices = tg.slices;
            t.slices.insert(t.slices.end(), tf.slices.begin(), tf.slices.end());
            // Coefficients sit at the far right; stacking this over o passes
            // cf down past the diagram part of o.
            SymElem c = ctx.mul(cf, cg);
            if (is_odd(ctx.elem_parity(cf)) && is_odd(term_parity(*A_, tg)))
                c = c * Scalar(-1);
            out.add_term(t, c);
        }
    }
    return out;
}

Morphism Morphism::tensor(const Morphism& o) const {
    SymContext ctx(A_, 0);
    Word src = source_;
    src.insert(src.end(), o.source_.begin(), o.source_.end());
    Word tgt = target_;
    tgt.insert(tgt.end(), o.target_.begin(), o.target_.end());
    Morphism out(A_, src, tgt);
    for (const auto& [tf, cf] : terms_) {
        // A genuine Sym coefficient cannot slide across the right factor
        // without corrections; constructors only ever tensor with scalar
        // coefficients on the left.
        if (!cf.is_scalar() && !o.source_.empty())
            throw diagram_error("tensor with non-scalar left coefficient");
        for (const auto& [tg, cg] : o.terms_) {
            DiagramTerm t;
            t.source = src;
            t.slices = tf.slices;
            int shift = (int)source_.size();
            // The left factor's slices keep their columns; the right factor's
            // shift by the width of the left factor at the relevant height.
            // Since the left factor's slices sit below, the width offset for
            // the right factor is the left TARGET width.
            Word mid = target_;
            for (const auto& s : tf.slices) (void)s;
            (void)mid;
            for (Slice s : tg.slices) {
                s.pos += (int)target_.size();
                t.slices.push_back(s);
            }
            // Recompute: while the left slices run, the right columns are at
            // offset source width; we placed left slices first so the right
            // factor's slices all sit above them, where the left occupies
            // target width columns.
            (void)shift;
            out.add_term(t, ctx.mul(cf, cg));
        }
    }
    return out;
}

std::string Morphism::str() const {
    std::ostringstream os;
    os << word_str(source_) << " -> " << word_str(target_) << ": ";
    if (terms_.empty()) {
        os << "0";
        return os.str();
    }
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(*A_) << ") * [" << term_str(t, *A_) << "]";
    }
    return os.str();
}

namespace macro {

Morphism down_dot(std::shared_ptr<const Frobenius> A, const Word& w, int pos, int exp) {
    expect(pos >= 1 && pos <= (int)w.size() && w[pos - 1] == Letter::down,
           "down dot needs a downward letter");
    DiagramTerm t{w,
                  {Slice{GenKind::cupR, pos, 0}, Slice{GenKind::updot, pos + 1, exp},
                   Slice{GenKind::capR, pos + 1, 0}}};
    return Morphism::from_term(A, t);
}

Morphism down_token(std::shared_ptr<const Frobenius> A, const Word& w, int pos,
                    const AlgElem& a) {
    expect(pos >= 1 && pos <= (int)w.size() && w[pos - 1] == Letter::down,
           "down token needs a downward letter");
    Morphism out(A, w, w);
    for (int b = 0; b < A->dim(); ++b) {
        if (a.coords()[b].is_zero()) continue;
        DiagramTerm t{w,
                      {Slice{GenKind::cupR, pos, 0}, Slice{GenKind::uptok, pos + 1, b},
                       Slice{GenKind::capR, pos + 1, 0}}};
        out.add_term(t, SymElem(a.coords()[b]));
    }
    return out;
}

Morphism right_cross_expanded(std::shared_ptr<const Frobenius> A, const Word& w,
                              int pos, int sign) {
    expect(pos + 1 <= (int)w.size() && w[pos - 1] == Letter::up &&
               w[pos] == Letter::down,
           "right crossing needs (up, down)");
    DiagramTerm t{w,
                  {Slice{GenKind::cupR, pos, 0}, Slice{GenKind::upcross, pos + 1, sign},
                   Slice{GenKind::capR, pos + 2, 0}}};
    return Morphism::from_term(A, t);
}

Morphism left_cross_expanded(std::shared_ptr<const Frobenius> A, const Word& w,
                             int pos, int sign) {
    expect(pos + 1 <= (int)w.size() && w[pos - 1] == Letter::down &&
               w[pos] == Letter::up,
           "left crossing needs (down, up)");
    DiagramTerm t{w,
                  {Slice{GenKind::cupL, pos + 2, 0}, Slice{GenKind::upcross, pos + 1, sign},
                   Slice{GenKind::capL, pos, 0}}};
    return Morphism::from_term(A, t);
}

Morphism down_cross_expanded(std::shared_ptr<const Frobenius> A, const Word& w,
                             int pos, int sign) {
    expect(pos + 1 <= (int)w.size() && w[pos - 1] == Letter::down &&
               w[pos] == Letter::down,
           "down crossing needs (down, down)");
    DiagramTerm t{w,
                  {Slice{GenKind::cupR, pos, 0},
                   Slice{GenKind::rightcross, pos + 1, sign},
                   Slice{GenKind::capR, pos + 2, 0}}};
    return Morphism::from_term(A, t);
}

Morphism bubble(std::shared_ptr<const Frobenius> A, BubbleOrientation orient,
                const AlgElem& token, int dots) {
    Morphism out(A, {}, {});
    for (int b = 0; b < A->dim(); ++b) {
        if (token.coords()[b].is_zero()) continue;
        std::vector<Slice> slices;
        if (orient == BubbleOrientation::counterclockwise) {
            slices.push_back(Slice{GenKind::cupL, 1, 0});
            if (dots != 0) slices.push_back(Slice{GenKind::updot, 1, dots});
            slices.push_back(Slice{GenKind::uptok, 1, b});
            slices.push_back(Slice{GenKind::capR, 1, 0});
        } else {
            slices.push_back(Slice{GenKind::cupR, 1, 0});
            if (dots != 0) slices.push_back(Slice{GenKind::updot, 2, dots});
            slices.push_back(Slice{GenKind::uptok, 2, b});
            slices.push_back(Slice{GenKind::capL, 1, 0});
        }
        out.add_term(DiagramTerm{{}, slices}, SymElem(token.coords()[b]));
    }
    return out;
}

} // namespace macro

namespace {

SymElem omega_sym(const SymContext& to, const SymElem& e) {
    SymElem out;
    for (const auto& [mono, c] : e.terms()) {
        SymElem acc(c.swap_t());
        for (const auto& [g, exp] : mono) {
            int rep = to.algebra().center_cocenter().cocenter_rep_indices[g.j];
            for (int i = 0; i < exp; ++i) {
                SymElem h = to.h_of(g.side, AlgElem::basis(to.algebra(), rep), g.n);
                if (g.n % 2) h = h * Scalar(-1);
                acc = to.mul(acc, h);
            }
        }
        out = out + acc;
    }
    return out;
}

} // namespace

Morphism omega(const Morphism& f, const SymContext& from, const SymContext& to) {
    (void)from;
    auto A = f.algebra_ptr();
    Morphism out(A, flip_word(f.target()), flip_word(f.source()));
    for (const auto& [t, c] : f.terms()) {
        DiagramTerm nt;
        nt.source = flip_word(term_target(t));
        int sign_exp = 0;
        int odd_tokens = 0;
        std::vector<Slice> mapped;
        for (const auto& s : t.slices) {
            Slice m = s;
            switch (s.kind) {
                case GenKind::updot: m.kind = GenKind::downdot; break;
                case GenKind::downdot: m.kind = GenKind::updot; break;
                case GenKind::uptok:
                    m.kind = GenKind::downtok;
                    if (is_odd(A->parity(s.arg))) ++odd_tokens;
                    break;
                case GenKind::downtok:
                    m.kind = GenKind::uptok;
                    if (is_odd(A->parity(s.arg))) ++odd_tokens;
                    break;
                case GenKind::upcross:
                    m.kind = GenKind::downcross;
                    m.arg = -s.arg;
                    ++sign_exp;
                    break;
                case GenKind::downcross:
                    m.kind = GenKind::upcross;
                    m.arg = -s.arg;
                    ++sign_exp;
                    break;
                case GenKind::rightcross:
                    m.arg = -s.arg;
                    ++sign_exp;
                    break;
                case GenKind::leftcross:
                    m.arg = -s.arg;
                    ++sign_exp;
                    break;
                case GenKind::cupR: m.kind = GenKind::capR; break;
                case GenKind::capR: m.kind = GenKind::cupR; break;
                case GenKind::cupL:
                    m.kind = GenKind::capL;
                    ++sign_exp;
                    break;
                case GenKind::capL:
                    m.kind = GenKind::cupL;
                    ++sign_exp;
                    break;
            }
            mapped.push_back(m);
        }
        std::reverse(mapped.begin(), mapped.end());
        nt.slices = std::move(mapped);
        sign_exp += (odd_tokens * (odd_tokens - 1) / 2);
        SymElem nc = omega_sym(to, c);
        if (sign_exp % 2) nc = nc * Scalar(-1);
        out.add_term(nt, nc);
    }
    return out;
}

Morphism rotate_star(const Morphism& f, const SymContext& ctx) {
    (void)ctx;
    auto A = f.algebra_ptr();
    Word tgt = f.target();
    Word src = f.source();
    Word nsrc = flip_word(tgt);
    std::reverse(nsrc.begin(), nsrc.end());
    Word ntgt = flip_word(src);
    std::reverse(ntgt.begin(), ntgt.end());
    Morphism out(A, nsrc, ntgt);
    for (const auto& [t, c] : f.terms()) {
        // Track the width of the word below each slice to mirror positions.
        std::vector<int> widths;
        Word w = t.source;
        for (const auto& s : t.slices) {
            w = apply_slice(w, s);
            widths.push_back((int)w.size());  // width above the slice
        }
        DiagramTerm nt;
        nt.source = nsrc;
        int odd_tokens = 0;
        std::vector<Slice> mapped;
        for (size_t i = 0; i < t.slices.size(); ++i) {
            const Slice& s = t.slices[i];
            Slice m = s;
            int span_out = gen_arity_out(s.kind);
            int span_in = gen_arity_in(s.kind);
            switch (s.kind) {
                case GenKind::updot: m.kind = GenKind::downdot; break;
                case GenKind::downdot: m.kind = GenKind::updot; break;
                case GenKind::uptok:
                    m.kind = GenKind::downtok;
                    if (is_odd(A->parity(s.arg))) ++odd_tokens;
                    break;
                case GenKind::downtok:
                    m.kind = GenKind::uptok;
                    if (is_odd(A->parity(s.arg))) ++odd_tokens;
                    break;
                case GenKind::upcross: m.kind = GenKind::downcross; break;
                case GenKind::downcross: m.kind = GenKind::upcross; break;
                case GenKind::rightcross: m.kind = GenKind::leftcross; break;
                case GenKind::leftcross: m.kind = GenKind::rightcross; break;
                case GenKind::cupR: m.kind = GenKind::capL; break;
                case GenKind::capR: m.kind = GenKind::cupL; break;
                case GenKind::cupL: m.kind = GenKind::capR; break;
                case GenKind::capL: m.kind = GenKind::cupR; break;
            }
            // The rotated slice reads its position against the rotated word
            // below it, which is the flipped-reversed word above the original.
            int width_above = widths[i];
            int span = std::max(span_out, 0);
            // After rotation, inputs become what were outputs.
            int new_span_in = span_out;
            (void)span_in;
            (void)span;
            int base_width = width_above;
            if (new_span_in == 0) {
                // Rotated cups come from caps; position measured against the
                // word above the original cap, which has the legs removed.
                m.pos = base_width - (s.pos - 1) + 1;
            } else {
                m.pos = base_width - (s.pos + new_span_in - 1) + 1;
            }
            mapped.push_back(m);
        }
        std::reverse(mapped.begin(), mapped.end());
        nt.slices = std::move(mapped);
        int sign_exp = odd_tokens * (odd_tokens - 1) / 2;
        SymElem nc = c;
        if (sign_exp % 2) nc = nc * Scalar(-1);
        out.add_term(nt, nc);
    }
    return out;
}

namespace {

struct DiagParser {
    std::shared_ptr<const Frobenius> A;
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
        throw diagram_error("diagram parse error at " + std::to_string(i) + ": " + m);
    }

    std::string ident() {
        skip();
        size_t start = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        return s.substr(start, i - start);
    }

    int integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected integer");
        int v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }

    struct Factor {
        enum class What { id_up, id_down, gen } what;
        std::string name;
        std::vector<std::string> args;
    };

    Factor factor() {
        std::string name = ident();
        if (name.empty()) fail("expected factor");
        if (name == "up") return {Factor::What::id_up, name, {}};
        if (name == "down") return {Factor::What::id_down, name, {}};
        Factor f{Factor::What::gen, name, {}};
        if (eat('(')) {
            while (true) {
                skip();
                size_t start = i;
                int depth = 0;
                while (i < s.size() && (depth > 0 || (s[i] != ',' && s[i] != ')'))) {
                    if (s[i] == '(') ++depth;
                    if (s[i] == ')') --depth;
                    ++i;
                }
                std::string arg = s.substr(start, i - start);
                while (!arg.empty() && std::isspace((unsigned char)arg.back())) arg.pop_back();
                f.args.push_back(arg);
                if (eat(')')) break;
                if (!eat(',')) fail("expected , or ) in arguments");
            }
        }
        return f;
    }

    int token_index(const std::string& name) {
        for (int b = 0; b < A->dim(); ++b)
            if (A->basis_name(b) == name) return b;
        fail("unknown basis element '" + name + "'");
    }

    // Build one slice-chunk as a morphism on the current word; `word` may be
    // empty for the first chunk, in which case it is inferred.
    Morphism chunk(Word& word, bool first) {
        skip();
        std::vector<Factor> factors;
        factors.push_back(factor());
        while (eat('|')) factors.push_back(factor());

        bool tensor_form = factors.size() > 1 || factors[0].what != Factor::What::gen;

        if (tensor_form) {
            // Infer or check the word factor by factor.
            Word chunk_source;
            std::vector<std::pair<Factor, int>> placed;  // factor, position
            int pos = 1;
            for (const auto& f : factors) {
                placed.push_back({f, pos});
                if (f.what == Factor::What::id_up) {
                    chunk_source.push_back(Letter::up);
                    ++pos;
                } else if (f.what == Factor::What::id_down) {
                    chunk_source.push_back(Letter::down);
                    ++pos;
                } else {
                    auto [kind, arg, span] = resolve(f, chunk_source, pos, true);
                    (void)kind;
                    (void)arg;
                    pos += span;
                }
            }
            if (first)
                word = chunk_source;
            else if (word != chunk_source)
                fail("slice source " + word_str(chunk_source) +
                     " does not match running word " + word_str(word));
            Morphism m = Morphism::identity(A, word);
            Word running = word;
            // Apply the generator factors left to right; identities are no-ops.
            for (auto& [f, p] : placed) {
                if (f.what != Factor::What::gen) continue;
                m = build_gen(f, running, p).compose(m);
            }
            word = m.target();
            return m;
        }

        // Bare positional constructor against the running word.
        Factor f = factors[0];
        if (f.args.empty()) fail("positional constructor needs a position");
        int p = std::stoi(f.args[0]);
        if (first) {
            // Infer a minimal word: default letters are up except where the
            // constructor demands otherwise.
            word.assign(std::max(p - 1, 0), Letter::up);
            Word probe = word;
            auto [kind, arg, span] = resolve(f, probe, p, true);
            (void)kind;
            (void)arg;
            (void)span;
            word = probe;
        }
        Morphism m = build_gen(f, word, p).compose(Morphism::identity(A, word));
        word = m.target();
        return m;
    }

    // Resolve a factor into (kind, arg); extends `w` with required letters
    // when `extend` is set (word inference), otherwise checks.
    std::tuple<GenKind, int, int> resolve(const Factor& f, Word& w, int pos, bool extend) {
        auto need = [&](int offset, Letter l) -> Letter {
            int idx = pos - 1 + offset;
            if ((int)w.size() <= idx) {
                if (!extend) fail("position out of range");
                while ((int)w.size() <= idx) w.push_back(Letter::up);
                w[idx] = l;
            }
            return w[idx];
        };
        const std::string& n = f.name;
        if (n == "dot") {
            if (f.args.size() != 2) fail("dot(i, e)");
            int e = std::stoi(f.args[1]);
            Letter l = need(0, (int)w.size() >= pos ? w[pos - 1] : Letter::up);
            return {l == Letter::up ? GenKind::updot : GenKind::downdot, e, 1};
        }
        if (n == "tok") {
            if (f.args.size() != 2) fail("tok(i, name)");
            int b = token_index(f.args[1]);
            Letter l = need(0, (int)w.size() >= pos ? w[pos - 1] : Letter::up);
            return {l == Letter::up ? GenKind::uptok : GenKind::downtok, b, 1};
        }
        if (n == "xpos" || n == "xneg") {
            int sign = (n == "xpos") ? 1 : -1;
            Letter l1 = need(0, Letter::up);
            Letter l2 = need(1, Letter::up);
            if (l1 == Letter::up && l2 == Letter::up) return {GenKind::upcross, sign, 2};
            if (l1 == Letter::down && l2 == Letter::down)
                return {GenKind::downcross, sign, 2};
            if (l1 == Letter::up && l2 == Letter::down)
                return {GenKind::rightcross, sign, 2};
            return {GenKind::leftcross, sign, 2};
        }
        if (n == "cupR") return {GenKind::cupR, 0, 2};
        if (n == "cupL") return {GenKind::cupL, 0, 2};
        if (n == "capR") {
            need(0, Letter::up);
            need(1, Letter::down);
            return {GenKind::capR, 0, 0};
        }
        if (n == "capL") {
            need(0, Letter::down);
            need(1, Letter::up);
            return {GenKind::capL, 0, 0};
        }
        fail("unknown constructor '" + n + "'");
    }

    Morphism build_gen(const Factor& f, Word& w, int pos) {
        Word probe = w;
        auto [kind, arg, span] = resolve(f, probe, pos, false);
        (void)span;
        return Morphism::generator(A, w, kind, pos, arg);
    }
};

} // namespace

Morphism parse_diagram(std::shared_ptr<const Frobenius> A, const std::string& text) {
    DiagParser p{A, text};
    p.skip();
    if (p.i == text.size()) {
        // The empty diagram: identity of the empty word.
        return Morphism::identity(A, {});
    }
    Word word;
    Morphism m = p.chunk(word, true);
    Word src = m.source();
    while (true) {
        p.skip();
        if (!p.eat(';')) break;
        Word w = word;
        Morphism next = p.chunk(w, false);
        m = next.compose(m);
        word = m.target();
    }
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    (void)src;
    return m;
}

std::string term_str(const DiagramTerm& t, const Frobenius& A) {
    if (t.slices.empty()) return "id(" + word_str(t.source) + ")";
    std::ostringstream os;
    os << "id(" << word_str(t.source) << ")";
    for (const auto& s : t.slices) {
        os << " ; ";
        switch (s.kind) {
            case GenKind::updot:
            case GenKind::downdot:
                os << "dot(" << s.pos << "," << s.arg << ")";
                break;
            case GenKind::uptok:
            case GenKind::downtok:
                os << "tok(" << s.pos << "," << A.basis_name(s.arg) << ")";
                break;
            case GenKind::upcross:
            case GenKind::downcross:
            case GenKind::rightcross:
            case GenKind::leftcross:
                os << (s.arg > 0 ? "xpos(" : "xneg(") << s.pos << ")";
                break;
            case GenKind::cupR: os << "cupR(" << s.pos << ")"; break;
            case GenKind::capR: os << "capR(" << s.pos << ")"; break;
            case GenKind::cupL: os << "cupL(" << s.pos << ")"; break;
            case GenKind::capL: os << "capL(" << s.pos << ")"; break;
        }
    }
    return os.str();
}

std::string tikz_export(const Morphism& f) {
    std::ostringstream os;
    os << "% " << word_str(f.source()) << " -> " << word_str(f.target()) << "\n";
    int tcount = 0;
    for (const auto& [t, c] : f.terms()) {
        os << "% coefficient: " << c.str(*f.algebra_ptr()) << "\n";
        os << "\\begin{tikzpicture}[baseline, xshift=" << tcount * 4 << "cm]\n";
        Word w = t.source;
        double y = 0;
        // Live strand x-positions.
        std::vector<double> xs(w.size());
        for (size_t j = 0; j < w.size(); ++j) xs[j] = (double)j;
        auto draw_vert = [&](double x, double y0, double y1, Letter l) {
            os << "  \\draw[" << (l == Letter::up ? "->" : "<-") << "] (" << x << ","
               << y0 << ") -- (" << x << "," << y1 << ");\n";
        };
        for (const auto& s : t.slices) {
            double ytop = y + 1;
            int nin = gen_arity_in(s.kind);
            // Draw pass-through strands.
            for (size_t j = 0; j < w.size(); ++j) {
                if ((int)j >= s.pos - 1 && (int)j < s.pos - 1 + nin) continue;
                draw_vert(xs[j], y, ytop, w[j]);
            }
            double x0 = (double)(s.pos - 1);
            switch (s.kind) {
                case GenKind::updot:
                case GenKind::downdot:
                    draw_vert(x0, y, ytop, w[s.pos - 1]);
                    os << "  \\filldraw (" << x0 << "," << (y + 0.5)
                       << ") circle (2pt) node[right] {$" << s.arg << "$};\n";
                    break;
                case GenKind::uptok:
                case GenKind::downtok:
                    draw_vert(x0, y, ytop, w[s.pos - 1]);
                    os << "  \\draw[fill=white] (" << x0 << "," << (y + 0.5)
                       << ") circle (4pt) node {$"
                       << f.algebra_ptr()->basis_name(s.arg) << "$};\n";
                    break;
                case GenKind::upcross:
                case GenKind::downcross:
                case GenKind::rightcross:
                case GenKind::leftcross: {
                    bool left_over = (s.kind == GenKind::upcross && s.arg < 0) ||
                                     (s.kind == GenKind::leftcross && s.arg > 0) ||
                                     (s.kind == GenKind::downcross && s.arg > 0) ||
                                     (s.kind == GenKind::rightcross && s.arg < 0);
                    double xa = x0, xb = x0 + 1;
                    if (left_over) {
                        os << "  \\draw (" << xb << "," << y << ") -- (" << xa << ","
                           << ytop << ");\n";
                        os << "  \\draw[line width=4pt, white] (" << xa << "," << y
                           << ") -- (" << xb << "," << ytop << ");\n";
                        os << "  \\draw (" << xa << "," << y << ") -- (" << xb << ","
                           << ytop << ");\n";
                    } else {
                        os << "  \\draw (" << xa << "," << y << ") -- (" << xb << ","
                           << ytop << ");\n";
                        os << "  \\draw[line width=4pt, white] (" << xb << "," << y
                           << ") -- (" << xa << "," << ytop << ");\n";
                        os << "  \\draw (" << xb << "," << y << ") -- (" << xa << ","
                           << ytop << ");\n";
                    }
                    break;
                }
                case GenKind::cupR:
                case GenKind::cupL:
                    os << "  \\draw (" << x0 << "," << ytop << ") arc(180:360:0.5);\n";
                    break;
                case GenKind::capR:
                case GenKind::capL:
                    os << "  \\draw (" << x0 << "," << y << ") arc(180:0:0.5);\n";
                    break;
            }
            w = apply_slice(w, s);
            xs.assign(w.size(), 0);
            for (size_t j = 0; j < w.size(); ++j) xs[j] = (double)j;
            y = ytop;
        }
        // Top boundary strands.
        for (size_t j = 0; j < w.size(); ++j) draw_vert(xs[j], y, y + 0.3, w[j]);
        os << "\\end{tikzpicture}\n";
        ++tcount;
    }
    return os.str();
}

std::string morphism_json(const Morphism& f) {
    nlohmann::json j;
    j["source"] = word_str(f.source());
    j["target"] = word_str(f.target());
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, c] : f.terms()) {
        nlohmann::json jt;
        jt["term"] = term_str(t, *f.algebra_ptr());
        jt["coeff"] = c.str(*f.algebra_ptr());
        terms.push_back(jt);
    }
    j["terms"] = terms;
    return j.dump(2);
}

} // namespace heiscat
