#pragma once

#include "heiscat/symfun.hpp"

#include <map>
#include <string>
#include <vector>

namespace heiscat {

struct diagram_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Letter : uint8_t { up, down };

using Word = std::vector<Letter>;

std::string word_str(const Word& w);
Word flip_word(const Word& w);

// Slice generators. Sideways and downward crossings are kept first class so
// that the rewrite rules of the straightening engine can see them; the
// definitional expansions through the right cups and caps are available as
// macros and enforced as rewrite rules.
enum class GenKind : uint8_t {
    updot,      // arg = exponent (nonzero)
    downdot,    // arg = exponent
    uptok,      // arg = basis index
    downtok,    // arg = basis index
    upcross,    // arg = +1 positive / -1 negative
    downcross,  // arg = +1 down-left strand over / -1
    rightcross, // up down -> down up; arg = +1 down strand over / -1
    leftcross,  // down up -> up down; arg = +1 up strand over / -1
    cupR,       // 1 -> down up
    capR,       // up down -> 1
    cupL,       // 1 -> up down
    capL,       // down up -> 1
};

int gen_arity_in(GenKind k);
int gen_arity_out(GenKind k);

struct Slice {
    GenKind kind;
    int pos;  // leftmost column (1-based)
    int arg = 0;

    auto operator<=>(const Slice&) const = default;
};

// A single diagram term: a source word and a stack of slices, bottom to top.
struct DiagramTerm {
    Word source;
    std::vector<Slice> slices;

    auto operator<=>(const DiagramTerm&) const = default;
};

// Apply a slice to a word; throws on orientation mismatch.
Word apply_slice(const Word& w, const Slice& s);
Word term_target(const DiagramTerm& t);

// Linear combination of terms between fixed words, with right
// Sym(A)(x)Sym(A) coefficients.
class Morphism {
public:
    Morphism() = default;
    Morphism(std::shared_ptr<const Frobenius> A, Word source, Word target);

    static Morphism identity(std::shared_ptr<const Frobenius> A, const Word& w);
    static Morphism from_term(std::shared_ptr<const Frobenius> A, DiagramTerm t,
                              SymElem coeff = SymElem(Scalar(1)));

    // Generator builders on a given word context.
    static Morphism generator(std::shared_ptr<const Frobenius> A, const Word& w,
                              GenKind kind, int pos, int arg = 0);

    const Word& source() const { return source_; }
    const Word& target() const { return target_; }
    std::shared_ptr<const Frobenius> algebra_ptr() const { return A_; }
    const std::map<DiagramTerm, SymElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const DiagramTerm& t, const SymElem& c);

    Morphism operator+(const Morphism& o) const;
    Morphism operator-(const Morphism& o) const;
    Morphism operator*(const Scalar& c) const;
    Morphism scaled(const SymElem& c, const SymContext& ctx) const;

    // Vertical composition: this after o.
    Morphism compose(const Morphism& o) const;
    // Horizontal juxtaposition: this to the left of o.
    Morphism tensor(const Morphism& o) const;

    std::string str() const;

private:
    std::shared_ptr<const Frobenius> A_;
    Word source_;
    Word target_;
    std::map<DiagramTerm, SymElem> terms_;
};

// Derived generators assembled from the primitive ones.
namespace macro {

// Downward dot/token as the right-adjunction conjugate of the upward one.
Morphism down_dot(std::shared_ptr<const Frobenius> A, const Word& w, int pos, int exp);
Morphism down_token(std::shared_ptr<const Frobenius> A, const Word& w, int pos,
                    const AlgElem& a);
// Sideways and downward crossings as zigzag composites of an upward crossing.
Morphism right_cross_expanded(std::shared_ptr<const Frobenius> A, const Word& w,
                              int pos, int sign);
Morphism left_cross_expanded(std::shared_ptr<const Frobenius> A, const Word& w,
                             int pos, int sign);
Morphism down_cross_expanded(std::shared_ptr<const Frobenius> A, const Word& w,
                             int pos, int sign);

// Genuine bubble with the given orientation carrying dots and a token.
Morphism bubble(std::shared_ptr<const Frobenius> A, BubbleOrientation orient,
                const AlgElem& token, int dots);

} // namespace macro

// The charge-flip symmetry: reflects diagrams in a horizontal plane,
// multiplies by (-1)^{#crossings + #left cups/caps + binom(#odd tokens, 2)},
// swaps t and t^{-1} in all coefficients, and maps charge k to -k. The
// coefficient map sends e_n on either side to (-1)^n h_n expanded in the
// target context.
Morphism omega(const Morphism& f, const SymContext& from, const SymContext& to);

// Strictly pivotal duality: rotates diagrams by 180 degrees and multiplies
// by (-1)^{binom(#odd tokens, 2)}. Contravariant and tensor-reversing.
Morphism rotate_star(const Morphism& f, const SymContext& ctx);

// Text grammar: slices separated by ';' (bottom first), tensor factors by
// '|'. Factors: up, down, dot(i,e), tok(i,name), xpos(i), xneg(i),
// rxpos(i), rxneg(i), lxpos(i), lxneg(i), dxpos(i), dxneg(i),
// cupR(i), capR(i), cupL(i), capL(i).
Morphism parse_diagram(std::shared_ptr<const Frobenius> A, const std::string& text);

std::string term_str(const DiagramTerm& t, const Frobenius& A);
std::string tikz_export(const Morphism& f);
std::string morphism_json(const Morphism& f);

} // namespace heiscat
