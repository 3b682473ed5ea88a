#pragma once

#include "heiscat/frobenius.hpp"

#include <functional>
#include <map>
#include <vector>

namespace heiscat {

struct symfun_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator E[side, n, j]: the class e_n(a_j) on the left (side 0) or right
// (side 1) tensor factor, with a_j the j-th cocenter representative.
struct SymGen {
    int side;  // 0 = L, 1 = R
    int n;     // >= 1
    int j;     // cocenter representative index

    auto operator<=>(const SymGen&) const = default;
};

// Supercommutative polynomial in the E generators with Scalar coefficients.
// Monomials keep generators sorted; odd generators square to zero.
class SymElem {
public:
    using Mono = std::vector<std::pair<SymGen, int>>;

    SymElem() = default;
    explicit SymElem(Scalar c);

    static SymElem generator(const SymGen& g);

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    Scalar scalar_part() const;

    const std::map<Mono, Scalar>& terms() const { return terms_; }

    SymElem operator+(const SymElem& o) const;
    SymElem operator-(const SymElem& o) const;
    SymElem operator*(const Scalar& c) const;
    bool operator==(const SymElem& o) const { return terms_ == o.terms_; }
    bool operator<(const SymElem& o) const { return terms_ < o.terms_; }

    void add_term(const Mono& m, const Scalar& c);

    // Apply a function to every scalar coefficient (e.g. t -> 1/t).
    SymElem map_scalars(const std::function<Scalar(const Scalar&)>& f) const;

    std::string str(const Frobenius& A) const;

private:
    std::map<Mono, Scalar> terms_;
};

enum class BubbleOrientation { clockwise, counterclockwise };
enum class BubbleDecor { plus, minus, genuine };

struct BubbleSymbol {
    BubbleOrientation orient;
    BubbleDecor decor;
    AlgElem token;
    int dots;
};

// Evaluation context: fixes the algebra, the central charge, and caches the
// e/h tables up to a truncation bound.
class SymContext {
public:
    SymContext(std::shared_ptr<const Frobenius> A, int charge, int truncation = 8);

    const Frobenius& algebra() const { return *A_; }
    std::shared_ptr<const Frobenius> algebra_ptr() const { return A_; }
    int charge() const { return k_; }
    int truncation() const { return trunc_; }

    Parity gen_parity(const SymGen& g) const;
    Parity elem_parity(const SymElem& e) const;  // throws if mixed

    // Supercommutative product.
    SymElem mul(const SymElem& a, const SymElem& b) const;

    // e_n(a) on the chosen side.
    SymElem e_of(int side, const AlgElem& a, int n) const;
    // h_n(a) expanded over e generators via the defining duality.
    SymElem h_of(int side, const AlgElem& a, int n) const;

    // Image of a bubble symbol in Sym(A) (x) Sym(A).
    SymElem bubble_value(const BubbleSymbol& s) const;

    // sum_{r+s=n} of the teleporter-coupled plus (or minus) bubble pairs with
    // outer tokens a, b. Both must equal -delta_{n,0} (1/z) tr(ab).
    SymElem grassmannian_sum(int n, const AlgElem& a, const AlgElem& b,
                             bool plus_pair) const;

    // Determinant routes to the plus bubbles, independent of bubble_value's
    // boundary formulas: the right-hand sides of the closed-form expansions.
    SymElem plus_ccw_by_determinant(const AlgElem& a, int dots) const;
    SymElem plus_cw_by_determinant(const AlgElem& a, int dots) const;

private:
    SymElem h_basis(int side, int b, int n) const;

    std::shared_ptr<const Frobenius> A_;
    int k_;
    int trunc_;
    mutable std::map<std::tuple<int, int, int>, SymElem> h_cache_;
};

} // namespace heiscat
