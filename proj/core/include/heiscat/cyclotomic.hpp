#pragma once

#include "heiscat/wreath.hpp"

#include <optional>

namespace heiscat {

struct cyclotomic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters f(w) = f_0 w^l + f_1 w^{l-1} + ... + f_l with f_0 = 1, the f_i
// even central, and f_l an invertible scalar multiple of the unit.
class CycParams {
public:
    CycParams(std::shared_ptr<const Frobenius> A, std::vector<AlgElem> coeffs);

    // f(w) = w^l + t^2, the choice matching the categorical action.
    static CycParams monic_t2(std::shared_ptr<const Frobenius> A, int level);
    static CycParams from_json(std::shared_ptr<const Frobenius> A,
                               const std::string& json_text);

    const Frobenius& algebra() const { return *A_; }
    std::shared_ptr<const Frobenius> algebra_ptr() const { return A_; }
    int level() const { return (int)coeffs_.size() - 1; }
    const AlgElem& coeff(int i) const { return coeffs_[i]; }
    const Scalar& lead_inverse() const { return flead_inv_; }
    bool has_t2_normalization() const;

    std::string str() const;

private:
    std::shared_ptr<const Frobenius> A_;
    std::vector<AlgElem> coeffs_;  // f_0 .. f_l
    Scalar flead_inv_;             // scalar with f_l = flead * 1
};

// Index data for the cyclotomic basis {x^r a sigma_g : 0 <= r_i < l}.
struct CycBasis {
    std::vector<WreathMono> monos;
    std::map<WreathMono, int> index;
};

// Coset representative x_{n+1}^r b^{(n+1)} sigma_n ... sigma_j of the free
// module decomposition of QWA_{n+1}^f over QWA_n^f; j = n+1 means the empty
// sigma word.
struct CosetRep {
    int r;
    int b;
    int j;
};

struct MackeyDecomp {
    // Sigma part: sum of v (x) w over QWA_{n-1}; v runs over basis monomials.
    std::vector<std::pair<WreathMono, WreathElem>> sigma_part;
    // Dot-token part: w_{r,b} indexed by (r, basis element).
    std::map<std::pair<int, int>, WreathElem> dot_part;
};

// Arithmetic in the cyclotomic quotients QWA_n^f for all n at once, with
// cached bases and coset data per level.
class CycAlgebra {
public:
    explicit CycAlgebra(CycParams params);

    const CycParams& params() const { return params_; }
    const Frobenius& algebra() const { return params_.algebra(); }
    std::shared_ptr<const Frobenius> algebra_ptr() const { return params_.algebra_ptr(); }
    int level() const { return params_.level(); }

    static BigInt dimension(const CycParams& p, int n);

    const CycBasis& basis(int n);
    const std::vector<CosetRep>& coset_reps(int n);  // level n -> n+1
    int coset_index(int n, int r, int b, int j);

    // Image of a QAWA element in the quotient, in cyclotomic normal form.
    WreathElem reduce(const WreathElem& u);

    // Left multiplication by generators, staying in normal form.
    WreathElem lmul_sigma(const WreathElem& u, int i);
    WreathElem lmul_x(const WreathElem& u, int j, int e);  // e = +1 or -1
    WreathElem lmul_token(const WreathElem& u, int j, const AlgElem& a);
    WreathElem lmul_token_basis(const WreathElem& u, int j, int b);
    WreathElem mul(const WreathElem& u, const WreathElem& v);

    // Embedding QWA_n^f into QWA_{n+1}^f.
    WreathElem embed(const WreathElem& u, int bigger_n);

    // Split of a basis monomial of QWA_{n+1}^f as sign . q . c with q a
    // basis monomial of QWA_n^f and c a coset representative.
    struct Split {
        int sign;
        WreathMono q;
        int coset;
    };
    Split split(const WreathMono& m);

    MackeyDecomp mackey_decompose(const WreathElem& u);
    WreathElem mackey_reassemble(const MackeyDecomp& d, int n_plus_1);

    // tr_{n+1}^f : QWA_{n+1}^f -> QWA_n^f.
    WreathElem cyclotomic_trace(const WreathElem& u);

    // f(x_j) as an element of QAWA_n, for the (fort) checks.
    WreathElem f_of_x(int n, int j);

private:
    WreathElem reduce_mono(const WreathMono& m, const Scalar& c);
    WreathElem lmul_x1_pos(const WreathElem& u);
    WreathElem lmul_x1_neg(const WreathElem& u);

    CycParams params_;
    std::map<int, CycBasis> bases_;
    std::map<int, std::vector<CosetRep>> cosets_;
    std::map<int, std::map<std::tuple<int, int, int>, int>> coset_index_;
};

} // namespace heiscat
