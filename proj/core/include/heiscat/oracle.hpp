#pragma once

#include "heiscat/cyclotomic.hpp"
#include "heiscat/diagram.hpp"

#include <optional>

namespace heiscat {

struct oracle_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation context for the categorical action on cyclotomic quotient
// modules. The central charge is forced to -level, and the parameters must
// satisfy t^2 = f_l.
class ActionContext {
public:
    ActionContext(CycParams params, int base_weight);

    CycAlgebra& alg() const { return *alg_; }
    const Frobenius& algebra() const { return alg_->algebra(); }
    std::shared_ptr<const Frobenius> algebra_ptr() const { return alg_->algebra_ptr(); }
    int charge() const { return -alg_->level(); }
    int base_weight() const { return base_; }

private:
    std::shared_ptr<CycAlgebra> alg_;
    int base_;
};

// Ordered basis of the module obtained by applying an object word to the
// regular module of QWA_{n0}^f. Labels are (base monomial, coset choices at
// the induction steps, right to left).
struct ModuleBasis {
    Word word;
    int weight = 0;              // weight after the whole word
    bool zero = false;           // a restriction stepped below weight 0
    long dim = 0;
    // Per applied letter (right to left): weight before the step and, for
    // inductions, the number of cosets.
    struct Step {
        Letter letter;
        int weight_before;
        int cosets;  // 0 for restrictions
    };
    std::vector<Step> steps;
    long base_dim = 0;
};

// Sparse column-major matrix over Scalar.
struct ScalarMat {
    long rows = 0, cols = 0;
    std::vector<std::map<long, Scalar>> col;

    static ScalarMat identity(long n);
    ScalarMat mul(const ScalarMat& o) const;  // this * o
    bool operator==(const ScalarMat& o) const;
    ScalarMat operator-(const ScalarMat& o) const;
    bool is_zero() const;
};

struct ModuleMap {
    ModuleBasis source;
    ModuleBasis target;
    ScalarMat mat;
};

class Oracle {
public:
    explicit Oracle(ActionContext ctx) : ctx_(std::move(ctx)) {}

    const ActionContext& context() const { return ctx_; }

    ModuleBasis eval_object(const Word& w) const;

    // Matrix of the action of a morphism; coefficients are pushed through
    // the bubble dictionary and evaluated as closed diagrams.
    ModuleMap eval_morphism(const Morphism& f) const;

    // eval(f) == eval(normal form) given the normal form re-expressed as a
    // morphism; the caller supplies the latter.
    bool maps_equal(const ModuleMap& a, const ModuleMap& b) const;

    // Exact evaluation specialized at a rational point (z0, t0); throws
    // nongeneric_specialization if a denominator vanishes.
    std::vector<std::vector<Rational>> specialize(const ModuleMap& m,
                                                  const Rational& z0,
                                                  const Rational& t0) const;

private:
    friend struct OracleEval;
    ActionContext ctx_;
};

std::string module_map_json(const ModuleMap& m);

} // namespace heiscat
