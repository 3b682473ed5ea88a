#pragma once

#include "heiscat/frobenius.hpp"

#include <map>
#include <vector>

namespace heiscat {

// Permutations of {1..n} stored as the bottom-to-top strand map of the
// braid diagram: img(j) is where the strand entering at position j exits.
// Positions are 1-based and numbered right to left, matching the algebra
// generators x_i, sigma_i.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);
    explicit Perm(std::vector<int> img);

    static Perm transposition(int n, int i);  // s_i swapping i, i+1

    int n() const { return (int)img_.size(); }
    int operator()(int j) const { return img_[j - 1]; }
    bool is_identity() const;

    Perm compose(const Perm& o) const;  // (this o other)(j) = this(other(j))
    Perm inverse() const;

    int length() const;  // number of inversions
    // Canonical reduced word by repeated leftmost descent; the product
    // sigma_{w[0]} ... sigma_{w.back()} equals this permutation.
    std::vector<int> reduced_word() const;
    // Smallest i with length(this * s_i) < length, or 0 if identity.
    int last_descent() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

// Normal-form monomial x^r . (token tuple) . sigma_g. Tokens are indices
// into the basis of A; exponents may be any integers in the affine algebra.
struct WreathMono {
    std::vector<int> exps;
    std::vector<int> toks;
    Perm perm;

    bool operator<(const WreathMono& o) const {
        if (exps != o.exps) return exps < o.exps;
        if (toks != o.toks) return toks < o.toks;
        return perm < o.perm;
    }
    bool operator==(const WreathMono& o) const {
        return exps == o.exps && toks == o.toks && perm == o.perm;
    }
};

struct wreath_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of QAWA_n(A;z) as a finitely supported Scalar combination of
// normal-form monomials.
class WreathElem {
public:
    WreathElem() = default;
    WreathElem(std::shared_ptr<const Frobenius> A, int n);

    static WreathElem zero(std::shared_ptr<const Frobenius> A, int n);
    static WreathElem one(std::shared_ptr<const Frobenius> A, int n);
    static WreathElem sigma(std::shared_ptr<const Frobenius> A, int n, int i);
    static WreathElem sigma_inv(std::shared_ptr<const Frobenius> A, int n, int i);
    static WreathElem x(std::shared_ptr<const Frobenius> A, int n, int i, int e);
    static WreathElem token(std::shared_ptr<const Frobenius> A, int n, int i,
                            const AlgElem& a);
    static WreathElem tau(std::shared_ptr<const Frobenius> A, int n, int i);

    const Frobenius& algebra() const { return *A_; }
    std::shared_ptr<const Frobenius> algebra_ptr() const { return A_; }
    int strands() const { return n_; }
    const std::map<WreathMono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const WreathMono& m, const Scalar& c);

    WreathElem operator+(const WreathElem& o) const;
    WreathElem operator-(const WreathElem& o) const;
    WreathElem operator*(const Scalar& c) const;
    WreathElem operator*(const WreathElem& o) const;
    bool operator==(const WreathElem& o) const;

    // Right multiplication by single generators, in normal form.
    WreathElem rmul_sigma(int i) const;
    WreathElem rmul_x(int j, int e) const;
    WreathElem rmul_token(int j, const AlgElem& a) const;
    WreathElem rmul_token_basis(int j, int b) const;

    // Parity of a monomial's token tuple.
    Parity mono_parity(const WreathMono& m) const;

    std::string str() const;
    static WreathElem parse(std::shared_ptr<const Frobenius> A, int n,
                            const std::string& text);

private:
    std::shared_ptr<const Frobenius> A_;
    int n_ = 0;
    std::map<WreathMono, Scalar> terms_;
};

// Left-multiplication matrices of the generators on the monomial basis of
// the finite algebra QWA_n (exponents all zero). Brute-force oracle for mul.
struct RegularRep {
    std::vector<WreathMono> basis;
    std::map<WreathMono, int> index;
    // One matrix per generator; matrix[c] = coordinates of gen * basis[c].
    std::vector<std::vector<std::vector<Scalar>>> sigma_mats;   // i = 1..n-1
    std::vector<std::vector<std::vector<Scalar>>> token_mats;   // per basis elt of A x position
};

RegularRep regular_representation(std::shared_ptr<const Frobenius> A, int n);

} // namespace heiscat
