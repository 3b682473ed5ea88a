#pragma once

#include "heiscat/parity.hpp"
#include "heiscat/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace heiscat {

struct algebra_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Frobenius;

// Element of A in coordinates over the chosen homogeneous basis.
class AlgElem {
public:
    AlgElem() = default;
    AlgElem(const Frobenius* A, std::vector<Scalar> coords);

    static AlgElem basis(const Frobenius& A, int i);
    static AlgElem unit(const Frobenius& A);
    static AlgElem zero(const Frobenius& A);

    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& operator[](int i) const { return coords_[i]; }
    const Frobenius& algebra() const { return *A_; }

    bool is_zero() const;

    // Parity when homogeneous; nullopt for mixed elements.
    std::optional<Parity> parity() const;

    AlgElem operator+(const AlgElem& o) const;
    AlgElem operator-(const AlgElem& o) const;
    AlgElem operator*(const AlgElem& o) const;
    AlgElem operator*(const Scalar& c) const;
    bool operator==(const AlgElem& o) const;

    Scalar trace() const;

    std::string str() const;

private:
    const Frobenius* A_ = nullptr;
    std::vector<Scalar> coords_;
};

// Teleporter expansion z * sum_b (b on the higher token, b^vee on the lower),
// tabulated over the basis. `sign_exponent_parity` is the parity of b, which
// drives the (-1)^(y*par(b)) rule when odd morphisms sit between the tokens.
struct TeleporterEntry {
    int upper;  // basis index carried by the higher token
    int lower;  // basis index of the dual element on the lower token
    Scalar coeff;
    Parity parity;  // common parity of the pair
};

// Symmetric Frobenius superalgebra with even trace, described by structure
// constants over a finite homogeneous basis. Validated on construction;
// immutable afterwards.
class Frobenius {
public:
    struct Data {
        std::string name;
        std::vector<std::string> basis_names;
        std::vector<Parity> parity;
        std::vector<Scalar> unit;                              // coords of 1
        std::vector<std::vector<std::vector<Scalar>>> mult;    // mult[i][j] = coords of b_i b_j
        std::vector<Scalar> trace;                             // tr(b_i)
    };

    explicit Frobenius(Data d);

    // Built-in constructors.
    static std::shared_ptr<const Frobenius> trivial();
    static std::shared_ptr<const Frobenius> group_algebra_cyclic(int d);
    static std::shared_ptr<const Frobenius> truncated_polynomial(int n, bool odd_generator = false);
    static std::shared_ptr<const Frobenius> matrix_algebra_2x2();
    static std::shared_ptr<const Frobenius> from_json(const std::string& json_text);
    // Resolves builtin names: "trivial", "c2", "cyclic:<d>", "dual",
    // "dual:<n>", "mat2"; anything else is treated as a JSON file path.
    static std::shared_ptr<const Frobenius> named(const std::string& name);

    const std::string& name() const { return data_.name; }
    int dim() const { return (int)data_.basis_names.size(); }
    Parity parity(int i) const { return data_.parity[i]; }
    const std::string& basis_name(int i) const { return data_.basis_names[i]; }
    const std::vector<Scalar>& unit_coords() const { return data_.unit; }
    const Scalar& trace_coeff(int i) const { return data_.trace[i]; }
    const std::vector<Scalar>& mult(int i, int j) const { return data_.mult[i][j]; }

    bool purely_even() const;

    // tr(x) for coordinates x.
    Scalar trace(const std::vector<Scalar>& coords) const;

    // Left dual basis: tr(dual(i) * b_j) = delta_ij.
    const std::vector<AlgElem>& dual_basis() const { return dual_basis_; }
    const AlgElem& dual(int i) const { return dual_basis_[i]; }

    // a^dagger = z * sum_b (-1)^(|a||b|) b a b^vee.
    AlgElem dagger(const AlgElem& a) const;

    struct CenterData {
        std::vector<AlgElem> center;              // basis of Z(A)
        std::vector<AlgElem> cocenter_reps;       // coset representatives for C(A)
        std::vector<int> cocenter_rep_indices;    // indices of chosen basis reps
        // cocenter_coords[i] = coordinates of [b_i] over cocenter_reps.
        std::vector<std::vector<Scalar>> cocenter_coords;
    };
    const CenterData& center_cocenter() const { return center_; }

    const std::vector<TeleporterEntry>& teleporter_table() const { return teleporter_; }

    // Membership test against the cached center basis.
    bool is_central(const AlgElem& a) const;

    std::string to_json() const;

private:
    void validate() const;
    void compute_dual_basis();
    void compute_center_cocenter();
    void compute_teleporters();

    Data data_;
    std::vector<AlgElem> dual_basis_;
    CenterData center_;
    std::vector<TeleporterEntry> teleporter_;
};

} // namespace heiscat
