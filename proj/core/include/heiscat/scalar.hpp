#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace heiscat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct scalar_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by Scalar::specialize when the denominator vanishes at the
// requested point. Carries the offending factor so callers can retry
// at a fresh point.
struct nongeneric_specialization : scalar_error {
    explicit nongeneric_specialization(const std::string& what) : scalar_error(what) {}
};

// Sparse bivariate polynomial in z, t with rational coefficients.
// Keys are (z-exponent, t-exponent); zero coefficients are never stored.
class Poly {
public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, Rational>;

    Poly() = default;
    explicit Poly(Rational c);

    static Poly z(int e = 1);
    static Poly t(int e = 1);
    static Poly monomial(int ez, int et, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    Rational constant_value() const;

    const Map& terms() const { return terms_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    int deg_z() const;
    int deg_t() const;

    // Leading term in lex order (z before t).
    Key lead_key() const;
    Rational lead_coeff() const;

    Rational eval(const Rational& z0, const Rational& t0) const;

    // Substitute t -> 1/t; returns p' with p(z, 1/t) = p'(z,t) / t^shift.
    std::pair<Poly, int> subst_t_inverse() const;

    std::string str() const;

    void set(int ez, int et, Rational c);

private:
    Map terms_;
};

Poly gcd(const Poly& a, const Poly& b);
Poly divexact(const Poly& a, const Poly& b);

// Exact rational function in Q(z,t), stored as a reduced fraction:
// gcd(num, den) is constant and den has leading coefficient 1.
class Scalar {
public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(int v) : num_(Rational(v)), den_(Rational(1)) {}
    explicit Scalar(Rational v) : num_(std::move(v)), den_(Rational(1)) {}
    Scalar(Poly num, Poly den);

    static Scalar z(int e = 1);
    static Scalar t(int e = 1);
    static Scalar from_string(const std::string& s);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inv() const;
    Scalar pow(int e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order usable as a map key; not meaningful arithmetically.
    bool operator<(const Scalar& o) const;

    Rational specialize(const Rational& z0, const Rational& t0) const;

    // The image under t -> 1/t (z fixed); exact.
    Scalar swap_t() const;

    std::string str() const;

private:
    void reduce();

    Poly num_;
    Poly den_;
};

inline Scalar operator*(int a, const Scalar& b) { return Scalar(a) * b; }

} // namespace heiscat
