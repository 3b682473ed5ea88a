#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <heiscat/parity.hpp>
#include <heiscat/scalar.hpp>

#include <random>

using namespace heiscat;

namespace {

// Random rational functions built from a fixed pool of small pieces.
Scalar random_scalar(std::mt19937& rng, int depth = 2) {
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> coeff(-4, 4);
    switch (pick(rng)) {
        case 0: return Scalar(coeff(rng));
        case 1: return Scalar::z();
        case 2: return Scalar::t();
        case 3:
            if (depth > 0) return random_scalar(rng, depth - 1) + random_scalar(rng, depth - 1);
            return Scalar::z();
        case 4:
            if (depth > 0) return random_scalar(rng, depth - 1) * random_scalar(rng, depth - 1);
            return Scalar::t();
        default: {
            if (depth > 0) {
                Scalar d = random_scalar(rng, depth - 1);
                if (!d.is_zero()) return random_scalar(rng, depth - 1) / d;
            }
            return Scalar(1) + Scalar::z() * Scalar::t();
        }
    }
}

} // namespace

TEST_CASE("additive and multiplicative inverses") {
    Scalar z = Scalar::z();
    Scalar t = Scalar::t();
    CHECK((z + (-z)).is_zero());
    CHECK((t / t).is_one());
    CHECK((t * t.inv()).is_one());
}

TEST_CASE("rational arithmetic with specialization") {
    // (t - 1/t)/z at z=3, t=2 evaluates to 1/2.
    Scalar e = (Scalar::t() - Scalar::t().inv()) / Scalar::z();
    CHECK(e.specialize(3, 2) == Rational(1, 2));

    CHECK(Scalar::z().specialize(3, 2) == Rational(3));
    CHECK((Scalar::t() / Scalar::z()).specialize(3, 2) == Rational(2, 3));
    CHECK_THROWS_AS((Scalar(1) / (Scalar::z() - Scalar::t())).specialize(2, 2),
                    nongeneric_specialization);
    CHECK_THROWS_AS(Scalar::z().specialize(0, 1), scalar_error);
}

TEST_CASE("field laws on randomized triples") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        Scalar c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("canonical form is stable under cancellation") {
    Scalar z = Scalar::z();
    Scalar t = Scalar::t();
    Scalar a = (z * z - t * t) / (z - t);
    CHECK(a == z + t);
    Scalar b = (z * t + z) / (t + 1);
    CHECK(b == z);
}

TEST_CASE("parser round trip") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        Scalar a = random_scalar(rng);
        Scalar back = Scalar::from_string(a.str());
        CHECK(back == a);
    }
    CHECK(Scalar::from_string("z^-2") == Scalar::z(-2));
    CHECK(Scalar::from_string("(t - 1/t)/z") ==
          (Scalar::t() - Scalar::t().inv()) / Scalar::z());
    CHECK(Scalar::from_string("3*z^2*t - 1/2") ==
          Scalar(3) * Scalar::z(2) * Scalar::t() - Scalar(Rational(1, 2)));
    CHECK_THROWS_AS(Scalar::from_string("z +"), scalar_error);
    CHECK_THROWS_AS(Scalar::from_string("q"), scalar_error);
}

TEST_CASE("t inversion substitution") {
    Scalar t = Scalar::t();
    Scalar z = Scalar::z();
    CHECK(t.swap_t() == t.inv());
    CHECK(t.inv().swap_t() == t);
    Scalar mixed = (z * t + Scalar(1)) / (t - z);
    Scalar swapped = mixed.swap_t();
    // Substituting twice is the identity.
    CHECK(swapped.swap_t() == mixed);
    CHECK(swapped.specialize(3, 2) == mixed.specialize(3, Rational(1, 2)));
}

TEST_CASE("koszul signs") {
    using enum Parity;
    std::vector<Parity> one_odd{odd};
    std::vector<Parity> one_even{even};
    std::vector<Parity> two_odd{odd, odd};
    CHECK(koszul_sign(one_odd, one_odd) == -1);
    CHECK(koszul_sign(one_even, one_odd) == 1);
    CHECK(koszul_sign(one_even, two_odd) == 1);
    CHECK(koszul_sign(two_odd, one_odd) == 1);

    // Bimultiplicativity: sign(p ++ p', q) = sign(p,q) * sign(p',q).
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Parity> p, p2, q;
        for (int i = 0; i < 3; ++i) {
            p.push_back(bit(rng) ? odd : even);
            p2.push_back(bit(rng) ? odd : even);
            q.push_back(bit(rng) ? odd : even);
        }
        std::vector<Parity> cat = p;
        cat.insert(cat.end(), p2.begin(), p2.end());
        CHECK(koszul_sign(cat, q) == koszul_sign(p, q) * koszul_sign(p2, q));
    }
}
