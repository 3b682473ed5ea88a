#include <doctest.h>

#include <heiscat/wreath.hpp>

#include <random>

using namespace heiscat;

namespace {

std::vector<std::shared_ptr<const Frobenius>> builtin_algebras() {
    return {Frobenius::trivial(), Frobenius::group_algebra_cyclic(2),
            Frobenius::truncated_polynomial(2)};
}

WreathMono random_mono(std::mt19937& rng, const Frobenius& A, int n, int max_exp) {
    WreathMono m;
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    std::uniform_int_distribution<int> tok(0, A.dim() - 1);
    for (int i = 0; i < n; ++i) m.exps.push_back(exp(rng));
    for (int i = 0; i < n; ++i) m.toks.push_back(tok(rng));
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    m.perm = Perm(img);
    return m;
}

} // namespace

TEST_CASE("permutation reduced words") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 5; ++n) {
        for (int iter = 0; iter < 30; ++iter) {
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[i] = i + 1;
            std::shuffle(img.begin(), img.end(), rng);
            Perm g(img);
            auto word = g.reduced_word();
            CHECK((int)word.size() == g.length());
            Perm acc(n);
            for (int i : word) acc = acc.compose(Perm::transposition(n, i));
            CHECK(acc == g);
        }
    }
}

TEST_CASE("quadratic relation sigma^2 = z tau sigma + 1") {
    for (auto A : builtin_algebras()) {
        for (int n = 2; n <= 3; ++n) {
            for (int i = 1; i < n; ++i) {
                WreathElem s = WreathElem::sigma(A, n, i);
                WreathElem lhs = s * s;
                WreathElem rhs = WreathElem::tau(A, n, i) * s * Scalar::z() +
                                 WreathElem::one(A, n);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("sigma inverse really inverts") {
    for (auto A : builtin_algebras()) {
        WreathElem s = WreathElem::sigma(A, 2, 1);
        WreathElem si = WreathElem::sigma_inv(A, 2, 1);
        CHECK(s * si == WreathElem::one(A, 2));
        CHECK(si * s == WreathElem::one(A, 2));
    }
}

TEST_CASE("braid relations") {
    for (auto A : builtin_algebras()) {
        for (int n = 3; n <= 4; ++n) {
            for (int i = 1; i + 1 < n; ++i) {
                WreathElem a = WreathElem::sigma(A, n, i);
                WreathElem b = WreathElem::sigma(A, n, i + 1);
                CHECK(a * b * a == b * a * b);
            }
            if (n == 4) {
                WreathElem a = WreathElem::sigma(A, n, 1);
                WreathElem c = WreathElem::sigma(A, n, 3);
                CHECK(a * c == c * a);
            }
        }
    }
}

TEST_CASE("affine relations") {
    for (auto A : builtin_algebras()) {
        int n = 2;
        WreathElem s = WreathElem::sigma(A, n, 1);
        WreathElem x1 = WreathElem::x(A, n, 1, 1);
        WreathElem x2 = WreathElem::x(A, n, 2, 1);
        CHECK(s * x1 * s == x2);
        // x's commute with each other and with tokens.
        CHECK(x1 * x2 == x2 * x1);
        for (int b = 0; b < A->dim(); ++b) {
            WreathElem tk = WreathElem::token(A, n, 1, AlgElem::basis(*A, b));
            CHECK(x2 * tk == tk * x2);
            CHECK(x1 * tk == tk * x1);
        }
    }
    // sigma x1 = x2 sigma - z x2 over the trivial algebra.
    auto K = Frobenius::trivial();
    WreathElem s = WreathElem::sigma(K, 2, 1);
    WreathElem x1 = WreathElem::x(K, 2, 1, 1);
    WreathElem x2 = WreathElem::x(K, 2, 2, 1);
    CHECK(s * x1 == x2 * s - x2 * Scalar::z());
}

TEST_CASE("dot slides through crossings agree along both routes") {
    // Route 1 is the engine product sigma * x_i^m. Route 2 goes through
    // sigma^{-1}: sigma x_i^m = sigma^{-1} x_i^m + z tau x_i^m, with the
    // sigma^{-1} slide written out by hand.
    for (auto A : builtin_algebras()) {
        int n = 2;
        WreathElem s = WreathElem::sigma(A, n, 1);
        WreathElem tau = WreathElem::tau(A, n, 1);
        for (int m = -3; m <= 3; ++m) {
            WreathElem x1m = WreathElem::x(A, n, 1, m);
            WreathElem lhs = s * x1m;
            // sigma^{-1} x_1^m = x_2^m sigma - z sum_{r+s=m, r,s>=0} x_2^r x_1^s tau (m >= 0)
            //                  = x_2^m sigma + z sum_{r+s=m, r,s<0} ...      (m < 0)
            WreathElem sinv_x = WreathElem::x(A, n, 2, m) * s;
            if (m >= 0) {
                for (int r = 0; r <= m; ++r)
                    sinv_x = sinv_x - WreathElem::x(A, n, 2, r) *
                                          WreathElem::x(A, n, 1, m - r) * tau *
                                          Scalar::z();
            } else {
                for (int r = -1; r >= m + 1; --r)
                    sinv_x = sinv_x + WreathElem::x(A, n, 2, r) *
                                          WreathElem::x(A, n, 1, m - r) * tau *
                                          Scalar::z();
            }
            WreathElem rhs = sinv_x + tau * x1m * Scalar::z();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("associativity on randomized monomial triples") {
    std::mt19937 rng(2024);
    for (auto A : builtin_algebras()) {
        for (int n : {2, 3}) {
            for (int iter = 0; iter < 25; ++iter) {
                WreathElem u(A, n), v(A, n), w(A, n);
                u.add_term(random_mono(rng, *A, n, 2), Scalar(1));
                v.add_term(random_mono(rng, *A, n, 2), Scalar(1));
                w.add_term(random_mono(rng, *A, n, 2), Scalar(1));
                CHECK((u * v) * w == u * (v * w));
            }
        }
    }
}

TEST_CASE("regular representation matches spec examples") {
    auto K = Frobenius::trivial();
    RegularRep rep = regular_representation(K, 2);
    REQUIRE(rep.basis.size() == 2);
    // Basis order: identity then sigma. sigma matrix is [[0, 1], [1, z]].
    const auto& m = rep.sigma_mats[0];
    CHECK(m[0][0] == Scalar(0));
    CHECK(m[0][1] == Scalar(1));
    CHECK(m[1][0] == Scalar(1));
    CHECK(m[1][1] == Scalar::z());

    auto c2 = Frobenius::group_algebra_cyclic(2);
    RegularRep r1 = regular_representation(c2, 1);
    REQUIRE(r1.basis.size() == 2);
    // e acts as the identity.
    CHECK(r1.token_mats[0][0][0] == Scalar(1));
    CHECK(r1.token_mats[0][1][1] == Scalar(1));
    CHECK(r1.token_mats[0][0][1] == Scalar(0));

    auto dual = Frobenius::truncated_polynomial(2);
    RegularRep r8 = regular_representation(dual, 2);
    CHECK(r8.basis.size() == 8);
}

TEST_CASE("multiplication agrees with regular representation structure constants") {
    std::mt19937 rng(5150);
    for (auto A : builtin_algebras()) {
        for (int n : {2, (A->dim() == 1 ? 3 : 2)}) {
            RegularRep rep = regular_representation(A, n);
            int dim = (int)rep.basis.size();
            auto mat_of = [&](const WreathElem& gen) {
                std::vector<std::vector<Scalar>> m(dim, std::vector<Scalar>(dim, Scalar(0)));
                for (int c = 0; c < dim; ++c) {
                    WreathElem b(A, n);
                    b.add_term(rep.basis[c], Scalar(1));
                    WreathElem prod = gen * b;
                    for (const auto& [mono, coeff] : prod.terms())
                        m[rep.index.at(mono)][c] = coeff;
                }
                return m;
            };
            // The representation is multiplicative: M(sigma)^2 = M(sigma^2).
            for (int i = 1; i < n; ++i) {
                WreathElem s = WreathElem::sigma(A, n, i);
                auto ms = mat_of(s);
                auto ms2 = mat_of(s * s);
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c) {
                        Scalar acc(0);
                        for (int k = 0; k < dim; ++k) acc += ms[r][k] * ms[k][c];
                        CHECK(acc == ms2[r][c]);
                    }
            }
        }
    }
}

TEST_CASE("element text grammar round trips") {
    auto dual = Frobenius::truncated_polynomial(2);
    WreathElem e = WreathElem::parse(dual, 2, "x1^-2 * tok(2,c) * s1 + 3*z");
    CHECK(!e.is_zero());
    WreathElem back = WreathElem::parse(dual, 2, e.str());
    CHECK(back == e);

    auto K = Frobenius::trivial();
    CHECK(WreathElem::parse(K, 2, "s1*s1") ==
          WreathElem::parse(K, 2, "z*s1 + 1"));
    CHECK_THROWS_AS(WreathElem::parse(K, 2, "s5"), wreath_error);
    CHECK_THROWS_AS(WreathElem::parse(K, 2, "tok(1,nope)"), wreath_error);
}

TEST_CASE("tau examples") {
    auto K = Frobenius::trivial();
    CHECK(WreathElem::tau(K, 2, 1) == WreathElem::one(K, 2));

    auto c2 = Frobenius::group_algebra_cyclic(2);
    WreathElem t = WreathElem::tau(c2, 2, 1);
    CHECK(t.terms().size() == 2);  // e(x)e + g(x)g

    auto dual = Frobenius::truncated_polynomial(2);
    WreathElem td = WreathElem::tau(dual, 2, 1);
    // 1 (x) c + c (x) 1
    WreathElem expect =
        WreathElem::token(dual, 2, 1, AlgElem::basis(*dual, 1)) +
        WreathElem::token(dual, 2, 2, AlgElem::basis(*dual, 1));
    CHECK(td == expect);
}
