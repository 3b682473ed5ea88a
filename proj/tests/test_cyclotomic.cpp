#include <doctest.h>

#include <heiscat/cyclotomic.hpp>

#include <random>

using namespace heiscat;

namespace {

WreathMono random_basis_mono(std::mt19937& rng, const Frobenius& A, int n, int level) {
    WreathMono m;
    std::uniform_int_distribution<int> exp(0, level - 1);
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

TEST_CASE("reduction by f(x_1) = x_1^2 + t^2") {
    auto K = Frobenius::trivial();
    CycAlgebra alg(CycParams::monic_t2(K, 2));
    WreathElem x2 = WreathElem::x(K, 1, 1, 2);
    WreathElem r = alg.reduce(x2);
    CHECK(r == WreathElem::one(K, 1) * (-Scalar::t(2)));

    WreathElem x3 = WreathElem::x(K, 1, 1, 3);
    CHECK(alg.reduce(x3) == WreathElem::x(K, 1, 1, 1) * (-Scalar::t(2)));

    CHECK(alg.reduce(WreathElem::one(K, 1)) == WreathElem::one(K, 1));

    // Negative exponents resolve through the invertibility of f_l.
    WreathElem xm1 = WreathElem::x(K, 1, 1, -1);
    CHECK(alg.reduce(xm1) == WreathElem::x(K, 1, 1, 1) * (-Scalar::t(-2)));
    CHECK(alg.reduce(alg.reduce(xm1) * WreathElem::x(K, 1, 1, 1)) ==
          WreathElem::one(K, 1));
}

TEST_CASE("level zero gives the zero algebra in positive rank") {
    auto K = Frobenius::trivial();
    CycAlgebra alg(CycParams::monic_t2(K, 0));
    CHECK(alg.reduce(WreathElem::one(K, 1)).is_zero());
    CHECK(CycAlgebra::dimension(alg.params(), 2) == 0);
    CHECK(CycAlgebra::dimension(alg.params(), 0) == 1);
}

TEST_CASE("dimension counts") {
    auto K = Frobenius::trivial();
    auto c2 = Frobenius::group_algebra_cyclic(2);
    CHECK(CycAlgebra::dimension(CycParams::monic_t2(K, 2), 2) == 8);
    CHECK(CycAlgebra::dimension(CycParams::monic_t2(c2, 1), 3) == 48);
    CHECK(CycAlgebra::dimension(CycParams::monic_t2(c2, 2), 0) == 1);

    CycAlgebra alg(CycParams::monic_t2(K, 2));
    CHECK((BigInt)alg.basis(2).monos.size() == CycAlgebra::dimension(alg.params(), 2));
}

TEST_CASE("reduce is a ring map") {
    std::mt19937 rng(31);
    for (auto A : {Frobenius::trivial(), Frobenius::truncated_polynomial(2)}) {
        for (int l : {1, 2}) {
            CycAlgebra alg(CycParams::monic_t2(A, l));
            for (int n : {1, 2}) {
                for (int iter = 0; iter < 15; ++iter) {
                    WreathElem u(A, n), v(A, n);
                    // Arbitrary affine monomials, exponents outside [0, l).
                    std::uniform_int_distribution<int> exp(-2, 3);
                    WreathMono mu = random_basis_mono(rng, *A, n, l);
                    WreathMono mv = random_basis_mono(rng, *A, n, l);
                    for (auto& e : mu.exps) e = exp(rng);
                    for (auto& e : mv.exps) e = exp(rng);
                    u.add_term(mu, Scalar(1));
                    v.add_term(mv, Scalar(1));
                    CHECK(alg.reduce(u * v) == alg.mul(alg.reduce(u), alg.reduce(v)));
                }
            }
        }
    }
}

TEST_CASE("embedding is injective on the basis") {
    auto c2 = Frobenius::group_algebra_cyclic(2);
    CycAlgebra alg(CycParams::monic_t2(c2, 2));
    const auto& b1 = alg.basis(1);
    std::set<std::string> images;
    for (const auto& m : b1.monos) {
        WreathElem e(c2, 1);
        e.add_term(m, Scalar(1));
        WreathElem im = alg.embed(e, 2);
        CHECK(!im.is_zero());
        images.insert(im.str());
    }
    CHECK(images.size() == b1.monos.size());
}

TEST_CASE("mackey decomposition round trips") {
    std::mt19937 rng(404);
    for (auto A : {Frobenius::trivial(), Frobenius::group_algebra_cyclic(2)}) {
        for (int l : {1, 2}) {
            CycAlgebra alg(CycParams::monic_t2(A, l));
            for (int n1 : {1, 2, 3}) {
                const auto& basis = alg.basis(n1);
                if (basis.monos.empty()) continue;
                std::uniform_int_distribution<int> pick(0, (int)basis.monos.size() - 1);
                std::uniform_int_distribution<int> coeff(-3, 3);
                for (int iter = 0; iter < 12; ++iter) {
                    WreathElem u(A, n1);
                    for (int t = 0; t < 3; ++t)
                        u.add_term(basis.monos[pick(rng)], Scalar(coeff(rng)));
                    MackeyDecomp d = alg.mackey_decompose(u);
                    CHECK(alg.mackey_reassemble(d, n1) == u);
                }
            }
        }
    }
}

TEST_CASE("mackey on generators") {
    auto K = Frobenius::trivial();
    CycAlgebra alg(CycParams::monic_t2(K, 2));
    // u = sigma_n decomposes as 1 (x) 1 with no dot part.
    int n1 = 2;
    WreathElem s = WreathElem::sigma(K, n1, 1);
    MackeyDecomp d = alg.mackey_decompose(alg.reduce(s));
    REQUIRE(d.sigma_part.size() == 1);
    CHECK(d.dot_part.empty());
    CHECK(d.sigma_part[0].second == WreathElem::one(K, 1));

    // u = x_{n+1}^r b^{(n+1)} has only the w_{r,b} = 1 entry.
    WreathElem xr = WreathElem::x(K, n1, 2, 1);
    MackeyDecomp d2 = alg.mackey_decompose(alg.reduce(xr));
    CHECK(d2.sigma_part.empty());
    REQUIRE(d2.dot_part.size() == 1);
    CHECK(d2.dot_part.begin()->first == std::make_pair(1, 0));
    CHECK(d2.dot_part.begin()->second == WreathElem::one(K, 1));
}

TEST_CASE("cyclotomic trace") {
    auto K = Frobenius::trivial();
    CycAlgebra alg(CycParams::monic_t2(K, 2));

    // tr_1^f(1) = tr_A(1) = 1.
    CHECK(alg.cyclotomic_trace(WreathElem::one(K, 1)) == WreathElem::one(K, 0));
    // tr_2^f(sigma_1) = 0.
    CHECK(alg.cyclotomic_trace(alg.reduce(WreathElem::sigma(K, 2, 1))).is_zero());
    // Lemma: tr_n^f(f(x_n)) = 0 for n <= 3.
    for (auto A : {Frobenius::trivial(), Frobenius::group_algebra_cyclic(2)}) {
        for (int l : {1, 2}) {
            CycAlgebra a2(CycParams::monic_t2(A, l));
            for (int n = 1; n <= 3; ++n) {
                WreathElem f = a2.reduce(a2.f_of_x(n, n));
                CHECK(a2.cyclotomic_trace(f).is_zero());
            }
        }
    }
}

TEST_CASE("cyclotomic params validation and json") {
    auto K = Frobenius::trivial();
    CHECK_THROWS_AS(CycParams(K, {AlgElem::unit(*K), AlgElem::zero(*K)}),
                    cyclotomic_error);
    CycParams p = CycParams::from_json(
        K, R"({"level": 2, "coeffs": [["1"], ["0"], ["t^2"]]})");
    CHECK(p.level() == 2);
    CHECK(p.has_t2_normalization());

    auto c2 = Frobenius::group_algebra_cyclic(2);
    // f_1 = g is central in kC2, so this is accepted; f_l must stay scalar.
    CycParams q = CycParams::from_json(
        c2, R"({"level": 2, "coeffs": [["1","0"], ["0","1"], ["t^2","0"]]})");
    CHECK(q.level() == 2);
    CHECK_THROWS_AS(CycParams::from_json(
                        c2, R"({"level": 1, "coeffs": [["1","0"], ["0","1"]]})"),
                    cyclotomic_error);
}
