#include <doctest.h>

#include <heiscat/symfun.hpp>

using namespace heiscat;

namespace {

std::vector<std::shared_ptr<const Frobenius>> builtin_algebras() {
    return {Frobenius::trivial(), Frobenius::group_algebra_cyclic(2),
            Frobenius::truncated_polynomial(2)};
}

// Convolution from the defining identity, evaluated independently of the
// recursive solver: sum_c sum_{p+q=n} (-1)^p e_p(ac) h_q(c^vee b).
SymElem banana_convolution(const SymContext& ctx, const AlgElem& a, const AlgElem& b,
                           int n) {
    const Frobenius& A = ctx.algebra();
    SymElem acc;
    for (int c = 0; c < A.dim(); ++c) {
        AlgElem ac = a * AlgElem::basis(A, c);
        AlgElem cb = A.dual(c) * b;
        for (int p = 0; p <= n; ++p) {
            SymElem term = ctx.mul(ctx.e_of(0, ac, p), ctx.h_of(0, cb, n - p));
            if (p % 2)
                acc = acc - term;
            else
                acc = acc + term;
        }
    }
    return acc;
}

} // namespace

TEST_CASE("e_n boundary cases") {
    auto K = Frobenius::trivial();
    SymContext ctx(K, 0);
    AlgElem one = AlgElem::unit(*K);
    CHECK(ctx.e_of(0, one, -3).is_zero());
    CHECK(ctx.e_of(0, one, 0) == SymElem(Scalar(1)));
    SymElem e2 = ctx.e_of(0, one, 2);
    CHECK(e2 == SymElem::generator(SymGen{0, 2, 0}));
}

TEST_CASE("h from e over the trivial algebra") {
    auto K = Frobenius::trivial();
    SymContext ctx(K, 0);
    AlgElem one = AlgElem::unit(*K);
    CHECK(ctx.h_of(0, one, 0) == SymElem(Scalar(1)));
    CHECK(ctx.h_of(0, one, 1) == ctx.e_of(0, one, 1));
    // h_2 = e_1^2 - e_2.
    SymElem e1 = ctx.e_of(0, one, 1);
    SymElem expect = ctx.mul(e1, e1) - ctx.e_of(0, one, 2);
    CHECK(ctx.h_of(0, one, 2) == expect);
}

TEST_CASE("banana identity holds degreewise for n <= 6 by convolution") {
    for (auto A : builtin_algebras()) {
        SymContext ctx(A, 0);
        for (int ai = 0; ai < A->dim(); ++ai)
            for (int bi = 0; bi < A->dim(); ++bi) {
                AlgElem a = AlgElem::basis(*A, ai);
                AlgElem b = AlgElem::basis(*A, bi);
                for (int n = 0; n <= 6; ++n) {
                    SymElem conv = banana_convolution(ctx, a, b, n);
                    if (n == 0)
                        CHECK(conv == SymElem((a * b).trace()));
                    else
                        CHECK(conv.is_zero());
                }
            }
    }
}

TEST_CASE("bubble boundary values from the closed forms") {
    for (int k : {-2, -1, 0, 1, 2}) {
        for (auto A : builtin_algebras()) {
            SymContext ctx(A, k);
            for (int ai = 0; ai < A->dim(); ++ai) {
                AlgElem a = AlgElem::basis(*A, ai);
                Scalar tz = Scalar::t() / Scalar::z();
                // plus ccw with -k dots evaluates to (t/z) tr(a).
                CHECK(ctx.bubble_value({BubbleOrientation::counterclockwise,
                                        BubbleDecor::plus, a, -k}) ==
                      SymElem(tz * a.trace()));
                // plus ccw vanishes below the boundary.
                CHECK(ctx.bubble_value({BubbleOrientation::counterclockwise,
                                        BubbleDecor::plus, a, -k - 1})
                          .is_zero());
                // minus cw with 0 dots is (t/z) tr(a); zero above.
                CHECK(ctx.bubble_value({BubbleOrientation::clockwise,
                                        BubbleDecor::minus, a, 0}) ==
                      SymElem(tz * a.trace()));
                CHECK(ctx.bubble_value({BubbleOrientation::clockwise,
                                        BubbleDecor::minus, a, 2})
                          .is_zero());
                // minus ccw with 0 dots is -(1/(tz)) tr(a).
                CHECK(ctx.bubble_value({BubbleOrientation::counterclockwise,
                                        BubbleDecor::minus, a, 0}) ==
                      SymElem(-(Scalar::t().inv() / Scalar::z()) * a.trace()));
                // Genuine ccw bubbles with 0 <= r < -k (k < 0).
                if (k < 0) {
                    for (int r = 0; r < -k; ++r) {
                        SymElem v = ctx.bubble_value({BubbleOrientation::counterclockwise,
                                                      BubbleDecor::genuine, a, r});
                        SymElem expect =
                            r == 0 ? SymElem(-(Scalar::t().inv() / Scalar::z()) *
                                             a.trace())
                                   : SymElem();
                        CHECK(v == expect);
                    }
                }
                // Genuine cw bubbles with 0 <= n <= k evaluate to
                // (delta_{n,0} t - delta_{n,k} t^{-1})/z tr(a).
                if (k >= 0) {
                    for (int n = 0; n <= k; ++n) {
                        SymElem v = ctx.bubble_value({BubbleOrientation::clockwise,
                                                      BubbleDecor::genuine, a, n});
                        Scalar expect(0);
                        if (n == 0) expect += Scalar::t() / Scalar::z();
                        if (n == k) expect -= Scalar::t().inv() / Scalar::z();
                        CHECK(v == SymElem(expect * a.trace()));
                    }
                }
            }
        }
    }
}

TEST_CASE("infinite Grassmannian relation") {
    for (int k : {-2, -1, 0, 1, 2}) {
        for (auto A : builtin_algebras()) {
            SymContext ctx(A, k, 6);
            for (int ai = 0; ai < A->dim(); ++ai)
                for (int bi = 0; bi < A->dim(); ++bi) {
                    AlgElem a = AlgElem::basis(*A, ai);
                    AlgElem b = AlgElem::basis(*A, bi);
                    for (int n = -4; n <= 4; ++n) {
                        SymElem expect =
                            n == 0 ? SymElem(-(Scalar(1) / Scalar::z()) *
                                             (a * b).trace())
                                   : SymElem();
                        CHECK(ctx.grassmannian_sum(n, a, b, true) == expect);
                        CHECK(ctx.grassmannian_sum(n, a, b, false) == expect);
                    }
                }
        }
    }
}

TEST_CASE("spec examples for grassmannian values") {
    auto K = Frobenius::trivial();
    SymContext ctx(K, 1);
    AlgElem one = AlgElem::unit(*K);
    CHECK(ctx.grassmannian_sum(0, one, one, true) ==
          SymElem(-(Scalar(1) / Scalar::z())));
    CHECK(ctx.grassmannian_sum(2, one, one, true).is_zero());

    auto dual = Frobenius::truncated_polynomial(2);
    SymContext ctx2(dual, 1);
    AlgElem u = AlgElem::unit(*dual);
    // tr(1) = 0 in the dual numbers, so the n=0 value vanishes.
    CHECK(ctx2.grassmannian_sum(0, u, u, true).is_zero());
}

TEST_CASE("determinant route agrees with the dictionary") {
    for (auto A : builtin_algebras()) {
        for (int k : {0, 1, 2}) {
            SymContext ctx(A, k);
            for (int ai = 0; ai < A->dim(); ++ai) {
                AlgElem a = AlgElem::basis(*A, ai);
                for (int dots = -k; dots <= 0; ++dots) {
                    CHECK(ctx.plus_ccw_by_determinant(a, dots) ==
                          ctx.bubble_value({BubbleOrientation::counterclockwise,
                                            BubbleDecor::plus, a, dots}));
                }
            }
        }
        for (int k : {0, -1, -2}) {
            SymContext ctx(A, k);
            for (int ai = 0; ai < A->dim(); ++ai) {
                AlgElem a = AlgElem::basis(*A, ai);
                for (int dots = k; dots <= 0; ++dots) {
                    CHECK(ctx.plus_cw_by_determinant(a, dots) ==
                          ctx.bubble_value({BubbleOrientation::clockwise,
                                            BubbleDecor::plus, a, dots}));
                }
            }
        }
    }
}

TEST_CASE("bubble centrality in the token") {
    for (auto A : builtin_algebras()) {
        SymContext ctx(A, 1);
        for (int ai = 0; ai < A->dim(); ++ai)
            for (int bi = 0; bi < A->dim(); ++bi) {
                AlgElem ab = AlgElem::basis(*A, ai) * AlgElem::basis(*A, bi);
                AlgElem ba = AlgElem::basis(*A, bi) * AlgElem::basis(*A, ai);
                int sign = koszul_sign(A->parity(ai), A->parity(bi));
                for (int n = -4; n <= 4; ++n) {
                    for (auto orient : {BubbleOrientation::clockwise,
                                        BubbleOrientation::counterclockwise})
                        for (auto dec :
                             {BubbleDecor::plus, BubbleDecor::minus, BubbleDecor::genuine}) {
                            SymElem lhs = ctx.bubble_value({orient, dec, ab, n});
                            SymElem rhs = ctx.bubble_value({orient, dec, ba, n});
                            if (sign < 0) rhs = rhs * Scalar(-1);
                            CHECK(lhs == rhs);
                        }
                }
            }
    }
}

TEST_CASE("generating function product identity") {
    // sum_c O^{+L}(ac; w) O^{+R}(c^vee b; w) (with the teleporter z) has
    // coefficientwise value z tr(ab): equivalently the w^{-m} coefficient of
    // the product, times z, is delta_{m,0} z tr(ab).
    for (auto A : builtin_algebras()) {
        for (int k : {-1, 0, 1}) {
            SymContext ctx(A, k, 6);
            for (int ai = 0; ai < A->dim(); ++ai)
                for (int bi = 0; bi < A->dim(); ++bi) {
                    AlgElem a = AlgElem::basis(*A, ai);
                    AlgElem b = AlgElem::basis(*A, bi);
                    for (int m = -3; m <= 3; ++m) {
                        // z * sum_{r+s=m} (t^{-1}z)(-tz) [pairs] = delta z tr(ab)
                        SymElem sum = ctx.grassmannian_sum(m, a, b, true);
                        SymElem lhs = sum * (-(Scalar::z() * Scalar::z()));
                        SymElem expect = m == 0 ? SymElem(Scalar::z() * (a * b).trace())
                                                : SymElem();
                        CHECK(lhs == expect);
                        SymElem summ = ctx.grassmannian_sum(m, a, b, false);
                        CHECK(summ * (-(Scalar::z() * Scalar::z())) == expect);
                    }
                }
        }
    }
}

TEST_CASE("supercommutativity with odd generators") {
    const char* kGrassmann2 = R"JSON({
      "name": "grassmann2",
      "basis": ["1", "u", "v", "uv"],
      "parity": [0, 1, 1, 0],
      "unit": ["1", "0", "0", "0"],
      "mult": [
        [["1","0","0","0"], ["0","1","0","0"], ["0","0","1","0"], ["0","0","0","1"]],
        [["0","1","0","0"], ["0","0","0","0"], ["0","0","0","1"], ["0","0","0","0"]],
        [["0","0","1","0"], ["0","0","0","-1"], ["0","0","0","0"], ["0","0","0","0"]],
        [["0","0","0","1"], ["0","0","0","0"], ["0","0","0","0"], ["0","0","0","0"]]
      ],
      "trace": ["0", "0", "0", "1"]
    })JSON";
    auto G = Frobenius::from_json(kGrassmann2);
    SymContext ctx(G, 0);
    AlgElem u = AlgElem::basis(*G, 1);
    AlgElem v = AlgElem::basis(*G, 2);
    SymElem eu = ctx.e_of(0, u, 1);
    SymElem ev = ctx.e_of(0, v, 2);
    CHECK(ctx.mul(eu, ev) == ctx.mul(ev, eu) * Scalar(-1));
    CHECK(ctx.mul(eu, eu).is_zero());
    // The banana identity also holds with odd classes around.
    for (int n = 0; n <= 4; ++n) {
        SymElem conv = banana_convolution(ctx, u, v, n);
        if (n == 0)
            CHECK(conv == SymElem((u * v).trace()));
        else
            CHECK(conv.is_zero());
    }
}
