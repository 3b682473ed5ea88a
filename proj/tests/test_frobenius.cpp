#include <doctest.h>

#include <heiscat/frobenius.hpp>

using namespace heiscat;

namespace {

// Grassmann algebra on two odd generators: the smallest symmetric Frobenius
// superalgebra with an honest odd part and even trace.
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

} // namespace

TEST_CASE("dual bases of the built-in algebras") {
    auto triv = Frobenius::trivial();
    CHECK(triv->dual(0) == AlgElem::unit(*triv));

    auto c2 = Frobenius::group_algebra_cyclic(2);
    CHECK(c2->dual(0) == AlgElem::basis(*c2, 0));
    CHECK(c2->dual(1) == AlgElem::basis(*c2, 1));

    auto dual = Frobenius::truncated_polynomial(2);
    CHECK(dual->dual(0) == AlgElem::basis(*dual, 1));  // 1^vee = c
    CHECK(dual->dual(1) == AlgElem::basis(*dual, 0));  // c^vee = 1
}

TEST_CASE("dagger examples") {
    auto triv = Frobenius::trivial();
    AlgElem one = AlgElem::unit(*triv);
    CHECK(triv->dagger(one) == one * Scalar::z());

    auto dual = Frobenius::truncated_polynomial(2);
    AlgElem c = AlgElem::basis(*dual, 1);
    CHECK(dual->dagger(AlgElem::unit(*dual)) == c * (Scalar(2) * Scalar::z()));
    CHECK(dual->dagger(c).is_zero());
}

TEST_CASE("dagger is independent of the basis presentation") {
    // Present kC_2 in the idempotent basis instead of the group basis:
    // p = (e+g)/2, q = (e-g)/2.
    const char* idem = R"JSON({
      "name": "c2-idem",
      "basis": ["p", "q"],
      "parity": [0, 0],
      "unit": ["1", "1"],
      "mult": [
        [["1","0"], ["0","0"]],
        [["0","0"], ["0","1"]]
      ],
      "trace": ["1/2", "1/2"]
    })JSON";
    auto a = Frobenius::group_algebra_cyclic(2);
    auto b = Frobenius::from_json(idem);
    // phi(e) = p+q, phi(g) = p-q intertwines the presentations.
    auto phi = [&](const AlgElem& x) {
        Scalar c0 = x.coords()[0], c1 = x.coords()[1];
        return AlgElem(b.get(), {c0 + c1, c0 - c1});
    };
    AlgElem g = AlgElem::basis(*a, 1);
    CHECK(phi(a->dagger(g)) == b->dagger(phi(g)));
    AlgElem e = AlgElem::basis(*a, 0);
    CHECK(phi(a->dagger(e)) == b->dagger(phi(e)));
}

TEST_CASE("center and cocenter") {
    auto c2 = Frobenius::group_algebra_cyclic(2);
    CHECK(c2->center_cocenter().center.size() == 2);
    CHECK(c2->center_cocenter().cocenter_reps.size() == 2);

    auto triv = Frobenius::trivial();
    CHECK(triv->center_cocenter().center.size() == 1);

    auto m2 = Frobenius::matrix_algebra_2x2();
    CHECK(m2->center_cocenter().center.size() == 1);
    CHECK(m2->center_cocenter().cocenter_reps.size() == 1);
}

TEST_CASE("teleporter tables") {
    auto triv = Frobenius::trivial();
    REQUIRE(triv->teleporter_table().size() == 1);
    CHECK(triv->teleporter_table()[0].coeff == Scalar::z());

    auto c2 = Frobenius::group_algebra_cyclic(2);
    REQUIRE(c2->teleporter_table().size() == 2);
    for (const auto& e : c2->teleporter_table()) {
        CHECK(e.upper == e.lower);
        CHECK(e.coeff == Scalar::z());
    }

    auto dual = Frobenius::truncated_polynomial(2);
    REQUIRE(dual->teleporter_table().size() == 2);
    for (const auto& e : dual->teleporter_table()) {
        CHECK(e.upper != e.lower);
        CHECK(e.coeff == Scalar::z());
    }
}

TEST_CASE("beam identity and dagger symmetry") {
    for (auto A : {Frobenius::trivial(), Frobenius::group_algebra_cyclic(2),
                   Frobenius::truncated_polynomial(2), Frobenius::from_json(kGrassmann2)}) {
        int n = A->dim();
        for (int ai = 0; ai < n; ++ai) {
            AlgElem a = AlgElem::basis(*A, ai);
            // (beam): sum_b ab (x) b^vee = sum_b b (x) b^vee a, compared
            // coordinatewise in the tensor square.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Scalar lhs(0), rhs(0);
                    for (int b = 0; b < n; ++b) {
                        lhs += (AlgElem::basis(*A, ai) * AlgElem::basis(*A, b)).coords()[i] *
                               A->dual(b).coords()[j];
                        rhs += (b == i ? Scalar(1) : Scalar(0)) *
                               (A->dual(b) * a).coords()[j];
                        if (b == i) rhs += Scalar(0);  // keep shape explicit
                    }
                    rhs = (A->dual(i) * a).coords()[j];
                    CHECK(lhs == rhs);
                }
            // tr(a^dagger b) = tr(a b^dagger) on basis pairs.
            for (int bi = 0; bi < n; ++bi) {
                AlgElem b = AlgElem::basis(*A, bi);
                CHECK((A->dagger(a) * b).trace() == (a * A->dagger(b)).trace());
            }
        }
    }
}

TEST_CASE("grassmann superalgebra loads and has sensible structure") {
    auto g2 = Frobenius::from_json(kGrassmann2);
    CHECK(g2->dim() == 4);
    CHECK_FALSE(g2->purely_even());
    // u^vee should be proportional to v (pairing via the top class).
    AlgElem u = AlgElem::basis(*g2, 1);
    AlgElem v = AlgElem::basis(*g2, 2);
    CHECK((g2->dual(1) * u).trace() == Scalar(1));
    CHECK((g2->dual(2) * v).trace() == Scalar(1));
    // The Grassmann algebra is supercommutative, so the supercenter is all
    // of it and the cocenter has full dimension too.
    CHECK(g2->center_cocenter().center.size() == 4);
    CHECK(g2->center_cocenter().cocenter_reps.size() == 4);
}

TEST_CASE("invalid algebra data is rejected") {
    // Broken associativity.
    const char* bad = R"JSON({
      "basis": ["1", "x"],
      "parity": [0, 0],
      "unit": ["1", "0"],
      "mult": [
        [["1","0"], ["0","1"]],
        [["0","1"], ["1","0"]]
      ],
      "trace": ["0", "1"]
    })JSON";
    // x*x = 1 is fine (C2 again); corrupt the trace instead to break
    // nondegeneracy.
    const char* degenerate = R"JSON({
      "basis": ["1", "x"],
      "parity": [0, 0],
      "unit": ["1", "0"],
      "mult": [
        [["1","0"], ["0","1"]],
        [["0","1"], ["0","0"]]
      ],
      "trace": ["1", "0"]
    })JSON";
    CHECK_NOTHROW(Frobenius::from_json(bad));
    CHECK_THROWS_AS(Frobenius::from_json(degenerate), algebra_error);

    // Odd generator with nonzero trace violates evenness of the trace map.
    CHECK_THROWS_AS(Frobenius::truncated_polynomial(2, true), algebra_error);
}

TEST_CASE("json round trip") {
    auto c2 = Frobenius::group_algebra_cyclic(2);
    auto back = Frobenius::from_json(c2->to_json());
    CHECK(back->dim() == 2);
    CHECK(back->dual(1) == AlgElem::basis(*back, 1));
}
