#include <catch2/catch_amalgamated.hpp>

#include "cherednik/poly.hpp"
#include "cherednik/verma.hpp"

using namespace cherednik;

namespace {

Poly<Fp> var(const FpField& F, int n, int i) { return Poly<Fp>::variable(F, n, i); }

} // namespace

TEST_CASE("multivariate arithmetic") {
    const FpField F = fp_field(5);
    const Poly<Fp> x1 = var(F, 2, 0), x2 = var(F, 2, 1);
    const Poly<Fp> sq = (x1 + x2).pow(2);
    CHECK(sq == x1 * x1 + x1 * x2 * F.from_int(2) + x2 * x2);
    CHECK(sq.degree() == 2);
    CHECK(sq.is_homogeneous());
    const Poly<Fp> mixed = sq + Poly<Fp>::constant(F, 2, F.one());
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK(mixed.graded_component(0) == Poly<Fp>::constant(F, 2, F.one()));
    CHECK(mixed.graded_component(2) == sq);
    CHECK(mixed.graded_component(1).is_zero());
}

TEST_CASE("partial derivatives respect the characteristic") {
    const FpField F = fp_field(5);
    const Poly<Fp> x1 = var(F, 2, 0), x2 = var(F, 2, 1);
    const Poly<Fp> f = x1.pow(3) * x2;
    CHECK(f.partial(0) == x1.pow(2) * x2 * F.from_int(3));
    CHECK(f.partial(1) == x1.pow(3));
    CHECK(x1.pow(5).partial(0).is_zero()); // d/dx x^p = 0 in char p
}

TEST_CASE("graded component of a product of binomials") {
    const FpField F = fp_field(7);
    const Poly<Fp> one = Poly<Fp>::constant(F, 3, F.one());
    Poly<Fp> prod = one;
    for (int i = 0; i < 3; ++i) prod = prod * (one - var(F, 3, i));
    const Poly<Fp> top = prod.graded_component(3);
    CHECK(top == var(F, 3, 0) * var(F, 3, 1) * var(F, 3, 2) * F.from_int(-1));
}

TEST_CASE("exact division by a binomial") {
    const FpField F = fp_field(5);
    const Poly<Fp> x1 = var(F, 2, 0), x2 = var(F, 2, 1);
    const Poly<Fp> num = x1 * x1 - x2 * x2;
    CHECK(num.divexact_binomial(0, F.one(), 1) == x1 + x2);
    CHECK_THROWS_AS((x1 * x1 + x2 * x2).divexact_binomial(0, F.one(), 1), InexactDivision);

    // A nontrivial eigenvalue: (x1 - z x2) divides x1^2 - z^2 x2^2 over F_9.
    const FqField F9 = fq_field(3, std::vector<std::uint64_t>{1, 0, 1});
    const Fq z = F9.gen();
    const Poly<Fq> y1 = Poly<Fq>::variable(F9, 2, 0), y2 = Poly<Fq>::variable(F9, 2, 1);
    const Poly<Fq> f = y1 * y1 - y2 * y2 * (z * z);
    CHECK(f.divexact_binomial(0, z, 1) == y1 + y2 * z);
}

TEST_CASE("linear substitution") {
    const FpField F = fp_field(5);
    const Poly<Fp> x1 = var(F, 2, 0), x2 = var(F, 2, 1);
    // Swap is a monomial matrix: term-by-term path.
    Matrix<Fp> swap(F, 2, 2);
    swap(0, 1) = F.one();
    swap(1, 0) = F.one();
    CHECK((x1 * x1 * x2).substitute_linear(swap) == x2 * x2 * x1);
    // Dense path: x1 -> x1 + x2.
    Matrix<Fp> shear = Matrix<Fp>::identity(F, 2);
    shear(1, 0) = F.one(); // column 0 sends x1 to x1 + x2
    CHECK((x1 * x1).substitute_linear(shear) == (x1 + x2).pow(2));
}

TEST_CASE("degree-d monomial enumeration and graded bases") {
    CHECK(monomials_of_degree(3, 4).size() == 15); // C(6, 2)
    const auto ms = monomials_of_degree(2, 3);
    REQUIRE(ms.size() == 4);
    CHECK(ms[0].e == std::vector<int>{3, 0}); // lex-descending from x1^3
    CHECK(ms[3].e == std::vector<int>{0, 3});

    const GradedBasis b = GradedBasis::enumerate(2, 3, 2);
    CHECK(b.dim() == 8);
    CHECK(b.index_of(Monomial{{3, 0}}, 0) == 0);
    CHECK(b.index_of(Monomial{{3, 0}}, 1) == 1);
    CHECK(b.index_of(Monomial{{0, 3}}, 1) == 7);
    CHECK_THROWS_AS(b.index_of(Monomial{{2, 0}}, 0), DegreeMismatch);
}

TEST_CASE("verma vectors and coordinates") {
    const FpField F = fp_field(5);
    const Poly<Fp> x1 = var(F, 2, 0), x2 = var(F, 2, 1);
    VermaVector<Fp> v(F, 2, 2);
    v[0] = x1 * x2;
    v[1] = x2 * x2 * F.from_int(3);
    CHECK(v.degree() == 2);
    CHECK(v.is_homogeneous());

    const GradedBasis b = GradedBasis::enumerate(2, 2, 2);
    const std::vector<Fp> cr = coords(v, b);
    const VermaVector<Fp> back = from_coords(F, b, cr);
    CHECK(back == v);

    VermaVector<Fp> w(F, 2, 2);
    w[0] = x1;
    CHECK_THROWS_AS(coords(w, b), DegreeMismatch);

    const Poly<Fp> scaled = x1 + x2;
    const VermaVector<Fp> prod = scaled * v;
    CHECK(prod.degree() == 3);
    CHECK(prod[1] == (x1 + x2) * x2 * x2 * F.from_int(3));
}
