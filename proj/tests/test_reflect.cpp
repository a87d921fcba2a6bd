#include <catch2/catch_amalgamated.hpp>

#include "cherednik/reflection.hpp"

using namespace cherednik;

TEST_CASE("symmetric group reflections") {
    const FpField F = fp_field(5);
    const auto g = symmetric_group<Fp>(F, 3, F.one());
    REQUIRE(g.reflections.size() == 3);
    CHECK(g.num_classes == 1);
    CHECK(g.rank == 3);

    // Transposition (1 2): root x1 - x2, coroot (1, -1, 0).
    const auto& s01 = g.reflections[0];
    CHECK(s01.root_i == 0);
    CHECK(s01.root_j == 1);
    CHECK(s01.root_lambda == F.one());
    CHECK(s01.coroot[0] == F.one());
    CHECK(s01.coroot[1] == F.from_int(-1));
    CHECK(s01.coroot[2] == F.zero());

    // alpha is a (-1)-eigenvector of its own reflection.
    const Poly<Fp> alpha = s01.alpha_poly(F, 3);
    CHECK(s01.act(alpha) == alpha * F.from_int(-1));

    // <y_k, alpha>: 1, -1, 0.
    CHECK(s01.alpha_coeff(0) == F.one());
    CHECK(s01.alpha_coeff(1) == F.from_int(-1));
    CHECK(s01.alpha_coeff(2) == F.zero());
}

TEST_CASE("divided differences") {
    const FpField F = fp_field(7);
    const auto g = symmetric_group<Fp>(F, 2, F.one());
    const Poly<Fp> x1 = Poly<Fp>::variable(F, 2, 0), x2 = Poly<Fp>::variable(F, 2, 1);
    CHECK(divided_difference(x1 * x1, g.reflections[0]) == x1 + x2);
    CHECK(divided_difference(x1 * x2, g.reflections[0]).is_zero());
    CHECK(divided_difference(x1.pow(3), g.reflections[0]) == x1 * x1 + x1 * x2 + x2 * x2);
}

TEST_CASE("dihedral group, odd m over a characteristic-2 extension") {
    const RootOfUnity root = primitive_mth_root(2, 7);
    const FqField F = root.zeta.field();
    const auto g = dihedral_group<Fq>(F, 7, root.zeta, {F.one()});
    CHECK(g.reflections.size() == 7);
    CHECK(g.num_classes == 1);
    CHECK(g.rank == 2);
    for (const auto& s : g.reflections) CHECK(s.class_id == 0);

    // s_k has root x1 - zeta^k x2, again a (-1)-eigenvector.
    for (const auto& s : g.reflections) {
        const Poly<Fq> alpha = s.alpha_poly(F, 2);
        CHECK(s.act(alpha) == alpha * F.from_int(-1));
    }
}

TEST_CASE("dihedral group, even m with two classes") {
    const RootOfUnity root = primitive_mth_root(5, 4); // zeta = 2 in F_5
    const FqField F = root.zeta.field();
    const auto g = dihedral_group<Fq>(F, 4, root.zeta, {F.one(), F.from_int(2)});
    REQUIRE(g.reflections.size() == 4);
    CHECK(g.num_classes == 2);
    for (std::size_t k = 0; k < 4; ++k) CHECK(g.reflections[k].class_id == static_cast<int>(k % 2));
    CHECK(g.param_of(g.reflections[0]) == F.one());
    CHECK(g.param_of(g.reflections[1]) == F.from_int(2));

    // Braid-style consistency: s_k s_l s_k = s_{2k - l mod m} on the dual space.
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
            const auto lhs = g.reflections[k].dual * g.reflections[l].dual * g.reflections[k].dual;
            const std::size_t t = ((2 * k + 4) - l + 4) % 4;
            CHECK(lhs == g.reflections[t].dual);
        }
}

TEST_CASE("dihedral validation") {
    const RootOfUnity root = primitive_mth_root(5, 4);
    const FqField F = root.zeta.field();
    // Wrong class-parameter count.
    CHECK_THROWS_AS(dihedral_group<Fq>(F, 4, root.zeta, {F.one()}), InvalidInput);
    // zeta of wrong order.
    CHECK_THROWS_AS(dihedral_group<Fq>(F, 8, root.zeta, {F.one(), F.one()}), InvalidInput);
    // p | m is rejected at the root-of-unity stage already.
    CHECK_THROWS_AS(primitive_mth_root(2, 4), InvalidInput);
}

TEST_CASE("two-dimensional lowest weights of the dihedral group") {
    const RootOfUnity root = primitive_mth_root(2, 7);
    const FqField F = root.zeta.field();
    const auto g = dihedral_group<Fq>(F, 7, root.zeta, {F.one()});

    for (int a = 1; a <= 3; ++a) {
        const TauRep<Fq> tau = make_tau(g, TauSpec::rho(a));
        REQUIRE(tau.dim == 2);
        // tau(s_k) tau(s_l) tau(s_k) = tau(s_{2k-l}) pins the homomorphism property.
        for (std::size_t k = 0; k < 7; ++k)
            for (std::size_t l = 0; l < 7; ++l) {
                const auto lhs = tau.mats[k] * tau.mats[l] * tau.mats[k];
                const std::size_t t = ((2 * k + 7) - l + 7) % 7;
                CHECK(lhs == tau.mats[t]);
            }
    }
    CHECK_THROWS_AS(make_tau(g, TauSpec::rho(0)), InvalidInput);
    CHECK_THROWS_AS(make_tau(g, TauSpec::rho(4)), InvalidInput); // 4 >= 7/2
    CHECK(make_tau(g, TauSpec::trivial()).dim == 1);
}

TEST_CASE("acting on module elements") {
    const FpField F = fp_field(5);
    const auto g = symmetric_group<Fp>(F, 3, F.one());
    const TauRep<Fp> tau = make_tau(g, TauSpec::trivial());
    const Poly<Fp> x1 = Poly<Fp>::variable(F, 3, 0), x2 = Poly<Fp>::variable(F, 3, 1);
    VermaVector<Fp> v(F, 3, 1);
    v[0] = x1 * x1 * x2;
    const VermaVector<Fp> sv = act_verma(g, tau, 0, v); // swap x1, x2
    CHECK(sv[0] == x2 * x2 * x1);
}
