#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cherednik/textio.hpp"

using namespace cherednik;

namespace {

Fp rand_fp(const FpField& F, std::mt19937_64& rng) {
    return F.from_int(static_cast<std::int64_t>(rng() % F.characteristic()));
}

Fq rand_fq(const FqField& F, std::mt19937_64& rng) {
    Fq e = F.zero();
    for (unsigned i = 0; i < F.degree(); ++i)
        e = e * F.gen() + F.from_int(static_cast<std::int64_t>(rng() % F.characteristic()));
    return e;
}

template <class B, class Rand>
RatFunc<B> rand_ratfunc(const RatFuncField<B>& F, Rand&& rand_base, std::mt19937_64& rng) {
    const RatFunc<B> c = F.c();
    RatFunc<B> num = F.zero(), den = F.zero();
    for (int i = 0; i < 3; ++i) num = num * c + F.embed(rand_base(rng));
    for (int i = 0; i < 2; ++i) den = den * c + F.embed(rand_base(rng));
    if (den.is_zero()) den = F.one() + c;
    return num / den;
}

template <class K, class Field, class Rand>
Poly<K> rand_poly(const Field& F, int nvars, int maxdeg, Rand&& rand_scalar,
                  std::mt19937_64& rng) {
    Poly<K> f(F, nvars);
    const int terms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        int budget = maxdeg;
        for (int i = 0; i < nvars; ++i) {
            e[static_cast<std::size_t>(i)] = static_cast<int>(rng() % (budget + 1));
            budget -= e[static_cast<std::size_t>(i)];
        }
        f.add_term(Monomial{e}, rand_scalar(rng));
    }
    return f;
}

} // namespace

TEST_CASE("poly render/parse round trip over F_p") {
    const FpField F = fp_field(7);
    std::mt19937_64 rng(42u);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = rand_poly<Fp>(
            F, 3, 5, [&](std::mt19937_64& r) { return rand_fp(F, r); }, rng);
        const std::string text = render_poly(f);
        CAPTURE(text);
        CHECK(parse_poly<Fp>(F, 3, text) == f);
    }
}

TEST_CASE("poly render/parse round trip over F_q") {
    const FqField F = fq_field(2, 3);
    std::mt19937_64 rng(43u);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = rand_poly<Fq>(
            F, 2, 6, [&](std::mt19937_64& r) { return rand_fq(F, r); }, rng);
        const std::string text = render_poly(f);
        CAPTURE(text);
        CHECK(parse_poly<Fq>(F, 2, text) == f);
    }
}

TEST_CASE("poly render/parse round trip over F_p(c)") {
    const RatFuncField<Fp> F{fp_field(5)};
    std::mt19937_64 rng(44u);
    auto rb = [&](std::mt19937_64& r) { return rand_fp(F.base, r); };
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = rand_poly<RatFunc<Fp>>(
            F, 3, 4, [&](std::mt19937_64& r) { return rand_ratfunc(F, rb, r); }, rng);
        const std::string text = render_poly(f);
        CAPTURE(text);
        CHECK(parse_poly<RatFunc<Fp>>(F, 3, text) == f);
    }
}

TEST_CASE("poly render/parse round trip over F_q(c)") {
    const FqField base = fq_field(2, 3);
    const RatFuncField<Fq> F{base};
    std::mt19937_64 rng(45u);
    auto rb = [&](std::mt19937_64& r) { return rand_fq(base, r); };
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = rand_poly<RatFunc<Fq>>(
            F, 2, 4, [&](std::mt19937_64& r) { return rand_ratfunc(F, rb, r); }, rng);
        const std::string text = render_poly(f);
        CAPTURE(text);
        CHECK(parse_poly<RatFunc<Fq>>(F, 2, text) == f);
    }
}

TEST_CASE("verma vectors render with the tensor marker and round trip") {
    const FqField F = fq_field(2, 3);
    std::mt19937_64 rng(46u);
    for (int trial = 0; trial < 20; ++trial) {
        VermaVector<Fq> v(F, 2, 2);
        v[0] = rand_poly<Fq>(
            F, 2, 4, [&](std::mt19937_64& r) { return rand_fq(F, r); }, rng);
        v[1] = rand_poly<Fq>(
            F, 2, 4, [&](std::mt19937_64& r) { return rand_fq(F, r); }, rng);
        const std::string text = render_verma(v);
        CAPTURE(text);
        if (!v.is_zero()) CHECK(text.find("(*)") != std::string::npos);
        CHECK(parse_verma<Fq>(F, 2, 2, text) == v);
    }
}

TEST_CASE("one-dimensional lowest weights render as bare polynomials") {
    const FpField F = fp_field(5);
    VermaVector<Fp> v(F, 2, 1);
    v[0] = parse_poly<Fp>(F, 2, "x1^2 + 3*x2");
    const std::string text = render_verma(v);
    CHECK(text == "x1^2 + 3*x2");
    CHECK(parse_verma<Fp>(F, 2, 1, text) == v);
}

TEST_CASE("parser accepts standard arithmetic notation") {
    const RatFuncField<Fp> F{fp_field(7)};
    const int n = 2;
    const auto x1 = Poly<RatFunc<Fp>>::variable(F, n, 0);
    const auto x2 = Poly<RatFunc<Fp>>::variable(F, n, 1);
    const auto one = Poly<RatFunc<Fp>>::constant(F, n, F.one());
    const RatFunc<Fp> c = F.c();

    CHECK(parse_poly<RatFunc<Fp>>(F, n, "x1 - x2") == x1 - x2);
    CHECK(parse_poly<RatFunc<Fp>>(F, n, "-x1^3") == x1 * x1 * x1 * F.from_int(-1));
    CHECK(parse_poly<RatFunc<Fp>>(F, n, "(x1 + x2)^2") == (x1 + x2) * (x1 + x2));
    CHECK(parse_poly<RatFunc<Fp>>(F, n, "2*c*x1") == x1 * (c + c));
    CHECK(parse_poly<RatFunc<Fp>>(F, n, "x1/c") == x1 * (F.one() / c));
    CHECK(parse_poly<RatFunc<Fp>>(F, n, "c/(c + 1)*x2") == x2 * (c / (c + F.one())));
    CHECK(parse_poly<RatFunc<Fp>>(F, n, "7") == one * F.from_int(7));
    CHECK(parse_poly<RatFunc<Fp>>(F, n, " ( x1 + 1 ) * ( x1 - 1 ) ") == x1 * x1 - one);
}

TEST_CASE("the generator letter z parses over extension fields") {
    const FqField F = fq_field(2, 3);
    const auto g = F.gen();
    const Monomial x1{std::vector<int>{1}};
    const auto f = parse_poly<Fq>(F, 1, "(z^2 + z)*x1");
    CHECK(f.coeff(x1) == g * g + g);

    // z is embedded through the fraction field as well.
    const RatFuncField<Fq> RF{F};
    const auto h = parse_poly<RatFunc<Fq>>(RF, 1, "z*c*x1");
    CHECK(h.coeff(x1) == RF.embed(g) * RF.c());
}

TEST_CASE("malformed input is rejected with ParseError") {
    const FpField F = fp_field(5);
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, ""), ParseError);
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "x1 +"), ParseError);
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "x0"), ParseError);      // variables are 1-based
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "x3"), ParseError);      // out of range
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "x1^"), ParseError);
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "x1^99999"), ParseError); // exponent cap
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "(x1"), ParseError);
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "x1 x2"), ParseError);   // missing operator
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "y1"), ParseError);
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "c*x1"), ParseError);    // no c over plain F_p
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "z*x1"), ParseError);    // no z over F_p
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "x1/x2"), ParseError);   // divisor must be scalar
    CHECK_THROWS_AS(parse_poly<Fp>(F, 2, "x1/0"), DivisionByZero);
}

TEST_CASE("tensor markers are validated against the lowest-weight dimension") {
    const FqField F = fq_field(2, 3);
    CHECK_THROWS_AS(parse_verma<Fq>(F, 2, 2, "x1 (*) e3"), ParseError); // e3 out of range
    CHECK_THROWS_AS(parse_verma<Fq>(F, 2, 2, "x1 (*) e0"), ParseError);
    CHECK_THROWS_AS(parse_verma<Fq>(F, 2, 2, "x1 (*)"), ParseError);
    CHECK_THROWS_AS(parse_poly<Fq>(F, 2, "x1 (*) e1"), ParseError); // no tensors in plain polys

    // Components may appear in any order and repeat; sums accumulate.
    const auto v = parse_verma<Fq>(F, 2, 2, "x1 (*) e2 + x2 (*) e1 + x1 (*) e2");
    CHECK(v[0] == parse_poly<Fq>(F, 2, "x2"));
    CHECK(v[1].is_zero()); // x1 + x1 = 0 in characteristic 2
}
