// Acceptance gate: nine go/no-go checks covering the library end to end,
// each recomputed here from first principles against frozen expectations.
// Prints one PASS/FAIL line per criterion; exit status is the number of
// failures.  Evidence-style criteria (5 and 8) pass when their comparison
// tables are produced in full; the tables themselves are printed.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/cherednik.hpp"

using namespace cherednik;
using RFp = RatFunc<Fp>;
using RFq = RatFunc<Fq>;

namespace {

int failures = 0;
std::vector<std::string> pending;

void detail(std::string s) { pending.push_back(std::move(s)); }

void report(int idx, const std::string& title, bool ok) {
    std::printf("[%d/9] %s  %s\n", idx, ok ? "PASS" : "FAIL", title.c_str());
    for (const auto& d : pending) std::printf("        %s\n", d.c_str());
    pending.clear();
    if (!ok) ++failures;
    std::fflush(stdout);
}

template <class Fn>
bool guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        detail(std::string("exception: ") + e.what());
        return false;
    }
}

DunklContext<Fp> sn_at(std::uint64_t p, int n, std::int64_t c) {
    const FpField F = fp_field(p);
    auto g = symmetric_group<Fp>(F, n, F.from_int(c));
    auto tau = make_tau(g, TauSpec::trivial());
    return make_dunkl_context(std::move(g), std::move(tau));
}

DunklContext<RFp> sn_gen(std::uint64_t p, int n) {
    const RatFuncField<Fp> F{fp_field(p)};
    auto g = symmetric_group<RFp>(F, n, F.c());
    auto tau = make_tau(g, TauSpec::trivial());
    return make_dunkl_context(std::move(g), std::move(tau));
}

DunklContext<RFq> dm_gen(std::uint64_t p, int m, TauSpec spec) {
    const RootOfUnity root = primitive_mth_root(p, static_cast<std::uint64_t>(m));
    const RatFuncField<Fq> F{root.zeta.field()};
    std::vector<RFq> cs(m % 2 == 0 ? 2u : 1u, F.c());
    auto g = dihedral_group<RFq>(F, m, F.embed(root.zeta), std::move(cs));
    auto tau = make_tau(g, spec);
    return make_dunkl_context(std::move(g), std::move(tau));
}

template <class K>
VermaVector<K> wrap(const Poly<K>& f) {
    VermaVector<K> v(f.field(), f.nvars(), 1);
    v[0] = f;
    return v;
}

std::vector<std::int64_t> conv(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::string ints(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// 1. Undeformed series: at c = 0 the quotient is the coinvariant-style
// truncation K[x]/(x_i^p), so the series is ((1-t^p)/(1-t))^n.
bool criterion1() {
    bool ok = true;
    const std::vector<std::pair<int, std::uint64_t>> cases{{2, 2}, {2, 3}, {3, 3}, {3, 5}};
    for (const auto& [n, p] : cases) {
        const auto ctx = sn_at(p, n, 0);
        const HilbertSeries h = hilbert_L(ctx, n * (static_cast<int>(p) - 1) + 4);
        std::vector<std::int64_t> expect{1};
        for (int i = 0; i < n; ++i)
            expect = conv(expect, std::vector<std::int64_t>(static_cast<std::size_t>(p), 1));
        const bool good = h.complete && h.support() == expect;
        detail("S" + std::to_string(n) + ", p=" + std::to_string(p) + ", c=0: " + h.to_string() +
               (good ? "" : "  <- MISMATCH"));
        ok = ok && good;
    }
    return ok;
}

// 2. c = 1/n: the differences x_1 - x_j become singular, the quotient
// collapses to one variable's worth of p ones.
bool criterion2() {
    bool ok = true;
    const std::vector<std::pair<int, std::uint64_t>> cases{{2, 5}, {3, 5}, {3, 7}};
    for (const auto& [n, p] : cases) {
        const FpField F = fp_field(p);
        auto g = symmetric_group<Fp>(F, n, F.one() / F.from_int(n));
        auto tau = make_tau(g, TauSpec::trivial());
        const auto ctx = make_dunkl_context(std::move(g), std::move(tau));
        const HilbertSeries h = hilbert_L(ctx, static_cast<int>(p) + 3);
        const bool series_ok =
            h.complete && h.support() == std::vector<std::int64_t>(static_cast<std::size_t>(p), 1);
        const std::size_t sdim = singular_space(ctx, 1).size();
        const bool sing_ok = sdim == static_cast<std::size_t>(n - 1);
        detail("S" + std::to_string(n) + ", p=" + std::to_string(p) + ", c=1/n: " + h.to_string() +
               ", dim singular(1) = " + std::to_string(sdim) +
               (series_ok && sing_ok ? "" : "  <- MISMATCH"));
        ok = ok && series_ok && sing_ok;
    }
    return ok;
}

// 3. Integral c for S_3: the Taylor-coefficient triple is nonzero, has the
// predicted degrees, is singular, and generates the kernel minimally.
bool criterion3() {
    bool ok = true;
    struct Case {
        std::uint64_t p;
        std::int64_t c;
        int case_id;
        std::vector<int> degs; // sorted multiset: two derivative degrees + p
        int maxd;
    };
    for (const Case& C : {Case{5, 1, 1, {5, 8, 8}, 24}, Case{7, 3, 2, {2, 2, 7}, 14}}) {
        const TaylorTriple T = taylor_construction_G(C.p, C.c);
        const auto ctx = sn_at(C.p, 3, C.c);
        const int u = C.degs[C.degs.size() - 1] == static_cast<int>(C.p)
                          ? C.degs[0]  // derivative degree is the smaller entry
                          : C.degs[2]; // or the larger one
        bool good = T.case_id == C.case_id;
        good = good && !T.g1.is_zero() && !T.g2.is_zero() && !T.g3.is_zero();
        good = good && T.g1.degree() == u && T.g2.degree() == u &&
               T.g3.degree() == static_cast<int>(C.p);
        good = good && is_singular(ctx, wrap(T.g1)) && is_singular(ctx, wrap(T.g2)) &&
               is_singular(ctx, wrap(T.g3));
        const GeneratorDegrees md = min_generator_degrees(ctx, C.maxd);
        const bool gens_ok = md.complete && md.degrees() == C.degs;
        detail("p=" + std::to_string(C.p) + ", c=" + std::to_string(C.c) + ": triple degrees {" +
               std::to_string(T.g1.degree()) + "," + std::to_string(T.g2.degree()) + "," +
               std::to_string(T.g3.degree()) + "}, minimal generators " + ints(md.degrees()) +
               ", expected " + ints(C.degs) + (good && gens_ok ? "" : "  <- MISMATCH"));
        ok = ok && good && gens_ok;
    }
    return ok;
}

// 4. Dihedral singular vectors in characteristic 2, generic parameter.
bool criterion4() {
    bool ok = true;
    const std::uint64_t p = 2;
    // Trivial weight, m = 5 and m = 7: both p-th powers are singular.
    for (int m : {5, 7}) {
        auto ctx = dm_gen(p, m, TauSpec::trivial());
        const auto F = ctx.field();
        const Poly<RFq> v1 =
            Poly<RFq>::term(F, Monomial{std::vector<int>{static_cast<int>(p), static_cast<int>(p)}},
                            F.one());
        const Poly<RFq> v2 = Poly<RFq>::variable(F, 2, 0, m * static_cast<int>(p)) +
                             Poly<RFq>::variable(F, 2, 1, m * static_cast<int>(p));
        const bool good = is_singular(ctx, wrap(v1)) && is_singular(ctx, wrap(v2));
        detail("D" + std::to_string(m) + ", trivial: (x1 x2)^2 and (x1^" + std::to_string(m) +
               " + x2^" + std::to_string(m) + ")^2 singular: " + (good ? "yes" : "NO"));
        ok = ok && good;
    }
    // Two-dimensional weight with index above p (m = 7, a = 3): all four
    // degree-p tensors are singular.
    {
        auto ctx = dm_gen(p, 7, TauSpec::rho(3));
        const auto F = ctx.field();
        bool good = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                VermaVector<RFq> v(F, 2, 2);
                v[j] = Poly<RFq>::variable(F, 2, i, static_cast<int>(p));
                good = good && is_singular(ctx, v);
            }
        detail("D7, rho_3: all four degree-2 tensors singular: " + std::string(good ? "yes" : "NO"));
        ok = ok && good;
    }
    // Weight index equal to p (m = 7, a = 2): the matched tensors are
    // singular and the crossed sixth-power tensors land in the kernel.
    {
        auto ctx = dm_gen(p, 7, TauSpec::rho(static_cast<int>(p)));
        const auto F = ctx.field();
        VermaVector<RFq> s1(F, 2, 2), s2(F, 2, 2), h1(F, 2, 2), h2(F, 2, 2);
        s1[0] = Poly<RFq>::variable(F, 2, 0, static_cast<int>(p));
        s2[1] = Poly<RFq>::variable(F, 2, 1, static_cast<int>(p));
        h1[1] = Poly<RFq>::variable(F, 2, 0, 3 * static_cast<int>(p));
        h2[0] = Poly<RFq>::variable(F, 2, 1, 3 * static_cast<int>(p));
        BetaLadder<RFq> ladder(ctx);
        const bool good = is_singular(ctx, s1) && is_singular(ctx, s2) &&
                          in_radical(ladder, h1) && in_radical(ladder, h2);
        detail("D7, rho_2: x1^2(x)e1, x2^2(x)e2 singular; x1^6(x)e2, x2^6(x)e1 in the kernel: " +
               std::string(good ? "yes" : "NO"));
        ok = ok && good;
    }
    return ok;
}

// 5. Conjectural dihedral series (evidence): the R4.5 suite must produce
// its full coefficientwise comparison through degree 3p.
bool criterion5() {
    const ResultRecord rec = verify("R4.5");
    for (const auto& ch : rec.checks) detail(ch.name + ": " + ch.detail);
    return !rec.checks.empty() && rec.overall() != "FAIL";
}

// 6. S_n at p = 2, generic c: exactly n-1 singular quadratics (one fewer
// than the variable count), x1^4 in the kernel, series (1+t)^n (1+t^2).
bool criterion6() {
    bool ok = true;
    for (int n : {2, 4}) {
        const auto ctx = sn_gen(2, n);
        const auto F = ctx.field();
        const std::size_t sdim = singular_space(ctx, 2).size();
        const bool dim_ok = sdim == static_cast<std::size_t>(n - 1); // n - 1, and in particular not n
        BetaLadder<RFp> ladder(ctx);
        const bool x4_ok = in_radical(ladder, wrap(Poly<RFp>::variable(F, n, 0, 4)));
        const HilbertSeries h = hilbert_L(ladder, n + 5);
        std::vector<std::int64_t> expect{1};
        for (int i = 0; i < n; ++i) expect = conv(expect, {1, 1});
        expect = conv(expect, {1, 0, 1});
        const bool series_ok = h.complete && h.support() == expect;
        detail("S" + std::to_string(n) + ", p=2, generic c: dim singular(2) = " +
               std::to_string(sdim) + ", x1^4 in kernel: " + (x4_ok ? "yes" : "NO") +
               ", series " + h.to_string() +
               (dim_ok && x4_ok && series_ok ? "" : "  <- MISMATCH"));
        ok = ok && dim_ok && x4_ok && series_ok;
    }
    return ok;
}

// 7. Recursive construction for p | n.
bool criterion7() {
    bool ok = true;
    // (a) no singular vectors below degree p at generic c.
    for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, int>>{{3, 3}, {5, 5}}) {
        const auto ctx = sn_gen(p, n);
        bool empty_below = true;
        for (int d = 1; d < static_cast<int>(p); ++d)
            empty_below = empty_below && singular_space(ctx, d).empty();
        detail("S" + std::to_string(n) + ", p=" + std::to_string(n) +
               ", generic c: no singular vectors below degree p: " +
               (empty_below ? "yes" : "NO"));
        ok = ok && empty_below;
    }
    // (b) the first two closed-form steps satisfy the step equations,
    // d F_m / d x_k = B_k F_{m-1}, for three random weight vectors.
    {
        std::mt19937_64 rng(20260816u);
        const FpField F = fp_field(5);
        auto g = symmetric_group<Fp>(F, 5, F.one());
        bool steps_ok = true;
        for (int t = 0; t < 3; ++t) {
            std::vector<std::int64_t> a(5, 0);
            std::int64_t sum = 0;
            for (int i = 0; i < 4; ++i) {
                a[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rng() % 5);
                sum += a[static_cast<std::size_t>(i)];
            }
            a[4] = (10 - sum % 5) % 5;
            const Poly<Fp> f0 = make_f0<Fp>(F, 5, a);
            const Poly<Fp> f1 = closed_form_F1<Fp>(F, 5, a);
            const Poly<Fp> f2 = closed_form_F2<Fp>(F, 5, a);
            for (int k = 0; k < 5; ++k) {
                steps_ok = steps_ok && f1.partial(k) == apply_B(g, k, f0);
                steps_ok = steps_ok && f2.partial(k) == apply_B(g, k, f1);
            }
        }
        detail("S5, p=5: closed-form steps F1, F2 satisfy the step equations "
               "on 3 random weight vectors: " +
               std::string(steps_ok ? "yes" : "NO"));
        ok = ok && steps_ok;
    }
    // (c) the p = 3 closed form is singular over F_3(c), n = 3 and n = 6.
    for (int n : {3, 6}) {
        std::vector<std::int64_t> a;
        for (int i = 0; i < n; ++i) a.push_back((i % 3 == 0) ? 1 : (i % 3 == 1) ? 2 : 0);
        const Poly<RFp> f = closed_form_p3(n, a);
        const auto ctx = sn_gen(3, n);
        const bool good = is_singular(ctx, wrap(f));
        detail("p=3, n=" + std::to_string(n) + ": closed form singular over F_3(c): " +
               (good ? "yes" : "NO"));
        ok = ok && good;
    }
    // (d) the recursion itself terminates after two steps for p = 3, n = 3.
    {
        const FpField F = fp_field(3);
        auto g = symmetric_group<Fp>(F, 3, F.one());
        const auto run = run_recursion(g, {1, 2, 0}, 6, TerminationPolicy::Heuristic);
        const bool good =
            run.outcome.kind == RecursionOutcome::Kind::Terminated && run.steps() == 2;
        detail("p=3, n=3: recursion terminates at step 2: " + std::string(good ? "yes" : "NO") +
               " (" + run.outcome.note + ")");
        ok = ok && good;
    }
    return ok;
}

// 8. Consecutive integral parameters (evidence): full generator-degree
// table for p = 5 and p = 7, with the growth-by-6 comparison wherever no
// rational wall separates c from c+1.
bool criterion8() {
    const ResultRecord rec = verify("C3.6");
    for (auto it = rec.outputs.begin(); it != rec.outputs.end(); ++it) {
        for (const auto& row : it.value()["pairs"]) {
            std::string line = it.key() + ", c=" + row["c"].dump() + ": degrees " +
                               row["degrees"].dump() + " (sum " + row["sum"].dump() +
                               "), delta to c+1 = " + row["delta"].dump() + ", separated: " +
                               (row["separated_b_lt_p"].get<bool>() ? "yes" : "no");
            detail(line);
        }
    }
    for (const auto& ch : rec.checks) detail(ch.name + ": " + ch.detail);
    return !rec.checks.empty() && rec.overall() != "FAIL";
}

// 9. Randomized property suites, each at 50+ exact instances.
bool criterion9() {
    bool ok = true;

    {
        std::mt19937_64 rng(9001u);
        int count = 0;
        bool good = true;
        auto drill = [&](const auto& F, auto&& rand_elem) {
            for (int t = 0; t < 17; ++t, ++count) {
                const auto a = rand_elem(), b = rand_elem(), c = rand_elem();
                good = good && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                       a * (b + c) == a * b + a * c && a + (-a) == F.zero();
                if (!a.is_zero()) good = good && a * (F.one() / a) == F.one();
            }
        };
        const FpField F7 = fp_field(7);
        drill(F7, [&] { return F7.from_int(static_cast<std::int64_t>(rng() % 7)); });
        const FqField F9 = fq_field(3, 2);
        drill(F9, [&] {
            return F9.gen() * F9.from_int(static_cast<std::int64_t>(rng() % 3)) +
                   F9.from_int(static_cast<std::int64_t>(rng() % 3));
        });
        const RatFuncField<Fp> RF{fp_field(5)};
        drill(RF, [&] {
            const RatFunc<Fp> num =
                RF.c() * RF.from_int(static_cast<std::int64_t>(rng() % 5)) +
                RF.from_int(static_cast<std::int64_t>(rng() % 5));
            RatFunc<Fp> den = RF.c() + RF.from_int(static_cast<std::int64_t>(rng() % 5));
            return num / den;
        });
        detail("field axioms: " + std::to_string(count) + " instances: " + (good ? "ok" : "FAILED"));
        ok = ok && good && count >= 50;
    }

    std::mt19937_64 rng(9002u);
    const FpField F5 = fp_field(5);
    auto rand_vec = [&](const DunklContext<Fp>& ctx, int d) {
        VermaVector<Fp> v(ctx.field(), ctx.nvars(), ctx.taudim());
        const auto monos = monomials_of_degree(ctx.nvars(), d);
        for (int t = 0; t < 4; ++t)
            v[0].add_term(monos[rng() % monos.size()],
                          ctx.field().from_int(static_cast<std::int64_t>(rng() % 5)));
        return v;
    };

    {
        int count = 0;
        bool good = true;
        for (int t = 0; t < 50; ++t, ++count) {
            const auto ctx = sn_at(5, 3, static_cast<std::int64_t>(rng() % 5));
            DunklOps<Fp> ops(ctx);
            const auto v = rand_vec(ctx, 2 + static_cast<int>(rng() % 4));
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    good = good && ops.apply(i, ops.apply(j, v)) == ops.apply(j, ops.apply(i, v));
        }
        detail("operator commutativity: " + std::to_string(count) +
               " instances: " + (good ? "ok" : "FAILED"));
        ok = ok && good && count >= 50;
    }

    {
        int count = 0;
        bool good = true;
        const auto ctx = sn_at(7, 3, 4);
        for (int t = 0; t < 6; ++t) {
            VermaVector<Fp> v(ctx.field(), 3, 1);
            const auto monos = monomials_of_degree(3, 1 + static_cast<int>(rng() % 4));
            for (int q = 0; q < 4; ++q)
                v[0].add_term(monos[rng() % monos.size()],
                              ctx.field().from_int(static_cast<std::int64_t>(rng() % 7)));
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < 3; ++j, ++count)
                    good = good && check_algebra_relation(ctx, k, j, v);
        }
        detail("commutation relation: " + std::to_string(count) +
               " instances: " + (good ? "ok" : "FAILED"));
        ok = ok && good && count >= 50;
    }

    {
        int count = 0;
        bool good = true;
        const auto ctx = sn_at(5, 3, 2);
        BetaLadder<Fp> ladder(ctx);
        DunklOps<Fp> ops(ctx);
        auto pair_with = [&](const Matrix<Fp>& M, const std::vector<Fp>& a,
                             const std::vector<Fp>& b) {
            Fp acc = F5.zero();
            for (std::size_t r = 0; r < M.rows(); ++r)
                for (std::size_t c = 0; c < M.cols(); ++c) acc += a[r] * M(r, c) * b[c];
            return acc;
        };
        for (int t = 0; t < 50; ++t, ++count) {
            const int d = 1 + static_cast<int>(rng() % 4);
            const auto& hi = ladder.matrix(d);
            const auto& lo = ladder.matrix(d - 1);
            const auto u = rand_vec(ctx, d - 1);
            const auto v = rand_vec(ctx, d);
            const int i = static_cast<int>(rng() % 3);
            const auto xi = Poly<Fp>::variable(F5, 3, i);
            good = good && pair_with(hi.entries, coords(xi * u, hi.basis), coords(v, hi.basis)) ==
                               pair_with(lo.entries, coords(u, lo.basis),
                                         coords(ops.apply(i, v), lo.basis));
        }
        detail("form adjointness: " + std::to_string(count) +
               " instances: " + (good ? "ok" : "FAILED"));
        ok = ok && good && count >= 50;
    }

    {
        int count = 0;
        bool good = true;
        for (std::int64_t cval : {4, 2}) {
            const auto ctx = sn_at(5, 3, cval);
            BetaLadder<Fp> ladder(ctx);
            for (int d = 1; d <= 8 && count < 50; ++d) {
                const auto& gm = ladder.matrix(d);
                const auto rk = rank_kernel(gm.entries.transpose());
                if (rk.kernel.empty()) continue;
                for (int t = 0; t < 4 && count < 50; ++t, ++count) {
                    std::vector<Fp> combo(gm.basis.dim(), F5.zero());
                    for (const auto& kv : rk.kernel) {
                        Fp w = F5.from_int(static_cast<std::int64_t>(rng() % 5));
                        if (w.is_zero()) w = F5.one();
                        for (std::size_t idx = 0; idx < combo.size(); ++idx)
                            combo[idx] += w * kv[idx];
                    }
                    const auto w = from_coords(F5, gm.basis, combo);
                    const int i = static_cast<int>(rng() % 3);
                    good = good && in_radical(ladder, Poly<Fp>::variable(F5, 3, i) * w);
                }
            }
        }
        detail("kernel is an ideal: " + std::to_string(count) +
               " instances: " + (good ? "ok" : "FAILED"));
        ok = ok && good && count >= 50;
    }

    {
        // Evaluating the parameter can only drop the rank, and off the
        // finitely many minor roots it drops nothing; so every sample must
        // stay below the generic rank and per degree some sample must
        // attain it.
        int count = 0;
        bool good = true;
        const auto gctx = sn_gen(5, 3);
        BetaLadder<RFp> generic(gctx);
        std::vector<std::size_t> grank, seen(6, 0);
        for (int d = 0; d <= 5; ++d) grank.push_back(rank_of(generic.matrix(d).entries));
        const FqField F625 = fq_field(5, 4);
        auto rand_fq = [&] {
            Fq e = F625.zero();
            for (unsigned i = 0; i < F625.degree(); ++i)
                e = e * F625.gen() + F625.from_int(static_cast<std::int64_t>(rng() % 5));
            return e;
        };
        for (int t = 0; t < 50; ++t, ++count) {
            auto g = symmetric_group<Fq>(F625, 3, rand_fq());
            auto tau = make_tau(g, TauSpec::trivial());
            const auto ctx = make_dunkl_context(std::move(g), std::move(tau));
            BetaLadder<Fq> ladder(ctx);
            const int d = 1 + t % 5;
            const std::size_t r = rank_of(ladder.matrix(d).entries);
            good = good && r <= grank[static_cast<std::size_t>(d)];
            seen[static_cast<std::size_t>(d)] = std::max(seen[static_cast<std::size_t>(d)], r);
        }
        for (int d = 1; d <= 5; ++d)
            good = good && seen[static_cast<std::size_t>(d)] == grank[static_cast<std::size_t>(d)];
        detail("rank cross-validation by random evaluation: " + std::to_string(count) +
               " instances: " + (good ? "ok" : "FAILED"));
        ok = ok && good && count >= 50;
    }

    return ok;
}

} // namespace

int main() {
    std::printf("acceptance gate, library version %s\n", library_version);
    report(1, "undeformed series matches the truncated power product", guarded(criterion1));
    report(2, "collapse at c = 1/n to p ones with n-1 singular lines", guarded(criterion2));
    report(3, "integral-parameter triple: degrees, singularity, minimal generators",
           guarded(criterion3));
    report(4, "dihedral singular vectors and kernel membership at p = 2", guarded(criterion4));
    report(5, "dihedral series comparison table produced through degree 3p", guarded(criterion5));
    report(6, "p = 2 generic series, singular quadric count, and x1^4 membership",
           guarded(criterion6));
    report(7, "recursive construction: gap below p, closed forms, termination",
           guarded(criterion7));
    report(8, "generator-degree growth table across consecutive parameters", guarded(criterion8));
    report(9, "randomized property suites at 50+ exact instances each", guarded(criterion9));
    if (failures == 0)
        std::printf("all 9 criteria hold\n");
    else
        std::printf("%d criterion(s) FAILED\n", failures);
    return failures;
}
