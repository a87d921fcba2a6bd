// Walkthrough: building a singular polynomial for S_n (p dividing n) as a
// power series in the deformation parameter.  Starting from a p-th power
// seed F_0, each step solves the gradient system d F_m / d x_k = B_k F_{m-1}
// by exact antidifferentiation; when the chain flattens, the truncated
// series (possibly plus a p-th power correction) is singular for every c.

#include <cstdio>

#include "cherednik/cherednik.hpp"

using namespace cherednik;

namespace {

void show_run(std::uint64_t p, int n, const std::vector<std::int64_t>& a) {
    const FpField F = fp_field(p);
    // The recursion only uses the reflections, never the parameter value.
    auto g = symmetric_group<Fp>(F, n, F.one());

    std::printf("p = %llu, n = %d, seed weights (", static_cast<unsigned long long>(p), n);
    for (std::size_t i = 0; i < a.size(); ++i)
        std::printf("%s%lld", i ? ", " : "", static_cast<long long>(a[i]));
    std::printf("):\n");

    const auto run = run_recursion(g, a, 8, TerminationPolicy::Heuristic);
    for (std::size_t m = 0; m < run.fs.size(); ++m)
        std::printf("  F_%zu = %s\n", m, render_poly(run.fs[m]).c_str());
    if (run.correction)
        std::printf("  correction added to the last step: %s\n",
                    render_poly(*run.correction).c_str());
    switch (run.outcome.kind) {
        case RecursionOutcome::Kind::Terminated: {
            std::printf("  terminated after %d step(s): %s\n", run.steps(),
                        run.outcome.note.c_str());
            const RatFuncField<Fp> RF{F};
            const Poly<RatFunc<Fp>> series = assemble_series(run, RF);
            auto gg = symmetric_group<RatFunc<Fp>>(RF, n, RF.c());
            auto tau = make_tau(gg, TauSpec::trivial());
            const auto ctx = make_dunkl_context(std::move(gg), std::move(tau));
            VermaVector<RatFunc<Fp>> v(RF, n, 1);
            v[0] = series;
            std::printf("  assembled series F = sum_m c^m F_m is singular over F_%llu(c): %s\n",
                        static_cast<unsigned long long>(p),
                        is_singular(ctx, v) ? "yes" : "NO");
            break;
        }
        case RecursionOutcome::Kind::Obstructed:
            std::printf("  obstructed: %s\n", run.outcome.note.c_str());
            break;
        case RecursionOutcome::Kind::Budget:
            std::printf("  stopped at the step budget: %s\n", run.outcome.note.c_str());
            break;
    }
    std::printf("\n");
}

} // namespace

int main() {
    std::printf("recursive singular polynomials, symmetric group, p | n\n\n");

    // p = 3, n = 3: flattens after two steps.
    show_run(3, 3, {1, 2, 0});

    // p = 2, n = 2: the smallest case.
    show_run(2, 2, {1, 1});

    // p = 2, n = 4: more variables, same engine.
    show_run(2, 4, {1, 1, 0, 0});

    // The p = 3 closed form matches what the recursion finds, for any n
    // divisible by 3; here n = 6, checked singular over F_3(c) directly.
    {
        const std::vector<std::int64_t> a{1, 2, 0, 1, 2, 0};
        const Poly<RatFunc<Fp>> f = closed_form_p3(6, a);
        const RatFuncField<Fp> RF{fp_field(3)};
        auto g = symmetric_group<RatFunc<Fp>>(RF, 6, RF.c());
        auto tau = make_tau(g, TauSpec::trivial());
        const auto ctx = make_dunkl_context(std::move(g), std::move(tau));
        VermaVector<RatFunc<Fp>> v(RF, 6, 1);
        v[0] = f;
        std::printf("closed form for p = 3, n = 6: %zu terms, singular over F_3(c): %s\n",
                    f.terms().size(), is_singular(ctx, v) ? "yes" : "NO");
    }
    return 0;
}
