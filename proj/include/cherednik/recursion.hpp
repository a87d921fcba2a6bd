#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/ratfunc.hpp"

namespace cherednik {

// ---------------------------------------------------------------------
// Recursive construction of singular polynomials for the symmetric group
// in its reflection representation, trivial lowest weight, p | n.
//
// Writing a candidate as a power series F = sum_m c^m F_m, the condition
// D_{y_k} F = 0 for all k separates by c-degree into
//   d F_0 / d x_k = 0         and      d F_m / d x_k = B_k F_{m-1},
// where B_k f = sum_{j != k} (f - s_{kj} f)/(x_k - x_j).  Starting from
// F_0 = sum_i a_i x_i^p the steps are solved by exact monomial
// antidifferentiation; the series is singular once it truncates, i.e.
// once B_k F_M = 0 for every k (possibly after adding a p-th power
// correction, which never disturbs the step equations).
// ---------------------------------------------------------------------

template <class K>
Poly<K> make_f0(const typename K::Field& F, int n, const std::vector<std::int64_t>& a) {
    if (static_cast<int>(a.size()) != n) throw ArityMismatch("make_f0: need one weight per variable");
    const std::uint64_t p = F.characteristic();
    Poly<K> f(F, n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = static_cast<int>(p);
        f.add_term(Monomial{e}, F.from_int(a[static_cast<std::size_t>(i)]));
    }
    return f;
}

// Mixed-partials test for a candidate gradient (g_1, ..., g_n).  Necessary
// for solvability of dF/dx_k = g_k; in characteristic p it is not
// sufficient, so solve_step still verifies its output.
template <class K>
bool integrability_check(const std::vector<Poly<K>>& gs) {
    for (std::size_t k = 0; k < gs.size(); ++k)
        for (std::size_t j = k + 1; j < gs.size(); ++j)
            if (gs[k].partial(static_cast<int>(j)) != gs[j].partial(static_cast<int>(k)))
                return false;
    return true;
}

enum class SolveRoute { SmallestVar, LargestVar };

// Solves dF/dx_k = g_k for all k simultaneously, normalizing the p-th
// power ambiguity to zero (every monomial whose exponents are all
// divisible by p gets coefficient 0).  Each target monomial is pinned by
// antidifferentiating the route's preferred variable; a term x^nu in g_k
// with nu_k = -1 mod p cannot be a k-derivative of anything, and any
// residual mismatch is caught by the final verification.  Throws
// NoSolution when the system is inconsistent.
template <class K>
Poly<K> solve_step(const std::vector<Poly<K>>& gs, SolveRoute route = SolveRoute::SmallestVar) {
    if (gs.empty()) throw InvalidInput("solve_step: empty system");
    const auto F = gs.front().field();
    const int n = static_cast<int>(gs.size());
    const std::uint64_t p = F.characteristic();
    for (const auto& g : gs)
        if (g.nvars() != n) throw ArityMismatch("solve_step: gradient arity mismatch");

    Poly<K> f(F, n);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[static_cast<std::size_t>(i)] = (route == SolveRoute::SmallestVar) ? i : n - 1 - i;

    for (int k : order) {
        for (const auto& [nu, g] : gs[static_cast<std::size_t>(k)].terms()) {
            const std::uint64_t e =
                static_cast<std::uint64_t>(nu[k] + 1) % p; // exponent after integration, mod p
            if (e == 0)
                throw NoSolution("solve_step: term of g_" + std::to_string(k + 1) +
                                 " with x_" + std::to_string(k + 1) +
                                 "-exponent = -1 mod p is not a derivative");
            const Monomial mu = nu.times_var(k);
            const K want = g / F.from_int(static_cast<std::int64_t>(e));
            const K have = f.coeff(mu);
            if (have.is_zero())
                f.add_term(mu, want);
            else if (!(have == want))
                throw NoSolution("solve_step: inconsistent system");
        }
    }
    for (int k = 0; k < n; ++k)
        if (f.partial(k) != gs[static_cast<std::size_t>(k)])
            throw NoSolution("solve_step: residual mismatch in direction " + std::to_string(k + 1));
    return f;
}

enum class TerminationPolicy { Never, Heuristic };

struct RecursionOutcome {
    enum class Kind { Terminated, Obstructed, Budget };
    Kind kind;
    std::string note;
};

template <class K>
struct RecursionRun {
    RecursionOutcome outcome;
    std::vector<Poly<K>> fs;        // F_0 .. F_M as computed
    std::optional<Poly<K>> correction; // p-th power adjustment added to F_M on termination
    int steps() const { return static_cast<int>(fs.size()) - 1; }
};

namespace detail {

// Least-squares-free exact solve for a correction P = sum b_i x_i^p with
// B_k(F + P) = 0 for all k; returns nullopt when none exists.
template <class K>
std::optional<Poly<K>> pth_power_correction(const ReflectionGroupData<K>& g, const Poly<K>& f) {
    const auto F = g.field;
    const int n = g.rank;
    const std::uint64_t p = F.characteristic();
    std::vector<Poly<K>> residual; // B_k f
    std::vector<std::vector<Poly<K>>> basis_images; // B_k x_i^p
    residual.reserve(static_cast<std::size_t>(n));
    basis_images.resize(static_cast<std::size_t>(n));
    std::vector<Poly<K>> xp;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = static_cast<int>(p);
        xp.push_back(Poly<K>::term(F, Monomial{e}, F.one()));
    }
    for (int k = 0; k < n; ++k) {
        residual.push_back(apply_B(g, k, f));
        for (int i = 0; i < n; ++i)
            basis_images[static_cast<std::size_t>(k)].push_back(apply_B(g, k, xp[static_cast<std::size_t>(i)]));
    }
    // Collect every monomial appearing anywhere, then solve the dense
    // linear system sum_i b_i B_k(x_i^p) = -B_k(f) over all k at once.
    std::map<std::pair<int, std::vector<int>>, std::size_t> rows;
    for (int k = 0; k < n; ++k) {
        for (const auto& [m, c] : residual[static_cast<std::size_t>(k)].terms())
            rows.emplace(std::make_pair(k, m.e), rows.size());
        for (int i = 0; i < n; ++i)
            for (const auto& [m, c] : basis_images[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].terms())
                rows.emplace(std::make_pair(k, m.e), rows.size());
    }
    if (rows.empty()) return Poly<K>(F, n); // already zero, P = 0
    Matrix<K> A(F, rows.size(), static_cast<std::size_t>(n) + 1);
    for (const auto& [key, r] : rows) {
        const auto& [k, e] = key;
        const Monomial m{e};
        for (int i = 0; i < n; ++i)
            A(r, static_cast<std::size_t>(i)) =
                basis_images[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].coeff(m);
        A(r, static_cast<std::size_t>(n)) = residual[static_cast<std::size_t>(k)].coeff(m);
    }
    // Solutions of A' b = -rhs correspond to kernel vectors of [A' | rhs]
    // with last coordinate 1 (after scaling).
    const RankKernel<K> rk = rank_kernel(A);
    for (const auto& v : rk.kernel) {
        const K last = v[static_cast<std::size_t>(n)];
        if (last.is_zero()) continue;
        Poly<K> pcorr(F, n);
        for (int i = 0; i < n; ++i) {
            const K bi = v[static_cast<std::size_t>(i)] / last;
            if (!bi.is_zero()) pcorr += xp[static_cast<std::size_t>(i)] * bi;
        }
        return pcorr;
    }
    return std::nullopt;
}

} // namespace detail

template <class K>
RecursionRun<K> run_recursion(const ReflectionGroupData<K>& g, const std::vector<std::int64_t>& a,
                              int max_steps, TerminationPolicy policy) {
    if (g.family != GroupFamily::Symmetric)
        throw InvalidInput("run_recursion: symmetric groups only");
    const auto F = g.field;
    const int n = g.rank;
    RecursionRun<K> run{RecursionOutcome{RecursionOutcome::Kind::Budget, ""}, {}, std::nullopt};
    run.fs.push_back(make_f0<K>(F, n, a));
    for (int m = 0;; ++m) {
        const Poly<K>& tail = run.fs.back();
        // Exact termination test: B_k(tail) = 0 for every k.
        bool flat = true;
        std::vector<Poly<K>> gs;
        gs.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            gs.push_back(apply_B(g, k, tail));
            if (!gs.back().is_zero()) flat = false;
        }
        if (flat) {
            run.outcome = {RecursionOutcome::Kind::Terminated,
                           "series truncates at step " + std::to_string(m)};
            return run;
        }
        // A p-th power correction added to F_m leaves every step equation
        // intact (its gradient vanishes), so one that flattens F_m ends the
        // series.  The linear part F_0 + c F_1 is left untouched so that it
        // always appears in its canonical form; from the quadratic
        // coefficient on, corrections are attempted each step.  (Eager
        // correction at step 1 can find even shorter truncations; see the
        // tests for an n = p = 3 example.)
        const auto try_correction = [&](const std::string& why) -> bool {
            if (policy != TerminationPolicy::Heuristic || m < 1) return false;
            auto corr = detail::pth_power_correction(g, tail);
            if (!corr || corr->is_zero()) return false;
            run.correction = corr;
            run.fs.back() += *corr;
            run.outcome = {RecursionOutcome::Kind::Terminated,
                           "series truncates at step " + std::to_string(m) + why};
            return true;
        };
        if (m >= 2 && try_correction(" after a p-th power correction")) return run;
        if (m >= max_steps) {
            run.outcome = {RecursionOutcome::Kind::Budget,
                           "step budget exhausted after F_" + std::to_string(m)};
            return run;
        }
        try {
            Poly<K> next = solve_step(gs);
            if (next == tail) {
                // Fixed point: the uncorrected chain repeats this
                // coefficient forever and provably never flattens.
                if (try_correction(" after a p-th power correction (chain hit a fixed point)"))
                    return run;
                run.outcome = {RecursionOutcome::Kind::Obstructed,
                               "chain reached a fixed point at F_" + std::to_string(m) +
                                   " with no flattening correction"};
                return run;
            }
            run.fs.push_back(std::move(next));
        } catch (const NoSolution& e) {
            // Rescue an obstructed chain at any positive step.
            if (try_correction(" after a p-th power correction (next step obstructed)"))
                return run;
            run.outcome = {RecursionOutcome::Kind::Obstructed, e.what()};
            return run;
        }
    }
}

// The truncated series sum_m c^m F_m as a single polynomial over the
// rational function field, ready for a direct singularity check.
template <class B>
Poly<RatFunc<B>> assemble_series(const RecursionRun<B>& run, const RatFuncField<B>& RF) {
    if (run.fs.empty()) throw InvalidInput("assemble_series: empty run");
    const int n = run.fs.front().nvars();
    Poly<RatFunc<B>> total(RF, n);
    RatFunc<B> cpow = RF.one();
    for (std::size_t m = 0; m < run.fs.size(); ++m) {
        for (const auto& [mon, coeff] : run.fs[m].terms())
            total.add_term(mon, RF.embed(coeff) * cpow);
        cpow = cpow * RF.c();
    }
    return total;
}

// ---------------------------------------------------------------------
// Closed forms for the first steps and for p = 3.
// ---------------------------------------------------------------------

// F_1 = -sum_{i<j} sum_{r+s=p, r,s>0} (r a_i + s a_j)/(r s) x_i^r x_j^s,
// valid for p odd and sum_i a_i = 0.
template <class K>
Poly<K> closed_form_F1(const typename K::Field& F, int n, const std::vector<std::int64_t>& a) {
    const std::uint64_t p = F.characteristic();
    if (p == 2) throw InvalidInput("closed_form_F1: p must be odd");
    std::int64_t asum = 0;
    for (auto ai : a) asum += ai;
    if (static_cast<int>(a.size()) != n || F.from_int(asum) != F.zero())
        throw InvalidInput("closed_form_F1: weights must sum to zero");
    Poly<K> f(F, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (std::int64_t r = 1; r < static_cast<std::int64_t>(p); ++r) {
                const std::int64_t s = static_cast<std::int64_t>(p) - r;
                const K w = (F.from_int(r) * F.from_int(a[static_cast<std::size_t>(i)]) +
                             F.from_int(s) * F.from_int(a[static_cast<std::size_t>(j)])) /
                            (F.from_int(r) * F.from_int(s));
                if (w.is_zero()) continue;
                std::vector<int> e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i)] = static_cast<int>(r);
                e[static_cast<std::size_t>(j)] = static_cast<int>(s);
                f -= Poly<K>::term(F, Monomial{e}, w);
            }
    return f;
}

// F_2 = sum_{i<j<k} sum_{r+s+t=p, >0} (r a_i + s a_j + t a_k)/(r s t) x_i^r x_j^s x_k^t
//     + sum_{i<j} sum_{r+s=p, >0} (a_i - a_j)/r . (1/s - 2 H_s) x_i^r x_j^s,
// H_s the s-th harmonic sum; same preconditions as F_1.
template <class K>
Poly<K> closed_form_F2(const typename K::Field& F, int n, const std::vector<std::int64_t>& a) {
    const std::uint64_t p = F.characteristic();
    if (p == 2) throw InvalidInput("closed_form_F2: p must be odd");
    std::int64_t asum = 0;
    for (auto ai : a) asum += ai;
    if (static_cast<int>(a.size()) != n || F.from_int(asum) != F.zero())
        throw InvalidInput("closed_form_F2: weights must sum to zero");
    const std::int64_t pi = static_cast<std::int64_t>(p);
    Poly<K> f(F, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (std::int64_t r = 1; r < pi; ++r)
                    for (std::int64_t s = 1; r + s < pi; ++s) {
                        const std::int64_t t = pi - r - s;
                        const K w = (F.from_int(r) * F.from_int(a[static_cast<std::size_t>(i)]) +
                                     F.from_int(s) * F.from_int(a[static_cast<std::size_t>(j)]) +
                                     F.from_int(t) * F.from_int(a[static_cast<std::size_t>(k)])) /
                                    (F.from_int(r) * F.from_int(s) * F.from_int(t));
                        if (w.is_zero()) continue;
                        std::vector<int> e(static_cast<std::size_t>(n), 0);
                        e[static_cast<std::size_t>(i)] = static_cast<int>(r);
                        e[static_cast<std::size_t>(j)] = static_cast<int>(s);
                        e[static_cast<std::size_t>(k)] = static_cast<int>(t);
                        f += Poly<K>::term(F, Monomial{e}, w);
                    }
    // Harmonic sums H_s = sum_{d<=s} 1/d, s <= p-1.
    std::vector<K> H(p, F.zero());
    for (std::uint64_t s = 1; s < p; ++s)
        H[s] = H[s - 1] + F.one() / F.from_int(static_cast<std::int64_t>(s));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const K diff = F.from_int(a[static_cast<std::size_t>(i)]) -
                           F.from_int(a[static_cast<std::size_t>(j)]);
            if (diff.is_zero()) continue;
            for (std::int64_t r = 1; r < pi; ++r) {
                const std::int64_t s = pi - r;
                const K w = diff / F.from_int(r) *
                            (F.one() / F.from_int(s) - F.from_int(2) * H[static_cast<std::size_t>(s)]);
                if (w.is_zero()) continue;
                std::vector<int> e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i)] = static_cast<int>(r);
                e[static_cast<std::size_t>(j)] = static_cast<int>(s);
                f += Poly<K>::term(F, Monomial{e}, w);
            }
        }
    return f;
}

// Full closed form for p = 3 (any n divisible by 3): over F_3(c),
//   F = F_0 - c . S_21 + c^2 (E_111 + S_21 - F_0),
// with F_0 = sum a_i x_i^3, S_21 = sum_{i != j} (a_i - a_j) x_i^2 x_j and
// E_111 = sum_{i<j<k} (a_i + a_j + a_k) x_i x_j x_k.
inline Poly<RatFunc<Fp>> closed_form_p3(int n, const std::vector<std::int64_t>& a) {
    const FpField F3 = fp_field(3);
    const RatFuncField<Fp> RF{F3};
    if (static_cast<int>(a.size()) != n) throw ArityMismatch("closed_form_p3: need n weights");
    const RatFunc<Fp> c = RF.c();
    auto ai = [&](int i) { return RF.embed(F3.from_int(a[static_cast<std::size_t>(i)])); };
    Poly<RatFunc<Fp>> f0(RF, n), s21(RF, n), e111(RF, n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 3;
        if (!ai(i).is_zero()) f0.add_term(Monomial{e}, ai(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const RatFunc<Fp> w = ai(i) - ai(j);
            if (w.is_zero()) continue;
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = 2;
            e[static_cast<std::size_t>(j)] = 1;
            s21 += Poly<RatFunc<Fp>>::term(RF, Monomial{e}, w);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const RatFunc<Fp> w = ai(i) + ai(j) + ai(k);
                if (w.is_zero()) continue;
                std::vector<int> e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i)] = 1;
                e[static_cast<std::size_t>(j)] = 1;
                e[static_cast<std::size_t>(k)] = 1;
                e111 += Poly<RatFunc<Fp>>::term(RF, Monomial{e}, w);
            }
    return f0 - s21 * c + (e111 + s21 - f0) * (c * c);
}

} // namespace cherednik
