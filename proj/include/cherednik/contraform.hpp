#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/matrix.hpp"

namespace cherednik {

// Gram matrix of the contravariant form in one degree.  Rows index the
// degree-d monomial basis x^A (x) e_i of the standard module, columns the
// dual basis y^B (x) e_j* of the opposite module; entry (r, c) is the
// pairing of the two.
template <class K>
struct GradedMatrix {
    int degree;
    GradedBasis basis; // shared shape for rows and columns
    Matrix<K> entries;
};

// Builds the Gram matrices degree by degree.  Degree 0 pairs tau with its
// dual, i.e. the identity.  For d > 0, pairing column y_k y^{B'} against
// the module means applying D_{y_k} and pairing the image in degree d-1:
//   col_{(B,j)}(M_d) = T_k^T . col_{(B',j)}(M_{d-1}),   B = B' + e_k,
// where T_k is the matrix of D_{y_k} from degree d to d-1.  k is chosen as
// the first variable occurring in B; associativity of the module action
// makes the choice immaterial (exercised by the tests).
template <class K>
class BetaLadder {
  public:
    explicit BetaLadder(const DunklContext<K>& ctx) : ctx_(&ctx), ops_(ctx) {}

    const DunklContext<K>& ctx() const { return *ctx_; }

    const GradedMatrix<K>& matrix(int d) {
        if (d < 0) throw DegreeMismatch("BetaLadder: negative degree");
        extend(d);
        return mats_[static_cast<std::size_t>(d)];
    }

    DunklOps<K>& ops() { return ops_; }

  private:
    void extend(int d) {
        const auto F = ctx_->field();
        const int n = ctx_->nvars();
        const int td = ctx_->taudim();
        if (mats_.empty()) {
            GradedBasis b0 = GradedBasis::enumerate(n, 0, td);
            mats_.push_back(GradedMatrix<K>{0, std::move(b0),
                                            Matrix<K>::identity(F, static_cast<std::size_t>(td))});
        }
        while (static_cast<int>(mats_.size()) <= d) {
            const int deg = static_cast<int>(mats_.size());
            const GradedMatrix<K>& prev = mats_.back();
            GradedBasis basis = GradedBasis::enumerate(n, deg, td);
            Matrix<K> M(F, basis.dim(), basis.dim());
            // P_k = T_k^T . M_{d-1}, computed lazily per direction k.
            std::vector<std::optional<Matrix<K>>> pk(static_cast<std::size_t>(n));
            for (std::size_t col = 0; col < basis.dim(); ++col) {
                const auto& [B, j] = basis.elems[col];
                int k = 0;
                while (B[k] == 0) ++k;
                auto& block = pk[static_cast<std::size_t>(k)];
                if (!block) {
                    const Matrix<K> tk = ops_.matrix(k, basis, prev.basis);
                    block = tk.transpose() * prev.entries;
                }
                Monomial Bp = B;
                Bp.e[static_cast<std::size_t>(k)] -= 1;
                const std::size_t pcol = prev.basis.index_of(Bp, j);
                for (std::size_t row = 0; row < basis.dim(); ++row) M(row, col) = (*block)(row, pcol);
            }
            mats_.push_back(GradedMatrix<K>{deg, std::move(basis), std::move(M)});
        }
    }

    const DunklContext<K>* ctx_;
    DunklOps<K> ops_;
    std::vector<GradedMatrix<K>> mats_;
};

template <class K>
GradedMatrix<K> beta_matrix(const DunklContext<K>& ctx, int d) {
    BetaLadder<K> ladder(ctx);
    return ladder.matrix(d);
}

// Graded dimensions of the irreducible quotient L = M/ker(beta), i.e.
// rank of the Gram matrix per degree.
struct HilbertSeries {
    std::vector<std::int64_t> coeffs;
    bool complete = false; // true iff the series provably has no further support

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto c : coeffs) s += c;
        return s;
    }

    // Coefficients without trailing zeros.
    std::vector<std::int64_t> support() const {
        std::vector<std::int64_t> s = coeffs;
        while (!s.empty() && s.back() == 0) s.pop_back();
        return s;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) os << ", ";
            os << coeffs[i];
        }
        os << ']';
        if (complete) os << " (complete)";
        return os.str();
    }
};

// The quotient is generated in degree 0, so one zero rank already forces
// all later ranks to vanish; we still compute two consecutive zeros before
// declaring the series complete, as a built-in consistency check.
template <class K>
HilbertSeries hilbert_L(BetaLadder<K>& ladder, int max_degree) {
    if (max_degree < 0) throw InvalidInput("hilbert_L: max_degree must be >= 0");
    HilbertSeries h;
    int zeros = 0;
    for (int d = 0; d <= max_degree; ++d) {
        const auto& gm = ladder.matrix(d);
        const std::int64_t r =
            gm.entries.is_zero() ? 0 : static_cast<std::int64_t>(rank_of(gm.entries));
        h.coeffs.push_back(r);
        zeros = (r == 0) ? zeros + 1 : 0;
        if (zeros >= 2) {
            h.complete = true;
            break;
        }
    }
    return h;
}

template <class K>
HilbertSeries hilbert_L(const DunklContext<K>& ctx, int max_degree) {
    BetaLadder<K> ladder(ctx);
    return hilbert_L(ladder, max_degree);
}

// Basis of the singular vectors in degree d: the joint kernel of all n
// Dunkl operators, computed from the vertically stacked matrices.
template <class K>
std::vector<VermaVector<K>> singular_space(const DunklContext<K>& ctx, int d) {
    if (d < 1) throw InvalidInput("singular_space: degree must be >= 1");
    const auto F = ctx.field();
    const int n = ctx.nvars();
    DunklOps<K> ops(ctx);
    const GradedBasis from = GradedBasis::enumerate(n, d, ctx.taudim());
    const GradedBasis to = GradedBasis::enumerate(n, d - 1, ctx.taudim());
    std::vector<Matrix<K>> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) blocks.push_back(ops.matrix(k, from, to));
    const Matrix<K> stacked = Matrix<K>::vstack(blocks);
    const RankKernel<K> rk = rank_kernel(stacked);
    std::vector<VermaVector<K>> result;
    result.reserve(rk.kernel.size());
    for (const auto& vec : rk.kernel) result.push_back(from_coords(F, from, vec));
    return result;
}

// Membership in the kernel of the contravariant form: v lies in ker(beta)
// iff its coordinate row annihilates the degree-d Gram matrix.
template <class K>
bool in_radical(BetaLadder<K>& ladder, const VermaVector<K>& v) {
    if (v.is_zero()) return true;
    if (!v.is_homogeneous()) throw InvalidInput("in_radical: vector must be homogeneous");
    const auto& gm = ladder.matrix(v.degree());
    const std::vector<K> row = coords(v, gm.basis);
    for (const K& x : gm.entries.apply_left(row))
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
bool in_radical(const DunklContext<K>& ctx, const VermaVector<K>& v) {
    BetaLadder<K> ladder(ctx);
    return in_radical(ladder, v);
}

// Degrees of a minimal generating set of ker(beta), with multiplicity:
// gens_d = dim J_d - dim sum_i x_i J_{d-1}.  Once two consecutive degrees
// of L vanish, J is everything in both and x.J fills each later degree, so
// scanning to (support end + 2) is exhaustive.
struct GeneratorDegrees {
    std::map<int, int> counts;
    HilbertSeries hilbert;
    bool complete = false;

    std::vector<int> degrees() const {
        std::vector<int> out;
        for (const auto& [d, c] : counts)
            for (int i = 0; i < c; ++i) out.push_back(d);
        return out;
    }
};

template <class K>
GeneratorDegrees min_generator_degrees(const DunklContext<K>& ctx, int max_degree) {
    const auto F = ctx.field();
    const int n = ctx.nvars();
    BetaLadder<K> ladder(ctx);
    GeneratorDegrees out;
    out.hilbert = hilbert_L(ladder, max_degree);
    const std::vector<std::int64_t> supp = out.hilbert.support();
    const int support_end = static_cast<int>(supp.size()) - 1;
    const int scan_to =
        out.hilbert.complete ? std::min(max_degree, support_end + 2) : max_degree;
    out.complete = out.hilbert.complete && scan_to == support_end + 2;

    // J_d bases as coordinate vectors, kept degree by degree.
    std::vector<std::vector<K>> prev_kernel; // degree d-1
    for (int d = 1; d <= scan_to; ++d) {
        const auto& gm = ladder.matrix(d);
        const RankKernel<K> rk = rank_kernel(gm.entries.transpose());
        const std::size_t jdim = rk.kernel.size();
        std::size_t xdim = 0;
        if (!prev_kernel.empty()) {
            // Images x_i . J_{d-1} in coordinates of degree d.
            const auto& prev_basis = ladder.matrix(d - 1).basis;
            Matrix<K> img(F, static_cast<std::size_t>(n) * prev_kernel.size(), gm.basis.dim());
            std::size_t row = 0;
            for (const auto& kv : prev_kernel) {
                const VermaVector<K> w = from_coords(F, prev_basis, kv);
                for (int i = 0; i < n; ++i, ++row) {
                    const VermaVector<K> xi_w = Poly<K>::variable(F, n, i) * w;
                    const std::vector<K> cr = coords(xi_w, gm.basis);
                    for (std::size_t c = 0; c < cr.size(); ++c)
                        if (!cr[c].is_zero()) img(row, c) = cr[c];
                }
            }
            xdim = rank_of(img);
        }
        const int gens = static_cast<int>(jdim - xdim);
        if (gens > 0) out.counts[d] = gens;
        prev_kernel = std::move(rk.kernel);
    }
    return out;
}

// Integer power series bookkeeping for complete-intersection detection.
namespace detail {

inline std::vector<std::int64_t> ipoly_mul(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

} // namespace detail

// If h(t) = scalar . prod_i (1 - t^{d_i}) / (1 - t)^{nvars} for positive
// integers d_i (exactly nvars of them), returns the sorted d_i; otherwise
// nullopt.  Complete series only.
struct CiShape {
    std::int64_t scalar;
    std::vector<int> degrees;
};

// ---------------------------------------------------------------------
// Singular triple for the rank-3 symmetric group at special parameters.
//
// For 0 < c < p/2 or 2p/3 < c < p (c integral mod p) set u = 3c + p when
// 3c < p, else u = 3c - p, and let G be the t^{u+1} coefficient of
// prod_i (1 - t x_i)^{u/3}, a rational-coefficient polynomial whose terms
//   binom(u/3, i) binom(u/3, j) binom(u/3, k),  i + j + k = u + 1,
// are computed exactly as p-adic (valuation, unit) pairs; u is never
// divisible by 3, so the numerator factors u - 3t are all nonzero.  After
// clearing the common p-power content, dG/dx_1, dG/dx_2 reduce mod p to
// two singular polynomials of degree u; x_1^p + x_2^p + x_3^p completes
// the triple.  The window p/2 < c < 2p/3 is genuinely outside this
// construction (its degree-(2c - p) alternant is handled elsewhere).
// ---------------------------------------------------------------------

struct TaylorTriple {
    Poly<Fp> g1, g2, g3; // dG/dx_1, dG/dx_2, power sum
    int case_id;         // 1: 3c < p, 2: p < 3c < 3p/2, 3: 3c > 2p
};

namespace detail {

// unit * p^val with unit in [1, p).
struct PadicUnit {
    std::int64_t val;
    std::uint64_t unit;
};

inline PadicUnit padic_of(std::int64_t z, std::uint64_t p) {
    if (z == 0) throw InvalidInput("padic_of: zero has no finite valuation");
    bool neg = z < 0;
    std::uint64_t a = static_cast<std::uint64_t>(neg ? -z : z);
    std::int64_t v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    std::uint64_t u = a % p;
    if (neg) u = p - u;
    return {v, u};
}

inline PadicUnit padic_mul(const PadicUnit& a, const PadicUnit& b, std::uint64_t p) {
    return {a.val + b.val, (a.unit * b.unit) % p};
}

inline PadicUnit padic_div(const PadicUnit& a, const PadicUnit& b, std::uint64_t p) {
    const Fp inv = Fp(b.unit, p).inv();
    return {a.val - b.val, (a.unit * inv.value()) % p};
}

} // namespace detail

inline TaylorTriple taylor_construction_G(std::uint64_t p, std::int64_t c) {
    if (p < 5) throw InvalidInput("taylor_construction_G: p must be >= 5");
    c %= static_cast<std::int64_t>(p);
    if (c < 0) c += static_cast<std::int64_t>(p);
    const std::int64_t pi = static_cast<std::int64_t>(p);
    int case_id;
    if (c > 0 && 3 * c < pi)
        case_id = 1;
    else if (3 * c > pi && 2 * c < pi)
        case_id = 2;
    else if (3 * c > 2 * pi && c < pi)
        case_id = 3;
    else
        throw InvalidInput("taylor_construction_G: c outside the covered windows");
    const std::int64_t u = (case_id == 1) ? 3 * c + pi : 3 * c - pi;
    const std::int64_t N = u + 1; // total degree of the Taylor coefficient

    // binom(u/3, i) for 0 <= i <= N, p-adically.
    std::vector<detail::PadicUnit> binom(static_cast<std::size_t>(N) + 1);
    binom[0] = {0, 1};
    const detail::PadicUnit three = detail::padic_of(3, p);
    for (std::int64_t i = 1; i <= N; ++i) {
        // binom(u/3, i) = binom(u/3, i-1) . (u - 3(i-1)) / (3 i)
        detail::PadicUnit t = detail::padic_mul(binom[static_cast<std::size_t>(i - 1)],
                                                detail::padic_of(u - 3 * (i - 1), p), p);
        t = detail::padic_div(t, detail::padic_mul(three, detail::padic_of(i, p), p), p);
        binom[static_cast<std::size_t>(i)] = t;
    }

    const FpField F = fp_field(p);
    // Terms of dG/dx_m, exponents (i, j, k) with i + j + k = N - 1 after
    // differentiating in x_m; weight i_m . binom_i binom_j binom_k.
    struct Term {
        Monomial m;
        detail::PadicUnit w;
    };
    auto derivative_terms = [&](int var) {
        std::vector<Term> out;
        for (std::int64_t i = 0; i <= N; ++i)
            for (std::int64_t j = 0; i + j <= N; ++j) {
                const std::int64_t k = N - i - j;
                std::int64_t e[3] = {i, j, k};
                if (e[var] == 0) continue;
                detail::PadicUnit w = detail::padic_mul(
                    detail::padic_mul(binom[static_cast<std::size_t>(i)],
                                      binom[static_cast<std::size_t>(j)], p),
                    binom[static_cast<std::size_t>(k)], p);
                w = detail::padic_mul(w, detail::padic_of(e[var], p), p);
                e[var] -= 1;
                out.push_back(Term{Monomial{{static_cast<int>(e[0]), static_cast<int>(e[1]),
                                             static_cast<int>(e[2])}},
                                   w});
            }
        return out;
    };
    auto reduce = [&](const std::vector<Term>& terms) {
        std::int64_t vmin = terms.front().w.val;
        for (const auto& t : terms) vmin = std::min(vmin, t.w.val);
        Poly<Fp> g(F, 3);
        for (const auto& t : terms)
            if (t.w.val == vmin) g.add_term(t.m, Fp(t.w.unit, p));
        return g;
    };
    const Poly<Fp> g1 = reduce(derivative_terms(0));
    const Poly<Fp> g2 = reduce(derivative_terms(1));
    Poly<Fp> g3(F, 3);
    for (int v = 0; v < 3; ++v) {
        std::vector<int> e(3, 0);
        e[static_cast<std::size_t>(v)] = static_cast<int>(p);
        g3.add_term(Monomial{e}, F.one());
    }
    return TaylorTriple{g1, g2, g3, case_id};
}

inline std::optional<CiShape> ci_match(const HilbertSeries& h, int nvars) {
    if (!h.complete) return std::nullopt;
    std::vector<std::int64_t> num = h.support();
    if (num.empty() || num[0] <= 0) return std::nullopt;
    // num(t) = h(t) . (1 - t)^n
    for (int i = 0; i < nvars; ++i) num = detail::ipoly_mul(num, {1, -1});
    const std::int64_t scalar = num[0];
    for (auto& c : num) {
        if (c % scalar != 0) return std::nullopt;
        c /= scalar;
    }
    std::vector<int> degs;
    // Greedily strip factors (1 - t^d); the lowest nonconstant term of the
    // remaining product pins d (with multiplicity when the coefficient is
    // below -1).
    while (num.size() > 1) {
        std::size_t d = 1;
        while (d < num.size() && num[d] == 0) ++d;
        if (d >= num.size() || num[d] >= 0) return std::nullopt;
        // Divide by (1 - t^d): quotient q satisfies num = q - t^d q.
        std::vector<std::int64_t> q(num.size() - d, 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            std::int64_t v = num[i];
            if (i >= d) v += q[i - d];
            q[i] = v;
        }
        // Verify the tail of the division is exact.
        for (std::size_t i = q.size(); i < num.size(); ++i) {
            std::int64_t v = num[i] + (i >= d ? q[i - d] : 0);
            if (v != 0) return std::nullopt;
        }
        num = std::move(q);
        while (!num.empty() && num.back() == 0) num.pop_back();
        if (num.empty()) return std::nullopt;
        degs.push_back(static_cast<int>(d));
        if (degs.size() > static_cast<std::size_t>(nvars)) return std::nullopt;
    }
    if (num != std::vector<std::int64_t>{1}) return std::nullopt;
    if (degs.size() != static_cast<std::size_t>(nvars)) return std::nullopt;
    std::sort(degs.begin(), degs.end());
    return CiShape{scalar, std::move(degs)};
}

} // namespace cherednik
