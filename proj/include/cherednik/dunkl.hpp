#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/reflection.hpp"

namespace cherednik {

// Everything needed to apply Dunkl operators on Sym(h*) (x) tau: the
// group (with its class parameters) and the lowest-weight representation.
template <class K>
struct DunklContext {
    ReflectionGroupData<K> group;
    TauRep<K> tau;

    typename K::Field field() const { return group.field; }
    int nvars() const { return group.rank; }
    int taudim() const { return tau.dim; }
};

template <class K>
DunklContext<K> make_dunkl_context(ReflectionGroupData<K> group, TauRep<K> tau) {
    if (tau.mats.size() != group.reflections.size())
        throw ArityMismatch("tau representation does not match the group's reflections");
    return DunklContext<K>{std::move(group), std::move(tau)};
}

// Cache of divided differences shared across Dunkl applications.  The
// divided difference of a monomial against a reflection is independent of
// the operator direction y_k, so one cache serves all n operators.
template <class K>
class DunklOps {
  public:
    explicit DunklOps(const DunklContext<K>& ctx) : ctx_(&ctx) {}

    const DunklContext<K>& ctx() const { return *ctx_; }

    const Poly<K>& divdiff(std::size_t s_idx, const Monomial& m) {
        const auto key = std::make_pair(s_idx, m.e);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            Poly<K> f = Poly<K>::term(ctx_->field(), m, ctx_->field().one());
            it = cache_.emplace(key, divided_difference(f, ctx_->group.reflections[s_idx])).first;
        }
        return it->second;
    }

    // D_{y_k} v = sum_i d(v_i)/dx_k (x) e_i
    //           - sum_s c_s <y_k, alpha_s> ((v_i - s v_i)/alpha_s) (x) tau(s) e_i
    // (all reflections here have lambda_s = -1, which absorbs the usual
    // 2/(1 - lambda_s) factor).
    VermaVector<K> apply(int k, const VermaVector<K>& v) {
        const auto F = ctx_->field();
        const auto& g = ctx_->group;
        VermaVector<K> r(F, v.nvars(), v.taudim());
        for (int i = 0; i < v.taudim(); ++i) r[i] += v[i].partial(k);
        for (std::size_t s_idx = 0; s_idx < g.reflections.size(); ++s_idx) {
            const auto& s = g.reflections[s_idx];
            const K w = s.alpha_coeff(k);
            if (w.is_zero()) continue;
            const K cw = g.param_of(s) * w;
            if (cw.is_zero()) continue;
            const auto& t = ctx_->tau.mats[s_idx];
            for (int i = 0; i < v.taudim(); ++i) {
                if (v[i].is_zero()) continue;
                Poly<K> dd(F, v.nvars());
                for (const auto& [m, c] : v[i].terms()) dd += divdiff(s_idx, m) * c;
                if (dd.is_zero()) continue;
                for (int j = 0; j < v.taudim(); ++j) {
                    const K& tji = t(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
                    if (!tji.is_zero()) r[j] -= dd * (cw * tji);
                }
            }
        }
        return r;
    }

    // Matrix of D_{y_k} from the degree-d component to degree d-1, columns
    // indexed by `from`, rows by `to`.
    Matrix<K> matrix(int k, const GradedBasis& from, const GradedBasis& to) {
        const auto F = ctx_->field();
        Matrix<K> M(F, to.dim(), from.dim());
        for (std::size_t col = 0; col < from.dim(); ++col) {
            const auto& [m, ti] = from.elems[col];
            VermaVector<K> e(F, from.nvars, from.taudim);
            e[ti].add_term(m, F.one());
            const VermaVector<K> img = apply(k, e);
            const std::vector<K> cr = coords(img, to);
            for (std::size_t row = 0; row < to.dim(); ++row)
                if (!cr[row].is_zero()) M(row, col) = cr[row];
        }
        return M;
    }

  private:
    const DunklContext<K>* ctx_;
    std::map<std::pair<std::size_t, std::vector<int>>, Poly<K>> cache_;
};

// One-shot Dunkl application (owns a transient cache).
template <class K>
VermaVector<K> apply_dunkl(const DunklContext<K>& ctx, int k, const VermaVector<K>& v) {
    if (k < 0 || k >= ctx.nvars()) throw ArityMismatch("apply_dunkl: direction out of range");
    DunklOps<K> ops(ctx);
    return ops.apply(k, v);
}

// A homogeneous v of positive degree is singular iff every Dunkl operator
// kills it.
template <class K>
bool is_singular(const DunklContext<K>& ctx, const VermaVector<K>& v) {
    if (v.is_zero() || !v.is_homogeneous() || v.degree() < 1)
        throw InvalidInput("is_singular: need a nonzero homogeneous vector of degree >= 1");
    DunklOps<K> ops(ctx);
    for (int k = 0; k < ctx.nvars(); ++k)
        if (!ops.apply(k, v).is_zero()) return false;
    return true;
}

// B_k f = sum_{j != k} (f - s_{kj} f)/(x_k - x_j) on plain polynomials,
// the c-linear part of the type-A Dunkl operator.  Symmetric group only.
template <class K>
Poly<K> apply_B(const ReflectionGroupData<K>& g, int k, const Poly<K>& f) {
    if (g.family != GroupFamily::Symmetric) throw InvalidInput("apply_B: symmetric groups only");
    Poly<K> r(g.field, g.rank);
    for (const auto& s : g.reflections) {
        if (s.root_i != k && s.root_j != k) continue;
        const Poly<K> dd = divided_difference(f, s);
        if (s.root_i == k)
            r += dd;
        else
            r -= dd; // (f - sf)/(x_k - x_i) = -(f - sf)/(x_i - x_k)
    }
    return r;
}

// Commutator check against the defining relation of the algebra:
// [y_k, x_j] = delta_{kj} - sum_s c_s <y_k, alpha_s> <x_j, alpha_s^vee> s.
template <class K>
bool check_algebra_relation(const DunklContext<K>& ctx, int k, int j, const VermaVector<K>& v) {
    const auto F = ctx.field();
    const Poly<K> xj = Poly<K>::variable(F, ctx.nvars(), j);
    DunklOps<K> ops(ctx);
    const VermaVector<K> lhs = ops.apply(k, xj * v) - xj * ops.apply(k, v);
    VermaVector<K> rhs(F, v.nvars(), v.taudim());
    if (k == j) rhs += v;
    const auto& g = ctx.group;
    for (std::size_t s_idx = 0; s_idx < g.reflections.size(); ++s_idx) {
        const auto& s = g.reflections[s_idx];
        const K w = s.alpha_coeff(k) * s.coroot[static_cast<std::size_t>(j)];
        if (w.is_zero()) continue;
        rhs -= act_verma(g, ctx.tau, s_idx, v) * (g.param_of(s) * w);
    }
    return lhs == rhs;
}

} // namespace cherednik
