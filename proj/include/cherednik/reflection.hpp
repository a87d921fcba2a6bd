#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/matrix.hpp"
#include "cherednik/poly.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

// One reflection s, acting on the span of x_1..x_n by dual(i,j):
// s(x_j) = sum_i dual(i,j) x_i.  The root alpha is always the binomial
// x_i - lambda x_j here, and s(alpha) = -alpha.  The coroot alpha^vee is
// the vector of coefficients in (1-s)x_t = <alpha^vee, x_t> alpha; it is
// solved, not postulated, when the group is built.
template <class K>
struct Reflection {
    Matrix<K> dual;
    int root_i = 0;
    int root_j = 1;
    K root_lambda;
    std::vector<K> coroot;
    int class_id = 0;

    // <y_k, alpha>: coefficient of x_k in the root.
    K alpha_coeff(int k) const {
        const auto F = root_lambda.field();
        if (k == root_i) return F.one();
        if (k == root_j) return -root_lambda;
        return F.zero();
    }

    Poly<K> alpha_poly(typename K::Field F, int nvars) const {
        Poly<K> a = Poly<K>::variable(F, nvars, root_i);
        a.add_term(Monomial(nvars).times_var(root_j), -root_lambda);
        return a;
    }

    Poly<K> act(const Poly<K>& f) const { return f.substitute_linear(dual); }
};

enum class GroupFamily { Symmetric, Dihedral };

// Immutable reflection-group datum: the reflections, their conjugacy
// classes, and one deformation parameter per class.  All reflections in
// the families supported here are involutions, so the parameter function
// is automatically invariant under s -> s^{-1}; this is asserted when the
// group is built.
template <class K>
struct ReflectionGroupData {
    GroupFamily family = GroupFamily::Symmetric;
    int rank = 0;      // number of variables
    int family_size = 0; // n for S_n, m for G(m,m,2)
    typename K::Field field;
    std::vector<Reflection<K>> reflections;
    int num_classes = 1;
    std::vector<K> class_params;
    K zeta; // dihedral: the primitive m-th root used in all matrices

    const K& param(int class_id) const { return class_params[static_cast<std::size_t>(class_id)]; }
    const K& param_of(const Reflection<K>& s) const { return class_params[static_cast<std::size_t>(s.class_id)]; }
};

namespace detail {

// Solve (1-s)x_t = <alpha^vee, x_t> alpha for all t; throws if s does not
// actually reflect along alpha (this doubles as a construction check).
template <class K>
std::vector<K> solve_coroot(const Matrix<K>& dual, int root_i, int root_j, const K& lambda) {
    const auto F = lambda.field();
    const int n = static_cast<int>(dual.rows());
    std::vector<K> coroot(static_cast<std::size_t>(n), F.zero());
    for (int t = 0; t < n; ++t) {
        // w = coefficients of (1-s)x_t
        std::vector<K> w(static_cast<std::size_t>(n), F.zero());
        w[static_cast<std::size_t>(t)] = F.one();
        for (int i = 0; i < n; ++i)
            w[static_cast<std::size_t>(i)] -= dual(static_cast<std::size_t>(i), static_cast<std::size_t>(t));
        // alpha has coefficient 1 at root_i and -lambda at root_j
        const K ct = w[static_cast<std::size_t>(root_i)];
        for (int i = 0; i < n; ++i) {
            K expect = F.zero();
            if (i == root_i) expect = ct;
            if (i == root_j) expect = -(ct * lambda);
            if (w[static_cast<std::size_t>(i)] != expect)
                throw InvalidInput("reflection data inconsistent: (1-s)x is not a multiple of alpha");
        }
        coroot[static_cast<std::size_t>(t)] = ct;
    }
    return coroot;
}

template <class K>
void check_involution(const Matrix<K>& m) {
    if (!(m * m == Matrix<K>::identity(m.field(), m.rows())))
        throw InvalidInput("reflection matrix is not an involution");
}

} // namespace detail

// Symmetric group S_n acting on its permutation representation's dual
// coordinates; reflections are the transpositions (i j) with root
// x_i - x_j, one conjugacy class.
template <class K>
ReflectionGroupData<K> symmetric_group(typename K::Field F, int n, const K& c) {
    if (n < 2) throw InvalidInput("symmetric_group: n must be at least 2");
    ReflectionGroupData<K> g;
    g.family = GroupFamily::Symmetric;
    g.rank = n;
    g.family_size = n;
    g.field = F;
    g.num_classes = 1;
    g.class_params = {c};
    g.zeta = F.one();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Reflection<K> s{Matrix<K>::identity(F, static_cast<std::size_t>(n)), i, j, F.one(), {}, 0};
            auto& m = s.dual;
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = F.zero();
            m(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = F.zero();
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = F.one();
            m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = F.one();
            detail::check_involution(s.dual);
            s.coroot = detail::solve_coroot(s.dual, s.root_i, s.root_j, s.root_lambda);
            g.reflections.push_back(std::move(s));
        }
    return g;
}

// Dihedral group G(m,m,2) of order 2m, char(K) coprime to m.  Reflection
// s_k (k = 0..m-1) maps x_1 -> zeta^k x_2, x_2 -> zeta^{-k} x_1 and has
// root x_1 - zeta^k x_2.  For even m the reflections fall into two
// conjugacy classes by parity of k and carry independent parameters.
template <class K>
ReflectionGroupData<K> dihedral_group(typename K::Field F, int m, const K& zeta, std::vector<K> cs) {
    if (m < 3) throw InvalidInput("dihedral_group: m must be at least 3");
    if (F.characteristic() != 0 && static_cast<std::uint64_t>(m) % F.characteristic() == 0)
        throw InvalidInput("dihedral_group: characteristic divides m");
    // zeta must have exact order m
    {
        K pw = zeta;
        for (int t = 1; t < m; ++t) {
            if (pw.is_one()) throw InvalidInput("dihedral_group: zeta has order smaller than m");
            pw = pw * zeta;
        }
        if (!pw.is_one()) throw InvalidInput("dihedral_group: zeta^m != 1");
    }
    ReflectionGroupData<K> g;
    g.family = GroupFamily::Dihedral;
    g.rank = 2;
    g.family_size = m;
    g.field = F;
    g.num_classes = (m % 2 == 0) ? 2 : 1;
    if (static_cast<int>(cs.size()) != g.num_classes)
        throw InvalidInput("dihedral_group: need one parameter per conjugacy class");
    g.class_params = std::move(cs);
    g.zeta = zeta;
    std::vector<K> zpow(static_cast<std::size_t>(m), F.one());
    for (int k = 1; k < m; ++k) zpow[static_cast<std::size_t>(k)] = zpow[static_cast<std::size_t>(k - 1)] * zeta;
    for (int k = 0; k < m; ++k) {
        const K zk = zpow[static_cast<std::size_t>(k)];
        const K zmk = zpow[static_cast<std::size_t>((m - k) % m)];
        Reflection<K> s{Matrix<K>(F, 2, 2), 0, 1, zk, {}, (m % 2 == 0) ? (k % 2) : 0};
        s.dual(1, 0) = zk;  // s(x1) = zeta^k x2
        s.dual(0, 1) = zmk; // s(x2) = zeta^{-k} x1
        detail::check_involution(s.dual);
        s.coroot = detail::solve_coroot(s.dual, s.root_i, s.root_j, s.root_lambda);
        g.reflections.push_back(std::move(s));
    }
    return g;
}

// Lowest-weight representation selector.
struct TauSpec {
    enum class Kind { Trivial, Rho } kind = Kind::Trivial;
    int a = 0;

    static TauSpec trivial() { return {Kind::Trivial, 0}; }
    static TauSpec rho(int a) { return {Kind::Rho, a}; }

    std::string label() const {
        return kind == Kind::Trivial ? "triv" : ("rho:" + std::to_string(a));
    }
};

// Matrices of tau at each reflection, aligned with group.reflections.
template <class K>
struct TauRep {
    int dim = 1;
    TauSpec spec;
    std::vector<Matrix<K>> mats;
};

// Build tau: the trivial character for any group, or the two-dimensional
// rho_a (1 <= a < m/2) of a dihedral group, where s_k sends
// e_1 -> zeta^{ak} e_2 and e_2 -> zeta^{-ak} e_1.
template <class K>
TauRep<K> make_tau(const ReflectionGroupData<K>& g, const TauSpec& spec) {
    const auto F = g.field;
    TauRep<K> tau;
    tau.spec = spec;
    if (spec.kind == TauSpec::Kind::Trivial) {
        tau.dim = 1;
        for (std::size_t s = 0; s < g.reflections.size(); ++s)
            tau.mats.push_back(Matrix<K>::identity(F, 1));
        return tau;
    }
    if (g.family != GroupFamily::Dihedral)
        throw InvalidInput("make_tau: rho_a requires a dihedral group");
    const int m = g.family_size;
    if (spec.a < 1 || 2 * spec.a >= m)
        throw InvalidInput("make_tau: rho_a requires 1 <= a < m/2");
    tau.dim = 2;
    for (int k = 0; k < m; ++k) {
        const K zak = g.zeta.pow(static_cast<std::uint64_t>((static_cast<long long>(spec.a) * k) % m));
        const K zmak = g.zeta.pow(static_cast<std::uint64_t>((static_cast<long long>(m) * m - static_cast<long long>(spec.a) * k) % m));
        Matrix<K> t(F, 2, 2);
        t(1, 0) = zak;  // e1 -> zeta^{ak} e2
        t(0, 1) = zmak; // e2 -> zeta^{-ak} e1
        detail::check_involution(t);
        tau.mats.push_back(std::move(t));
    }
    return tau;
}

// (f - s f) / alpha_s, exact by construction.
template <class K>
Poly<K> divided_difference(const Poly<K>& f, const Reflection<K>& s) {
    const Poly<K> num = f - s.act(f);
    return num.divexact_binomial(s.root_i, s.root_lambda, s.root_j);
}

// Action of reflection #s_idx on a Verma vector: substitute in each
// polynomial component, then mix components by tau(s).
template <class K>
VermaVector<K> act_verma(const ReflectionGroupData<K>& g, const TauRep<K>& tau, std::size_t s_idx, const VermaVector<K>& v) {
    const auto& s = g.reflections[s_idx];
    const auto& t = tau.mats[s_idx];
    VermaVector<K> r(g.field, v.nvars(), v.taudim());
    for (int i = 0; i < v.taudim(); ++i) {
        if (v[i].is_zero()) continue;
        const Poly<K> moved = s.act(v[i]);
        for (int j = 0; j < v.taudim(); ++j) {
            const K& tij = t(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
            if (!tij.is_zero()) r[j] += moved * tij;
        }
    }
    return r;
}

} // namespace cherednik
