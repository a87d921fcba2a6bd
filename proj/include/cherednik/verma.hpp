#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/poly.hpp"

namespace cherednik {

// Element of the polynomial part of a lowest-weight standard module:
// a tuple of polynomials, one per basis vector e_i of the lowest-weight
// representation tau (components[i] tensors e_i).
template <class K>
class VermaVector {
  public:
    using Field = typename K::Field;

    VermaVector(Field F, int nvars, int taudim)
        : comps_(static_cast<std::size_t>(taudim), Poly<K>(F, nvars)) {
        if (taudim < 1) throw ArityMismatch("tau dimension must be positive");
    }
    explicit VermaVector(std::vector<Poly<K>> comps) : comps_(std::move(comps)) {
        if (comps_.empty()) throw ArityMismatch("tau dimension must be positive");
    }

    int taudim() const { return static_cast<int>(comps_.size()); }
    int nvars() const { return comps_[0].nvars(); }
    Field field() const { return comps_[0].field(); }

    Poly<K>& operator[](int i) { return comps_[static_cast<std::size_t>(i)]; }
    const Poly<K>& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const auto& p : comps_)
            if (!p.is_zero()) return false;
        return true;
    }

    int degree() const {
        int d = -1;
        for (const auto& p : comps_) d = std::max(d, p.degree());
        return d;
    }
    bool is_homogeneous() const {
        int d = -1;
        for (const auto& p : comps_) {
            if (p.is_zero()) continue;
            if (!p.is_homogeneous()) return false;
            if (d >= 0 && p.degree() != d) return false;
            d = p.degree();
        }
        return true;
    }

    VermaVector operator-() const {
        VermaVector r = *this;
        for (auto& p : r.comps_) p = -p;
        return r;
    }
    VermaVector& operator+=(const VermaVector& o) {
        check(o);
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
        return *this;
    }
    VermaVector& operator-=(const VermaVector& o) {
        check(o);
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
        return *this;
    }
    friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
    friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }

    VermaVector operator*(const K& s) const {
        VermaVector r = *this;
        for (auto& p : r.comps_) p = p * s;
        return r;
    }
    // Multiplication by a polynomial acts componentwise (Sym(h*) action).
    friend VermaVector operator*(const Poly<K>& f, const VermaVector& v) {
        VermaVector r = v;
        for (auto& p : r.comps_) p = f * p;
        return r;
    }

    bool operator==(const VermaVector& o) const { return comps_ == o.comps_; }
    bool operator!=(const VermaVector& o) const { return !(*this == o); }

    VermaVector graded_component(int d) const {
        VermaVector r = *this;
        for (auto& p : r.comps_) p = p.graded_component(d);
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (!s.empty()) s += " + ";
            s += comps_[i].to_string() + " (*) e" + std::to_string(i + 1);
        }
        return s;
    }

  private:
    void check(const VermaVector& o) const {
        if (comps_.size() != o.comps_.size()) throw ArityMismatch("tau dimension mismatch");
    }

    std::vector<Poly<K>> comps_;
};

// All monomials of total degree d in n variables, lexicographically
// descending (x_1^d first).  Deterministic; used everywhere a graded
// component is coordinatized.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            cur[var] = rem;
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e);
        }
        cur[var] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

// Ordered basis of the degree-d graded component of Sym(h*) (x) tau:
// monomial-major (graded lex), tau index minor.
struct GradedBasis {
    int nvars = 0;
    int degree = 0;
    int taudim = 1;
    std::vector<std::pair<Monomial, int>> elems;

    std::size_t dim() const { return elems.size(); }

    std::size_t index_of(const Monomial& m, int tau_idx) const {
        auto it = lookup_.find(key(m, tau_idx));
        if (it == lookup_.end()) throw DegreeMismatch("basis lookup: element not in graded component");
        return it->second;
    }

    static GradedBasis enumerate(int nvars, int degree, int taudim) {
        GradedBasis b;
        b.nvars = nvars;
        b.degree = degree;
        b.taudim = taudim;
        for (const Monomial& m : monomials_of_degree(nvars, degree))
            for (int t = 0; t < taudim; ++t) b.elems.emplace_back(m, t);
        for (std::size_t i = 0; i < b.elems.size(); ++i)
            b.lookup_.emplace(key(b.elems[i].first, b.elems[i].second), i);
        return b;
    }

  private:
    static std::pair<std::vector<int>, int> key(const Monomial& m, int t) { return {m.e, t}; }
    std::map<std::pair<std::vector<int>, int>, std::size_t> lookup_;
};

// Coordinates of a homogeneous vector in the graded basis.  Throws
// DegreeMismatch if any term lies outside the basis degree.
template <class K>
std::vector<K> coords(const VermaVector<K>& v, const GradedBasis& basis) {
    const auto F = v.field();
    if (v.taudim() != basis.taudim || v.nvars() != basis.nvars)
        throw ArityMismatch("coords: vector shape does not match basis");
    std::vector<K> out(basis.dim(), F.zero());
    for (int t = 0; t < v.taudim(); ++t)
        for (const auto& [m, c] : v[t].terms()) {
            if (m.degree() != basis.degree) throw DegreeMismatch("coords: term of wrong degree");
            out[basis.index_of(m, t)] = c;
        }
    return out;
}

template <class K>
VermaVector<K> from_coords(typename K::Field F, const GradedBasis& basis, const std::vector<K>& c) {
    if (c.size() != basis.dim()) throw ArityMismatch("from_coords: wrong coordinate count");
    VermaVector<K> v(F, basis.nvars, basis.taudim);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) v[basis.elems[i].second].add_term(basis.elems[i].first, c[i]);
    return v;
}

} // namespace cherednik
