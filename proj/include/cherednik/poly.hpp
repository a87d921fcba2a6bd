#pragma once

#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/matrix.hpp"

namespace cherednik {

// Exponent vector.  Variables are x_1..x_n (index 0..n-1 internally).
struct Monomial {
    std::vector<int> e;

    explicit Monomial(int nvars = 0) : e(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return e[static_cast<std::size_t>(i)]; }

    bool operator==(const Monomial& o) const { return e == o.e; }

    Monomial times_var(int i, int k = 1) const {
        Monomial m = *this;
        m.e[static_cast<std::size_t>(i)] += k;
        return m;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
        }
        return s;
    }
};

// Graded lexicographic, highest first: higher total degree precedes, ties
// broken by lexicographically larger exponent vector.  Map iteration then
// yields the leading term first.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

// Sparse multivariate polynomial over K with graded-lex term order.
template <class K>
class Poly {
  public:
    using Field = typename K::Field;
    using TermMap = std::map<Monomial, K, GrlexDesc>;

    Poly(Field F, int nvars) : F_(std::move(F)), n_(nvars) {}

    static Poly zero(Field F, int nvars) { return Poly(std::move(F), nvars); }
    static Poly constant(Field F, int nvars, const K& a) {
        Poly p(std::move(F), nvars);
        if (!a.is_zero()) p.t_.emplace(Monomial(nvars), a);
        return p;
    }
    static Poly variable(Field F, int nvars, int i, int power = 1) {
        Poly p(F, nvars);
        Monomial m(nvars);
        if (i < 0 || i >= nvars) throw ArityMismatch("variable index out of range");
        m[i] = power;
        p.t_.emplace(std::move(m), F.one());
        return p;
    }
    static Poly term(Field F, Monomial m, const K& a) {
        Poly p(std::move(F), m.nvars());
        if (!a.is_zero()) p.t_.emplace(std::move(m), a);
        return p;
    }

    const Field& field() const { return F_; }
    int nvars() const { return n_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    // Total degree; -1 for the zero polynomial.  The term order is graded,
    // so the first term is maximal and the last minimal in degree.
    int degree() const { return t_.empty() ? -1 : t_.begin()->first.degree(); }
    bool is_homogeneous() const {
        return t_.empty() || t_.begin()->first.degree() == t_.rbegin()->first.degree();
    }

    K coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? F_.zero() : it->second;
    }

    void add_term(const Monomial& m, const K& a) {
        if (a.is_zero()) return;
        if (m.nvars() != n_) throw ArityMismatch("monomial has wrong number of variables");
        auto [it, fresh] = t_.emplace(m, a);
        if (!fresh) {
            it->second += a;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.F_, a.n_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                Monomial m = ma;
                for (int i = 0; i < a.n_; ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly operator*(const K& s) const {
        Poly r(F_, n_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : t_) {
            const K v = c * s;
            if (!v.is_zero()) r.t_.emplace(m, v);
        }
        return r;
    }

    bool operator==(const Poly& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(unsigned e) const {
        Poly r = constant(F_, n_, F_.one());
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
            if (!e) break;
        }
        return r;
    }

    // Formal partial derivative d/dx_i; exponent coefficients live in K,
    // so characteristic-p cancellation is automatic.
    Poly partial(int i) const {
        Poly r(F_, n_);
        for (const auto& [m, c] : t_) {
            if (m[i] == 0) continue;
            const K f = c * F_.from_int(m[i]);
            if (f.is_zero()) continue;
            Monomial mm = m;
            mm[i] -= 1;
            r.t_.emplace(std::move(mm), f);
        }
        return r;
    }

    // Degree-d graded piece.
    Poly graded_component(int d) const {
        Poly r(F_, n_);
        for (const auto& [m, c] : t_)
            if (m.degree() == d) r.t_.emplace(m, c);
        return r;
    }

    // Substitute x_j -> sum_i A(i,j) x_i.  Monomial matrices (every column
    // a single scaled variable, which covers all reflections used here)
    // map terms to terms; general matrices fall back to expanding powers
    // of linear forms.
    Poly substitute_linear(const Matrix<K>& A) const {
        if (static_cast<int>(A.rows()) != n_ || static_cast<int>(A.cols()) != n_)
            throw ArityMismatch("substitution matrix has wrong size");
        std::vector<int> target(static_cast<std::size_t>(n_), -1);
        std::vector<K> scale(static_cast<std::size_t>(n_), F_.zero());
        bool monomial_map = true;
        for (int j = 0; j < n_ && monomial_map; ++j) {
            int nz = 0;
            for (int i = 0; i < n_; ++i) {
                if (A(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero()) continue;
                ++nz;
                target[static_cast<std::size_t>(j)] = i;
                scale[static_cast<std::size_t>(j)] = A(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
            if (nz != 1) monomial_map = false;
        }
        Poly r(F_, n_);
        if (monomial_map) {
            for (const auto& [m, c] : t_) {
                Monomial mm(n_);
                K f = c;
                for (int j = 0; j < n_; ++j) {
                    if (m[j] == 0) continue;
                    mm[target[static_cast<std::size_t>(j)]] += m[j];
                    if (!scale[static_cast<std::size_t>(j)].is_one())
                        f = f * pow_k(scale[static_cast<std::size_t>(j)], static_cast<unsigned>(m[j]));
                }
                r.add_term(mm, f);
            }
            return r;
        }
        for (const auto& [m, c] : t_) {
            Poly termval = constant(F_, n_, c);
            for (int j = 0; j < n_; ++j) {
                if (m[j] == 0) continue;
                Poly img(F_, n_);
                for (int i = 0; i < n_; ++i) {
                    const K& a = A(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                    if (!a.is_zero()) img.add_term(Monomial(n_).times_var(i), a);
                }
                termval = termval * img.pow(static_cast<unsigned>(m[j]));
            }
            r += termval;
        }
        return r;
    }

    // Exact division by the binomial x_i - lambda*x_j (synthetic division
    // along x_i); throws InexactDivision when the remainder is nonzero.
    Poly divexact_binomial(int i, const K& lambda, int j) const {
        if (i == j) throw InvalidInput("divexact_binomial: i == j");
        // split f = sum_a x_i^a g_a with g_a free of x_i
        std::map<int, Poly> g;
        for (const auto& [m, c] : t_) {
            Monomial mm = m;
            const int a = mm[i];
            mm[i] = 0;
            auto [it, fresh] = g.try_emplace(a, Poly(F_, n_));
            it->second.add_term(mm, c);
        }
        Poly q(F_, n_);
        Poly h(F_, n_); // running h_b
        const int D = g.empty() ? -1 : g.rbegin()->first;
        const Poly xj = variable(F_, n_, j);
        for (int b = D; b >= 1; --b) {
            Poly hb = xj * h * lambda;
            auto it = g.find(b);
            if (it != g.end()) hb += it->second;
            // hb is h_{b-1}; contribute x_i^{b-1} * h_{b-1}
            for (const auto& [m, c] : hb.t_) {
                Monomial mm = m;
                mm[i] += b - 1;
                q.add_term(mm, c);
            }
            h = std::move(hb);
        }
        Poly rem = xj * h * lambda;
        auto it0 = g.find(0);
        if (it0 != g.end()) rem += it0->second;
        if (!rem.is_zero()) throw InexactDivision("binomial division left a remainder");
        return q;
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            s += c.to_string();
            const std::string ms = m.to_string();
            if (!ms.empty()) s += "*" + ms;
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

  private:
    static K pow_k(const K& a, unsigned e) {
        K r = a.field().one(), b = a;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    void check(const Poly& o) const {
        if (n_ != o.n_) throw ArityMismatch("polynomials in different variable counts");
        if (!(F_ == o.F_)) throw FieldMismatch("polynomials over different fields");
    }

    Field F_;
    int n_;
    TermMap t_;
};

} // namespace cherednik
