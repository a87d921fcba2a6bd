#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"

namespace cherednik {

// Dense univariate polynomial over a field K.  Coefficient 0 is the
// constant term; the vector never has trailing zeros, so the zero
// polynomial is the empty vector (degree -1).
template <class K>
class UPoly {
  public:
    using Coeff = K;
    using BaseField = typename K::Field;

    explicit UPoly(BaseField F) : F_(std::move(F)) {}
    UPoly(BaseField F, std::vector<K> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const K& a) {
        UPoly r(a.field());
        if (!a.is_zero()) r.c_.push_back(a);
        return r;
    }
    // The generator t of K[t].
    static UPoly gen(BaseField F) {
        UPoly r(F);
        r.c_ = {F.zero(), F.one()};
        return r;
    }

    const BaseField& base_field() const { return F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return F_.zero();
        return c_[i];
    }
    const std::vector<K>& coeffs() const { return c_; }

    K leading() const {
        if (c_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
        return c_.back();
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (K& a : r.c_) a = -a;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        a.check(b);
        UPoly r(a.F_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.F_.zero());
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        a.check(b);
        UPoly r(a.F_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, a.F_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    UPoly operator*(const K& s) const {
        UPoly r(F_);
        if (s.is_zero()) return r;
        r.c_ = c_;
        for (K& a : r.c_) a = a * s;
        return r;
    }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    // Euclidean division; divisor may have any nonzero leading coefficient.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
        check(d);
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        UPoly q(F_), r = *this;
        const K lead_inv = d.leading().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const int shift = r.degree() - d.degree();
            const K f = r.leading() * lead_inv;
            if (static_cast<int>(q.c_.size()) < shift + 1) q.c_.resize(shift + 1, F_.zero());
            q.c_[shift] += f;
            // r -= f * t^shift * d
            for (int i = 0; i <= d.degree(); ++i)
                r.c_[i + shift] = r.c_[i + shift] - f * d.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    UPoly divexact(const UPoly& d) const {
        auto [q, r] = divrem(d);
        if (!r.is_zero()) throw InexactDivision();
        return q;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inv();
    }

    static UPoly gcd(UPoly a, UPoly b) {
        a.check(b);
        while (!b.is_zero()) {
            UPoly r = a.divrem(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    K eval(const K& x) const {
        K r = F_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // coefficient-wise derivative
    UPoly derivative() const {
        UPoly r(F_);
        for (int i = 1; i <= degree(); ++i) r.c_.push_back(c_[static_cast<std::size_t>(i)] * F_.from_int(i));
        r.trim();
        return r;
    }

    std::string to_string(const std::string& var) const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += "+";
            s += c_[i].to_string() + "*" + var + "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void check(const UPoly& o) const {
        if (!(F_ == o.F_)) throw FieldMismatch("univariate polynomials over different fields");
    }

    BaseField F_;
    std::vector<K> c_;
};

} // namespace cherednik
