#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "cherednik/errors.hpp"
#include "cherednik/upoly.hpp"

namespace cherednik {

template <class B>
class RatFunc;

// Descriptor of the fraction field B(c) of the univariate polynomial ring
// over a base field B (B is F_p or F_q here).  Exact rational functions,
// not truncated series: every operation renormalizes to lowest terms with
// a monic denominator, so equality is structural.
template <class B>
struct RatFuncField {
    typename B::Field base;

    using Elem = RatFunc<B>;

    bool operator==(const RatFuncField& o) const { return base == o.base; }

    std::uint64_t characteristic() const { return base.characteristic(); }

    inline RatFunc<B> zero() const;
    inline RatFunc<B> one() const;
    inline RatFunc<B> from_int(std::int64_t v) const;
    inline RatFunc<B> c() const; // the transcendental generator
    inline RatFunc<B> embed(const B& a) const;
    inline RatFunc<B> embed_poly(const UPoly<B>& f) const;
};

// num/den in lowest terms, den monic and nonzero; zero is 0/1.
template <class B>
class RatFunc {
  public:
    using Base = B;
    using Field = RatFuncField<B>;

    RatFunc() : num_(typename B::Field{}), den_(typename B::Field{}) {} // sentinel
    RatFunc(UPoly<B> num, UPoly<B> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    Field field() const { return Field{num_.base_field()}; }
    const UPoly<B>& num() const { return num_; }
    const UPoly<B>& den() const { return den_; }
    bool is_polynomial() const { return den_.is_one(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return a.field().zero();
        // cross-cancel before multiplying to keep degrees down
        const UPoly<B> g1 = UPoly<B>::gcd(a.num_, b.den_);
        const UPoly<B> g2 = UPoly<B>::gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = a.num_.divexact(g1) * b.num_.divexact(g2);
        r.den_ = a.den_.divexact(g2) * b.den_.divexact(g1);
        r.make_den_monic();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero rational function");
        return a * b.inv();
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.make_den_monic();
        return r;
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(std::uint64_t e) const {
        RatFunc r = field().one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Substitute a concrete base-field value for c; the denominator must
    // not vanish there.
    B eval(const B& x) const {
        const B d = den_.eval(x);
        if (d.is_zero()) throw DivisionByZero("rational function has a pole at the evaluation point");
        return num_.eval(x) / d;
    }

    std::string to_string() const {
        if (is_polynomial()) {
            if (num_.degree() <= 0) return num_.is_zero() ? "0" : num_.coeff(0).to_string();
            return "(" + num_.to_string("c") + ")";
        }
        return "(" + num_.to_string("c") + ")/(" + den_.to_string("c") + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& a) { return os << a.to_string(); }

  private:
    void make_den_monic() {
        const B lead = den_.leading();
        if (!lead.is_one()) {
            const B li = lead.inv();
            num_ = num_ * li;
            den_ = den_ * li;
        }
    }
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = UPoly<B>::constant(num_.base_field().one());
            return;
        }
        const UPoly<B> g = UPoly<B>::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        make_den_monic();
    }

    UPoly<B> num_, den_;
};

template <class B>
RatFunc<B> RatFuncField<B>::zero() const {
    return RatFunc<B>(UPoly<B>(base), UPoly<B>::constant(base.one()));
}
template <class B>
RatFunc<B> RatFuncField<B>::one() const {
    return from_int(1);
}
template <class B>
RatFunc<B> RatFuncField<B>::from_int(std::int64_t v) const {
    return RatFunc<B>(UPoly<B>::constant(base.from_int(v)), UPoly<B>::constant(base.one()));
}
template <class B>
RatFunc<B> RatFuncField<B>::c() const {
    return RatFunc<B>(UPoly<B>::gen(base), UPoly<B>::constant(base.one()));
}
template <class B>
RatFunc<B> RatFuncField<B>::embed(const B& a) const {
    return RatFunc<B>(UPoly<B>::constant(a), UPoly<B>::constant(base.one()));
}
template <class B>
RatFunc<B> RatFuncField<B>::embed_poly(const UPoly<B>& f) const {
    return RatFunc<B>(f, UPoly<B>::constant(base.one()));
}

} // namespace cherednik
