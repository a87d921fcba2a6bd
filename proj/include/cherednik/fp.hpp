#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "cherednik/errors.hpp"

namespace cherednik {

class Fp;

// Descriptor of the prime field F_p.  Field descriptors are small value
// types; every element carries one so mixed-field arithmetic is detected
// instead of silently producing garbage.
struct FpField {
    std::uint64_t p = 0;

    using Elem = Fp;

    bool operator==(const FpField&) const = default;

    std::uint64_t characteristic() const { return p; }

    inline Fp zero() const;
    inline Fp one() const;
    inline Fp from_int(std::int64_t v) const;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

// Element of F_p.  Invariant: 0 <= v_ < p_, and p_ is prime.
// p is kept below 2^31 so products fit in 64 bits without widening.
class Fp {
  public:
    using Field = FpField;

    Fp() : v_(0), p_(0) {} // unusable sentinel; real elements come from a field
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {
        if (p < 2 || p >= (1ull << 31) || !detail::is_prime_u64(p))
            throw InvalidInput("Fp: modulus must be a prime below 2^31, got " + std::to_string(p));
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    Field field() const { return Field{p_}; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(const Fp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ += p_ - o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = (v_ * o.v_) % p_;
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp pow(std::uint64_t e) const {
        Fp r = raw(1 % p_, p_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Fermat inverse; p is prime so a^(p-2) works for a != 0.
    Fp inv() const {
        if (v_ == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
        return pow(p_ - 2);
    }

    std::string to_string() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

    // Trusted constructor: v already reduced, p already validated.
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp a;
        a.v_ = v;
        a.p_ = p;
        return a;
    }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw FieldMismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline Fp FpField::zero() const { return Fp::raw(0, p); }
inline Fp FpField::one() const { return Fp::raw(1 % p, p); }
inline Fp FpField::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return Fp::raw(static_cast<std::uint64_t>(m), p);
}

// Validating entry point; FpField's own methods skip the primality test
// so they stay cheap in inner loops.
inline FpField fp_field(std::uint64_t p) {
    return Fp(0, p).field();
}

} // namespace cherednik
