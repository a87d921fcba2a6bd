#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/fp.hpp"
#include "cherednik/upoly.hpp"

namespace cherednik {

// Deterministic irreducibility test over F_p: f of degree d >= 1 is
// irreducible iff no irreducible factor of degree <= d/2 exists, i.e.
// gcd(z^(p^i) - z, f) = 1 for all 1 <= i <= d/2.
inline bool is_irreducible(const UPoly<Fp>& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const FpField F = f.base_field();
    const UPoly<Fp> fm = f.monic();
    const UPoly<Fp> z = UPoly<Fp>::gen(F);

    auto mulmod = [&](const UPoly<Fp>& a, const UPoly<Fp>& b) { return (a * b).divrem(fm).second; };
    auto powp = [&](UPoly<Fp> a) { // a^p mod f
        UPoly<Fp> r = UPoly<Fp>::constant(F.one());
        std::uint64_t e = F.p;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };

    UPoly<Fp> h = z; // z^(p^i) mod f
    for (int i = 1; i <= d / 2; ++i) {
        h = powp(h);
        if (UPoly<Fp>::gcd(h - z, fm).degree() > 0) return false;
    }
    return true;
}

// Smallest monic irreducible of degree d over F_p, "smallest" meaning the
// lexicographically least tuple (a_{d-1},...,a_1,a_0) of non-leading
// coefficients, i.e. ascending base-p counter order.
inline UPoly<Fp> find_irreducible(std::uint64_t p, unsigned d) {
    const FpField F = fp_field(p);
    if (d == 0) throw InvalidInput("find_irreducible: degree must be positive");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) {
        if (count > (1ull << 62) / p) throw InvalidInput("find_irreducible: p^d too large");
        count *= p;
    }
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<Fp> c(d + 1, F.zero());
        std::uint64_t t = v;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = F.from_int(static_cast<std::int64_t>(t % p));
            t /= p;
        }
        c[d] = F.one();
        UPoly<Fp> f(F, std::move(c));
        if (is_irreducible(f)) return f;
    }
    throw NoSolution("no irreducible polynomial found (unreachable for d>=1)"); // LCOV_EXCL_LINE
}

// Shared immutable description of F_q = F_p[z]/(f).  q = p^k.
struct FqCtx {
    std::uint64_t p;
    std::vector<std::uint64_t> modulus; // monic, size k+1, modulus[k] == 1
    unsigned k;
    std::uint64_t q;

    FqCtx(std::uint64_t p_, std::vector<std::uint64_t> modulus_) : p(p_), modulus(std::move(modulus_)) {
        const FpField F = fp_field(p);
        if (modulus.size() < 2 || modulus.back() != 1)
            throw InvalidInput("FqCtx: modulus must be monic of degree >= 1");
        k = static_cast<unsigned>(modulus.size()) - 1;
        for (std::uint64_t& a : modulus) a %= p;
        if (modulus.back() != 1) throw InvalidInput("FqCtx: leading coefficient vanishes mod p");
        q = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (q > (1ull << 62) / p) throw InvalidInput("FqCtx: q = p^k too large");
            q *= p;
        }
        std::vector<Fp> c;
        c.reserve(modulus.size());
        for (std::uint64_t a : modulus) c.push_back(F.from_int(static_cast<std::int64_t>(a)));
        if (!is_irreducible(UPoly<Fp>(F, std::move(c))))
            throw InvalidInput("FqCtx: modulus is reducible over F_p");
    }

    bool same(const FqCtx& o) const { return p == o.p && modulus == o.modulus; }
};

class Fq;

struct FqField {
    std::shared_ptr<const FqCtx> ctx;

    using Elem = Fq;

    bool operator==(const FqField& o) const {
        if (ctx == o.ctx) return true;
        if (!ctx || !o.ctx) return false;
        return ctx->same(*o.ctx);
    }

    std::uint64_t characteristic() const { return ctx->p; }
    std::uint64_t q() const { return ctx->q; }
    unsigned degree() const { return ctx->k; }

    inline Fq zero() const;
    inline Fq one() const;
    inline Fq from_int(std::int64_t v) const;
    inline Fq from_base(const Fp& a) const;
    inline Fq gen() const;                   // the class of z
    inline Fq element(std::uint64_t idx) const; // base-p digits of idx, idx < q
    FpField prime_field() const { return fp_field(ctx->p); }
};

inline FqField fq_field(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    return FqField{std::make_shared<const FqCtx>(p, std::move(modulus))};
}
inline FqField fq_field(std::uint64_t p, unsigned k) {
    const UPoly<Fp> f = find_irreducible(p, k);
    std::vector<std::uint64_t> m(static_cast<std::size_t>(k) + 1);
    for (unsigned i = 0; i <= k; ++i) m[i] = f.coeff(static_cast<int>(i)).value();
    return fq_field(p, std::move(m));
}

// Element of F_q, stored as the reduced residue c_0 + c_1 z + ... + c_{k-1} z^{k-1}.
class Fq {
  public:
    using Field = FqField;

    Fq() = default; // unusable sentinel
    Fq(Field F, std::vector<std::uint64_t> coeffs) : ctx_(F.ctx), c_(std::move(coeffs)) {
        if (c_.size() != ctx_->k) throw InvalidInput("Fq: coefficient vector has wrong length");
        for (std::uint64_t& a : c_) a %= ctx_->p;
    }

    Field field() const { return Field{ctx_}; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (std::uint64_t a : c_) if (a) return false;
        return true;
    }
    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i) if (c_[i]) return false;
        return true;
    }

    std::uint64_t index() const { // inverse of FqField::element
        std::uint64_t v = 0;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * ctx_->p + c_[i];
        return v;
    }

    Fq operator-() const {
        Fq r = *this;
        for (std::uint64_t& a : r.c_) a = a ? ctx_->p - a : 0;
        return r;
    }

    Fq& operator+=(const Fq& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += o.c_[i];
            if (c_[i] >= ctx_->p) c_[i] -= ctx_->p;
        }
        return *this;
    }
    Fq& operator-=(const Fq& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += ctx_->p - o.c_[i];
            if (c_[i] >= ctx_->p) c_[i] -= ctx_->p;
        }
        return *this;
    }
    Fq& operator*=(const Fq& o) {
        check(o);
        const std::uint64_t p = ctx_->p;
        const unsigned k = ctx_->k;
        std::vector<std::uint64_t> prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
            if (!c_[i]) continue;
            for (unsigned j = 0; j < k; ++j)
                prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
        }
        // fold down by the monic modulus: z^k = -(m_0 + ... + m_{k-1} z^{k-1})
        for (unsigned i = 2 * k - 2; i >= k && i < 2 * k; --i) {
            const std::uint64_t t = prod[i];
            if (!t) continue;
            prod[i] = 0;
            for (unsigned j = 0; j < k; ++j) {
                const std::uint64_t sub = (t * ctx_->modulus[j]) % p;
                prod[i - k + j] = (prod[i - k + j] + p - sub) % p;
            }
        }
        prod.resize(k);
        c_ = std::move(prod);
        return *this;
    }
    Fq& operator/=(const Fq& o) { return *this *= o.inv(); }

    friend Fq operator+(Fq a, const Fq& b) { return a += b; }
    friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
    friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
    friend Fq operator/(Fq a, const Fq& b) { return a /= b; }

    bool operator==(const Fq& o) const {
        if (!ctx_ || !o.ctx_) return ctx_ == o.ctx_;
        return ctx_->same(*o.ctx_) && c_ == o.c_;
    }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq pow(std::uint64_t e) const {
        Fq r = field().one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Extended Euclid against the modulus in F_p[z].
    Fq inv() const {
        if (is_zero()) throw DivisionByZero("inverse of 0 in F_" + std::to_string(ctx_->q));
        const FpField F = fp_field(ctx_->p);
        UPoly<Fp> r0 = modulus_poly(), r1 = to_upoly();
        UPoly<Fp> t0(F), t1 = UPoly<Fp>::constant(F.one());
        while (!r1.is_zero()) {
            auto [q, r2] = r0.divrem(r1);
            UPoly<Fp> t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd = nonzero constant (modulus irreducible)
        const Fp lead = r0.coeff(0);
        UPoly<Fp> t = t0 * lead.inv();
        return from_upoly(field(), t);
    }

    UPoly<Fp> to_upoly() const {
        const FpField F = fp_field(ctx_->p);
        std::vector<Fp> c;
        c.reserve(c_.size());
        for (std::uint64_t a : c_) c.push_back(Fp::raw(a, ctx_->p));
        return UPoly<Fp>(F, std::move(c));
    }
    static Fq from_upoly(const Field& F, const UPoly<Fp>& f) {
        std::vector<std::uint64_t> c(F.ctx->k, 0);
        if (f.degree() >= static_cast<int>(F.ctx->k))
            throw InvalidInput("Fq::from_upoly: degree not reduced");
        for (int i = 0; i <= f.degree(); ++i) c[static_cast<std::size_t>(i)] = f.coeff(i).value();
        return Fq(F, std::move(c));
    }

    std::string to_string() const {
        if (ctx_->k == 1) return std::to_string(c_[0]);
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (!c_[i]) continue;
            if (!s.empty()) s += "+";
            s += std::to_string(c_[i]) + "*z^" + std::to_string(i);
        }
        return s.empty() ? "0" : "(" + s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Fq& a) { return os << a.to_string(); }

  private:
    UPoly<Fp> modulus_poly() const {
        const FpField F = fp_field(ctx_->p);
        std::vector<Fp> c;
        c.reserve(ctx_->modulus.size());
        for (std::uint64_t a : ctx_->modulus) c.push_back(Fp::raw(a, ctx_->p));
        return UPoly<Fp>(F, std::move(c));
    }
    void check(const Fq& o) const {
        if (ctx_ == o.ctx_) return;
        if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_))
            throw FieldMismatch("Fq elements from different extensions");
    }

    std::shared_ptr<const FqCtx> ctx_;
    std::vector<std::uint64_t> c_;
};

inline Fq FqField::zero() const { return Fq(*this, std::vector<std::uint64_t>(ctx->k, 0)); }
inline Fq FqField::one() const { return from_int(1); }
inline Fq FqField::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(ctx->p);
    if (m < 0) m += static_cast<std::int64_t>(ctx->p);
    std::vector<std::uint64_t> c(ctx->k, 0);
    c[0] = static_cast<std::uint64_t>(m);
    return Fq(*this, std::move(c));
}
inline Fq FqField::from_base(const Fp& a) const {
    if (a.modulus() != ctx->p) throw FieldMismatch("FqField::from_base: characteristic differs");
    std::vector<std::uint64_t> c(ctx->k, 0);
    c[0] = a.value();
    return Fq(*this, std::move(c));
}
inline Fq FqField::gen() const {
    std::vector<std::uint64_t> c(ctx->k, 0);
    if (ctx->k == 1) {
        // F_p[z]/(z + a): z is the constant -a
        c[0] = (ctx->p - ctx->modulus[0]) % ctx->p;
    } else {
        c[1] = 1;
    }
    return Fq(*this, std::move(c));
}
inline Fq FqField::element(std::uint64_t idx) const {
    if (idx >= ctx->q) throw InvalidInput("FqField::element: index out of range");
    std::vector<std::uint64_t> c(ctx->k, 0);
    for (unsigned i = 0; i < ctx->k; ++i) {
        c[i] = idx % ctx->p;
        idx /= ctx->p;
    }
    return Fq(*this, std::move(c));
}

struct RootOfUnity {
    std::uint64_t q;
    Fq zeta;
};

namespace detail {
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            ps.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}
} // namespace detail

// Smallest extension F_q of F_p containing an element of exact order m,
// together with a deterministically chosen such element: k is the order of
// p modulo m, and zeta is found by scanning elements in base-p counter
// order and raising to (q-1)/m until the order is exactly m.
inline RootOfUnity primitive_mth_root(std::uint64_t p, std::uint64_t m) {
    fp_field(p); // validates p
    if (m == 0) throw InvalidInput("primitive_mth_root: m must be positive");
    {
        // p and m must be coprime for an order-m element to exist
        std::uint64_t a = p, b = m;
        while (b) { std::uint64_t t = a % b; a = b; b = t; }
        if (a != 1 && m > 1) throw InvalidInput("primitive_mth_root: p divides m");
    }
    unsigned k = 1;
    {
        std::uint64_t pw = p % m;
        while (pw != 1 % m) {
            pw = (pw * (p % m)) % m;
            ++k;
            if (k > 64) throw InvalidInput("primitive_mth_root: extension degree too large");
        }
    }
    const FqField F = fq_field(p, k);
    const std::uint64_t q = F.q();
    const std::uint64_t co = (q - 1) / m;
    const auto primes = detail::prime_divisors(m);
    for (std::uint64_t idx = 1; idx < q; ++idx) {
        const Fq zeta = F.element(idx).pow(co);
        bool exact = true;
        for (std::uint64_t l : primes)
            if (zeta.pow(m / l).is_one()) { exact = false; break; }
        if (exact) return {q, zeta};
    }
    throw NoSolution("primitive_mth_root: multiplicative group exhausted (unreachable)"); // LCOV_EXCL_LINE
}

} // namespace cherednik
