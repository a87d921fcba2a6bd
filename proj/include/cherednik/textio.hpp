#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/fq.hpp"
#include "cherednik/poly.hpp"
#include "cherednik/ratfunc.hpp"
#include "cherednik/verma.hpp"

// Textual grammar for scalars, polynomials, and tensor vectors:
//
//   expr   := ['-'] tterm (('+'|'-') tterm)*
//   tterm  := prod ['(*)' e<k>]
//   prod   := factor (('*'|'/') factor)*
//   factor := base ['^' integer]
//   base   := integer | x<i> | c | z | '(' expr ')'
//
// render_* emit strings parse_* accept, so every value survives a round
// trip through golden files and CLI output.  'c' is the transcendental
// deformation parameter (rational-function coefficients only) and 'z' the
// extension-field generator (F_q coefficients only).

namespace cherednik {

namespace textio_detail {

// True when the string needs parentheses to be reused as a factor.
inline bool composite(const std::string& s) {
    return s.find_first_of("+-*/ ") != std::string::npos;
}

inline std::string paren_if_composite(const std::string& s) {
    return composite(s) ? "(" + s + ")" : s;
}

inline std::string power_of(const std::string& var, unsigned e) {
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

} // namespace textio_detail

inline std::string render_scalar(const Fp& a) { return std::to_string(a.value()); }

inline std::string render_scalar(const Fq& a) {
    const auto& cs = a.coeffs();
    std::string out;
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(cs[i]);
        } else {
            if (cs[i] != 1) out += std::to_string(cs[i]) + "*";
            out += textio_detail::power_of("z", static_cast<unsigned>(i));
        }
    }
    return out.empty() ? "0" : out;
}

namespace textio_detail {

// A univariate polynomial in the transcendental c, highest degree first.
template <class B>
std::string render_upoly_c(const UPoly<B>& f) {
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const B a = f.coeff(i);
        if (a.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string cs = render_scalar(a);
        if (i == 0) {
            out += paren_if_composite(cs);
        } else {
            if (!a.is_one()) out += paren_if_composite(cs) + "*";
            out += power_of("c", static_cast<unsigned>(i));
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace textio_detail

template <class B>
std::string render_scalar(const RatFunc<B>& a) {
    if (a.is_zero()) return "0";
    if (a.is_polynomial()) return textio_detail::render_upoly_c(a.num());
    return "(" + textio_detail::render_upoly_c(a.num()) + ")/(" +
           textio_detail::render_upoly_c(a.den()) + ")";
}

template <class K>
std::string render_poly(const Poly<K>& f) {
    std::string out;
    for (const auto& [m, a] : f.terms()) {
        std::string mono;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += textio_detail::power_of("x" + std::to_string(i + 1),
                                            static_cast<unsigned>(m[i]));
        }
        if (!out.empty()) out += " + ";
        if (mono.empty()) {
            out += textio_detail::paren_if_composite(render_scalar(a));
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += textio_detail::paren_if_composite(render_scalar(a)) + "*" + mono;
        }
    }
    return out.empty() ? "0" : out;
}

// Tensor vectors print as "(poly) (*) e1 + (poly) (*) e2"; a one-dimensional
// lowest weight renders as the bare polynomial.
template <class K>
std::string render_verma(const VermaVector<K>& v) {
    if (v.taudim() == 1) return render_poly(v[0]);
    std::string out;
    for (int k = 0; k < v.taudim(); ++k) {
        if (v[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + render_poly(v[k]) + ") (*) e" + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

namespace textio_detail {

struct Tok {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Tensor, End };
    Kind kind;
    std::string text;
    std::uint64_t ival = 0;
};

inline std::vector<Tok> lex(std::string_view s) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '(') {
            if (i + 2 < s.size() && s[i + 1] == '*' && s[i + 2] == ')') {
                out.push_back({Tok::Tensor, "(*)"});
                i += 3;
            } else {
                out.push_back({Tok::LParen, "("});
                ++i;
            }
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::uint64_t v = 0;
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                if (v > 900'000'000'000'000'000ull) throw ParseError("integer literal too large");
                v = v * 10 + static_cast<std::uint64_t>(s[j] - '0');
                ++j;
            }
            out.push_back({Tok::Int, std::string(s.substr(i, j - i)), v});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i + 1;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i))});
            i = j;
            continue;
        }
        switch (ch) {
            case '+': out.push_back({Tok::Plus, "+"}); break;
            case '-': out.push_back({Tok::Minus, "-"}); break;
            case '*': out.push_back({Tok::Star, "*"}); break;
            case '/': out.push_back({Tok::Slash, "/"}); break;
            case '^': out.push_back({Tok::Caret, "^"}); break;
            case ')': out.push_back({Tok::RParen, ")"}); break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "' in expression");
        }
        ++i;
    }
    out.push_back({Tok::End, ""});
    return out;
}

template <class F>
concept FieldHasC = requires(const F& f) { f.c(); };

template <class F>
concept FieldHasGen = requires(const F& f) { f.gen(); };

template <class F>
concept FieldHasEmbeddedGen = requires(const F& f) { f.embed(f.base.gen()); };

template <class K>
class Parser {
  public:
    using Field = typename K::Field;

    // taudim == 0 forbids tensor markers entirely (plain polynomial mode).
    Parser(Field F, int nvars, int taudim, std::string_view text)
        : F_(std::move(F)), nvars_(nvars), taudim_(taudim), toks_(lex(text)) {}

    Poly<K> run_poly() {
        Val v = parse_expr();
        expect(Tok::End, "trailing input after expression");
        if (v.t) throw ParseError("tensor vector given where a polynomial was expected");
        return *v.p;
    }

    VermaVector<K> run_verma() {
        Val v = parse_expr();
        expect(Tok::End, "trailing input after expression");
        if (v.t) return *v.t;
        if (taudim_ != 1)
            throw ParseError("expected tensor components \"poly (*) e<k>\" for a "
                             "lowest weight of dimension " + std::to_string(taudim_));
        VermaVector<K> r(F_, nvars_, 1);
        r[0] = *v.p;
        return r;
    }

  private:
    struct Val {
        std::optional<Poly<K>> p;
        std::optional<VermaVector<K>> t;
    };

    const Tok& peek() const { return toks_[pos_]; }
    Tok take() { return toks_[pos_++]; }
    void expect(typename Tok::Kind k, const char* what) {
        if (peek().kind != k) throw ParseError(what);
        ++pos_;
    }

    Val negate(Val v) {
        if (v.p) v.p = -*v.p;
        if (v.t) v.t = -*v.t;
        return v;
    }

    Val parse_expr() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            take();
            neg = true;
        }
        Val acc = parse_tterm();
        if (neg) acc = negate(acc);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = take().kind == Tok::Minus;
            Val rhs = parse_tterm();
            if (minus) rhs = negate(rhs);
            if (acc.p && rhs.p) {
                *acc.p += *rhs.p;
            } else if (acc.t && rhs.t) {
                *acc.t += *rhs.t;
            } else {
                throw ParseError("cannot add a polynomial to a tensor vector");
            }
        }
        return acc;
    }

    Val parse_tterm() {
        Poly<K> f = parse_prod();
        if (peek().kind != Tok::Tensor) return Val{std::move(f), std::nullopt};
        take();
        if (taudim_ <= 0) throw ParseError("tensor marker (*) not allowed here");
        const Tok e = take();
        if (e.kind != Tok::Ident || e.text.size() < 2 || e.text[0] != 'e')
            throw ParseError("expected basis marker e<k> after (*)");
        const int k = parse_index(e.text.substr(1), "tensor basis");
        if (k < 1 || k > taudim_)
            throw ParseError("tensor basis index out of range: " + e.text);
        VermaVector<K> v(F_, nvars_, taudim_);
        v[k - 1] = std::move(f);
        return Val{std::nullopt, std::move(v)};
    }

    Poly<K> parse_prod() {
        Poly<K> acc = parse_factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const bool div = take().kind == Tok::Slash;
            Poly<K> rhs = parse_factor();
            if (div) {
                const K d = constant_of(rhs, "divisor");
                if (d.is_zero()) throw DivisionByZero("division by zero in expression");
                acc = acc * d.inv();
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    Poly<K> parse_factor() {
        Poly<K> base = parse_base();
        if (peek().kind != Tok::Caret) return base;
        take();
        const Tok e = take();
        if (e.kind != Tok::Int) throw ParseError("expected integer exponent after ^");
        if (e.ival > 4096) throw ParseError("exponent too large");
        Poly<K> r = Poly<K>::constant(F_, nvars_, F_.one());
        for (std::uint64_t i = 0; i < e.ival; ++i) r = r * base;
        return r;
    }

    Poly<K> parse_base() {
        const Tok t = take();
        switch (t.kind) {
            case Tok::Int:
                return Poly<K>::constant(F_, nvars_, F_.from_int(static_cast<std::int64_t>(t.ival)));
            case Tok::Minus:
                return -parse_base();
            case Tok::LParen: {
                Val v = parse_expr();
                expect(Tok::RParen, "expected closing parenthesis");
                if (v.t) throw ParseError("tensor vector cannot appear inside parentheses");
                return *v.p;
            }
            case Tok::Ident:
                return ident_value(t.text);
            default:
                throw ParseError("unexpected token '" + t.text + "'");
        }
    }

    Poly<K> ident_value(const std::string& name) {
        if (name[0] == 'x' && name.size() > 1) {
            const int i = parse_index(name.substr(1), "variable");
            if (i < 1 || i > nvars_) throw ParseError("variable index out of range: " + name);
            return Poly<K>::variable(F_, nvars_, i - 1);
        }
        if (name == "c") {
            if constexpr (FieldHasC<Field>) {
                return Poly<K>::constant(F_, nvars_, F_.c());
            } else {
                throw ParseError("'c' is only available over rational-function coefficients");
            }
        }
        if (name == "z") {
            if constexpr (FieldHasGen<Field>) {
                return Poly<K>::constant(F_, nvars_, F_.gen());
            } else if constexpr (FieldHasEmbeddedGen<Field>) {
                return Poly<K>::constant(F_, nvars_, F_.embed(F_.base.gen()));
            } else {
                throw ParseError("'z' is only available over extension-field coefficients");
            }
        }
        if (name[0] == 'e')
            throw ParseError("basis marker '" + name + "' must follow (*)");
        throw ParseError("unknown name '" + name + "'");
    }

    static int parse_index(const std::string& digits, const char* what) {
        if (digits.empty()) throw ParseError(std::string("missing ") + what + " index");
        int v = 0;
        for (char ch : digits) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError(std::string("malformed ") + what + " index");
            v = v * 10 + (ch - '0');
            if (v > 1'000'000) throw ParseError(std::string(what) + " index too large");
        }
        return v;
    }

    static K constant_of(const Poly<K>& f, const char* what) {
        if (f.is_zero()) return f.field().zero();
        if (f.terms().size() != 1 || f.terms().begin()->first.degree() != 0)
            throw ParseError(std::string(what) + " must be a scalar");
        return f.terms().begin()->second;
    }

    Field F_;
    int nvars_;
    int taudim_;
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
};

} // namespace textio_detail

template <class K>
Poly<K> parse_poly(const typename K::Field& F, int nvars, std::string_view text) {
    return textio_detail::Parser<K>(F, nvars, 0, text).run_poly();
}

template <class K>
VermaVector<K> parse_verma(const typename K::Field& F, int nvars, int taudim,
                           std::string_view text) {
    return textio_detail::Parser<K>(F, nvars, taudim, text).run_verma();
}

} // namespace cherednik
