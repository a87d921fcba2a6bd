#pragma once

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/fp.hpp"
#include "cherednik/fq.hpp"
#include "cherednik/ratfunc.hpp"

namespace cherednik {

template <class K>
struct is_ratfunc : std::false_type {};
template <class B>
struct is_ratfunc<RatFunc<B>> : std::true_type {};

// Dense row-major matrix over an exact field K.
template <class K>
class Matrix {
  public:
    using Field = typename K::Field;

    Matrix(Field F, std::size_t rows, std::size_t cols)
        : F_(std::move(F)), rows_(rows), cols_(cols), a_(rows * cols, F_.zero()) {}

    static Matrix identity(Field F, std::size_t n) {
        Matrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.F_.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return F_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    bool is_zero() const {
        for (const K& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(F_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ArityMismatch("matrix product dimension mismatch");
        Matrix r(a.F_, a.rows_, b.cols_);
        if constexpr (std::is_same_v<K, Fp>) {
            // Lazy-reduction path: with p < 2^21 every product fits far below
            // 2^64, so a whole dot product reduces once.
            const std::uint64_t p = a.F_.characteristic();
            if (p < (1ull << 21)) {
                const Matrix bt = b.transpose();
                for (std::size_t i = 0; i < a.rows_; ++i)
                    for (std::size_t j = 0; j < b.cols_; ++j) {
                        std::uint64_t acc = 0;
                        const K* ra = &a.a_[i * a.cols_];
                        const K* rb = &bt.a_[j * bt.cols_];
                        for (std::size_t k = 0; k < a.cols_; ++k) acc += ra[k].value() * rb[k].value();
                        r(i, j) = Fp::raw(acc % p, p);
                    }
                return r;
            }
        }
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const { // M v
        if (v.size() != cols_) throw ArityMismatch("matrix apply dimension mismatch");
        std::vector<K> r(rows_, F_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }
    std::vector<K> apply_left(const std::vector<K>& v) const { // v^T M
        if (v.size() != rows_) throw ArityMismatch("matrix apply_left dimension mismatch");
        std::vector<K> r(cols_, F_.zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            if (v[i].is_zero()) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r[j] += v[i] * (*this)(i, j);
        }
        return r;
    }

    // Stack rows of `o` below this matrix.
    Matrix vstack(const Matrix& o) const {
        if (cols_ != o.cols_) throw ArityMismatch("vstack column mismatch");
        Matrix r(F_, rows_ + o.rows_, cols_);
        r.a_ = a_;
        r.a_.insert(r.a_.end(), o.a_.begin(), o.a_.end());
        return r;
    }

    static Matrix vstack(const std::vector<Matrix>& blocks) {
        if (blocks.empty()) throw InvalidInput("vstack: no blocks");
        Matrix r = blocks.front();
        for (std::size_t i = 1; i < blocks.size(); ++i) r = r.vstack(blocks[i]);
        return r;
    }

  private:
    Field F_;
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

template <class K>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<K>> kernel; // basis of {v : M v = 0}
};

// Plain reduced row echelon form over any exact field.  Returns the rank
// and a basis of the right kernel (one vector per free column).
template <class K>
RankKernel<K> rank_kernel_rref(Matrix<K> m) {
    const auto F = m.field();
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t pr = R;
        for (std::size_t i = r; i < R; ++i)
            if (!m(i, c).is_zero()) { pr = i; break; }
        if (pr == R) continue;
        if (pr != r)
            for (std::size_t j = c; j < C; ++j) std::swap(m(r, j), m(pr, j));
        const K pinv = m(r, c).inv();
        for (std::size_t j = c; j < C; ++j) m(r, j) = m(r, j) * pinv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const K f = m(i, c);
            for (std::size_t j = c; j < C; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    RankKernel<K> out;
    out.rank = pivots.size();
    std::vector<bool> is_pivot(C, false);
    for (auto [pr, pc] : pivots) is_pivot[pc] = true;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(C, F.zero());
        v[f] = F.one();
        for (auto [pr, pc] : pivots) v[pc] = -m(pr, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class K>
std::size_t rank_rref(const Matrix<K>& m) {
    return rank_kernel_rref(m).rank;
}

namespace detail {

// Evaluate a matrix over B(c) at c = gamma in an extension E of B.
// Throws DivisionByZero if any denominator vanishes at gamma.
template <class B, class E, class EmbedFn>
Matrix<E> eval_matrix(const Matrix<RatFunc<B>>& m, const typename E::Field& FE, const E& gamma, EmbedFn&& embed) {
    auto eval_poly = [&](const UPoly<B>& f) {
        E r = FE.zero();
        for (int i = f.degree(); i >= 0; --i) r = r * gamma + embed(f.coeff(i));
        return r;
    };
    Matrix<E> out(FE, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const RatFunc<B>& x = m(i, j);
            if (x.is_zero()) continue;
            const E d = eval_poly(x.den());
            if (d.is_zero()) throw DivisionByZero("matrix entry has a pole at evaluation point");
            out(i, j) = eval_poly(x.num()) / d;
        }
    return out;
}

// Deterministic full-rank certificate: rank at any evaluation point is a
// lower bound for the rank over B(c), so hitting min(rows, cols) settles
// the symbolic rank exactly.  Returns the best lower bound found.
inline std::size_t eval_rank_bound(const Matrix<RatFunc<Fp>>& m, int tries) {
    const std::uint64_t p = m.field().base.characteristic();
    unsigned k = 1;
    std::uint64_t q = p;
    while (q < 101) { q *= p; ++k; }
    const FqField FE = fq_field(p, k);
    std::size_t best = 0;
    std::uint64_t idx = 2;
    for (int t = 0; t < tries && idx < FE.q(); ++idx) {
        try {
            const Fq gamma = FE.element(idx);
            auto em = eval_matrix<Fp, Fq>(m, FE, gamma, [&](const Fp& a) { return FE.from_base(a); });
            best = std::max(best, rank_rref(em));
            ++t;
            if (best == std::min(m.rows(), m.cols())) return best;
        } catch (const DivisionByZero&) {
            // pole; try the next point
        }
    }
    return best;
}

inline std::size_t eval_rank_bound(const Matrix<RatFunc<Fq>>& m, int tries) {
    const FqField FE = m.field().base;
    std::size_t best = 0;
    std::uint64_t idx = 2;
    for (int t = 0; t < tries && idx < FE.q(); ++idx) {
        try {
            const Fq gamma = FE.element(idx);
            auto em = eval_matrix<Fq, Fq>(m, FE, gamma, [&](const Fq& a) { return a; });
            best = std::max(best, rank_rref(em));
            ++t;
            if (best == std::min(m.rows(), m.cols())) return best;
        } catch (const DivisionByZero&) {
        }
    }
    return best;
}

// Fraction-free (Bareiss) elimination of a polynomial matrix.  Entries of
// the echelon form are minors of the input, so every division is exact and
// denominators never appear until the final back-substitution.
template <class B>
struct BareissResult {
    std::size_t rank = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col) in echelon order
    std::vector<std::vector<UPoly<B>>> e;                    // echelon matrix
};

template <class B>
BareissResult<B> bareiss(std::vector<std::vector<UPoly<B>>> a) {
    BareissResult<B> out;
    if (a.empty()) return out;
    const std::size_t R = a.size(), C = a[0].size();
    const auto BF = a[0][0].base_field();
    UPoly<B> prev = UPoly<B>::constant(BF.one());
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        // pivot of minimal degree keeps intermediate growth down
        std::size_t pr = R;
        for (std::size_t i = r; i < R; ++i)
            if (!a[i][c].is_zero() && (pr == R || a[i][c].degree() < a[pr][c].degree())) pr = i;
        if (pr == R) continue;
        if (pr != r) std::swap(a[pr], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            if (a[i][c].is_zero()) {
                for (std::size_t j = c + 1; j < C; ++j)
                    if (!a[i][j].is_zero()) a[i][j] = (a[r][c] * a[i][j]).divexact(prev);
                continue;
            }
            for (std::size_t j = c + 1; j < C; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]).divexact(prev);
            a[i][c] = UPoly<B>(BF);
        }
        prev = a[r][c];
        out.pivots.emplace_back(r, c);
        ++r;
    }
    out.rank = r;
    out.e = std::move(a);
    return out;
}

template <class B>
RankKernel<RatFunc<B>> rank_kernel_fraction_free(const Matrix<RatFunc<B>>& m) {
    using K = RatFunc<B>;
    const auto F = m.field();
    const auto BF = F.base;
    const std::size_t R = m.rows(), C = m.cols();

    // Fast certificate: full column rank at one evaluation point means an
    // empty kernel symbolically.
    if (R >= C && C > 0) {
        if (eval_rank_bound(m, 3) == C) {
            RankKernel<K> out;
            out.rank = C;
            return out;
        }
    }

    // Clear denominators row by row (row scaling cannot change the kernel).
    std::vector<std::vector<UPoly<B>>> a(R, std::vector<UPoly<B>>(C, UPoly<B>(BF)));
    for (std::size_t i = 0; i < R; ++i) {
        UPoly<B> l = UPoly<B>::constant(BF.one());
        for (std::size_t j = 0; j < C; ++j) {
            const UPoly<B>& d = m(i, j).den();
            l = (l * d).divexact(UPoly<B>::gcd(l, d));
        }
        for (std::size_t j = 0; j < C; ++j)
            a[i][j] = m(i, j).num() * l.divexact(m(i, j).den());
    }

    auto res = bareiss(std::move(a));
    RankKernel<K> out;
    out.rank = res.rank;

    std::vector<bool> is_pivot(C, false);
    for (auto [pr, pc] : res.pivots) is_pivot[pc] = true;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(C, F.zero());
        v[f] = F.one();
        for (std::size_t s = res.pivots.size(); s-- > 0;) {
            auto [pr, pc] = res.pivots[s];
            K acc = F.zero();
            for (std::size_t j = pc + 1; j < C; ++j) {
                if (v[j].is_zero() || res.e[pr][j].is_zero()) continue;
                acc += F.embed_poly(res.e[pr][j]) * v[j];
            }
            v[pc] = -acc / F.embed_poly(res.e[pr][pc]);
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

// Rank and right-kernel basis.  Over a rational function field this runs
// fraction-free elimination on the cleared-denominator polynomial matrix;
// over F_p / F_q it is plain Gauss-Jordan.
template <class K>
RankKernel<K> rank_kernel(const Matrix<K>& m) {
    if constexpr (is_ratfunc<K>::value)
        return detail::rank_kernel_fraction_free(m);
    else
        return rank_kernel_rref(m);
}

// Rank only; cheaper than rank_kernel when the kernel is not needed.
template <class K>
std::size_t rank_of(const Matrix<K>& m) {
    if constexpr (is_ratfunc<K>::value) {
        const std::size_t cap = std::min(m.rows(), m.cols());
        if (cap == 0) return 0;
        const std::size_t lb = detail::eval_rank_bound(m, 3);
        if (lb == cap) return cap;
        return detail::rank_kernel_fraction_free(m).rank;
    } else {
        return rank_kernel_rref(m).rank;
    }
}

template <class K>
RankKernel<K> left_kernel(const Matrix<K>& m) {
    return rank_kernel(m.transpose());
}

} // namespace cherednik
