#pragma once
// Dense exact matrices over a field scalar (Fp, Rat, Quad<D>) with
// deterministic row reduction: row canonical form (reduced row echelon with
// zero rows removed), rank, canonical right-nullspace bases, product and
// inverse, and a plain-text serialization.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadsys/fp.hpp"
#include "quadsys/scalar.hpp"

namespace quadsys {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_) throw std::invalid_argument("ragged rows");
            for (long x : r) a_.emplace_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    T* row_data(std::size_t i) { return a_.data() + i * cols_; }
    const T* row_data(std::size_t i) const { return a_.data() + i * cols_; }

    void append_row(const std::vector<T>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("row width mismatch");
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T(0)) continue;
            const T* brow = b.row_data(k);
            T* crow = c.row_data(i);
            for (std::size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
        }
    return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("shape mismatch");
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("shape mismatch");
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

namespace detail {

// Fast prime-field reduction with deferred modular arithmetic: rows are
// absorbed into an echelon set with lazy uint64 accumulation, then fully
// reduced bottom-up.  Valid when cols * (p-1)^2 stays below 2^63.
inline std::vector<std::size_t> reduce_in_place_fp(Matrix<Fp>& m) {
    const std::uint64_t p = fp_modulus();
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::size_t> pivcol;
    std::vector<long> pivot_of_col(C, -1);
    std::vector<std::uint64_t> work(C);

    for (std::size_t i = 0; i < R; ++i) {
        const Fp* src = m.row_data(i);
        for (std::size_t j = 0; j < C; ++j) work[j] = src[j].value();
        for (std::size_t j = 0; j < C; ++j) {
            std::uint64_t c = work[j] % p;
            if (c == 0) continue;
            long pr = pivot_of_col[j];
            if (pr < 0) {
                std::uint64_t inv = mod_inv(c, p);
                std::vector<std::uint32_t> row(C, 0);
                row[j] = 1;
                for (std::size_t k = j + 1; k < C; ++k) {
                    std::uint64_t x = work[k] % p;
                    row[k] = static_cast<std::uint32_t>(
                        (static_cast<unsigned __int128>(x) * inv) % p);
                }
                pivot_of_col[j] = static_cast<long>(rows.size());
                pivcol.push_back(j);
                rows.push_back(std::move(row));
                break;
            }
            const std::uint32_t* prow = rows[static_cast<std::size_t>(pr)].data();
            const std::uint64_t mul = p - c;
            for (std::size_t k = j + 1; k < C; ++k) work[k] += mul * prow[k];
            work[j] = 0;
        }
    }

    // order echelon rows by pivot column, then eliminate above the pivots
    // from the bottom up (rows below are already fully reduced when used)
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivcol[a] < pivcol[b]; });
    const std::size_t nr = order.size();
    for (std::size_t ii = nr; ii-- > 0;) {
        auto& row = rows[order[ii]];
        const std::size_t c0 = pivcol[order[ii]];
        for (std::size_t j = 0; j < C; ++j) work[j] = 0;
        for (std::size_t j = c0; j < C; ++j) work[j] = row[j];
        for (std::size_t kk = ii + 1; kk < nr; ++kk) {
            const std::size_t ck = pivcol[order[kk]];
            std::uint64_t f = work[ck] % p;
            if (f == 0) continue;
            const std::uint32_t* prow = rows[order[kk]].data();
            const std::uint64_t mul = p - f;
            for (std::size_t j = ck; j < C; ++j) work[j] += mul * prow[j];
        }
        for (std::size_t j = c0; j < C; ++j)
            row[j] = static_cast<std::uint32_t>(work[j] % p);
    }

    for (std::size_t i = 0; i < R; ++i) {
        Fp* dst = m.row_data(i);
        if (i < nr) {
            const auto& row = rows[order[i]];
            for (std::size_t j = 0; j < C; ++j) dst[j] = Fp::from_raw(row[j]);
        } else {
            for (std::size_t j = 0; j < C; ++j) dst[j] = Fp(0);
        }
    }
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < nr; ++i) pivots.push_back(pivcol[order[i]]);
    return pivots;
}

}  // namespace detail

// In-place Gauss-Jordan to reduced row echelon form.  Pivot choice is
// deterministic: scan columns left to right, take the first row (top-down)
// with a nonzero entry.  Returns the pivot columns.
template <class T>
std::vector<std::size_t> reduce_in_place(Matrix<T>& m) {
    if constexpr (std::is_same_v<T, Fp>) {
        const unsigned __int128 lim =
            (static_cast<unsigned __int128>(1) << 63);
        unsigned __int128 worst =
            static_cast<unsigned __int128>(fp_modulus() - 1) *
            (fp_modulus() - 1) * (m.cols() ? m.cols() : 1);
        if (worst < lim) return detail::reduce_in_place_fp(m);
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c) == T(0)) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(r, j), m(sel, j));
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            T f = m(i, c);
            if (f == T(0)) continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Reduced row echelon form with zero rows removed, plus the rank.
template <class T>
std::pair<Matrix<T>, std::size_t> row_canonical_form(Matrix<T> m) {
    auto pivots = reduce_in_place(m);
    Matrix<T> out(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return {std::move(out), pivots.size()};
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return reduce_in_place(m).size();
}

// Canonical basis of {x : m x = 0}, one row per basis vector: free variables
// are set to standard basis vectors in column order and the leading variables
// solved from the reduced form; the resulting rows are then put in row
// canonical form.
template <class T>
Matrix<T> nullspace_basis(Matrix<T> m) {
    const std::size_t n = m.cols();
    auto pivots = reduce_in_place(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix<T> basis(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(n, T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m(i, f);
        basis.append_row(v);
    }
    reduce_in_place(basis);
    return basis;
}

// Exact solution of a x = b with free variables set to zero; nullopt when the
// system is inconsistent.  The solution is unique when a has full column rank.
template <class T>
std::optional<std::vector<T>> solve_unique(const Matrix<T>& a,
                                           const std::vector<T>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs size mismatch");
    const std::size_t n = a.cols();
    Matrix<T> aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto piv = reduce_in_place(aug);
    std::vector<T> x(n, T(0));
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == n) return std::nullopt;
        x[piv[i]] = aug(i, n);
    }
    return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("not square");
    const std::size_t n = m.rows();
    Matrix<T> w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
        w(i, n + i) = T(1);
    }
    auto piv = reduce_in_place(w);
    if (piv.size() != n || piv.back() != n - 1)
        throw std::domain_error("matrix is singular");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = w(i, n + j);
    return inv;
}

namespace detail {
inline const char* domain_tag(const Fp*) { return "modular"; }
inline const char* domain_tag(const Rat*) { return "rational"; }
template <long D>
const char* domain_tag(const Quad<D>*) { return "quadratic"; }

inline Fp scalar_from_string(const std::string& s, const Fp*) {
    return Fp(std::stoll(s));
}
inline Rat scalar_from_string(const std::string& s, const Rat*) {
    return rat_from_string(s);
}
template <long D>
Quad<D> scalar_from_string(const std::string& s, const Quad<D>*) {
    return quad_from_string<D>(s);
}
}  // namespace detail

// Plain-text format: header "rows cols domain", then one line per row with
// space-separated entries (rationals as num/den, quadratic entries as
// num/den+num/den*sqrt(D)).
template <class T>
void write_matrix(std::ostream& os, const Matrix<T>& m) {
    os << m.rows() << ' ' << m.cols() << ' '
       << detail::domain_tag(static_cast<const T*>(nullptr));
    if constexpr (std::is_same_v<T, Fp>) os << ':' << fp_modulus();
    os << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << to_string(m(i, j));
        }
        os << '\n';
    }
}

template <class T>
Matrix<T> read_matrix(std::istream& is) {
    std::size_t rows, cols;
    std::string domain;
    if (!(is >> rows >> cols >> domain))
        throw std::invalid_argument("bad matrix header");
    std::string expect = detail::domain_tag(static_cast<const T*>(nullptr));
    if (domain.substr(0, expect.size()) != expect)
        throw std::invalid_argument("domain mismatch: " + domain);
    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok)) throw std::invalid_argument("truncated matrix");
            m(i, j) = detail::scalar_from_string(tok, static_cast<const T*>(nullptr));
        }
    return m;
}

template <class T>
std::string matrix_to_string(const Matrix<T>& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

}  // namespace quadsys
