#pragma once
// Exact integer lattice tools over GMP integers: Hermite normal form with a
// unimodular transform (LLL-style size control, so the kernel rows of the
// transform come out short), integral LLL reduction with rational parameter,
// lattice basis size, fraction-free determinants, and rational reconstruction
// of vectors from their images modulo a prime.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "quadsys/matrix.hpp"
#include "quadsys/scalar.hpp"

namespace quadsys {

using Int = mpz_class;
using IntMat = Matrix<Int>;

namespace detail {

inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::size_t first_nonzero(const std::vector<Int>& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return j;
    return row.size();
}

}  // namespace detail

struct HermiteResult {
    IntMat h;  // Hermite normal form of the transpose of the input
    IntMat u;  // unimodular, u * transpose(input) = h
};

// Computes h, u with u unimodular and u * transpose(a) = h in Hermite normal
// form (pivot rows first, pivots positive, entries above each pivot reduced
// into [0, pivot)).  The bottom cols(a) - rank(a) rows of u form an
// LLL-reduced lattice basis of the integer right nullspace of a.
// Algorithm: Havas-Majewski-Matthews with Lovász parameter m1/n1.
inline HermiteResult hermite_with_transform(const IntMat& input, long m1 = 3,
                                            long n1 = 4) {
    const std::size_t m = input.cols();  // rows of the transpose
    const std::size_t n = input.rows();  // cols of the transpose
    std::vector<std::vector<Int>> a(m, std::vector<Int>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = input(j, i);
    std::vector<std::vector<Int>> B(m, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) B[i][i] = 1;
    std::vector<std::vector<Int>> lam(m, std::vector<Int>(m, 0));
    std::vector<Int> D(m + 1, 1);

    auto negate_row = [&](std::vector<Int>& r) {
        for (auto& x : r) x = -x;
    };
    auto minus = [&](std::size_t j) {
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < r; ++s)
                if (r == j || s == j) lam[r][s] = -lam[r][s];
    };

    auto reduce2 = [&](std::size_t k, std::size_t i) {
        std::size_t col1 = detail::first_nonzero(a[i]);
        if (col1 < n && a[i][col1] < 0) {
            minus(i);
            negate_row(a[i]);
            negate_row(B[i]);
        }
        Int q = 0;
        if (col1 < n) {
            q = detail::fdiv(a[k][col1], a[i][col1]);
        } else if (2 * abs(lam[k][i]) > D[i + 1]) {
            q = detail::fdiv(2 * lam[k][i] + D[i + 1], 2 * D[i + 1]);
        }
        if (q != 0) {
            for (std::size_t j = 0; j < n; ++j) a[k][j] -= q * a[i][j];
            for (std::size_t j = 0; j < m; ++j) B[k][j] -= q * B[i][j];
            lam[k][i] -= q * D[i + 1];
            for (std::size_t j = 0; j < i; ++j) lam[k][j] -= q * lam[i][j];
        }
        return std::make_pair(col1, detail::first_nonzero(a[k]));
    };

    auto swap2 = [&](std::size_t k) {
        std::swap(a[k], a[k - 1]);
        std::swap(B[k], B[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        for (std::size_t i = k + 1; i < m; ++i) {
            Int t = lam[i][k - 1] * D[k + 1] - lam[i][k] * lam[k][k - 1];
            lam[i][k - 1] =
                detail::fdiv(lam[i][k - 1] * lam[k][k - 1] + lam[i][k] * D[k - 1],
                             D[k]);
            lam[i][k] = detail::fdiv(t, D[k]);
        }
        D[k] = detail::fdiv(D[k - 1] * D[k + 1] + lam[k][k - 1] * lam[k][k - 1],
                            D[k]);
    };

    std::size_t k = 1;
    while (k < m) {
        auto [col1, col2] = reduce2(k, k - 1);
        if (col1 <= std::min(col2, n == 0 ? std::size_t(0) : n - 1) && col1 < n) {
            swap2(k);
            if (k > 1) --k;
        } else {
            if (col1 == n && col2 == n) {
                // Both rows map to zero: apply the Lovász exchange condition
                // so the kernel rows end up LLL-reduced.
                if (n1 * (D[k - 1] * D[k + 1] + lam[k][k - 1] * lam[k][k - 1]) <
                    m1 * D[k] * D[k]) {
                    swap2(k);
                    if (k > 1) --k;
                    continue;
                }
            }
            for (std::size_t i = k - 1; i-- > 0;) reduce2(k, i);
            ++k;
        }
    }

    // The loop leaves zero rows on top; present pivot rows first (sorted by
    // pivot column), zero rows last with their order preserved.
    std::vector<std::size_t> piv_rows, zero_rows;
    for (std::size_t i = 0; i < m; ++i)
        (detail::first_nonzero(a[i]) < n ? piv_rows : zero_rows).push_back(i);
    std::stable_sort(piv_rows.begin(), piv_rows.end(),
                     [&](std::size_t x, std::size_t y) {
                         return detail::first_nonzero(a[x]) <
                                detail::first_nonzero(a[y]);
                     });
    std::vector<std::size_t> order = piv_rows;
    order.insert(order.end(), zero_rows.begin(), zero_rows.end());

    HermiteResult res{IntMat(m, n), IntMat(m, m)};
    std::vector<std::vector<Int>> H, U;
    for (auto i : order) {
        H.push_back(a[i]);
        U.push_back(B[i]);
    }
    // Final cleanup on pivot rows: positive pivots, entries above each pivot
    // reduced into [0, pivot).  Kernel rows are left LLL-reduced as-is.
    const std::size_t r = piv_rows.size();
    for (std::size_t p = 0; p < r; ++p) {
        std::size_t c = detail::first_nonzero(H[p]);
        if (H[p][c] < 0) {
            negate_row(H[p]);
            negate_row(U[p]);
        }
    }
    for (std::size_t p = 0; p < r; ++p) {
        std::size_t c = detail::first_nonzero(H[p]);
        for (std::size_t s = 0; s < p; ++s) {
            Int q = detail::fdiv(H[s][c], H[p][c]);
            if (q != 0) {
                for (std::size_t j = 0; j < n; ++j) H[s][j] -= q * H[p][j];
                for (std::size_t j = 0; j < m; ++j) U[s][j] -= q * U[p][j];
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) res.h(i, j) = H[i][j];
        for (std::size_t j = 0; j < m; ++j) res.u(i, j) = U[i][j];
    }
    return res;
}

// Integer right-nullspace lattice basis of a: the bottom rows of the Hermite
// transform that correspond to zero rows of h.
inline IntMat integer_kernel_basis(const IntMat& a) {
    HermiteResult hr = hermite_with_transform(a);
    std::size_t rk = 0;
    for (std::size_t i = 0; i < hr.h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < hr.h.cols(); ++j)
            if (hr.h(i, j) != 0) { zero = false; break; }
        if (!zero) ++rk;
    }
    IntMat ker(hr.u.rows() - rk, hr.u.cols());
    for (std::size_t i = rk; i < hr.u.rows(); ++i)
        for (std::size_t j = 0; j < hr.u.cols(); ++j)
            ker(i - rk, j) = hr.u(i, j);
    return ker;
}

// Integral LLL (Cohen, Algorithm 2.6.3) on the rows of b, Lovász parameter
// delta = dp/dq.  Rows must be linearly independent.
inline IntMat lll_reduce(const IntMat& basis, long dp = 3, long dq = 4) {
    if (!(4 * dp > dq && dp < dq))
        throw std::invalid_argument("LLL parameter must lie in (1/4, 1)");
    const std::size_t nrows = basis.rows(), ncols = basis.cols();
    if (nrows <= 1) return basis;
    std::vector<std::vector<Int>> b(nrows, std::vector<Int>(ncols));
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) b[i][j] = basis(i, j);

    auto dot = [&](const std::vector<Int>& u, const std::vector<Int>& v) {
        Int s = 0;
        for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * v[j];
        return s;
    };

    std::vector<std::vector<Int>> lam(nrows, std::vector<Int>(nrows, 0));
    std::vector<Int> d(nrows + 1, 1);
    std::size_t kmax = 0;
    d[1] = dot(b[0], b[0]);

    auto red = [&](std::size_t k, std::size_t l) {
        if (2 * abs(lam[k][l]) > d[l + 1]) {
            Int r = detail::fdiv(2 * lam[k][l] + d[l + 1], 2 * d[l + 1]);
            for (std::size_t j = 0; j < ncols; ++j) b[k][j] -= r * b[l][j];
            lam[k][l] -= r * d[l + 1];
            for (std::size_t i = 0; i < l; ++i) lam[k][i] -= r * lam[l][i];
        }
    };

    auto swap = [&](std::size_t k) {
        std::swap(b[k], b[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int B = detail::fdiv(d[k - 1] * d[k + 1] + lam[k][k - 1] * lam[k][k - 1],
                             d[k]);
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            Int t = lam[i][k];
            lam[i][k] =
                detail::fdiv(lam[i][k - 1] * d[k + 1] - lam[k][k - 1] * t, d[k]);
            lam[i][k - 1] =
                detail::fdiv(B * t + lam[k][k - 1] * lam[i][k], d[k + 1]);
        }
        d[k] = B;
    };

    std::size_t k = 1;
    while (k < nrows) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 0; j <= k; ++j) {
                Int u = dot(b[k], b[j]);
                for (std::size_t i = 0; i < j; ++i)
                    u = detail::fdiv(d[i + 1] * u - lam[k][i] * lam[j][i], d[i]);
                if (j < k)
                    lam[k][j] = u;
                else
                    d[k + 1] = u;
            }
            if (d[k + 1] == 0)
                throw std::invalid_argument("LLL input rows are dependent");
        }
        red(k, k - 1);
        if (dq * d[k + 1] * d[k - 1] <
            dp * d[k] * d[k] - dq * lam[k][k - 1] * lam[k][k - 1]) {
            swap(k);
            k = std::max<std::size_t>(1, k - 1);
        } else {
            for (std::size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }

    IntMat out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) out(i, j) = b[i][j];
    return out;
}

// Sum over rows of log10 of the Euclidean length.  The only place floating
// point is allowed; all inputs are exact integers.
inline double lattice_basis_size(const IntMat& b) {
    double total = 0.0;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        Int n2 = 0;
        for (std::size_t j = 0; j < b.cols(); ++j) n2 += b(i, j) * b(i, j);
        if (n2 == 0) throw std::invalid_argument("zero row has no length");
        long e2 = 0;
        double mant = mpz_get_d_2exp(&e2, n2.get_mpz_t());
        total += 0.5 * (std::log2(mant) + static_cast<double>(e2)) *
                 0.30102999566398119521;  // log10(2)
    }
    return total;
}

// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Rational reconstruction

struct Reconstruction {
    std::vector<Rat> rationals;   // residues lifted to rationals
    std::vector<Int> integers;    // shortest integral multiple of the above
};

namespace detail {

inline Int symmetric_lift(const Int& r, const Int& p) {
    Int x = r % p;
    if (x < 0) x += p;
    if (2 * x > p) x -= p;
    return x;
}

// Balanced reconstruction bound: numerator and denominator both at most
// floor(sqrt((p-1)/2)), so that n/d is the unique fraction within bounds
// congruent to the residue (2*N*D < p).
inline Int balanced_bound(const Int& p) { return sqrt((p - 1) / 2); }

// Wang-style extended-Euclid reconstruction of n/d within the balanced bound.
inline bool wang_reconstruct(const Int& residue, const Int& p, Rat& out) {
    Int bound = balanced_bound(p);
    Int r0 = p, r1 = residue % p, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += p;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0) return false;
    Int num = r1, den = t1;
    if (den < 0) { num = -num; den = -den; }
    if (den > bound) return false;
    Int g = gcd(num, den);
    if (g > 1) return false;  // lift must already be in lowest terms
    out = Rat(num) / Rat(den);
    return true;
}

}  // namespace detail

// Reconstructs a rational vector from its residues modulo p.  Primary route:
// scan candidate common denominators d (the clustering of residues near the
// classes of i/d); d is accepted when every entry's symmetric lift of
// d*residue, reduced to lowest terms, satisfies the balanced bounds
// |numerator|, denominator <= floor(sqrt((p-1)/2)).  Fallback: per-entry
// extended-Euclid reconstruction.  The integer vector is the rationals scaled
// by the lcm of denominators and divided by the gcd of numerators.
inline Reconstruction rational_reconstruct(const std::vector<Int>& residues,
                                           const Int& p,
                                           long max_denominator = 64) {
    const std::size_t n = residues.size();
    const Int bound = detail::balanced_bound(p);
    std::vector<Rat> rats(n);
    bool done = false;
    for (long d = 1; d <= max_denominator && !done; ++d) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Int num = detail::symmetric_lift(residues[i] * d, p);
            Int g = gcd(num, Int(d));
            Int nr = num / g, dr = Int(d) / g;
            if (abs(nr) > bound || dr > bound) {
                ok = false;
                break;
            }
            rats[i] = Rat(nr) / Rat(dr);
        }
        done = ok;
    }
    if (!done) {
        for (std::size_t i = 0; i < n; ++i)
            if (!detail::wang_reconstruct(residues[i], p, rats[i]))
                throw std::domain_error("rational reconstruction failed");
    }
    // Verification by re-reduction mod p.
    for (std::size_t i = 0; i < n; ++i) {
        Int den = rats[i].get_den();
        Int dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("rational reconstruction failed");
        Int back = (rats[i].get_num() * dinv - residues[i]) % p;
        if (back != 0)
            throw std::domain_error("rational reconstruction failed");
    }
    Reconstruction out;
    out.rationals = rats;
    Int l = 1, g = 0;
    for (const auto& q : rats) l = lcm(l, Int(q.get_den()));
    out.integers.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.integers[i] = Int(rats[i].get_num()) * (l / Int(rats[i].get_den()));
        g = gcd(g, out.integers[i]);
    }
    if (g > 1)
        for (auto& x : out.integers) x /= g;
    return out;
}

// Reduces a rational vector modulo p (denominators inverted mod p).  Used for
// the two-prime verification of reconstructed vectors.
inline std::vector<Int> reduce_mod(const std::vector<Rat>& v, const Int& p) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int den = v[i].get_den();
        Int dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("denominator not invertible mod p");
        Int r = (Int(v[i].get_num()) * dinv) % p;
        if (r < 0) r += p;
        out[i] = r;
    }
    return out;
}

}  // namespace quadsys
