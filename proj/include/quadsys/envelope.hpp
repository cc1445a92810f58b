#pragma once
// Universal associative envelopes of (anti-)Jordan quadruple systems built
// from the four block-matrix families A, B, C, D and their minus variants:
// defining relations, Groebner-based standard monomial bases, finite
// multiplication tables, and Wedderburn analysis (Dickson radical test,
// center, idempotent splitting with at most one quadratic extension by
// sqrt(-3), simple-ideal dimensions, matrix-unit isomorphisms).

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadsys/free_algebra.hpp"
#include "quadsys/groebner.hpp"
#include "quadsys/matrix.hpp"
#include "quadsys/ncpoly.hpp"

namespace quadsys {

// All splitting-field arithmetic lives in Q(sqrt(-3)); rationals embed with a
// zero radical part.  The extension is global per algebra: once adjoined,
// every subsequent quantity (idempotents, ideal ranks, matrix units) uses it.
using Split = Quad<-3>;

// ---------------------------------------------------------------------------
// Quadruple systems from the matrix families.

class QuadSystem {
  public:
    std::string name;                 // compact family name, e.g. "D11", "C-111"
    Op op = Op::tetrad;
    std::string alphabet;             // one generator letter per basis element
    std::size_t matrix_size = 0;      // the defining matrices are n x n
    std::vector<Matrix<Rat>> basis;   // defining matrices, in presentation order

    std::size_t dim() const { return basis.size(); }

    // Coordinates of the quadruple product {b_i,b_j,b_k,b_l} (or the bracket
    // for anti systems) in the basis.
    const std::vector<Rat>& quad(std::size_t i, std::size_t j, std::size_t k,
                                 std::size_t l) const {
        const std::size_t d = dim();
        return quad_coords_[((i * d + j) * d + k) * d + l];
    }

    std::vector<std::vector<Rat>> quad_coords_;  // filled by family()
};

namespace detail {

inline Matrix<Rat> matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix<Rat> m(n, n);
    m(i - 1, j - 1) = Rat(1);  // 1-based indices mirror the block formulas
    return m;
}

inline std::vector<Rat> vectorize(const Matrix<Rat>& m) {
    std::vector<Rat> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

}  // namespace detail

// Construct one of the eight families of finite-dimensional quadruple
// systems.  kind is 'A', 'B', 'C' or 'D'; minus selects the anti variant.
// Arity: A and B take one parameter, C three (p >= q and p >= r), D two.
inline QuadSystem family(char kind, bool minus, const std::vector<int>& params) {
    for (int p : params)
        if (p < 1) throw std::invalid_argument("family parameters must be >= 1");
    const std::size_t arity = (kind == 'A' || kind == 'B') ? 1
                              : (kind == 'C')              ? 3
                              : (kind == 'D')              ? 2
                                                           : 0;
    if (arity == 0) throw std::invalid_argument(std::string("unknown family ") + kind);
    if (params.size() != arity)
        throw std::invalid_argument(std::string("family ") + kind + " takes " +
                                    std::to_string(arity) + " parameter(s)");

    QuadSystem js;
    js.op = minus ? Op::anti_tetrad : Op::tetrad;
    js.name = std::string(1, kind) + (minus ? "-" : "");
    for (int p : params) js.name += std::to_string(p);

    auto E = detail::matrix_unit;
    std::size_t n = 0;
    std::size_t expected_dim = 0;
    if (kind == 'A') {
        n = static_cast<std::size_t>(params[0]);
        expected_dim = n * n;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) js.basis.push_back(E(n, i, j));
    } else if (kind == 'B') {
        n = static_cast<std::size_t>(params[0]);
        if (!minus) {
            expected_dim = n * (n + 1) / 2;
            for (std::size_t i = 1; i <= n; ++i) js.basis.push_back(E(n, i, i));
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j)
                    js.basis.push_back(E(n, i, j) + E(n, j, i));
        } else {
            expected_dim = n * (n - 1) / 2;
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j)
                    js.basis.push_back(E(n, j, i) - E(n, i, j));
        }
    } else if (kind == 'C') {
        const std::size_t p = static_cast<std::size_t>(params[0]);
        const std::size_t q = static_cast<std::size_t>(params[1]);
        const std::size_t r = static_cast<std::size_t>(params[2]);
        if (p < q || p < r)
            throw std::invalid_argument("family C needs p >= q and p >= r");
        n = p + q + r;
        expected_dim = p * q + q * r + r * p;
        for (std::size_t j = 1; j <= q; ++j)
            for (std::size_t i = 1; i <= p; ++i) js.basis.push_back(E(n, p + j, i));
        for (std::size_t k = 1; k <= r; ++k)
            for (std::size_t j = 1; j <= q; ++j)
                js.basis.push_back(E(n, p + q + k, p + j));
        for (std::size_t i = 1; i <= p; ++i)
            for (std::size_t k = 1; k <= r; ++k)
                js.basis.push_back(E(n, i, p + q + k));
    } else {  // 'D'
        const std::size_t p = static_cast<std::size_t>(params[0]);
        const std::size_t q = static_cast<std::size_t>(params[1]);
        n = p + 2 * q;
        if (!minus) {
            expected_dim = p * q + q * (q + 1) / 2;
            for (std::size_t j = 1; j <= q; ++j)
                for (std::size_t i = 1; i <= p; ++i)
                    js.basis.push_back(E(n, p + j, i) + E(n, i, p + q + j));
            for (std::size_t j = 1; j <= q; ++j)
                for (std::size_t k = 1; k <= j; ++k)
                    js.basis.push_back(k == j ? E(n, p + q + j, p + j)
                                              : E(n, p + q + j, p + k) +
                                                    E(n, p + q + k, p + j));
        } else {
            expected_dim = p * q + q * (q - 1) / 2;
            for (std::size_t j = 1; j <= q; ++j)
                for (std::size_t i = 1; i <= p; ++i)
                    js.basis.push_back(E(n, p + j, i) - E(n, i, p + q + j));
            for (std::size_t j = 1; j <= q; ++j)
                for (std::size_t k = 1; k + 1 <= j; ++k)
                    js.basis.push_back(E(n, p + q + j, p + k) -
                                       E(n, p + q + k, p + j));
        }
    }
    js.matrix_size = n;
    if (js.basis.size() != expected_dim)
        throw std::logic_error("family dimension formula violated");

    const std::size_t d = js.basis.size();
    if (d > 26)
        throw std::invalid_argument("system dimension exceeds the letter alphabet");
    for (std::size_t i = 0; i < d; ++i)
        js.alphabet += static_cast<char>('a' + i);

    // Quadrilinear structure constants, verified to close into the span.
    Matrix<Rat> span(n * n, d);
    for (std::size_t t = 0; t < d; ++t) {
        auto col = detail::vectorize(js.basis[t]);
        for (std::size_t r = 0; r < n * n; ++r) span(r, t) = col[r];
    }
    const int sign = op_sign(js.op);
    js.quad_coords_.reserve(d * d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Matrix<Rat> fwd =
                        js.basis[i] * js.basis[j] * js.basis[k] * js.basis[l];
                    Matrix<Rat> bwd =
                        js.basis[l] * js.basis[k] * js.basis[j] * js.basis[i];
                    Matrix<Rat> prod =
                        sign > 0 ? fwd + bwd : fwd - bwd;
                    auto coords = solve_unique(span, detail::vectorize(prod));
                    if (!coords)
                        throw std::logic_error("quadruple product leaves the span");
                    js.quad_coords_.push_back(std::move(*coords));
                }
    // (anti)symmetry of the constants under argument reversal
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    const auto& f = js.quad(i, j, k, l);
                    const auto& b = js.quad(l, k, j, i);
                    for (std::size_t m = 0; m < d; ++m)
                        if (b[m] != Rat(sign) * f[m])
                            throw std::logic_error(
                                "structure constants violate reversal symmetry");
                }
    return js;
}

// Compact name grammar: family letter, optional '-', one digit per parameter
// ("C111" -> C(1,1,1), "D-21" -> minus D(2,1)).
inline QuadSystem family(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty system name");
    char kind = name[0];
    std::size_t pos = 1;
    bool minus = pos < name.size() && name[pos] == '-';
    if (minus) ++pos;
    std::vector<int> params;
    for (; pos < name.size(); ++pos) {
        if (name[pos] < '0' || name[pos] > '9')
            throw std::invalid_argument("bad system name: " + name);
        params.push_back(name[pos] - '0');
    }
    if (params.empty())
        throw std::invalid_argument("system name lacks parameters: " + name);
    QuadSystem js = family(kind, minus, params);
    js.name = name;  // preserve the exact spelling used by the caller
    return js;
}

// ---------------------------------------------------------------------------
// Defining relations and the envelope presentation.

// One relation per argument quadruple (i,j,k,l): the word ijkl, plus the
// reversed word with the operation's sign, minus the expansion of the
// quadruple product in the generators; returned self-reduced.
inline std::vector<NCPoly> relations(const QuadSystem& js) {
    const std::size_t d = js.dim();
    const int sign = op_sign(js.op);
    std::vector<NCPoly> raw;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    NCPoly f;
                    NCWord w{static_cast<int>(i), static_cast<int>(j),
                             static_cast<int>(k), static_cast<int>(l)};
                    NCWord r{static_cast<int>(l), static_cast<int>(k),
                             static_cast<int>(j), static_cast<int>(i)};
                    f[w] += Rat(1);
                    f[r] += Rat(sign);
                    const auto& c = js.quad(i, j, k, l);
                    for (std::size_t m = 0; m < d; ++m)
                        if (c[m] != 0) f[NCWord{static_cast<int>(m)}] -= c[m];
                    for (auto it = f.begin(); it != f.end();)
                        it = it->second == 0 ? f.erase(it) : std::next(it);
                    if (!f.empty()) raw.push_back(std::move(f));
                }
    return self_reduce(raw);
}

struct Envelope {
    GroebnerBasis gb;
    bool finite = false;
    std::vector<NCWord> monomials;     // finite case: standard monomials, deglex
    std::vector<std::size_t> graded;   // dimensions by degree (0..bound)
};

// Quotient of the free algebra on the system's generators by its relations.
// With a complete Groebner basis the quotient is reported either as the full
// standard-monomial list (finite case) or as a graded dimension series.
inline Envelope envelope(const QuadSystem& js,
                         std::optional<int> degree_bound = std::nullopt,
                         int graded_up_to = 12) {
    Envelope env;
    const int letters = static_cast<int>(js.dim());
    env.gb = groebner_basis(relations(js), degree_bound);
    env.finite = is_finite_dimensional(env.gb, letters);
    if (env.finite) {
        env.monomials = standard_monomials(env.gb, letters);
        std::size_t longest = 0;
        for (const auto& w : env.monomials) longest = std::max(longest, w.size());
        env.graded.assign(longest + 1, 0);
        for (const auto& w : env.monomials) ++env.graded[w.size()];
    } else {
        env.graded = graded_dimensions(env.gb, letters, graded_up_to);
    }
    return env;
}

// ---------------------------------------------------------------------------
// Finite multiplication tables.

class FiniteAlgebra {
  public:
    std::string name;
    std::string alphabet;
    std::vector<NCWord> words;                    // deglex order, words[0] = 1
    std::vector<std::vector<std::vector<Rat>>> c; // c[i][j] = coords of w_i w_j

    std::size_t dim() const { return words.size(); }

    std::size_t index_of(const NCWord& w) const {
        auto it = std::lower_bound(words.begin(), words.end(), w, DeglexLess{});
        if (it == words.end() || *it != w)
            throw std::invalid_argument("word is not a standard monomial");
        return static_cast<std::size_t>(it - words.begin());
    }
};

template <class K>
std::vector<K> basis_vector(const FiniteAlgebra& a, std::size_t i) {
    std::vector<K> v(a.dim(), K(0));
    v[i] = K(1);
    return v;
}

template <class K>
std::vector<K> algebra_one(const FiniteAlgebra& a) {
    return basis_vector<K>(a, 0);
}

template <class K>
std::vector<K> algebra_product(const FiniteAlgebra& a, const std::vector<K>& x,
                               const std::vector<K>& y) {
    const std::size_t d = a.dim();
    std::vector<K> out(d, K(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i] == K(0)) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j] == K(0)) continue;
            K f = x[i] * y[j];
            const auto& cij = a.c[i][j];
            for (std::size_t k = 0; k < d; ++k)
                if (cij[k] != 0) out[k] += f * K(cij[k]);
        }
    }
    return out;
}

// Structure constants on the standard monomials: c_ij = normal form of the
// concatenated words.  The identity axioms and associativity on all basis
// triples are verified exhaustively.
inline FiniteAlgebra multiplication_table(const GroebnerBasis& gb,
                                          const std::vector<NCWord>& monomials,
                                          std::string name = "",
                                          std::string alphabet = "") {
    if (monomials.empty() || !monomials.front().empty())
        throw std::invalid_argument("standard monomials must start with 1");
    FiniteAlgebra a;
    a.name = std::move(name);
    a.alphabet = std::move(alphabet);
    a.words = monomials;
    const std::size_t d = a.words.size();
    std::map<NCWord, std::size_t, DeglexLess> index;
    for (std::size_t i = 0; i < d; ++i) index[a.words[i]] = i;

    a.c.assign(d, std::vector<std::vector<Rat>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            NCWord uv = a.words[i];
            uv.insert(uv.end(), a.words[j].begin(), a.words[j].end());
            NCPoly f;
            f[std::move(uv)] = Rat(1);
            NCPoly nf = normal_form(f, gb.rules);
            std::vector<Rat> vec(d, Rat(0));
            for (const auto& [w, coeff] : nf) {
                auto it = index.find(w);
                if (it == index.end())
                    throw std::logic_error("normal form leaves the monomial basis");
                vec[it->second] = coeff;
            }
            a.c[i][j] = std::move(vec);
        }

    for (std::size_t j = 0; j < d; ++j) {
        if (a.c[0][j] != basis_vector<Rat>(a, j) ||
            a.c[j][0] != basis_vector<Rat>(a, j))
            throw std::logic_error("1 is not a two-sided identity");
    }
    // associativity on all triples, skipping zero structure constants
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto& cij = a.c[i][j];
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<Rat> lhs(d, Rat(0)), rhs(d, Rat(0));
                for (std::size_t m = 0; m < d; ++m)
                    if (cij[m] != 0) {
                        const auto& cmk = a.c[m][k];
                        for (std::size_t t = 0; t < d; ++t)
                            if (cmk[t] != 0) lhs[t] += cij[m] * cmk[t];
                    }
                const auto& cjk = a.c[j][k];
                for (std::size_t m = 0; m < d; ++m)
                    if (cjk[m] != 0) {
                        const auto& cim = a.c[i][m];
                        for (std::size_t t = 0; t < d; ++t)
                            if (cim[t] != 0) rhs[t] += cjk[m] * cim[t];
                    }
                if (lhs != rhs)
                    throw std::logic_error("multiplication table is not associative");
            }
        }
    return a;
}

// ---------------------------------------------------------------------------
// Dickson radical and center.

// Delta_ij = sum_k c_ji^k T_k with T_k = sum_l c_kl^l (the trace form).
inline Matrix<Rat> dickson_matrix(const FiniteAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<Rat> trace(d, Rat(0));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) trace[k] += a.c[k][l][l];
    Matrix<Rat> delta(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rat s(0);
            for (std::size_t k = 0; k < d; ++k)
                if (a.c[j][i][k] != 0) s += a.c[j][i][k] * trace[k];
            delta(i, j) = s;
        }
    return delta;
}

struct DicksonResult {
    Matrix<Rat> matrix;
    Matrix<Rat> radical;   // RCF basis of the nullspace
    bool semisimple = false;
};

inline DicksonResult dickson_radical(const FiniteAlgebra& a) {
    DicksonResult r;
    r.matrix = dickson_matrix(a);
    r.radical = nullspace_basis(r.matrix);
    r.semisimple = r.radical.rows() == 0;
    return r;
}

// RCF basis of {x : x b_j = b_j x for all j}, from the stacked commutator
// systems (one row per pair (j,k) with some nonzero entry).
inline Matrix<Rat> center(const FiniteAlgebra& a) {
    const std::size_t d = a.dim();
    Matrix<Rat> rows(0, d);
    std::vector<Rat> row(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            bool nonzero = false;
            for (std::size_t i = 0; i < d; ++i) {
                row[i] = a.c[i][j][k] - a.c[j][i][k];
                if (row[i] != 0) nonzero = true;
            }
            if (nonzero) rows.append_row(row);
        }
    return nullspace_basis(rows);
}

// ---------------------------------------------------------------------------
// Center splitting over Q(sqrt(-3)).

// Ratio c with x = c*e, when x is a scalar multiple of e (c may be zero).
template <class K>
std::optional<K> scalar_ratio(const std::vector<K>& x, const std::vector<K>& e) {
    std::optional<K> ratio;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != K(0)) {
            K r = x[i] / e[i];
            if (!ratio)
                ratio = r;
            else if (*ratio != r)
                return std::nullopt;
        } else if (x[i] != K(0)) {
            return std::nullopt;
        }
    }
    return ratio ? ratio : std::optional<K>(K(0));
}

// Monic minimal polynomial of x on the summand with identity e: the least k
// with x^k in span(e, x, ..., x^(k-1)), powers taken relative to e.  Returns
// ascending coefficients c_0..c_k with c_k = 1.
inline std::vector<Split> minimal_polynomial(const FiniteAlgebra& a,
                                             const std::vector<Split>& e,
                                             const std::vector<Split>& x) {
    const std::size_t d = a.dim();
    std::vector<std::vector<Split>> powers{e};
    while (powers.size() <= d + 1) {
        std::vector<Split> nxt = algebra_product(a, powers.back(), x);
        Matrix<Split> cols(d, powers.size());
        for (std::size_t j = 0; j < powers.size(); ++j)
            for (std::size_t i = 0; i < d; ++i) cols(i, j) = powers[j][i];
        if (auto y = solve_unique(cols, nxt)) {
            std::vector<Split> coeffs;
            coeffs.reserve(y->size() + 1);
            for (const auto& v : *y) coeffs.push_back(-v);
            coeffs.push_back(Split(1));
            return coeffs;
        }
        powers.push_back(std::move(nxt));
    }
    throw std::logic_error("minimal polynomial exceeds the algebra dimension");
}

// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<Rat> exact_rational_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn);
    r /= Rat(rd);
    return r;
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class v) {
    if (v < 0) v = -v;
    if (v == 0) throw std::invalid_argument("divisors of zero");
    if (!v.fits_ulong_p())
        throw std::domain_error(
            "unsupported-extension: constant term too large to factor");
    unsigned long n = v.get_ui();
    std::vector<mpz_class> divs;
    for (unsigned long i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        divs.emplace_back(i);
        if (i != n / i) divs.emplace_back(n / i);
    }
    return divs;
}

inline Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& t) {
    Rat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

// Synthetic division of a monic polynomial by (t - r); stays monic.
inline std::vector<Rat> deflate(const std::vector<Rat>& coeffs, const Rat& r) {
    std::vector<Rat> out(coeffs.size() - 1);
    Rat carry(0);
    for (std::size_t i = coeffs.size(); i-- > 1;) {
        carry = coeffs[i] + carry * r;
        out[i - 1] = carry;
    }
    return out;
}

}  // namespace detail

struct RootList {
    std::vector<Split> roots;
    bool extension_used = false;
};

// Roots of a monic squarefree rational polynomial whose irreducible factors
// are linear or a single quadratic with discriminant -3 s^2.  Root order is
// pinned: rational roots ascending, then per quadratic (sorted by its
// coefficients) the root with negative radical part first.  Anything beyond
// that factor shape throws "unsupported-extension"; the shipped families only
// ever produce residual factors of degree <= 2.
inline RootList polynomial_roots_split(const std::vector<Rat>& monic) {
    if (monic.size() < 2 || monic.back() != 1)
        throw std::invalid_argument("expected a monic polynomial of degree >= 1");
    std::vector<Rat> work = monic;
    std::vector<Rat> rationals;
    while (work.size() >= 2 && work.front() == 0) {
        rationals.emplace_back(0);
        work.erase(work.begin());
    }
    if (work.size() >= 2) {
        mpz_class lcm_den(1);
        for (const auto& cf : work) {
            mpz_class den = cf.get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        mpz_class a0 = mpz_class(work.front().get_num() * lcm_den) /
                       work.front().get_den();
        std::set<Rat> candidates;
        for (const auto& p : detail::positive_divisors(a0))
            for (const auto& q : detail::positive_divisors(lcm_den)) {
                Rat r(p);
                r /= Rat(q);
                candidates.insert(r);
                candidates.insert(-r);
            }
        for (const auto& r : candidates)
            while (work.size() >= 2 && detail::eval_poly(work, r) == 0) {
                rationals.push_back(r);
                work = detail::deflate(work, r);
            }
    }
    std::sort(rationals.begin(), rationals.end());
    for (std::size_t i = 1; i < rationals.size(); ++i)
        if (rationals[i] == rationals[i - 1])
            throw std::domain_error("minimal polynomial is not squarefree");

    RootList out;
    const std::size_t residual = work.size() - 1;
    if (residual == 1) {
        rationals.push_back(-work[0]);  // defensive; extraction is exhaustive
        std::sort(rationals.begin(), rationals.end());
    } else if (residual == 2) {
        const Rat& p = work[1];
        const Rat& q = work[0];
        Rat disc = p * p - Rat(4) * q;
        if (disc == 0) throw std::domain_error("minimal polynomial is not squarefree");
        if (auto s = exact_rational_sqrt(disc)) {
            rationals.push_back((-p - *s) / Rat(2));
            rationals.push_back((-p + *s) / Rat(2));
            std::sort(rationals.begin(), rationals.end());
        } else if (auto s3 = exact_rational_sqrt(disc / Rat(-3))) {
            Rat half_s = *s3 / Rat(2);
            out.roots.emplace_back(-p / Rat(2), -half_s);
            out.roots.emplace_back(-p / Rat(2), half_s);
            out.extension_used = true;
        } else {
            throw std::domain_error(
                "unsupported-extension: irreducible quadratic discriminant is "
                "not -3 times a rational square");
        }
    } else if (residual >= 3) {
        throw std::domain_error(
            "unsupported-extension: residual factor of degree " +
            std::to_string(residual));
    }
    std::vector<Split> quad_roots = std::move(out.roots);
    out.roots.clear();
    for (const auto& r : rationals) out.roots.emplace_back(r);
    for (auto& r : quad_roots) out.roots.push_back(std::move(r));
    return out;
}

struct IdempotentDecomposition {
    std::vector<std::vector<Split>> idempotents;  // coordinates on the words
    bool extension_used = false;
    std::vector<std::size_t> ideal_dims;          // filled on request
};

// Iterative splitting of the center into orthogonal primitive idempotents:
// repeatedly refine a summand identity e by the spectral projectors (Lagrange
// interpolation over all roots at once) of the first central element whose
// product with e is not a scalar multiple of e.  FIFO refinement; the final
// list is ordered by each idempotent's first nonzero coordinate.
inline IdempotentDecomposition split_center(const FiniteAlgebra& a,
                                            const Matrix<Rat>& center_rows,
                                            bool allow_extension = true) {
    const std::size_t d = a.dim();
    std::vector<std::vector<Split>> zs;
    for (std::size_t i = 0; i < center_rows.rows(); ++i) {
        std::vector<Split> z(d);
        for (std::size_t j = 0; j < d; ++j) z[j] = Split(center_rows(i, j));
        zs.push_back(std::move(z));
    }

    IdempotentDecomposition dec;
    std::deque<std::vector<Split>> queue;
    queue.push_back(algebra_one<Split>(a));
    while (!queue.empty()) {
        std::vector<Split> e = std::move(queue.front());
        queue.pop_front();
        std::optional<std::vector<Split>> x;
        for (const auto& z : zs) {
            std::vector<Split> cand = algebra_product(a, z, e);
            if (!scalar_ratio(cand, e)) {
                x = std::move(cand);
                break;
            }
        }
        if (!x) {
            dec.idempotents.push_back(std::move(e));
            continue;
        }
        std::vector<Split> mp = minimal_polynomial(a, e, *x);
        std::vector<Rat> rational_mp;
        rational_mp.reserve(mp.size());
        for (const auto& cf : mp) {
            if (cf.radical_part() != 0)
                throw std::domain_error(
                    "unsupported-extension: non-rational minimal polynomial");
            rational_mp.push_back(cf.rational_part());
        }
        RootList roots = polynomial_roots_split(rational_mp);
        if (roots.extension_used && !allow_extension)
            throw std::domain_error(
                "extension-required: splitting needs Q(sqrt(-3))");
        dec.extension_used = dec.extension_used || roots.extension_used;
        for (const auto& r : roots.roots) {
            std::vector<Split> proj = e;
            Split denom(1);
            for (const auto& r2 : roots.roots) {
                if (r2 == r) continue;
                std::vector<Split> shifted(d);
                for (std::size_t i = 0; i < d; ++i)
                    shifted[i] = (*x)[i] - r2 * e[i];
                proj = algebra_product(a, proj, shifted);
                denom *= r - r2;
            }
            for (auto& v : proj) v /= denom;
            if (std::all_of(proj.begin(), proj.end(),
                            [](const Split& v) { return v == Split(0); }))
                throw std::logic_error("zero spectral projector");
            queue.push_back(std::move(proj));
        }
    }
    auto first_nonzero = [](const std::vector<Split>& e) {
        std::size_t i = 0;
        while (i < e.size() && e[i] == Split(0)) ++i;
        return i;
    };
    std::stable_sort(dec.idempotents.begin(), dec.idempotents.end(),
                     [&](const auto& u, const auto& v) {
                         return first_nonzero(u) < first_nonzero(v);
                     });

    // exact axioms: idempotent, pairwise orthogonal, central, summing to 1
    std::vector<Split> total(d, Split(0));
    for (const auto& e : dec.idempotents) {
        if (algebra_product(a, e, e) != e)
            throw std::logic_error("split produced a non-idempotent");
        for (std::size_t i = 0; i < d; ++i) total[i] += e[i];
        for (std::size_t b = 0; b < d; ++b) {
            auto bv = basis_vector<Split>(a, b);
            if (algebra_product(a, e, bv) != algebra_product(a, bv, e))
                throw std::logic_error("split produced a non-central element");
        }
    }
    for (std::size_t i = 0; i < dec.idempotents.size(); ++i)
        for (std::size_t j = i + 1; j < dec.idempotents.size(); ++j) {
            auto prod =
                algebra_product(a, dec.idempotents[i], dec.idempotents[j]);
            if (std::any_of(prod.begin(), prod.end(),
                            [](const Split& v) { return v != Split(0); }))
                throw std::logic_error("split idempotents are not orthogonal");
        }
    if (total != algebra_one<Split>(a))
        throw std::logic_error("split idempotents do not sum to 1");
    return dec;
}

// Dimension of the two-sided ideal generated by a central element.
inline std::size_t ideal_dimension(const FiniteAlgebra& a,
                                   const std::vector<Split>& e) {
    const std::size_t d = a.dim();
    Matrix<Split> rows(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        auto prod = algebra_product(a, e, basis_vector<Split>(a, j));
        for (std::size_t k = 0; k < d; ++k) rows(j, k) = prod[k];
    }
    return rank(std::move(rows));
}

inline const std::vector<std::size_t>& simple_ideal_dimensions(
    const FiniteAlgebra& a, IdempotentDecomposition& dec) {
    dec.ideal_dims.clear();
    for (const auto& e : dec.idempotents)
        dec.ideal_dims.push_back(ideal_dimension(a, e));
    return dec.ideal_dims;
}

// ---------------------------------------------------------------------------
// Matrix units inside a simple ideal.

struct MatrixUnitMap {
    std::size_t m = 0;                       // the ideal is isomorphic to m x m
    std::optional<std::size_t> generator;    // word index of the chosen left-
                                             // ideal generator (none for m = 1)
    std::vector<std::vector<Split>> units;   // E_pq at index p*m + q
    std::vector<std::vector<Split>> left_basis;  // RCF basis of the left ideal

    const std::vector<Split>& unit(std::size_t p, std::size_t q) const {
        return units[p * m + q];
    }
};

// Matrix-unit correspondence for the ideal generated by the central
// idempotent e: pick the lowest-deglex basis monomial whose left ideal has
// dimension m, then solve E_pq f_k = delta_qk f_p together with membership
// e E_pq = E_pq; every unit relation E_pq E_rs = delta_qr E_ps is verified.
inline MatrixUnitMap matrix_unit_isomorphism(const FiniteAlgebra& a,
                                             const std::vector<Split>& e) {
    const std::size_t d = a.dim();
    const std::size_t dim2 = ideal_dimension(a, e);
    std::size_t m = 0;
    while (m * m < dim2) ++m;
    if (m * m != dim2)
        throw std::domain_error("ideal dimension is not a perfect square");

    MatrixUnitMap map;
    map.m = m;
    if (m == 1) {
        map.units.push_back(e);
        map.left_basis.push_back(e);
        return map;
    }

    for (std::size_t j = 1; j < d; ++j) {
        auto bj = basis_vector<Split>(a, j);
        auto meet = algebra_product(a, e, bj);
        auto ratio = scalar_ratio(meet, bj);
        if (!ratio || *ratio != Split(1)) continue;  // monomial not in the ideal
        Matrix<Split> left(0, d);
        for (std::size_t i = 0; i < d; ++i) {
            auto prod = algebra_product(a, basis_vector<Split>(a, i), bj);
            if (std::any_of(prod.begin(), prod.end(),
                            [](const Split& v) { return v != Split(0); }))
                left.append_row(prod);
        }
        auto [rcf, rk] = row_canonical_form(std::move(left));
        if (rk != m) continue;
        map.generator = j;
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Split> f(d);
            for (std::size_t t = 0; t < d; ++t) f[t] = rcf(k, t);
            map.left_basis.push_back(std::move(f));
        }

        // columns of the linear systems: y -> y f_k and y -> e y - y
        std::vector<std::vector<std::vector<Split>>> act(m);
        for (std::size_t k = 0; k < m; ++k) {
            act[k].resize(d);
            for (std::size_t i = 0; i < d; ++i)
                act[k][i] = algebra_product(a, basis_vector<Split>(a, i),
                                            map.left_basis[k]);
        }
        std::vector<std::vector<Split>> mem(d);
        for (std::size_t i = 0; i < d; ++i)
            mem[i] = algebra_product(a, e, basis_vector<Split>(a, i));

        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
                Matrix<Split> sys(m * d + d, d);
                std::vector<Split> rhs(m * d + d, Split(0));
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t coord = 0; coord < d; ++coord) {
                        for (std::size_t i = 0; i < d; ++i)
                            sys(k * d + coord, i) = act[k][i][coord];
                        if (k == q) rhs[k * d + coord] = map.left_basis[p][coord];
                    }
                for (std::size_t coord = 0; coord < d; ++coord)
                    for (std::size_t i = 0; i < d; ++i)
                        sys(m * d + coord, i) =
                            mem[i][coord] - (i == coord ? Split(1) : Split(0));
                auto y = solve_unique(sys, rhs);
                if (!y) throw std::logic_error("matrix-unit system inconsistent");
                map.units.push_back(std::move(*y));
            }

        // exhaustive unit relations and the partition of e
        std::vector<Split> diag(d, Split(0));
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t i = 0; i < d; ++i) diag[i] += map.unit(p, p)[i];
        if (diag != e)
            throw std::logic_error("diagonal matrix units do not sum to e");
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q)
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t s = 0; s < m; ++s) {
                        auto prod = algebra_product(a, map.unit(p, q),
                                                    map.unit(r, s));
                        std::vector<Split> want(d, Split(0));
                        if (q == r) want = map.unit(p, s);
                        if (prod != want)
                            throw std::logic_error("matrix-unit relations fail");
                    }
        return map;
    }
    throw std::domain_error("no minimal left ideal found among basis monomials");
}

// ---------------------------------------------------------------------------
// End-to-end analysis driver.

struct EnvelopeAnalysis {
    QuadSystem system;
    Envelope env;
    bool analyzed = false;   // finite with a complete basis: table-level data valid
    FiniteAlgebra algebra;
    DicksonResult dickson;
    Matrix<Rat> center_rows;
    bool split = false;      // semisimple: decomposition valid
    IdempotentDecomposition decomposition;
    std::string field = "Q";
};

inline EnvelopeAnalysis analyze_envelope(const QuadSystem& js,
                                         std::optional<int> degree_bound = std::nullopt,
                                         int graded_up_to = 12,
                                         bool allow_extension = true) {
    EnvelopeAnalysis out;
    out.system = js;
    out.env = envelope(js, degree_bound, graded_up_to);
    if (out.env.gb.status != CompletionStatus::complete || !out.env.finite)
        return out;
    out.algebra = multiplication_table(out.env.gb, out.env.monomials, js.name,
                                       js.alphabet);
    out.dickson = dickson_radical(out.algebra);
    out.center_rows = center(out.algebra);
    out.analyzed = true;
    if (!out.dickson.semisimple) return out;
    out.decomposition = split_center(out.algebra, out.center_rows, allow_extension);
    simple_ideal_dimensions(out.algebra, out.decomposition);
    out.split = true;
    if (out.decomposition.extension_used) out.field = "Q(sqrt(-3))";
    return out;
}

inline EnvelopeAnalysis analyze_envelope(const std::string& name,
                                         std::optional<int> degree_bound = std::nullopt,
                                         int graded_up_to = 12,
                                         bool allow_extension = true) {
    return analyze_envelope(family(name), degree_bound, graded_up_to,
                            allow_extension);
}

}  // namespace quadsys
