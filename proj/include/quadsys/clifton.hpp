#pragma once
// Natural (Clifton) matrix representation of the symmetric group over the
// working prime field.  Basis: standard tableaux of the partition, in
// lexicographic column-reading-word order.  R(sigma) is computed as
// A(id)^{-1} * A(sigma) where A is Clifton's auxiliary matrix with entries in
// {0, 1, -1}; results are memoized per permutation.

#include <cstdint>
#include <map>
#include <vector>

#include "quadsys/fp.hpp"
#include "quadsys/matrix.hpp"
#include "quadsys/permutation.hpp"

namespace quadsys {

using Tableau = std::vector<std::vector<int>>;  // rows of 0-based entries

// All standard tableaux of shape lam, sorted by column reading word (columns
// left to right, each read top to bottom).
inline std::vector<Tableau> standard_tableaux(const Partition& lam) {
    validate_partition(lam);
    const int nrows = static_cast<int>(lam.size());
    int n = 0;
    for (int p : lam) n += p;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < lam[r]; ++c) cells.emplace_back(r, c);
    std::vector<Tableau> tabs;
    std::vector<std::vector<int>> fill(nrows);
    for (int r = 0; r < nrows; ++r) fill[r].assign(lam[r], -1);

    auto rec = [&](auto&& self, int x) -> void {
        if (x == n) {
            tabs.push_back(fill);
            return;
        }
        for (auto [r, c] : cells) {
            if (fill[r][c] != -1) continue;
            if (c > 0 && fill[r][c - 1] == -1) continue;
            if (r > 0 && fill[r - 1][c] == -1) continue;
            fill[r][c] = x;
            self(self, x + 1);
            fill[r][c] = -1;
        }
    };
    rec(rec, 0);

    auto colword = [&](const Tableau& t) {
        std::vector<int> w;
        for (int c = 0; c < lam[0]; ++c)
            for (int r = 0; r < nrows; ++r)
                if (c < lam[r]) w.push_back(t[r][c]);
        return w;
    };
    std::sort(tabs.begin(), tabs.end(), [&](const Tableau& a, const Tableau& b) {
        return colword(a) < colword(b);
    });
    return tabs;
}

class RepProvider {
  public:
    explicit RepProvider(Partition lam)
        : lam_(std::move(lam)), tabs_(standard_tableaux(lam_)) {
        if (fp_modulus() >= (1ull << 32))
            throw std::invalid_argument(
                "representation provider requires a modulus below 2^32");
        n_ = 0;
        for (int p : lam_) n_ += p;
        d_ = tabs_.size();
        // row index of each number within each tableau, and the columns of
        // each tableau, precomputed for the Clifton entry test
        rowin_.resize(d_);
        cols_.resize(d_);
        for (std::size_t t = 0; t < d_; ++t) {
            rowin_[t].assign(n_, 0);
            for (std::size_t r = 0; r < tabs_[t].size(); ++r)
                for (int x : tabs_[t][r]) rowin_[t][x] = static_cast<int>(r);
            for (int c = 0; c < lam_[0]; ++c) {
                std::vector<int> col;
                for (std::size_t r = 0; r < lam_.size(); ++r)
                    if (c < lam_[r]) col.push_back(tabs_[t][r][c]);
                cols_[t].push_back(std::move(col));
            }
        }
        auto a_id = clifton_matrix(identity_perm(n_));
        Matrix<Fp> aid(d_, d_);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                aid(i, j) = Fp(static_cast<long long>(a_id[i * d_ + j]));
        Matrix<Fp> ainv = inverse(aid);
        // store the transpose row-major so columns of A^{-1} are contiguous
        ainv_t_.assign(d_ * d_, 0);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t k = 0; k < d_; ++k)
                ainv_t_[k * d_ + i] = static_cast<std::uint32_t>(ainv(i, k).value());
    }

    const Partition& partition() const { return lam_; }
    int degree() const { return n_; }
    std::size_t dim() const { return d_; }
    const std::vector<Tableau>& tableaux() const { return tabs_; }
    std::size_t memo_size() const { return memo_.size(); }

    const Matrix<Fp>& rep(const Perm& sigma) {
        auto it = memo_.find(sigma);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(sigma, compute_rep(sigma)).first->second;
    }

  private:
    // Clifton auxiliary matrix A(sigma) with entries in {0, 1, -1}: entry
    // (i, j) is zero when two numbers share a row of sigma(T_j) and a column
    // of T_i, otherwise the sign of the column permutation of T_i aligning
    // its entries to the rows of sigma(T_j).
    std::vector<std::int8_t> clifton_matrix(const Perm& sigma) const {
        std::vector<std::int8_t> A(d_ * d_, 0);
        Perm sinv = perm_inverse(sigma);
        std::vector<int> trow(n_);
        std::vector<int> t;
        for (std::size_t j = 0; j < d_; ++j) {
            // row of y in sigma(T_j) = row of sigma^{-1}(y) in T_j
            for (int y = 0; y < n_; ++y) trow[y] = rowin_[j][sinv[y]];
            for (std::size_t i = 0; i < d_; ++i) {
                int sign = 1;
                bool ok = true;
                for (const auto& col : cols_[i]) {
                    t.clear();
                    for (int x : col) t.push_back(trow[x]);
                    const int L = static_cast<int>(t.size());
                    // entries must occupy rows 0..L-1, all distinct, for an
                    // aligning column permutation to exist
                    unsigned mask = 0;
                    for (int v : t) {
                        if (v >= L || (mask >> v) & 1u) {
                            ok = false;
                            break;
                        }
                        mask |= 1u << v;
                    }
                    if (!ok) break;
                    int invs = 0;
                    for (int a = 0; a < L; ++a)
                        for (int b = a + 1; b < L; ++b)
                            if (t[a] > t[b]) ++invs;
                    if (invs & 1) sign = -sign;
                }
                A[i * d_ + j] = ok ? static_cast<std::int8_t>(sign) : 0;
            }
        }
        return A;
    }

    Matrix<Fp> compute_rep(const Perm& sigma) const {
        const std::uint64_t p = fp_modulus();
        auto A = clifton_matrix(sigma);
        Matrix<Fp> C(d_, d_);
        std::vector<std::uint64_t> buf(d_);
        for (std::size_t j = 0; j < d_; ++j) {
            std::fill(buf.begin(), buf.end(), 0);
            for (std::size_t k = 0; k < d_; ++k) {
                std::int8_t s = A[k * d_ + j];
                if (s == 0) continue;
                const std::uint32_t* colk = ainv_t_.data() + k * d_;
                if (s > 0)
                    for (std::size_t i = 0; i < d_; ++i) buf[i] += colk[i];
                else
                    for (std::size_t i = 0; i < d_; ++i) buf[i] += p - colk[i];
            }
            for (std::size_t i = 0; i < d_; ++i)
                C(i, j) = Fp::from_raw(buf[i] % p);
        }
        return C;
    }

    Partition lam_;
    std::vector<Tableau> tabs_;
    int n_ = 0;
    std::size_t d_ = 0;
    std::vector<std::vector<int>> rowin_;
    std::vector<std::vector<std::vector<int>>> cols_;
    std::vector<std::uint32_t> ainv_t_;
    std::map<Perm, Matrix<Fp>> memo_;
};

}  // namespace quadsys
