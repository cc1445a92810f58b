#pragma once
// Incremental row-space (rank) tracker over the working prime field.  Rows
// are reduced against the pivots accumulated so far; a row is retained only
// if it increases the rank.  Entries are kept below the modulus so candidate
// rows can be reduced with lazy (deferred) modular arithmetic.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quadsys/fp.hpp"
#include "quadsys/matrix.hpp"

namespace quadsys {

class Staging {
  public:
    explicit Staging(std::size_t ncols)
        : ncols_(ncols), pivot_of_col_(ncols, -1) {}

    std::size_t cols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    bool add_row(const std::vector<Fp>& v) {
        work_.assign(ncols_, 0);
        for (std::size_t j = 0; j < ncols_; ++j) work_[j] = v[j].value();
        return absorb();
    }

    bool add_row_raw(const std::vector<std::uint64_t>& v) {
        work_ = v;
        return absorb();
    }

    // Adds every row of m; returns how many increased the rank.
    std::size_t add_matrix(const Matrix<Fp>& m) {
        std::size_t gained = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            work_.assign(ncols_, 0);
            const Fp* r = m.row_data(i);
            for (std::size_t j = 0; j < ncols_; ++j) work_[j] = r[j].value();
            if (absorb()) ++gained;
        }
        return gained;
    }

  private:
    // Reduces work_ against the stored pivot rows.  Lazy arithmetic: stored
    // rows have entries < p, and each elimination adds at most (p-1)^2 to an
    // entry, so sums stay far below 2^64 for any realistic rank.
    bool absorb() {
        const std::uint64_t p = fp_modulus();
        for (std::size_t j = 0; j < ncols_; ++j) {
            std::uint64_t c = work_[j] % p;
            if (c == 0) continue;
            long pr = pivot_of_col_[j];
            if (pr < 0) {
                // New pivot: normalize the tail and store it reduced.
                std::uint64_t inv = mod_inv(c, p);
                std::vector<std::uint32_t> row(ncols_, 0);
                row[j] = 1;
                for (std::size_t k = j + 1; k < ncols_; ++k) {
                    std::uint64_t x = work_[k] % p;
                    row[k] = static_cast<std::uint32_t>(
                        (static_cast<unsigned __int128>(x) * inv) % p);
                }
                pivot_of_col_[j] = static_cast<long>(rows_.size());
                pivcol_.push_back(j);
                rows_.push_back(std::move(row));
                return true;
            }
            const std::uint32_t* prow = rows_[static_cast<std::size_t>(pr)].data();
            std::uint64_t mul = p - c;
            for (std::size_t k = j + 1; k < ncols_; ++k)
                work_[k] += mul * prow[k];
            work_[j] = 0;
        }
        return false;
    }

    std::size_t ncols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivcol_;
    std::vector<long> pivot_of_col_;
    std::vector<std::uint64_t> work_;
};

}  // namespace quadsys
