#pragma once
// Symmetric / alternating / mixed linearization matrices: images under R of
// the (signed) sums over Young subgroups, built factor-by-factor so a block
// of size k costs k-1 sparse factors instead of k! terms.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "quadsys/clifton.hpp"
#include "quadsys/fp.hpp"
#include "quadsys/matrix.hpp"
#include "quadsys/permutation.hpp"

namespace quadsys {

enum class LinMode { symmetric, alternating, mixed };

// Sum of R(sigma) (signed by epsilon(sigma) when alternating) over the
// symmetric group on the given positions, via the recurrence
// S_k = (I +- sum_{i<k} R((pos_i pos_k))) * S_{k-1}.
inline Matrix<Fp> young_block_sum(RepProvider& rep,
                                  const std::vector<int>& positions,
                                  bool alternating) {
    const std::size_t d = rep.dim();
    Matrix<Fp> total = Matrix<Fp>::identity(d);
    for (std::size_t k = 1; k < positions.size(); ++k) {
        Matrix<Fp> factor = Matrix<Fp>::identity(d);
        for (std::size_t i = 0; i < k; ++i) {
            const Matrix<Fp>& t =
                rep.rep(transposition(rep.degree(), positions[i], positions[k]));
            if (alternating)
                factor = factor - t;
            else
                factor = factor + t;
        }
        total = factor * total;
    }
    return total;
}

// Linearization matrix for a composition of n into consecutive blocks.  In
// mixed mode the first `split` blocks are symmetric and the remaining blocks
// alternating, and the result is the product (symmetric factor) *
// (alternating factor); this matches the factored form rather than the full
// subgroup sum.
inline Matrix<Fp> linearization_matrix(RepProvider& rep,
                                       const std::vector<int>& blocks,
                                       LinMode mode, std::size_t split = 0) {
    int n = std::accumulate(blocks.begin(), blocks.end(), 0);
    if (n != rep.degree())
        throw std::invalid_argument("blocks must sum to the degree");
    if (mode != LinMode::mixed) split = (mode == LinMode::symmetric) ? blocks.size() : 0;
    if (split > blocks.size())
        throw std::invalid_argument("split exceeds block count");
    Matrix<Fp> total = Matrix<Fp>::identity(rep.dim());
    int pos = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<int> positions(blocks[b]);
        std::iota(positions.begin(), positions.end(), pos);
        pos += blocks[b];
        total = total * young_block_sum(rep, positions, b >= split);
    }
    return total;
}

}  // namespace quadsys
