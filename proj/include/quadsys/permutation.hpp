#pragma once
// Permutations (0-based image arrays), partitions in descending order, hook
// dimensions, and lexicographic multiset permutations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadsys {

using Perm = std::vector<int>;       // p[i] = image of i
using Partition = std::vector<int>;  // weakly decreasing positive parts

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (p o q)(i) = p(q(i)): apply q first, then p.
inline Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline Perm perm_inverse(const Perm& p) {
    Perm inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

inline int perm_sign(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

inline Perm transposition(int n, int a, int b) {
    Perm p = identity_perm(n);
    std::swap(p[a], p[b]);
    return p;
}

// All partitions of n with parts in weakly decreasing order, enumerated in
// reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_desc(int n) {
    std::vector<Partition> out;
    Partition acc;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.push_back(acc);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            acc.push_back(p);
            self(self, rem - p, p);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline void validate_partition(const Partition& lam) {
    if (lam.empty()) throw std::invalid_argument("empty partition");
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] <= 0) throw std::invalid_argument("nonpositive part");
        if (i && lam[i] > lam[i - 1])
            throw std::invalid_argument("parts must be weakly decreasing");
    }
}

// Hook length formula: d_lambda = n! / prod(hooks).
inline long irreducible_dimension(const Partition& lam) {
    validate_partition(lam);
    int n = std::accumulate(lam.begin(), lam.end(), 0);
    std::vector<int> conj(lam[0], 0);
    for (int c = 0; c < lam[0]; ++c)
        for (int p : lam)
            if (p > c) ++conj[c];
    long num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    long prod = 1;
    for (std::size_t r = 0; r < lam.size(); ++r)
        for (int c = 0; c < lam[r]; ++c)
            prod *= (lam[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
    return num / prod;
}

// All distinct arrangements of the multiset with multiplicities `mult` for
// letters 0,1,2,... in lexicographic order.
inline std::vector<std::vector<int>> multiset_permutations(
    const std::vector<int>& mult) {
    for (int m : mult)
        if (m < 1) throw std::invalid_argument("multiplicities must be >= 1");
    std::vector<int> word;
    for (std::size_t letter = 0; letter < mult.size(); ++letter)
        word.insert(word.end(), mult[letter], static_cast<int>(letter));
    std::vector<std::vector<int>> out;
    do {
        out.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

inline std::string partition_to_string(const Partition& lam) {
    std::string s;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(lam[i]);
    }
    return s;
}

inline Partition partition_from_string(const std::string& s) {
    Partition lam;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        lam.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    validate_partition(lam);
    return lam;
}

}  // namespace quadsys
