#pragma once
// Free quaternary algebra: bracketing trees over a quadrilinear operation
// (symmetric tetrad or skew anti-tetrad), canonical association types,
// straightening to orbit-minimal normal form, expansion into the free
// associative algebra, and the expansion matrices used for identity search.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadsys/fp.hpp"
#include "quadsys/integer_matrix.hpp"
#include "quadsys/matrix.hpp"
#include "quadsys/permutation.hpp"

namespace quadsys {

enum class Op { tetrad, anti_tetrad };

// Sign picked up by reversing the arguments of one operation node.
inline int op_sign(Op op) { return op == Op::tetrad ? +1 : -1; }

inline const char* op_name(Op op) {
    return op == Op::tetrad ? "tetrad" : "anti_tetrad";
}

using Word = std::vector<int>;  // sequence of variable ids

// Bracketing tree: a leaf (variable id) or a node with exactly 4 children.
struct QuadTree {
    int leaf = -1;
    std::vector<QuadTree> child;

    bool is_leaf() const { return child.empty(); }

    static QuadTree L(int v) {
        QuadTree t;
        t.leaf = v;
        return t;
    }
    static QuadTree N(QuadTree a, QuadTree b, QuadTree c, QuadTree d) {
        QuadTree t;
        t.leaf = -1;
        t.child = {std::move(a), std::move(b), std::move(c), std::move(d)};
        return t;
    }

    friend bool operator==(const QuadTree& a, const QuadTree& b) {
        if (a.is_leaf() != b.is_leaf()) return false;
        if (a.is_leaf()) return a.leaf == b.leaf;
        return a.child == b.child;
    }
};

inline void collect_leaves(const QuadTree& t, Word& out) {
    if (t.is_leaf()) {
        out.push_back(t.leaf);
        return;
    }
    for (const auto& c : t.child) collect_leaves(c, out);
}

inline Word leaves(const QuadTree& t) {
    Word w;
    collect_leaves(t, w);
    return w;
}

// Shape string: "." for a leaf, "(....)"-style nesting for nodes.
inline void shape_into(const QuadTree& t, std::string& out) {
    if (t.is_leaf()) {
        out += '.';
        return;
    }
    out += '(';
    for (const auto& c : t.child) shape_into(c, out);
    out += ')';
}

inline std::string shape(const QuadTree& t) {
    std::string s;
    shape_into(t, s);
    return s;
}

// Unique text encoding (shape + leaf ids), used as an orbit key.
inline void encode_into(const QuadTree& t, std::string& out) {
    if (t.is_leaf()) {
        out += static_cast<char>('0' + t.leaf);
        return;
    }
    out += '(';
    for (const auto& c : t.child) encode_into(c, out);
    out += ')';
}

inline std::string encode(const QuadTree& t) {
    std::string s;
    encode_into(t, s);
    return s;
}

using TreePath = std::vector<int>;  // child indices from the root

inline void node_paths_into(const QuadTree& t, TreePath& prefix,
                            std::vector<TreePath>& out) {
    if (t.is_leaf()) return;
    out.push_back(prefix);
    for (int i = 0; i < 4; ++i) {
        prefix.push_back(i);
        node_paths_into(t.child[i], prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<TreePath> node_paths(const QuadTree& t) {
    std::vector<TreePath> out;
    TreePath prefix;
    node_paths_into(t, prefix, out);
    return out;
}

// Reverse the argument tuple of the node addressed by path.
inline QuadTree reverse_at(const QuadTree& t, const TreePath& path,
                           std::size_t depth = 0) {
    QuadTree out = t;
    if (depth == path.size()) {
        std::reverse(out.child.begin(), out.child.end());
        return out;
    }
    out.child[path[depth]] = reverse_at(t.child[path[depth]], path, depth + 1);
    return out;
}

// Replace leaf slot i by word[i].
inline QuadTree substitute(const QuadTree& t, const Word& word) {
    if (t.is_leaf()) return QuadTree::L(word[t.leaf]);
    QuadTree out;
    out.leaf = -1;
    for (const auto& c : t.child) out.child.push_back(substitute(c, word));
    return out;
}

// Graft trees into the slots: like substitute but the replacement may itself
// be a tree (used by identity lifting).
inline QuadTree graft(const QuadTree& t, const std::vector<QuadTree>& slots) {
    if (t.is_leaf()) return slots[t.leaf];
    QuadTree out;
    out.leaf = -1;
    for (const auto& c : t.child) out.child.push_back(graft(c, slots));
    return out;
}

// Canonical association types per degree, in the published order; leaves are
// the slot numbers 0..degree-1.
inline std::vector<QuadTree> make_types(int degree) {
    auto L = [](int v) { return QuadTree::L(v); };
    auto N = [](QuadTree a, QuadTree b, QuadTree c, QuadTree d) {
        return QuadTree::N(std::move(a), std::move(b), std::move(c),
                           std::move(d));
    };
    if (degree == 4) return {N(L(0), L(1), L(2), L(3))};
    if (degree == 7)
        return {
            N(N(L(0), L(1), L(2), L(3)), L(4), L(5), L(6)),
            N(L(0), N(L(1), L(2), L(3), L(4)), L(5), L(6)),
        };
    if (degree == 10)
        return {
            N(N(N(L(0), L(1), L(2), L(3)), L(4), L(5), L(6)), L(7), L(8), L(9)),
            N(N(L(0), N(L(1), L(2), L(3), L(4)), L(5), L(6)), L(7), L(8), L(9)),
            N(L(0), N(N(L(1), L(2), L(3), L(4)), L(5), L(6), L(7)), L(8), L(9)),
            N(L(0), N(L(1), N(L(2), L(3), L(4), L(5)), L(6), L(7)), L(8), L(9)),
            N(N(L(0), L(1), L(2), L(3)), N(L(4), L(5), L(6), L(7)), L(8), L(9)),
            N(N(L(0), L(1), L(2), L(3)), L(4), N(L(5), L(6), L(7), L(8)), L(9)),
            N(N(L(0), L(1), L(2), L(3)), L(4), L(5), N(L(6), L(7), L(8), L(9))),
            N(L(0), N(L(1), L(2), L(3), L(4)), N(L(5), L(6), L(7), L(8)), L(9)),
        };
    throw std::invalid_argument("association types exist for degrees 4, 7, 10");
}

inline std::vector<std::string> type_shapes(int degree) {
    std::vector<std::string> out;
    for (const auto& t : make_types(degree)) out.push_back(shape(t));
    return out;
}

// Canonical (straightened) monomial: signed (type, argument word).
struct Straightened {
    int sign;  // +1 or -1
    int type;  // canonical association type index
    Word word;
};

// All (tree, sign) pairs reachable by node reversals; zero = the orbit meets
// itself with opposite sign (skew palindrome).
struct Orbit {
    std::vector<std::pair<QuadTree, int>> elements;
    bool zero = false;
};

inline Orbit tree_orbit(const QuadTree& t, Op op) {
    Orbit orb;
    std::map<std::string, int> sign_of;
    sign_of[encode(t)] = 1;
    orb.elements.emplace_back(t, 1);
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t cur = frontier.back();
        frontier.pop_back();
        QuadTree tree = orb.elements[cur].first;
        int s = orb.elements[cur].second;
        for (const auto& p : node_paths(tree)) {
            QuadTree r = reverse_at(tree, p);
            int rs = s * op_sign(op);
            auto key = encode(r);
            auto it = sign_of.find(key);
            if (it != sign_of.end()) {
                if (it->second != rs) orb.zero = true;
            } else {
                sign_of[key] = rs;
                orb.elements.emplace_back(std::move(r), rs);
                frontier.push_back(orb.elements.size() - 1);
            }
        }
    }
    return orb;
}

// Straighten to the orbit-minimum over canonical shapes, compared by
// (type index, argument word); zero monomials return nullopt.
inline std::optional<Straightened> straighten(const QuadTree& t, Op op) {
    const int degree = static_cast<int>(leaves(t).size());
    const auto shapes = type_shapes(degree);
    Orbit orb = tree_orbit(t, op);
    if (orb.zero) return std::nullopt;
    std::optional<Straightened> best;
    for (const auto& [cand, s] : orb.elements) {
        std::string sh = shape(cand);
        int ti = -1;
        for (std::size_t k = 0; k < shapes.size(); ++k)
            if (shapes[k] == sh) {
                ti = static_cast<int>(k);
                break;
            }
        if (ti < 0) continue;
        Word w = leaves(cand);
        if (!best || std::make_pair(ti, w) <
                         std::make_pair(best->type, best->word))
            best = Straightened{s, ti, std::move(w)};
    }
    if (!best)
        throw std::logic_error("orbit misses every canonical association type");
    return best;
}

// Expansion into the free associative algebra: at every node the operation
// contributes the in-order product plus op_sign times the reversed product.
inline std::map<Word, long long> expand(const QuadTree& t, Op op) {
    std::map<Word, long long> out;
    if (t.is_leaf()) {
        out[{t.leaf}] = 1;
        return out;
    }
    std::vector<std::map<Word, long long>> parts;
    for (const auto& c : t.child) parts.push_back(expand(c, op));
    std::vector<std::map<Word, long long>::const_iterator> its;
    for (const auto& p : parts) its.push_back(p.begin());
    while (true) {
        Word fwd, bwd;
        long long coeff = 1;
        for (const auto& it : its) {
            fwd.insert(fwd.end(), it->first.begin(), it->first.end());
            coeff *= it->second;
        }
        for (auto rit = its.rbegin(); rit != its.rend(); ++rit)
            bwd.insert(bwd.end(), (*rit)->first.begin(), (*rit)->first.end());
        out[fwd] += coeff;
        out[bwd] += op_sign(op) * coeff;
        // advance the odometer
        std::size_t i = 0;
        while (i < its.size() && ++its[i] == parts[i].end()) {
            its[i] = parts[i].begin();
            ++i;
        }
        if (i == its.size()) break;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// Canonical monomials (type, word) of the given multidegree, sorted
// type-major then lexicographically by word.  All arrangements of the
// multiset are considered (no constraint on once-occurring variables).
inline std::vector<std::pair<int, Word>> canonical_monomials(
    const std::vector<int>& mult, Op op) {
    const int degree = [&] {
        int n = 0;
        for (int m : mult) n += m;
        return n;
    }();
    auto types = make_types(degree);
    std::set<std::pair<int, Word>> keys;
    auto words = multiset_permutations(mult);
    for (std::size_t ti = 0; ti < types.size(); ++ti)
        for (const auto& w : words) {
            auto c = straighten(substitute(types[ti], w), op);
            if (c) keys.emplace(c->type, c->word);
        }
    return {keys.begin(), keys.end()};
}

// Multilinear expansion matrix: rows = associative words (lex), columns =
// monomials.  Degree 4 uses the raw 24 permutation monomials (the reversal
// symmetry is what the nullspace of this matrix exhibits); degree 7 uses the
// 5040 canonical monomials (type-major, then lex).
template <class T>
Matrix<T> expansion_matrix(int degree, Op op) {
    if (degree != 4 && degree != 7)
        throw std::invalid_argument("expansion matrix defined for degrees 4, 7");
    auto types = make_types(degree);
    std::vector<std::pair<int, Word>> mons;
    if (degree == 4) {
        for (const auto& w : multiset_permutations(std::vector<int>(4, 1)))
            mons.emplace_back(0, w);
    } else {
        mons = canonical_monomials(std::vector<int>(degree, 1), op);
    }
    auto words = multiset_permutations(std::vector<int>(degree, 1));
    std::map<Word, std::size_t> widx;
    for (std::size_t i = 0; i < words.size(); ++i) widx[words[i]] = i;
    Matrix<T> E(words.size(), mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) {
        auto poly = expand(substitute(types[mons[j].first], mons[j].second), op);
        for (const auto& [w, c] : poly)
            E(widx.at(w), j) = E(widx.at(w), j) + T(static_cast<long>(c));
    }
    return E;
}

struct MultihomExpansion {
    IntMat matrix;  // rows = monomials, columns = multiset word arrangements
    std::vector<std::pair<int, Word>> monomials;
    std::vector<Word> words;
};

// Multihomogeneous expansion matrix over Z.  Plain mode: all canonical
// monomials of the multidegree, each row the expansion of that monomial.
// Alternating mode (for once-occurring variables): rows are restricted to
// monomials whose once-variables read in increasing order, and each row is
// the signed sum of expansions over all renamings of the once-variables.
inline MultihomExpansion multihomogeneous_expansion_matrix(
    const std::vector<int>& mult, Op op, bool alternate_once_letters = false) {
    int degree = 0;
    for (int m : mult) degree += m;
    auto types = make_types(degree);
    MultihomExpansion out;
    out.words = multiset_permutations(mult);
    std::map<Word, std::size_t> widx;
    for (std::size_t i = 0; i < out.words.size(); ++i) widx[out.words[i]] = i;

    std::vector<int> once;
    for (std::size_t v = 0; v < mult.size(); ++v)
        if (mult[v] == 1) once.push_back(static_cast<int>(v));

    auto mons = canonical_monomials(mult, op);
    if (alternate_once_letters) {
        std::vector<std::pair<int, Word>> keep;
        for (const auto& m : mons) {
            Word ord;
            for (int x : m.second)
                if (mult[x] == 1) ord.push_back(x);
            if (std::is_sorted(ord.begin(), ord.end())) keep.push_back(m);
        }
        mons = std::move(keep);
    }
    out.monomials = mons;

    out.matrix = IntMat(mons.size(), out.words.size());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        const auto& [ti, word] = mons[i];
        if (alternate_once_letters && once.size() > 1) {
            auto perms = multiset_permutations(std::vector<int>(once.size(), 1));
            for (const auto& p : perms) {
                Word renamed = word;
                for (auto& x : renamed)
                    if (mult[x] == 1) {
                        std::size_t k =
                            std::find(once.begin(), once.end(), x) - once.begin();
                        x = once[p[k]];
                    }
                int s = perm_sign(p);
                for (const auto& [w, c] :
                     expand(substitute(types[ti], renamed), op))
                    out.matrix(i, widx.at(w)) += static_cast<long>(s * c);
            }
        } else {
            for (const auto& [w, c] : expand(substitute(types[ti], word), op))
                out.matrix(i, widx.at(w)) += static_cast<long>(c);
        }
    }
    return out;
}

// A multilinear identity: a sum of (type, argument word, coefficient) terms.
struct IdentityTerm {
    int type;
    Word word;
    Int coeff;
};
using MultilinearIdentity = std::vector<IdentityTerm>;

// Per-type reversal symmetries: for every shape-preserving node reversal tau
// of a canonical type, the identity iota - op_sign * tau.  Degree 7 has 2,
// degree 10 has 14 (types carry 1,1,1,1,2,2,3,3 of them).
inline std::vector<MultilinearIdentity> type_symmetries(int degree, Op op) {
    std::vector<MultilinearIdentity> out;
    auto types = make_types(degree);
    Word id_word(degree);
    for (int i = 0; i < degree; ++i) id_word[i] = i;
    for (std::size_t k = 0; k < types.size(); ++k) {
        const std::string sh = shape(types[k]);
        for (const auto& path : node_paths(types[k])) {
            QuadTree rev = reverse_at(types[k], path);
            if (shape(rev) == sh && !(rev == types[k]))
                out.push_back({{static_cast<int>(k), id_word, Int(1)},
                               {static_cast<int>(k), leaves(rev),
                                Int(-op_sign(op))}});
        }
    }
    return out;
}

}  // namespace quadsys
