#pragma once
// Deterministic batch completion of noncommutative polynomial ideals to
// Groebner bases under the deglex order, with standard-monomial enumeration,
// graded dimensions, and finiteness detection via the leading-monomial
// avoidance automaton.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadsys/ncpoly.hpp"

namespace quadsys {

enum class CompletionStatus { complete, truncated };

// One completion round: basis size entering the round, nonzero raw
// compositions formed, distinct nonzero reduced compositions adjoined, and
// compositions discarded by the degree bound.
struct CompletionRound {
    std::size_t basis_size = 0;
    std::size_t compositions = 0;
    std::size_t adjoined = 0;
    std::size_t discarded = 0;
};

struct GroebnerBasis {
    std::vector<NCPoly> rules;  // self-reduced, sorted by deglex leading monomial
    CompletionStatus status = CompletionStatus::complete;
    std::optional<int> degree_bound;   // the bound that caused truncation, if any
    std::vector<CompletionRound> log;  // one entry per completion round
};

namespace detail {

// One batch: all ordered pairs (i, j) of the current self-reduced basis in
// lexicographic subscript order; every overlap composition is reduced against
// the current basis only; distinct nonzero reduced results are collected
// monic in discovery order.
inline std::vector<NCPoly> completion_round(const std::vector<NCPoly>& g,
                                            CompletionRound& round,
                                            const std::optional<int>& bound) {
    std::vector<NCPoly> found;
    round.basis_size = g.size();
    std::optional<detail::SubwordMatcher> matcher;
    if (!g.empty()) matcher.emplace(g);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            for (auto& c : overlap_compositions(g[i], g[j])) {
                ++round.compositions;
                NCPoly r = normal_form(std::move(c), g, *matcher);
                if (r.empty()) continue;
                r = monic(std::move(r));
                if (bound &&
                    static_cast<int>(leading_monomial(r).size()) > *bound) {
                    ++round.discarded;
                    continue;
                }
                if (std::find(found.begin(), found.end(), r) == found.end())
                    found.push_back(std::move(r));
            }
    round.adjoined = found.size();
    return found;
}

inline std::vector<NCWord> leading_monomials(const std::vector<NCPoly>& rules) {
    std::vector<NCWord> lms;
    lms.reserve(rules.size());
    for (const auto& f : rules) lms.push_back(leading_monomial(f));
    return lms;
}

// Does some leading monomial occur as a suffix of w?  For w obtained by
// appending one letter to a word already known to avoid every leading
// monomial, this is the full subword test.
inline bool completes_leading_monomial(const NCWord& w,
                                       const std::vector<NCWord>& lms) {
    for (const auto& m : lms) {
        if (m.size() > w.size() || m.empty()) continue;
        if (std::equal(m.begin(), m.end(), w.end() - m.size())) return true;
    }
    return false;
}

}  // namespace detail

// Batch completion: self-reduce the generators, form all compositions of the
// current basis, adjoin the distinct nonzero reduced ones, self-reduce the
// union, and repeat until a round adjoins nothing.  With a degree bound,
// reduced compositions whose leading monomial exceeds the bound are dropped
// and the basis is marked truncated; without one, termination relies on the
// ideal admitting a finite basis.
inline GroebnerBasis groebner_basis(
    const std::vector<NCPoly>& generators,
    std::optional<int> degree_bound = std::nullopt) {
    GroebnerBasis gb;
    gb.rules = self_reduce(generators);
    for (;;) {
        CompletionRound round;
        std::vector<NCPoly> fresh =
            detail::completion_round(gb.rules, round, degree_bound);
        if (round.discarded) {
            gb.status = CompletionStatus::truncated;
            gb.degree_bound = degree_bound;
        }
        gb.log.push_back(round);
        if (fresh.empty()) break;
        std::vector<NCPoly> merged = gb.rules;
        for (auto& f : fresh) merged.push_back(std::move(f));
        gb.rules = self_reduce(std::move(merged));
    }
    return gb;
}

// Standard monomials grouped by degree 0..up_to: all words over the alphabet
// containing no rule's leading monomial as a subword, lexicographic within
// each degree.  Stops early after an empty degree (nothing extends it).
inline std::vector<std::vector<NCWord>> standard_monomials_by_degree(
    const std::vector<NCPoly>& rules, int alphabet_size, int up_to) {
    if (alphabet_size <= 0)
        throw std::invalid_argument("alphabet must have at least one letter");
    auto lms = detail::leading_monomials(rules);
    for (const auto& m : lms)
        if (m.empty())  // a unit in the ideal: the quotient is zero
            return std::vector<std::vector<NCWord>>(
                static_cast<std::size_t>(up_to) + 1);
    std::vector<std::vector<NCWord>> levels{{NCWord{}}};
    for (int d = 1; d <= up_to && !levels.back().empty(); ++d) {
        std::vector<NCWord> cur;
        for (const NCWord& w : levels.back())
            for (int x = 0; x < alphabet_size; ++x) {
                NCWord nw = w;
                nw.push_back(x);
                if (!detail::completes_leading_monomial(nw, lms))
                    cur.push_back(std::move(nw));
            }
        levels.push_back(std::move(cur));
    }
    levels.resize(static_cast<std::size_t>(up_to) + 1);
    return levels;
}

// Finite dimensionality of the quotient.  States of the avoidance automaton
// are the proper prefixes of the leading monomials (the longest such suffix
// of the word read so far); a letter either completes a leading monomial
// (dead) or moves to the longest suffix that is again a state.  The number
// of avoiding words is finite iff no cycle is reachable from the root.
inline bool is_finite_dimensional(const GroebnerBasis& gb, int alphabet_size) {
    auto lms = detail::leading_monomials(gb.rules);
    for (const auto& m : lms)
        if (m.empty()) return true;  // zero quotient
    std::set<NCWord> prefix_set;
    prefix_set.insert(NCWord{});
    for (const auto& m : lms)
        for (std::size_t len = 1; len < m.size(); ++len)
            prefix_set.insert(NCWord(m.begin(), m.begin() + len));
    std::vector<NCWord> states(prefix_set.begin(), prefix_set.end());
    std::map<NCWord, int> index;
    for (std::size_t s = 0; s < states.size(); ++s)
        index[states[s]] = static_cast<int>(s);
    auto step = [&](int s, int x) -> int {  // -1 = dead
        NCWord w = states[static_cast<std::size_t>(s)];
        w.push_back(x);
        if (detail::completes_leading_monomial(w, lms)) return -1;
        for (std::size_t drop = 0; drop <= w.size(); ++drop) {
            auto it = index.find(NCWord(w.begin() + drop, w.end()));
            if (it != index.end()) return it->second;
        }
        return -1;  // unreachable: the empty word is always a state
    };
    // depth-first search from the root; a back edge to an in-progress state
    // is a cycle of normal words
    std::vector<int> color(states.size(), 0);  // 0 new, 1 active, 2 done
    struct Frame {
        int state;
        int next_letter;
    };
    std::vector<Frame> stack{{index[NCWord{}], 0}};
    color[static_cast<std::size_t>(stack.back().state)] = 1;
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.next_letter == alphabet_size) {
            color[static_cast<std::size_t>(fr.state)] = 2;
            stack.pop_back();
            continue;
        }
        int t = step(fr.state, fr.next_letter++);
        if (t < 0) continue;
        if (color[static_cast<std::size_t>(t)] == 1) return false;
        if (color[static_cast<std::size_t>(t)] == 0) {
            color[static_cast<std::size_t>(t)] = 1;
            stack.push_back({t, 0});
        }
    }
    return true;
}

// All standard monomials in deglex order.  Without a degree bound the
// quotient must be finite-dimensional (checked via the automaton); with one,
// enumeration stops at the bound.
inline std::vector<NCWord> standard_monomials(
    const GroebnerBasis& gb, int alphabet_size,
    std::optional<int> degree_bound = std::nullopt) {
    int up_to;
    if (degree_bound) {
        up_to = *degree_bound;
    } else {
        if (!is_finite_dimensional(gb, alphabet_size))
            throw std::invalid_argument(
                "quotient is infinite-dimensional; supply a degree bound");
        // finite: the longest normal word visits distinct automaton states,
        // so its length is bounded by the total leading-monomial length
        up_to = 1;
        for (const auto& f : gb.rules)
            up_to += static_cast<int>(leading_monomial(f).size());
    }
    auto levels = standard_monomials_by_degree(gb.rules, alphabet_size, up_to);
    std::vector<NCWord> flat;
    for (auto& level : levels)
        for (auto& w : level) flat.push_back(std::move(w));
    return flat;
}

// Number of standard monomials in each degree 0..up_to.
inline std::vector<std::size_t> graded_dimensions(const GroebnerBasis& gb,
                                                  int alphabet_size,
                                                  int up_to) {
    auto levels = standard_monomials_by_degree(gb.rules, alphabet_size, up_to);
    std::vector<std::size_t> dims;
    dims.reserve(levels.size());
    for (const auto& level : levels) dims.push_back(level.size());
    return dims;
}

}  // namespace quadsys
