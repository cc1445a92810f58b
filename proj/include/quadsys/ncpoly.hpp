#pragma once
// Noncommutative polynomials in a free associative algebra: words under the
// degree-lexicographic order, exact coefficient arithmetic, normal forms with
// optional reduction certificates, overlap/containment compositions, canonical
// inter-reduction, and a plain-text presentation format.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadsys/scalar.hpp"

namespace quadsys {

// A word in the free monoid on an ordered alphabet; letters are indices into
// the presentation's alphabet string.
using NCWord = std::vector<int>;

// Degree-lexicographic order: shorter words first, ties broken
// lexicographically in the declared letter order.
struct DeglexLess {
    bool operator()(const NCWord& a, const NCWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline bool deglex_less(const NCWord& a, const NCWord& b) {
    return DeglexLess{}(a, b);
}

// Polynomial = coefficient map keyed by deglex-ordered words; the leading
// monomial is the last key and zero coefficients are never stored.
template <class K>
using NCPolyT = std::map<NCWord, K, DeglexLess>;
using NCPoly = NCPolyT<Rat>;

template <class K>
const NCWord& leading_monomial(const NCPolyT<K>& f) {
    if (f.empty())
        throw std::invalid_argument("leading monomial of the zero polynomial");
    return f.rbegin()->first;
}

// f += c * g, erasing coefficients that cancel to zero.
template <class K>
void add_scaled(NCPolyT<K>& f, const NCPolyT<K>& g, const K& c) {
    for (const auto& [w, x] : g) {
        auto it = f.find(w);
        if (it == f.end()) {
            K v = c * x;
            if (v != K(0)) f.emplace(w, std::move(v));
        } else {
            it->second += c * x;
            if (it->second == K(0)) f.erase(it);
        }
    }
}

inline NCWord concat(const NCWord& u, const NCWord& m, const NCWord& v) {
    NCWord w;
    w.reserve(u.size() + m.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), m.begin(), m.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

// u * f * v for words u, v.
template <class K>
NCPolyT<K> mul_word(const NCWord& u, const NCPolyT<K>& f, const NCWord& v) {
    NCPolyT<K> out;
    for (const auto& [w, c] : f) out.emplace(concat(u, w, v), c);
    return out;
}

// Leftmost occurrence of m as a contiguous subword of w, as the flanking
// pair (u, v) with w = u m v.
inline std::optional<std::pair<NCWord, NCWord>> find_subword(const NCWord& w,
                                                             const NCWord& m) {
    if (m.empty()) return std::make_pair(NCWord{}, w);
    auto it = std::search(w.begin(), w.end(), m.begin(), m.end());
    if (it == w.end()) return std::nullopt;
    return std::make_pair(NCWord(w.begin(), it), NCWord(it + m.size(), w.end()));
}

// Scale to leading coefficient 1.
template <class K>
NCPolyT<K> monic(NCPolyT<K> f) {
    if (f.empty()) return f;
    K lead = f.rbegin()->second;
    if (lead != K(1))
        for (auto& [w, c] : f) c /= lead;
    return f;
}

// One rewriting step of a normal-form computation: coefficient `coeff` times
// left * rules[rule] * right was subtracted.
template <class K>
struct ReductionStep {
    std::size_t rule;
    NCWord left, right;
    K coeff;
};

namespace detail {

// Aho-Corasick automaton over the rules' leading monomials, answering "which
// is the first rule in list order whose leading monomial occurs in w" in one
// pass over w instead of one subword search per rule.  Each node keeps the
// two smallest matching rule indices so that queries can exclude any single
// rule, which is what inter-reduction needs.
class SubwordMatcher {
  public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    template <class K>
    explicit SubwordMatcher(const std::vector<NCPolyT<K>>& rules) {
        nodes_.emplace_back();
        for (std::size_t r = 0; r < rules.size(); ++r)
            add(leading_monomial(rules[r]), r);
        link();
    }

    // Smallest rule index whose leading monomial is a subword of w, or npos.
    std::size_t first_rule(const NCWord& w) const {
        return first_rule_excluding(w, npos);
    }

    // Smallest such index different from skip.
    std::size_t first_rule_excluding(const NCWord& w, std::size_t skip) const {
        Pair best = empty_rules_;
        int s = 0;
        for (int ch : w) {
            if (pick(best, skip) == 0) return 0;
            s = step(s, ch);
            best = merge(best, nodes_[static_cast<std::size_t>(s)].best);
        }
        return pick(best, skip);
    }

  private:
    // the two smallest distinct rule indices, padded with npos
    using Pair = std::pair<std::size_t, std::size_t>;

    static Pair merge(const Pair& p, const Pair& q) {
        if (p.first == q.first)
            return {p.first, std::min(p.second, q.second)};
        if (p.first < q.first)
            return {p.first, std::min(p.second, q.first)};
        return {q.first, std::min(q.second, p.first)};
    }

    static std::size_t pick(const Pair& p, std::size_t skip) {
        return p.first != skip ? p.first : p.second;
    }

    struct Node {
        std::map<int, int> next;
        int fail = 0;
        Pair best{npos, npos};  // smallest indices ending at or inside here
    };
    std::vector<Node> nodes_;
    Pair empty_rules_{npos, npos};

    void add(const NCWord& u, std::size_t r) {
        if (u.empty()) {
            empty_rules_ = merge(empty_rules_, {r, npos});
            return;
        }
        int s = 0;
        for (int ch : u) {
            auto& nx = nodes_[static_cast<std::size_t>(s)].next;
            auto it = nx.find(ch);
            if (it == nx.end()) {
                nodes_.emplace_back();
                it = nodes_[static_cast<std::size_t>(s)]
                         .next.emplace(ch, static_cast<int>(nodes_.size()) - 1)
                         .first;
            }
            s = it->second;
        }
        auto& best = nodes_[static_cast<std::size_t>(s)].best;
        best = merge(best, {r, npos});
    }

    int step(int s, int ch) const {
        for (;;) {
            const auto& nx = nodes_[static_cast<std::size_t>(s)].next;
            auto it = nx.find(ch);
            if (it != nx.end()) return it->second;
            if (s == 0) return 0;
            s = nodes_[static_cast<std::size_t>(s)].fail;
        }
    }

    void link() {
        std::vector<int> order;
        for (const auto& [ch, t] : nodes_[0].next) order.push_back(t);
        for (std::size_t qi = 0; qi < order.size(); ++qi) {
            const int s = order[qi];
            auto& node = nodes_[static_cast<std::size_t>(s)];
            node.best = merge(node.best,
                              nodes_[static_cast<std::size_t>(node.fail)].best);
            for (const auto& [ch, t] : node.next) {
                nodes_[static_cast<std::size_t>(t)].fail = step(node.fail, ch);
                order.push_back(t);
            }
        }
    }
};

}  // namespace detail

// Fully reduce f modulo a list of monic rules.  Strategy: rewrite the
// deglex-highest reducible monomial, using the first applicable rule in list
// order at its leftmost occurrence — pass the list sorted by leading monomial
// to realize the lowest-leading-monomial preference.  When audit is supplied,
// every subtraction is recorded so f_in - f_out = sum coeff * left * rule *
// right can be replayed as an ideal-membership certificate.
template <class K>
NCPolyT<K> normal_form(NCPolyT<K> f, const std::vector<NCPolyT<K>>& rules,
                       const detail::SubwordMatcher& matcher,
                       std::vector<ReductionStep<K>>* audit = nullptr) {
    struct Hit {
        K coeff;
        std::size_t rule;
        NCWord left, right;
    };
    for (;;) {
        std::optional<Hit> hit;
        for (auto it = f.rbegin(); it != f.rend() && !hit; ++it) {
            std::size_t r = matcher.first_rule(it->first);
            if (r == detail::SubwordMatcher::npos) continue;
            auto pos = find_subword(it->first, leading_monomial(rules[r]));
            if (!pos) throw std::logic_error("matcher reported a phantom match");
            hit = Hit{it->second, r, std::move(pos->first),
                      std::move(pos->second)};
        }
        if (!hit) return f;
        if (audit) audit->push_back({hit->rule, hit->left, hit->right, hit->coeff});
        add_scaled(f, mul_word(hit->left, rules[hit->rule], hit->right),
                   K(-hit->coeff));
    }
}

template <class K>
NCPolyT<K> normal_form(NCPolyT<K> f, const std::vector<NCPolyT<K>>& rules,
                       std::vector<ReductionStep<K>>* audit = nullptr) {
    if (rules.empty()) return f;
    detail::SubwordMatcher matcher(rules);
    return normal_form(std::move(f), rules, matcher, audit);
}

// Overlap compositions of the ordered rule pair (g, h): for every proper
// overlap — a suffix of LM(g) of length 0 < k < min(|LM(g)|, |LM(h)|) equal
// to a prefix of LM(h) — the difference g * tail - head * h, whose leading
// terms cancel.  Zero differences are dropped.
template <class K>
std::vector<NCPolyT<K>> overlap_compositions(const NCPolyT<K>& g,
                                             const NCPolyT<K>& h) {
    const NCWord& x = leading_monomial(g);
    const NCWord& y = leading_monomial(h);
    std::vector<NCPolyT<K>> out;
    for (std::size_t k = 1; k < std::min(x.size(), y.size()); ++k) {
        if (!std::equal(x.end() - k, x.end(), y.begin())) continue;
        NCPolyT<K> s = mul_word({}, g, NCWord(y.begin() + k, y.end()));
        add_scaled(s, mul_word(NCWord(x.begin(), x.end() - k), h, {}), K(-1));
        if (!s.empty()) out.push_back(std::move(s));
    }
    return out;
}

// All composition ambiguities of a pair: proper overlaps in both orientations
// plus containments (one leading monomial occurring inside the other, which
// also covers equal leading monomials).  For equal polynomials only the
// self-overlaps are formed.
template <class K>
std::vector<NCPolyT<K>> compositions(const NCPolyT<K>& g, const NCPolyT<K>& h) {
    std::vector<NCPolyT<K>> out = overlap_compositions(g, h);
    if (g == h) return out;
    for (auto& s : overlap_compositions(h, g)) out.push_back(std::move(s));
    auto containment = [&out](const NCPolyT<K>& inner, const NCPolyT<K>& outer) {
        auto hit = find_subword(leading_monomial(outer), leading_monomial(inner));
        if (!hit) return;
        NCPolyT<K> s = mul_word(hit->first, inner, hit->second);
        add_scaled(s, outer, K(-1));
        if (!s.empty()) out.push_back(std::move(s));
    };
    containment(g, h);
    containment(h, g);
    return out;
}

// Canonical inter-reduction: make every element monic, drop duplicates and
// zeros, and reduce each element against all the others until nothing
// changes, restarting the scan after every change; the fixed point has no
// rule's leading monomial occurring in any monomial of another rule.  The
// result is sorted by deglex leading monomial.
template <class K>
std::vector<NCPolyT<K>> self_reduce(std::vector<NCPolyT<K>> polys) {
    std::vector<NCPolyT<K>> g;
    for (auto& f : polys)
        if (!f.empty()) g.push_back(std::move(f));
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& f : g) f = monic(std::move(f));
        std::vector<NCPolyT<K>> uniq;
        for (auto& f : g)
            if (std::find(uniq.begin(), uniq.end(), f) == uniq.end())
                uniq.push_back(std::move(f));
        g = std::move(uniq);
        for (std::size_t i = 0; i < g.size() && !changed; ++i) {
            std::vector<NCPolyT<K>> others;
            others.reserve(g.size() - 1);
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) others.push_back(g[j]);
            NCPolyT<K> r = normal_form(g[i], others);
            if (r != g[i]) {
                g[i] = std::move(r);
                std::vector<NCPolyT<K>> kept;
                for (auto& f : g)
                    if (!f.empty()) kept.push_back(std::move(f));
                g = std::move(kept);
                changed = true;
            }
        }
    }
    for (auto& f : g) f = monic(std::move(f));
    std::sort(g.begin(), g.end(),
              [](const NCPolyT<K>& a, const NCPolyT<K>& b) {
                  return deglex_less(leading_monomial(a), leading_monomial(b));
              });
    return g;
}

// ---------------------------------------------------------------------------
// Text form.  Display: "aba^2 + a^2ba - a" (deglex-descending terms, run
// exponents).  Presentation files: line 1 is the alphabet ("a b c d"), then
// one relation per line as signed monomial tokens ("+abaa +aaba -a"); an
// optional rational coefficient follows the sign ("-1/2ab"), and a token
// without letters is a constant.

inline std::string word_to_string(const NCWord& w, const std::string& names) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        out += names.at(static_cast<std::size_t>(w[i]));
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline std::string poly_to_string(const NCPoly& f, const std::string& names) {
    std::string out;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        const std::string s = word_to_string(it->first, names);
        const Rat& c = it->second;
        if (c == 1) {
            out += out.empty() ? s : " + " + s;
        } else if (c == -1) {
            out += out.empty() ? "-" + s : " - " + s;
        } else if (c > 0) {
            out += (out.empty() ? "" : " + ") + c.get_str() + " " + s;
        } else {
            Rat a = -c;
            out += (out.empty() ? "-" : " - ") + a.get_str() + " " + s;
        }
    }
    return out.empty() ? "0" : out;
}

struct Presentation {
    std::string alphabet;  // single-character generator names, in order
    std::vector<NCPoly> relations;
};

inline NCPoly parse_nc_polynomial(const std::string& line,
                                  const std::string& names) {
    NCPoly f;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        std::size_t i = 0;
        Rat sign(1);
        if (tok[i] == '+') {
            ++i;
        } else if (tok[i] == '-') {
            sign = -1;
            ++i;
        }
        std::size_t j = i;
        while (j < tok.size() &&
               (std::isdigit(static_cast<unsigned char>(tok[j])) || tok[j] == '/'))
            ++j;
        Rat coeff = j > i ? rat_from_string(tok.substr(i, j - i)) : Rat(1);
        NCWord w;
        while (j < tok.size()) {
            auto pos = names.find(tok[j]);
            if (pos == std::string::npos)
                throw std::invalid_argument("unknown generator '" +
                                            std::string(1, tok[j]) + "' in: " + tok);
            ++j;
            long exp = 1;
            if (j < tok.size() && tok[j] == '^') {
                std::size_t k = ++j;
                while (j < tok.size() &&
                       std::isdigit(static_cast<unsigned char>(tok[j])))
                    ++j;
                if (j == k) throw std::invalid_argument("bad exponent in: " + tok);
                exp = std::stol(tok.substr(k, j - k));
            }
            w.insert(w.end(), static_cast<std::size_t>(exp),
                     static_cast<int>(pos));
        }
        NCPoly term{{std::move(w), sign * coeff}};
        add_scaled(f, term, Rat(1));
    }
    return f;
}

inline Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Presentation p;
    bool have_alphabet = false;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[line.find_first_not_of(" \t")] == '#') continue;
        if (!have_alphabet) {
            std::istringstream ls(line);
            std::string name;
            while (ls >> name) {
                if (name.size() != 1 ||
                    !std::isalpha(static_cast<unsigned char>(name[0])))
                    throw std::invalid_argument("bad generator name: " + name);
                if (p.alphabet.find(name[0]) != std::string::npos)
                    throw std::invalid_argument("duplicate generator: " + name);
                p.alphabet += name[0];
            }
            if (p.alphabet.empty())
                throw std::invalid_argument("empty alphabet line");
            have_alphabet = true;
        } else {
            p.relations.push_back(parse_nc_polynomial(line, p.alphabet));
        }
    }
    if (!have_alphabet)
        throw std::invalid_argument("presentation has no alphabet line");
    return p;
}

inline std::string write_presentation(const Presentation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
        if (i) out += ' ';
        out += p.alphabet[i];
    }
    out += '\n';
    for (const auto& f : p.relations) {
        std::string line;
        for (auto it = f.rbegin(); it != f.rend(); ++it) {
            if (!line.empty()) line += ' ';
            Rat c = it->second;
            line += c < 0 ? '-' : '+';
            Rat a = c < 0 ? Rat(-c) : c;
            if (a != 1) line += a.get_str();
            for (int x : it->first)
                line += p.alphabet.at(static_cast<std::size_t>(x));
            if (it->first.empty() && a == 1) line += '1';
        }
        out += line.empty() ? "+0" : line;
        out += '\n';
    }
    return out;
}

}  // namespace quadsys
