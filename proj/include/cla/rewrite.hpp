#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "cla/algebra.hpp"

namespace cla {

// Rewriting system for the defining relations
//   Y_m Y_n   + Y_{n+1} Y_{m-1}     = 0
//   Ys_m Ys_n + Ys_{n+1} Ys_{m-1}   = 0
//   Y_m Ys_n  + Ys_{n-1} Y_{m+1}    = delta_{m+n,0}
// oriented so that normal words have all Y letters before all Ys letters
// and each block satisfies the strict chain m_1 > m_2+1 > ... > m_r+(r-1),
// i.e. adjacent indices drop by at least 2.
//
// Rules on an adjacent pair:
//   (i,iii)  k_m k_n   -> -k_{n+1} k_{m-1}          when m <= n   (k = Y or Ys)
//   (ii,iv)  k_{n+1} k_n -> 0
//   (v)      Ys_n Y_m  -> -Y_{m-1} Ys_{n+1} + delta_{m+n,0}
// Rule (v) strictly decreases the number of (Ys,Y) inversions; (i)-(iv)
// preserve it and strictly decrease the total reverse number or kill the
// word, so the system terminates.

inline bool pair_reducible(const Generator& g1, const Generator& g2) {
    if (g1.kind == g2.kind) return g1.index <= g2.index + 1;
    return g1.kind == Kind::Ystar;  // Ys before Y is always out of order
}

// The element replacing a reducible adjacent pair; words of length <= 2.
inline AlgebraElement rewrite_pair(const Generator& g1, const Generator& g2) {
    if (g1.kind == g2.kind) {
        long m = g1.index, n = g2.index;
        if (m == n + 1) return AlgebraElement::zero();
        // m <= n
        return AlgebraElement(Word{{g1.kind, n + 1}, {g1.kind, m - 1}}, Rat(-1));
    }
    // Ys_n Y_m -> -Y_{m-1} Ys_{n+1} + delta_{m+n,0}
    long n = g1.index, m = g2.index;
    AlgebraElement r(Word{Y(m - 1), Ys(n + 1)}, Rat(-1));
    if (m + n == 0) r.add_term(Word{}, Rat(1));
    return r;
}

// True iff w is a basis-1 normal word.
inline bool is_normal1(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (pair_reducible(w[i], w[i + 1])) return false;
    return true;
}

namespace detail {

inline std::optional<std::size_t> leftmost_reducible(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (pair_reducible(w[i], w[i + 1])) return i;
    return std::nullopt;
}

inline const AlgebraElement& nf1_word(const Word& w, std::map<Word, AlgebraElement>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    AlgebraElement result;
    auto pos = leftmost_reducible(w);
    if (!pos) {
        result = AlgebraElement(w);
    } else {
        std::size_t i = *pos;
        AlgebraElement repl = rewrite_pair(w[i], w[i + 1]);
        for (const auto& [mid, c] : repl.terms()) {
            Word next(w.begin(), w.begin() + static_cast<long>(i));
            next.insert(next.end(), mid.begin(), mid.end());
            next.insert(next.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            result += c * nf1_word(next, memo);
        }
    }
    return memo.emplace(w, std::move(result)).first->second;
}

}  // namespace detail

// Normal form in PBW basis 1. Pure function; the memo is per-invocation.
inline AlgebraElement nf1(const AlgebraElement& e) {
    std::map<Word, AlgebraElement> memo;
    AlgebraElement r;
    for (const auto& [w, c] : e.terms()) r += c * detail::nf1_word(w, memo);
    return r;
}

// Equality in the algebra, via uniqueness of basis-1 normal forms.
inline bool equal(const AlgebraElement& a, const AlgebraElement& b) {
    return nf1(a) == nf1(b);
}

// ---------------------------------------------------------------------------
// Confluence harness: the four overlap ambiguities of the rule set.

enum class OverlapFamily { YYY, YsYY, YsYsY, YsYsYs };

inline std::string to_string(OverlapFamily f) {
    switch (f) {
        case OverlapFamily::YYY: return "YYY";
        case OverlapFamily::YsYY: return "YsYY";
        case OverlapFamily::YsYsY: return "YsYsY";
        case OverlapFamily::YsYsYs: return "YsYsYs";
    }
    return "?";
}

struct RewriteReport {
    OverlapFamily family;
    std::array<long, 3> indices;
    Word overlap;
    AlgebraElement left_first;   // reduce the left pair first, then normalize
    AlgebraElement right_first;  // reduce the right pair first, then normalize
    bool agree = false;
};

namespace detail {

// One rewrite step applied to the pair at position i, then full nf1.
inline AlgebraElement reduce_pair_then_nf1(const Word& w, std::size_t i) {
    AlgebraElement repl = rewrite_pair(w[i], w[i + 1]);
    AlgebraElement stepped;
    for (const auto& [mid, c] : repl.terms()) {
        Word next(w.begin(), w.begin() + static_cast<long>(i));
        next.insert(next.end(), mid.begin(), mid.end());
        next.insert(next.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        stepped.add_term(next, c);
    }
    return nf1(stepped);
}

}  // namespace detail

// Reduces the length-3 overlap word of the given family in both association
// orders and reports whether the fully normalized results agree. The triple
// must make both adjacent pairs reducible (for the all-Y and all-Ys families
// this is the window i1 <= i2+1 <= i3+2; the mixed pair Ys,Y is always
// reducible).
inline RewriteReport check_overlap(OverlapFamily family, long i1, long i2, long i3) {
    Word w;
    bool ok = false;
    switch (family) {
        case OverlapFamily::YYY:
            w = {Y(i1), Y(i2), Y(i3)};
            ok = i1 <= i2 + 1 && i2 <= i3 + 1;
            break;
        case OverlapFamily::YsYY:  // (p, m, n)
            w = {Ys(i1), Y(i2), Y(i3)};
            ok = i2 <= i3 + 1;
            break;
        case OverlapFamily::YsYsY:  // (m, n, p)
            w = {Ys(i1), Ys(i2), Y(i3)};
            ok = i1 <= i2 + 1;
            break;
        case OverlapFamily::YsYsYs:
            w = {Ys(i1), Ys(i2), Ys(i3)};
            ok = i1 <= i2 + 1 && i2 <= i3 + 1;
            break;
    }
    if (!ok)
        throw std::invalid_argument("check_overlap: (" + std::to_string(i1) + "," +
                                    std::to_string(i2) + "," + std::to_string(i3) +
                                    ") is not a reducible overlap for family " + to_string(family));
    RewriteReport rep;
    rep.family = family;
    rep.indices = {i1, i2, i3};
    rep.overlap = w;
    rep.left_first = detail::reduce_pair_then_nf1(w, 0);
    rep.right_first = detail::reduce_pair_then_nf1(w, 1);
    rep.agree = rep.left_first == rep.right_first;
    return rep;
}

}  // namespace cla
