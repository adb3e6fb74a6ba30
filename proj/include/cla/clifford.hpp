#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cla/algebra.hpp"

namespace cla {

// Clifford algebra on generators a_n, b_n (n in Z) with
//   a_m a_n + a_n a_m = 0,  b_m b_n + b_n b_m = 0,
//   a_m b_n + b_n a_m = delta_{m+n+1,0},
// its shift automorphism sigma (a_n -> a_{n+1}, b_n -> b_{n-1}), the smash
// product with the group algebra of <sigma>, and the homomorphism pi from
// the Y-algebra. Normally ordered words have the a-block first, each block
// strictly increasing.

enum class CKind : std::uint8_t { a = 0, b = 1 };

struct CliffGenerator {
    CKind kind;
    long index;

    auto operator<=>(const CliffGenerator&) const = default;
};

inline CliffGenerator ca(long n) { return {CKind::a, n}; }
inline CliffGenerator cb(long n) { return {CKind::b, n}; }

using CliffWord = std::vector<CliffGenerator>;

inline std::string to_string(const CliffGenerator& g) {
    return (g.kind == CKind::a ? "a[" : "b[") + std::to_string(g.index) + "]";
}

inline bool is_cliff_normal(const CliffWord& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].kind == CKind::b && w[i + 1].kind == CKind::a) return false;
        if (w[i].kind == w[i + 1].kind && w[i].index >= w[i + 1].index) return false;
    }
    return true;
}

class CliffElement {
public:
    using Terms = std::map<CliffWord, Rat>;

    CliffElement() = default;
    explicit CliffElement(CliffWord w, Rat c = Rat(1)) {
        if (c != 0) terms_[std::move(w)] = std::move(c);
    }
    static CliffElement one() { return CliffElement(CliffWord{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const CliffWord& w, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    CliffElement& operator+=(const CliffElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    CliffElement& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend CliffElement operator*(const Rat& s, CliffElement e) { return e *= s; }

    bool operator==(const CliffElement&) const = default;

private:
    Terms terms_;
};

namespace detail {

// Left-multiply a normally ordered word by one generator; at most two terms
// (ordered insertion, plus one contraction for mixed kinds).
inline CliffElement cliff_left_mul(const CliffGenerator& g, const CliffWord& w) {
    std::size_t r = 0;  // size of the a-block
    while (r < w.size() && w[r].kind == CKind::a) ++r;

    CliffElement out;
    if (g.kind == CKind::a) {
        // Insert into the a-block; squares vanish, no contraction among a's.
        std::size_t pos = 0;
        while (pos < r && w[pos].index < g.index) ++pos;
        if (pos < r && w[pos].index == g.index) return out;  // a_m a_m = 0
        CliffWord nw = w;
        nw.insert(nw.begin() + static_cast<long>(pos), g);
        out.add_term(nw, (pos % 2 == 0) ? Rat(1) : Rat(-1));
    } else {
        // b_n must cross the whole a-block; contraction partner a_{-n-1}.
        for (std::size_t i = 0; i < r; ++i) {
            if (w[i].index == -g.index - 1) {
                CliffWord nw = w;
                nw.erase(nw.begin() + static_cast<long>(i));
                out.add_term(nw, (i % 2 == 0) ? Rat(1) : Rat(-1));
                break;  // strict increase: at most one partner
            }
        }
        std::size_t pos = r;
        while (pos < w.size() && w[pos].index < g.index) ++pos;
        if (!(pos < w.size() && w[pos].index == g.index)) {  // b_n b_n = 0
            CliffWord nw = w;
            nw.insert(nw.begin() + static_cast<long>(pos), g);
            std::size_t swaps = r + (pos - r);
            out.add_term(nw, (swaps % 2 == 0) ? Rat(1) : Rat(-1));
        }
    }
    return out;
}

}  // namespace detail

// Normal ordering of an arbitrary word, by right-to-left left-multiplication.
inline CliffElement cliff_nf(const CliffWord& raw) {
    CliffElement acc = CliffElement::one();
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        CliffElement next;
        for (const auto& [w, c] : acc.terms()) {
            CliffElement t = detail::cliff_left_mul(*it, w);
            t *= c;
            next += t;
        }
        acc = std::move(next);
    }
    return acc;
}

// sigma^k: a-indices up by k, b-indices down by k.
inline CliffWord sigma_shift(const CliffWord& w, long k) {
    CliffWord r = w;
    for (auto& g : r) g.index += (g.kind == CKind::a) ? k : -k;
    return r;
}

// ---------------------------------------------------------------------------
// Smash product C # C[<sigma>]: pairs (normally ordered word, sigma power).

class SmashElement {
public:
    using Key = std::pair<CliffWord, long>;
    using Terms = std::map<Key, Rat>;

    SmashElement() = default;
    SmashElement(CliffWord w, long sigma, Rat c = Rat(1)) {
        if (c != 0) terms_[{std::move(w), sigma}] = std::move(c);
    }
    static SmashElement one() { return SmashElement(CliffWord{}, 0); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SmashElement& operator+=(const SmashElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    bool operator==(const SmashElement&) const = default;

private:
    Terms terms_;
};

// (u ox sigma^m)(v ox sigma^n) = u sigma^m(v) ox sigma^{m+n}, bilinear,
// followed by normal ordering.
inline SmashElement smash_mul(const SmashElement& s, const SmashElement& t) {
    SmashElement out;
    for (const auto& [ks, cs] : s.terms()) {
        for (const auto& [kt, ct] : t.terms()) {
            CliffWord prod = ks.first;
            CliffWord shifted = sigma_shift(kt.first, ks.second);
            prod.insert(prod.end(), shifted.begin(), shifted.end());
            CliffElement nf = cliff_nf(prod);
            for (const auto& [w, c] : nf.terms()) out.add_term({w, ks.second + kt.second}, cs * ct * c);
        }
    }
    return out;
}

// pi(Y_n) = a_n ox sigma, pi(Ys_n) = b_n ox sigma^{-1}, extended as an
// algebra homomorphism.
inline SmashElement pi(const AlgebraElement& e) {
    SmashElement out;
    for (const auto& [word, c] : e.terms()) {
        SmashElement acc = SmashElement::one();
        for (const auto& g : word) {
            SmashElement img = (g.kind == Kind::Y) ? SmashElement(CliffWord{ca(g.index)}, 1)
                                                   : SmashElement(CliffWord{cb(g.index)}, -1);
            acc = smash_mul(acc, img);
        }
        for (const auto& [k, ck] : acc.terms()) out.add_term(k, c * ck);
    }
    return out;
}

// ---------------------------------------------------------------------------
// PBW basis 2 normal form, computed through pi. The image of a basis-2 word
// Y_{m_1}..Y_{m_r} Ys_{n_1}..Ys_{n_s} (weakly increasing blocks) is
//   a_{m_1} a_{m_2+1} .. a_{m_r+(r-1)} b_{n_1-r} .. b_{n_s+(s-1)-r} ox sigma^{r-s},
// so a normally ordered image word a_{p_1}..a_{p_r} b_{q_1}..b_{q_s} pulls
// back through m_i = p_i - (i-1), n_j = q_j - (j-1) + r.
inline AlgebraElement nf2(const AlgebraElement& e) {
    SmashElement img = pi(e);
    AlgebraElement out;
    for (const auto& [key, c] : img.terms()) {
        const CliffWord& w = key.first;
        long r = 0;
        while (r < static_cast<long>(w.size()) && w[static_cast<std::size_t>(r)].kind == CKind::a) ++r;
        long s = static_cast<long>(w.size()) - r;
        if (key.second != r - s)
            throw std::logic_error("nf2: sigma power inconsistent with Clifford charge");
        Word pre;
        for (long i = 0; i < r; ++i) pre.push_back(Y(w[static_cast<std::size_t>(i)].index - i));
        for (long j = 0; j < s; ++j)
            pre.push_back(Ys(w[static_cast<std::size_t>(r + j)].index - j + r));
        out.add_term(pre, c);
    }
    return out;
}

}  // namespace cla
