#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cla/rational.hpp"

namespace cla {

// Free algebra on the generators Y_n, Ys_n (n in Z) with exact rational
// coefficients. Words compare lexicographically with the generator kind
// ordered before the index, which fixes a deterministic iteration order
// for every element.

enum class Kind : std::uint8_t { Y = 0, Ystar = 1 };

struct Generator {
    Kind kind;
    long index;

    auto operator<=>(const Generator&) const = default;
};

inline Generator Y(long n) { return {Kind::Y, n}; }
inline Generator Ys(long n) { return {Kind::Ystar, n}; }

using Word = std::vector<Generator>;

// deg Y_n = deg Ys_n = -n, additive over the word.
inline long degree(const Word& w) {
    long d = 0;
    for (const auto& g : w) d -= g.index;
    return d;
}

inline Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

inline std::string to_string(const Generator& g) {
    return (g.kind == Kind::Y ? "Y[" : "Ys[") + std::to_string(g.index) + "]";
}

inline std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += to_string(w[i]);
    }
    return s;
}

class AlgebraElement {
public:
    using Terms = std::map<Word, Rat>;

    AlgebraElement() = default;
    explicit AlgebraElement(Word w, Rat c = Rat(1)) {
        if (c != 0) terms_[std::move(w)] = std::move(c);
    }

    static AlgebraElement one() { return AlgebraElement(Word{}); }
    static AlgebraElement zero() { return AlgebraElement(); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Word& w, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    AlgebraElement& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rat& s) { return a *= s; }
    friend AlgebraElement operator*(const Rat& s, AlgebraElement a) { return a *= s; }

    // Concatenation product in the free algebra.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement r;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) r.add_term(concat(u, v), cu * cv);
        return r;
    }

    bool operator==(const AlgebraElement& o) const = default;

private:
    Terms terms_;
};

inline std::string to_string(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || w.empty()) {
            s += to_string(a);
            if (!w.empty()) s += "*";
        }
        if (!w.empty()) s += to_string(w);
    }
    return s;
}

// theta: Y_n -> Ys_{-n}, Ys_n -> Y_{-n}, extended as an anti-homomorphism
// (words reverse). An involution.
inline Word theta(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back({it->kind == Kind::Y ? Kind::Ystar : Kind::Y, -it->index});
    return r;
}

inline AlgebraElement theta(const AlgebraElement& e) {
    AlgebraElement r;
    for (const auto& [w, c] : e.terms()) r.add_term(theta(w), c);
    return r;
}

// tau_mu: Y_n -> mu Y_n, Ys_n -> mu^{-1} Ys_n, mu a nonzero rational.
inline AlgebraElement tau(const AlgebraElement& e, const Rat& mu) {
    if (mu == 0) throw std::invalid_argument("tau: mu must be nonzero");
    AlgebraElement r;
    for (const auto& [w, c] : e.terms()) {
        long k = 0;  // #Y letters minus #Ys letters
        for (const auto& g : w) k += (g.kind == Kind::Y) ? 1 : -1;
        Rat f(1);
        Rat base = k >= 0 ? mu : Rat(1) / mu;
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) f *= base;
        r.add_term(w, c * f);
    }
    return r;
}

// d: the degree derivation, d(Y_n) = -n Y_n, d(Ys_n) = -n Ys_n. On a
// homogeneous word it multiplies by the word's degree.
inline AlgebraElement d_derivation(const AlgebraElement& e) {
    AlgebraElement r;
    for (const auto& [w, c] : e.terms()) r.add_term(w, c * Rat(degree(w)));
    return r;
}

}  // namespace cla
