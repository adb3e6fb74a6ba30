#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "cla/clifford.hpp"
#include "cla/rewrite.hpp"

namespace cla {

// The degree-zero quotient Abar_0 = A_0 / I_0, isomorphic to the group
// algebra of Z with basis the classes Ybar_0^k (negative k meaning powers
// of the class of Ys_0).

class GroupAlgebraElement {
public:
    using Terms = std::map<long, Rat>;

    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(long k, Rat c = Rat(1)) {
        if (c != 0) terms_[k] = std::move(c);
    }
    static GroupAlgebraElement one() { return GroupAlgebraElement(0); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long k, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b) {
        GroupAlgebraElement r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rat& s) {
        for (auto& [k, c] : a.terms_) c *= s;
        if (s == 0) a.terms_.clear();
        return a;
    }

    bool operator==(const GroupAlgebraElement&) const = default;

private:
    Terms terms_;
};

namespace detail {

// Class of a basis-2 word of degree 0 in Abar_0, following the quotient
// recursion: a word ending in a positive-index letter lies in I_0; a
// trailing index-0 letter peels off as Ybar^{+-1}; otherwise the rightmost
// Y is pushed through the Ys-block with
//   Y_m Ys_n = delta_{m+n,0} - Ys_{n-1} Y_{m+1},
// whose fully pushed term ends in Y_{m_r+s} (index >= 1, hence I_0) and
// whose delta terms are strictly shorter basis-2 words.
inline GroupAlgebraElement reduce_b2_word(std::vector<long> m, std::vector<long> n) {
    if (n.empty()) {
        if (m.empty()) return GroupAlgebraElement::one();
        if (m.back() >= 1) return GroupAlgebraElement();
        // weakly increasing, sum 0, max <= 0: all indices are 0
        return GroupAlgebraElement(static_cast<long>(m.size()));
    }
    long ns = n.back();
    if (ns >= 1) return GroupAlgebraElement();
    if (ns == 0) {
        n.pop_back();
        return reduce_b2_word(std::move(m), std::move(n)) * GroupAlgebraElement(-1);
    }
    // all Ys indices negative, so the Y block is nonempty with m_r >= 1
    if (m.empty() || m.back() < 1)
        throw std::logic_error("reduce_A0: malformed degree-0 basis-2 word");
    long mr = m.back();
    m.pop_back();
    GroupAlgebraElement out;
    long s = static_cast<long>(n.size());
    for (long j = 1; j <= s; ++j) {
        if (mr + (j - 1) + n[static_cast<std::size_t>(j - 1)] != 0) continue;
        std::vector<long> nn;
        for (long t = 1; t < j; ++t) nn.push_back(n[static_cast<std::size_t>(t - 1)] - 1);
        for (long t = j + 1; t <= s; ++t) nn.push_back(n[static_cast<std::size_t>(t - 1)]);
        GroupAlgebraElement sub = reduce_b2_word(m, std::move(nn));
        out += sub * ((j % 2 == 1) ? Rat(1) : Rat(-1));
    }
    return out;
}

}  // namespace detail

// The class of a degree-0 element in Abar_0, in the basis {Ybar_0^k : k in Z}.
inline GroupAlgebraElement reduce_A0(const AlgebraElement& e) {
    for (const auto& [w, c] : e.terms())
        if (degree(w) != 0)
            throw std::invalid_argument("reduce_A0: element has a word of nonzero degree");
    AlgebraElement b2 = nf2(e);
    GroupAlgebraElement out;
    for (const auto& [w, c] : b2.terms()) {
        std::vector<long> m, n;
        for (const auto& g : w) (g.kind == Kind::Y ? m : n).push_back(g.index);
        out += detail::reduce_b2_word(std::move(m), std::move(n)) * c;
    }
    return out;
}

}  // namespace cla
