#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cla/algebra.hpp"
#include "cla/clifford.hpp"

namespace cla {

// The fermionic Fock space V_C = C / J_+ (J_+ the left ideal of nonnegative
// modes), the pseudo-automorphism Delta(x), and the exact action of the
// twin-algebra modes Yt_n = Res_x x^n Y(a,x) Delta(x) and
// Yts_n = Res_x x^n Y(b,x) Delta(x)^{-1}.

// Basis state a_{m_1}..a_{m_r} b_{n_1}..b_{n_s} |0>, both lists strictly
// increasing, all indices negative.
struct FermionState {
    std::vector<long> a;  // strictly increasing, all < 0
    std::vector<long> b;  // strictly increasing, all < 0

    auto operator<=>(const FermionState&) const = default;

    long charge() const { return static_cast<long>(a.size()) - static_cast<long>(b.size()); }

    // sum of -index over both lists; strictly decreases under index-raising
    long energy() const {
        long e = 0;
        for (long i : a) e -= i;
        for (long i : b) e -= i;
        return e;
    }
};

inline std::string to_string(const FermionState& s) {
    if (s.a.empty() && s.b.empty()) return "|0>";
    std::string out;
    for (long i : s.a) out += "a[" + std::to_string(i) + "]";
    for (long i : s.b) out += "b[" + std::to_string(i) + "]";
    return out + "|0>";
}

class FermionVector {
public:
    using Terms = std::map<FermionState, Rat>;

    FermionVector() = default;
    explicit FermionVector(FermionState s, Rat c = Rat(1)) {
        if (c != 0) terms_[std::move(s)] = std::move(c);
    }
    static FermionVector vacuum() { return FermionVector(FermionState{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FermionState& s, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(s, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FermionVector& operator+=(const FermionVector& o) {
        for (const auto& [s, c] : o.terms_) add_term(s, c);
        return *this;
    }
    FermionVector& operator-=(const FermionVector& o) {
        for (const auto& [s, c] : o.terms_) add_term(s, -c);
        return *this;
    }
    FermionVector& operator*=(const Rat& x) {
        if (x == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [s, c] : terms_) c *= x;
        return *this;
    }
    friend FermionVector operator*(const Rat& x, FermionVector v) { return v *= x; }
    friend FermionVector operator*(FermionVector v, const Rat& x) { return v *= x; }
    friend FermionVector operator+(FermionVector a, const FermionVector& b) { return a += b; }

    bool operator==(const FermionVector&) const = default;

private:
    Terms terms_;
};

// Action of a Clifford generator on a basis state: negative modes insert
// with the transposition sign (or kill on repeat), nonnegative modes
// contract against the partner of opposite kind (b_{-m-1} for a_m) or
// annihilate the vacuum.
inline FermionVector fermion_apply(const CliffGenerator& g, const FermionState& s) {
    FermionVector out;
    const bool isa = (g.kind == CKind::a);
    const auto& same = isa ? s.a : s.b;
    const auto& other = isa ? s.b : s.a;
    if (g.index < 0) {
        auto it = std::lower_bound(same.begin(), same.end(), g.index);
        if (it != same.end() && *it == g.index) return out;  // repeated generator
        std::size_t pos = static_cast<std::size_t>(it - same.begin());
        FermionState ns = s;
        auto& list = isa ? ns.a : ns.b;
        list.insert(list.begin() + static_cast<long>(pos), g.index);
        // crossing the a-block costs one sign per letter passed
        std::size_t swaps = isa ? pos : s.a.size() + pos;
        out.add_term(ns, (swaps % 2 == 0) ? Rat(1) : Rat(-1));
    } else {
        long partner = -g.index - 1;  // delta_{m+n+1,0}
        auto it = std::lower_bound(other.begin(), other.end(), partner);
        if (it == other.end() || *it != partner) return out;  // reaches the vacuum
        std::size_t pos = static_cast<std::size_t>(it - other.begin());
        FermionState ns = s;
        std::size_t swaps;
        if (isa) {
            // a_m passes its own a-block, then b_1..b_{pos}
            ns.b.erase(ns.b.begin() + static_cast<long>(pos));
            swaps = s.a.size() + pos;
        } else {
            ns.a.erase(ns.a.begin() + static_cast<long>(pos));
            swaps = pos;
        }
        out.add_term(ns, (swaps % 2 == 0) ? Rat(1) : Rat(-1));
    }
    return out;
}

inline FermionVector fermion_apply(const CliffGenerator& g, const FermionVector& v) {
    FermionVector out;
    for (const auto& [s, c] : v.terms()) {
        FermionVector t = fermion_apply(g, s);
        t *= c;
        out += t;
    }
    return out;
}

inline FermionVector fermion_apply_word(const CliffWord& w, FermionVector v) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = fermion_apply(*it, v);
    return v;
}

// Delta(x) v = e^{c x/2} (payload), c = #b - #a of v (negated for the
// inverse). The mode-transport recursion produces exactly one exponential
// prefactor with a plain vector payload, which is what this type asserts.
struct ChargedVector {
    long c = 0;  // prefactor e^{c x / 2}
    FermionVector payload;
};

namespace detail {

// Delta(x) (g w) for a single leading generator:
//   a_m -> e^{-x/2} sum_j  1/(2^j j!)     a_{m+j}   (signs flipped for b and
//   b_m -> e^{+x/2} sum_j (-1)^j/(2^j j!) b_{m+j}    for the inverse)
inline FermionVector delta_transport(const CliffGenerator& g, const FermionVector& u,
                                     bool inverse) {
    bool alt = (g.kind == CKind::a) == !inverse ? false : true;
    // alt: whether the j-th coefficient carries (-1)^j
    FermionVector out;
    Rat coef(1);
    for (long j = 0;; ++j) {
        if (j > 0) {
            coef /= Rat(2 * j);
            if (alt) coef = -coef;
        }
        // a_{m+j} can still act: insert while m+j < 0, contract while a
        // partner of opposite kind survives in some state of u
        long idx = g.index + j;
        bool possible = idx < 0;
        if (!possible) {
            long partner = -idx - 1;
            for (const auto& [s, c] : u.terms()) {
                const auto& other = (g.kind == CKind::a) ? s.b : s.a;
                if (std::binary_search(other.begin(), other.end(), partner) ||
                    (!other.empty() && other.front() <= partner)) {
                    possible = true;
                    break;
                }
            }
        }
        if (!possible && j > 0) break;
        if (j == 0 || possible) {
            FermionVector t = fermion_apply(CliffGenerator{g.kind, idx}, u);
            t *= coef;
            out += t;
        }
        if (!possible) break;
    }
    return out;
}

inline ChargedVector delta_state(const FermionState& s, bool inverse) {
    if (s.a.empty() && s.b.empty()) return {0, FermionVector::vacuum()};
    FermionState rest = s;
    CliffGenerator g;
    if (!s.a.empty()) {
        g = ca(s.a.front());
        rest.a.erase(rest.a.begin());
    } else {
        g = cb(s.b.front());
        rest.b.erase(rest.b.begin());
    }
    ChargedVector inner = delta_state(rest, inverse);
    ChargedVector out;
    long step = (g.kind == CKind::a) ? -1 : +1;
    if (inverse) step = -step;
    out.c = inner.c + step;
    out.payload = delta_transport(g, inner.payload, inverse);
    return out;
}

}  // namespace detail

// Delta(x) (or its inverse) applied to a charge-homogeneous vector.
inline ChargedVector delta(const FermionVector& v, bool inverse = false) {
    if (v.is_zero()) return {0, FermionVector()};
    long charge = v.terms().begin()->first.charge();
    for (const auto& [s, c] : v.terms())
        if (s.charge() != charge)
            throw std::invalid_argument("delta: input is not charge-homogeneous");
    ChargedVector out;
    out.c = inverse ? charge : -charge;  // -(#a - #b) = #b - #a
    for (const auto& [s, c] : v.terms()) {
        ChargedVector d = detail::delta_state(s, inverse);
        d.payload *= c;
        out.payload += d.payload;
    }
    return out;
}

// Largest index B with tilde_mode(kind, p, v) possibly nonzero at p <= B:
// above B the mode can neither insert (index >= 0) nor find a contraction
// partner in Delta's payload.
inline long mode_vanishing_bound(const FermionVector& v, Kind kind) {
    ChargedVector d = delta(v, kind == Kind::Ystar);
    long B = -1;
    for (const auto& [s, c] : d.payload.terms()) {
        const auto& other = (kind == Kind::Y) ? s.b : s.a;
        if (!other.empty()) B = std::max(B, -other.front() - 1);
    }
    return B;
}

// Yt_n v (kind Y) or Yts_n v (kind Ystar):
//   with Delta^{+-1}(x) v = e^{c x/2} u, the mode expands as
//   sum_{q>=0} (c/2)^q / q! * (a or b)_{n+q} u, a finite sum.
inline FermionVector tilde_mode(Kind kind, long n, const FermionVector& v) {
    if (v.is_zero()) return {};
    ChargedVector d = delta(v, kind == Kind::Ystar);
    CKind ck = (kind == Kind::Y) ? CKind::a : CKind::b;
    long maxpartner = -1;
    for (const auto& [s, c] : d.payload.terms()) {
        const auto& other = (ck == CKind::a) ? s.b : s.a;
        if (!other.empty()) maxpartner = std::max(maxpartner, -other.front() - 1);
    }
    FermionVector out;
    Rat coef(1);
    for (long q = 0;; ++q) {
        if (q > 0) {
            if (d.c == 0) break;
            coef *= rat(d.c, 2 * q);
        }
        long idx = n + q;
        if (idx >= 0 && idx > maxpartner) {
            if (idx >= 0 && maxpartner < 0) break;
            if (idx > maxpartner) break;
        }
        FermionVector t = fermion_apply(CliffGenerator{ck, idx}, d.payload);
        t *= coef;
        out += t;
    }
    return out;
}

enum class TildeRelation { R310, R311, R312 };

// Component relation applied to v, expected zero:
//   R310:  Yt_m Yt_n   + sum_{i,j} (-1)^i/(i! j!) Yt_{n+j}  Yt_{m+i}
//   R311:  same in Yts
//   R312:  Yt_m Yts_n  + sum_{i,j} (-1)^i/(i! j!) Yts_{n+i} Yt_{m+j}
//          - delta_{m+n+1,0}
// (the paper's 1/k! C(k,i) with k = i+j). Inner offsets are bounded by the
// vanishing bound of v, outer offsets by that of each inner result.
inline FermionVector tilde_relation_residual(TildeRelation which, long m, long n,
                                             const FermionVector& v) {
    Kind inner_kind, outer_kind;
    bool inner_carries_sign;  // whether (-1)^i sits on the inner offset
    switch (which) {
        case TildeRelation::R310:
            inner_kind = outer_kind = Kind::Y;
            inner_carries_sign = true;
            break;
        case TildeRelation::R311:
            inner_kind = outer_kind = Kind::Ystar;
            inner_carries_sign = true;
            break;
        case TildeRelation::R312:
            inner_kind = Kind::Y;
            outer_kind = Kind::Ystar;
            inner_carries_sign = false;  // (-1)^i is on the Yts_{n+i} offset
            break;
    }
    long inner_base = m;
    long outer_base = n;

    FermionVector res = tilde_mode(which == TildeRelation::R312 ? Kind::Ystar : inner_kind, n, v);
    res = tilde_mode(which == TildeRelation::R312 ? Kind::Y : outer_kind, m, res);

    long ibound = mode_vanishing_bound(v, inner_kind);
    Rat fact_i(1);
    for (long i = 0; inner_base + i <= ibound; ++i) {
        if (i > 0) fact_i /= Rat(i);
        FermionVector w = tilde_mode(inner_kind, inner_base + i, v);
        if (w.is_zero()) continue;
        long obound = mode_vanishing_bound(w, outer_kind);
        Rat fact_j(1);
        for (long j = 0; outer_base + j <= obound; ++j) {
            if (j > 0) fact_j /= Rat(j);
            FermionVector t = tilde_mode(outer_kind, outer_base + j, w);
            Rat c = fact_i * fact_j;
            long signed_offset = inner_carries_sign ? i : j;
            if (signed_offset % 2 == 1) c = -c;
            t *= c;
            res += t;
        }
    }
    if (which == TildeRelation::R312 && m + n + 1 == 0) res -= v;
    return res;
}

// Structure constants of the vacuum module: ut_n wt with at = a_{-1}|0>,
// bt = b_{-1}|0> read off the V_C realization.
inline FermionVector structure_constant(CKind u, long n, CKind w) {
    FermionState ws;
    (w == CKind::a ? ws.a : ws.b).push_back(-1);
    return tilde_mode(u == CKind::a ? Kind::Y : Kind::Ystar, n, FermionVector(ws));
}

// All basis states of energy <= emax (strict negative index lists).
inline std::vector<FermionState> fermion_states_up_to(long emax) {
    // strict partitions of e, as decreasing positive parts -> negated indices
    std::vector<std::vector<std::vector<long>>> strict(static_cast<std::size_t>(emax) + 1);
    for (long e = 0; e <= emax; ++e) {
        std::vector<long> cur;
        auto rec = [&](auto&& self, long remaining, long maxpart) -> void {
            if (remaining == 0) {
                strict[static_cast<std::size_t>(e)].push_back(cur);
                return;
            }
            for (long k = std::min(remaining, maxpart); k >= 1; --k) {
                cur.push_back(k);
                self(self, remaining - k, k - 1);
                cur.pop_back();
            }
        };
        rec(rec, e, e);
    }
    std::vector<FermionState> out;
    for (long ea = 0; ea <= emax; ++ea) {
        for (long eb = 0; ea + eb <= emax; ++eb) {
            for (const auto& pa : strict[static_cast<std::size_t>(ea)]) {
                for (const auto& pb : strict[static_cast<std::size_t>(eb)]) {
                    FermionState s;
                    for (long k : pa) s.a.push_back(-k);
                    for (long k : pb) s.b.push_back(-k);
                    std::sort(s.a.begin(), s.a.end());
                    std::sort(s.b.begin(), s.b.end());
                    out.push_back(std::move(s));
                }
            }
        }
    }
    return out;
}

}  // namespace cla
