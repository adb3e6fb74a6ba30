#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cla/algebra.hpp"
#include "cla/partition.hpp"

namespace cla {

// The polynomial Fock space M(1) = Q[x_1, x_2, ...] carrying the vertex
// operator realization
//   Y(z)  =            exp(sum x_n z^n / n) exp(-sum n d/dx_n (z^-n + z^n)/n)
//   Ys(z) = (1 - z^2)  exp(-sum x_n z^n / n) exp(+sum n d/dx_n (z^-n + z^n)/n)
// with Y_n the coefficient of z^{-n}. The annihilation exponential acts as
// the substitution x_j -> x_j -+ (z^-j + z^j), so every mode application is
// a finite exact computation.

// Sorted (variable index k >= 1, exponent >= 1) pairs; kept sorted by
// variable so comparison and merging are linear scans.
using Monomial = std::vector<std::pair<long, long>>;

inline long weighted_degree(const Monomial& m) {
    long d = 0;
    for (const auto& [k, e] : m) d += k * e;
    return d;
}

// Product of two monomials: merge by variable, add exponents.
inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) m.push_back(a[i++]);
        else if (b[j].first < a[i].first) m.push_back(b[j++]);
        else {
            m.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    while (i < a.size()) m.push_back(a[i++]);
    while (j < b.size()) m.push_back(b[j++]);
    return m;
}

// x_{p_1} x_{p_2} ... for a partition (weakly decreasing parts).
inline Monomial monomial_from_partition(const std::vector<long>& parts) {
    Monomial m;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (!m.empty() && m.back().first == *it) ++m.back().second;
        else m.emplace_back(*it, 1);
    }
    return m;
}

class FockPolynomial {
public:
    using Terms = std::map<Monomial, Rat>;

    FockPolynomial() = default;
    explicit FockPolynomial(Rat c) {
        if (c != 0) terms_[Monomial{}] = std::move(c);
    }
    FockPolynomial(Monomial m, Rat c) {
        if (c != 0) terms_[std::move(m)] = std::move(c);
    }
    static FockPolynomial one() { return FockPolynomial(Rat(1)); }
    static FockPolynomial var(long k) { return FockPolynomial(Monomial{{k, 1}}, Rat(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // max over monomials of sum k * exponent(k); 0 for the zero polynomial
    long weighted_degree() const {
        long d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, cla::weighted_degree(m));
        return d;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FockPolynomial& operator+=(const FockPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    FockPolynomial& operator-=(const FockPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    FockPolynomial& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend FockPolynomial operator+(FockPolynomial a, const FockPolynomial& b) { return a += b; }
    friend FockPolynomial operator-(FockPolynomial a, const FockPolynomial& b) { return a -= b; }
    friend FockPolynomial operator*(FockPolynomial a, const Rat& s) { return a *= s; }
    friend FockPolynomial operator*(const Rat& s, FockPolynomial a) { return a *= s; }

    friend FockPolynomial operator*(const FockPolynomial& a, const FockPolynomial& b) {
        FockPolynomial r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                r.add_term(monomial_mul(ma, mb), ca * cb);
            }
        }
        return r;
    }

    bool operator==(const FockPolynomial&) const = default;

private:
    Terms terms_;
};

// E_0..E_t with sum_t E_t z^t = exp(sign * sum_k x_k z^k / k), via the
// recurrence t E_t = sign * sum_{k=1..t} x_k E_{t-k}.
inline std::vector<FockPolynomial> exp_coefficients(long t, int sign) {
    std::vector<FockPolynomial> E;
    E.reserve(static_cast<std::size_t>(t) + 1);
    E.push_back(FockPolynomial::one());
    for (long i = 1; i <= t; ++i) {
        FockPolynomial acc;
        for (long k = 1; k <= i; ++k)
            acc += FockPolynomial::var(k) * E[static_cast<std::size_t>(i - k)];
        acc *= rat(sign, i);
        E.push_back(std::move(acc));
    }
    return E;
}

namespace detail {

// Shared cache of the E_t tables; deque keeps references stable as the
// table grows.
inline const std::deque<FockPolynomial>& exp_table(long t, int sign) {
    static std::mutex mtx;
    static std::deque<FockPolynomial> plus{FockPolynomial::one()};
    static std::deque<FockPolynomial> minus{FockPolynomial::one()};
    std::deque<FockPolynomial>& E = (sign > 0) ? plus : minus;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(E.size()) <= t) {
        long i = static_cast<long>(E.size());
        FockPolynomial acc;
        for (long k = 1; k <= i; ++k)
            acc += FockPolynomial::var(k) * E[static_cast<std::size_t>(i - k)];
        acc *= rat(sign, i);
        E.push_back(std::move(acc));
    }
    return E;
}

}  // namespace detail

namespace detail {

// Laurent polynomial in z with Fock coefficients.
using LaurentFock = std::map<long, FockPolynomial>;

inline void laurent_add(LaurentFock& L, long p, const FockPolynomial& q) {
    if (q.is_zero()) return;
    auto [it, fresh] = L.try_emplace(p, q);
    if (!fresh) {
        it->second += q;
        if (it->second.is_zero()) L.erase(it);
    }
}

// (x_j + sign (z^-j + z^j))^e, expanded once per (j, e, sign) and cached:
//   sum_{b<=e} C(e,b) x_j^{e-b} sign^b sum_{c<=b} C(b,c) z^{j(2c-b)}.
inline const LaurentFock& binomial_factor(long j, long e, int sign) {
    static std::mutex mtx;
    static std::map<std::tuple<long, long, int>, LaurentFock> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(j, e, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    LaurentFock f;
    Rat outer(1);  // C(e,b) sign^b
    for (long b = 0; b <= e; ++b) {
        if (b > 0) outer *= rat(sign * (e - b + 1), b);
        Monomial m;
        if (e - b > 0) m.emplace_back(j, e - b);
        Rat inner(1);  // C(b,c)
        for (long c = 0; c <= b; ++c) {
            if (c > 0) inner *= rat(b - c + 1, c);
            laurent_add(f, j * (2 * c - b), FockPolynomial(m, outer * inner));
        }
    }
    return cache.emplace(key, std::move(f)).first->second;
}

// P with x_j replaced by x_j + shift_sign * (z^-j + z^j).
inline LaurentFock substitute(const FockPolynomial& P, int shift_sign) {
    LaurentFock out;
    for (const auto& [mono, coeff] : P.terms()) {
        LaurentFock acc;
        acc[0] = FockPolynomial(coeff);
        for (const auto& [j, e] : mono) {
            const LaurentFock& f = binomial_factor(j, e, shift_sign);
            LaurentFock next;
            for (const auto& [p, q] : acc)
                for (const auto& [pf, qf] : f) laurent_add(next, p + pf, q * qf);
            acc = std::move(next);
        }
        for (const auto& [p, q] : acc) laurent_add(out, p, q);
    }
    return out;
}

}  // namespace detail

// Coefficient of z^{-n} in Y(z) P (kind Y) or Ys(z) P (kind Ystar), scaled
// by mu resp. mu^{-1} (the tau_mu twist giving L_A(mu)).
inline FockPolynomial apply_mode(Kind kind, long n, const FockPolynomial& P, const Rat& mu) {
    if (mu == 0) throw std::invalid_argument("apply_mode: mu must be nonzero");
    if (P.is_zero()) return {};
    const bool star = (kind == Kind::Ystar);
    detail::LaurentFock L = detail::substitute(P, star ? +1 : -1);
    if (star) {
        detail::LaurentFock shifted;
        for (const auto& [p, q] : L) {
            detail::laurent_add(shifted, p, q);
            detail::laurent_add(shifted, p + 2, Rat(-1) * q);
        }
        L = std::move(shifted);
    }
    if (L.empty()) return {};
    long tmax = -n - L.begin()->first;  // creation order needed for z^{-n}
    if (tmax < 0) return {};
    const std::deque<FockPolynomial>& E = detail::exp_table(tmax, star ? -1 : +1);
    FockPolynomial out;
    for (const auto& [p, q] : L) {
        long t = -n - p;
        if (t >= 0) out += E[static_cast<std::size_t>(t)] * q;
    }
    out *= (star ? Rat(1) / mu : mu);
    return out;
}

// Modes applied rightmost-first.
inline FockPolynomial apply_word(const Word& w, FockPolynomial P, const Rat& mu) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) P = apply_mode(it->kind, it->index, P, mu);
    return P;
}

// Y_{-lambda} 1 = (-1)^{|lambda|} Ys_{-lambda'} 1, checked exactly.
inline bool duality_check(const Partition& lambda, const Rat& mu = Rat(1)) {
    if (mu != 1) throw std::invalid_argument("duality_check: stated in the untwisted module");
    FockPolynomial lhs = apply_word(word_Y_neg(lambda), FockPolynomial::one(), Rat(1));
    FockPolynomial rhs = apply_word(word_Ys_neg(conjugate(lambda)), FockPolynomial::one(), Rat(1));
    rhs *= (weight(lambda) % 2 == 0) ? Rat(1) : Rat(-1);
    return lhs == rhs;
}

enum class Relation { R31, R32, R33 };  // the three defining relations

// Left side minus right side of the chosen relation applied to P; zero iff
// the realization satisfies it on P.
inline FockPolynomial relation_residual(Relation which, long m, long n, const FockPolynomial& P,
                                        const Rat& mu) {
    switch (which) {
        case Relation::R31: {
            FockPolynomial r = apply_mode(Kind::Y, m, apply_mode(Kind::Y, n, P, mu), mu);
            r += apply_mode(Kind::Y, n + 1, apply_mode(Kind::Y, m - 1, P, mu), mu);
            return r;
        }
        case Relation::R32: {
            FockPolynomial r = apply_mode(Kind::Ystar, m, apply_mode(Kind::Ystar, n, P, mu), mu);
            r += apply_mode(Kind::Ystar, n + 1, apply_mode(Kind::Ystar, m - 1, P, mu), mu);
            return r;
        }
        case Relation::R33: {
            FockPolynomial r = apply_mode(Kind::Y, m, apply_mode(Kind::Ystar, n, P, mu), mu);
            r += apply_mode(Kind::Ystar, n - 1, apply_mode(Kind::Y, m + 1, P, mu), mu);
            if (m + n == 0) r -= P;
            return r;
        }
    }
    return {};
}

// Pointwise equivalent of relation_residual over a whole index window,
// memoizing the two-mode compositions (each inner application is shared by
// every outer index, and each composition appears in two residuals).
class RelationWindowChecker {
public:
    RelationWindowChecker(FockPolynomial P, Rat mu) : P_(std::move(P)), mu_(std::move(mu)) {
        if (mu_ == 0) throw std::invalid_argument("RelationWindowChecker: mu must be nonzero");
    }

    FockPolynomial residual(Relation which, long m, long n) { return residual(which, m, n, mu_); }

    // The twist acts on each mode as a global scalar (mu for Y, 1/mu for Y*),
    // so compositions are cached once untwisted and rescaled here; this lets a
    // single checker serve many twists of the same state.
    FockPolynomial residual(Relation which, long m, long n, const Rat& mu) {
        if (mu == 0) throw std::invalid_argument("RelationWindowChecker: mu must be nonzero");
        switch (which) {
            case Relation::R31:
                return (outer(Kind::Y, m, Kind::Y, n) + outer(Kind::Y, n + 1, Kind::Y, m - 1)) *
                       (mu * mu);
            case Relation::R32:
                return (outer(Kind::Ystar, m, Kind::Ystar, n) +
                        outer(Kind::Ystar, n + 1, Kind::Ystar, m - 1)) *
                       (Rat(1) / (mu * mu));
            case Relation::R33: {
                FockPolynomial r =
                    outer(Kind::Y, m, Kind::Ystar, n) + outer(Kind::Ystar, n - 1, Kind::Y, m + 1);
                if (m + n == 0) r -= P_;
                return r;
            }
        }
        return {};
    }

private:
    FockPolynomial P_;
    Rat mu_;
    std::map<std::pair<Kind, long>, FockPolynomial> inner_;
    std::map<std::tuple<Kind, long, Kind, long>, FockPolynomial> outer_;

    const FockPolynomial& inner(Kind k, long idx) {
        auto key = std::make_pair(k, idx);
        auto it = inner_.find(key);
        if (it != inner_.end()) return it->second;
        return inner_.emplace(key, apply_mode(k, idx, P_, Rat(1))).first->second;
    }

    const FockPolynomial& outer(Kind ok, long a, Kind ik, long b) {
        auto key = std::make_tuple(ok, a, ik, b);
        auto it = outer_.find(key);
        if (it != outer_.end()) return it->second;
        return outer_.emplace(key, apply_mode(ok, a, inner(ik, b), Rat(1))).first->second;
    }
};

// Test-suite window: index bound M and weighted-degree bound D.
struct ModeWindow {
    long M = 0;
    long D = 0;
};

struct OmegaReport {
    long words_checked = 0;
    std::vector<Word> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

inline void enum_weakly_increasing(long len, long lo, long hi, std::vector<long>& cur,
                                   std::vector<std::vector<long>>& out) {
    if (static_cast<long>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    long start = cur.empty() ? lo : cur.back();
    for (long v = start; v <= hi; ++v) {
        cur.push_back(v);
        enum_weakly_increasing(len, lo, hi, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All basis-2 words (weakly increasing Y block then weakly increasing Ys
// block) of degree -k, indices in [-M, M], word length <= maxlen.
inline std::vector<Word> basis2_words_of_degree(long k, long M, long maxlen) {
    std::vector<Word> out;
    for (long r = 0; r <= maxlen; ++r) {
        for (long s = 0; r + s <= maxlen; ++s) {
            if (r + s == 0) {
                if (k == 0) out.push_back(Word{});
                continue;
            }
            std::vector<std::vector<long>> ms, ns;
            std::vector<long> cur;
            detail::enum_weakly_increasing(r, -M, M, cur, ms);
            detail::enum_weakly_increasing(s, -M, M, cur, ns);
            for (const auto& mvec : ms) {
                for (const auto& nvec : ns) {
                    long sum = 0;
                    for (long v : mvec) sum += v;
                    for (long v : nvec) sum += v;
                    if (sum != k) continue;
                    Word w;
                    for (long v : mvec) w.push_back(Y(v));
                    for (long v : nvec) w.push_back(Ys(v));
                    out.push_back(std::move(w));
                }
            }
        }
    }
    return out;
}

// Checks that every basis-2 word of degree -k, 1 <= k <= kmax, with indices
// in [-M, M] and length <= maxlen annihilates the vacuum 1 in M(1).
inline OmegaReport lemma_omega_suite(long kmax, const ModeWindow& window, long maxlen = 4) {
    OmegaReport rep;
    for (long k = 1; k <= kmax; ++k) {
        for (const auto& w : basis2_words_of_degree(k, window.M, maxlen)) {
            ++rep.words_checked;
            if (!apply_word(w, FockPolynomial::one(), Rat(1)).is_zero()) rep.violations.push_back(w);
        }
    }
    return rep;
}

}  // namespace cla
