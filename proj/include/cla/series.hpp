#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cla/rational.hpp"

namespace cla {

// Truncated power series in the formal variables x, z (total order <= T),
// enough to expand the signed exponentials of the diagonal S(x) and check
// the quantum Yang-Baxter equation and the unitarity composition.

class TruncSeries {
public:
    using Key = std::pair<long, long>;  // (x-exponent, z-exponent)
    using Terms = std::map<Key, Rat>;

    explicit TruncSeries(long T = 0) : T_(T) {
        if (T < 0) throw std::invalid_argument("TruncSeries: negative truncation order");
    }

    long order() const { return T_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long i, long j, const Rat& c) {
        if (c == 0 || i + j > T_) return;
        auto [it, fresh] = terms_.try_emplace(Key{i, j}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static TruncSeries constant(long T, const Rat& c) {
        TruncSeries s(T);
        s.add_term(0, 0, c);
        return s;
    }

    // exp(cx * x + cz * z), truncated
    static TruncSeries exponential(long T, long cx, long cz) {
        TruncSeries lin(T);
        lin.add_term(1, 0, Rat(cx));
        lin.add_term(0, 1, Rat(cz));
        TruncSeries out = constant(T, Rat(1));
        TruncSeries pow = constant(T, Rat(1));
        Rat invfact(1);
        for (long k = 1; k <= T; ++k) {
            pow = pow * lin;
            invfact /= Rat(k);
            for (const auto& [key, c] : pow.terms_) out.add_term(key.first, key.second, c * invfact);
        }
        return out;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(a.T_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend TruncSeries operator*(const Rat& s, TruncSeries a) {
        if (s == 0) return TruncSeries(a.T_);
        for (auto& [k, c] : a.terms_) c *= s;
        return a;
    }

    bool operator==(const TruncSeries&) const = default;

private:
    long T_;
    Terms terms_;
};

inline std::string to_string(const TruncSeries& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : s.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(c);
        if (k.first > 0) out += "*x^" + std::to_string(k.first);
        if (k.second > 0) out += "*z^" + std::to_string(k.second);
    }
    return out;
}

// Diagonal S(x) on the ordered basis {at ox at, at ox bt, bt ox at, bt ox bt}:
// each entry is sign * e^{coeff * x}.
struct SMatrixEntry {
    int sign = 1;    // +1 or -1
    long coeff = 0;  // exponent coefficient of x
};

struct SMatrix {
    // index 2*u + v with u, v in {0 = at, 1 = bt}
    std::array<SMatrixEntry, 4> entries;

    // S(x)(at ox at) = -e^{x}, (at ox bt) = -e^{x},
    // (bt ox at) = -e^{-x},    (bt ox bt) = -e^{x}
    static SMatrix standard() {
        return SMatrix{{{{-1, 1}, {-1, 1}, {-1, -1}, {-1, 1}}}};
    }
};

// sign * exp(coeff * (cx * x + cz * z))
inline TruncSeries entry_series(const SMatrixEntry& e, long T, long cx, long cz) {
    TruncSeries s = TruncSeries::exponential(T, e.coeff * cx, e.coeff * cz);
    return Rat(e.sign) * s;
}

struct YbeReport {
    long T = 0;
    // residual of S12(x) S13(x+z) S23(z) - S23(z) S13(x+z) S12(x) per tensor
    // basis vector u ox v ox w, index 4u + 2v + w
    std::array<TruncSeries, 8> qybe_residual{TruncSeries(0), TruncSeries(0), TruncSeries(0),
                                             TruncSeries(0), TruncSeries(0), TruncSeries(0),
                                             TruncSeries(0), TruncSeries(0)};
    // S(x) o swap o S(-x) o swap minus identity, per basis vector u ox v
    std::array<TruncSeries, 4> unitarity_deviation{TruncSeries(0), TruncSeries(0), TruncSeries(0),
                                                   TruncSeries(0)};

    bool qybe_ok() const {
        for (const auto& s : qybe_residual)
            if (!s.is_zero()) return false;
        return true;
    }
};

inline YbeReport ybe_unitarity_check(const SMatrix& S, long T) {
    if (T < 1) throw std::invalid_argument("ybe_unitarity_check: truncation order must be >= 1");
    YbeReport rep;
    rep.T = T;
    auto ent = [&](int u, int v) { return S.entries[static_cast<std::size_t>(2 * u + v)]; };
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            for (int w = 0; w < 2; ++w) {
                TruncSeries s12 = entry_series(ent(u, v), T, 1, 0);   // argument x
                TruncSeries s13 = entry_series(ent(u, w), T, 1, 1);   // argument x + z
                TruncSeries s23 = entry_series(ent(v, w), T, 0, 1);   // argument z
                TruncSeries lhs = s12 * s13 * s23;
                TruncSeries rhs = s23 * s13 * s12;
                rep.qybe_residual[static_cast<std::size_t>(4 * u + 2 * v + w)] = lhs - rhs;
            }
        }
    }
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            // swap sends u ox v to v ox u, S(-x) multiplies by s_{vu}(-x),
            // swap back, then S(x) multiplies by s_{uv}(x)
            TruncSeries back = entry_series(ent(v, u), T, -1, 0);
            TruncSeries fwd = entry_series(ent(u, v), T, 1, 0);
            rep.unitarity_deviation[static_cast<std::size_t>(2 * u + v)] =
                fwd * back - TruncSeries::constant(T, Rat(1));
        }
    }
    return rep;
}

}  // namespace cla
