#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "cla/fock.hpp"
#include "cla/partition.hpp"

namespace cla {

// The invariant bilinear form on the irreducible N-graded module, computed
// in the realization M(1): <X v, Z v> = <v, theta(X) Z v> and the vacuum
// pairing reads off the constant coefficient.

// Exact rank of a rational matrix, by fraction-free (Bareiss) elimination
// on rows scaled to integers.
inline long rank_exact(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = 0;
    for (const auto& r : rows) ncols = std::max(ncols, r.size());
    std::vector<std::vector<mpz_class>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        mpz_class lcm = 1;
        for (const auto& x : r) {
            mpz_class den = x.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<mpz_class> row(ncols, 0);
        for (std::size_t j = 0; j < r.size(); ++j)
            row[j] = r[j].get_num() * (lcm / r[j].get_den());
        m.push_back(std::move(row));
    }

    long rank = 0;
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

// <X v, Z v> in L_A(mu); zero across distinct degrees by degree
// orthogonality.
inline Rat form(const Word& X, const Word& Z, const Rat& mu) {
    if (mu == 0) throw std::invalid_argument("form: mu must be nonzero");
    if (degree(X) != degree(Z)) return Rat(0);
    FockPolynomial p = apply_word(concat(theta(X), Z), FockPolynomial::one(), mu);
    if (p.is_zero()) return Rat(0);
    if (p.terms().size() != 1 || !p.terms().begin()->first.empty())
        throw std::logic_error("form: degree-matched pairing produced a non-constant polynomial");
    return p.terms().begin()->second;
}

struct GramMatrix {
    long degree = 0;
    std::vector<Partition> labels;          // canonical order from partitions_of
    std::vector<std::vector<Rat>> entries;  // entries[i][j] = <Y_{-labels[i]}, Y_{-labels[j]}>

    bool is_identity() const {
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = 0; j < entries.size(); ++j)
                if (entries[i][j] != ((i == j) ? Rat(1) : Rat(0))) return false;
        return true;
    }
};

inline GramMatrix gram(long n, const Rat& mu) {
    if (mu == 0) throw std::invalid_argument("gram: mu must be nonzero");
    GramMatrix g;
    g.degree = n;
    g.labels = partitions_of(n);
    std::vector<Word> ws;
    ws.reserve(g.labels.size());
    for (const auto& p : g.labels) ws.push_back(word_Y_neg(p));
    g.entries.resize(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
        g.entries[i].resize(ws.size());
        for (std::size_t j = 0; j < ws.size(); ++j) g.entries[i][j] = form(ws[i], ws[j], mu);
    }
    return g;
}

// Per-degree dimensions of L_A(mu) up to N, certified by the exact rank of
// the joined vector families {Y_{-lambda} 1 : |lambda| <= n}.
inline std::vector<long> gdim(long N, const Rat& mu) {
    if (mu == 0) throw std::invalid_argument("gdim: mu must be nonzero");
    std::vector<std::vector<FockPolynomial>> polys(static_cast<std::size_t>(N) + 1);
    std::map<Monomial, std::size_t> colindex;
    for (long n = 0; n <= N; ++n) {
        for (const auto& lam : partitions_of(n)) {
            FockPolynomial p = apply_word(word_Y_neg(lam), FockPolynomial::one(), mu);
            for (const auto& [m, c] : p.terms()) colindex.try_emplace(m, colindex.size());
            polys[static_cast<std::size_t>(n)].push_back(std::move(p));
        }
    }
    std::vector<std::vector<Rat>> rows;
    std::vector<long> dims;
    long prev_rank = 0;
    for (long n = 0; n <= N; ++n) {
        for (const auto& p : polys[static_cast<std::size_t>(n)]) {
            std::vector<Rat> row(colindex.size(), Rat(0));
            for (const auto& [m, c] : p.terms()) row[colindex.at(m)] = c;
            rows.push_back(std::move(row));
        }
        long r = rank_exact(rows);
        dims.push_back(r - prev_rank);
        prev_rank = r;
    }
    return dims;
}

}  // namespace cla
