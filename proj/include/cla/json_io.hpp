#pragma once

#include <json.hpp>

#include "cla/a0.hpp"
#include "cla/algebra.hpp"
#include "cla/bform.hpp"
#include "cla/clifford.hpp"
#include "cla/fermion.hpp"
#include "cla/fock.hpp"
#include "cla/series.hpp"

// Deterministic JSON serialization: insertion order is preserved by
// ordered_json and every container iterates in its canonical order, so
// identical inputs yield byte-identical output. Rationals are "p/q" strings.

namespace cla {

using json = nlohmann::ordered_json;

inline json to_json(const Rat& r) { return to_string(r); }

inline json to_json(const Word& w) {
    json arr = json::array();
    for (const auto& g : w) arr.push_back(to_string(g));
    return arr;
}

inline json to_json(const AlgebraElement& e) {
    json arr = json::array();
    for (const auto& [w, c] : e.terms()) arr.push_back({{"coeff", to_json(c)}, {"word", to_json(w)}});
    return arr;
}

inline json to_json(const CliffWord& w) {
    json arr = json::array();
    for (const auto& g : w) arr.push_back(to_string(g));
    return arr;
}

inline json to_json(const SmashElement& e) {
    json arr = json::array();
    for (const auto& [key, c] : e.terms())
        arr.push_back({{"coeff", to_json(c)}, {"word", to_json(key.first)}, {"sigma", key.second}});
    return arr;
}

inline json to_json(const FockPolynomial& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (const auto& [k, e] : m) mono[std::to_string(k)] = e;
        arr.push_back({{"monomial", mono}, {"coeff", to_json(c)}});
    }
    return arr;
}

inline json to_json(const FermionVector& v) {
    json arr = json::array();
    for (const auto& [s, c] : v.terms())
        arr.push_back({{"a", s.a}, {"b", s.b}, {"coeff", to_json(c)}});
    return arr;
}

inline json to_json(const GroupAlgebraElement& e) {
    json arr = json::array();
    for (const auto& [k, c] : e.terms()) arr.push_back({{"power", k}, {"coeff", to_json(c)}});
    return arr;
}

inline json to_json(const GramMatrix& g) {
    json labels = json::array();
    for (const auto& p : g.labels) labels.push_back(p);
    json rows = json::array();
    for (const auto& row : g.entries) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        rows.push_back(r);
    }
    return {{"degree", g.degree}, {"labels", labels}, {"entries", rows}};
}

inline json to_json(const TruncSeries& s) {
    json arr = json::array();
    for (const auto& [k, c] : s.terms())
        arr.push_back({{"x", k.first}, {"z", k.second}, {"coeff", to_json(c)}});
    return arr;
}

}  // namespace cla
