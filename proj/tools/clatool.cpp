// Command-line front end: every subcommand prints one JSON report to stdout
// and exits 0 iff its checks pass.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "cla/a0.hpp"
#include "cla/bform.hpp"
#include "cla/fermion.hpp"
#include "cla/fock.hpp"
#include "cla/json_io.hpp"
#include "cla/parse.hpp"
#include "cla/rewrite.hpp"
#include "cla/series.hpp"

using namespace cla;

namespace {

int emit(const json& j, bool pass) {
    std::cout << j.dump(2) << "\n";
    return pass ? 0 : 1;
}

Rat parse_mu(const std::string& s) {
    Rat mu = rat_from_string(s);
    if (mu == 0) throw std::invalid_argument("mu must be nonzero");
    return mu;
}

int cmd_nf1(const std::string& expr) {
    AlgebraElement e = parse_element(expr);
    json j{{"command", "nf1"}, {"input", expr}, {"normal_form", to_json(nf1(e))}};
    return emit(j, true);
}

int cmd_nf2(const std::string& expr) {
    AlgebraElement e = parse_element(expr);
    json j{{"command", "nf2"}, {"input", expr}, {"normal_form", to_json(nf2(e))}};
    return emit(j, true);
}

int cmd_pi(const std::string& expr) {
    AlgebraElement e = parse_element(expr);
    json j{{"command", "pi"}, {"input", expr}, {"image", to_json(pi(e))}};
    return emit(j, true);
}

int cmd_confluence(long W) {
    long checked = 0;
    json disagreements = json::array();
    for (long i1 = -W; i1 <= W; ++i1)
        for (long i2 = -W; i2 <= W; ++i2)
            for (long i3 = -W; i3 <= W; ++i3)
                for (OverlapFamily f : {OverlapFamily::YYY, OverlapFamily::YsYY,
                                        OverlapFamily::YsYsY, OverlapFamily::YsYsYs}) {
                    bool in_window;
                    switch (f) {
                        case OverlapFamily::YsYY: in_window = i2 <= i3 + 1; break;
                        case OverlapFamily::YsYsY: in_window = i1 <= i2 + 1; break;
                        default: in_window = i1 <= i2 + 1 && i2 <= i3 + 1; break;
                    }
                    if (!in_window) continue;
                    RewriteReport r = check_overlap(f, i1, i2, i3);
                    ++checked;
                    if (!r.agree)
                        disagreements.push_back({{"family", to_string(f)},
                                                 {"indices", {i1, i2, i3}},
                                                 {"left_first", to_json(r.left_first)},
                                                 {"right_first", to_json(r.right_first)}});
                }
    bool pass = disagreements.empty();
    json j{{"command", "confluence"},
           {"window", W},
           {"overlaps_checked", checked},
           {"disagreements", disagreements},
           {"pass", pass}};
    return emit(j, pass);
}

int cmd_fock_apply(const std::string& expr, const std::string& mu_str) {
    Rat mu = parse_mu(mu_str);
    AlgebraElement e = parse_element(expr);
    FockPolynomial out;
    for (const auto& [w, c] : e.terms()) out += c * apply_word(w, FockPolynomial::one(), mu);
    json j{{"command", "fock apply"},
           {"word", expr},
           {"mu", to_string(mu)},
           {"result", to_json(out)}};
    return emit(j, true);
}

int cmd_fock_duality(long N) {
    json failures = json::array();
    long checked = 0;
    for (long n = 0; n <= N; ++n)
        for (const auto& lam : partitions_of(n)) {
            ++checked;
            if (!duality_check(lam)) failures.push_back(lam);
        }
    bool pass = failures.empty();
    json j{{"command", "fock duality"},
           {"max_weight", N},
           {"partitions_checked", checked},
           {"failures", failures},
           {"pass", pass}};
    return emit(j, pass);
}

int cmd_fock_relations(long M, long D, const std::string& mu_str) {
    Rat mu = parse_mu(mu_str);
    std::vector<FockPolynomial> probes{FockPolynomial::one()};
    for (long d = 1; d <= D; ++d)
        for (const auto& lam : partitions_of(d))
            probes.emplace_back(monomial_from_partition(lam), Rat(1));
    long checked = 0;
    json failures = json::array();
    for (std::size_t p = 0; p < probes.size(); ++p) {
        RelationWindowChecker chk(probes[p], mu);
        for (Relation rel : {Relation::R31, Relation::R32, Relation::R33})
            for (long m = -M; m <= M; ++m)
                for (long n = -M; n <= M; ++n) {
                    ++checked;
                    if (!chk.residual(rel, m, n).is_zero())
                        failures.push_back({{"relation", static_cast<int>(rel)},
                                            {"m", m},
                                            {"n", n},
                                            {"monomial", to_json(probes[p])}});
                }
    }
    bool pass = failures.empty();
    json j{{"command", "fock relations"},
           {"window", M},
           {"degree", D},
           {"mu", to_string(mu)},
           {"residuals_checked", checked},
           {"failures", failures},
           {"pass", pass}};
    return emit(j, pass);
}

int cmd_gram(long n, const std::string& mu_str) {
    Rat mu = parse_mu(mu_str);
    GramMatrix g = gram(n, mu);
    json j{{"command", "gram"},
           {"mu", to_string(mu)},
           {"gram", to_json(g)},
           {"is_identity", g.is_identity()}};
    return emit(j, true);
}

int cmd_gdim(long N, const std::string& mu_str) {
    Rat mu = parse_mu(mu_str);
    std::vector<long> dims = gdim(N, mu);
    // independent oracle: partition counts by direct enumeration
    bool pass = true;
    for (long n = 0; n <= N; ++n)
        if (dims[static_cast<std::size_t>(n)] !=
            static_cast<long>(partitions_of(n).size()))
            pass = false;
    json j{{"command", "gdim"},
           {"max", N},
           {"mu", to_string(mu)},
           {"dims", dims},
           {"matches_partition_counts", pass}};
    return emit(j, pass);
}

int cmd_tilde_verify(long E, long M) {
    long checked = 0;
    json failures = json::array();
    for (const auto& s : fermion_states_up_to(E)) {
        FermionVector v(s);
        for (long m = -M; m <= M; ++m)
            for (long n = -M; n <= M; ++n)
                for (TildeRelation r :
                     {TildeRelation::R310, TildeRelation::R311, TildeRelation::R312}) {
                    ++checked;
                    if (!tilde_relation_residual(r, m, n, v).is_zero())
                        failures.push_back(
                            {{"relation", static_cast<int>(r)}, {"m", m}, {"n", n},
                             {"state", to_string(s)}});
                }
    }
    bool pass = failures.empty();
    json j{{"command", "tilde verify"},
           {"energy", E},
           {"window", M},
           {"residuals_checked", checked},
           {"failures", failures},
           {"pass", pass}};
    return emit(j, pass);
}

int cmd_tilde_sc(const std::string& u, long n, const std::string& w) {
    auto kind = [](const std::string& s) {
        if (s == "a") return CKind::a;
        if (s == "b") return CKind::b;
        throw std::invalid_argument("generator must be 'a' or 'b'");
    };
    FermionVector v = structure_constant(kind(u), n, kind(w));
    json j{{"command", "tilde sc"}, {"u", u}, {"n", n}, {"w", w}, {"result", to_json(v)}};
    return emit(j, true);
}

int cmd_ybe(long T) {
    YbeReport rep = ybe_unitarity_check(SMatrix::standard(), T);
    json qybe = json::array();
    for (const auto& s : rep.qybe_residual) qybe.push_back(to_json(s));
    json unit = json::array();
    for (const auto& s : rep.unitarity_deviation) unit.push_back(to_json(s));
    bool pass = rep.qybe_ok() && rep.unitarity_deviation[0].is_zero() &&
                rep.unitarity_deviation[3].is_zero();
    json j{{"command", "ybe"},
           {"order", T},
           {"qybe_residuals", qybe},
           {"qybe_zero", rep.qybe_ok()},
           {"unitarity_deviations", unit},
           {"pass", pass}};
    return emit(j, pass);
}

int cmd_suite() {
    // condensed end-to-end run over moderate windows
    struct Check {
        std::string name;
        bool ok;
    };
    std::vector<Check> checks;
    {
        bool ok = true;
        for (long i1 = -4; i1 <= 4 && ok; ++i1)
            for (long i2 = -4; i2 <= 4 && ok; ++i2)
                for (long i3 = -4; i3 <= 4 && ok; ++i3)
                    for (OverlapFamily f : {OverlapFamily::YYY, OverlapFamily::YsYY,
                                            OverlapFamily::YsYsY, OverlapFamily::YsYsYs}) {
                        bool in_window;
                        switch (f) {
                            case OverlapFamily::YsYY: in_window = i2 <= i3 + 1; break;
                            case OverlapFamily::YsYsY: in_window = i1 <= i2 + 1; break;
                            default: in_window = i1 <= i2 + 1 && i2 <= i3 + 1; break;
                        }
                        if (in_window && !check_overlap(f, i1, i2, i3).agree) ok = false;
                    }
        checks.push_back({"confluence", ok});
    }
    {
        bool ok = true;
        for (long n = 0; n <= 5 && ok; ++n)
            for (const auto& lam : partitions_of(n))
                if (!duality_check(lam)) ok = false;
        checks.push_back({"duality", ok});
    }
    {
        bool ok = true;
        for (long n = 0; n <= 5 && ok; ++n)
            if (!gram(n, Rat(1)).is_identity()) ok = false;
        checks.push_back({"gram", ok});
    }
    {
        std::vector<long> expect{1, 1, 2, 3, 5, 7, 11, 15, 22};
        checks.push_back({"gdim", gdim(8, Rat(1)) == expect && gdim(8, Rat(2)) == expect});
    }
    {
        checks.push_back({"vacuum_annihilation", lemma_omega_suite(4, ModeWindow{4, 0}).ok()});
    }
    {
        bool ok = true;
        for (const auto& s : fermion_states_up_to(4)) {
            FermionVector v(s);
            for (long m = -3; m <= 3 && ok; ++m)
                for (long n = -3; n <= 3 && ok; ++n)
                    for (TildeRelation r :
                         {TildeRelation::R310, TildeRelation::R311, TildeRelation::R312})
                        if (!tilde_relation_residual(r, m, n, v).is_zero()) ok = false;
            if (!ok) break;
        }
        checks.push_back({"tilde_relations", ok});
    }
    {
        YbeReport rep = ybe_unitarity_check(SMatrix::standard(), 8);
        checks.push_back({"ybe", rep.qybe_ok() && rep.unitarity_deviation[0].is_zero() &&
                                     rep.unitarity_deviation[3].is_zero()});
    }
    bool pass = true;
    json arr = json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"pass", c.ok}});
        if (!c.ok) pass = false;
    }
    json j{{"command", "suite all"}, {"checks", arr}, {"pass", pass}};
    return emit(j, pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in a Clifford-like mode algebra and its realizations"};
    app.require_subcommand(1);

    std::string expr, mu_str = "1", u_gen = "a", w_gen = "b";
    long window = 6, max_weight = 6, degree = 2, energy = 4, order = 8, mode_n = 0, gdim_max = 10;

    auto* c_nf1 = app.add_subcommand("nf1", "Normal form in the strictly-shifted basis");
    c_nf1->add_option("expr", expr, "element expression")->required();

    auto* c_nf2 = app.add_subcommand("nf2", "Normal form in the weakly-increasing basis");
    c_nf2->add_option("expr", expr, "element expression")->required();

    auto* c_pi = app.add_subcommand("pi", "Image in the Clifford smash product");
    c_pi->add_option("expr", expr, "element expression")->required();

    auto* c_conf = app.add_subcommand("confluence", "Resolve all overlap ambiguities");
    c_conf->add_option("--window", window, "index window half-width");

    auto* c_fock = app.add_subcommand("fock", "Polynomial realization commands");
    c_fock->require_subcommand(1);
    auto* c_apply = c_fock->add_subcommand("apply", "Apply an element to the vacuum");
    c_apply->add_option("--word", expr, "element expression")->required();
    c_apply->add_option("--mu", mu_str, "twist parameter p/q");
    auto* c_dual = c_fock->add_subcommand("duality", "Check the conjugate-partition identity");
    c_dual->add_option("--max-weight", max_weight, "largest partition weight");
    auto* c_rel = c_fock->add_subcommand("relations", "Check defining-relation residuals");
    c_rel->add_option("--window", window, "mode index window half-width");
    c_rel->add_option("--degree", degree, "max weighted degree of probe monomials");
    c_rel->add_option("--mu", mu_str, "twist parameter p/q");

    auto* c_gram = app.add_subcommand("gram", "Gram matrix of a degree component");
    c_gram->add_option("--degree", degree, "degree");
    c_gram->add_option("--mu", mu_str, "twist parameter p/q");

    auto* c_gdim = app.add_subcommand("gdim", "Graded dimensions by exact rank");
    c_gdim->add_option("--max", gdim_max, "largest degree");
    c_gdim->add_option("--mu", mu_str, "twist parameter p/q");

    auto* c_tilde = app.add_subcommand("tilde", "Fermionic realization commands");
    c_tilde->require_subcommand(1);
    auto* c_verify = c_tilde->add_subcommand("verify", "Check twin-algebra relation residuals");
    c_verify->add_option("--energy", energy, "max state energy");
    c_verify->add_option("--window", window, "mode index window half-width");
    auto* c_sc = c_tilde->add_subcommand("sc", "Structure constant of generating states");
    c_sc->add_option("--u", u_gen, "left generator: a or b");
    c_sc->add_option("--n", mode_n, "mode index");
    c_sc->add_option("--w", w_gen, "right generator: a or b");

    auto* c_ybe = app.add_subcommand("ybe", "Yang-Baxter and unitarity report");
    c_ybe->add_option("--order", order, "series truncation order");

    auto* c_suite = app.add_subcommand("suite", "Aggregate verification runs");
    c_suite->add_subcommand("all", "Run the condensed verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_nf1) return cmd_nf1(expr);
        if (*c_nf2) return cmd_nf2(expr);
        if (*c_pi) return cmd_pi(expr);
        if (*c_conf) return cmd_confluence(window);
        if (*c_apply) return cmd_fock_apply(expr, mu_str);
        if (*c_dual) return cmd_fock_duality(max_weight);
        if (*c_rel) return cmd_fock_relations(window, degree, mu_str);
        if (*c_gram) return cmd_gram(degree, mu_str);
        if (*c_gdim) return cmd_gdim(gdim_max, mu_str);
        if (*c_verify) return cmd_tilde_verify(energy, window);
        if (*c_sc) return cmd_tilde_sc(u_gen, mode_n, w_gen);
        if (*c_ybe) return cmd_ybe(order);
        if (*c_suite) return cmd_suite();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
