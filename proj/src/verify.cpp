#include "enttopo/verify.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "enttopo/correlations.hpp"
#include "enttopo/graphstates.hpp"
#include "enttopo/homology.hpp"
#include "enttopo/invariants.hpp"
#include "enttopo/io.hpp"

namespace enttopo {

bool SuiteReport::passed() const {
    for (const CheckResult& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

std::string SuiteReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    nlohmann::json j{{"suite", suite},
                     {"passed", passed()},
                     {"checks", std::move(checks_json)},
                     {"violations", violations}};
    return j.dump(2) + "\n";
}

namespace {

class SuiteBuilder {
  public:
    explicit SuiteBuilder(std::string suite) { report_.suite = std::move(suite); }

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        report_.checks.push_back({name, ok, detail});
    }

    void violation(const std::string& text) {
        if (report_.violations.size() < 10) report_.violations.push_back(text);
    }

    SuiteReport finish() { return std::move(report_); }

  private:
    SuiteReport report_;
};

std::string describe_graph(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n_vertices() << " edges={";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) out << ",";
        first = false;
        out << u + 1 << "-" << v + 1;
    }
    out << "}";
    return out.str();
}

bool all_pairs_c2_half(const PureState& state, double tol) {
    MarginalTable table(state);
    const CorrelationFunctional c2 = CorrelationFunctional::tsallis2_total();
    const int n = state.n_qubits();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double value = functional_value(c2, table, QubitSubset::from_members({u, v}, n));
            if (std::abs(value - 0.5) > tol) return false;
        }
    }
    return true;
}

// The theorem's barcode fingerprint: beta_0 stays n on [0, 0.5), then a
// single component and (n-1)(n-2)/2 one-dimensional holes appear at 0.5.
bool ghz_barcode_signature(const PureState& state) {
    const int n = state.n_qubits();
    const FilteredComplex complex = build_filtration(
        state, CorrelationFunctional::tsallis2_total(), std::min(2, n - 1));
    const std::vector<BettiCurve> curves = betti_curves(complex);
    const std::vector<double>& grid = complex.critical_values();
    if (grid.empty() || grid.front() != 0.0) return false;
    if (curves[0].values.front() != n) return false;

    // First merge of components.
    std::size_t merge = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (curves[0].values[i] < n) {
            merge = i;
            break;
        }
    }
    if (merge == grid.size()) return false;
    if (std::abs(grid[merge] - 0.5) > kNumeric.birth_tolerance) return false;
    if (curves[0].values[merge] != 1) return false;
    const long long expected_cycles = static_cast<long long>(n - 1) * (n - 2) / 2;
    return curves[1].values[merge] == expected_cycles;
}

double dense_avg_vertex_correlation(const PureState& state, bool include_full_set) {
    MarginalTable table(state);
    const int n = state.n_qubits();
    const std::uint32_t full = QubitSubset::full_set(n).mask();
    double total = 0.0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!include_full_set && mask == full) continue;
        double singles = 0.0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            singles += table.entropy(EntropyKind::von_neumann, rest & (~rest + 1u));
        }
        total += singles - table.entropy(EntropyKind::von_neumann, mask);
    }
    return total / std::pow(2.0, n);
}

SuiteReport suite_ghz_footprint() {
    SuiteBuilder suite("ghz-footprint");

    for (int n = 4; n <= 7; ++n) {
        bool ok = true;
        std::string bad;
        const std::vector<std::pair<std::string, PureState>> sources = {
            {"ghz", make_ghz(n)},
            {"star", graph_state_vector(builtin_graph("star" + std::to_string(n)))},
            {"complete", graph_state_vector(builtin_graph("complete" + std::to_string(n)))}};
        for (const auto& [label, state] : sources) {
            if (!ghz_barcode_signature(state)) {
                ok = false;
                bad += label + std::to_string(n) + " ";
                suite.violation("missing GHZ fingerprint on " + label + std::to_string(n));
            }
        }
        suite.check("ghz/star/complete fingerprint at n=" + std::to_string(n), ok, bad);
    }

    for (int n = 4; n <= 7; ++n) {
        const std::vector<Graph> catalog =
            (n <= 6) ? connected_graph_catalog(n) : random_connected_graphs(7, 200, 2024);
        int counterexamples = 0;
        for (const Graph& g : catalog) {
            const bool structural = is_lu_ghz_graph(g);
            const PureState state = graph_state_vector(g);
            const bool pairwise = all_pairs_c2_half(state, 1e-9);
            const bool footprint = ghz_barcode_signature(state);
            if (structural != pairwise || pairwise != footprint) {
                ++counterexamples;
                suite.violation("equivalence broken on " + describe_graph(g));
            }
        }
        std::ostringstream detail;
        detail << catalog.size() << " graphs, " << counterexamples << " counterexamples";
        suite.check("structural == pairwise == footprint at n=" + std::to_string(n),
                    counterexamples == 0, detail.str());
    }

    return suite.finish();
}

SuiteReport suite_iec_identity() {
    SuiteBuilder suite("iec-identity");
    std::vector<std::pair<std::string, PureState>> states;
    for (int n = 3; n <= 6; ++n) states.emplace_back("ghz" + std::to_string(n), make_ghz(n));
    for (int n = 3; n <= 5; ++n) states.emplace_back("w" + std::to_string(n), make_w(n));
    states.emplace_back("pentagon5", graph_state_vector(builtin_graph("pentagon5")));
    states.emplace_back("wheel6", graph_state_vector(builtin_graph("wheel6")));
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            states.emplace_back("random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                                random_pure(n, seed));
        }
    }

    for (const auto& [label, state] : states) {
        for (const CorrelationFunctional& f :
             {CorrelationFunctional::vn_total(), CorrelationFunctional::tsallis2_total()}) {
            const IecReport report = iec_report(state, f);
            const double gap = std::abs(report.iec_integral - report.iec_closed_form);
            const bool ok = gap < 1e-8;
            if (!ok) {
                suite.violation(label + " [" + f.name() + "]: |integral - closed| = " +
                                format_sig(gap));
            }
            suite.check(label + " [" + std::string(f.name()) + "]", ok,
                        "integral=" + format_sig(report.iec_integral) +
                            " closed=" + format_sig(report.iec_closed_form));
        }
        if (state.n_qubits() % 2 == 1) {
            const double closed = iec_closed_form(state, EntropyKind::von_neumann);
            const bool ok = std::abs(closed) < 1e-8;
            if (!ok) suite.violation(label + ": odd-n IEC = " + format_sig(closed));
            suite.check(label + " odd-n vanishing", ok, format_sig(closed));
        }
    }
    return suite.finish();
}

SuiteReport suite_ade_bounds() {
    SuiteBuilder suite("ade-bounds");

    const PureState pentagon = graph_state_vector(builtin_graph("pentagon5"));
    const PureState wheel = graph_state_vector(builtin_graph("wheel6"));

    const double ade5 = ade(pentagon);
    suite.check("ade(pentagon5) = 1.5625",
                std::abs(ade5 - 1.5625) < 1e-9 &&
                    std::abs(ade5 - ade_ame_closed_form(5)) < 1e-9,
                format_sig(ade5));
    const double ade6 = ade(wheel);
    suite.check("ade(wheel6) = 2.0625",
                std::abs(ade6 - 2.0625) < 1e-9 && std::abs(ade6 - ade_ame_closed_form(6)) < 1e-9,
                format_sig(ade6));

    int bound_failures = 0;
    int bound_total = 0;
    auto check_bounds = [&](const std::string& label, const PureState& state) {
        const BoundsReport b = bounds_report(state);
        ++bound_total;
        if (!(b.lower <= b.ade + 1e-8 && b.ade <= b.upper + 1e-8)) {
            ++bound_failures;
            suite.violation("bounds violated on " + label + ": lower=" + format_sig(b.lower) +
                            " ade=" + format_sig(b.ade) + " upper=" + format_sig(b.upper));
        }
    };
    check_bounds("pentagon5", pentagon);
    check_bounds("wheel6", wheel);
    for (int n = 3; n <= 6; ++n) {
        check_bounds("ghz" + std::to_string(n), make_ghz(n));
        check_bounds("w" + std::to_string(n), make_w(n));
        for (std::uint64_t seed = 100; seed < 125; ++seed) {
            check_bounds("random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                         random_pure(n, seed));
        }
    }
    suite.check("bound theorem on random + built-in states", bound_failures == 0,
                std::to_string(bound_total) + " states checked");

    const double slack5 = bounds_report(pentagon).slack;
    suite.check("pentagon5 slack = 0.9375",
                std::abs(slack5 - 0.9375) < 1e-9 &&
                    std::abs(slack5 - ame_slack_closed_form(5)) < 1e-9,
                format_sig(slack5));
    const double slack6 = bounds_report(wheel).slack;
    suite.check("wheel6 slack = 1.125",
                std::abs(slack6 - 1.125) < 1e-9 &&
                    std::abs(slack6 - ame_slack_closed_form(6)) < 1e-9,
                format_sig(slack6));

    bool window_ok = true;
    for (int n = 5; n <= 25; ++n) {
        const double scaled = ame_slack_closed_form(n) / std::sqrt(static_cast<double>(n));
        if (scaled < 0.3 || scaled > 0.6) {
            window_ok = false;
            suite.violation("slack window broken at n=" + std::to_string(n) + ": " +
                            format_sig(scaled));
        }
    }
    suite.check("slack / sqrt(n) in [0.3, 0.6] for n=5..25", window_ok);

    return suite.finish();
}

SuiteReport suite_kuniform() {
    SuiteBuilder suite("kuniform");

    const std::vector<std::pair<std::string, int>> expectations = {
        {"pentagon5", 2}, {"wheel6", 3}, {"kuniform8_1", 1}, {"kuniform8_2", 2}, {"kuniform8_3", 3}};
    for (const auto& [name, expected_k] : expectations) {
        const Graph g = builtin_graph(name);
        const PureState state = graph_state_vector(g);
        const int k = k_uniformity(state, 1e-9);
        const bool ok = (k == expected_k);
        if (!ok) {
            suite.violation(name + ": k_uniformity = " + std::to_string(k) + ", expected " +
                            std::to_string(expected_k));
        }
        suite.check(name + " uniformity = " + std::to_string(expected_k), ok,
                    "measured " + std::to_string(k));
    }
    suite.check("pentagon5 is AME", is_ame(graph_state_vector(builtin_graph("pentagon5")), 1e-9));
    suite.check("wheel6 is AME", is_ame(graph_state_vector(builtin_graph("wheel6")), 1e-9));

    for (int k = 1; k <= 3; ++k) {
        const std::string name = "kuniform8_" + std::to_string(k);
        const double value = ade(graph_state_vector(builtin_graph(name)));
        const double bound = ade_kuniform_lower_bound(8, k);
        const bool ok = value >= bound - 1e-9;
        if (!ok) {
            suite.violation(name + ": ade " + format_sig(value) + " below bound " +
                            format_sig(bound));
        }
        suite.check(name + " ade above k-uniform lower bound", ok,
                    "ade=" + format_sig(value) + " bound=" + format_sig(bound));
    }

    for (const std::string name : {"pentagon5", "wheel6"}) {
        const Graph g = builtin_graph(name);
        const PureState state = graph_state_vector(g);
        const int n = g.n_vertices();
        const FilteredComplex complex =
            build_filtration(state, CorrelationFunctional::tsallis2_total(), n - 1);
        bool ok = true;
        for (const FilteredSimplex& s : complex.entries()) {
            const double expected = ame_birth_time(n, s.dim);
            if (std::abs(s.birth - expected) > 1e-9) {
                ok = false;
                suite.violation(name + ": simplex of dim " + std::to_string(s.dim) + " born at " +
                                format_sig(s.birth) + ", formula " + format_sig(expected));
            }
        }
        suite.check(name + " births on the AME grid", ok);
    }

    bool support_ok = true;
    for (const std::string name :
         {"pentagon5", "wheel6", "kuniform8_1", "kuniform8_2", "kuniform8_3"}) {
        const Graph g = builtin_graph(name);
        const PureState state = graph_state_vector(g);
        const int n = g.n_vertices();
        const std::uint32_t full = QubitSubset::full_set(n).mask();
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            const QubitSubset a(mask, n);
            const double fast = linear_entropy_from_support(g, a);
            const double dense = linear_entropy(partial_trace(state, a));
            if (std::abs(fast - dense) > kNumeric.support_entropy_tolerance) {
                support_ok = false;
                suite.violation(name + ": support formula off by " + format_sig(fast - dense) +
                                " on mask " + std::to_string(mask));
            }
        }
    }
    suite.check("support-formula entropies match dense marginals", support_ok);

    return suite.finish();
}

SuiteReport suite_appendix() {
    SuiteBuilder suite("appendix");

    bool lemma_ok = true;
    for (int n = 0; n <= 20 && lemma_ok; ++n) {
        for (int m = 0; m <= n; ++m) {
            long long direct = 0;
            for (int i = 0; i <= m; ++i) direct += (i % 2 == 0 ? 1 : -1) * binomial(n, i);
            const long long closed =
                ((m % 2 == 0) ? 1 : -1) * (m == 0 ? 1 : binomial(n - 1, m));
            if (direct != closed || alternating_binomial(n, m) != direct) {
                lemma_ok = false;
                suite.violation("alternating binomial broken at n=" + std::to_string(n) +
                                ", m=" + std::to_string(m));
                break;
            }
        }
    }
    suite.check("alternating binomial identity, 0 <= m <= n <= 20", lemma_ok);

    const PureState pentagon = graph_state_vector(builtin_graph("pentagon5"));
    const PureState wheel = graph_state_vector(builtin_graph("wheel6"));
    suite.check("correlation vanishes on small subsets (pentagon5)",
                ame_correlation_vanishes(pentagon, 1e-9));
    suite.check("correlation vanishes on small subsets (wheel6)",
                ame_correlation_vanishes(wheel, 1e-9));
    suite.check("correlation does not vanish on ghz5",
                !ame_correlation_vanishes(make_ghz(5), 1e-9));

    const std::vector<std::pair<std::string, PureState>> ame_states = {{"pentagon5", pentagon},
                                                                       {"wheel6", wheel}};
    for (const auto& [name, state] : ame_states) {
        const int n = state.n_qubits();
        const double formula = ame_avg_total_correlation(n);
        const double proper = dense_avg_vertex_correlation(state, false);
        const double all = dense_avg_vertex_correlation(state, true);
        const bool ok = std::abs(formula - proper) < 1e-9 &&
                        std::abs(all - (formula + n / std::pow(2.0, n))) < 1e-9;
        if (!ok) {
            suite.violation(name + ": formula=" + format_sig(formula) + " proper=" +
                            format_sig(proper) + " all=" + format_sig(all));
        }
        suite.check(name + " average correlation matches the proper-subset sum", ok,
                    "formula=" + format_sig(formula) + " all-subsets adds n/2^n = " +
                        format_sig(n / std::pow(2.0, n)));
    }

    // n=2 edge case: the closed form gives 0 while the all-subsets average of
    // a Bell pair is 0.5 (the full-set term). Same n/2^n offset as above.
    const PureState bell = make_ghz(2);
    const double bell_all = dense_avg_vertex_correlation(bell, true);
    const double bell_proper = dense_avg_vertex_correlation(bell, false);
    suite.check("bell pair edge case: formula 0, all-subsets 0.5",
                std::abs(ame_avg_total_correlation(2)) < 1e-12 &&
                    std::abs(bell_all - 0.5) < 1e-9 && std::abs(bell_proper) < 1e-9,
                "all=" + format_sig(bell_all) + " proper=" + format_sig(bell_proper));

    return suite.finish();
}

} // namespace

std::vector<std::string> verify_suite_names() {
    return {"ghz-footprint", "iec-identity", "ade-bounds", "kuniform", "appendix"};
}

SuiteReport run_verify_suite(const std::string& name) {
    if (name == "ghz-footprint") return suite_ghz_footprint();
    if (name == "iec-identity") return suite_iec_identity();
    if (name == "ade-bounds") return suite_ade_bounds();
    if (name == "kuniform") return suite_kuniform();
    if (name == "appendix") return suite_appendix();
    throw std::invalid_argument("unknown verify suite '" + name +
                                "' (expected one of ghz-footprint, iec-identity, ade-bounds, "
                                "kuniform, appendix)");
}

} // namespace enttopo
