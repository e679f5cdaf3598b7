#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "enttopo/correlations.hpp"
#include "enttopo/graphstates.hpp"
#include "enttopo/homology.hpp"
#include "enttopo/invariants.hpp"
#include "enttopo/io.hpp"
#include "enttopo/svg.hpp"
#include "enttopo/verify.hpp"

#include "../tests/oracles/oracles.hpp"

namespace {

using namespace enttopo;

struct StateSource {
    PureState state;
    std::optional<Graph> graph;
    std::string label;
};

StateSource resolve_source(const std::string& builtin, int n_flag, const std::string& graph_path,
                           const std::string& state_path, const std::string& random_spec) {
    int provided = 0;
    provided += !builtin.empty();
    provided += !graph_path.empty();
    provided += !state_path.empty();
    provided += !random_spec.empty();
    if (provided != 1) {
        throw CLI::ValidationError(
            "state source", "exactly one of --builtin / --graph / --state / --random is required");
    }

    if (!builtin.empty()) {
        if (builtin == "ghz" || builtin == "w" || builtin == "product") {
            if (n_flag <= 0) {
                throw CLI::ValidationError("--builtin " + builtin, "requires --n <qubits>");
            }
            if (builtin == "ghz") return {make_ghz(n_flag), std::nullopt, "ghz" + std::to_string(n_flag)};
            if (builtin == "w") return {make_w(n_flag), std::nullopt, "w" + std::to_string(n_flag)};
            return {make_product_zero(n_flag), std::nullopt, "product" + std::to_string(n_flag)};
        }
        Graph g = builtin_graph(builtin);
        PureState state = graph_state_vector(g);
        return {std::move(state), std::move(g), builtin};
    }
    if (!graph_path.empty()) {
        Graph g = load_graph_file(graph_path);
        PureState state = graph_state_vector(g);
        return {std::move(state), std::move(g), graph_path};
    }
    if (!state_path.empty()) {
        return {load_state_json(state_path), std::nullopt, state_path};
    }
    // --random n,seed
    const auto comma = random_spec.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("--random", "expected 'n,seed'");
    }
    const int n = std::stoi(random_spec.substr(0, comma));
    const std::uint64_t seed = std::stoull(random_spec.substr(comma + 1));
    return {random_pure(n, seed), std::nullopt,
            "random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")"};
}

int run_analyze(const StateSource& source, const CorrelationFunctional& functional, int max_dim_flag,
                const std::string& out_json, const std::string& out_csv, const std::string& out_svg,
                bool want_bounds, bool run_oracle) {
    const PureState& state = source.state;
    const int n = state.n_qubits();
    const int max_dim = (max_dim_flag < 0) ? n - 1 : max_dim_flag;

    std::cout << "state: " << source.label << "  n=" << n << "  functional=" << functional.name()
              << "  max_dim=" << max_dim << "\n";

    const FilteredComplex complex = build_filtration(state, functional, max_dim);
    const Barcode barcode = persistence_pairs(complex);
    const std::vector<BettiCurve> curves = betti_curves(complex);

    std::cout << "epsilon_max = " << format_sig(epsilon_max(state, functional)) << "\n";
    std::cout << "critical values: ";
    for (double c : complex.critical_values()) std::cout << format_sig(c) << " ";
    std::cout << "\n";

    if (max_dim == n - 1) {
        const IecReport iec = iec_report(state, functional);
        std::cout << "iec_integral    = " << format_sig(iec.iec_integral) << "\n";
        std::cout << "iec_closed_form = " << format_sig(iec.iec_closed_form) << "\n";
    } else {
        std::cout << "iec: skipped (the integral/closed-form identity needs max_dim = n - 1; "
                     "got " << max_dim << ")\n";
    }

    const BoundsReport bounds = bounds_report(state);
    std::cout << "ade = " << format_sig(bounds.ade) << "\n";
    if (functional.entropy() == EntropyKind::von_neumann || want_bounds) {
        std::cout << "ade bounds: " << format_sig(bounds.lower) << " <= ade <= "
                  << format_sig(bounds.upper) << "  (slack " << format_sig(bounds.slack) << ")\n";
    } else {
        std::cout << "ade bounds: stated for the vn-total functional; rerun with "
                     "--functional vn-total (or pass --bounds)\n";
    }

    int status = 0;
    if (run_oracle) {
        bool agree = true;
        for (double eps : complex.critical_values()) {
            const std::vector<int> fast = betti_numbers(complex, eps);
            const std::vector<int> brute = oracle::betti_numbers_brute(complex, eps);
            if (fast != brute) {
                agree = false;
                std::cout << "oracle: Betti mismatch at epsilon = " << format_sig(eps) << "\n";
            }
        }
        std::cout << "oracle betti ranks: " << (agree ? "agree" : "DISAGREE") << " on "
                  << complex.critical_values().size() << " grid points\n";
        if (!agree) status = 1;

        const double brute_ade = oracle::ade_brute(state);
        const bool ade_ok = std::abs(brute_ade - bounds.ade) < 1e-9;
        std::cout << "oracle subset-entropy ade: " << format_sig(brute_ade)
                  << (ade_ok ? " (agrees)" : " (DISAGREES)") << "\n";
        if (!ade_ok) status = 1;

        if (source.graph) {
            const Graph& g = *source.graph;
            bool stab_ok = true;
            const std::uint32_t full = QubitSubset::full_set(n).mask();
            for (std::uint32_t mask = 0; mask <= full; ++mask) {
                const QubitSubset a(mask, n);
                if (count_supported_stabilizers(g, a) !=
                    oracle::count_supported_stabilizers_brute(g, a)) {
                    stab_ok = false;
                }
            }
            std::cout << "oracle stabilizer enumeration: " << (stab_ok ? "agrees" : "DISAGREES")
                      << " on all " << (std::size_t{1} << n) << " subsets\n";
            if (!stab_ok) status = 1;
        }
    }

    try {
        if (!out_json.empty()) {
            save_barcode_json(barcode, n, functional.name(), out_json);
            std::cout << "wrote " << out_json << "\n";
        }
        if (!out_csv.empty()) {
            save_betti_csv(curves, out_csv);
            std::cout << "wrote " << out_csv << "\n";
        }
        if (!out_svg.empty()) {
            render_svg(barcode, out_svg);
            std::cout << "wrote " << out_svg << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

int run_verify(const std::string& suite_name, const std::string& out_json) {
    const SuiteReport report = run_verify_suite(suite_name);
    for (const CheckResult& c : report.checks) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
    }
    if (!report.violations.empty()) {
        std::cout << "violations (first " << report.violations.size() << "):\n";
        for (const std::string& v : report.violations) std::cout << "  - " << v << "\n";
    }
    if (!out_json.empty()) {
        write_text_file(out_json, report.to_json());
        std::cout << "wrote " << out_json << "\n";
    }
    std::cout << "suite " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological signatures of multipartite entanglement: filtered complexes, "
                 "barcodes, and the exact invariants they satisfy."};
    app.require_subcommand(1);

    // analyze
    std::string builtin, graph_path, state_path, random_spec;
    std::string functional_name = "tsallis2-total";
    int n_flag = 0;
    int max_dim = -1;
    double tol = kNumeric.birth_tolerance;
    std::string out_json, out_csv, out_svg;
    bool want_bounds = false, run_oracle = false;

    CLI::App* analyze = app.add_subcommand("analyze", "filtration, barcode, and invariants of one state");
    analyze->add_option("--builtin", builtin,
                        "ghz | w | product (with --n), or a named graph: pentagon5, wheel6, "
                        "star<n>, complete<n>, path<n>, cycle<n>, kuniform8_{1,2,3}");
    analyze->add_option("--n", n_flag, "qubit count for ghz/w/product");
    analyze->add_option("--graph", graph_path, "edge-list file ('n <count>' header, 1-indexed pairs)");
    analyze->add_option("--state", state_path, "state JSON file {n, amplitudes}");
    analyze->add_option("--random", random_spec, "random pure state as 'n,seed'");
    analyze->add_option("--functional", functional_name, "vn-total | tsallis2-total")
        ->check(CLI::IsMember({"vn-total", "tsallis2-total"}));
    analyze->add_option("--max-dim", max_dim, "cap the complex dimension (default n-1; lowering "
                                              "it disables the IEC integral)");
    analyze->add_option("--tol", tol, "birth / closure comparison tolerance (default 1e-9)");
    analyze->add_option("--out-json", out_json, "write the barcode JSON here");
    analyze->add_option("--out-csv", out_csv, "write the Betti-curve CSV here");
    analyze->add_option("--out-svg", out_svg, "write the barcode SVG here");
    analyze->add_flag("--bounds", want_bounds, "insist on the ADE bound section");
    analyze->add_flag("--oracle", run_oracle, "run the brute-force cross-checks as well");

    // verify
    std::string suite_name, verify_json;
    CLI::App* verify = app.add_subcommand("verify", "run a named acceptance sub-suite");
    verify->add_option("suite", suite_name, "ghz-footprint | iec-identity | ade-bounds | kuniform | appendix")
        ->required()
        ->check(CLI::IsMember(enttopo::verify_suite_names()));
    verify->add_option("--out-json", verify_json, "write the machine-readable report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            if (want_bounds && functional_name != "vn-total") {
                std::cerr << "error: the ADE bound theorem is stated for the vn-total functional "
                             "(vertex-wise von Neumann correlation); it is not defined for '"
                          << functional_name << "'. Rerun with --functional vn-total.\n";
                return 1;
            }
            const StateSource source =
                resolve_source(builtin, n_flag, graph_path, state_path, random_spec);
            CorrelationFunctional functional =
                functional_name == "vn-total" ? CorrelationFunctional::vn_total(tol)
                                              : CorrelationFunctional::tsallis2_total(tol);
            return run_analyze(source, functional, max_dim, out_json, out_csv, out_svg,
                               want_bounds, run_oracle);
        }
        if (verify->parsed()) {
            return run_verify(suite_name, verify_json);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
