#pragma once

#include <string>
#include <vector>

#include "enttopo/homology.hpp"
#include "enttopo/invariants.hpp"
#include "enttopo/qstate.hpp"

namespace enttopo {

/// Round to 12 significant digits: the convention for every number this
/// library prints or serializes, so diffs across runs and implementations
/// stay meaningful.
double round_sig(double value);
std::string format_sig(double value);

/**
 * State file: {"n": int, "amplitudes": [[re, im], ...]} with 2^n entries.
 * The loader checks normalization to 1e-9 and renormalizes the retained
 * vector exactly.
 */
PureState load_state_json(const std::string& path);
void save_state_json(const PureState& state, const std::string& path);

/// Barcode JSON: {"n": int, "functional": str, "intervals": [{"dim": k,
/// "birth": x, "death": y | null}]}. Essential deaths serialize as null.
std::string barcode_to_json(const Barcode& barcode, int n_qubits,
                            const std::string& functional_name);
void save_barcode_json(const Barcode& barcode, int n_qubits,
                       const std::string& functional_name, const std::string& path);
Barcode load_barcode_json(const std::string& path);

/// Betti-curve CSV: header "epsilon,beta0,beta0_reduced,beta1,...", one row
/// per critical value.
std::string betti_curves_to_csv(const std::vector<BettiCurve>& curves);
void save_betti_csv(const std::vector<BettiCurve>& curves, const std::string& path);

std::string iec_report_to_json(const IecReport& report);
std::string bounds_report_to_json(const BoundsReport& report);

/// One-line CSV summary of a state's invariants (used by batch runs):
/// label,n,functional,iec_integral,iec_closed_form,epsilon_max,ade,lower,upper,slack
std::string summary_csv_header();
std::string summary_csv_row(const std::string& label, int n_qubits,
                            const std::string& functional_name, const IecReport& iec,
                            const BoundsReport& bounds);

void write_text_file(const std::string& path, const std::string& content);

} // namespace enttopo
