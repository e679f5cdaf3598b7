#include "enttopo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace enttopo {

using nlohmann::json;

double round_sig(double value) {
    if (!std::isfinite(value)) return value;
    return std::stod(format_sig(value));
}

std::string format_sig(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing: " + path);
}

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace

PureState load_state_json(const std::string& path) {
    const json j = load_json_file(path);
    if (!j.is_object() || !j.contains("n") || !j.contains("amplitudes")) {
        throw std::runtime_error("state file " + path + ": expected {\"n\", \"amplitudes\"}");
    }
    const int n = j.at("n").get<int>();
    const auto& arr = j.at("amplitudes");
    if (!arr.is_array() || arr.size() != (std::size_t{1} << n)) {
        throw std::runtime_error("state file " + path + ": amplitude count is not 2^n");
    }
    std::vector<cplx> amps;
    amps.reserve(arr.size());
    double norm2 = 0.0;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::runtime_error("state file " + path + ": amplitudes must be [re, im] pairs");
        }
        const cplx a(pair.at(0).get<double>(), pair.at(1).get<double>());
        amps.push_back(a);
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kNumeric.state_file_norm_tolerance) {
        throw std::runtime_error("state file " + path + ": vector norm deviates from 1 by more than 1e-9");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (cplx& a : amps) a *= inv;
    return PureState(n, std::move(amps));
}

void save_state_json(const PureState& state, const std::string& path) {
    json arr = json::array();
    for (const cplx& a : state.amplitudes()) {
        arr.push_back(json::array({a.real(), a.imag()}));
    }
    json j{{"n", state.n_qubits()}, {"amplitudes", std::move(arr)}};
    write_text_file(path, j.dump(2) + "\n");
}

std::string barcode_to_json(const Barcode& barcode, int n_qubits,
                            const std::string& functional_name) {
    json intervals = json::array();
    for (const BarInterval& bar : barcode.intervals) {
        json entry{{"dim", bar.dim}, {"birth", round_sig(bar.birth)}};
        if (bar.essential()) {
            entry["death"] = nullptr;
        } else {
            entry["death"] = round_sig(bar.death);
        }
        intervals.push_back(std::move(entry));
    }
    json j{{"n", n_qubits}, {"functional", functional_name}, {"intervals", std::move(intervals)}};
    return j.dump(2) + "\n";
}

void save_barcode_json(const Barcode& barcode, int n_qubits,
                       const std::string& functional_name, const std::string& path) {
    write_text_file(path, barcode_to_json(barcode, n_qubits, functional_name));
}

Barcode load_barcode_json(const std::string& path) {
    const json j = load_json_file(path);
    Barcode barcode;
    for (const auto& entry : j.at("intervals")) {
        BarInterval bar;
        bar.dim = entry.at("dim").get<int>();
        bar.birth = entry.at("birth").get<double>();
        bar.death = entry.at("death").is_null() ? kInfiniteDeath : entry.at("death").get<double>();
        barcode.intervals.push_back(bar);
    }
    return barcode;
}

std::string betti_curves_to_csv(const std::vector<BettiCurve>& curves) {
    std::ostringstream out;
    out << "epsilon,beta0,beta0_reduced";
    for (std::size_t k = 1; k < curves.size(); ++k) out << ",beta" << k;
    out << "\n";
    if (curves.empty()) return out.str();
    const std::vector<double>& grid = curves.front().breakpoints;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << format_sig(grid[i]);
        const int b0 = curves[0].values[i];
        out << "," << b0 << "," << std::max(b0 - 1, 0);
        for (std::size_t k = 1; k < curves.size(); ++k) out << "," << curves[k].values[i];
        out << "\n";
    }
    return out.str();
}

void save_betti_csv(const std::vector<BettiCurve>& curves, const std::string& path) {
    write_text_file(path, betti_curves_to_csv(curves));
}

std::string iec_report_to_json(const IecReport& report) {
    json integrals = json::array();
    for (double v : report.per_dim_integrals) integrals.push_back(round_sig(v));
    json j{{"iec_integral", round_sig(report.iec_integral)},
           {"iec_closed_form", round_sig(report.iec_closed_form)},
           {"epsilon_max", round_sig(report.epsilon_max)},
           {"per_dim_integrals", std::move(integrals)}};
    return j.dump(2) + "\n";
}

std::string bounds_report_to_json(const BoundsReport& report) {
    json j{{"lower", round_sig(report.lower)},
           {"ade", round_sig(report.ade)},
           {"upper", round_sig(report.upper)},
           {"slack", round_sig(report.slack)}};
    return j.dump(2) + "\n";
}

std::string summary_csv_header() {
    return "label,n,functional,iec_integral,iec_closed_form,epsilon_max,ade,lower,upper,slack\n";
}

std::string summary_csv_row(const std::string& label, int n_qubits,
                            const std::string& functional_name, const IecReport& iec,
                            const BoundsReport& bounds) {
    std::ostringstream out;
    out << label << "," << n_qubits << "," << functional_name << ","
        << format_sig(iec.iec_integral) << "," << format_sig(iec.iec_closed_form) << ","
        << format_sig(iec.epsilon_max) << "," << format_sig(bounds.ade) << ","
        << format_sig(bounds.lower) << "," << format_sig(bounds.upper) << ","
        << format_sig(bounds.slack) << "\n";
    return out.str();
}

} // namespace enttopo
