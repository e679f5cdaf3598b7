#include "enttopo/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace enttopo {

namespace {

void check_qubit_count(int n, int min_n, const char* who) {
    if (n < min_n || n > kNumeric.max_qubits) {
        throw std::invalid_argument(std::string(who) + ": qubit count " + std::to_string(n) +
                                    " outside [" + std::to_string(min_n) + ", " +
                                    std::to_string(kNumeric.max_qubits) + "]");
    }
}

} // namespace

QubitSubset::QubitSubset(std::uint32_t mask, int n_context) : mask_(mask), n_(n_context) {
    if (n_context < 0 || n_context > kNumeric.max_qubits) {
        throw std::invalid_argument("QubitSubset: bad context size " + std::to_string(n_context));
    }
    if (n_context < 32 && (mask >> n_context) != 0) {
        throw std::invalid_argument("QubitSubset: mask has bits beyond context size");
    }
}

QubitSubset QubitSubset::empty_set(int n_context) { return QubitSubset(0, n_context); }

QubitSubset QubitSubset::full_set(int n_context) {
    return QubitSubset((n_context >= 32) ? ~0u : ((1u << n_context) - 1u), n_context);
}

QubitSubset QubitSubset::singleton(int qubit, int n_context) {
    if (qubit < 0 || qubit >= n_context) {
        throw std::invalid_argument("QubitSubset: qubit index out of range");
    }
    return QubitSubset(1u << qubit, n_context);
}

QubitSubset QubitSubset::from_members(const std::vector<int>& qubits, int n_context) {
    std::uint32_t m = 0;
    for (int q : qubits) {
        if (q < 0 || q >= n_context) {
            throw std::invalid_argument("QubitSubset: qubit index out of range");
        }
        m |= 1u << q;
    }
    return QubitSubset(m, n_context);
}

int QubitSubset::size() const { return std::popcount(mask_); }

bool QubitSubset::contains(int qubit) const {
    return qubit >= 0 && qubit < n_ && ((mask_ >> qubit) & 1u) != 0;
}

bool QubitSubset::is_subset_of(const QubitSubset& other) const {
    return (mask_ & ~other.mask_) == 0;
}

bool QubitSubset::disjoint_from(const QubitSubset& other) const {
    return (mask_ & other.mask_) == 0;
}

QubitSubset QubitSubset::complement() const {
    return QubitSubset(full_set(n_).mask() & ~mask_, n_);
}

QubitSubset QubitSubset::united(const QubitSubset& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("QubitSubset: union across different contexts");
    }
    return QubitSubset(mask_ | other.mask_, n_);
}

std::vector<int> QubitSubset::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int q = 0; q < n_; ++q) {
        if ((mask_ >> q) & 1u) out.push_back(q);
    }
    return out;
}

PureState::PureState(int n_qubits, std::vector<cplx> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(n_qubits, 1, "PureState");
    if (amps_.size() != (std::size_t{1} << n_)) {
        throw std::invalid_argument("PureState: amplitude vector length is not 2^n");
    }
    double norm2 = 0.0;
    for (const cplx& a : amps_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > kNumeric.norm_tolerance) {
        throw std::invalid_argument("PureState: vector is not normalized (|psi|^2 = " +
                                    std::to_string(norm2) + ")");
    }
}

DensityMatrix::DensityMatrix(int dim, std::vector<cplx> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (dim <= 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("DensityMatrix: dimension must be a power of two");
    }
    if (a_.size() != static_cast<std::size_t>(dim) * dim) {
        throw std::invalid_argument("DensityMatrix: entry count does not match dimension");
    }
    cplx tr = 0.0;
    for (int i = 0; i < dim_; ++i) tr += at(i, i);
    if (std::abs(tr - cplx(1.0, 0.0)) > kNumeric.trace_tolerance) {
        throw std::invalid_argument("DensityMatrix: trace deviates from 1");
    }
    for (int i = 0; i < dim_; ++i) {
        for (int j = i; j < dim_; ++j) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > kNumeric.hermitian_tolerance) {
                throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
            }
        }
    }
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return s;
}

PureState make_ghz(int n) {
    check_qubit_count(n, 1, "make_ghz");
    std::vector<cplx> amps(std::size_t{1} << n, cplx(0.0, 0.0));
    const double r = 1.0 / std::sqrt(2.0);
    amps.front() = r;
    amps.back() = r;
    return PureState(n, std::move(amps));
}

PureState make_w(int n) {
    check_qubit_count(n, 2, "make_w");
    std::vector<cplx> amps(std::size_t{1} << n, cplx(0.0, 0.0));
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    for (int q = 0; q < n; ++q) amps[std::size_t{1} << q] = r;
    return PureState(n, std::move(amps));
}

PureState make_product_zero(int n) {
    check_qubit_count(n, 1, "make_product_zero");
    std::vector<cplx> amps(std::size_t{1} << n, cplx(0.0, 0.0));
    amps[0] = 1.0;
    return PureState(n, std::move(amps));
}

PureState random_pure(int n, std::uint64_t seed) {
    check_qubit_count(n, 1, "random_pure");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << n);
    double norm2 = 0.0;
    for (cplx& a : amps) {
        // Box-Muller: one uniform pair -> one standard complex Gaussian.
        double u1 = unit(rng);
        while (u1 <= 0.0) u1 = unit(rng);
        const double u2 = unit(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        a = cplx(r * std::cos(phi), r * std::sin(phi));
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (cplx& a : amps) a *= inv;
    return PureState(n, std::move(amps));
}

DensityMatrix partial_trace(const PureState& state, QubitSubset keep) {
    const int n = state.n_qubits();
    if (keep.context_size() != n) {
        throw std::invalid_argument("partial_trace: subset context does not match state");
    }
    const std::vector<int> kept = keep.members();
    const std::vector<int> traced = keep.complement().members();
    const int k = static_cast<int>(kept.size());
    const std::size_t dk = std::size_t{1} << k;
    const std::size_t dt = std::size_t{1} << traced.size();

    // Scatter tables: row/col index -> contribution to the basis-state index.
    std::vector<std::size_t> scat_keep(dk, 0), scat_traced(dt, 0);
    for (std::size_t a = 0; a < dk; ++a) {
        for (int j = 0; j < k; ++j) {
            if ((a >> j) & 1u) scat_keep[a] |= std::size_t{1} << kept[j];
        }
    }
    for (std::size_t t = 0; t < dt; ++t) {
        for (std::size_t j = 0; j < traced.size(); ++j) {
            if ((t >> j) & 1u) scat_traced[t] |= std::size_t{1} << traced[j];
        }
    }

    const std::vector<cplx>& psi = state.amplitudes();
    std::vector<cplx> rho(dk * dk, cplx(0.0, 0.0));
    for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t base = scat_traced[t];
        for (std::size_t a = 0; a < dk; ++a) {
            const cplx va = psi[scat_keep[a] | base];
            if (va == cplx(0.0, 0.0)) continue;
            for (std::size_t b = 0; b < dk; ++b) {
                rho[a * dk + b] += va * std::conj(psi[scat_keep[b] | base]);
            }
        }
    }
    return DensityMatrix(static_cast<int>(dk), std::move(rho));
}

namespace {

// Cyclic Jacobi eigenvalue iteration for a complex Hermitian matrix, values
// only. The pivot rotation zeroes a_pq exactly; convergence is quadratic once
// the off-diagonal mass is small.
std::vector<double> jacobi_eigenvalues(std::vector<cplx> a, int m) {
    constexpr int kMaxSweeps = 64;
    auto idx = [m](int r, int c) { return static_cast<std::size_t>(r) * m + c; };

    // Symmetrize exactly so roundoff in the input cannot accumulate.
    for (int p = 0; p < m; ++p) {
        a[idx(p, p)] = cplx(a[idx(p, p)].real(), 0.0);
        for (int q = p + 1; q < m; ++q) {
            const cplx avg = 0.5 * (a[idx(p, q)] + std::conj(a[idx(q, p)]));
            a[idx(p, q)] = avg;
            a[idx(q, p)] = std::conj(avg);
        }
    }

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off2 = 0.0;
        for (int p = 0; p < m; ++p) {
            for (int q = p + 1; q < m; ++q) off2 += 2.0 * std::norm(a[idx(p, q)]);
        }
        if (std::sqrt(off2) < kNumeric.jacobi_off_norm) {
            std::vector<double> ev(m);
            for (int p = 0; p < m; ++p) ev[p] = a[idx(p, p)].real();
            std::sort(ev.begin(), ev.end(), std::greater<double>());
            return ev;
        }

        for (int p = 0; p < m; ++p) {
            for (int q = p + 1; q < m; ++q) {
                const cplx g = a[idx(p, q)];
                const double mag = std::abs(g);
                if (mag == 0.0) continue;
                const double alpha = a[idx(p, p)].real();
                const double beta = a[idx(q, q)].real();
                const cplx phase = g / mag;

                // tan(theta) from the stable root of |g| t^2 + (beta-alpha) t - |g| = 0.
                const double theta = (beta - alpha) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sigma = t * c;
                const cplx s = sigma * phase;

                // Rows/columns p and q of A' = U^H A U with U = [[c, s], [-conj(s), c]].
                for (int i = 0; i < m; ++i) {
                    if (i == p || i == q) continue;
                    const cplx aip = a[idx(i, p)];
                    const cplx aiq = a[idx(i, q)];
                    a[idx(i, p)] = c * aip - std::conj(s) * aiq;
                    a[idx(i, q)] = s * aip + c * aiq;
                    a[idx(p, i)] = std::conj(a[idx(i, p)]);
                    a[idx(q, i)] = std::conj(a[idx(i, q)]);
                }
                const double app = c * c * alpha + sigma * sigma * beta - 2.0 * c * sigma * mag;
                const double aqq = sigma * sigma * alpha + c * c * beta + 2.0 * c * sigma * mag;
                a[idx(p, p)] = app;
                a[idx(q, q)] = aqq;
                a[idx(p, q)] = 0.0;
                a[idx(q, p)] = 0.0;
            }
        }
    }
    throw std::runtime_error("jacobi_eigenvalues: no convergence after 64 sweeps");
}

} // namespace

std::vector<double> eigvals_hermitian(const DensityMatrix& dm) {
    std::vector<double> ev = jacobi_eigenvalues(dm.entries(), dm.dim());
    double sum = 0.0;
    for (double& v : ev) {
        v = std::clamp(v, 0.0, 1.0);
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::runtime_error("eigvals_hermitian: clamped spectrum sums to " +
                                 std::to_string(sum));
    }
    return ev;
}

double von_neumann_entropy(const DensityMatrix& dm) {
    double s = 0.0;
    for (double lambda : eigvals_hermitian(dm)) {
        if (lambda < kNumeric.eigenvalue_floor) continue;
        s -= lambda * std::log2(lambda);
    }
    return s;
}

double tsallis_entropy(const DensityMatrix& dm, double q) {
    if (q == 0.0 || q == 1.0) {
        throw std::domain_error("tsallis_entropy: q must differ from 0 and 1");
    }
    double trace_q = 0.0;
    for (double lambda : eigvals_hermitian(dm)) {
        if (lambda < kNumeric.eigenvalue_floor) continue;
        trace_q += std::pow(lambda, q);
    }
    return (trace_q - 1.0) / (1.0 - q);
}

double linear_entropy(const DensityMatrix& dm) { return 1.0 - dm.purity(); }

} // namespace enttopo
