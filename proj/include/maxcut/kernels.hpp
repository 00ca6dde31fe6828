#ifndef MAXCUT_KERNELS_HPP
#define MAXCUT_KERNELS_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "maxcut/graph.hpp"

// OpenMP statevector kernels. Every routine here is deterministic with
// respect to the number of threads: elementwise updates touch disjoint
// slots, and reductions accumulate fixed-size blocks whose partial sums are
// combined serially in block order. The serial:: twins are independent
// naive implementations kept for tests and as the benchmark baseline.
namespace maxcut::kernels {

using cplx = std::complex<double>;

/// Block length of the deterministic reductions.
inline constexpr std::size_t reduction_block = 4096;

/// amps[b] *= exp(-i * gamma * cost[b]).
void apply_phase(std::span<cplx> amps, std::span<const double> cost, double gamma);

/// exp(-i * beta * X) on one qubit: pairwise mixing of amplitudes whose
/// indices differ in bit `qubit`.
void apply_mixer_qubit(std::span<cplx> amps, int qubit, double beta);

/// Transverse-field mixer exp(-i * beta * sum_k X_k), qubit by qubit.
void apply_mixer(std::span<cplx> amps, int num_qubits, double beta);

/// Sum of |amp|^2 (deterministic blocked reduction).
double norm_squared(std::span<const cplx> amps);

/// Sum of |amp_b|^2 * cost[b] (deterministic blocked reduction).
double expectation_value(std::span<const cplx> amps, std::span<const double> cost);

/// Index of the largest |amp|^2; ties break toward the smallest index.
std::size_t max_probability_index(std::span<const cplx> amps);

/// out[b] = cut value of the assignment encoded by basis index b.
void build_cost_diagonal(const Graph& g, std::span<double> out);

/// Inclusive prefix sums of |amp|^2 (serial; feeds shot sampling).
void build_cdf(std::span<const cplx> amps, std::span<double> out);

/// Exhaustive scan of all `dim` assignments; returns (argmax bits, max cut),
/// ties toward the smallest encoding. Backs the brute-force oracle.
std::pair<std::uint64_t, double> brute_force_scan(const Graph& g, std::uint64_t dim);

namespace serial {

void apply_phase(std::span<cplx> amps, std::span<const double> cost, double gamma);
void apply_mixer_qubit(std::span<cplx> amps, int qubit, double beta);
void apply_mixer(std::span<cplx> amps, int num_qubits, double beta);
double norm_squared(std::span<const cplx> amps);
double expectation_value(std::span<const cplx> amps, std::span<const double> cost);
std::size_t max_probability_index(std::span<const cplx> amps);
void build_cost_diagonal(const Graph& g, std::span<double> out);
std::pair<std::uint64_t, double> brute_force_scan(const Graph& g, std::uint64_t dim);

}  // namespace serial

}  // namespace maxcut::kernels

#endif
