#include "maxcut/kernels.hpp"

#include <cmath>

namespace maxcut::kernels {

namespace {
// Below this many elements the omp if-clause keeps the loop on one thread.
constexpr std::size_t par_min = std::size_t(1) << 15;
}  // namespace

void apply_phase(std::span<cplx> amps, std::span<const double> cost, double gamma) {
  const std::int64_t dim = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (dim >= static_cast<std::int64_t>(par_min))
  for (std::int64_t b = 0; b < dim; ++b) {
    const double phase = gamma * cost[b];
    amps[b] *= cplx(std::cos(phase), -std::sin(phase));
  }
}

void apply_mixer_qubit(std::span<cplx> amps, int qubit, double beta) {
  const std::int64_t half = static_cast<std::int64_t>(amps.size() >> 1);
  const std::uint64_t step = std::uint64_t(1) << qubit;
  const double c = std::cos(beta);
  const cplx m(0.0, -std::sin(beta));
#pragma omp parallel for schedule(static) if (half >= static_cast<std::int64_t>(par_min))
  for (std::int64_t j = 0; j < half; ++j) {
    const std::uint64_t b0 =
        ((static_cast<std::uint64_t>(j) >> qubit) << (qubit + 1)) |
        (static_cast<std::uint64_t>(j) & (step - 1));
    const std::uint64_t b1 = b0 | step;
    const cplx a0 = amps[b0];
    const cplx a1 = amps[b1];
    amps[b0] = c * a0 + m * a1;
    amps[b1] = c * a1 + m * a0;
  }
}

void apply_mixer(std::span<cplx> amps, int num_qubits, double beta) {
  for (int k = 0; k < num_qubits; ++k) apply_mixer_qubit(amps, k, beta);
}

namespace {

// Fixed-size blocks with a serial combine keep reductions bit-identical for
// any thread count.
template <typename Fn>
double blocked_sum(std::size_t n, Fn&& block_sum) {
  const std::size_t nblocks = (n + reduction_block - 1) / reduction_block;
  std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static) if (n >= par_min)
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(nblocks); ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * reduction_block;
    const std::size_t hi = std::min(lo + reduction_block, n);
    partial[blk] = block_sum(lo, hi);
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace

double norm_squared(std::span<const cplx> amps) {
  return blocked_sum(amps.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t b = lo; b < hi; ++b) s += std::norm(amps[b]);
    return s;
  });
}

double expectation_value(std::span<const cplx> amps, std::span<const double> cost) {
  return blocked_sum(amps.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t b = lo; b < hi; ++b) s += std::norm(amps[b]) * cost[b];
    return s;
  });
}

std::size_t max_probability_index(std::span<const cplx> amps) {
  const std::size_t n = amps.size();
  const std::size_t nblocks = (n + reduction_block - 1) / reduction_block;
  std::vector<double> best_p(nblocks);
  std::vector<std::size_t> best_i(nblocks);
#pragma omp parallel for schedule(static) if (n >= par_min)
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(nblocks); ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * reduction_block;
    const std::size_t hi = std::min(lo + reduction_block, n);
    double bp = -1.0;
    std::size_t bi = lo;
    for (std::size_t b = lo; b < hi; ++b) {
      const double p = std::norm(amps[b]);
      if (p > bp) {
        bp = p;
        bi = b;
      }
    }
    best_p[blk] = bp;
    best_i[blk] = bi;
  }
  double bp = -1.0;
  std::size_t bi = 0;
  for (std::size_t blk = 0; blk < nblocks; ++blk) {
    if (best_p[blk] > bp) {
      bp = best_p[blk];
      bi = best_i[blk];
    }
  }
  return bi;
}

namespace {

inline double cut_of_bits(std::span<const Edge> edges, std::uint64_t b) {
  double cut = 0.0;
  for (const Edge& e : edges)
    if (((b >> e.i) ^ (b >> e.j)) & 1u) cut += e.w;
  return cut;
}

}  // namespace

void build_cost_diagonal(const Graph& g, std::span<double> out) {
  const std::int64_t dim = static_cast<std::int64_t>(out.size());
  std::span<const Edge> edges(g.edges());
#pragma omp parallel for schedule(static) if (dim >= static_cast<std::int64_t>(par_min))
  for (std::int64_t b = 0; b < dim; ++b)
    out[b] = cut_of_bits(edges, static_cast<std::uint64_t>(b));
}

void build_cdf(std::span<const cplx> amps, std::span<double> out) {
  double cum = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b) {
    cum += std::norm(amps[b]);
    out[b] = cum;
  }
}

std::pair<std::uint64_t, double> brute_force_scan(const Graph& g, std::uint64_t dim) {
  std::span<const Edge> edges(g.edges());
  const std::size_t nblocks = (dim + reduction_block - 1) / reduction_block;
  std::vector<double> best_cut(nblocks);
  std::vector<std::uint64_t> best_bits(nblocks);
#pragma omp parallel for schedule(static) if (dim >= par_min)
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(nblocks); ++blk) {
    const std::uint64_t lo = static_cast<std::uint64_t>(blk) * reduction_block;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + reduction_block, dim);
    double bc = -1.0;
    std::uint64_t bb = lo;
    for (std::uint64_t b = lo; b < hi; ++b) {
      const double c = cut_of_bits(edges, b);
      if (c > bc) {
        bc = c;
        bb = b;
      }
    }
    best_cut[blk] = bc;
    best_bits[blk] = bb;
  }
  double bc = -1.0;
  std::uint64_t bb = 0;
  for (std::size_t blk = 0; blk < nblocks; ++blk) {
    if (best_cut[blk] > bc) {
      bc = best_cut[blk];
      bb = best_bits[blk];
    }
  }
  return {bb, bc};
}

namespace serial {

void apply_phase(std::span<cplx> amps, std::span<const double> cost, double gamma) {
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const double phase = gamma * cost[b];
    amps[b] *= cplx(std::cos(phase), -std::sin(phase));
  }
}

void apply_mixer_qubit(std::span<cplx> amps, int qubit, double beta) {
  const std::uint64_t dim = amps.size();
  const std::uint64_t step = std::uint64_t(1) << qubit;
  const double c = std::cos(beta);
  const cplx m(0.0, -std::sin(beta));
  for (std::uint64_t base = 0; base < dim; base += 2 * step) {
    for (std::uint64_t off = 0; off < step; ++off) {
      const std::uint64_t b0 = base + off;
      const std::uint64_t b1 = b0 | step;
      const cplx a0 = amps[b0];
      const cplx a1 = amps[b1];
      amps[b0] = c * a0 + m * a1;
      amps[b1] = c * a1 + m * a0;
    }
  }
}

void apply_mixer(std::span<cplx> amps, int num_qubits, double beta) {
  for (int k = 0; k < num_qubits; ++k) apply_mixer_qubit(amps, k, beta);
}

double norm_squared(std::span<const cplx> amps) {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return s;
}

double expectation_value(std::span<const cplx> amps, std::span<const double> cost) {
  double s = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b) s += std::norm(amps[b]) * cost[b];
  return s;
}

std::size_t max_probability_index(std::span<const cplx> amps) {
  double bp = -1.0;
  std::size_t bi = 0;
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const double p = std::norm(amps[b]);
    if (p > bp) {
      bp = p;
      bi = b;
    }
  }
  return bi;
}

void build_cost_diagonal(const Graph& g, std::span<double> out) {
  std::span<const Edge> edges(g.edges());
  for (std::size_t b = 0; b < out.size(); ++b)
    out[b] = cut_of_bits(edges, static_cast<std::uint64_t>(b));
}

std::pair<std::uint64_t, double> brute_force_scan(const Graph& g, std::uint64_t dim) {
  std::span<const Edge> edges(g.edges());
  double bc = -1.0;
  std::uint64_t bb = 0;
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double c = cut_of_bits(edges, b);
    if (c > bc) {
      bc = c;
      bb = b;
    }
  }
  return {bb, bc};
}

}  // namespace serial

}  // namespace maxcut::kernels
