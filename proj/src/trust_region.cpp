#include "maxcut/trust_region.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "maxcut/errors.hpp"

namespace maxcut {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kDirectionCondMin = 0.05;  // min sigma of row-normalized edges
constexpr double kStaleEdgeFactor = 8.0;    // edges longer than this times rho get replaced

}  // namespace

TrustRegionResult minimize_trust_region(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> x0, const TrustRegionOptions& options) {
  const int m = static_cast<int>(x0.size());
  if (m < 1) throw ParameterError("trust region: empty variable vector");
  if (options.max_evals < 1) throw ParameterError("trust region: evaluation budget must be >= 1");
  if (!(options.rhobeg > 0.0)) throw ParameterError("trust region: rhobeg must be positive");

  TrustRegionResult result;
  result.best_value = std::numeric_limits<double>::infinity();

  auto eval = [&](const VectorXd& x) {
    const double v = objective(std::span<const double>(x.data(), m));
    result.trace.push_back(v);
    ++result.evals;
    if (v < result.best_value) {
      result.best_value = v;
      result.best_x.assign(x.data(), x.data() + m);
    }
    return v;
  };

  std::vector<VectorXd> points(m + 1);
  VectorXd values(m + 1);
  points[0] = Eigen::Map<const VectorXd>(x0.data(), m);
  values[0] = eval(points[0]);
  for (int i = 1; i <= m; ++i) {
    points[i] = points[0];
    points[i][i - 1] += options.rhobeg;
    if (result.evals >= options.max_evals) return result;
    values[i] = eval(points[i]);
  }

  double rho = options.rhobeg;
  while (result.evals < options.max_evals && rho >= options.rhoend) {
    int ib = 0;
    for (int i = 1; i <= m; ++i)
      if (values[i] < values[ib]) ib = i;
    std::swap(points[0], points[ib]);
    std::swap(values[0], values[ib]);

    // Rows of E are the simplex edges from the best vertex.
    MatrixXd edges(m, m);
    VectorXd df(m);
    for (int i = 0; i < m; ++i) {
      edges.row(i) = (points[i + 1] - points[0]).transpose();
      df[i] = values[i + 1] - values[0];
    }

    MatrixXd directions = edges;
    VectorXd lengths(m);
    for (int i = 0; i < m; ++i) {
      lengths[i] = edges.row(i).norm();
      if (lengths[i] > 0.0) directions.row(i) /= lengths[i];
    }
    Eigen::JacobiSVD<MatrixXd> svd(directions, Eigen::ComputeFullV);
    const double sigma_min = svd.singularValues()[m - 1];

    int stale = -1;
    double stale_len = kStaleEdgeFactor * rho;
    for (int i = 0; i < m; ++i)
      if (lengths[i] > stale_len) {
        stale = i;
        stale_len = lengths[i];
      }

    if (sigma_min < kDirectionCondMin || stale >= 0) {
      // Geometry repair: one new vertex at distance rho along the direction
      // the current edges cover worst (or in place of the stalest edge).
      VectorXd dir = svd.matrixV().col(m - 1);
      int replace = stale;
      if (replace < 0) {
        // Drop the edge most aligned with the degenerate combination.
        double worst = -1.0;
        for (int i = 0; i < m; ++i) {
          const double align = std::abs(directions.row(i).dot(dir));
          if (align > worst) {
            worst = align;
            replace = i;
          }
        }
      } else {
        dir = directions.row(stale).transpose();
      }
      VectorXd candidate = points[0] + rho * dir;
      const double fc = eval(candidate);
      points[replace + 1] = candidate;
      values[replace + 1] = fc;
      continue;
    }

    // Linear interpolation model: edges * g = df.
    VectorXd grad = edges.colPivHouseholderQr().solve(df);
    const double gnorm = grad.norm();
    if (!(gnorm > 1e-14 * (1.0 + std::abs(values[0])))) {
      rho *= 0.5;  // model flat at this scale
      continue;
    }

    VectorXd candidate = points[0] - (rho / gnorm) * grad;
    const double fc = eval(candidate);

    int iw = 0;
    for (int i = 1; i <= m; ++i)
      if (values[i] > values[iw]) iw = i;

    if (fc < values[0]) {
      points[iw] = candidate;
      values[iw] = fc;
    } else {
      if (fc < values[iw]) {
        points[iw] = candidate;
        values[iw] = fc;
      }
      rho *= 0.5;
    }
  }
  return result;
}

}  // namespace maxcut
