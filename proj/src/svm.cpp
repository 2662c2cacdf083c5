#include "uitws/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "uitws/error.hpp"

namespace uitws {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const TrainSet& set, const SolverOptions& opts) {
  if (set.examples.empty())
    throw Error(ErrorKind::BadInput, "empty training set");
  if (!(opts.C > 0) || !std::isfinite(opts.C))
    throw Error(ErrorKind::BadInput, "C must be positive and finite");
  if (!(opts.tol > 0) || opts.max_iter <= 0)
    throw Error(ErrorKind::BadInput, "tol and max_iter must be positive");
  bool has_pos = false, has_neg = false;
  for (const TrainExample& e : set.examples) {
    if (e.y == 1) has_pos = true;
    else if (e.y == -1) has_neg = true;
    else throw Error(ErrorKind::BadInput, "labels must be +1 or -1");
    if (e.x.empty())
      throw Error(ErrorKind::BadInput, "empty example (bias feature missing?)");
    for (const auto& [idx, count] : e.x) {
      if (idx < 0 || idx >= set.dim)
        throw Error(ErrorKind::BadInput, "feature index out of range");
      if (count <= 0)
        throw Error(ErrorKind::BadInput, "non-positive feature count");
    }
  }
  if (!has_pos || !has_neg)
    throw Error(ErrorKind::DegenerateLabels, "training set has only one class");
}

void axpy(double a, const SparseVector& x, std::vector<double>& w) {
  for (const auto& [idx, count] : x) w[idx] += a * count;
}

double nrm2_sq(const SparseVector& x) {
  double s = 0;
  for (const auto& [idx, count] : x) {
    double v = count;
    s += v * v;
  }
  return s;
}

}  // namespace

const char* to_string(LossVariant loss) {
  return loss == LossVariant::Hinge ? "hinge" : "squared_hinge";
}

LossVariant parse_loss(std::string_view name) {
  if (name == "hinge") return LossVariant::Hinge;
  if (name == "squared_hinge") return LossVariant::SquaredHinge;
  throw Error(ErrorKind::BadInput,
              "unknown loss \"" + std::string(name) + "\" (hinge|squared_hinge)");
}

double dot(std::span<const double> weights, const SparseVector& x) {
  double s = 0;
  for (const auto& [idx, count] : x) {
    if (idx >= 0 && static_cast<size_t>(idx) < weights.size()) s += weights[idx] * count;
  }
  return s;
}

double primal_objective(const TrainSet& set, std::span<const double> weights,
                        double C, LossVariant loss) {
  double obj = 0;
  for (double w : weights) obj += w * w;
  obj *= 0.5;
  for (const TrainExample& e : set.examples) {
    double margin = 1.0 - e.y * dot(weights, e.x);
    if (margin > 0)
      obj += loss == LossVariant::Hinge ? C * margin : C * margin * margin;
  }
  return obj;
}

SolveResult solve_dual_cd(const TrainSet& set, const SolverOptions& opts) {
  validate(set, opts);
  const int l = static_cast<int>(set.examples.size());

  // Loss variant switches the diagonal regularizer and the alpha bound:
  // hinge -> D = 0, alpha <= C; squared hinge -> D = 1/(2C), alpha unbounded.
  const double diag = opts.loss == LossVariant::Hinge ? 0.0 : 0.5 / opts.C;
  const double upper = opts.loss == LossVariant::Hinge ? opts.C : kInf;

  SolveResult res;
  res.weights.assign(set.dim, 0.0);
  res.alpha.assign(l, 0.0);

  std::vector<double> qd(l);
  std::vector<int> index(l);
  for (int i = 0; i < l; ++i) {
    qd[i] = diag + nrm2_sq(set.examples[i].x);
    index[i] = i;
  }

  std::mt19937_64 rng(opts.seed);
  int active_size = l;
  double pg_max_old = kInf, pg_min_old = -kInf;

  int iter = 0;
  while (iter < opts.max_iter) {
    double pg_max_new = -kInf, pg_min_new = kInf;

    for (int s = 0; s < active_size; ++s) {
      int j = s + static_cast<int>(rng() % static_cast<uint64_t>(active_size - s));
      std::swap(index[s], index[j]);
    }

    for (int s = 0; s < active_size; ++s) {
      const int i = index[s];
      const TrainExample& e = set.examples[i];
      const double yi = e.y;

      double g = yi * dot(res.weights, e.x) - 1.0 + res.alpha[i] * diag;

      // Projected gradient with shrinking at the active bounds.
      double pg = g;
      if (res.alpha[i] == 0) {
        if (g > pg_max_old) {
          --active_size;
          std::swap(index[s], index[active_size]);
          --s;
          continue;
        }
        pg = std::min(g, 0.0);
      } else if (res.alpha[i] == upper) {
        if (g < pg_min_old) {
          --active_size;
          std::swap(index[s], index[active_size]);
          --s;
          continue;
        }
        pg = std::max(g, 0.0);
      }

      pg_max_new = std::max(pg_max_new, pg);
      pg_min_new = std::min(pg_min_new, pg);

      if (std::fabs(pg) > 1.0e-12) {
        double old_alpha = res.alpha[i];
        res.alpha[i] = std::min(std::max(old_alpha - g / qd[i], 0.0), upper);
        axpy((res.alpha[i] - old_alpha) * yi, e.x, res.weights);
      }
    }

    ++iter;
    if (opts.record_primal)
      res.primal_trace.push_back(
          primal_objective(set, res.weights, opts.C, opts.loss));

    if (pg_max_new - pg_min_new <= opts.tol &&
        std::fabs(pg_max_new) <= opts.tol && std::fabs(pg_min_new) <= opts.tol) {
      if (active_size == l) {
        res.converged = true;
        break;
      }
      // Converged on the shrunk set; re-check against the full set.
      active_size = l;
      pg_max_old = kInf;
      pg_min_old = -kInf;
      continue;
    }
    pg_max_old = pg_max_new <= 0 ? kInf : pg_max_new;
    pg_min_old = pg_min_new >= 0 ? -kInf : pg_min_new;
  }

  res.epochs = iter;
  return res;
}

}  // namespace uitws
