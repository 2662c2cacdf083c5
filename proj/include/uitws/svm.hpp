#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uitws/features.hpp"
#include "uitws/resources.hpp"
#include "uitws/stats.hpp"

namespace uitws {

/// Label encoding: UNDERSCORE = +1, SPACE = -1.
inline int8_t label_sign(Label label) { return label == Label::Underscore ? 1 : -1; }

struct TrainExample {
  SparseVector x;
  int8_t y;  // +1 or -1
};

struct TrainSet {
  std::vector<TrainExample> examples;
  int32_t dim = 0;
};

enum class LossVariant : uint8_t { Hinge, SquaredHinge };

const char* to_string(LossVariant loss);
LossVariant parse_loss(std::string_view name);

struct SolverOptions {
  double C = 1.0;
  double tol = 1e-3;
  int max_iter = 1000;  // epochs
  uint64_t seed = 42;
  LossVariant loss = LossVariant::Hinge;
  bool record_primal = false;  // per-epoch primal objective trace (tests)
};

struct SolveResult {
  std::vector<double> weights;
  std::vector<double> alpha;  // one per example, 0 <= alpha_i <= C for hinge
  int epochs = 0;
  bool converged = false;
  std::vector<double> primal_trace;
};

/// Dual coordinate descent for min_w 0.5 ||w||^2 + C sum_i loss(y_i w.x_i),
/// with random permutation per epoch and projected-gradient shrinking.
/// Deterministic for a fixed seed.
SolveResult solve_dual_cd(const TrainSet& set, const SolverOptions& opts);

double dot(std::span<const double> weights, const SparseVector& x);

double primal_objective(const TrainSet& set, std::span<const double> weights,
                        double C, LossVariant loss);

/// A trained model plus everything decoding needs: frozen vocabulary,
/// feature config, derived stat sets, name lists, and the identity of the
/// lexicon it was trained with.
struct LinearModel {
  std::vector<double> weights;
  FeatureConfig config;
  FeatureVocabulary vocab;
  DerivedStats stats;
  NameLists names;
  uint64_t lexicon_id = 0;
  double C = 1.0;
  LossVariant loss = LossVariant::Hinge;

  double decision(const SparseVector& x) const { return dot(weights, x); }
  /// Positive decision -> UNDERSCORE; ties go to SPACE.
  Label predict(const SparseVector& x) const {
    return decision(x) > 0 ? Label::Underscore : Label::Space;
  }
};

}  // namespace uitws
