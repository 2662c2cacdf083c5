#pragma once

#include "uitws/corpus.hpp"
#include "uitws/features.hpp"
#include "uitws/resources.hpp"
#include "uitws/stats.hpp"
#include "uitws/svm.hpp"

namespace uitws {

/// One gap per training example, with gold previous labels (teacher
/// forcing). Interns features into `vocab` (must be unfrozen).
TrainSet build_train_set(const Corpus& corpus, const FeatureConfig& config,
                         const Lexicon& lexicon, const NameLists& names,
                         const DerivedStats& stats, FeatureVocabulary& vocab);

/// Full training pipeline: derive stats, build and freeze the vocabulary,
/// solve, and assemble a self-contained model.
LinearModel train_model(const Corpus& corpus, const FeatureConfig& config,
                        const Lexicon& lexicon, const NameLists& names,
                        const SolverOptions& opts);

}  // namespace uitws
