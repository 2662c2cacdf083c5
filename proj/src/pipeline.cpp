#include "uitws/pipeline.hpp"

#include "uitws/error.hpp"

namespace uitws {

TrainSet build_train_set(const Corpus& corpus, const FeatureConfig& config,
                         const Lexicon& lexicon, const NameLists& names,
                         const DerivedStats& stats, FeatureVocabulary& vocab) {
  TrainSet set;
  for (const Sentence& s : corpus.sentences) {
    if (!s.labeled)
      throw Error(ErrorKind::NeedsLabels, "training corpus must be labeled");
    for (int i = 0; i < static_cast<int>(s.gap_count()); ++i) {
      GapContext ctx = make_gap_context(
          s, i, std::span<const Label>(s.gap_labels.data(), i));
      FeatureBag bag = extract_all(ctx, config, lexicon, names, stats);
      set.examples.push_back({vocab.intern(bag), label_sign(s.gap_labels[i])});
    }
  }
  set.dim = static_cast<int32_t>(vocab.size());
  return set;
}

LinearModel train_model(const Corpus& corpus, const FeatureConfig& config,
                        const Lexicon& lexicon, const NameLists& names,
                        const SolverOptions& opts) {
  DerivedStats stats = derive_stats(corpus, lexicon);

  LinearModel model;
  model.config = config;
  model.stats = std::move(stats);
  model.names = names;
  model.lexicon_id = lexicon.digest();
  model.C = opts.C;
  model.loss = opts.loss;

  TrainSet set = build_train_set(corpus, config, lexicon, names, model.stats, model.vocab);
  model.vocab.freeze();

  SolveResult solved = solve_dual_cd(set, opts);
  model.weights = std::move(solved.weights);
  return model;
}

}  // namespace uitws
