#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uitws/corpus.hpp"
#include "uitws/resources.hpp"
#include "uitws/stats.hpp"

namespace uitws {

/// Which template groups are enabled. At least one must be on.
struct FeatureConfig {
  bool use_base = true;
  bool use_long = false;
  bool use_sep = false;
  bool use_sfx = false;

  bool operator==(const FeatureConfig&) const = default;

  std::string to_string() const;              // "base,sep,sfx"
  static FeatureConfig parse(std::string_view csv);
};

/// The decision context for the gap between syllable i and i+1.
/// prev_labels are the labels of gaps 0..i-1 (gold when training,
/// predicted when decoding).
struct GapContext {
  const Sentence* sentence = nullptr;
  int gap = 0;
  std::span<const Label> prev_labels;

  int n_syllables() const { return static_cast<int>(sentence->size()); }

  /// Normalized form at position j; "<s>"/"</s>" sentinels out of range.
  const std::string& norm(int j) const;
  /// Syllable type at position j; OTHER out of range.
  SyllableType type(int j) const;
};

GapContext make_gap_context(const Sentence& sentence, int gap,
                            std::span<const Label> prev_labels);

/// Feature multiset in emission order; duplicates accumulate as counts
/// once interned.
using FeatureBag = std::vector<std::string>;

/// Multiset view of a bag, for order-insensitive comparisons in tests.
std::map<std::string, int> bag_counts(const FeatureBag& bag);

void extract_base(const GapContext& ctx, const Lexicon& lexicon,
                  const NameLists& names, FeatureBag& out);
void extract_long(const GapContext& ctx, const Lexicon& lexicon, FeatureBag& out);
void extract_sep(const GapContext& ctx, const Lexicon& lexicon,
                 const DerivedStats& stats, FeatureBag& out);
void extract_sfx(const GapContext& ctx, const DerivedStats& stats, FeatureBag& out);

/// Union of the enabled groups plus the constant "BIAS" feature.
FeatureBag extract_all(const GapContext& ctx, const FeatureConfig& config,
                       const Lexicon& lexicon, const NameLists& names,
                       const DerivedStats& stats);

/// Sparse realized vector: (vocabulary index, count), indices strictly
/// increasing.
using SparseVector = std::vector<std::pair<int32_t, int32_t>>;

/// Bidirectional feature-string <-> dense-index map. While unfrozen,
/// interning assigns fresh indices in first-seen order; once frozen,
/// unseen strings are dropped.
class FeatureVocabulary {
 public:
  SparseVector intern(const FeatureBag& bag);

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }
  size_t size() const { return names_.size(); }
  const std::string& name(int32_t index) const { return names_[index]; }
  int32_t index_of(std::string_view name) const;  // -1 if unknown

  /// Re-adds a (name, index) pair when loading a model file; indices must
  /// arrive in order.
  void push_name(std::string name);

 private:
  std::unordered_map<std::string, int32_t> index_;
  std::vector<std::string> names_;
  bool frozen_ = false;
};

inline const std::string kSentinelLeft = "<s>";
inline const std::string kSentinelRight = "</s>";
inline const std::string kBiasFeature = "BIAS";

}  // namespace uitws
