#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "uitws/corpus.hpp"
#include "uitws/resources.hpp"

namespace uitws {

/// Statistics derived from a labeled training corpus. Ordered containers
/// keep reports and model files byte-reproducible.
struct DerivedStats {
  std::set<std::string> separable;
  std::set<std::string> suffixes;
  // syllable -> (a: count as one-syllable word, b: count word-initial in
  // multi-syllable words)
  std::map<std::string, std::pair<uint64_t, uint64_t>> sep_counts;
  // last lower syllable of OOV 3-4 syllable words -> token count
  std::map<std::string, uint64_t> suffix_counts;
};

/// A syllable is separable when it occurs more often as a one-syllable word
/// than word-initially in longer words (a > b), and its total a+b exceeds
/// the mean a+b over all such candidates (both strict).
void compute_separable(const Corpus& corpus, DerivedStats& stats);

/// A suffix is a LOWER-type syllable whose count as the final syllable of
/// out-of-vocabulary 3- or 4-syllable words strictly exceeds the mean count
/// over all counted syllables.
void compute_suffixes(const Corpus& corpus, const Lexicon& lexicon, DerivedStats& stats);

DerivedStats derive_stats(const Corpus& corpus, const Lexicon& lexicon);

/// Percentage of unique (normalized) words per syllable-count bucket.
struct LengthDistribution {
  static constexpr int kBuckets = 6;  // 1, 2, 3, 4, 5-9, >9
  double percent[kBuckets] = {0, 0, 0, 0, 0, 0};
  uint64_t unique_words = 0;

  static const char* bucket_name(int b);
  static int bucket_of(size_t syllable_count);
};

LengthDistribution word_length_distribution(const Corpus& corpus);

}  // namespace uitws
