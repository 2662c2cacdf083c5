#include "uitws/stats.hpp"

#include <algorithm>

#include "uitws/error.hpp"

namespace uitws {

namespace {

void require_labels(const Corpus& corpus, const char* op) {
  for (const Sentence& s : corpus.sentences) {
    if (!s.labeled)
      throw Error(ErrorKind::NeedsLabels, std::string(op) + " requires a labeled corpus");
  }
}

/// Calls fn(start, end) for every word span [start, end) of the sentence.
template <typename Fn>
void for_each_word(const Sentence& s, Fn&& fn) {
  size_t start = 0;
  for (size_t gap = 0; gap < s.gap_labels.size(); ++gap) {
    if (s.gap_labels[gap] == Label::Space) {
      fn(start, gap + 1);
      start = gap + 1;
    }
  }
  fn(start, s.size());
}

}  // namespace

void compute_separable(const Corpus& corpus, DerivedStats& stats) {
  require_labels(corpus, "compute_separable");
  stats.sep_counts.clear();
  stats.separable.clear();

  for (const Sentence& s : corpus.sentences) {
    for_each_word(s, [&](size_t start, size_t end) {
      auto& [a, b] = stats.sep_counts[s.norm_syllables[start]];
      if (end - start == 1) {
        ++a;
      } else {
        ++b;
      }
    });
  }

  // Mean of a+b over candidates (a > b) only.
  uint64_t total = 0, candidates = 0;
  for (const auto& [syl, ab] : stats.sep_counts) {
    if (ab.first > ab.second) {
      total += ab.first + ab.second;
      ++candidates;
    }
  }
  if (candidates == 0) return;
  double mean = static_cast<double>(total) / static_cast<double>(candidates);
  for (const auto& [syl, ab] : stats.sep_counts) {
    if (ab.first > ab.second &&
        static_cast<double>(ab.first + ab.second) > mean) {
      stats.separable.insert(syl);
    }
  }
}

void compute_suffixes(const Corpus& corpus, const Lexicon& lexicon, DerivedStats& stats) {
  require_labels(corpus, "compute_suffixes");
  stats.suffix_counts.clear();
  stats.suffixes.clear();

  for (const Sentence& s : corpus.sentences) {
    for_each_word(s, [&](size_t start, size_t end) {
      size_t len = end - start;
      if (len != 3 && len != 4) return;
      if (s.types[end - 1] != SyllableType::Lower) return;
      std::span<const std::string> word(s.norm_syllables.data() + start, len);
      if (lexicon.contains(word)) return;
      ++stats.suffix_counts[s.norm_syllables[end - 1]];
    });
  }

  if (stats.suffix_counts.empty()) return;
  uint64_t total = 0;
  for (const auto& [syl, n] : stats.suffix_counts) total += n;
  double mean = static_cast<double>(total) / static_cast<double>(stats.suffix_counts.size());
  for (const auto& [syl, n] : stats.suffix_counts) {
    if (static_cast<double>(n) > mean) stats.suffixes.insert(syl);
  }
}

DerivedStats derive_stats(const Corpus& corpus, const Lexicon& lexicon) {
  DerivedStats stats;
  compute_separable(corpus, stats);
  compute_suffixes(corpus, lexicon, stats);
  return stats;
}

const char* LengthDistribution::bucket_name(int b) {
  static const char* kNames[kBuckets] = {"1", "2", "3", "4", "5-9", ">9"};
  return kNames[b];
}

int LengthDistribution::bucket_of(size_t syllable_count) {
  if (syllable_count <= 4) return static_cast<int>(syllable_count) - 1;
  if (syllable_count <= 9) return 4;
  return 5;
}

LengthDistribution word_length_distribution(const Corpus& corpus) {
  require_labels(corpus, "word_length_distribution");
  std::set<std::string> unique;
  uint64_t bucket_counts[LengthDistribution::kBuckets] = {0};

  for (const Sentence& s : corpus.sentences) {
    for_each_word(s, [&](size_t start, size_t end) {
      std::string key;
      for (size_t i = start; i < end; ++i) {
        if (!key.empty()) key += ' ';
        key += s.norm_syllables[i];
      }
      if (unique.insert(std::move(key)).second) {
        ++bucket_counts[LengthDistribution::bucket_of(end - start)];
      }
    });
  }

  LengthDistribution dist;
  dist.unique_words = unique.size();
  if (dist.unique_words > 0) {
    for (int b = 0; b < LengthDistribution::kBuckets; ++b) {
      dist.percent[b] = 100.0 * static_cast<double>(bucket_counts[b]) /
                        static_cast<double>(dist.unique_words);
    }
  }
  return dist;
}

}  // namespace uitws
