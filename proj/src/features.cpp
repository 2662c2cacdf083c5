#include "uitws/features.hpp"

#include <algorithm>

#include "uitws/error.hpp"

namespace uitws {

namespace {

// Membership of the n-gram of normalized syllables starting at j. Any gram
// touching a position outside the sentence is absent by definition.
bool gram_in_dict(const GapContext& ctx, const Lexicon& lexicon, int j, int n) {
  if (j < 0 || j + n > ctx.n_syllables()) return false;
  std::span<const std::string> slice(ctx.sentence->norm_syllables.data() + j,
                                     static_cast<size_t>(n));
  return lexicon.contains(slice);
}

std::string join_norm(const GapContext& ctx, int j, int n) {
  std::string out = ctx.norm(j);
  for (int k = 1; k < n; ++k) {
    out += ' ';
    out += ctx.norm(j + k);
  }
  return out;
}

std::string join_types(const GapContext& ctx, int j, int n) {
  std::string out = to_string(ctx.type(j));
  for (int k = 1; k < n; ++k) {
    out += ' ';
    out += to_string(ctx.type(j + k));
  }
  return out;
}

// Length of the partial word ending at syllable i under the predicted
// prefix: one plus the run of trailing UNDERSCORE labels.
int partial_word_len(const GapContext& ctx) {
  int w = 1;
  for (int g = ctx.gap - 1; g >= 0 && ctx.prev_labels[g] == Label::Underscore; --g) ++w;
  return w;
}

}  // namespace

std::string FeatureConfig::to_string() const {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty()) out += ',';
    out += name;
  };
  if (use_base) add("base");
  if (use_long) add("long");
  if (use_sep) add("sep");
  if (use_sfx) add("sfx");
  return out;
}

FeatureConfig FeatureConfig::parse(std::string_view csv) {
  FeatureConfig cfg{false, false, false, false};
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string_view part = csv.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    if (part == "base") cfg.use_base = true;
    else if (part == "long") cfg.use_long = true;
    else if (part == "sep") cfg.use_sep = true;
    else if (part == "sfx") cfg.use_sfx = true;
    else if (!part.empty())
      throw Error(ErrorKind::BadInput, "unknown feature group \"" + std::string(part) +
                                           "\" (expected base,long,sep,sfx)");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!cfg.use_base && !cfg.use_long && !cfg.use_sep && !cfg.use_sfx)
    throw Error(ErrorKind::BadInput, "at least one feature group must be enabled");
  return cfg;
}

const std::string& GapContext::norm(int j) const {
  if (j < 0) return kSentinelLeft;
  if (j >= n_syllables()) return kSentinelRight;
  return sentence->norm_syllables[j];
}

SyllableType GapContext::type(int j) const {
  if (j < 0 || j >= n_syllables()) return SyllableType::Other;
  return sentence->types[j];
}

GapContext make_gap_context(const Sentence& sentence, int gap,
                            std::span<const Label> prev_labels) {
  if (sentence.size() < 2)
    throw Error(ErrorKind::BadInput, "sentence has no gaps");
  if (gap < 0 || gap >= static_cast<int>(sentence.size()) - 1)
    throw Error(ErrorKind::BadInput, "gap index out of range");
  if (prev_labels.size() != static_cast<size_t>(gap))
    throw Error(ErrorKind::BadInput, "prev_labels must cover exactly gaps 0..i-1");
  return GapContext{&sentence, gap, prev_labels};
}

std::map<std::string, int> bag_counts(const FeatureBag& bag) {
  std::map<std::string, int> counts;
  for (const std::string& f : bag) ++counts[f];
  return counts;
}

void extract_base(const GapContext& ctx, const Lexicon& lexicon,
                  const NameLists& names, FeatureBag& out) {
  const int i = ctx.gap;

  // T1: unigrams in the five-syllable window.
  for (int j = i - 2; j <= i + 2; ++j)
    out.push_back("B1[" + std::to_string(j - i) + "]=" + ctx.norm(j));

  // T2: bigrams across the window.
  for (int j = i - 2; j <= i + 1; ++j)
    out.push_back("B2[" + std::to_string(j - i) + "]=" + join_norm(ctx, j, 2));

  // T3-T5: dictionary hits for 2/3/4-grams, feature is the offset i-j.
  for (int j = i - 2; j <= i + 1; ++j)
    if (gram_in_dict(ctx, lexicon, j, 2))
      out.push_back("B3[" + std::to_string(i - j) + "]");
  for (int j = i - 2; j <= i; ++j)
    if (gram_in_dict(ctx, lexicon, j, 3))
      out.push_back("B4[" + std::to_string(i - j) + "]");
  for (int j = i - 3; j <= i; ++j)
    if (gram_in_dict(ctx, lexicon, j, 4))
      out.push_back("B5[" + std::to_string(i - j) + "]");

  // T6-T7: type n-grams where the leading type is not LOWER and the
  // syllable n-gram is out of dictionary.
  for (int j = i - 2; j <= i + 1; ++j)
    if (ctx.type(j) != SyllableType::Lower && !gram_in_dict(ctx, lexicon, j, 2))
      out.push_back("B6[" + std::to_string(j - i) + "]=" + join_types(ctx, j, 2));
  for (int j = i - 2; j <= i; ++j)
    if (ctx.type(j) != SyllableType::Lower && !gram_in_dict(ctx, lexicon, j, 3))
      out.push_back("B7[" + std::to_string(j - i) + "]=" + join_types(ctx, j, 3));

  // T8: full reduplication; T9/T10: capitalized name pair.
  if (ctx.type(i) == SyllableType::Lower && ctx.type(i + 1) == SyllableType::Lower &&
      ctx.norm(i) == ctx.norm(i + 1))
    out.push_back("B8[0]");
  if (ctx.type(i) == SyllableType::Upper && ctx.type(i + 1) == SyllableType::Upper &&
      is_family_name(names, ctx.norm(i)))
    out.push_back("B9[0]");
  if (ctx.type(i) == SyllableType::Upper && ctx.type(i + 1) == SyllableType::Upper &&
      is_middle_name(names, ctx.norm(i)))
    out.push_back("B10[0]");
}

void extract_long(const GapContext& ctx, const Lexicon& lexicon, FeatureBag& out) {
  const int i = ctx.gap;
  for (int n = 5; n <= 9; ++n) {
    for (int j = i - (n - 1); j <= i; ++j) {
      if (gram_in_dict(ctx, lexicon, j, n))
        out.push_back("L" + std::to_string(n) + "[" + std::to_string(i - j) + "]");
    }
  }
}

void extract_sep(const GapContext& ctx, const Lexicon& lexicon,
                 const DerivedStats& stats, FeatureBag& out) {
  const int i = ctx.gap;

  // Longest span first; at most one case fires. Case k covers the k
  // syllables ending at i (the partial word built so far); it requires the
  // span to be a dictionary word preceded by SPACE (or sentence start)
  // with UNDERSCORE predictions inside.
  int fired = 0, anchor = 0;
  for (int k = 4; k >= 2 && fired == 0; --k) {
    int s = i - (k - 1);
    if (s < 0) continue;
    if (!gram_in_dict(ctx, lexicon, s, k)) continue;
    if (s > 0 && ctx.prev_labels[s - 1] != Label::Space) continue;
    bool inside_ok = true;
    for (int g = s; g < i; ++g)
      if (ctx.prev_labels[g] != Label::Underscore) inside_ok = false;
    if (!inside_ok) continue;
    fired = k;
    anchor = s;
  }
  if (fired == 0 && stats.separable.count(ctx.norm(i)) &&
      (i == 0 || ctx.prev_labels[i - 1] == Label::Space)) {
    fired = 1;
    anchor = i;
  }
  if (fired == 0) return;

  // Record dictionary membership of every 2..5-gram inside the
  // five-syllable window starting at the anchor, both outcomes.
  for (int n = 2; n <= 5; ++n) {
    for (int j = anchor; j <= anchor + 5 - n; ++j) {
      bool hit = gram_in_dict(ctx, lexicon, j, n);
      out.push_back("A" + std::to_string(fired) + ":" + std::to_string(n) + "g[" +
                    std::to_string(j - anchor) + "]=" + (hit ? "1" : "0"));
    }
  }
}

void extract_sfx(const GapContext& ctx, const DerivedStats& stats, FeatureBag& out) {
  const int i = ctx.gap;
  if (!stats.suffixes.count(ctx.norm(i + 1))) return;
  int w = partial_word_len(ctx);
  if (w != 2 && w != 3) return;
  int off_set = w - 2;

  out.push_back("S:stem=" + join_norm(ctx, i - 1 - off_set, w));
  out.push_back("S:sfx=" + ctx.norm(i + 1));
  out.push_back("S:l1=" + ctx.norm(i - 2 - off_set));
  out.push_back("S:l2=" + ctx.norm(i - 3 - off_set));
  out.push_back("S:r1=" + ctx.norm(i + 2));
  out.push_back("S:r2=" + ctx.norm(i + 3));
}

FeatureBag extract_all(const GapContext& ctx, const FeatureConfig& config,
                       const Lexicon& lexicon, const NameLists& names,
                       const DerivedStats& stats) {
  FeatureBag bag;
  bag.reserve(32);
  if (config.use_base) extract_base(ctx, lexicon, names, bag);
  if (config.use_long) extract_long(ctx, lexicon, bag);
  if (config.use_sep) extract_sep(ctx, lexicon, stats, bag);
  if (config.use_sfx) extract_sfx(ctx, stats, bag);
  bag.push_back(kBiasFeature);
  return bag;
}

SparseVector FeatureVocabulary::intern(const FeatureBag& bag) {
  // Gather counts per index, then sort.
  std::unordered_map<int32_t, int32_t> counts;
  counts.reserve(bag.size());
  for (const std::string& f : bag) {
    auto it = index_.find(f);
    int32_t idx;
    if (it != index_.end()) {
      idx = it->second;
    } else if (!frozen_) {
      idx = static_cast<int32_t>(names_.size());
      index_.emplace(f, idx);
      names_.push_back(f);
    } else {
      continue;  // frozen: unseen features are dropped
    }
    ++counts[idx];
  }
  SparseVector vec(counts.begin(), counts.end());
  std::sort(vec.begin(), vec.end());
  return vec;
}

int32_t FeatureVocabulary::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

void FeatureVocabulary::push_name(std::string name) {
  int32_t idx = static_cast<int32_t>(names_.size());
  index_.emplace(name, idx);
  names_.push_back(std::move(name));
}

}  // namespace uitws
