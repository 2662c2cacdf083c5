#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "uitws/error.hpp"

namespace uitws {

/// Label of the gap after a syllable: word-internal or word boundary.
enum class Label : uint8_t { Underscore, Space };

enum class SyllableType : uint8_t { Lower, Upper, AllUpper, Other };

const char* to_string(Label label);
const char* to_string(SyllableType type);

/// One sentence: surface syllables, their normalized forms and types, and
/// (for labeled corpora) one label per inter-syllable gap.
struct Sentence {
  std::vector<std::string> raw_syllables;
  std::vector<std::string> norm_syllables;
  std::vector<SyllableType> types;
  bool labeled = false;
  std::vector<Label> gap_labels;  // length = |raw_syllables| - 1 when labeled

  size_t size() const { return raw_syllables.size(); }
  size_t gap_count() const { return raw_syllables.empty() ? 0 : raw_syllables.size() - 1; }
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::string source_path;

  bool labeled() const { return !sentences.empty() && sentences.front().labeled; }
};

/// Lowercase-simplified form: NFC, Unicode lowercase, then tone-placement
/// canonicalization. Idempotent; total on syllables (non-empty, no spaces).
std::string normalize_syllable(std::string_view syllable);

SyllableType classify_syllable_type(std::string_view syllable);

/// Parses one line of the underscore format ("hiện_đại_hóa đất_nước").
/// The line is NFC-normalized first; raw syllables keep surface casing.
Sentence parse_underscore_sentence(std::string_view line);

/// Parses one line of unsegmented (space-tokenized) text into an
/// unlabeled sentence.
Sentence parse_raw_sentence(std::string_view line);

/// Inverse of parse_underscore_sentence: joins raw syllables with "_"
/// inside words and " " between words, using the sentence's gap labels.
std::string render_segmentation(const Sentence& sentence);
std::string render_segmentation(const Sentence& sentence, const std::vector<Label>& labels);

/// Reads a labeled corpus file (underscore format, one sentence per line).
Corpus load_corpus(const std::string& path);
/// Reads an unsegmented corpus file; underscores are rejected.
Corpus load_raw_corpus(const std::string& path);
Corpus read_corpus(std::istream& in, const std::string& source_path, bool labeled);

/// Deterministic sentence-level k-fold partition; fold sizes differ by <= 1.
struct FoldSplit {
  Corpus train;
  Corpus test;
};
std::vector<FoldSplit> split_folds(const Corpus& corpus, int k, uint64_t seed);

}  // namespace uitws
