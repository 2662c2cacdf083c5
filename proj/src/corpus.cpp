#include "uitws/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "uitws/text.hpp"

namespace uitws {

namespace {

bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space_byte(line[i])) ++i;
    size_t start = i;
    while (i < line.size() && !is_space_byte(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

void push_syllable(Sentence& s, std::string_view raw) {
  s.raw_syllables.emplace_back(raw);
  s.norm_syllables.push_back(normalize_syllable(raw));
  s.types.push_back(classify_syllable_type(raw));
}

}  // namespace

const char* to_string(Label label) {
  return label == Label::Underscore ? "UNDERSCORE" : "SPACE";
}

const char* to_string(SyllableType type) {
  switch (type) {
    case SyllableType::Lower: return "LOWER";
    case SyllableType::Upper: return "UPPER";
    case SyllableType::AllUpper: return "ALL_UPPER";
    case SyllableType::Other: return "OTHER";
  }
  return "OTHER";
}

std::string normalize_syllable(std::string_view syllable) {
  return text::canonicalize_tones(text::lowercase(syllable));
}

SyllableType classify_syllable_type(std::string_view syllable) {
  std::vector<char32_t> cps = text::decode_utf8(syllable);
  if (cps.empty()) return SyllableType::Other;

  bool all_alpha_lower = true;
  bool all_alpha_upper = true;
  for (char32_t cp : cps) {
    if (!text::is_alpha(cp) || !text::is_lower(cp)) all_alpha_lower = false;
    if (!text::is_alpha(cp) || !text::is_upper(cp)) all_alpha_upper = false;
  }
  if (all_alpha_lower) return SyllableType::Lower;

  if (text::is_upper(cps[0])) {
    bool rest_alpha_lower = true;
    for (size_t i = 1; i < cps.size(); ++i) {
      if (text::is_alpha(cps[i]) && !text::is_lower(cps[i])) rest_alpha_lower = false;
    }
    if (rest_alpha_lower) return SyllableType::Upper;
  }
  if (cps.size() >= 2 && all_alpha_upper) return SyllableType::AllUpper;
  return SyllableType::Other;
}

Sentence parse_underscore_sentence(std::string_view line) {
  std::string normalized = text::nfc(line);
  std::vector<std::string_view> tokens = split_ws(normalized);
  if (tokens.empty()) throw Error(ErrorKind::EmptySentence, "blank line");

  Sentence s;
  s.labeled = true;
  for (size_t t = 0; t < tokens.size(); ++t) {
    std::string_view tok = tokens[t];
    if (tok.front() == '_' || tok.back() == '_' ||
        tok.find("__") != std::string_view::npos) {
      throw Error(ErrorKind::MalformedToken, "bad underscore placement in \"" +
                                                 std::string(tok) + "\"");
    }
    if (t > 0) s.gap_labels.push_back(Label::Space);
    size_t pos = 0;
    while (true) {
      size_t us = tok.find('_', pos);
      if (us == std::string_view::npos) {
        push_syllable(s, tok.substr(pos));
        break;
      }
      push_syllable(s, tok.substr(pos, us - pos));
      s.gap_labels.push_back(Label::Underscore);
      pos = us + 1;
    }
  }
  return s;
}

Sentence parse_raw_sentence(std::string_view line) {
  std::string normalized = text::nfc(line);
  std::vector<std::string_view> tokens = split_ws(normalized);
  if (tokens.empty()) throw Error(ErrorKind::EmptySentence, "blank line");

  Sentence s;
  s.labeled = false;
  for (std::string_view tok : tokens) {
    if (tok.find('_') != std::string_view::npos) {
      throw Error(ErrorKind::MalformedToken,
                  "underscore in unsegmented input: \"" + std::string(tok) + "\"");
    }
    push_syllable(s, tok);
  }
  return s;
}

std::string render_segmentation(const Sentence& sentence,
                                const std::vector<Label>& labels) {
  if (sentence.raw_syllables.empty())
    throw Error(ErrorKind::EmptySentence, "cannot render empty sentence");
  if (labels.size() != sentence.gap_count())
    throw Error(ErrorKind::LabelArity,
                "expected " + std::to_string(sentence.gap_count()) + " labels, got " +
                    std::to_string(labels.size()));
  std::string out = sentence.raw_syllables[0];
  for (size_t i = 1; i < sentence.raw_syllables.size(); ++i) {
    out += labels[i - 1] == Label::Underscore ? '_' : ' ';
    out += sentence.raw_syllables[i];
  }
  return out;
}

std::string render_segmentation(const Sentence& sentence) {
  if (!sentence.labeled)
    throw Error(ErrorKind::LabelArity, "sentence has no labels to render");
  return render_segmentation(sentence, sentence.gap_labels);
}

Corpus read_corpus(std::istream& in, const std::string& source_path, bool labeled) {
  Corpus corpus;
  corpus.source_path = source_path;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), is_space_byte)) continue;
    try {
      corpus.sentences.push_back(labeled ? parse_underscore_sentence(line)
                                         : parse_raw_sentence(line));
    } catch (const Error& e) {
      throw Error(e.kind(),
                  source_path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ResourceIO, "cannot open corpus file " + path);
  return read_corpus(in, path, /*labeled=*/true);
}

Corpus load_raw_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ResourceIO, "cannot open corpus file " + path);
  return read_corpus(in, path, /*labeled=*/false);
}

std::vector<FoldSplit> split_folds(const Corpus& corpus, int k, uint64_t seed) {
  if (k < 2) throw Error(ErrorKind::BadInput, "k must be >= 2");
  const size_t n = corpus.sentences.size();
  if (static_cast<size_t>(k) > n)
    throw Error(ErrorKind::NotEnoughData,
                "k=" + std::to_string(k) + " folds but only " + std::to_string(n) +
                    " sentences");

  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (size_t i = n; i > 1; --i) {
    size_t j = rng() % i;  // platform-stable Fisher-Yates
    std::swap(order[i - 1], order[j]);
  }

  // First n % k folds take one extra sentence.
  std::vector<FoldSplit> folds(k);
  size_t base = n / k, extra = n % k, pos = 0;
  for (int f = 0; f < k; ++f) {
    size_t len = base + (static_cast<size_t>(f) < extra ? 1 : 0);
    std::vector<bool> in_test(n, false);
    for (size_t t = 0; t < len; ++t) in_test[order[pos + t]] = true;
    pos += len;
    FoldSplit& split = folds[f];
    split.train.source_path = corpus.source_path + "#fold" + std::to_string(f) + ".train";
    split.test.source_path = corpus.source_path + "#fold" + std::to_string(f) + ".test";
    for (size_t i = 0; i < n; ++i) {
      (in_test[i] ? split.test : split.train).sentences.push_back(corpus.sentences[i]);
    }
  }
  return folds;
}

}  // namespace uitws
