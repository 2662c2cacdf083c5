#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "uitws/corpus.hpp"
#include "uitws/resources.hpp"
#include "uitws/svm.hpp"

namespace uitws {

/// Greedy left-to-right decoding: each gap is classified with features
/// built from the labels already predicted. A one-syllable sentence has
/// no gaps.
std::vector<Label> segment_sentence(const LinearModel& model, const Lexicon& lexicon,
                                    const Sentence& sentence);

/// Decodes a labeled/unlabeled corpus in place (fills gap_labels).
void segment_corpus(const LinearModel& model, const Lexicon& lexicon, Corpus& corpus,
                    int workers = 1);

struct StreamOptions {
  bool strict = false;  // abort on malformed lines instead of echoing them
  int workers = 1;
};

struct StreamStats {
  uint64_t lines = 0;
  uint64_t malformed = 0;
};

/// Line-by-line segmentation; input order is preserved regardless of the
/// worker count. Malformed lines are echoed unsegmented with a diagnostic
/// (or abort the run in strict mode).
StreamStats segment_stream(const LinearModel& model, const Lexicon& lexicon,
                           std::istream& in, std::ostream& out,
                           const StreamOptions& opts,
                           const std::function<void(const std::string&)>& diag);

}  // namespace uitws
