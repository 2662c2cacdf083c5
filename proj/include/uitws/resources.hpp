#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace uitws {

/// Word lexicon: a trie keyed by whole normalized syllables. Immutable
/// after load; lookups are O(sequence length).
class Lexicon {
 public:
  Lexicon();

  /// Inserts a word given as its syllables; normalization is applied here.
  /// Idempotent for duplicates.
  void insert(std::span<const std::string> syllables);

  /// True iff the exact normalized sequence was inserted as an entry.
  /// Prefixes of entries are not entries; the empty sequence is never one.
  bool contains(std::span<const std::string> norm_syllables) const;

  size_t size() const { return size_; }
  size_t max_len() const { return max_len_; }

  /// Order-independent content digest (identity metadata for model files).
  uint64_t digest() const { return digest_; }

  /// All entries, one normalized space-joined word per element, sorted.
  std::vector<std::string> entries() const;

 private:
  struct Node {
    std::unordered_map<int32_t, int32_t> children;
    bool terminal = false;
  };

  int32_t symbol_of(std::string_view syllable) const;  // -1 if unknown

  std::vector<Node> nodes_;
  std::unordered_map<std::string, int32_t> symbols_;
  std::vector<std::string> symbol_names_;
  size_t size_ = 0;
  size_t max_len_ = 0;
  uint64_t digest_ = 0;
};

Lexicon load_lexicon(const std::string& path);
Lexicon read_lexicon(std::istream& in, const std::string& source_path);

bool in_dict(const Lexicon& lexicon, std::span<const std::string> norm_syllables);

/// Family- and middle-name sets; membership is exact match on normalized
/// syllables.
struct NameLists {
  std::unordered_set<std::string> family_names;
  std::unordered_set<std::string> middle_names;
};

NameLists load_name_lists(const std::string& family_path, const std::string& middle_path);
std::unordered_set<std::string> load_name_set(const std::string& path);

inline bool is_family_name(const NameLists& names, const std::string& f) {
  return names.family_names.count(f) != 0;
}
inline bool is_middle_name(const NameLists& names, const std::string& f) {
  return names.middle_names.count(f) != 0;
}

}  // namespace uitws
