#include "uitws/resources.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "uitws/corpus.hpp"
#include "uitws/error.hpp"

namespace uitws {

namespace {

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::string> split_spaces(std::string_view line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) parts.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

}  // namespace

Lexicon::Lexicon() { nodes_.emplace_back(); }

int32_t Lexicon::symbol_of(std::string_view syllable) const {
  auto it = symbols_.find(std::string(syllable));
  return it == symbols_.end() ? -1 : it->second;
}

void Lexicon::insert(std::span<const std::string> syllables) {
  if (syllables.empty()) return;
  std::string joined;
  int32_t node = 0;
  for (const std::string& raw : syllables) {
    std::string norm = normalize_syllable(raw);
    if (!joined.empty()) joined += ' ';
    joined += norm;
    auto [it, added] = symbols_.try_emplace(norm, static_cast<int32_t>(symbol_names_.size()));
    if (added) symbol_names_.push_back(norm);
    int32_t sym = it->second;
    auto child = nodes_[node].children.find(sym);
    if (child == nodes_[node].children.end()) {
      int32_t fresh = static_cast<int32_t>(nodes_.size());
      nodes_.emplace_back();
      nodes_[node].children.emplace(sym, fresh);
      node = fresh;
    } else {
      node = child->second;
    }
  }
  if (!nodes_[node].terminal) {
    nodes_[node].terminal = true;
    ++size_;
    max_len_ = std::max(max_len_, syllables.size());
    digest_ += fnv1a64(joined);  // wrapping sum keeps the digest order-independent
  }
}

bool Lexicon::contains(std::span<const std::string> norm_syllables) const {
  if (norm_syllables.empty() || norm_syllables.size() > max_len_) return false;
  int32_t node = 0;
  for (const std::string& syl : norm_syllables) {
    int32_t sym = symbol_of(syl);
    if (sym < 0) return false;
    auto it = nodes_[node].children.find(sym);
    if (it == nodes_[node].children.end()) return false;
    node = it->second;
  }
  return nodes_[node].terminal;
}

std::vector<std::string> Lexicon::entries() const {
  std::vector<std::string> out;
  out.reserve(size_);
  // Depth-first walk; syllable ids map back through symbol_names_.
  struct Frame {
    int32_t node;
    std::string prefix;
  };
  std::vector<Frame> stack{{0, ""}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const Node& n = nodes_[f.node];
    if (n.terminal) out.push_back(f.prefix);
    for (const auto& [sym, child] : n.children) {
      std::string next = f.prefix.empty() ? symbol_names_[sym]
                                          : f.prefix + " " + symbol_names_[sym];
      stack.push_back({child, std::move(next)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Lexicon read_lexicon(std::istream& in, const std::string& source_path) {
  Lexicon lex;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find('_') != std::string::npos) {
      throw Error(ErrorKind::MalformedEntry,
                  source_path + ":" + std::to_string(line_no) +
                      ": underscore in lexicon entry");
    }
    std::vector<std::string> syllables = split_spaces(line);
    if (syllables.empty()) continue;
    lex.insert(syllables);
  }
  return lex;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ResourceIO, "cannot open lexicon file " + path);
  return read_lexicon(in, path);
}

bool in_dict(const Lexicon& lexicon, std::span<const std::string> norm_syllables) {
  return lexicon.contains(norm_syllables);
}

std::unordered_set<std::string> load_name_set(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ResourceIO, "cannot open name list " + path);
  std::unordered_set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    for (std::string& tok : split_spaces(line)) out.insert(normalize_syllable(tok));
  }
  return out;
}

NameLists load_name_lists(const std::string& family_path, const std::string& middle_path) {
  NameLists lists;
  if (!family_path.empty()) lists.family_names = load_name_set(family_path);
  if (!middle_path.empty()) lists.middle_names = load_name_set(middle_path);
  return lists;
}

}  // namespace uitws
