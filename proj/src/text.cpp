#include "uitws/text.hpp"

#include <algorithm>
#include <array>

namespace uitws::text {

namespace {

struct CharInfo {
  char32_t cp;
  uint8_t flags;  // 1 = alpha, 2 = uppercase, 4 = lowercase
  char32_t lower;
};
struct Decomp {
  char32_t cp;
  uint16_t off;
  uint8_t len;
};
struct ComposePair {
  char32_t a, b, ab;
};
struct MarkCcc {
  char32_t cp;
  uint8_t ccc;
};

#include "unicode_tables.inc"

const CharInfo* find_char(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kCharInfo), std::end(kCharInfo), cp,
      [](const CharInfo& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kCharInfo) && it->cp == cp) return it;
  return nullptr;
}

uint8_t combining_class(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kMarkCcc), std::end(kMarkCcc), cp,
      [](const MarkCcc& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kMarkCcc) && it->cp == cp) return it->ccc;
  return 0;
}

char32_t compose_pair(char32_t a, char32_t b) {
  auto it = std::lower_bound(
      std::begin(kCompose), std::end(kCompose), std::make_pair(a, b),
      [](const ComposePair& e, const std::pair<char32_t, char32_t>& k) {
        return e.a != k.first ? e.a < k.first : e.b < k.second;
      });
  if (it != std::end(kCompose) && it->a == a && it->b == b) return it->ab;
  return 0;
}

void decompose_into(char32_t cp, std::vector<char32_t>& out) {
  auto it = std::lower_bound(
      std::begin(kDecomp), std::end(kDecomp), cp,
      [](const Decomp& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kDecomp) && it->cp == cp) {
    for (int i = 0; i < it->len; ++i) out.push_back(kDecompSeq[it->off + i]);
  } else {
    out.push_back(cp);
  }
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> cps;
  cps.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = s[i];
    char32_t cp = 0xFFFD;
    size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0 && i + 1 < s.size() &&
               (s[i + 1] & 0xC0) == 0x80) {
      cp = (b0 & 0x1F) << 6 | (s[i + 1] & 0x3F);
      len = 2;
      if (cp < 0x80) cp = 0xFFFD;
    } else if ((b0 & 0xF0) == 0xE0 && i + 2 < s.size() &&
               (s[i + 1] & 0xC0) == 0x80 && (s[i + 2] & 0xC0) == 0x80) {
      cp = (b0 & 0x0F) << 12 | (s[i + 1] & 0x3F) << 6 | (s[i + 2] & 0x3F);
      len = 3;
      if (cp < 0x800) cp = 0xFFFD;
    } else if ((b0 & 0xF8) == 0xF0 && i + 3 < s.size() &&
               (s[i + 1] & 0xC0) == 0x80 && (s[i + 2] & 0xC0) == 0x80 &&
               (s[i + 3] & 0xC0) == 0x80) {
      cp = (b0 & 0x07) << 18 | (s[i + 1] & 0x3F) << 12 |
           (s[i + 2] & 0x3F) << 6 | (s[i + 3] & 0x3F);
      len = 4;
      if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
    }
    cps.push_back(cp);
    i += len;
  }
  return cps;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }
  return out;
}

bool is_alpha(char32_t cp) {
  const CharInfo* e = find_char(cp);
  return e && (e->flags & 1);
}

bool is_upper(char32_t cp) {
  const CharInfo* e = find_char(cp);
  return e && (e->flags & 2);
}

bool is_lower(char32_t cp) {
  const CharInfo* e = find_char(cp);
  return e && (e->flags & 4);
}

char32_t to_lower(char32_t cp) {
  const CharInfo* e = find_char(cp);
  return e ? e->lower : cp;
}

std::string nfc(std::string_view s) {
  std::vector<char32_t> cps = decode_utf8(s);

  // Canonical decomposition.
  std::vector<char32_t> nfd;
  nfd.reserve(cps.size() + 4);
  for (char32_t cp : cps) decompose_into(cp, nfd);

  // Canonical ordering: bubble non-starters into non-decreasing ccc order.
  for (size_t i = 1; i < nfd.size(); ++i) {
    uint8_t ccc = combining_class(nfd[i]);
    if (ccc == 0) continue;
    size_t j = i;
    while (j > 0) {
      uint8_t prev = combining_class(nfd[j - 1]);
      if (prev == 0 || prev <= ccc) break;
      std::swap(nfd[j - 1], nfd[j]);
      --j;
    }
  }

  // Canonical composition.
  std::vector<char32_t> out;
  out.reserve(nfd.size());
  int last_starter = -1;
  int last_ccc = -1;  // ccc of the last combining char seen since the starter
  for (char32_t cp : nfd) {
    uint8_t ccc = combining_class(cp);
    if (last_starter >= 0 && ccc != 0 && last_ccc < static_cast<int>(ccc)) {
      if (char32_t ab = compose_pair(out[last_starter], cp)) {
        out[last_starter] = ab;
        continue;
      }
    }
    if (ccc == 0) {
      // A starter may still compose with the previous starter pair-wise
      // (not needed for this repertoire, but keep the blocked check exact).
      if (last_starter >= 0 && last_ccc == -1) {
        if (char32_t ab = compose_pair(out[last_starter], cp)) {
          out[last_starter] = ab;
          continue;
        }
      }
      out.push_back(cp);
      last_starter = static_cast<int>(out.size()) - 1;
      last_ccc = -1;
    } else {
      out.push_back(cp);
      last_ccc = ccc;
    }
  }
  return encode_utf8(out);
}

std::string lowercase(std::string_view s) {
  std::vector<char32_t> cps = decode_utf8(nfc(s));
  for (char32_t& cp : cps) cp = to_lower(cp);
  return encode_utf8(cps);
}

const std::vector<std::pair<std::string, std::string>>& tone_map() {
  // Mirror of data/tone_map.tsv (a unit test asserts the two stay equal).
  static const std::vector<std::pair<std::string, std::string>> kMap = {
      {"òa", "oà"}, {"óa", "oá"}, {"ỏa", "oả"},
      {"õa", "oã"}, {"ọa", "oạ"}, {"òe", "oè"},
      {"óe", "oé"}, {"ỏe", "oẻ"}, {"õe", "oẽ"},
      {"ọe", "oẹ"}, {"ùy", "uỳ"}, {"úy", "uý"},
      {"ủy", "uỷ"}, {"ũy", "uỹ"}, {"ụy", "uỵ"},
  };
  return kMap;
}

std::string canonicalize_tones(std::string_view s) {
  std::vector<char32_t> cps = decode_utf8(s);
  // Pre-decoded digraphs: (first cp, second cp) -> (first', second').
  struct Entry {
    char32_t a, b, na, nb;
  };
  static const std::vector<Entry> kEntries = [] {
    std::vector<Entry> es;
    for (const auto& [from, to] : tone_map()) {
      auto f = decode_utf8(from);
      auto t = decode_utf8(to);
      es.push_back({f[0], f[1], t[0], t[1]});
    }
    return es;
  }();
  for (size_t i = 0; i + 1 < cps.size(); ++i) {
    for (const Entry& e : kEntries) {
      if (cps[i] == e.a && cps[i + 1] == e.b) {
        cps[i] = e.na;
        cps[i + 1] = e.nb;
        ++i;  // digraphs do not overlap
        break;
      }
    }
  }
  return encode_utf8(cps);
}

}  // namespace uitws::text
