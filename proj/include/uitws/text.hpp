#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uitws::text {

// UTF-8 <-> code points. Invalid bytes decode to U+FFFD one byte at a time.
std::vector<char32_t> decode_utf8(std::string_view s);
std::string encode_utf8(const std::vector<char32_t>& cps);

bool is_alpha(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
char32_t to_lower(char32_t cp);

/// Canonical composition (NFC) over the Latin repertoire; code points
/// outside the covered blocks pass through unchanged.
std::string nfc(std::string_view s);

/// NFC + per-code-point lowercasing.
std::string lowercase(std::string_view s);

/// The old-style -> new-style Vietnamese tone placement digraphs
/// ("óa" -> "oá" etc.), as shipped in data/tone_map.tsv.
const std::vector<std::pair<std::string, std::string>>& tone_map();

/// Applies the tone map once, left to right. Input must already be
/// NFC-normalized lowercase; the result is a fixed point of the map.
std::string canonicalize_tones(std::string_view s);

}  // namespace uitws::text
