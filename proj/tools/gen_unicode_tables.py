#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from Python's unicodedata.

Covered blocks: ASCII letters, Latin-1 Supplement, Latin Extended-A/B,
Latin Extended Additional, and combining marks U+0300..U+036F. That is the
complete repertoire needed for Vietnamese orthography.

Usage: python3 tools/gen_unicode_tables.py > src/unicode_tables.inc
"""

import sys
import unicodedata

LETTER_RANGES = [
    (0x41, 0x5A), (0x61, 0x7A),
    (0xC0, 0xD6), (0xD8, 0xF6), (0xF8, 0xFF),
    (0x100, 0x24F),
    (0x1E00, 0x1EFF),
]

MARK_RANGE = (0x300, 0x36F)


def letters():
    for lo, hi in LETTER_RANGES:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            cat = unicodedata.category(ch)
            if not cat.startswith("L"):
                continue
            yield cp, ch, cat


def main():
    out = sys.stdout
    out.write("// Generated by tools/gen_unicode_tables.py -- do not edit by hand.\n\n")

    # Character info: alpha/upper/lower flags and simple lowercase mapping.
    rows = []
    for cp, ch, cat in letters():
        flags = 1  # alpha
        if cat == "Lu":
            flags |= 2
        elif cat == "Ll":
            flags |= 4
        low = ch.lower()
        # U+0130 lowers to "i" + combining dot; keep the base letter.
        lower_cp = ord(low[0]) if low else cp
        rows.append((cp, flags, lower_cp))
    out.write("inline constexpr CharInfo kCharInfo[] = {\n")
    for cp, flags, lower_cp in rows:
        out.write("    {0x%04X, %d, 0x%04X},\n" % (cp, flags, lower_cp))
    out.write("};\n\n")

    # Full canonical decompositions (NFD), flattened.
    seq = []
    decomp = []
    for cp, ch, _ in letters():
        nfd = unicodedata.normalize("NFD", ch)
        if len(nfd) == 1 and ord(nfd) == cp:
            continue
        decomp.append((cp, len(seq), len(nfd)))
        seq.extend(ord(c) for c in nfd)
    out.write("inline constexpr char32_t kDecompSeq[] = {\n")
    for i in range(0, len(seq), 8):
        out.write("    " + ", ".join("0x%04X" % c for c in seq[i:i + 8]) + ",\n")
    out.write("};\n\n")
    out.write("inline constexpr Decomp kDecomp[] = {\n")
    for cp, off, n in decomp:
        out.write("    {0x%04X, %d, %d},\n" % (cp, off, n))
    out.write("};\n\n")

    # Canonical composition pairs (no exclusions in these blocks).
    pairs = []
    for cp, ch, _ in letters():
        dm = unicodedata.decomposition(ch)
        if not dm or dm.startswith("<"):
            continue
        parts = [int(p, 16) for p in dm.split()]
        if len(parts) == 2:
            pairs.append((parts[0], parts[1], cp))
    pairs.sort()
    out.write("inline constexpr ComposePair kCompose[] = {\n")
    for a, b, ab in pairs:
        out.write("    {0x%04X, 0x%04X, 0x%04X},\n" % (a, b, ab))
    out.write("};\n\n")

    # Combining classes for the mark block.
    out.write("inline constexpr MarkCcc kMarkCcc[] = {\n")
    for cp in range(MARK_RANGE[0], MARK_RANGE[1] + 1):
        ccc = unicodedata.combining(chr(cp))
        if ccc:
            out.write("    {0x%04X, %d},\n" % (cp, ccc))
    out.write("};\n")


if __name__ == "__main__":
    main()
