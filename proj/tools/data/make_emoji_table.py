#!/usr/bin/env python3
"""Writes data/emoji.tsv: code points (hex, '-' joined) <TAB> short name.

Names come from the Unicode character database of the running Python,
lowercased with every run of other characters turned into '_'.
"""
import re
import sys
import unicodedata

RANGES = [
    (0x2600, 0x27BF),    # misc symbols, dingbats
    (0x2B50, 0x2B55),
    (0x1F300, 0x1F5FF),  # pictographs
    (0x1F600, 0x1F64F),  # emoticons
    (0x1F680, 0x1F6FF),  # transport
    (0x1F900, 0x1F9FF),  # supplemental pictographs
    (0x1FA70, 0x1FAFF),
]
EXTRA = [0x00A9, 0x00AE, 0x203C, 0x2049, 0x2122, 0x2139, 0x231A, 0x231B, 0x23F0, 0x23F3]


def short_name(cp):
    name = unicodedata.name(chr(cp), "")
    return re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")


def main(out):
    rows = []
    cps = [cp for lo, hi in RANGES for cp in range(lo, hi + 1)] + EXTRA
    for cp in sorted(set(cps)):
        if unicodedata.category(chr(cp)) not in ("So", "Sk"):
            continue
        name = short_name(cp)
        if not name:
            continue
        rows.append((f"{cp:X}", name))
        if cp < 0x10000:
            rows.append((f"{cp:X}-FE0F", name))
    out.write("# generated by tools/data/make_emoji_table.py\n")
    for seq, name in rows:
        out.write(f"{seq}\t{name}\n")


if __name__ == "__main__":
    with open(sys.argv[1], "w", encoding="utf-8") as f:
        main(f)
