#!/usr/bin/env python3
"""Freeze the golden grid report from the brute-force oracle.

Runs the oracle (tests/oracle.py, fully independent of the package) over the
bundled sample corpus and lexicons, and writes the expected `quotesent grid`
CSV output to data/golden/grid_sample.csv. The report format is pinned here
on purpose: header `window,alerts,<lexicon names...>`, whole-text row first
then ascending window sizes, alerts-on before alerts-off, two decimals.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from oracle import ref_accuracy, ref_load_categories, ref_load_corpus, ref_load_lexicon

WINDOWS = [None, 3, 6, 10]  # None = whole text
LEXICONS = ["unigrams", "idioms"]


def main() -> None:
    quotes = ref_load_corpus(ROOT / "data" / "sample_corpus.jsonl")
    defs = ref_load_categories(ROOT / "data" / "sample_categories.txt")
    lexicons = {
        name: ref_load_lexicon(ROOT / "data" / "sample_lexicons" / f"{name}.lex")
        for name in LEXICONS
    }

    lines = ["window,alerts," + ",".join(LEXICONS)]
    for width in WINDOWS:
        for alerts_on in (True, False):
            cells = []
            for name in LEXICONS:
                correct, covered = ref_accuracy(
                    quotes, lexicons[name], defs, width, alerts_on
                )
                cells.append(f"{correct / covered:.2f}")
            window_label = "whole" if width is None else str(width)
            alerts_label = "on" if alerts_on else "off"
            lines.append(f"{window_label},{alerts_label}," + ",".join(cells))

    out_path = ROOT / "data" / "golden" / "grid_sample.csv"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out_path}")
    print("\n".join(lines))


if __name__ == "__main__":
    main()
