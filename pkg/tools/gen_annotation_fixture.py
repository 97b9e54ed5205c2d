#!/usr/bin/env python3
"""Generate the synthetic annotation fixture bundled under data/annotation_fixture/.

Shape: 1592 quotes annotated by 3 annotator pairs, 1292 agreements split
234 negative / 193 positive / 865 objective, 300 disagreements. Fully
deterministic; rerunning reproduces the committed files byte for byte.
"""

import json
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parents[1] / "data" / "annotation_fixture"

AGREED_NEGATIVE = 234
AGREED_POSITIVE = 193
AGREED_OBJECTIVE = 865
DISAGREED = 300
PAIR_IDS = ["p1", "p2", "p3"]

# label combinations used for the disagreed quotes, cycled in order
DISAGREEMENT_CYCLE = [
    ("negative", "objective"),
    ("objective", "negative"),
    ("positive", "objective"),
    ("objective", "positive"),
    ("positive", "negative"),
    ("negative", "positive"),
]


def split_across_pairs(count: int) -> list[int]:
    base, extra = divmod(count, len(PAIR_IDS))
    return [base + (1 if i < extra else 0) for i in range(len(PAIR_IDS))]


def main() -> None:
    plans = []  # (pair_id, label_a, label_b) per quote
    for label, count in [
        ("negative", AGREED_NEGATIVE),
        ("positive", AGREED_POSITIVE),
        ("objective", AGREED_OBJECTIVE),
    ]:
        for pair_id, pair_count in zip(PAIR_IDS, split_across_pairs(count)):
            plans.extend((pair_id, label, label) for _ in range(pair_count))
    for i, pair_count in enumerate(split_across_pairs(DISAGREED)):
        for j in range(pair_count):
            a, b = DISAGREEMENT_CYCLE[j % len(DISAGREEMENT_CYCLE)]
            plans.append((PAIR_IDS[i], a, b))
    plans.sort(key=lambda p: p[0])  # stable: keeps label order within each pair

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    with open(OUT_DIR / "quotes.jsonl", "w", encoding="utf-8") as corpus_f, open(
        OUT_DIR / "pairs.jsonl", "w", encoding="utf-8"
    ) as pairs_f:
        for i, (pair_id, label_a, label_b) in enumerate(plans, start=1):
            quote_id = f"aq{i:04d}"
            record = {
                "id": quote_id,
                "text": f"Remarks {i} by Nora Vance on the standing agenda of the assembly.",
                "source": "Recorder of the assembly",
                "target": {"name": "Nora Vance"},
                "categories": [],
            }
            corpus_f.write(json.dumps(record) + "\n")
            pairs_f.write(
                json.dumps({"pair": pair_id, "quote_id": quote_id, "a": label_a, "b": label_b})
                + "\n"
            )
    total = len(plans)
    agreed = AGREED_NEGATIVE + AGREED_POSITIVE + AGREED_OBJECTIVE
    print(f"wrote {total} quotes, {agreed} agreed ({agreed / total:.4f})")


if __name__ == "__main__":
    main()
