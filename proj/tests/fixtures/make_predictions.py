#!/usr/bin/env python3
"""Regenerates the scoring fixtures: three manifests per task over the
fixture corpus and one noisy prediction file per manifest.

usage: make_predictions.py <argmine binary>

Manifests split the 36 fixture tweets 20/6/10 with Python's own RNG; the
predictions copy the gold labels of the exported test file and flip a
seeded share of them.
"""
import json
import os
import random
import subprocess
import sys
import tempfile

HERE = os.path.dirname(os.path.abspath(__file__))
TASKS = ["argumentative", "justification", "joint-collective-property", "type-of-both"]
SEEDS = [1, 2, 3]
GRID = {"learning_rates": [1e-5, 2e-5, 5e-5, 5e-4, 5e-6], "batch_size": 16, "max_epochs": 10,
        "dropout": 0.1, "weight_decay": 0.01, "optimizer": "AdamW", "adam_epsilon": 1e-6,
        "adam_beta1": 0.9, "adam_beta2": 0.99, "early_stopping_patience": 2}


def ids():
    with open(os.path.join(HERE, "corpus.jsonl"), encoding="utf-8") as f:
        return sorted(json.loads(line)["id"] for line in f)


def read_conll(path):
    blocks = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.rstrip("\n")
            if line.startswith("# id="):
                blocks.append((line[5:], []))
            elif line:
                blocks[-1][1].append(line.rsplit("\t", 1)[1])
    return blocks


def main(binary):
    out_dir = os.path.join(HERE, "runs")
    os.makedirs(out_dir, exist_ok=True)
    all_ids = ids()
    for task in TASKS:
        domain = {"argumentative": ["argumentative", "non_argumentative"],
                  "justification": ["IN", "OUT"],
                  "joint-collective-property": ["COLLECTIVE", "PROPERTY", "OUT"],
                  "type-of-both": ["fact", "value", "policy"]}[task]
        for seed in SEEDS:
            rng = random.Random(seed * 1000 + TASKS.index(task))
            order = all_ids[:]
            rng.shuffle(order)
            manifest = {"scheme": "mix-en-es", "task": task, "seed": seed, "fraction": 1.0,
                        "train": order[:20], "dev": order[20:26], "test": order[26:],
                        "grid": dict(GRID, selection_metric="macro_f1" if task.startswith("type") else "target_f1")}
            stem = os.path.join(out_dir, f"{task}.seed{seed}")
            with open(stem + ".manifest.json", "w") as f:
                json.dump(manifest, f, indent=2)
                f.write("\n")
            with tempfile.TemporaryDirectory() as tmp:
                subprocess.run([binary, "export", os.path.join(HERE, "corpus.jsonl"), "--layer", "a1",
                                "--manifest", stem + ".manifest.json", "-o", tmp],
                               check=True, stdout=subprocess.DEVNULL)
                rows = []
                if os.path.exists(os.path.join(tmp, "test.conll")):
                    for tid, labels in read_conll(os.path.join(tmp, "test.conll")):
                        noisy = [rng.choice(domain) if rng.random() < 0.2 else l for l in labels]
                        rows.append({"id": tid, "labels": noisy})
                else:
                    with open(os.path.join(tmp, "test.jsonl"), encoding="utf-8") as f:
                        for line in f:
                            inst = json.loads(line)
                            label = rng.choice(domain) if rng.random() < 0.3 else inst["label"]
                            rows.append({"id": inst["id"], "label": label})
            rng.shuffle(rows)  # scoring must not depend on file order
            with open(stem + ".predictions.jsonl", "w", encoding="utf-8") as f:
                for r in rows:
                    f.write(json.dumps(r, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
