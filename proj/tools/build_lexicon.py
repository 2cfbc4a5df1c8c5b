#!/usr/bin/env python3
# tools/build_lexicon.py

# Copyright 2026 The LAUG Toolkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
# WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
# MERCHANTABLITY OR NON-INFRINGEMENT.
# See the Apache 2 License for the specific language governing permissions and
# limitations under the License.

"""Builds resources/lexicon.txt from CMUdict.

Keeps the most frequent English words (wordfreq) plus every word of the
fixture corpus, with stress marks removed.

  pip install cmudict wordfreq
  tools/build_lexicon.py [--top 8000]
"""

import argparse
import json
import os
import re

import cmudict
from wordfreq import top_n_list

HERE = os.path.dirname(os.path.abspath(__file__))
EXTRA = ["lester", "free", "three", "wishing"]


def fixture_words(path):
    words = set()
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    for d in data["dialogs"]:
        for t in d["turns"]:
            words.update(re.findall(r"[a-z']+", t["text"].lower()))
    return words


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--top", type=int, default=8000)
    ap.add_argument("--out", default=os.path.join(HERE, "..", "resources", "lexicon.txt"))
    ap.add_argument("--fixture", default=os.path.join(HERE, "..", "data", "fixture_corpus.json"))
    args = ap.parse_args()

    cmu = cmudict.dict()
    wanted = [w for w in top_n_list("en", args.top * 2) if w.isalpha()][: args.top]
    wanted = set(wanted) | fixture_words(args.fixture) | set(EXTRA)

    entries = {}
    for w in sorted(wanted):
        prons = cmu.get(w)
        if prons:
            entries[w] = [re.sub(r"\d", "", p) for p in prons[0]]
    inventory = sorted({p for pron in entries.values() for p in pron})

    with open(args.out, "w", encoding="utf-8") as f:
        f.write(";;; pronunciations from CMUdict 0.7b, stress removed\n")
        f.write(";;; inventory: " + " ".join(inventory) + "\n")
        for w, pron in entries.items():
            f.write(w + " " + " ".join(pron) + "\n")


if __name__ == "__main__":
    main()
