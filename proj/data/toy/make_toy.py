#
# Copyright 2026 The cswaug Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Writes the toy Egyptian Arabic-English corpus used by the smoke tests.

Each template pairs an Arabic sentence with its English translation; tokens
carry alignment labels and every Arabic/English token pair sharing a label
is linked. Run from anywhere: python3 make_toy.py
"""

import json
import pathlib
import random

HERE = pathlib.Path(__file__).resolve().parent

# (definite, indefinite, english)
NOUNS = [
    ("الكتاب", "كتاب", "book"),
    ("الفيلم", "فيلم", "movie"),
    ("المشروع", "مشروع", "project"),
    ("الاجتماع", "اجتماع", "meeting"),
    ("الكمبيوتر", "كمبيوتر", "computer"),
    ("البرنامج", "برنامج", "program"),
    ("الامتحان", "امتحان", "exam"),
    ("التقرير", "تقرير", "report"),
    ("الموبايل", "موبايل", "phone"),
    ("الكورس", "كورس", "course"),
]
ADJECTIVES = [
    ("الكبير", "كبير", "big"),
    ("الجديد", "جديد", "new"),
    ("الصعب", "صعب", "hard"),
    ("الحلو", "حلو", "nice"),
    ("الطويل", "طويل", "long"),
    ("المهم", "مهم", "important"),
]
VERBS = [
    ("قريت", "read"),
    ("شفت", "saw"),
    ("خلصت", "finished"),
    ("نسيت", "forgot"),
    ("لقيت", "found"),
]
FUNCTION_WORDS = ["انا", "هو", "احنا", "في", "من", "ده", "بس", "كان", "جدا", "ممكن"]


def t_read(n, a, v, rng):
    ar = [("انا", "i"), (v[0], "v"), (n[0], "n"), (a[0], "a"), ("امبارح", "y")]
    en = [("i", "i"), (v[1], "v"), ("the", "n"), (a[2], "a"), (n[2], "n"),
          ("yesterday", "y")]
    return ar, en, "a"


def t_this(n, a, v, rng):
    ar = [(n[0], "n"), ("ده", "this"), (a[1], "a"), ("جدا", "very")]
    en = [("this", "this"), (n[2], "n"), ("is", None), ("very", "very"), (a[2], "a")]
    return ar, en, "n"


def t_need(n, a, v, rng):
    ar = [("احنا", "we"), ("محتاجين", "need"), (n[1], "n"), ("جديد", "new"),
          ("للشغل", "work")]
    en = [("we", "we"), ("need", "need"), ("a", "n"), ("new", "new"), (n[2], "n"),
          ("for", "work"), ("work", "work")]
    return ar, en, "new"


def t_working(n, a, v, rng):
    ar = [("هو", "he"), ("بيشتغل", "w"), ("في", "on"), (n[0], "n"), ("من", "since"),
          ("الصبح", "m")]
    en = [("he", "he"), ("is", "w"), ("working", "w"), ("on", "on"), ("the", "n"),
          (n[2], "n"), ("since", "since"), ("the", "m"), ("morning", "m")]
    return ar, en, "n"


def t_send(n, a, v, rng):
    ar = [("ممكن", "can"), ("تبعتلي", "send"), (n[0], "n"), ("بكره", "tom")]
    en = [("can", "can"), ("you", "send"), ("send", "send"), ("me", "send"),
          ("the", "n"), (n[2], "n"), ("tomorrow", "tom")]
    return ar, en, "n"


def t_but(n, a, v, rng):
    other = rng.choice([x for x in NOUNS if x != n])
    ar = [(n[0], "n"), ("كان", "was"), (a[1], "a"), ("بس", "but"), (other[0], "o"),
          ("كان", "was2"), ("احسن", "better")]
    en = [("the", "n"), (n[2], "n"), ("was", "was"), (a[2], "a"), ("but", "but"),
          ("the", "o"), (other[2], "o"), ("was", "was2"), ("better", "better")]
    return ar, en, "o"


TEMPLATES = [t_read, t_this, t_need, t_working, t_send, t_but]


def links(ar, en):
    out = []
    for i, (_, la) in enumerate(ar):
        for j, (_, le) in enumerate(en):
            if la is not None and la == le:
                out.append(f"{i}-{j}")
    return " ".join(out)


def csw_variant(ar, en, rng):
    """Arabic frame with the noun (and sometimes the adjective) in English."""
    by_label = {}
    for word, label in en:
        if label is not None and word not in ("the", "a"):
            by_label[label] = word
    swap = {"n", "o"} | ({"a"} if rng.random() < 0.5 else set())
    return " ".join(by_label[l] if l in swap and l in by_label else w for w, l in ar)


def main():
    rng = random.Random(20240611)
    corpus, align, tags = [], [], []
    for k in range(50):
        template = TEMPLATES[k % len(TEMPLATES)]
        ar, en, tagged = template(rng.choice(NOUNS), rng.choice(ADJECTIVES),
                                  rng.choice(VERBS), rng)
        pid = f"toy-{k + 1:02d}"
        corpus.append(f"{pid}\t{' '.join(w for w, _ in ar)}\t{' '.join(w for w, _ in en)}")
        align.append(links(ar, en))
        tags.append(json.dumps({"id": pid, "tags": [int(l == tagged) for _, l in en]}))

    heldout = []
    for k in range(24):
        template = TEMPLATES[k % len(TEMPLATES)]
        ar, en, _ = template(rng.choice(NOUNS), rng.choice(ADJECTIVES),
                             rng.choice(VERBS), rng)
        heldout.append(csw_variant(ar, en, rng))

    lexicon = []
    for d, i, e in NOUNS + ADJECTIVES:
        lexicon += [f"{d}\t{e}", f"{i}\t{e}"]
    lexicon += [f"{a}\t{e}" for a, e in VERBS]
    lexicon += ["امبارح\tyesterday", "بكره\ttomorrow", "الصبح\tthe morning"]

    def write(name, lines):
        (HERE / name).write_text("\n".join(lines) + "\n", encoding="utf-8")

    write("corpus.tsv", corpus)
    write("corpus.align", align)
    write("tags.jsonl", tags)
    write("heldout_csw.txt", heldout)
    write("lexicon.tsv", lexicon)
    write("function_words.txt", FUNCTION_WORDS)


if __name__ == "__main__":
    main()
