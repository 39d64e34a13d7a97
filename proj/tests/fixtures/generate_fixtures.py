#!/usr/bin/env python3
# Copyright 2026 The bioadv Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the synthetic test corpora in this directory.

The outputs are checked in; rerunning with the same Python version reproduces
them byte for byte.
"""

import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))

FILLER = ("the patient was given during after before with and of in for to "
          "we observed reported cases study rats mice dose treatment daily "
          "weeks following induced associated severe mild chronic acute "
          "group control results showed").split()

# Synonym-closed lexicon: every synonym is itself an entry of the same
# category, so the synonym attack keeps every entity recognizable.
CLOSED = {
    "chemical": [
        ["aspirin", "acetylsalicylic acid"],
        ["acetaminophen", "paracetamol"],
        ["furosemide", "frusemide"],
        ["cyclosporine", "ciclosporin"],
        ["adriamycin", "doxorubicin hydrochloride"],
        ["indomethacin", "indometacin"],
        ["valproate", "valproic acid"],
        ["lidocaine", "lignocaine"],
    ],
    "disease": [
        ["myocardial infarction", "heart attack"],
        ["hypertension", "high blood pressure"],
        ["seizures", "convulsions"],
        ["anemia", "anaemia"],
        ["nephrotoxicity", "renal toxicity"],
        ["edema", "oedema"],
        ["hemorrhage", "haemorrhage"],
        ["neutropenia", "neutrocytopenia"],
    ],
}


def write(name, text):
    with open(os.path.join(HERE, name), "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def ner_block(tokens):
    return "".join(f"{t} {l}\n" for t, l in tokens)


def entity_tokens(surface, etype):
    words = surface.split()
    return [(w, ("B-" if i == 0 else "I-") + etype) for i, w in enumerate(words)]


def sentence(rng, entities, length=(4, 9)):
    """Filler words with the given (surface, type) entities spliced in."""
    n = rng.randint(*length)
    items = [[(rng.choice(FILLER), "O")] for _ in range(n)]
    for surface, etype in entities:
        # Entities go between whole items, fenced by O words, so chunks never
        # merge or split.
        pos = rng.randint(0, len(items))
        items[pos:pos] = [[("with", "O")] + entity_tokens(surface, etype) + [("and", "O")]]
    return [tok for item in items for tok in item]


def closed_lexicon():
    rows = ["# Synonym-closed lexicon for the lexicon-tagger fixture."]
    for cat, groups in CLOSED.items():
        for group in groups:
            for term in group:
                syns = [s for s in group if s != term]
                rows.append(f"{term}\t{cat}\t{'|'.join(syns)}")
    write("closed_lexicon.tsv", "\n".join(rows) + "\n")


def lexicon_ner(rng):
    terms = [(t, cat) for cat, groups in CLOSED.items() for g in groups for t in g]
    blocks = []
    for _ in range(240):
        ents = [rng.choice(terms) for _ in range(rng.randint(1, 3))]
        blocks.append(ner_block(sentence(rng, ents)))
    write("lexicon_ner.conll", "-DOCSTART- O\n\n" + "\n".join(blocks))


# Short single-word entities recur many times, so perturbed surfaces of the
# training copy reappear in the perturbed test set.
MEM_CHEMICALS = ["lithium", "heparin", "cocaine", "digoxin", "insulin", "caffeine"]
MEM_DISEASES = ["stroke", "anemia", "asthma", "edema", "nausea", "pain"]


def memorize(rng):
    pool = [(t, "Chemical") for t in MEM_CHEMICALS] + [(t, "Disease") for t in MEM_DISEASES]

    def corpus(n):
        return "\n".join(ner_block(sentence(rng, [rng.choice(pool) for _ in range(rng.randint(1, 2))]))
                         for _ in range(n))

    write("mem_train.conll", corpus(1200))
    write("mem_test.conll", corpus(300))


def sts(rng):
    terms = ["warfarin", "aspirin", "heparin", "insulin", "hypertension", "stroke",
             "seizures", "anemia", "lithium", "pregnancy", "asthma", "digoxin"]
    words = ("patients received therapy clinical outcome levels increased decreased "
             "response risk trial effects serum measured").split()
    rows = []
    for i in range(60):
        shared_terms = rng.sample(terms, rng.randint(0, 3))
        shared_words = rng.sample(words, rng.randint(1, 4))
        own1 = rng.sample([w for w in words if w not in shared_words], rng.randint(0, 3))
        own2 = rng.sample([w for w in words if w not in shared_words and w not in own1], rng.randint(0, 3))
        s1 = shared_terms + shared_words + own1
        s2 = shared_terms + shared_words + own2
        rng.shuffle(s1)
        rng.shuffle(s2)
        a, b = set(s1), set(s2)
        gold = 5.0 * len(a & b) / len(a | b)
        rows.append(f"pair{i:03d}\t{' '.join(s1)}\t{' '.join(s2)}\t{gold!r}")
    write("sts_overlap.tsv", "id\tsentence1\tsentence2\tscore\n" + "\n".join(rows) + "\n")


def main():
    rng = random.Random(2020)
    closed_lexicon()
    lexicon_ner(rng)
    memorize(rng)
    sts(rng)


if __name__ == "__main__":
    main()
