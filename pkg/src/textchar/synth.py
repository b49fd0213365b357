"""Seeded synthetic corpus generators for tests, demos and benchmarks.

Documents are template-built English paragraphs over the bundled
vocabulary, so tagger lexicons and word databases cover them well.  Each
record carries a latent concreteness bias and a length target, giving the
computed characteristics real cross-document variance to analyze.
"""

from __future__ import annotations

import json
import math
import os
import random
from pathlib import Path

from . import _vocab as v
from .corpus import FragmentRecord, FragmentSet
from .lexicons import load_manifest

_OPENERS = (
    "However", "Moreover", "Meanwhile", "Then", "In addition", "For example",
    "After that", "Even so", "In contrast", "As a result",
)
_PRONOUN_SUBJECTS = ("He", "She", "They", "We", "I", "You", "It")
_URL_SLUGS = ("guide", "notes", "report", "archive", "summary", "data")
_MAIL_NAMES = ("anna", "tom", "maria", "lee", "sam", "nora")


def _split_by_value(words, values, fallback: float):
    scored = sorted(words, key=lambda w: (values.get(w, fallback), w))
    half = len(scored) // 2
    return scored[:half], scored[half:]


class CorpusGenerator:
    """Deterministic paragraph generator with a per-document
    concreteness bias."""

    def __init__(self, seed: int, data_dir: str | os.PathLike | None = None):
        self.rng = random.Random(seed)
        store = load_manifest(
            Path(data_dir) / "manifest.toml" if data_dir is not None else None
        )
        conc = store.database("concreteness").entries
        self.nouns_lo, self.nouns_hi = _split_by_value(v.NOUNS, conc, 3.0)
        self.adjs_lo, self.adjs_hi = _split_by_value(v.ADJECTIVES, conc, 2.8)
        self.verbs = sorted(v.VERBS)
        self.adverbs = sorted(v.ADVERBS)

    def _noun(self, p_concrete: float) -> str:
        pool = self.nouns_hi if self.rng.random() < p_concrete else self.nouns_lo
        return self.rng.choice(pool)

    def _adj(self, p_concrete: float) -> str:
        pool = self.adjs_hi if self.rng.random() < p_concrete else self.adjs_lo
        return self.rng.choice(pool)

    def _noun_phrase(self, p_concrete: float, with_adj_p: float = 0.5) -> list[str]:
        rng = self.rng
        words = [rng.choice(("the", "a", "this", "that", "every", "some"))]
        if rng.random() < with_adj_p:
            words.append(self._adj(p_concrete))
            if rng.random() < 0.18:
                words.append(self._adj(p_concrete))
        noun = self._noun(p_concrete)
        if rng.random() < 0.25:
            noun = v.noun_plural(noun)
        words.append(noun)
        return words

    def _sentence(self, p_concrete: float) -> str:
        rng = self.rng
        roll = rng.random()
        if roll < 0.015:
            slug = rng.choice(_URL_SLUGS)
            return f"See http://example.org/{slug} for more details."
        if roll < 0.025:
            name = rng.choice(_MAIL_NAMES)
            return f"Write to {name}@example.com about the plan."
        if roll < 0.10:
            count = rng.randint(2, 97)
            noun = v.noun_plural(self._noun(p_concrete))
            return f"The {self._noun(p_concrete)} counted {count} {noun} near the {self._noun(p_concrete)}."

        words: list[str] = []
        if rng.random() < 0.18:
            words.append(rng.choice(_OPENERS) + ",")
        if rng.random() < 0.3:
            subject = [rng.choice(_PRONOUN_SUBJECTS)]
        else:
            subject = self._noun_phrase(p_concrete)
        words.extend(subject)
        verb = rng.choice(self.verbs)
        words.append(v.verb_past(verb))
        if rng.random() < 0.75:
            words.append(rng.choice(("near", "behind", "beside", "under", "over",
                                     "toward", "with", "without", "around", "into")))
            words.extend(self._noun_phrase(p_concrete, with_adj_p=0.3))
        if rng.random() < 0.35:
            words.append(rng.choice(self.adverbs))
        if rng.random() < 0.12:
            words.append(rng.choice(("because", "although", "while", "since")))
            words.extend(self._noun_phrase(p_concrete, with_adj_p=0.2))
            words.append(v.verb_past(rng.choice(self.verbs)))

        text = " ".join(words)
        text = text[0].upper() + text[1:]
        if rng.random() < 0.05:
            text = '"' + text + '"'
        terminal_roll = rng.random()
        terminal = "." if terminal_roll < 0.9 else ("!" if terminal_roll < 0.95 else "?")
        return text + terminal

    def paragraph(self, target_words: int, p_concrete: float) -> str:
        sentences = []
        count = 0
        while count < target_words:
            s = self._sentence(p_concrete)
            sentences.append(s)
            count += len(s.split())
        return " ".join(sentences)

    def document(self, mean_words: int = 100, length_jitter: float = 0.4) -> str:
        rng = self.rng
        target = max(12, round(mean_words * (1.0 + rng.uniform(-length_jitter, length_jitter))))
        bias = rng.gauss(0.0, 1.4)
        p_concrete = 1.0 / (1.0 + math.exp(-bias))
        if rng.random() < 0.15:
            first = self.paragraph(target // 2, p_concrete)
            second = self.paragraph(target - target // 2, p_concrete)
            return first + "\n\n" + second
        return self.paragraph(target, p_concrete)


def generate_records(
    n: int,
    seed: int,
    fragment_name: str = "text",
    mean_words: int = 100,
    data_dir: str | os.PathLike | None = None,
) -> FragmentSet:
    """FragmentSet of n synthetic single-fragment documents."""
    gen = CorpusGenerator(seed, data_dir=data_dir)
    width = len(str(n - 1)) if n > 1 else 1
    records = [
        FragmentRecord(str(i).zfill(width), {fragment_name: gen.document(mean_words)})
        for i in range(n)
    ]
    return FragmentSet(records=records, fragment_names=(fragment_name,))


def plant_binary_outcome(
    table,
    weights: dict[str, float],
    fragment: str = "text",
    seed: int = 0,
    positive_rate_shift: float = 0.0,
) -> dict[str, float]:
    """Draw a binary outcome from a logistic model over z-scored metrics.

    ``weights`` maps metric keys to true coefficients on the z-scale.  The
    returned dict maps record id to 0/1; records missing any referenced
    metric are left out.
    """
    columns = {key: table.fragment_column(fragment, key) for key in weights}
    ids = [
        rid for rid in table.record_ids()
        if all(columns[key].get(rid) is not None for key in weights)
    ]
    zscores: dict[str, dict[str, float]] = {}
    for key, col in columns.items():
        values = [float(col[rid]) for rid in ids]
        mean = sum(values) / len(values)
        var = sum((x - mean) ** 2 for x in values) / len(values)
        std = math.sqrt(var) if var > 0 else 1.0
        zscores[key] = {rid: (float(col[rid]) - mean) / std for rid in ids}

    rng = random.Random(seed)
    outcome = {}
    for rid in ids:
        z = sum(w * zscores[key][rid] for key, w in weights.items())
        p = 1.0 / (1.0 + math.exp(-(z + positive_rate_shift)))
        outcome[rid] = 1.0 if rng.random() < p else 0.0
    return outcome


def write_outcomes_csv(path: str | os.PathLike, outcomes: dict[str, float],
                       name: str = "correct") -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"id,{name}\n")
        for rid in sorted(outcomes):
            value = outcomes[rid]
            text = str(int(value)) if value == int(value) else repr(value)
            fh.write(f"{rid},{text}\n")


def make_outcome_demo(
    out_dir: str | os.PathLike,
    n: int = 5000,
    seed: int = 7,
    workers: int = 2,
    mean_words: int = 100,
    weights: dict[str, float] | None = None,
) -> dict[str, Path]:
    """Write the end-to-end demo workspace: dataset, outcomes, config.

    The outcome is drawn from sigmoid(2 z(word count) - 1.5 z(concreteness)),
    so a fitted model should recover that structure.
    """
    from .metrics import compute_table

    if weights is None:
        weights = {"DESWC": 2.0, "WORD_PROPERTY_CONCRETENESS": -1.5}
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    fragments = generate_records(n, seed, mean_words=mean_words)

    dataset_path = out / "dataset.jsonl"
    with open(dataset_path, "w", encoding="utf-8", newline="\n") as fh:
        for record in fragments.records:
            fh.write(json.dumps(
                {"id": record.record_id, "text": record.fragments["text"]},
                ensure_ascii=False, sort_keys=True,
            ))
            fh.write("\n")

    table = compute_table(fragments, selection=list(weights), workers=workers)
    outcomes = plant_binary_outcome(table, weights, seed=seed + 1)
    outcomes_path = out / "outcomes.csv"
    write_outcomes_csv(outcomes_path, outcomes)

    holdout = max(1, round(n * 0.2))
    bucket_size = max(5, min(100, holdout // 5))
    config_path = out / "config.toml"
    config_path.write_text(
        f"""# synthetic end-to-end demo configuration
[dataset]
path = "dataset.jsonl"
format = "jsonl"
id_field = "id"

[[fragment]]
name = "text"
source_fields = ["text"]

[outcomes]
path = "outcomes.csv"
names = ["correct"]

[analysis]
run = ["distributions", "correlations", "buckets", "logistic"]
outcome = "correct"
bucket_size = {bucket_size}
impute = "mean"
seed = {seed}

[output]
dir = "out"
workers = {workers}
""",
        encoding="utf-8",
    )
    return {"dataset": dataset_path, "outcomes": outcomes_path, "config": config_path}


# --- genderedness bias demo -----------------------------------------------

_OCC_TEMPLATES = (
    "The {occ} finished the report without delay.",
    "A {occ} waited near the door.",
    "The {occ} answered every question carefully.",
    "Our {occ} started the meeting early.",
)
_PRONOUN_TEMPLATES = (
    "Then {pron} walked home.",
    "Later {pron} called again.",
    "Afterwards {pron} smiled.",
    "Then {pron} left quietly.",
)


def make_gender_records(
    n: int,
    seed: int,
    data_dir: str | os.PathLike | None = None,
) -> tuple[FragmentSet, dict[str, float]]:
    """Paired occupation/pronoun fragments plus a bias-degraded outcome.

    Accuracy decays linearly with the absolute genderedness difference
    between the occupation and the pronominal reference.
    """
    store = load_manifest(
        Path(data_dir) / "manifest.toml" if data_dir is not None else None
    )
    gdb = store.database("genderedness").entries
    occupations = sorted(w for w in gdb if w not in
                         ("she", "her", "hers", "herself", "he", "him", "his", "himself"))
    rng = random.Random(seed)
    width = len(str(n - 1)) if n > 1 else 1
    records = []
    outcome: dict[str, float] = {}
    for i in range(n):
        rid = str(i).zfill(width)
        occ = rng.choice(occupations)
        female = rng.random() < 0.5
        pron = rng.choice(("she", "her") if female else ("he", "his"))
        occ_text = rng.choice(_OCC_TEMPLATES).format(occ=occ)
        pron_text = rng.choice(_PRONOUN_TEMPLATES).format(pron=pron)
        records.append(FragmentRecord(rid, {"occupation": occ_text, "pronoun": pron_text}))
        diff = abs(gdb[occ] - (100.0 if female else 0.0))
        p_correct = 0.95 - 0.5 * diff / 100.0
        outcome[rid] = 1.0 if rng.random() < p_correct else 0.0
    fragments = FragmentSet(records=records, fragment_names=("occupation", "pronoun"))
    return fragments, outcome
