#!/usr/bin/env python3
"""Regenerate the bundled data files under src/textchar/data/.

Everything here is deterministic: word lists come from textchar._vocab and
numeric values from a fixed-seed RNG, so reruns are byte-identical.  The
word databases are synthetic samples for tests and demos; real analyses
should point the manifest at real psycholinguistic databases.

Usage: python tools/build_data.py
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from textchar import _vocab as v  # noqa: E402
from textchar.pipeline.syllables import count_syllables  # noqa: E402

DATA = ROOT / "src" / "textchar" / "data"

SEED = 20240718

ABBREVIATIONS = """\
# sentence-boundary suppression list: lower-case, no trailing period
mr
mrs
ms
dr
prof
rev
hon
sr
jr
st
mt
etc
e.g
i.e
cf
vs
al
inc
ltd
co
corp
dept
univ
est
approx
fig
eq
no
nos
vol
pp
ed
eds
min
max
sec
gen
gov
sen
rep
capt
col
lt
maj
sgt
u.s
u.k
a.m
p.m
jan
feb
mar
apr
jun
jul
aug
sep
sept
oct
nov
dec
mon
tue
tues
wed
thu
thurs
fri
sat
sun
"""

WORD_SETS = {
    "first_person_singular_pronouns": ["i", "me", "my", "mine", "myself"],
    "first_person_plural_pronouns": ["we", "us", "our", "ours", "ourselves"],
    "second_person_pronouns": ["you", "your", "yours", "yourself", "yourselves"],
    "third_person_singular_pronouns": [
        "he", "him", "his", "himself",
        "she", "her", "hers", "herself",
        "it", "its", "itself",
    ],
    "third_person_plural_pronouns": ["they", "them", "their", "theirs", "themselves"],
    "causal_connectives": [
        "because", "since", "so", "therefore", "thus", "hence", "consequently",
        "accordingly", "thereby", "as a result", "due to", "so that",
        "in order to", "for this reason",
    ],
    "logical_connectives": [
        "and", "or", "if", "then", "unless", "whether", "otherwise", "nor",
        "either", "neither", "in fact", "in that case",
    ],
    "temporal_connectives": [
        "after", "before", "until", "during", "when", "whenever", "while",
        "then", "once", "meanwhile", "later", "earlier", "afterwards", "now",
        "soon", "finally", "next", "as soon as", "at first", "at last",
        "in the meantime",
    ],
    "additive_connectives": [
        "and", "also", "moreover", "furthermore", "besides", "additionally",
        "plus", "too", "in addition", "as well as", "along with",
    ],
    "positive_connectives": [
        "also", "moreover", "and", "besides", "furthermore", "likewise",
        "similarly", "so", "then", "as well", "in addition", "for example",
        "for instance", "after all",
    ],
    "negative_connectives": [
        "but", "however", "although", "though", "yet", "nevertheless",
        "nonetheless", "whereas", "still", "conversely", "unless", "despite",
        "on the other hand", "in contrast", "even though", "rather than",
    ],
}

# synthetic occupation-genderedness sample: share of female workers, 0-100
OCCUPATIONS = {
    "accountant": 58, "analyst": 41, "architect": 25, "auditor": 56,
    "baker": 62, "carpenter": 2, "cashier": 71, "chef": 38, "clerk": 51,
    "constructor": 4, "counselor": 73, "designer": 54, "developer": 20,
    "dietitian": 93, "driver": 28, "editor": 52, "electrician": 2,
    "engineer": 14, "farmer": 22, "firefighter": 4, "florist": 88,
    "guard": 20, "hairdresser": 96, "housekeeper": 95, "janitor": 24,
    "laborer": 11, "lawyer": 35, "librarian": 91, "machinist": 5, "maid": 97,
    "manager": 40, "mechanic": 4, "midwife": 99, "mover": 18, "nanny": 97,
    "nurse": 100, "officer": 32, "painter": 35, "photographer": 45,
    "physician": 33, "pilot": 10, "plumber": 3, "receptionist": 94,
    "roofer": 2, "salesperson": 44, "secretary": 97, "seamstress": 99,
    "sheriff": 14, "supervisor": 42, "surgeon": 30, "typist": 95,
    "welder": 4, "writer": 50,
}

# hand-checked overrides for words the vowel-group heuristic miscounts
SYLLABLE_OVERRIDES = {
    "actually": 4,
    "agreeing": 3,
    "area": 3,
    "areas": 3,
    "being": 2,
    "beyond": 2,
    "business": 2,
    "create": 2,
    "creates": 2,
    "curiosity": 5,
    "curious": 3,
    "doing": 2,
    "every": 2,
    "everyone": 3,
    "everything": 3,
    "evening": 2,
    "experience": 4,
    "going": 2,
    "idea": 3,
    "ideas": 3,
    "lion": 2,
    "lions": 2,
    "piano": 3,
    "pianos": 3,
    "poem": 2,
    "poems": 2,
    "quiet": 2,
    "quietly": 3,
    "radio": 3,
    "radios": 3,
    "rhythm": 2,
    "science": 2,
    "scientist": 3,
    "seeing": 2,
    "theories": 3,
    "theory": 3,
    "usually": 4,
}


def write_lines(path: Path, lines: list[str], header: str | None = None) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    body = "\n".join(lines) + "\n"
    if header:
        body = f"# {header}\n" + body
    path.write_text(body, encoding="utf-8", newline="\n")


def build_closed_class() -> None:
    groups = {
        "pronouns.txt": v.PRONOUNS,
        "determiners.txt": v.DETERMINERS,
        "prepositions.txt": v.PREPOSITIONS,
        "conjunctions.txt": v.CONJUNCTIONS,
        "auxiliaries.txt": v.AUXILIARIES,
        "particles.txt": v.PARTICLES,
    }
    for filename, words in groups.items():
        write_lines(DATA / "closed_class" / filename, sorted(set(words)))


def open_class_entries() -> dict[str, str]:
    closed = set()
    for words in (v.PRONOUNS, v.DETERMINERS, v.PREPOSITIONS, v.CONJUNCTIONS,
                  v.AUXILIARIES, v.PARTICLES):
        closed.update(words)

    entries: dict[str, str] = {}

    def add(word: str, tag: str) -> None:
        # first-wins priority: NOUN, VERB, ADJ, ADV (call order below)
        if word not in closed:
            entries.setdefault(word, tag)

    for noun in list(v.NOUNS) + sorted(OCCUPATIONS):
        add(noun, "NOUN")
        add(v.noun_plural(noun), "NOUN")
    for verb in v.VERBS:
        for form in v.verb_forms(verb):
            add(form, "VERB")
    for adj in v.ADJECTIVES:
        add(adj, "ADJ")
    for adv in v.ADVERBS:
        add(adv, "ADV")
    return entries


def build_open_class() -> None:
    entries = open_class_entries()
    write_lines(
        DATA / "open_class_tags.tsv",
        [f"{w}\t{t}" for w, t in sorted(entries.items())],
        header="open-class tag lexicon: word<TAB>TAG",
    )


def build_lemma_exceptions() -> None:
    pairs: dict[str, str] = {}
    for base, past in v.IRREGULAR_PAST.items():
        if past != base:
            pairs[past] = base
    for base, plural in v.IRREGULAR_PLURALS.items():
        pairs[plural] = base
    participles = {
        "been": "be", "begun": "begin", "chosen": "choose", "done": "do",
        "drawn": "draw", "driven": "drive", "drunk": "drink", "eaten": "eat",
        "fallen": "fall", "flown": "fly", "forgotten": "forget",
        "given": "give", "gone": "go", "grown": "grow", "hidden": "hide",
        "known": "know", "ridden": "ride", "risen": "rise", "seen": "see",
        "spoken": "speak", "sung": "sing", "swum": "swim", "taken": "take",
        "thrown": "throw", "written": "write",
    }
    pairs.update(participles)
    aux = {
        "am": "be", "are": "be", "is": "be", "was": "be", "were": "be",
        "being": "be", "does": "do", "did": "do", "has": "have",
        "had": "have", "having": "have",
    }
    pairs.update(aux)
    pairs.update({"better": "good", "best": "good", "worse": "bad", "worst": "bad"})
    write_lines(
        DATA / "lemma_exceptions.tsv",
        [f"{s}\t{l}" for s, l in sorted(pairs.items())],
        header="irregular lemmas: surface<TAB>lemma",
    )


def build_syllable_exceptions() -> None:
    table = dict(SYLLABLE_OVERRIDES)
    # silent -ed: past forms of regular verbs keep the stem's syllable count
    # unless the stem ends in a t/d sound
    for verb in v.REGULAR_VERBS:
        past = v.verb_past(verb)
        adds_syllable = verb[-1] in "td" or (verb[-1] == "e" and verb[-2] in "td")
        proper = count_syllables(verb) + (1 if adds_syllable else 0)
        if count_syllables(past) != proper:
            table[past] = proper
    write_lines(
        DATA / "syllable_exceptions.tsv",
        [f"{w}\t{n}" for w, n in sorted(table.items())],
        header="syllable overrides: word<TAB>count",
    )


def build_word_sets() -> None:
    for name, members in WORD_SETS.items():
        write_lines(DATA / "word_sets" / f"{name}.txt", sorted(set(members)))


def _clip(x: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, x))


def build_word_dbs() -> None:
    rng = random.Random(SEED)
    content = {}
    for w in v.CONCRETE_NOUNS:
        content[w] = ("noun_concrete", _clip(rng.gauss(4.5, 0.25), 3.5, 5.0))
    for w in v.ABSTRACT_NOUNS:
        content[w] = ("noun_abstract", _clip(rng.gauss(1.8, 0.3), 1.0, 2.8))
    for w in sorted(OCCUPATIONS):
        content.setdefault(w, ("noun_concrete", _clip(rng.gauss(4.2, 0.3), 3.2, 5.0)))
    for w in v.VERBS:
        content[w] = ("verb", _clip(rng.gauss(3.0, 0.5), 1.5, 4.5))
    for w in v.ADJECTIVES:
        content[w] = ("adj", _clip(rng.gauss(2.8, 0.6), 1.0, 4.6))
    for w in v.ADVERBS:
        content[w] = ("adv", _clip(rng.gauss(1.6, 0.3), 1.0, 2.6))

    closed = sorted(
        set(v.PRONOUNS) | set(v.DETERMINERS) | set(v.PREPOSITIONS)
        | set(v.CONJUNCTIONS) | set(v.AUXILIARIES) | {"not", "to"}
    )

    def rows(mapping: dict[str, float], fmt: str = "{:.3f}") -> list[str]:
        return ["word\tvalue"] + [f"{w}\t{fmt.format(x)}" for w, x in sorted(mapping.items())]

    concreteness = {w: val for w, (_, val) in content.items()}
    write_lines(DATA / "word_dbs" / "concreteness.tsv", rows(concreteness))

    mrc_conc = {
        w: _clip(100 + (val - 1.0) / 4.0 * 600 + rng.gauss(0, 25), 100, 700)
        for w, val in concreteness.items()
    }
    write_lines(DATA / "word_dbs" / "concreteness_mrc.tsv", rows(mrc_conc, "{:.1f}"))

    imagability = {
        w: _clip(100 + (val - 1.0) / 4.0 * 560 + rng.gauss(0, 50), 100, 700)
        for w, val in concreteness.items()
    }
    write_lines(DATA / "word_dbs" / "imagability.tsv", rows(imagability, "{:.1f}"))

    meaningfulness = {w: _clip(rng.gauss(380, 70), 100, 700) for w in content}
    write_lines(DATA / "word_dbs" / "meaningfulness.tsv", rows(meaningfulness, "{:.1f}"))

    familiarity = {
        w: _clip(640 - 8 * len(w) + rng.gauss(0, 40), 100, 700)
        for w in list(content) + closed
    }
    write_lines(DATA / "word_dbs" / "familiarity.tsv", rows(familiarity, "{:.1f}"))

    aoa = {
        w: _clip(2.0 + 0.45 * len(w) + rng.gauss(0, 1.2), 1.0, 18.0)
        for w in content
    }
    for w in closed:
        aoa[w] = _clip(2.0 + 0.2 * len(w) + abs(rng.gauss(0, 0.5)), 1.0, 6.0)
    write_lines(DATA / "word_dbs" / "age_of_acquisition.tsv", rows(aoa, "{:.2f}"))

    prevalence = {
        w: _clip(2.45 - 0.03 * len(w) - abs(rng.gauss(0, 0.25)), 0.2, 2.5)
        for w in list(content) + closed
    }
    write_lines(DATA / "word_dbs" / "prevalence.tsv", rows(prevalence, "{:.3f}"))

    frequency = {}
    for w in content:
        frequency[w] = int(10 ** _clip(6.3 - 0.24 * len(w) + rng.gauss(0, 0.7), 1.0, 7.6))
    for w in closed:
        frequency[w] = int(10 ** _clip(8.0 - 0.1 * len(w) + rng.gauss(0, 0.3), 6.0, 9.0))
    write_lines(DATA / "word_dbs" / "frequency.tsv", rows(frequency, "{:.0f}"))

    polysemy = {
        w: max(1, round(8.0 - 0.55 * len(w) + rng.gauss(0, 1.5)))
        for w in content
    }
    write_lines(DATA / "word_dbs" / "polysemy.tsv", rows(polysemy, "{:.0f}"))

    hyper_n = {}
    for w, (kind, _val) in content.items():
        if kind == "noun_concrete":
            hyper_n[w] = _clip(rng.gauss(7.0, 1.2), 1.0, 12.0)
        elif kind == "noun_abstract":
            hyper_n[w] = _clip(rng.gauss(4.0, 1.0), 1.0, 12.0)
    hyper_v = {
        w: _clip(rng.gauss(3.5, 1.0), 1.0, 12.0)
        for w, (kind, _val) in content.items()
        if kind == "verb"
    }
    write_lines(DATA / "word_dbs" / "hypernymy_nouns.tsv", rows(hyper_n))
    write_lines(DATA / "word_dbs" / "hypernymy_verbs.tsv", rows(hyper_v))
    hyper_nv = dict(sorted({**hyper_n, **hyper_v}.items()))
    write_lines(DATA / "word_dbs" / "hypernymy_noun_verb.tsv", rows(hyper_nv))

    genderedness = {w: float(x) for w, x in OCCUPATIONS.items()}
    write_lines(DATA / "word_dbs" / "genderedness.tsv", rows(genderedness, "{:.1f}"))


def main() -> None:
    write_lines(DATA / "abbreviations.txt", ABBREVIATIONS.rstrip("\n").splitlines())
    build_closed_class()
    build_open_class()
    build_lemma_exceptions()
    build_syllable_exceptions()
    build_word_sets()
    build_word_dbs()
    print(f"wrote data files under {DATA}")


if __name__ == "__main__":
    main()
