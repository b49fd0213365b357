"""
Characterizing a single text
============================

The shortest path through the library: run the deterministic text pipeline
on one document and compute every default characteristic from the shared
analysis.
"""

from textchar.lexicons import load_manifest
from textchar.metrics import default_registry
from textchar.pipeline import Pipeline

TEXT = """\
The old lighthouse keeper climbed the narrow stairs every evening. He
carried a small lamp, a heavy key, and a quiet sense of duty. Below him,
the waves pushed against the rocks without mercy.

Visitors rarely came in winter. When they did, he answered their questions
patiently and pointed toward the gray horizon.
"""

# the pipeline bundles its lexicons; loading once is enough for any number
# of documents
pipeline = Pipeline.load()
doc = pipeline.analyze(TEXT)

print(f"paragraphs: {len(doc.paragraphs)}")
print(f"sentences:  {len(doc.sentences)}")
print(f"words:      {len(doc.word_tokens)}")
print()

# every token carries a tag, lemma and syllable count
for token in doc.sentences[0][:8]:
    print(f"  {token.surface:12s} {token.pos:6s} lemma={token.lemma:10s} syl={token.syllables}")
print()

# each metric is an (init, compute) pair served from a registry; init loads
# word databases, compute runs on the shared DocumentAnalysis
store = load_manifest()
registry = default_registry()
for key in registry.keys():
    spec = registry.get(key)
    value = spec.compute(spec.init(store), doc)
    if hasattr(value, "value"):  # word-property metrics also report coverage
        print(f"  {key:35s} {value.value!s:>22s}   coverage={value.coverage:.2f}")
    else:
        print(f"  {key:35s} {value!s:>22s}")
