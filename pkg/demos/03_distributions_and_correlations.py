"""
Distributions and correlation structure
=======================================

Join a characteristics table with an outcome, summarize the feature
distributions, and render the pairwise correlation matrix as an SVG
heatmap.
"""

from pathlib import Path

import numpy as np

from textchar import synth
from textchar.analysis import correlation_matrix, distribution_summary
from textchar.corpus import OutcomeColumn, attach_outcomes
from textchar.metrics import compute_table
from textchar.report import AnalysisReport, ChartSpec, render_chart

OUT = Path(__file__).parent / "output" / "03_distributions"
OUT.mkdir(parents=True, exist_ok=True)

fragments = synth.generate_records(600, seed=11)
selection = ["DESWC", "DESSL", "DESWLsy", "LDTTRa", "RDFRE",
             "WORD_PROPERTY_CONCRETENESS", "WORD_PROPERTY_AOA"]
table = compute_table(fragments, selection=selection, workers=2)

# plant an outcome so there is something to correlate against
outcome = synth.plant_binary_outcome(
    table, {"DESWC": 1.5, "WORD_PROPERTY_CONCRETENESS": -1.0}, seed=12)
frame = attach_outcomes(table, [OutcomeColumn("correct", "binary", outcome)])

summaries = distribution_summary(frame, frame.feature_names)
for name, s in summaries.items():
    print(f"{name:40s} mean={s['mean']:10.3f} std={s['std']:8.3f} "
          f"min={s['min']:9.3f} max={s['max']:9.3f} missing={s['missing']}")

columns, matrix = correlation_matrix(frame, frame.feature_names + ["correct"])
outcome_row = matrix[-1]
print("\ncorrelation with the outcome:")
order = np.argsort(-np.abs(np.nan_to_num(outcome_row[:-1])))
for i in order:
    print(f"  {columns[i]:40s} r = {outcome_row[i]:+.3f}")

# charts are rendered from a report object; everything is deterministic SVG
report = AnalysisReport(
    distributions=summaries,
    correlations={
        "columns": columns,
        "matrix": [[None if not np.isfinite(v) else float(v) for v in row]
                   for row in matrix],
    },
)
(OUT / "heatmap.svg").write_text(
    render_chart(ChartSpec("heatmap", "characteristic correlations", "correlations"),
                 report),
    encoding="utf-8",
)
(OUT / "deswc_histogram.svg").write_text(
    render_chart(ChartSpec("histogram", "distribution of text.DESWC",
                           "distributions/text.DESWC"), report),
    encoding="utf-8",
)
print(f"\nwrote {OUT / 'heatmap.svg'} and {OUT / 'deswc_histogram.svg'}")
