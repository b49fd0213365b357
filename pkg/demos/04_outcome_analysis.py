"""
Predicting per-example outcomes from text characteristics
=========================================================

The core diagnostic workflow: draw a binary outcome whose log-odds depend
on two characteristics, then recover that structure with bucket curves and
a standardized logistic regression, and locate easy/hard subsets through
held-out score buckets.
"""

from pathlib import Path

from textchar import synth
from textchar.analysis import bucket_curve, fit_logistic, fit_random_forest, score_buckets
from textchar.corpus import OutcomeColumn, attach_outcomes
from textchar.metrics import compute_table
from textchar.report import AnalysisReport, ChartSpec, render_chart

OUT = Path(__file__).parent / "output" / "04_outcome_analysis"
OUT.mkdir(parents=True, exist_ok=True)

fragments = synth.generate_records(3000, seed=21)
table = compute_table(
    fragments, selection=["DESWC", "WORD_PROPERTY_CONCRETENESS", "DESSL", "LDTTRa"],
    workers=2,
)

# ground truth: longer documents help, concrete vocabulary hurts
outcome = synth.plant_binary_outcome(
    table, {"DESWC": 2.0, "WORD_PROPERTY_CONCRETENESS": -1.5}, seed=22)
frame = attach_outcomes(table, [OutcomeColumn("correct", "binary", outcome)])

# single-characteristic view: sort by a metric, average the outcome in
# buckets of 100
curve = bucket_curve(frame, "text.DESWC", "correct", bucket_size=100)
print("outcome by word-count bucket:")
for p in curve.points[:5]:
    print(f"  mean DESWC {p.mean_metric:7.1f}  accuracy {p.mean_outcome:.3f} +- {p.outcome_se:.3f}")
print(f"  ... slope {curve.ols_slope():+.5f} over {len(curve.points)} buckets")

# multivariate view: unit-variance scaling makes coefficients comparable
model = fit_logistic(frame, "correct", frame.feature_names, seed=23)
print("\nstandardized logistic coefficients:")
for name, weight in model.coefficient_table():
    print(f"  {name:40s} {weight:+.3f}")
print(f"held-out accuracy: {model.holdout_accuracy:.3f}")

# held-out score buckets expose the easiest and hardest dataset subsets
scores = score_buckets(model, frame, bucket_size=100)
print(f"\npredicted-score buckets: worst {scores.points[0].mean_outcome:.3f}, "
      f"best {scores.points[-1].mean_outcome:.3f}, spread {scores.spread:.3f}")

forest = fit_random_forest(frame, "correct", frame.feature_names, n_trees=60, seed=24)
print("\nforest importances:")
for name, weight in forest.coefficient_table():
    print(f"  {name:40s} {weight:.3f}")

report = AnalysisReport(logistic=model.to_dict(), score_curve=scores.to_dict())
(OUT / "coefficients.svg").write_text(
    render_chart(ChartSpec("coefficient_bars", "logistic coefficients", "logistic"),
                 report),
    encoding="utf-8")
(OUT / "score_buckets.svg").write_text(
    render_chart(ChartSpec("bucket_curve", "held-out outcome by predicted score",
                           "score_curve"), report),
    encoding="utf-8")
print(f"\nwrote charts to {OUT}")
