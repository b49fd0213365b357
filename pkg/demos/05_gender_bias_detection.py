"""
Detecting a gender bias with a custom word-property metric
==========================================================

Register a custom "GENDEREDNESS" metric backed by an occupation database
(pronouns pinned to 100/0 by overrides), compute it on two fragments per
record, add the signed difference as a derived feature, and show that the
outcome degrades as the stereotype mismatch grows.
"""

import numpy as np

from textchar import synth
from textchar.analysis import bucket_curve
from textchar.corpus import DerivedFeatureSpec, OutcomeColumn, attach_outcomes
from textchar.metrics import compute_table, default_registry, register_metric, word_property_metric

# the synthetic dataset pairs an occupation sentence with a pronoun
# sentence; accuracy decays with |genderedness difference|
fragments, outcome = synth.make_gender_records(2000, seed=31)
print("example record:", dict(fragments.records[0].fragments))

# a custom metric is registered exactly like a built-in
registry = default_registry()
register_metric(registry, word_property_metric("GENDEREDNESS", "genderedness"))

table = compute_table(fragments, registry, selection=["GENDEREDNESS"], workers=2)
frame = attach_outcomes(
    table,
    [OutcomeColumn("correct", "binary", outcome)],
    [DerivedFeatureSpec("GENDEREDNESS", "occupation", "pronoun", name="gdiff")],
)

# signed difference: occupation minus pronoun; the bias is symmetric, so
# bucket on the absolute mismatch
frame = frame.with_columns({"abs_gdiff": np.abs(frame.column("gdiff"))})
curve = bucket_curve(frame, "abs_gdiff", "correct", bucket_size=200)

print("\naccuracy by |genderedness difference| bucket:")
for p in curve.points:
    print(f"  mismatch {p.mean_metric:6.1f}  accuracy {p.mean_outcome:.3f} +- {p.outcome_se:.3f}")
print(f"\nfitted slope: {curve.ols_slope():+.5f}  "
      f"(negative = stereotype mismatch hurts the model)")
print(f"accuracy drop across the range: "
      f"{curve.points[0].mean_outcome - curve.points[-1].mean_outcome:.3f}")
