"""
The two-phase command-line workflow
===================================

``textchar compute`` writes a characteristics CSV; ``textchar analyze``
joins it with an outcome file and writes the report bundle (report.json,
SVG charts, index.html).  The two phases are connected only by files, so
outcome files can be swapped without recomputation.
"""

import subprocess
import sys
from pathlib import Path

from textchar import synth

OUT = Path(__file__).parent / "output" / "06_cli_workflow"
OUT.mkdir(parents=True, exist_ok=True)

# write dataset.jsonl, outcomes.csv and config.toml
paths = synth.make_outcome_demo(OUT, n=800, seed=41, workers=2)
print(f"demo workspace under {OUT}")
print((paths["config"]).read_text())


def run(*args):
    print("$", " ".join(args))
    result = subprocess.run([sys.executable, "-m", "textchar.cli", *args],
                            text=True, capture_output=True)
    print(result.stdout)
    if result.returncode != 0:
        print(result.stderr)
        raise SystemExit(result.returncode)


run("compute", "--config", str(paths["config"]), "--workers", "2")
run("analyze", "--config", str(paths["config"]))

print("artifacts:")
for path in sorted((OUT / "out").iterdir()):
    print(f"  {path.name}")
