"""Run a small verification grid and print the report summary.

This is the library form of `hoffmanzeta verify grid`. Records are
sorted by label, so the JSON is stable from run to run.
"""
import json

from hoffmanzeta import make_context
from hoffmanzeta.verify import render_report, run_grid

report = run_grid(1, 1, make_context(30), cutoff=10 ** 4)
for rec in report.records:
    status = "ok  " if rec.passed else "FAIL"
    print(f"{status} {rec.label:<34} agree={rec.agree_digits:>2}  diff={rec.abs_diff}  budget={rec.budget}")
print(json.dumps(report.summary))
print(render_report(report, "csv").splitlines()[0])
