"""
When the surrogate gets fooled
==============================

Read the extended fine-tuning trace of a finished run and show where
the predicted score keeps rising after the true score has peaked.

Run ``learnedloss fooling --output-dir RUN`` first, then
``python3 notebooks/03_fooling.py RUN``.
"""

import sys
from pathlib import Path

import numpy as np

from learnedloss import pipeline
from learnedloss.enhancer import FoolingTrace

run = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/default")
trace = FoolingTrace.from_csv(run / "traces" / "fooling_trace.csv")
report = pipeline.fooling_report(trace)

pred = trace.column("predicted_mean")
true = trace.column("true_quality_mean")

# a crude text plot: one line per logged iteration, a few dozen rows at most
step = max(1, len(trace.rows) // 40)
lo, hi = min(pred.min(), true.min()), max(pred.max(), true.max())


def col(v):
    return int(round(50 * (v - lo) / (hi - lo + 1e-12)))


for k in range(0, len(trace.rows), step):
    line = [" "] * 51
    line[col(true[k])] = "t"
    line[col(pred[k])] = "p"
    print(f"{trace.rows[k].iteration:>6} |{''.join(line)}|")

print()
print("true peak at iteration", report.peak_iteration, f"({report.peak_true:.3f})")
print(f"true at end {report.end_true:.3f}, predicted at end {report.end_predicted:.3f}")
print("fooling detected:", report.detected, f"(tau {report.tau})")
after = slice(int(np.argmax(true)), None)
if len(true[after]) > 2:
    print("correlation of predicted and true from the peak on:",
          np.corrcoef(pred[after], true[after])[0, 1].round(3))
