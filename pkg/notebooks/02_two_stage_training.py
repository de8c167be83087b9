"""
Two-stage training at toy scale
===============================

Stage A teaches a Quality-Net to imitate the metric on noisy and
enhanced speech. Stage B freezes it and fine-tunes the mask estimator
to push the predicted score toward 1. Everything here is shrunk so the
script finishes in well under a minute; the CLI runs the same stages on
the full desk corpus.

Run with ``python3 notebooks/02_two_stage_training.py [run_dir]``.
"""

import sys
import tempfile
from pathlib import Path

from learnedloss import corpus, pipeline
from learnedloss.enhancer import FinetuneHyper, PretrainHyper
from learnedloss.quality_net import QualityNetHyper

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp()) / "toy"

cfg = pipeline.ExperimentConfig(
    run=pipeline.RunConfig(output_dir=str(out), val_subset_size=4),
    corpus=corpus.MixSpec(train_clean=4, validation_clean=2, test_clean=2,
                          min_duration=0.8, max_duration=1.2),
    qnet_train=QualityNetHyper(epochs=4),
    pretrain=PretrainHyper(epochs=4),
    finetune=FinetuneHyper(iterations=20, patience=None),
)

# corpus: WAV files + manifest, then metric labels for train/validation
manifest = pipeline.ensure_corpus(cfg)
print(len(manifest.records), "utterances under", out)

# stage A: MSE-pretrained enhancer augments the Quality-Net's data
a = pipeline.run_stage_a(cfg)
print("stage A", {k: a.summary[k] for k in ("train_pairs", "validation_mse", "validation_pearson_r")})

# stage B: gradient of sum (1 - Q)^2 flows through the frozen Q into G
b = pipeline.run_stage_b(cfg)
for row in b.trace.rows[::5]:
    print(f"iter {row.iteration:>3}  predicted {row.predicted_mean:.3f}  "
          f"true {row.true_quality_mean:.3f}  intelligibility {row.intelligibility_mean:.3f}")
print("kept iteration", b.trace.best_iteration)

# mean quality per test SNR level, on the held-out noise family
table = pipeline.run_eval(cfg, "test")
print("\t".join(["snr"] + list(table.systems)))
for i, label in enumerate(table.row_labels):
    print("\t".join([label] + [f"{v:.3f}" for v in table.quality[i]]))
