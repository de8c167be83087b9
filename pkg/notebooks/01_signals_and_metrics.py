"""
Signals, spectrograms and the builtin metrics
=============================================

A walk through the signal side of the package: a synthetic utterance,
noise mixed at a few SNRs, the STFT round trip, and how the quality and
intelligibility proxies respond.

Run with ``python3 notebooks/01_signals_and_metrics.py``.
"""

import numpy as np

from learnedloss import corpus, dsp, metrics

# one speech-like clean signal and one noise signal, both 2 s at 8 kHz
clean = corpus.synth_clean(seed=1, duration=2.0)
noise = corpus.synth_noise("babble_like", seed=2, duration=2.5)
print("clean peak", np.max(np.abs(clean.samples)))

# the desk front end: periodic Hann, 128-point frames, hop 64, 65 bins
cfg = dsp.DESK_STFT
spec = dsp.stft(clean, cfg)
print("spectrogram", spec.shape)

# magnitude + phase back to samples; edges lose a frame of support
mag, phase = dsp.magnitude_and_phase(spec)
back = dsp.reconstruct(mag, phase, cfg)
inner = slice(cfg.fft_size, len(back) - cfg.fft_size)
err = np.linalg.norm(back[inner] - clean.samples[inner]) / np.linalg.norm(clean.samples[inner])
print(f"interior round-trip error {err:.2e}")

# mixing hits the requested SNR exactly
for snr in (-5, 0, 5, 10, 20):
    noisy = dsp.mix_at_snr(clean, noise, snr, seed=0)
    resid = noisy.samples - clean.samples
    got = 10 * np.log10(np.sum(clean.samples ** 2) / np.sum(resid ** 2))
    q = metrics.proxy_quality(noisy, clean)
    i = metrics.proxy_intelligibility(noisy, clean)
    print(f"snr {snr:>3} dB  measured {got:7.3f}  quality {q:5.3f}  "
          f"normalized {metrics.normalize_score(q):5.3f}  intelligibility {i:5.3f}")

# the ceiling: a signal compared with itself
print("identical pair", metrics.proxy_quality(clean, clean))

# an external scorer plugs in through a command template
echo = metrics.MetricBackend.external("echo 3.1 {deg} {ref}")
print("external echo scorer", metrics.score_quality(echo, clean, clean))
