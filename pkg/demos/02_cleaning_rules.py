"""
Artifact screening on deliberately broken segments
==================================================

The cleaning pipeline drops or repairs segments in a fixed rule order:
missing samples, flatlines, too-short segments, rail-to-rail
saturation, then (after filtering) residual 60 Hz contamination and
spike excision. Here we start from plausible 1/f background activity,
break copies of it in specific ways, and watch each rule fire.
"""

import numpy as np

from cspwave import PreprocessConfig, Segment, run_pipeline

RATE = 512.0
US = 1_000_000


def background(n_channels, n_samples, rng, std=10.0):
    # 1/f-shaped noise: white noise in the frequency domain, weighted
    # down as (1 + f)^-1.5, normalized back to the requested std.
    freqs = np.fft.rfftfreq(n_samples, d=1.0 / RATE)
    shape = (1.0 + freqs) ** -1.5
    spec = rng.standard_normal((n_channels, freqs.size)) * shape
    spec = spec + 1j * rng.standard_normal((n_channels, freqs.size)) * shape
    x = np.fft.irfft(spec, n=n_samples, axis=1)
    x *= std / x.std(axis=1, keepdims=True)
    return x


def seg(data, start_s=0.0):
    return Segment(data, start_time_us=round(start_s * US),
                   sample_rate_hz=RATE)


rng = np.random.default_rng(42)
n = round(60 * RATE)  # one minute per fixture

# Seven fixtures: six broken, one left alone.
gap = background(2, n, rng)
gap[0, 5000:5100] = np.nan                   # dropout -> missing

flat = background(2, n, rng)
flat[1, 9000:9013] = 2.5                     # 13 samples > 25 ms flat

short = background(2, round(4 * RATE), rng)  # 4 s < the 5 s minimum

rail = background(2, n, rng)
rail[0, ::16] = 7.25                         # one value on 6.25 % of samples

hum = background(2, n, rng)
t = np.arange(n) / RATE
hum += 25.0 * np.sin(2 * np.pi * 63.0 * t)   # escapes the 60 Hz notch

# The spiky fixture is five minutes long: spike excision removes a fixed
# two-minute window, so the segment must be longer than that for any of
# it to survive.
spiky = background(2, round(300 * RATE), rng)
spiky[:, round(150 * RATE):] += 150.0        # electrode pop: a 150 uV step

clean = background(2, n, rng)

segments = [seg(gap), seg(flat), seg(short), seg(rail), seg(hum),
            seg(spiky), seg(clean)]
ids = ["gap", "flat", "short", "rail", "hum", "spiky", "clean"]

kept, log = run_pipeline(segments, cfg=PreprocessConfig(),
                         segment_ids=ids)

print(f"{'segment':<8} {'rule':<14} {'window (s)':<16} detail")
for e in log.entries:
    window = f"{e.start_us / US:.1f}-{e.end_us / US:.1f}"
    print(f"{e.segment_id:<8} {e.rule:<14} {window:<16} {e.detail}")

total_in = sum(s.duration_us for s in segments)
print(f"\nrejected {log.total_rejected_us / US:.1f} s "
      f"of {total_in / US:.1f} s")

# 'spiky' is not dropped outright: the two-minute window around the
# spike is excised and both flanks survive as separate segments, which
# is why more segments come out than went in clean. Survivors are
# filtered, resampled to the target rate, and stored as float32.
print(f"{len(kept)} clean segments:")
for s in kept:
    print(f"  start {s.start_time_us / US:7.1f} s, "
          f"{s.duration_us / US:5.1f} s at {s.sample_rate_hz:g} Hz, "
          f"dtype {s.data.dtype}")
