"""
From seizure times to balanced window sets
==========================================

Labeling turns seizure annotations into two sets of disjoint time
intervals. Condition 1 is the hour ending five minutes before each
electrographic onset; condition 2 is everything at least four hours
away from any seizure. Sampling then draws fixed-length,
non-overlapping windows from each condition, split 80/20 into train
and test by time.
"""

from cspwave import (
    PreprocessConfig,
    SeizureAnnotation,
    SyntheticSpec,
    build_sampled_sets,
    generate_synthetic,
    label_intervals,
    run_pipeline,
)

US = 1_000_000
HOUR = 3600 * US


def fmt(iv):
    return ", ".join(f"[{a / HOUR:5.2f} h, {b / HOUR:5.2f} h)"
                     for a, b in iv.intervals)


# ---------------------------------------------------------------------
# Labeling arithmetic on a full day with one seizure at the 10 h mark.
# ---------------------------------------------------------------------
ann = [SeizureAnnotation(eec_us=10 * HOUR, end_us=10 * HOUR + 360 * US)]
spans = [(0, 24 * HOUR)]
preictal, interictal = label_intervals(ann, spans)

print("one seizure, onset 10.00 h, end 10.10 h, recorded 0-24 h")
print(f"  condition 1 (pre-seizure): {fmt(preictal)}")
print(f"  condition 2 (baseline):    {fmt(interictal)}")
print(f"  condition 2 total: {interictal.total_us / HOUR:.2f} h "
      "(the 4 h buffer on each side of the seizure is excluded)")

# A recording gap eats into whatever it overlaps — intervals only ever
# cover recorded time.
gappy = [(0, 9 * HOUR), (9 * HOUR + 1800 * US, 24 * HOUR)]
pre_g, _ = label_intervals(ann, gappy)
print(f"\nsame seizure, 30 min gap from 9.00 h: "
      f"condition 1 becomes {fmt(pre_g)}")

# ---------------------------------------------------------------------
# Sampling windows from an actual (synthetic) recording.
# ---------------------------------------------------------------------
spec = SyntheticSpec(
    n_channels=2,
    duration_s=24 * 3600.0,
    sample_rate_hz=256.0,
    rng_seed=11,
    seizures_s=((36000.0, 36360.0),),
    # record only a slice of each condition to keep the demo light
    recorded_spans_s=((32100.0, 35700.0), (72000.0, 75600.0)),
    max_segment_s=900.0,
)
manifest, segments, annotations = generate_synthetic(spec)
# at 256 Hz only the notches below Nyquist apply
clean, _ = run_pipeline(
    segments, cfg=PreprocessConfig(line_freqs_hz=(60.0, 120.0)))
preictal, interictal = label_intervals(
    annotations, [(round(a * 1e6), round(b * 1e6))
                  for a, b in spec.recorded_spans_s])

L = 512  # window length in samples (2 s at the 256 Hz recording rate...
# ...but cleaning resamples to 512 Hz, so this is 1 s of clean signal)
sets = build_sampled_sets(preictal, interictal, clean,
                          n_train=(40, 40), n_test=(10, 10),
                          L=L, rng_seed=7)

print(f"\nsampled {len(sets.train_1)}/{len(sets.train_2)} train and "
      f"{len(sets.test_1)}/{len(sets.test_2)} test windows, "
      f"shortfalls: {len(sets.shortfalls)}")

# Windows never overlap and test windows come from the last fifth of
# each condition's time, so train and test are temporally disjoint.
starts = sorted(w.start_time_us for w in sets.train_1 + sets.test_1)
step = L / 512.0 * US
assert all(b - a >= step for a, b in zip(starts, starts[1:]))
print("condition-1 windows pairwise disjoint: yes")

last_train = max(w.start_time_us for w in sets.train_1)
first_test = min(w.start_time_us for w in sets.test_1)
print(f"condition-1 train ends {last_train / HOUR:.3f} h <= "
      f"test begins {first_test / HOUR:.3f} h")

# Same seed, same windows — different seed, different windows.
again = build_sampled_sets(preictal, interictal, clean,
                           n_train=(40, 40), n_test=(10, 10),
                           L=L, rng_seed=7)
other = build_sampled_sets(preictal, interictal, clean,
                           n_train=(40, 40), n_test=(10, 10),
                           L=L, rng_seed=8)
same = [w.start_time_us for w in sets.train_1] == \
       [w.start_time_us for w in again.train_1]
diff = [w.start_time_us for w in sets.train_1] != \
       [w.start_time_us for w in other.train_1]
print(f"seed 7 reproduces exactly: {same}; seed 8 differs: {diff}")

window = sets.train_1[0]
print(f"\neach window carries its data: {window.data.shape[0]} channels x "
      f"{window.data.shape[1]} samples, condition {window.condition}, "
      f"from segment {window.segment_id!r}")
