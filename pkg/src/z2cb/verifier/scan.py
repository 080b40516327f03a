"""Bulk classification of systematic [11,5] generator matrices.

Every [11,5] code is column-permutation-equivalent to a systematic
matrix [I_5 | A] with A a 5 x 6 bit block, and every quantity the
classification touches is a Hamming weight, hence permutation
invariant; scanning the 2^30 tails therefore covers all codes. Each
tail is classified as: skipped (no weight-4 codeword, hypothesis
absent), conclusion (a) (some nonzero weight <= 3), conclusion (b)
(two weight-4 words with overlapping supports), or FAIL (neither
conclusion available, which would refute the claim).

Work is split into fixed-size chunks; chunk results depend only on the
chunk index and seed, so aggregate counts are invariant under worker
count and scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .report import FAIL, PASS, VerificationReport, finish, start_clock

CHUNK = 1 << 16
_SPACE = 1 << 30

_POP6 = np.array([bin(i).count("1") for i in range(64)], dtype=np.uint8)
_MSG_W = np.array([bin(m).count("1") for m in range(32)], dtype=np.uint8)

_COVERAGE_NOTE = (
    "systematic tails [I_5|A] cover all [11,5] codes up to column"
    " permutation; all classified quantities are weight-only and"
    " permutation invariant"
)


def _classify_chunk(masks: np.ndarray) -> np.ndarray:
    """Counts [skipped, pass_a, pass_b, fail] over 30-bit tails."""
    rows = [((masks >> (6 * i)) & 63).astype(np.int64) for i in range(5)]
    count = len(masks)
    weights = np.empty((32, count), dtype=np.uint8)
    parity_block = np.zeros(count, dtype=np.int64)
    prev = 0
    for t in range(1, 32):
        gray = t ^ (t >> 1)
        parity_block = parity_block ^ rows[((gray ^ prev) & -(gray ^ prev)).bit_length() - 1]
        prev = gray
        weights[gray] = _MSG_W[gray] + _POP6[parity_block]
    nonzero = weights[1:]
    minw = nonzero.min(axis=0)
    is4 = nonzero == 4
    cnt4 = is4.sum(axis=0, dtype=np.uint8)
    msgs = np.arange(1, 32, dtype=np.int64)[:, None]
    pair_msg = np.bitwise_xor.reduce(np.where(is4, msgs, 0), axis=0)
    pair_weight = weights[np.maximum(pair_msg, 1), np.arange(count)]
    skipped = cnt4 == 0
    pass_a = (~skipped) & (minw <= 3)
    has_pair = (cnt4 >= 3) | ((cnt4 == 2) & (pair_weight < 8))
    min4 = minw == 4  # implies cnt4 >= 1
    pass_b = min4 & has_pair
    fail = min4 & ~has_pair
    return np.array(
        [int(skipped.sum()), int(pass_a.sum()), int(pass_b.sum()), int(fail.sum())],
        dtype=np.int64,
    )


def _run_chunk(spec: tuple[str, int, int, int, int]) -> np.ndarray:
    mode, seed, idx, start, length = spec
    if mode == "exhaustive":
        masks = np.arange(start, start + length, dtype=np.int64)
    else:
        rng = np.random.default_rng(np.random.SeedSequence((seed, idx)))
        masks = rng.integers(0, _SPACE, size=length, dtype=np.int64)
    return _classify_chunk(masks)


def scan_lemma14_part2(
    mode: str = "sample",
    count: int = 1_000_000,
    seed: int = 1,
    workers: int = 1,
) -> VerificationReport:
    """Scan systematic [11,5] tails; PASS iff no tail is unclassifiable.

    mode "sample" draws `count` seeded tails; "exhaustive" walks all
    2^30. Counts are deterministic for fixed (mode, count, seed)
    regardless of `workers`.
    """
    if mode not in ("sample", "exhaustive"):
        raise ValueError(f"mode must be sample or exhaustive, got {mode!r}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    t0 = start_clock()
    total = _SPACE if mode == "exhaustive" else count
    if total < 1:
        raise ValueError("nothing to scan")
    specs = []
    for idx in range(0, (total + CHUNK - 1) // CHUNK):
        start = idx * CHUNK
        specs.append((mode, seed, idx, start, min(CHUNK, total - start)))
    agg = np.zeros(4, dtype=np.int64)
    if workers == 1:
        for spec in specs:
            agg += _run_chunk(spec)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_chunk, specs, chunksize=max(1, len(specs) // (workers * 8))):
                agg += part
    skipped, pass_a, pass_b, fails = (int(x) for x in agg)
    evidence = {
        "mode": mode,
        "count": total,
        "seed": seed if mode == "sample" else None,
        "workers": workers,
        "chunk_size": CHUNK,
        "skipped_no_weight4": skipped,
        "conclusion_a": pass_a,
        "conclusion_b": pass_b,
        "fail": fails,
        "coverage": _COVERAGE_NOTE,
    }
    regime = "exhaustive" if mode == "exhaustive" else f"sample(count={total},seed={seed})"
    return finish("lemma14:part2:scan", regime, PASS if fails == 0 else FAIL, evidence, t0)
