"""Shortening checks and the small-dimension witness claims.

The embedded 5 x 11 matrix is the counterexample showing the weight-4
element named in the hypothesis cannot always serve as half of the
concluding pair; its four documented properties are re-proved here by
enumeration on every call.
"""

from __future__ import annotations

from ..bounds import combined_upper_bound
from ..gf2core import (
    CodeError,
    GenMatrix,
    Gf2Word,
    min_distance,
    rank,
    shorten,
    weight_distribution,
)
from ..gf2core import _min_weight_word, _reduce, iter_codewords
from ..isotropy import Representation, find_weight4_pair
from .report import FAIL, PASS, VerificationReport, finish, start_clock
from .tables import load_tables, lookup


class OutOfRegimeError(CodeError):
    """Raised when parameters sit outside a check's proven regime."""

    code = "OUT_OF_REGIME"


_REMARK_ROWS = (15, 2035, 240, 816, 1360)


def remark_matrix() -> GenMatrix:
    """The embedded 5 x 11 counterexample matrix; first row is the
    designated weight-4 element."""
    return GenMatrix(11, _REMARK_ROWS)


def _in_span(basis: list[int], word: int) -> bool:
    v = word
    for b in basis:
        if v & (b & -b):
            v ^= b
    return v == 0


def _insert_zero_bit(value: int, coord: int) -> int:
    low = (1 << coord) - 1
    return (value & low) | ((value & ~low) << 1)


def _reference_upper(n: int, r: int) -> tuple[int, str]:
    """Known-optimal value for (n, r) from the tables, else our bound."""
    entry = lookup(load_tables(), n, r)
    if entry is not None:
        return entry.claimed_hi, f"table:{entry.table_id}"
    return combined_upper_bound(n, r).combined, "combined_upper_bound"


def verify_shortening(code: GenMatrix) -> VerificationReport:
    """Shorten at every support coordinate of a designated codeword.

    The designated word is the first minimum-weight codeword. For each
    of its support coordinates the shortened code must stay within the
    reference optimum for the smaller parameters, keep its minimum
    weight at or above the original, and have every codeword lift
    weight-preservingly back into the original code.
    """
    if code.k < 2:
        raise ValueError(f"need k >= 2, got k={code.k}")
    if not any(code.rows):
        raise ValueError("need some nonzero row")
    if rank(code) != code.k:
        raise ValueError("rows must be independent")
    t0 = start_clock()
    d_orig = min_distance(code)
    _, designated = _min_weight_word(code)
    basis = _reduce(code.rows)
    support = Gf2Word(code.n, designated).support()
    per_coord = []
    ok = True
    for c in support:
        sub = shorten(code, c)
        d_sub = min_distance(sub)
        ref, ref_source = _reference_upper(sub.n, sub.k)
        lifted = 0
        lift_ok = True
        for w in iter_codewords(sub):
            lift = _insert_zero_bit(w, c)
            if lift.bit_count() != w.bit_count() or not _in_span(basis, lift):
                lift_ok = False
                break
            lifted += 1
        coord_ok = d_sub <= ref and d_sub >= d_orig and lift_ok
        ok = ok and coord_ok
        per_coord.append(
            {
                "coord": c,
                "shortened": [sub.n, sub.k],
                "min_weight": d_sub,
                "reference_upper": ref,
                "reference_source": ref_source,
                "lifted_words": lifted,
                "ok": coord_ok,
            }
        )
    evidence = {
        "n": code.n,
        "k": code.k,
        "min_distance": d_orig,
        "designated": Gf2Word(code.n, designated).to01(),
        "coords": per_coord,
    }
    return finish("shortening", "enumeration", PASS if ok else FAIL, evidence, t0)


def verify_lemma14_part1(code: GenMatrix, iota1: Gf2Word) -> VerificationReport:
    """Find a second element of weight <= (n-1)/2 outside the span of the
    given one, by shortening at its first support coordinate."""
    k, n = code.k, code.n
    if not ((k >= 5 and n <= 12) or (k == 4 and n <= 7)):
        raise OutOfRegimeError(f"parameters [{n},{k}] outside the proven regime")
    if rank(code) != k:
        raise ValueError("rows must be independent")
    if iota1.length != n:
        raise ValueError("word length disagrees with the code")
    basis = _reduce(code.rows)
    if iota1.bits == 0 or not _in_span(basis, iota1.bits):
        raise ValueError("designated element must be a nonzero codeword")
    t0 = start_clock()
    c = iota1.support()[0]
    sub = shorten(code, c)
    w, word = _min_weight_word(sub)
    witness = _insert_zero_bit(word, c)
    threshold = (n - 1) // 2
    ref, ref_source = _reference_upper(sub.n, 4 if k >= 5 else 3)
    evidence = {
        "coord": c,
        "shortened": [sub.n, sub.k],
        "witness": Gf2Word(n, witness).to01(),
        "witness_weight": w,
        "threshold": threshold,
        "reference_upper": ref,
        "reference_source": ref_source,
        "distinct_from_iota1": witness not in (0, iota1.bits),
    }
    verdict = PASS if w <= threshold and witness not in (0, iota1.bits) else FAIL
    return finish("lemma14:part1", "enumeration", verdict, evidence, t0)


def verify_lemma14_part2(code: GenMatrix) -> VerificationReport:
    """Classify an [11,5] code holding a weight-4 word: (a) some nonzero
    word has weight <= 3, or (b) two weight-4 words overlap supports."""
    if (code.n, code.k) != (11, 5):
        raise ValueError(f"need an [11,5] code, got [{code.n},{code.k}]")
    if rank(code) != 5:
        raise ValueError("rows must be independent")
    summary = weight_distribution(code)
    if summary.weight_distribution[4] == 0:
        raise ValueError("code has no weight-4 codeword")
    t0 = start_clock()
    evidence: dict = {"weight_distribution": list(summary.weight_distribution)}
    if summary.min_distance <= 3:
        _, word = _min_weight_word(code)
        evidence["conclusion"] = "a"
        evidence["witness"] = Gf2Word(11, word).to01()
        return finish("lemma14:part2", "enumeration", PASS, evidence, t0)
    pair = find_weight4_pair(Representation.from_matrix(code))
    if pair is not None:
        evidence["conclusion"] = "b"
        evidence["witnesses"] = [pair[0].to01(), pair[1].to01()]
        evidence["xor_weight"] = (pair[0].bits ^ pair[1].bits).bit_count()
        return finish("lemma14:part2", "enumeration", PASS, evidence, t0)
    evidence["conclusion"] = None
    return finish("lemma14:part2", "enumeration", FAIL, evidence, t0)


def verify_remark_matrix() -> list[VerificationReport]:
    """Re-prove the four documented properties of the embedded matrix."""
    m = remark_matrix()
    iota1 = m.rows[0]
    reports = []

    t0 = start_clock()
    w1 = iota1.bit_count()
    reports.append(
        finish(
            "remark:iota1-weight",
            "enumeration",
            PASS if w1 == 4 else FAIL,
            {"weight": w1, "word": Gf2Word(11, iota1).to01()},
            t0,
        )
    )

    t0 = start_clock()
    d = min_distance(m)
    reports.append(
        finish(
            "remark:min-distance",
            "enumeration",
            PASS if d == 4 else FAIL,
            {"min_distance": d, "expected": 4},
            t0,
        )
    )

    t0 = start_clock()
    overlapping = [
        Gf2Word(11, w).to01()
        for w in iter_codewords(m)
        if w not in (0, iota1) and w.bit_count() == 4 and (w ^ iota1).bit_count() < 8
    ]
    reports.append(
        finish(
            "remark:no-overlapping-weight4-with-iota1",
            "enumeration",
            PASS if not overlapping else FAIL,
            {"violations": overlapping},
            t0,
        )
    )

    t0 = start_clock()
    pair = find_weight4_pair(Representation.from_matrix(m))
    evidence = {}
    if pair is not None:
        evidence = {
            "witnesses": [pair[0].to01(), pair[1].to01()],
            "xor_weight": (pair[0].bits ^ pair[1].bits).bit_count(),
        }
    reports.append(
        finish(
            "remark:weight4-pair-exists",
            "enumeration",
            PASS if pair is not None else FAIL,
            evidence,
            t0,
        )
    )
    return reports
