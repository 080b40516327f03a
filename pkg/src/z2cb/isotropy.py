"""Analyzer for rank-r elementary abelian 2-group actions on n coordinates.

An action is stored as an r x n generator matrix: row i is the sign
pattern of the i-th chosen generator across the n coordinates. Every
group element maps to the XOR of the rows it selects, so questions
about fixed-subspace codimension reduce to Hamming weights of
codewords. All reported quantities are invariant under changing the
generating set (row operations).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .gf2core import CodeError, GenMatrix, Gf2Word, rank
from .gf2core import _min_weight_word, _reduce


class NotEffectiveError(CodeError):
    """A generator acts trivially: the matrix rows are dependent."""

    code = "NOT_EFFECTIVE"


@dataclass(frozen=True)
class Representation:
    """Group action given by generator images; effective means injective."""

    matrix: GenMatrix
    effective: bool

    def __post_init__(self) -> None:
        actual = rank(self.matrix) == self.matrix.k
        if self.effective != actual:
            raise ValueError("effective flag disagrees with the matrix rank")

    @classmethod
    def from_matrix(cls, matrix: GenMatrix) -> "Representation":
        return cls(matrix, rank(matrix) == matrix.k)


@dataclass(frozen=True)
class RepAnalysis:
    """Summary of an effective action.

    min_codim: smallest fixed-subspace codimension over nontrivial
    elements, i.e. the minimum distance of the row code. witness
    realizes it. distinct_characters counts distinct nonzero columns;
    character_multiplicities pairs each column pattern (one character
    per row, row 0 first) with its multiplicity. minimal_form is true
    when the distinct columns number exactly r and are independent,
    the block-diagonal shape.
    """

    min_codim: int
    witness: Gf2Word
    distinct_characters: int
    character_multiplicities: tuple[tuple[str, int], ...]
    minimal_form: bool

    def as_dict(self) -> dict:
        return {
            "min_codim": self.min_codim,
            "witness": self.witness.to01(),
            "distinct_characters": self.distinct_characters,
            "character_multiplicities": [list(p) for p in self.character_multiplicities],
            "minimal_form": self.minimal_form,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def _require_effective(rep: Representation) -> None:
    if not rep.effective:
        raise NotEffectiveError("representation is not effective")


def _columns(m: GenMatrix) -> list[int]:
    """Column patterns as ints, bit i = row i."""
    cols = []
    for j in range(m.n):
        pat = 0
        for i, row in enumerate(m.rows):
            pat |= (row >> j & 1) << i
        cols.append(pat)
    return cols


def analyze(rep: Representation) -> RepAnalysis:
    """Full summary of an effective action; raises NOT_EFFECTIVE otherwise."""
    _require_effective(rep)
    m = rep.matrix
    r = m.k
    counts: dict[int, int] = {}
    for pat in _columns(m):
        if pat:
            counts[pat] = counts.get(pat, 0) + 1
    mults = tuple(
        (format(pat, f"0{r}b")[::-1], cnt)
        for pat, cnt in sorted(counts.items(), key=lambda it: (-it[1], it[0]))
    )
    distinct = len(counts)
    # block form: exactly r characters and they are independent
    col_matrix = GenMatrix(r, tuple(sorted(counts))) if counts else None
    minimal = distinct == r and col_matrix is not None and rank(col_matrix) == r
    w, word = _min_weight_word(m)
    return RepAnalysis(
        min_codim=w,
        witness=Gf2Word(m.n, word),
        distinct_characters=distinct,
        character_multiplicities=mults,
        minimal_form=minimal,
    )


def find_low_weight_involution(rep: Representation, threshold: int) -> Gf2Word | None:
    """Minimum-codimension element if that codimension is <= threshold.

    Ties between minimum-weight words break to the first in Gray order
    over the canonically reduced basis, so the answer does not depend
    on how the generating set was presented.
    """
    _require_effective(rep)
    w, word = _min_weight_word(rep.matrix)
    if w <= threshold:
        return Gf2Word(rep.matrix.n, word)
    return None


def find_weight4_pair(rep: Representation) -> tuple[Gf2Word, Gf2Word] | None:
    """First pair of distinct weight-4 elements with overlapping supports.

    Overlap means their XOR has weight below 8. Pairs are scanned in
    Gray enumeration order over the canonically reduced basis.
    """
    _require_effective(rep)
    m = rep.matrix
    basis = _reduce(m.rows)
    quads: list[int] = []
    word = 0
    prev = 0
    for t in range(1, 1 << len(basis)):
        gray = t ^ (t >> 1)
        word ^= basis[((gray ^ prev) & -(gray ^ prev)).bit_length() - 1]
        prev = gray
        if word.bit_count() == 4:
            quads.append(word)
    for i in range(len(quads)):
        for j in range(i + 1, len(quads)):
            if (quads[i] ^ quads[j]).bit_count() < 8:
                return Gf2Word(m.n, quads[i]), Gf2Word(m.n, quads[j])
    return None
