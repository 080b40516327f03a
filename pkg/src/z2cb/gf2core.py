"""Exact arithmetic on binary words and GF(2) generator matrices.

Words live in Z_2^n for n up to 256 and are stored as Python ints with
the convention that bit i is coordinate i (so the leftmost character of
the text format is bit 0). A GenMatrix holds the rows of a generator
matrix; enumeration, rank, shortening and puncturing all operate on the
raw row ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_LENGTH = 256


class CodeError(ValueError):
    """Base error for code-level contract violations."""

    code = "CODE_ERROR"


class EmptyCodeError(CodeError):
    """Raised when an operation needs at least one generator row."""

    code = "EMPTY_CODE"


class NotInjectiveError(CodeError):
    """Raised when an operation needs full row rank and the matrix lacks it."""

    code = "NOT_INJECTIVE"


@dataclass(frozen=True)
class Gf2Word:
    """A vector in Z_2^length, bits packed into a single int."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(f"word length {self.length} outside 1..{MAX_LENGTH}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond the stated length")

    @classmethod
    def from01(cls, text: str) -> Gf2Word:
        """Parse a '0'/'1' string; the leftmost character is coordinate 0."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(len(text), bits)

    def to01(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if self.bits >> i & 1)


def weight(w: Gf2Word) -> int:
    """Number of nonzero coordinates of w."""
    return w.bits.bit_count()


def add(a: Gf2Word, b: Gf2Word) -> Gf2Word:
    """Coordinatewise sum in Z_2; weight(add(a, b)) is the Hamming distance."""
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} != {b.length}")
    return Gf2Word(a.length, a.bits ^ b.bits)


@dataclass(frozen=True)
class GenMatrix:
    """k x n matrix over GF(2); rows as bit ints, coordinate i at bit i.

    Rows are expected to be linearly independent (the matrix generates a
    code of dimension k); operations that rely on injectivity check the
    rank and raise NotInjectiveError when it is deficient. k = 0 is the
    designated empty code.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_LENGTH:
            raise ValueError(f"code length {self.n} outside 1..{MAX_LENGTH}")
        for r in self.rows:
            if r < 0 or r >> self.n:
                raise ValueError("row has bits set beyond the code length")

    @property
    def k(self) -> int:
        return len(self.rows)

    def row_words(self) -> tuple[Gf2Word, ...]:
        return tuple(Gf2Word(self.n, r) for r in self.rows)


@dataclass(frozen=True)
class CodeSummary:
    """Enumeration result: parameters plus the full weight histogram."""

    n: int
    k: int
    min_distance: int | None
    weight_distribution: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "min_distance": self.min_distance,
            "weight_distribution": list(self.weight_distribution),
        }


def _reduce(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon basis, pivots on lowest set bits.

    Pivot bits are cleared from every other row, so the result depends
    only on the row space, not on how the rows were presented.
    """
    basis: list[int] = []
    for r in rows:
        v = r
        for b in basis:
            if v & (b & -b):
                v ^= b
        if v:
            low = v & -v
            basis = [b ^ v if b & low else b for b in basis]
            basis.append(v)
            basis.sort(key=lambda x: x & -x)
    return basis


def rank(m: GenMatrix) -> int:
    """GF(2) row rank."""
    return len(_reduce(m.rows))


def _require_injective(m: GenMatrix) -> None:
    if m.k == 0:
        raise EmptyCodeError("empty code (k = 0)")
    if rank(m) != m.k:
        raise NotInjectiveError(f"rows dependent: rank < k = {m.k}")


def iter_codewords(m: GenMatrix) -> Iterator[int]:
    """Yield all 2^k codewords exactly once, Gray-code order, zero first.

    One XOR per step; popcounts are the caller's business.
    """
    rows = m.rows
    word = 0
    yield word
    prev = 0
    for t in range(1, 1 << len(rows)):
        gray = t ^ (t >> 1)
        diff = gray ^ prev
        word ^= rows[(diff & -diff).bit_length() - 1]
        prev = gray
        yield word


def min_distance(m: GenMatrix) -> int:
    """Minimum weight over the 2^k - 1 nonzero codewords, by enumeration."""
    _require_injective(m)
    rows = m.rows
    best = m.n + 1
    word = 0
    prev = 0
    for t in range(1, 1 << len(rows)):
        gray = t ^ (t >> 1)
        diff = gray ^ prev
        word ^= rows[(diff & -diff).bit_length() - 1]
        prev = gray
        w = word.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    return best


def _min_weight_word(m: GenMatrix) -> tuple[int, int]:
    """(weight, word) of the first minimum-weight nonzero codeword in
    Gray order over the canonically reduced basis; row order of the
    input does not affect the answer."""
    basis = _reduce(m.rows)
    if not basis:
        raise EmptyCodeError("empty code (k = 0)")
    best_w, best = m.n + 1, 0
    word = 0
    prev = 0
    for t in range(1, 1 << len(basis)):
        gray = t ^ (t >> 1)
        diff = gray ^ prev
        word ^= basis[(diff & -diff).bit_length() - 1]
        prev = gray
        w = word.bit_count()
        if w < best_w:
            best_w, best = w, word
            if best_w == 1:
                break
    return best_w, best


def weight_distribution(m: GenMatrix) -> CodeSummary:
    """Full weight histogram A[0..n] with A[0] = 1 and sum 2^k."""
    _require_injective(m)
    hist = [0] * (m.n + 1)
    for w in iter_codewords(m):
        hist[w.bit_count()] += 1
    dmin = next(i for i in range(1, m.n + 1) if hist[i])
    return CodeSummary(m.n, m.k, dmin, tuple(hist))


def _delete_bit(value: int, coord: int) -> int:
    low = (1 << coord) - 1
    return (value & low) | ((value >> 1) & ~low)


def shorten(m: GenMatrix, coord: int) -> GenMatrix:
    """Keep codewords vanishing at coord, then delete that coordinate.

    Dimension drops to k - 1 when some row is nonzero at coord, else
    stays k. Every shortened codeword lifts back (insert a 0 at coord)
    to an original codeword of identical weight.
    """
    if not 0 <= coord < m.n:
        raise ValueError(f"coordinate {coord} outside 0..{m.n - 1}")
    if m.n == 1:
        raise ValueError("cannot drop the only coordinate")
    if m.k == 0:
        raise EmptyCodeError("empty code (k = 0)")
    bit = 1 << coord
    pivot_idx = next((i for i, r in enumerate(m.rows) if r & bit), None)
    kept = []
    for i, r in enumerate(m.rows):
        if i == pivot_idx:
            continue
        if r & bit:
            r ^= m.rows[pivot_idx]
        kept.append(_delete_bit(r, coord))
    return GenMatrix(m.n - 1, tuple(kept))


def puncture(m: GenMatrix, coord: int) -> GenMatrix:
    """Delete coordinate coord from every row and re-reduce to a basis."""
    if not 0 <= coord < m.n:
        raise ValueError(f"coordinate {coord} outside 0..{m.n - 1}")
    if m.n == 1:
        raise ValueError("cannot drop the only coordinate")
    dropped = (_delete_bit(r, coord) for r in m.rows)
    return GenMatrix(m.n - 1, tuple(_reduce(dropped)))


def systematic_form(m: GenMatrix) -> tuple[GenMatrix, tuple[int, ...]]:
    """Row-equivalent [I_k | A] plus the column permutation used.

    The permutation maps new positions to original coordinates
    (perm[j] = old index of the column now at position j); codeword
    weights are unchanged.
    """
    _require_injective(m)
    work = list(m.rows)
    pivots: list[int] = []
    for col in range(m.n):
        bit = 1 << col
        src = next((i for i in range(len(pivots), len(work)) if work[i] & bit), None)
        if src is None:
            continue
        work[len(pivots)], work[src] = work[src], work[len(pivots)]
        for i, r in enumerate(work):
            if i != len(pivots) and r & bit:
                work[i] = r ^ work[len(pivots)]
        pivots.append(col)
        if len(pivots) == m.k:
            break
    perm = pivots + [c for c in range(m.n) if c not in set(pivots)]
    out = []
    for r in work:
        nr = 0
        for j, old in enumerate(perm):
            if r >> old & 1:
                nr |= 1 << j
        out.append(nr)
    return GenMatrix(m.n, tuple(out)), tuple(perm)


def parse_matrix(text: str) -> GenMatrix:
    """Parse the interchange format: one '0'/'1' row per line.

    '#' starts a comment; blank lines are skipped; rows must agree in
    length. The leftmost character is coordinate 0.
    """
    rows: list[int] = []
    n: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise ValueError(f"line {lineno}: expected only '0'/'1', got {line!r}")
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise ValueError(f"line {lineno}: row length {len(line)} != {n}")
        rows.append(Gf2Word.from01(line).bits)
    if n is None:
        raise ValueError("no matrix rows found")
    return GenMatrix(n, tuple(rows))


def format_matrix(m: GenMatrix) -> str:
    """Serialize in the same '0'/'1' row-per-line format parse_matrix reads."""
    return "\n".join(Gf2Word(m.n, r).to01() for r in m.rows) + "\n"
