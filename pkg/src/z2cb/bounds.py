"""Distance bounds for binary codes, exact where it matters.

Packing computations use arbitrary-precision integers throughout; the
entropy form is the only floating-point surface and carries an explicit
slack constant for callers that compare against decimal thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf2core import CodeError

# Margin below which floating comparisons are treated as undecided.
FLOAT_SLACK = 1e-9


class EpsilonZeroError(CodeError):
    """Entropy-form bound requested with d < 3, where epsilon = 0."""

    code = "EPSILON_ZERO"


@dataclass(frozen=True)
class EntropyParams:
    """Parameters feeding the entropy-form bound for an (m, d) pair."""

    m: int
    d: int
    t: int
    epsilon: float
    H_eps: float


@dataclass(frozen=True)
class BoundReport:
    """Per-bound upper limits on d for an (n, k) pair."""

    n: int
    k: int
    per_bound: dict[str, int]
    combined: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "per_bound": dict(self.per_bound),
            "combined": self.combined,
        }


def entropy(eps: float) -> float:
    """Binary entropy H(eps) in bits, with H(0) = H(1) = 0."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"entropy argument {eps} outside [0, 1]")
    if eps in (0.0, 1.0):
        return 0.0
    return -eps * math.log2(eps) - (1.0 - eps) * math.log2(1.0 - eps)


def ball_volume(m: int, t: int) -> int:
    """Exact number of words within Hamming distance t of a fixed word."""
    if t < 0 or t > m:
        raise ValueError(f"radius {t} outside 0..{m}")
    return sum(math.comb(m, i) for i in range(t + 1))


def sphere_packing_max_k(n: int, d: int) -> int:
    """Largest k such that 2^k disjoint radius-t balls fit in 2^n words.

    t = floor((d - 1) / 2); everything is exact integer arithmetic.
    """
    if d < 1 or d > n:
        raise ValueError(f"distance {d} outside 1..{n}")
    quota = (1 << n) // ball_volume(n, (d - 1) // 2)
    return quota.bit_length() - 1


def entropy_params(m: int, d: int) -> EntropyParams:
    if d < 3:
        raise EpsilonZeroError(f"d = {d} < 3 gives epsilon = 0")
    if d > m:
        raise ValueError(f"distance {d} exceeds length {m}")
    t = (d - 1) // 2
    eps = t / m
    return EntropyParams(m, d, t, eps, entropy(eps))


def entropy_bound_rhs(m: int, d: int) -> float:
    """Value of (1 - H(eps)) m + log2(2m) / 2 with eps = floor((d-1)/2) / m.

    Any code of length m and minimum distance d has dimension strictly
    below this number. Requires d >= 3 so that eps > 0.
    """
    p = entropy_params(m, d)
    return (1.0 - p.H_eps) * m + 0.5 * math.log2(2 * m)


def griesmer_max_d(n: int, k: int) -> int:
    """Largest d with sum_{i<k} ceil(d / 2^i) <= n."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k} n={n}")
    for d in range(n, 0, -1):
        if sum((d + (1 << i) - 1) >> i for i in range(k)) <= n:
            return d
    return 1


def _packs(n: int, k: int, d: int) -> bool:
    """Sphere-packing feasibility of an [n, k, d] code.

    For even d the code must also pack at (n - 1, d - 1): dropping a
    coordinate inside a minimum-weight support gives an [n-1, k, d-1]
    code, so infeasibility there rules d out.
    """
    if k > sphere_packing_max_k(n, d):
        return False
    if d % 2 == 0 and d > 1:
        return k <= sphere_packing_max_k(n - 1, d - 1)
    return True


def _plotkin_max_d(n: int, k: int) -> int:
    """Largest d consistent with the averaging bound in its d > n/2 range."""
    size = 1 << k
    for d in range(n, 0, -1):
        if 2 * d <= n:
            return d
        if size <= 2 * (d // (2 * d - n)):
            return d
    return 1


def combined_upper_bound(n: int, k: int) -> BoundReport:
    """Evaluate every implemented bound at (n, k) and take the minimum."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k} n={n}")
    sphere = next(d for d in range(n, 0, -1) if _packs(n, k, d))
    per = {
        "sphere_packing": sphere,
        "singleton": n - k + 1,
        "plotkin": _plotkin_max_d(n, k),
        "griesmer": griesmer_max_d(n, k),
    }
    return BoundReport(n, k, per, min(per.values()))
