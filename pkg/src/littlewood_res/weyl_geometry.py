"""Borel-Weil-Bott via the rho-shifted Weyl group action.

Each ``bott_*`` function takes a weight of a homogeneous line (or Levi
irreducible) bundle and returns the unique degree where cohomology lives
together with the dominant weight there, or reports vanishing.  The degree
is the number of positive roots pairing negatively with the shifted weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .partition_core import DomainError, IntegerWeight, Partition, RepLabel, RepSum, gl_label, partition, transpose


@dataclass(frozen=True)
class BottOutcome:
    vanishes: bool
    degree: int | None = None
    dominant: RepLabel | None = None

    @property
    def sign(self) -> int:
        if self.vanishes:
            return 0
        return -1 if self.degree % 2 else 1


VANISHES = BottOutcome(True)


def _inversions(v) -> int:
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] < v[j])


def _negative_sums(v) -> int:
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] + v[j] < 0)


def bott_gl(alpha: IntegerWeight) -> BottOutcome:
    """Cohomology of the GL(N) line bundle/Levi irreducible with weight ``alpha``."""
    N = len(alpha)
    v = [a + N - 1 - i for i, a in enumerate(alpha)]
    if len(set(v)) < N:
        return VANISHES
    s = sorted(v, reverse=True)
    dom = tuple(x - (N - 1 - i) for i, x in enumerate(s))
    return BottOutcome(False, _inversions(v), RepLabel("GL", N, dom))


def bott_type_c(a: IntegerWeight) -> BottOutcome:
    """Type C_m with rho = (m, ..., 1); the result is an Sp(2m) label."""
    m = len(a)
    v = [x + m - i for i, x in enumerate(a)]
    absv = [abs(x) for x in v]
    if 0 in absv or len(set(absv)) < m:
        return VANISHES
    deg = _inversions(v) + _negative_sums(v) + sum(1 for x in v if x < 0)
    s = sorted(absv, reverse=True)
    dom = tuple(x - (m - i) for i, x in enumerate(s))
    return BottOutcome(False, deg, RepLabel("Sp", 2 * m, partition(dom)))


def bott_type_bd(a: IntegerWeight, dprime: int) -> BottOutcome:
    """Type B_m (dprime=1, SO(2m+1)) or D_m (dprime=0, SO(2m)).

    Coordinates are doubled so rho stays integral.  The dominant label is an
    SO weight; in type D its last coordinate may be negative.
    """
    if dprime not in (0, 1):
        raise DomainError("dprime must be 0 or 1")
    m = len(a)
    if dprime:
        rho2 = [2 * (m - i) - 1 for i in range(m)]
    else:
        rho2 = [2 * (m - 1 - i) for i in range(m)]
    v = [2 * x + r for x, r in zip(a, rho2)]
    absv = [abs(x) for x in v]
    if len(set(absv)) < m:
        return VANISHES
    deg = _inversions(v) + _negative_sums(v)
    s = sorted(absv, reverse=True)
    if dprime:
        deg += sum(1 for x in v if x < 0)
    elif 0 not in absv and sum(1 for x in v if x < 0) % 2:
        s[-1] = -s[-1]
    dom = tuple((x - r) // 2 for x, r in zip(s, rho2))
    return BottOutcome(False, deg, RepLabel("SO", 2 * m + dprime, dom))


def so_to_o_label(label: RepLabel) -> Partition:
    """Forget the sign of the last coordinate of an SO weight."""
    return partition(abs(x) for x in label.weight)


def kostant_up(lam: Partition, n: int, m: int, i: int) -> RepSum:
    """Homology of the odd abelian subalgebra E x F* of gl(E|F) with coefficients
    in S_lam(E|F), in degree ``i``, as GL(F) x GL(E) representations."""
    lam = partition(lam)
    if len(lam) > n and lam[n] > m:
        raise DomainError(f"S_{lam}(E|F) vanishes for dim E = {n}, dim F = {m}")
    if i < 0:
        return RepSum()
    lt = transpose(lam)
    span = m + i + len(lt) + 1
    s = [(lt[p] if p < len(lt) else 0) - (p + 1) for p in range(span)]
    out = RepSum()
    for I in combinations(range(m + i), m):
        if sum(I[j] - j for j in range(m)) != i:
            continue
        beta = tuple(s[I[j]] + j + 1 for j in range(m))
        rest = [p for p in range(span) if p not in I]
        gamma = [s[p] + m + j + 1 for j, p in enumerate(rest)]
        gamma = partition(gamma)
        if gamma and gamma[0] > n:
            continue
        out.add((RepLabel("GL", m, beta), gl_label(transpose(gamma), n)))
    return out
