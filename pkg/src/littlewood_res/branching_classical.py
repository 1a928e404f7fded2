"""Branching from GL to Sp/O, Newell-Littlewood products, and Schur functors of extensions.

Stable-range formulas are computed with Littlewood-Richardson coefficients;
labels outside the stable range are folded back with the border-strip rules
(sign (-1)^shift) in a signed intermediate sum, which must collapse to a
nonnegative result.  Orthogonal labels are taken up to the determinant
character, so a label and its associate are the same key.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .modification_rules import mod_c, mod_orthogonal
from .partition_core import (
    CancellationError,
    DomainError,
    Partition,
    RepLabel,
    RepSum,
    associated,
    contains,
    gl_label,
    lr_product,
    partition,
    partitions_in_box,
    skew_lr,
    transpose,
)


class VirtualRepSum(Counter):
    """Signed sum of labels; only an intermediate."""

    def collapse(self) -> dict:
        bad = {k: v for k, v in self.items() if v < 0}
        if bad:
            raise CancellationError(f"virtual character did not collapse: {bad}", dict(self))
        return {k: v for k, v in self.items() if v}


def _check_type(kind: str) -> str:
    kind = {"sp": "Sp", "Sp": "Sp", "C": "Sp", "o": "O", "O": "O"}.get(kind)
    if kind is None:
        raise DomainError("type must be sp or o")
    return kind


def _fold(kind: str, lam: Partition, M: int) -> tuple[Partition | None, int]:
    """Bring a universal label into range for Sp(M) / O(M); returns (label, sign)."""
    res = mod_c(lam, M // 2) if kind == "Sp" else mod_orthogonal(lam, M)
    if not res.defined:
        return None, 0
    return res.tau, res.sign


def _even_shapes(kind: str, beta: Partition):
    # partitions inside beta whose columns (Sp) or rows (O) all have even length
    for delta in partitions_in_box(len(beta), beta[0] if beta else 0):
        if not contains(beta, delta):
            continue
        if kind == "Sp":
            if all(x % 2 == 0 for x in transpose(delta)):
                yield delta
        elif all(x % 2 == 0 for x in delta):
            yield delta


@lru_cache(maxsize=None)
def _restrict_stable(kind: str, beta: Partition) -> tuple:
    out: Counter = Counter()
    for delta in _even_shapes(kind, beta):
        for mu, c in skew_lr(beta, delta).items():
            out[mu] += c
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def restrict(kind: str, beta: Partition, M: int) -> tuple:
    """Restriction of S_beta(C^M) to Sp(M) / O(M) as sorted (label, mult) pairs."""
    if len(beta) > M:
        return ()
    acc = VirtualRepSum()
    for mu, c in _restrict_stable(kind, beta):
        lab, sign = _fold(kind, mu, M)
        if sign:
            acc[lab] += sign * c
    return tuple(sorted(acc.collapse().items()))


@lru_cache(maxsize=None)
def _nl_stable(mu: Partition, nu: Partition) -> tuple:
    out: Counter = Counter()
    for alpha in partitions_in_box(min(len(mu), len(nu)), min(mu[0], nu[0]) if mu and nu else 0):
        if not (contains(mu, alpha) and contains(nu, alpha)):
            continue
        left = skew_lr(mu, alpha)
        right = skew_lr(nu, alpha)
        for b, cb in left.items():
            for g, cg in right.items():
                for lam, c in lr_product(b, g).items():
                    out[lam] += cb * cg * c
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def nl_product(kind: str, mu: Partition, nu: Partition, M: int) -> tuple:
    """Tensor product of two Sp(M) / O(M) irreducibles as sorted (label, mult) pairs."""
    if mu > nu:
        mu, nu = nu, mu
    acc = VirtualRepSum()
    for lam, c in _nl_stable(mu, nu):
        lab, sign = _fold(kind, lam, M)
        if sign:
            acc[lab] += sign * c
    return tuple(sorted(acc.collapse().items()))


def _o_canonical(lab: Partition, M: int) -> Partition:
    col = transpose(lab)
    if col and 2 * col[0] > M:
        return associated(lab, M)
    return lab


def _label(kind: str, lab: Partition, M: int) -> RepLabel:
    if kind == "O":
        lab = _o_canonical(lab, M)
    return RepLabel(kind, M, lab)


def _group_dim(kind: str, rank: int) -> int:
    # Sp is given by its rank m (Sp(2m)); O by the dimension of its defining space
    return 2 * rank if kind == "Sp" else rank


def littlewood_restrict(kind: str, beta: Partition, rank: int) -> RepSum:
    """Restrict S_beta of the defining space to Sp(2*rank) (kind "sp") or O(rank) (kind "o")."""
    kind = _check_type(kind)
    beta = partition(beta)
    M = _group_dim(kind, rank)
    if len(beta) > M:
        raise DomainError(f"S_{beta} vanishes on a space of dimension {M}")
    out = RepSum()
    for lab, c in restrict(kind, beta, M):
        out.add(_label(kind, lab, M), c)
    return out


def newell_littlewood(kind: str, mu: Partition, nu: Partition, rank: int) -> RepSum:
    kind = _check_type(kind)
    M = _group_dim(kind, rank)
    mu, nu = partition(mu), partition(nu)
    # validates admissibility
    RepLabel(kind, M, mu)
    RepLabel(kind, M, nu)
    if kind == "O":
        mu, nu = _o_canonical(mu, M), _o_canonical(nu, M)
    out = RepSum()
    for lab, c in nl_product(kind, mu, nu, M):
        out.add(_label(kind, lab, M), c)
    return out


@lru_cache(maxsize=None)
def extension_pieces(lam: Partition, r_sub: int, r_quot: int) -> tuple:
    """Associated graded of S_lam(X) for 0 -> S -> X -> Q -> 0: ((alpha, beta), c) pairs."""
    out = []
    lam = partition(lam)
    for alpha in partitions_in_box(r_sub, lam[0] if lam else 0):
        if not contains(lam, alpha):
            continue
        for beta, c in skew_lr(lam, alpha).items():
            if len(beta) <= r_quot:
                out.append(((alpha, beta), c))
    return tuple(out)


def schur_of_extension(lam: Partition, r_sub: int, r_quot: int) -> RepSum:
    out = RepSum()
    for (alpha, beta), c in extension_pieces(partition(lam), r_sub, r_quot):
        out.add((gl_label(alpha, r_sub), gl_label(beta, r_quot)), c)
    return out
