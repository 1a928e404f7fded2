"""Graded characters of the coordinate rings and of the modules built from a twist.

Three families are supported:

* ``symplectic``: E of dim n, V symplectic of dim 2(n+d);
* ``orthogonal``: V orthogonal of dim 2(n+d)+dprime;
* ``complexes``: pairs of maps E -> V -> F with dim V = n+m+d split as a+b.

Module characters are indexed by internal degree; generators sit in degree
nk (complexes: nk + m*l).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .partition_core import (
    DomainError,
    Partition,
    RepLabel,
    RepSum,
    contains,
    gl_label,
    pad,
    partition,
    partitions_of,
)

CASES = ("symplectic", "orthogonal", "complexes")
CASE_ALIASES = {"sympl": "symplectic", "symplectic": "symplectic", "sp": "symplectic",
                "orth": "orthogonal", "orthogonal": "orthogonal", "o": "orthogonal",
                "complexes": "complexes", "gl": "complexes", "A": "complexes"}


@dataclass(frozen=True)
class CaseConfig:
    """Parameters of one family.

    For ``complexes`` the split dim V = a + b is required to satisfy a >= n,
    b >= m; then nu fits in k^(a-n) and nuprime in l^(b-m).  When ``a`` is
    omitted it defaults to n + d - len(nuprime).
    """

    case: str
    n: int
    d: int = 0
    k: int = 0
    nu: Partition = ()
    dprime: int = 0
    m: int = 0
    l: int = 0
    nuprime: Partition = ()
    a: int | None = None

    def __post_init__(self):
        case = CASE_ALIASES.get(self.case)
        if case is None:
            raise DomainError(f"unknown case {self.case!r}")
        object.__setattr__(self, "case", case)
        object.__setattr__(self, "nu", partition(self.nu))
        object.__setattr__(self, "nuprime", partition(self.nuprime))
        if min(self.n, self.d, self.k, self.m, self.l) < 0:
            raise DomainError("dimensions and twists must be nonnegative")
        if case == "complexes":
            a = self.a if self.a is not None else self.n + self.d - len(self.nuprime)
            object.__setattr__(self, "a", a)
            if a < self.n or self.b < self.m:
                raise DomainError(f"need a >= n and b >= m with a + b = n + m + d (got a={a}, b={self.b})")
            if not contains((self.k,) * (a - self.n), self.nu):
                raise DomainError(f"nu={self.nu} must fit in k^(a-n) = {self.k}^{a - self.n}")
            if not contains((self.l,) * (self.b - self.m), self.nuprime):
                raise DomainError(f"nuprime={self.nuprime} must fit in l^(b-m) = {self.l}^{self.b - self.m}")
        else:
            if self.dprime not in (0, 1) or (case == "symplectic" and self.dprime):
                raise DomainError("dprime must be 0 or 1, and 0 in the symplectic case")
            if not contains((self.k,) * self.d, self.nu):
                raise DomainError(f"nu={self.nu} must fit in k^d = {self.k}^{self.d}")

    @property
    def b(self) -> int:
        return self.n + self.m + self.d - self.a

    @property
    def dimV(self) -> int:
        if self.case == "symplectic":
            return 2 * (self.n + self.d)
        if self.case == "orthogonal":
            return 2 * (self.n + self.d) + self.dprime
        return self.n + self.m + self.d

    @property
    def g0(self) -> int:
        """Internal degree of the generators of the module."""
        return self.n * self.k + (self.m * self.l if self.case == "complexes" else 0)

    @property
    def num_vars(self) -> int:
        """Dimension of the degree-one part of the polynomial ring."""
        if self.case == "complexes":
            return (self.n + self.m) * self.dimV
        return self.n * self.dimV

    @property
    def num_quadrics(self) -> int:
        if self.case == "symplectic":
            return comb(self.n, 2)
        if self.case == "orthogonal":
            return comb(self.n + 1, 2)
        return self.n * self.m

    @property
    def twist_complement(self) -> tuple[int, ...]:
        """The Levi weight carried by the middle factor: (k - nu_d, ..., k - nu_1) or,
        for complexes, (k - nu_{a-n}, ..., k - nu_1, nu'_1 - l, ..., nu'_{b-m} - l)."""
        if self.case == "complexes":
            left = tuple(self.k - x for x in reversed(pad(self.nu, self.a - self.n)))
            right = tuple(x - self.l for x in pad(self.nuprime, self.b - self.m))
            return left + right
        return tuple(self.k - x for x in reversed(pad(self.nu, self.d)))

    def v_label(self, weight) -> RepLabel:
        if self.case == "symplectic":
            return RepLabel("Sp", self.dimV, partition(weight))
        if self.case == "orthogonal":
            return RepLabel("O", self.dimV, partition(weight))
        return RepLabel("GL", self.dimV, tuple(weight))

    def params(self) -> dict:
        out = {"n": self.n, "dimV": self.dimV, "d": self.d, "k": self.k, "nu": list(self.nu)}
        if self.case == "orthogonal":
            out["dprime"] = self.dprime
        if self.case == "complexes":
            out.update(m=self.m, l=self.l, nuprime=list(self.nuprime), a=self.a, b=self.b)
        return out


@dataclass
class GradedCharacter:
    """Representation-valued pieces keyed by internal degree, up to ``max_deg``."""

    pieces: dict[int, RepSum] = field(default_factory=dict)
    g0: int = 0
    max_deg: int = 0

    def piece(self, deg: int) -> RepSum:
        return self.pieces.get(deg, RepSum())

    def dims(self) -> list[int]:
        return [self.piece(j).dim() for j in range(self.max_deg + 1)]


def _check_complexes(cfg: CaseConfig):
    if cfg.case != "complexes":
        raise DomainError("complexes configuration expected")


def coord_ring_character(cfg: CaseConfig, max_deg: int) -> GradedCharacter:
    """Character of the quotient ring B by degree."""
    out = GradedCharacter(g0=0, max_deg=max_deg)
    n = cfg.n
    for j in range(max_deg + 1):
        piece = RepSum()
        if cfg.case == "complexes":
            N, m = cfg.dimV, cfg.m
            for s in range(j + 1):
                for lam in partitions_of(s, n):
                    for lam2 in partitions_of(j - s, m):
                        w = pad(lam, N - len(lam2)) + tuple(-x for x in reversed(lam2))
                        piece.add((gl_label(lam, n), RepLabel("GL", N, w), gl_label(lam2, m)))
        else:
            for lam in partitions_of(j, n):
                piece.add((gl_label(lam, n), cfg.v_label(lam)))
        out.pieces[j] = piece
    return out


def module_character(cfg: CaseConfig, max_deg: int) -> GradedCharacter:
    """Character of the twisted module, generated in degree ``cfg.g0``.

    Keys are (E label, V label) or, for complexes, (E label, V* label, F* label).
    """
    out = GradedCharacter(g0=cfg.g0, max_deg=max_deg)
    n, k = cfg.n, cfg.k
    mid = cfg.twist_complement
    for deg in range(cfg.g0, max_deg + 1):
        j = deg - cfg.g0
        piece = RepSum()
        if cfg.case == "complexes":
            m, l = cfg.m, cfg.l
            for s in range(j + 1):
                for lam in partitions_of(s, n):
                    e = tuple(k + x for x in pad(lam, n))
                    for mu in partitions_of(j - s, m):
                        f = tuple(l + x for x in pad(mu, m))
                        w = e + mid + tuple(-l - x for x in reversed(pad(mu, m)))
                        piece.add((RepLabel("GL", n, e), RepLabel("GL", cfg.dimV, w), RepLabel("GL", m, f)))
        else:
            for lam in partitions_of(j, n):
                e = tuple(k + x for x in pad(lam, n))
                piece.add((RepLabel("GL", n, e), cfg.v_label(e + mid)))
        out.pieces[deg] = piece
    return out


def poly_det_module_character(n: int, f_dim: int, k: int, nu: Partition, max_deg: int) -> GradedCharacter:
    """Character of the twisted module over the polynomial ring of n x f_dim matrices
    (f_dim = n + d): S_{(k^n)+lam}(E) x S_{((k^n)+lam, k-nu_d, ..., k-nu_1)}(F)."""
    d = f_dim - n
    nu = partition(nu)
    if d < 0 or not contains((k,) * d, nu):
        raise DomainError("need f_dim >= n and nu inside k^d")
    mid = tuple(k - x for x in reversed(pad(nu, d)))
    out = GradedCharacter(g0=n * k, max_deg=max_deg)
    for deg in range(n * k, max_deg + 1):
        piece = RepSum()
        for lam in partitions_of(deg - n * k, n):
            e = tuple(k + x for x in pad(lam, n))
            piece.add((RepLabel("GL", n, e), RepLabel("GL", f_dim, e + mid)))
        out.pieces[deg] = piece
    return out


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------


def _series_product(a: list[int], b: list[int], max_deg: int) -> list[int]:
    out = [0] * (max_deg + 1)
    for i, x in enumerate(a[: max_deg + 1]):
        if x:
            for j, y in enumerate(b[: max_deg + 1 - i]):
                out[i + j] += x * y
    return out


def _power_series(num_exp: int, sign: int, step: int, den_exp: int, den_sign: int, den_step: int, max_deg: int) -> list[int]:
    """(1 + sign*t^step)^num_exp / (1 - den_sign*t^den_step)^den_exp, truncated."""
    num = [0] * (max_deg + 1)
    for i in range(num_exp + 1):
        if i * step <= max_deg:
            num[i * step] += comb(num_exp, i) * sign ** i
    den = [0] * (max_deg + 1)
    for i in range(max_deg // den_step + 1):
        den[i * den_step] += comb(den_exp + i - 1, i) * den_sign ** i if den_exp else (1 if i == 0 else 0)
    return _series_product(num, den, max_deg)


def hilbert_series_B(cfg: CaseConfig, max_deg: int) -> list[int]:
    """Coefficients of (1 - t^2)^c / (1 - t)^N up to t^max_deg."""
    return _power_series(cfg.num_quadrics, -1, 2, cfg.num_vars, 1, 1, max_deg)


def hilbert_series_koszul_dual(cfg: CaseConfig, max_deg: int) -> list[int]:
    """Coefficients of (1 + t)^N / (1 - t^2)^c up to t^max_deg."""
    return _power_series(cfg.num_vars, 1, 1, cfg.num_quadrics, 1, 2, max_deg)


def series_times(a: list[int], b: list[int], max_deg: int) -> list[int]:
    return _series_product(a, b, max_deg)
