"""Partitions, Littlewood-Richardson coefficients, GL tensor products and Weyl dimensions.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty partition.  Everything expensive is memoized
with ``functools.lru_cache``, which is safe for concurrent readers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import Iterable, Iterator, Union

Partition = tuple[int, ...]
IntegerWeight = tuple[int, ...]


class DomainError(ValueError):
    """An input that is outside the domain of an operation."""


class CancellationError(ArithmeticError):
    """A virtual character that was expected to be effective has negative terms."""

    def __init__(self, message: str, virtual: dict | None = None):
        super().__init__(message)
        self.virtual = virtual or {}


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and drop trailing zeros."""
    p = [int(x) for x in parts]
    if any(x < 0 for x in p):
        raise DomainError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise DomainError(f"parts of {p} are not weakly decreasing")
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def is_partition(seq: Iterable[int]) -> bool:
    try:
        partition(seq)
    except DomainError:
        return False
    return True


def parse_partition(text: str) -> Partition:
    """Parse ``"6,5,5,3"``; the empty string (or ``"0"``) is the empty partition."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return partition(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def parse_weight(text: str) -> IntegerWeight:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse weight {text!r}") from exc


def format_weight(w: Iterable[int], length: int | None = None) -> str:
    w = list(w)
    if length is not None:
        w = w + [0] * (length - len(w))
    return ",".join(str(x) for x in w)


def size(p: Iterable[int]) -> int:
    return sum(p)


def pad(p: Iterable[int], length: int) -> IntegerWeight:
    p = tuple(p)
    if len(p) > length:
        if any(p[length:]):
            raise DomainError(f"{p} has more than {length} nonzero parts")
        return p[:length]
    return p + (0,) * (length - len(p))


def transpose(p: Partition) -> Partition:
    p = partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def rect_complement(p: Partition, b: int, a: int) -> Partition:
    """Complement of ``p`` inside the ``b`` x ``a`` box (b rows of length a), rotated."""
    p = partition(p)
    if len(p) > b or (p and p[0] > a):
        raise DomainError(f"{p} does not fit in a {b}x{a} box")
    return partition(a - x for x in reversed(pad(p, b)))


def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest: int, cap: int, slots: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            if first * slots < rest:
                break
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(n, max_part, max_len)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting in ``rows`` x ``cols``, by increasing size."""
    for n in range(rows * cols + 1):
        yield from partitions_of(n, rows, cols)


def partitions_up_to(n: int, max_len: int | None = None) -> Iterator[Partition]:
    for s in range(n + 1):
        yield from partitions_of(s, max_len)


# ---------------------------------------------------------------------------
# Littlewood-Richardson
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _lr_product(lam: Partition, mu: Partition, max_rows: int) -> tuple[tuple[Partition, int], ...]:
    """Coefficients of s_lam * s_mu, keeping shapes with at most max_rows rows.

    Fills the new boxes row by row with LR tableaux of content mu; x[j] is the
    number of boxes labelled j in the current row.
    """
    out: Counter = Counter()
    nrows = min(len(lam) + len(mu), max_rows)
    if len(lam) > max_rows:
        return ()
    base = pad(lam, nrows)
    nlab = len(mu)

    def fill_row(r, prev_x, content, shape):
        if r == nrows or (r >= len(lam) and all(c == m for c, m in zip(content, mu))):
            if all(c == m for c, m in zip(content, mu)):
                out[partition(shape + list(base[r:]))] += 1
            return
        top = min(r + 1, nlab)
        x = [0] * nlab
        above = base[r - 1] if r > 0 else None

        def choose(j, used):
            if j == top:
                fill_row(r + 1, tuple(x), tuple(c + xi for c, xi in zip(content, x)), shape + [base[r] + used])
                return
            limit = mu[j] - content[j]
            if j > 0:
                limit = min(limit, content[j - 1] - content[j])
            if above is not None:
                # boxes labelled <= j in row r must sit under boxes of lam or labels < j
                limit = min(limit, above + sum(prev_x[:j]) - base[r] - used)
            for v in range(max(limit, 0), -1, -1):
                x[j] = v
                choose(j + 1, used + v)
            x[j] = 0

        choose(0, 0)

    fill_row(0, (0,) * nlab, (0,) * nlab, [])
    return tuple(sorted(out.items()))


def lr_product(lam: Partition, mu: Partition, max_rows: int | None = None) -> dict[Partition, int]:
    """Expand s_lam * s_mu; shapes with more than ``max_rows`` rows are dropped."""
    lam, mu = partition(lam), partition(mu)
    if len(mu) > len(lam) or (len(mu) == len(lam) and mu > lam):
        lam, mu = mu, lam
    if max_rows is None:
        max_rows = len(lam) + len(mu)
    return dict(_lr_product(lam, mu, max_rows))


@lru_cache(maxsize=None)
def _skew_lr(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    out: Counter = Counter()
    nrows = len(outer)
    base = pad(inner, nrows)
    nlab = nrows
    lengths = [outer[r] - base[r] for r in range(nrows)]

    def fill_row(r, prev_x, content):
        if r == nrows:
            out[partition(content)] += 1
            return
        top = min(r + 1, nlab)
        x = [0] * nlab

        def choose(j, used):
            if j == top:
                if used == lengths[r]:
                    fill_row(r + 1, tuple(x), tuple(c + xi for c, xi in zip(content, x)))
                return
            limit = lengths[r] - used
            if j > 0:
                limit = min(limit, content[j - 1] - content[j])
            if r > 0:
                limit = min(limit, base[r - 1] + sum(prev_x[:j]) - base[r] - used)
            for v in range(max(limit, 0), -1, -1):
                x[j] = v
                choose(j + 1, used + v)
            x[j] = 0

        choose(0, 0)

    fill_row(0, (0,) * nlab, (0,) * nlab)
    return tuple(sorted(out.items()))


def skew_lr(outer: Partition, inner: Partition) -> dict[Partition, int]:
    """Expand the skew Schur function s_{outer/inner} in Schur functions."""
    outer, inner = partition(outer), partition(inner)
    if not contains(outer, inner):
        return {}
    return dict(_skew_lr(outer, inner))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of s_nu in s_lam * s_mu."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if size(lam) + size(mu) != size(nu) or not contains(nu, lam):
        return 0
    return skew_lr(nu, lam).get(mu, 0)


# ---------------------------------------------------------------------------
# Representation labels
# ---------------------------------------------------------------------------

GROUPS = ("GL", "Sp", "O", "SO", "GLsuper")


def associated(p: Partition, M: int) -> Partition:
    """The O(M) associate: replace the first column length c by M - c."""
    col = transpose(partition(p))
    return transpose(partition((M - (col[0] if col else 0),) + col[1:]))


@dataclass(frozen=True, order=True)
class RepLabel:
    """An irreducible representation: group name, defining dimension, highest weight.

    ``dim`` is N for GL(N), 2m for Sp(2m), M for O(M) and SO(M), and a pair
    (n, m) for the super group GL(n|m).  Sp and O weights are partitions; a GL
    weight is any weakly decreasing integer vector of length N.
    """

    group: str
    dim: Union[int, tuple]
    weight: tuple

    def __post_init__(self):
        if self.group not in GROUPS:
            raise DomainError(f"unknown group {self.group}")
        w = tuple(self.weight)
        if self.group == "GL":
            if len(w) != self.dim or any(w[i] < w[i + 1] for i in range(len(w) - 1)):
                raise DomainError(f"{w} is not a dominant GL({self.dim}) weight")
        elif self.group == "Sp":
            w = partition(w)
            if self.dim % 2 or len(w) > self.dim // 2:
                raise DomainError(f"{w} is not an Sp({self.dim}) label")
        elif self.group == "O":
            w = partition(w)
            col = transpose(w)
            if col and col[0] + (col[1] if len(col) > 1 else 0) > self.dim:
                raise DomainError(f"{w} is not an O({self.dim}) label")
        elif self.group == "SO":
            m = self.dim // 2
            if len(w) != m:
                raise DomainError(f"SO({self.dim}) weights have {m} coordinates")
        elif self.group == "GLsuper":
            w = partition(w)
            n, m = self.dim
            if len(w) > n and w[n] > m:
                raise DomainError(f"{w} is not a GL({n}|{m}) hook label")
        object.__setattr__(self, "weight", w)

    def text(self) -> str:
        return format_weight(self.weight)

    def __str__(self):
        name = {"GL": f"GL({self.dim})", "Sp": f"Sp({self.dim})", "O": f"O({self.dim})",
                "SO": f"SO({self.dim})", "GLsuper": "GL({}|{})".format(*self.dim) if isinstance(self.dim, tuple) else "GLsuper"}[self.group]
        return f"{name}[{self.text()}]"


Key = tuple  # tuple of RepLabel, one per tensor factor


@dataclass
class RepSum:
    """A formal nonnegative sum of (tensor products of) irreducible representations."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in dict(self.terms).items():
            if not isinstance(k, tuple):
                k = (k,)
            if v < 0:
                raise CancellationError(f"negative multiplicity {v} for {k}", dict(self.terms))
            if v:
                clean[k] = clean.get(k, 0) + v
        self.terms = clean

    def add(self, key, mult: int = 1) -> None:
        if not isinstance(key, tuple):
            key = (key,)
        if mult < 0:
            raise CancellationError(f"negative multiplicity {mult} for {key}")
        if mult:
            self.terms[key] = self.terms.get(key, 0) + mult

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, RepSum) and self.terms == other.terms

    def __add__(self, other: "RepSum") -> "RepSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return RepSum(out)

    def items(self):
        return sorted(self.terms.items())

    def multiplicity(self, key) -> int:
        if not isinstance(key, tuple):
            key = (key,)
        return self.terms.get(key, 0)

    def dim(self) -> int:
        return sum(v * prod(dim_classical(lab) for lab in k) for k, v in self.terms.items())

    def __repr__(self):
        body = " + ".join(f"{v}*" * (v != 1) + "(" + " x ".join(map(str, k)) + ")" for k, v in self.items())
        return f"RepSum({body or '0'})"


def gl_label(weight: Iterable[int], N: int) -> RepLabel:
    return RepLabel("GL", N, pad(tuple(weight), N) if all(x >= 0 for x in weight) else tuple(weight))


# ---------------------------------------------------------------------------
# GL products and Cauchy decompositions
# ---------------------------------------------------------------------------


def tensor_gl(lam: Partition, mu: Partition, N: int) -> RepSum:
    """Decompose S_lam(C^N) x S_mu(C^N)."""
    out = RepSum()
    for nu, c in lr_product(lam, mu, N).items():
        out.add(gl_label(nu, N), c)
    return out


def tensor_gl_weights(alpha: IntegerWeight, beta: IntegerWeight) -> dict[IntegerWeight, int]:
    """Decompose a product of two rational GL(N) irreducibles given by dominant weights."""
    N = len(alpha)
    if len(beta) != N:
        raise DomainError("weights of different lengths")
    if N == 0:
        return {(): 1}
    sa, sb = alpha[-1], beta[-1]
    pa = partition(x - sa for x in alpha)
    pb = partition(x - sb for x in beta)
    return {tuple(x + sa + sb for x in pad(nu, N)): c for nu, c in lr_product(pa, pb, N).items()}


def cauchy_sym(n: int, dimV: int, dimW: int) -> RepSum:
    """Sym^n(V x W) = sum over |lam| = n of S_lam V x S_lam W."""
    out = RepSum()
    for lam in partitions_of(n, min(dimV, dimW)):
        out.add((gl_label(lam, dimV), gl_label(lam, dimW)))
    return out


def cauchy_ext(n: int, dimV: int, dimW: int) -> RepSum:
    """Exterior power n of V x W = sum of S_lam V x S_{lam'} W."""
    out = RepSum()
    for lam in partitions_of(n, dimV, dimW):
        out.add((gl_label(lam, dimV), gl_label(transpose(lam), dimW)))
    return out


# ---------------------------------------------------------------------------
# Dimensions
# ---------------------------------------------------------------------------


def dim_gl(weight: Iterable[int], N: int) -> int:
    w = list(weight)
    if len(w) > N:
        if any(w[N:]):
            return 0
        w = w[:N]
    w = w + [0] * (N - len(w))
    num = prod(w[i] - w[j] + j - i for i in range(N) for j in range(i + 1, N))
    den = prod(j - i for i in range(N) for j in range(i + 1, N))
    return num // den


def _dim_sp(w: Partition, m: int) -> int:
    v = [x + m - i for i, x in enumerate(pad(w, m))]
    r = [m - i for i in range(m)]
    num = prod((v[i] - v[j]) * (v[i] + v[j]) for i in range(m) for j in range(i + 1, m)) * prod(v)
    den = prod((r[i] - r[j]) * (r[i] + r[j]) for i in range(m) for j in range(i + 1, m)) * prod(r)
    return num // den


def _dim_so(w: IntegerWeight, M: int) -> int:
    m = M // 2
    w = pad(w, m) if all(x >= 0 for x in w) else tuple(w)
    if M % 2:
        # doubled coordinates keep everything integral
        v = [2 * x + 2 * (m - i) - 1 for i, x in enumerate(w)]
        r = [2 * (m - i) - 1 for i in range(m)]
        num = prod(v[i] ** 2 - v[j] ** 2 for i in range(m) for j in range(i + 1, m)) * prod(v)
        den = prod(r[i] ** 2 - r[j] ** 2 for i in range(m) for j in range(i + 1, m)) * prod(r)
    else:
        v = [x + m - 1 - i for i, x in enumerate(w)]
        r = [m - 1 - i for i in range(m)]
        num = prod(v[i] ** 2 - v[j] ** 2 for i in range(m) for j in range(i + 1, m))
        den = prod(r[i] ** 2 - r[j] ** 2 for i in range(m) for j in range(i + 1, m))
    return num // den


def dim_o(w: Partition, M: int) -> int:
    w = partition(w)
    col = transpose(w)
    if col and 2 * col[0] > M:
        w = associated(w, M)
    if len(w) > M // 2:
        return 0
    d = _dim_so(w, M)
    if M % 2 == 0 and M > 0 and len(w) == M // 2:
        d *= 2
    return d


def dim_super(w: Partition, n: int, m: int) -> int:
    """Dimension of the Schur functor S_w applied to a super space of dimension (n|m)."""
    w = partition(w)
    if len(w) > n and w[n] > m:
        return 0
    total = 0
    # S_w(E + F) = sum over mu of S_mu(E) x S_{w/mu}(F) with odd F: transpose the F part
    for inner in partitions_in_box(n, w[0] if w else 0):
        if not contains(w, inner):
            continue
        for c, mult in skew_lr(w, inner).items():
            total += mult * dim_gl(inner, n) * dim_gl(transpose(c), m)
    return total


def dim_classical(label: RepLabel) -> int:
    g = label.group
    if g == "GL":
        return dim_gl(label.weight, label.dim)
    if g == "Sp":
        return _dim_sp(label.weight, label.dim // 2)
    if g == "O":
        return dim_o(label.weight, label.dim)
    if g == "SO":
        return _dim_so(label.weight, label.dim)
    if g == "GLsuper":
        return dim_super(label.weight, *label.dim)
    raise DomainError(g)
