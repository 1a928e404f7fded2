"""Border-strip modification rules.

A label outside the stable range is rewritten by repeatedly removing a
border strip that starts at the first box of the last row.  Each removal
contributes to a cohomological shift; if some strip does not exist or
leaves a non-partition behind, the label is undefined (the corresponding
cohomology vanishes).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .partition_core import DomainError, Partition, partition


@dataclass(frozen=True)
class StripStep:
    before: Partition
    length: int
    cells: tuple[tuple[int, int], ...]
    columns: int


@dataclass(frozen=True)
class ModResult:
    """Outcome of a modification rule.

    ``defined`` is False when a strip fails to exist (shift is infinite);
    then ``tau`` and ``iota`` are None.  ``trace`` lists the strips removed.
    """

    defined: bool
    tau: object
    iota: int | None
    trace: tuple

    @property
    def sign(self) -> int:
        if not self.defined:
            return 0
        return -1 if self.iota % 2 else 1


def rim_walk(lam: Partition, length: int) -> list[tuple[int, int]] | None:
    """Cells (row, col), 1-based, of the rim path of ``length`` starting at the
    first box of the last row.  None if the path leaves the diagram."""
    if length <= 0:
        return []
    if not lam:
        return None
    r, c = len(lam), 1
    cells = [(r, c)]
    while len(cells) < length:
        if c + 1 <= lam[r - 1]:
            c += 1
        elif r > 1:
            r -= 1
        else:
            return None
        cells.append((r, c))
    return cells


def border_strip_remove(lam: Partition, length: int) -> tuple[Partition, int] | None:
    """Remove the border strip of ``length`` boxes starting at the bottom-left box.

    Returns (remaining partition, number of columns of the strip), or None if
    the strip does not exist or its removal does not leave a partition.
    ``length == 0`` returns ``(lam, 0)``.
    """
    lam = partition(lam)
    if length < 0:
        raise DomainError("negative strip length")
    if length == 0:
        return lam, 0
    cells = rim_walk(lam, length)
    if cells is None:
        return None
    r_end, c_end = cells[-1]
    if c_end != lam[r_end - 1]:
        return None
    rows = list(lam)
    for r, _c in cells:
        rows[r - 1] -= 1
    # the strip hugs the rim, so each touched row loses its rightmost boxes;
    # a walk ending at a row end always leaves a partition, check anyway
    rows = [x for x in rows]
    try:
        rest = partition(rows)
    except DomainError:
        return None
    return rest, len({c for _r, c in cells})


def _strip_cells(lam: Partition, length: int) -> tuple[tuple[int, int], ...]:
    return tuple(rim_walk(lam, length) or ())


def _modify(lam: Partition, stable_len: int, strip_len: Callable[[int], int], shift: Callable[[int], int]) -> ModResult:
    lam = partition(lam)
    iota = 0
    trace = []
    while len(lam) > stable_len:
        L = strip_len(len(lam))
        if L <= 0:
            return ModResult(False, None, None, tuple(trace))
        res = border_strip_remove(lam, L)
        if res is None:
            return ModResult(False, None, None, tuple(trace))
        rest, cols = res
        trace.append(StripStep(lam, L, _strip_cells(lam, L), cols))
        iota += shift(cols)
        lam = rest
    return ModResult(True, lam, iota, tuple(trace))


def mod_c(lam: Partition, k: int) -> ModResult:
    """Symplectic rule: strips of length 2l - 2k - 2, each shifting by its column count."""
    return _modify(lam, k, lambda l: 2 * l - 2 * k - 2, lambda c: c)


def mod_d(lam: Partition, k: int) -> ModResult:
    """Even orthogonal rule: strips of length 2l - 2k, shifting by columns minus one."""
    return _modify(lam, k, lambda l: 2 * l - 2 * k, lambda c: c - 1)


def mod_spin(lam: Partition, k: int) -> ModResult:
    """Odd orthogonal (spinor) rule: strips of length 2l - 2k - 1, shifting by columns."""
    return _modify(lam, k, lambda l: 2 * l - 2 * k - 1, lambda c: c)


def mod_orthogonal(lam: Partition, M: int) -> ModResult:
    """O(M) restriction rule for tensor labels: strips of length 2l - M, shifting by
    columns minus one, until at most M/2 rows remain.  Labels are taken up to the
    determinant twist; an output with first column c > M/2 stands for its associate."""
    return _modify(lam, M // 2, lambda l: 2 * l - M, lambda c: c - 1)


def mod_a(lam: Partition, lam2: Partition, k: int) -> ModResult:
    """General linear rule on a pair: strips of length l + l' - k - 1 from both
    partitions, shifting by c + c' - 1, until l + l' <= k."""
    a, b = partition(lam), partition(lam2)
    iota = 0
    trace = []
    while len(a) + len(b) > k:
        L = len(a) + len(b) - k - 1
        if L <= 0:
            return ModResult(False, None, None, tuple(trace))
        ra = border_strip_remove(a, L)
        rb = border_strip_remove(b, L)
        if ra is None or rb is None:
            return ModResult(False, None, None, tuple(trace))
        trace.append((StripStep(a, L, _strip_cells(a, L), ra[1]), StripStep(b, L, _strip_cells(b, L), rb[1])))
        iota += ra[1] + rb[1] - 1
        a, b = ra[0], rb[0]
    return ModResult(True, (a, b), iota, tuple(trace))
