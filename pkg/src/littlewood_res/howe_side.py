"""The Koszul-dual side: characters of the Howe-dual modules N.

N is the isotypic component of an oscillator module under the auxiliary
group acting on U (Sp(2k), O(2k)/Pin(2k), or GL(k+l)).  Its graded pieces,
read by E-degree (and F-degree for complexes), are the terms of the linear
B-resolution after dualizing.  Three independent pieces of data live here:

* the graded character of N (isotypic extraction, one route per family);
* the homology over the odd nilradical u-bar, predicted by the border-strip rules;
* closed formulas for the generators and first syzygies of N over U(g).

Labels: (E*-label, V-label) for the isotropic families and
(E*-label, V-label, F-label) for complexes.  E*- and F-labels already contain
the determinant twists (k^n) and (l^m).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .branching_classical import VirtualRepSum, nl_product, restrict
from .littlewood_characters import CaseConfig
from .modification_rules import mod_a, mod_c, mod_d, mod_spin
from .partition_core import (
    DomainError,
    Partition,
    RepLabel,
    RepSum,
    lr_product,
    pad,
    partition,
    partitions_of,
    partitions_up_to,
    rect_complement,
    size,
    skew_lr,
    tensor_gl_weights,
    transpose,
)
from .weyl_geometry import bott_type_bd


@dataclass
class NCharacter:
    """Graded character of N, with the generators placed in degree 0.

    ``base`` is the E-degree (plus F-degree for complexes) of the generators
    before renormalization.
    """

    cfg: CaseConfig
    lam: Partition
    lam2: Partition = ()
    pieces: dict = field(default_factory=dict)
    max_deg: int = 0
    base: int = 0

    def piece(self, i: int) -> RepSum:
        return self.pieces.get(i, RepSum())

    def dims(self) -> list[int]:
        return [self.piece(i).dim() for i in range(self.max_deg + 1)]


# ---------------------------------------------------------------------------
# Admissibility and the (nu, mu) split of the transpose
# ---------------------------------------------------------------------------


def _lagrangian_dim(cfg: CaseConfig) -> int:
    return cfg.n + cfg.d


def check_admissible(cfg: CaseConfig, lam: Partition, lam2: Partition = ()) -> None:
    lam, lam2 = partition(lam), partition(lam2)
    n, k = cfg.n, cfg.k
    if cfg.case == "complexes":
        K = cfg.k + cfg.l
        if len(lam) + len(lam2) > K:
            raise DomainError(f"need l(lam) + l(lam') <= k + l = {K}")
        if len(lam) > cfg.m and lam[cfg.m] > cfg.b:
            raise DomainError(f"need lam_(m+1) <= b = {cfg.b}")
        if len(lam2) > n and lam2[n] > cfg.a:
            raise DomainError(f"need lam'_(n+1) <= a = {cfg.a}")
        return
    if lam2:
        raise DomainError("a second partition only makes sense for complexes")
    N = _lagrangian_dim(cfg)
    if len(lam) > k:
        raise DomainError(f"need l(lam) <= k = {k}")
    if len(lam) > n and lam[n] > N:
        raise DomainError(f"need lam_(n+1) <= n + d = {N}")


def _split_columns(lam: Partition, first: int) -> tuple[tuple[int, ...], Partition]:
    """(first ``first`` columns padded, remaining columns) of ``lam``."""
    col = transpose(lam)
    return pad(col[:first], first), partition(col[first:])


def generator_degree(cfg: CaseConfig, lam: Partition, lam2: Partition = ()) -> int:
    """E-degree (plus F-degree) of the generators of N."""
    if cfg.case == "complexes":
        _, mu = _split_columns(partition(lam), cfg.b)
        _, mu2 = _split_columns(partition(lam2), cfg.a)
        return size(mu) + size(mu2)
    _, mu = _split_columns(partition(lam), _lagrangian_dim(cfg))
    return size(mu)


# ---------------------------------------------------------------------------
# Closed formulas for H_0 and H_1 over U(g)
# ---------------------------------------------------------------------------


def _twisted(p: Partition, k: int, N: int) -> RepLabel | None:
    """(k^N) + p as a GL(N) label, or None when p has too many rows."""
    if len(p) > N:
        return None
    return RepLabel("GL", N, tuple(k + x for x in pad(p, N)))


@dataclass(frozen=True)
class Presentation:
    """Generators and first syzygies of N over U(g).

    ``syzygies`` lists (summand, relative degree) pairs; complexes have two.
    """

    h0: RepSum
    syzygies: tuple

    @property
    def h1(self) -> RepSum:
        out = RepSum()
        for reps, _deg in self.syzygies:
            out = out + reps
        return out

    @property
    def relation_degrees(self) -> tuple[int, ...]:
        return tuple(deg for _reps, deg in self.syzygies)

    @property
    def linear(self) -> bool:
        return all(deg == 1 for deg in self.relation_degrees)


def g_homology_h0_h1(cfg: CaseConfig, lam: Partition, lam2: Partition = ()) -> tuple[RepSum, RepSum]:
    p = presentation(cfg, lam, lam2)
    return p.h0, p.h1


def _single(key) -> RepSum:
    out = RepSum()
    if all(part is not None for part in key):
        out.add(key)
    return out


def presentation(cfg: CaseConfig, lam: Partition, lam2: Partition = ()) -> Presentation:
    lam, lam2 = partition(lam), partition(lam2)
    check_admissible(cfg, lam, lam2)
    if cfg.case == "complexes":
        return _presentation_complexes(cfg, lam, lam2)
    n, k = cfg.n, cfg.k
    N = _lagrangian_dim(cfg)
    nu, mu = _split_columns(lam, N)
    mu1 = mu[0] if mu else 0
    h0 = _single((_twisted(transpose(mu), k, n), cfg.v_label(rect_complement(partition(nu), N, k))))
    e1 = _twisted(transpose(partition((1 + nu[-1],) + mu[1:])), k, n)
    v1 = (k - mu1 + 1,) + tuple(k - x for x in reversed(nu[:-1]))
    h1 = _single((e1, cfg.v_label(v1))) if e1 is not None else RepSum()
    return Presentation(h0, ((h1, nu[-1] - mu1 + 1),))


def _presentation_complexes(cfg: CaseConfig, lam: Partition, lam2: Partition) -> Presentation:
    n, m, k, l, a, b = cfg.n, cfg.m, cfg.k, cfg.l, cfg.a, cfg.b
    N = cfg.dimV
    nu, mu = _split_columns(lam, b)
    nu2, mu2 = _split_columns(lam2, a)
    mu1 = mu[0] if mu else 0
    mu21 = mu2[0] if mu2 else 0

    def v_label(top, bottom):
        # top: the a leading entries; bottom: (l^b) minus nu, entered negated from the end
        return RepLabel("GL", N, tuple(top) + tuple(-x for x in reversed(bottom)))

    top = tuple(k - x for x in reversed(nu2))
    bottom = tuple(l - x for x in reversed(nu))
    e0, f0 = _twisted(transpose(mu2), k, n), _twisted(transpose(mu), l, m)
    h0 = _single((e0, v_label(top, bottom), f0))
    syz = []
    if a:
        e1 = _twisted(transpose(partition((nu2[-1] + 1,) + mu2[1:])), k, n)
        top1 = (k - mu21 + 1,) + tuple(k - x for x in reversed(nu2[:-1]))
        syz.append((_single((e1, v_label(top1, bottom), f0)), nu2[-1] - mu21 + 1))
    if b:
        f1 = _twisted(transpose(partition((nu[-1] + 1,) + mu[1:])), l, m)
        bottom1 = (l - mu1 + 1,) + tuple(l - x for x in reversed(nu[:-1]))
        syz.append((_single((e0, v_label(top, bottom1), f1)), nu[-1] - mu1 + 1))
    return Presentation(h0, tuple(syz))


# ---------------------------------------------------------------------------
# Homology over the odd nilradical via border strips
# ---------------------------------------------------------------------------


def _hook_ok(alpha: Partition, rows: int, cols: int) -> bool:
    return len(alpha) <= rows or alpha[rows] <= cols


def _u_rule(cfg: CaseConfig):
    if cfg.case == "symplectic":
        return mod_c, 2 * (cfg.k + 1)
    if cfg.dprime:
        return mod_spin, 2 * (cfg.k + 1)
    return mod_d, None


def u_homology_character(cfg: CaseConfig, lam: Partition, i: int, lam2: Partition = ()) -> RepSum:
    """Homology in degree ``i`` of N over u-bar, as super Schur functors.

    Isotropic families: keys are one GL(n|n+d) label alpha, standing for
    S_alpha(E*|F) (x) (det E*)^k (x) (det F*)^k.  Complexes: keys are
    (GL(n|a) label alpha', GL(m|b) label alpha), standing for
    S_alpha'((E|V^a)*) (x) S_alpha(F|V^b) twisted by the fixed line.
    """
    lam, lam2 = partition(lam), partition(lam2)
    check_admissible(cfg, lam, lam2)
    if i < 0:
        raise DomainError("homological degree must be nonnegative")
    out = RepSum()
    if cfg.case == "complexes":
        K = cfg.k + cfg.l
        budget = size(lam) + size(lam2) + 2 * i * (K + 1)
        for tot in range(size(lam) + size(lam2), budget + 1):
            for s in range(tot + 1):
                for al in partitions_of(s):
                    if not _hook_ok(al, cfg.m, cfg.b):
                        continue
                    for al2 in partitions_of(tot - s):
                        if not _hook_ok(al2, cfg.n, cfg.a):
                            continue
                        r = mod_a(al, al2, K)
                        if r.defined and r.iota == i and r.tau == (lam, lam2):
                            out.add((RepLabel("GLsuper", (cfg.n, cfg.a), al2),
                                     RepLabel("GLsuper", (cfg.m, cfg.b), al)))
        return out
    N = _lagrangian_dim(cfg)
    rule, per = _u_rule(cfg)
    budget = size(lam) + (per * i if per else 2 * i + 2 * cfg.k * (i + 1))
    for tot in range(size(lam), budget + 1):
        for al in partitions_of(tot):
            if not _hook_ok(al, cfg.n, N):
                continue
            r = rule(al, cfg.k)
            if r.defined and r.iota == i and r.tau == lam:
                out.add(RepLabel("GLsuper", (cfg.n, N), al))
    return out


# ---------------------------------------------------------------------------
# Graded characters of N
# ---------------------------------------------------------------------------


def n_module_character(cfg: CaseConfig, lam: Partition, max_deg: int, lam2: Partition = ()) -> NCharacter:
    """Graded character of N in relative degrees 0..max_deg."""
    lam, lam2 = partition(lam), partition(lam2)
    check_admissible(cfg, lam, lam2)
    if max_deg < 0:
        raise DomainError("max_deg must be nonnegative")
    base = generator_degree(cfg, lam, lam2)
    out = NCharacter(cfg, lam, lam2, {}, max_deg, base)
    for i in range(max_deg + 1):
        if cfg.case == "symplectic":
            piece = _piece_symplectic(cfg, lam, base + i)
        elif cfg.case == "orthogonal":
            piece = _piece_orthogonal(cfg, lam, base + i)
        else:
            piece = _piece_complexes(cfg, lam, lam2, base + i)
        out.pieces[i] = piece
    return out


def _piece_symplectic(cfg: CaseConfig, lam: Partition, deg: int) -> RepSum:
    # Sym(U x E*) branched to Sp(U), times the skew dual pair decomposition
    # of the exterior algebra on U x F, then read off the [lam]-isotypic part.
    n, k = cfg.n, cfg.k
    N = _lagrangian_dim(cfg)
    piece = RepSum()
    for gam in partitions_of(deg, min(n, 2 * k)):
        acc: Counter = Counter()
        for kappa, c in restrict("Sp", gam, 2 * k):
            for rho, c2 in nl_product("Sp", kappa, lam, 2 * k):
                if len(rho) <= k and (not rho or rho[0] <= N):
                    acc[rect_complement(transpose(rho), N, k)] += c * c2
        e = _twisted(gam, k, n)
        for v, c in sorted(acc.items()):
            piece.add((e, cfg.v_label(v)), c)
    return piece


@lru_cache(maxsize=None)
def _exterior_classes(cs: tuple[int, ...], M: int) -> tuple:
    """O(M) classes (mod det) of the tensor product of exterior powers (1^c)."""
    acc: Counter = Counter({(): 1})
    for c in cs:
        nxt: Counter = Counter()
        for p, mult in acc.items():
            for q, m2 in nl_product("O", p, (1,) * c, M):
                nxt[q] += mult * m2
        acc = nxt
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _weyl_table(N: int, k: int, dprime: int) -> tuple:
    """Racah-Speiser table: for each class of torus weights in [-k, k]^N (the
    sorted tuple of k - |w_a|), the signed SO dominant weights it straightens to."""
    table: dict = {}
    for w in product(range(-k, k + 1), repeat=N):
        key = tuple(sorted(k - abs(x) for x in w))
        res = bott_type_bd(w, dprime)
        if res.vanishes:
            table.setdefault(key, Counter())
            continue
        table.setdefault(key, Counter())[res.dominant.weight] += res.sign
    return tuple((key, tuple(sorted((dom, c) for dom, c in cnt.items() if c))) for key, cnt in sorted(table.items()))


def _spin_targets(lam: Partition, k: int) -> list[Partition]:
    # V_nu (x) spin contains V_{lam + delta} exactly for nu = lam + eps, eps in {0,1}^k
    out = []
    base = pad(lam, k)
    for eps in product((0, 1), repeat=k):
        nu = tuple(x + e for x, e in zip(base, eps))
        if all(nu[j] >= nu[j + 1] for j in range(k - 1)):
            out.append(partition(nu))
    return out


def _o_isotypic_weights(cfg: CaseConfig, lam: Partition, gam: Partition) -> dict:
    """SO(V) highest weights with multiplicity in the degree-gam part of N."""
    k, N, dp = cfg.k, _lagrangian_dim(cfg), cfg.dprime
    M = 2 * k
    targets = set(_spin_targets(lam, k) if dp else [lam])
    branch = restrict("O", gam, M)
    if not branch:
        return {}

    def count(pi):
        # class multiplicity of the targets in Res(gam) (x) [pi]; O(M) labels are
        # taken mod det, so read the product directly rather than using self-duality
        return sum(c * c2 for kappa, c in branch for t, c2 in nl_product("O", kappa, pi, M) if t in targets)

    acc: Counter = Counter()
    for key, doms in _weyl_table(N, k, dp):
        mult = sum(count(pi) * c for pi, c in _exterior_classes(key, M))
        if mult:
            for dom, s in doms:
                acc[dom] += s * mult
    return {w: c for w, c in acc.items() if c}


def _so_to_o(weights: dict, N: int, dprime: int) -> dict:
    """Merge SO(V) weights into O(V) labels (up to the determinant)."""
    out: Counter = Counter()
    for w, c in weights.items():
        if c < 0:
            raise DomainError(f"negative multiplicity {c} at {w}: character did not collapse")
        if N and w[-1] < 0:
            continue
        if not dprime and N and w[-1] > 0:
            flip = w[:-1] + (-w[-1],)
            if weights.get(flip, 0) != c:
                raise DomainError(f"SO weights {w} and {flip} have different multiplicities")
        out[partition(w)] += c
    return out


def _piece_orthogonal(cfg: CaseConfig, lam: Partition, deg: int) -> RepSum:
    n, k = cfg.n, cfg.k
    N = _lagrangian_dim(cfg)
    piece = RepSum()
    for gam in partitions_of(deg, min(n, 2 * k)):
        merged = _so_to_o(_o_isotypic_weights(cfg, lam, gam), N, cfg.dprime)
        e = _twisted(gam, k, n)
        for v, c in sorted(merged.items()):
            piece.add((e, cfg.v_label(v)), c)
    return piece


def _piece_complexes(cfg: CaseConfig, lam: Partition, lam2: Partition, deg: int) -> RepSum:
    # Sym(E* x U*) (x) Sym(U x F) (x) exterior part, which is
    # sum over delta in K x (a+b) of S_{delta - a}(U) (x) S_{delta' - l}(V).
    n, m, k, l, a = cfg.n, cfg.m, cfg.k, cfg.l, cfg.a
    K, N = k + l, cfg.dimV
    target = pad(lam, K - len(lam2)) + tuple(-x for x in reversed(lam2))
    piece = RepSum()
    for e in range(deg + 1):
        for al in partitions_of(e, min(n, K)):
            al_dual = tuple(-x for x in reversed(pad(al, K)))
            for be in partitions_of(deg - e, min(m, K)):
                acc: Counter = Counter()
                for om, c in tensor_gl_weights(pad(be, K), al_dual).items():
                    low = om[-1] if K else 0
                    shifted = tuple(x + a - low for x in target)
                    if any(x < 0 for x in shifted):
                        continue
                    inner = partition(x - low for x in om)
                    for delta, c2 in skew_lr(partition(shifted), inner).items():
                        if delta and delta[0] > N:
                            continue
                        v = tuple(x - l for x in pad(transpose(delta), N))
                        acc[v] += c * c2
                if not acc:
                    continue
                el, fl = _twisted(al, k, n), _twisted(be, l, m)
                for v, c in sorted(acc.items()):
                    piece.add((el, RepLabel("GL", N, v), fl), c)
    return piece


# ---------------------------------------------------------------------------
# Degree-one generators of g, used by the presentation check
# ---------------------------------------------------------------------------


def g_degree_one_times(cfg: CaseConfig, reps: RepSum) -> RepSum:
    """reps (x) g_1, where g_1 = E* (x) V (plus V* (x) F for complexes)."""
    out = RepSum()
    n = cfg.n
    for key, c in reps.items():
        e = key[0]
        e_shift = e.weight[-1] if n else 0
        e_poly = partition(x - e_shift for x in e.weight)
        e_new = [(tuple(x + e_shift for x in pad(p, n)), c2) for p, c2 in lr_product(e_poly, (1,), n).items()]
        if cfg.case == "complexes":
            v, f = key[1], key[2]
            N = cfg.dimV
            vec = (1,) + (0,) * (N - 1)
            covec = (0,) * (N - 1) + (-1,)
            for w, c3 in tensor_gl_weights(v.weight, vec).items():
                for ew, c2 in e_new:
                    out.add((RepLabel("GL", n, ew), RepLabel("GL", N, w), f), c * c2 * c3)
            m = cfg.m
            f_shift = f.weight[-1] if m else 0
            f_poly = partition(x - f_shift for x in f.weight)
            for w, c3 in tensor_gl_weights(v.weight, covec).items():
                for p, c2 in lr_product(f_poly, (1,), m).items():
                    fw = tuple(x + f_shift for x in pad(p, m))
                    out.add((e, RepLabel("GL", N, w), RepLabel("GL", m, fw)), c * c2 * c3)
            continue
        v = key[1]
        kind = "Sp" if cfg.case == "symplectic" else "O"
        for vw, c3 in nl_product(kind, v.weight, (1,), cfg.dimV):
            for ew, c2 in e_new:
                out.add((RepLabel("GL", n, ew), cfg.v_label(vw)), c * c2 * c3)
    return out


def presentation_defect(cfg: CaseConfig, lam: Partition, lam2: Partition = ()) -> dict:
    """[N_0 (x) g_1] - [N_1] - [degree-one syzygies]; empty when the closed
    formulas agree with the computed character."""
    chi = n_module_character(cfg, lam, 1, lam2)
    pres = presentation(cfg, lam, lam2)
    acc = VirtualRepSum()
    for key, c in g_degree_one_times(cfg, chi.piece(0)).items():
        acc[key] += c
    for key, c in chi.piece(1).items():
        acc[key] -= c
    for reps, deg in pres.syzygies:
        if deg == 1:
            for key, c in reps.items():
                acc[key] -= c
    return {k: v for k, v in acc.items() if v}


def admissible_partitions(cfg: CaseConfig, max_size: int):
    """Admissible lam (pairs (lam, lam') for complexes) of total size <= max_size."""
    if cfg.case == "complexes":
        for s in range(max_size + 1):
            for t in range(s + 1):
                for lam in partitions_of(t):
                    for lam2 in partitions_of(s - t):
                        try:
                            check_admissible(cfg, lam, lam2)
                        except DomainError:
                            continue
                        yield lam, lam2
        return
    for lam in partitions_up_to(max_size, cfg.k):
        try:
            check_admissible(cfg, lam)
        except DomainError:
            continue
        yield lam, ()
