"""Terms of minimal free resolutions and the cohomology computations behind them.

Over the polynomial ring A the terms come from the geometric technique: an
exterior power of a tautological bundle, twisted, pushed forward from an
isotropic Grassmannian (or a two-step flag variety for complexes).  The
cohomology of each reducible bundle is computed as a signed sum of Bott
outcomes over its Levi constituents; the border-strip rules predict the
single degree where it lives.  Over B the terms come from the Howe-dual
characters in ``howe_side``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .branching_classical import extension_pieces, nl_product, restrict
from .littlewood_characters import CaseConfig
from .modification_rules import ModResult, mod_a, mod_c, mod_d
from .partition_core import (
    CancellationError,
    DomainError,
    Partition,
    RepLabel,
    RepSum,
    contains,
    lr_product,
    pad,
    partition,
    partitions_in_box,
    partitions_of,
    rect_complement,
    size,
    tensor_gl_weights,
    transpose,
)
from .weyl_geometry import bott_gl, bott_type_bd, bott_type_c


@dataclass(frozen=True)
class BundleDescriptor:
    """The twisted bundle indexed by ``lam`` (and ``lam2`` for complexes).

    For the isotropic cases this is S_{lam^T}(R-perp) x (det R*)^k x S_[(d x k) minus nu](R-perp/R)
    on the isotropic Grassmannian of n-planes.  For complexes it is
    (det R_n*)^k x S_{olnu}(Q*) x (det V/R_{n+d})^l x S_{lam^T}((V/R_n)*) x S_{lam2^T}(R_{n+d})
    on Flag(n, n+d, V), with Q = R_{n+d}/R_n.
    """

    cfg: CaseConfig
    lam: Partition
    lam2: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "lam", partition(self.lam))
        object.__setattr__(self, "lam2", partition(self.lam2))


@dataclass(frozen=True)
class GeneralizedBott:
    vanishes: bool
    degree: int | None
    tau: object
    character: RepSum


def index_box(cfg: CaseConfig) -> tuple[int, int]:
    """Rows x columns of the box holding the index partitions."""
    if cfg.case == "symplectic":
        return cfg.n, cfg.n + 2 * cfg.d
    if cfg.case == "orthogonal":
        return cfg.n, cfg.n + 2 * cfg.d + cfg.dprime
    return cfg.n, cfg.m + cfg.d


def index_partitions(cfg: CaseConfig, total: int | None = None):
    """All indices (lam, lam2) of exterior-power summands, optionally of fixed total size."""
    r, c = index_box(cfg)
    if cfg.case != "complexes":
        it = partitions_in_box(r, c) if total is None else partitions_of(total, r, c)
        for lam in it:
            yield lam, ()
        return
    sizes = range(r * c + cfg.m * (cfg.n + cfg.d) + 1) if total is None else [total]
    for t in sizes:
        for s in range(t + 1):
            for lam in partitions_of(s, r, c):
                for lam2 in partitions_of(t - s, cfg.m, cfg.n + cfg.d):
                    yield lam, lam2


def modification(cfg: CaseConfig, lam: Partition, lam2: Partition = ()) -> ModResult:
    if cfg.case == "symplectic":
        return mod_c(lam, cfg.k)
    if cfg.case == "orthogonal":
        return mod_d(lam, cfg.k)
    return mod_a(lam, lam2, cfg.k + cfg.l)


# ---------------------------------------------------------------------------
# Levi constituents and signed Bott sums
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _middle_sp(beta: Partition, comp: Partition, d: int) -> tuple:
    out: Counter = Counter()
    for gam, c1 in restrict("Sp", beta, 2 * d):
        for delta, c2 in nl_product("Sp", gam, comp, 2 * d):
            out[pad(delta, d)] += c1 * c2
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _middle_o(beta: Partition, comp: Partition, M: int) -> tuple:
    """SO(M) weights of S_beta(W) x [comp] for W orthogonal of dimension M."""
    half = M // 2
    out: Counter = Counter()
    for gam, c1 in restrict("O", beta, M):
        for delta, c2 in nl_product("O", gam, comp, M):
            w = pad(delta, half)
            out[w] += c1 * c2
            if M % 2 == 0 and half and w[-1]:
                out[w[:-1] + (-w[-1],)] += c1 * c2
    return tuple(sorted(out.items()))


def _bott_isotropic(cfg: CaseConfig, weight: tuple[int, ...]):
    if cfg.case == "symplectic":
        return bott_type_c(weight)
    return bott_type_bd(weight, cfg.dprime)


def bundle_euler(desc: BundleDescriptor) -> tuple[dict, dict]:
    """Signed sum of the Bott outcomes of all Levi constituents.

    Returns (virtual character keyed by V-weight, degree -> unsigned
    character of the constituents landing in that degree).  V-weights are
    Sp partitions, signed SO weights, or GL weights of V* for complexes.
    """
    cfg = desc.cfg
    total: Counter = Counter()
    by_degree: dict = defaultdict(Counter)

    def record(outcome, mult):
        if outcome.vanishes:
            return
        w = outcome.dominant.weight
        total[w] += outcome.sign * mult
        by_degree[outcome.degree][w] += mult

    n, k = cfg.n, cfg.k
    if cfg.case == "complexes":
        _complexes_constituents(desc, record)
    else:
        mid_dim = 2 * cfg.d + (cfg.dprime if cfg.case == "orthogonal" else 0)
        comp = partition(cfg.twist_complement)
        for (alpha, beta), c in extension_pieces(transpose(desc.lam), n, mid_dim):
            left = tuple(k - x for x in reversed(pad(alpha, n)))
            if cfg.case == "symplectic":
                middles = _middle_sp(beta, comp, cfg.d)
            else:
                middles = _middle_o(beta, comp, mid_dim)
            for mid, c2 in middles:
                weight = left + mid
                record(_bott_isotropic(cfg, weight), c * c2)
                if cfg.case == "orthogonal" and mid_dim == 0 and n:
                    # OGr(n, 2n) has two components, exchanged by a reflection
                    record(_bott_isotropic(cfg, weight[:-1] + (-weight[-1],)), c * c2)
    total = {w: v for w, v in total.items() if v}
    return total, {deg: dict(c) for deg, c in by_degree.items()}


def _complexes_constituents(desc: BundleDescriptor, record) -> None:
    cfg = desc.cfg
    n, m, d, k, l = cfg.n, cfg.m, cfg.d, cfg.k, cfg.l
    olnu = cfg.twist_complement
    # S_{lam2^T}(R_{n+d}): sub R_n, quotient Q
    for (a2, b2), c1 in extension_pieces(transpose(desc.lam2), n, d):
        left = tuple(k - x for x in reversed(pad(a2, n)))
        qdual = tuple(-x for x in reversed(pad(b2, d)))
        base = tensor_gl_weights(olnu, qdual) if d else {(): 1}
        # S_{lam^T}((V/R_n)*): pieces S_a(Q*) x S_b((V/R_{n+d})*)
        for (b1, a1), c2 in extension_pieces(transpose(desc.lam), m, d):
            right = tuple(x - l for x in pad(b1, m))
            for qw, c3 in base.items():
                prods = tensor_gl_weights(qw, pad(a1, d)) if d else {(): 1}
                for qw2, c4 in prods.items():
                    record(bott_gl(left + qw2 + right), c1 * c2 * c3 * c4)


def _to_labels(cfg: CaseConfig, virtual: dict, strict: bool = True) -> dict:
    """Turn a V-weight keyed character into V-label keys (merging SO weights to O labels)."""
    if cfg.case != "orthogonal" or cfg.dimV % 2:
        return {cfg.v_label(w): v for w, v in virtual.items()}
    out: dict = {}
    for w, v in virtual.items():
        if w and w[-1] < 0:
            partner = w[:-1] + (-w[-1],)
            if strict and virtual.get(partner, 0) != v:
                raise CancellationError(f"SO character not invariant under the outer reflection at {w}", dict(virtual))
            continue
        lab = cfg.v_label(w)
        out[lab] = out.get(lab, 0) + v
    return out


def euler_character(desc: BundleDescriptor) -> dict:
    """Euler characteristic of the bundle as {V label: signed multiplicity}."""
    total, _ = bundle_euler(desc)
    return _to_labels(desc.cfg, total)


def h0_E_bundle(desc: BundleDescriptor) -> RepSum:
    """Global sections, valid when higher cohomology vanishes: the Euler
    characteristic, which must be effective."""
    chi = euler_character(desc)
    bad = {k: v for k, v in chi.items() if v < 0}
    if bad:
        raise CancellationError(f"Euler characteristic of {desc} is not effective", chi)
    return RepSum({(lab,): v for lab, v in chi.items()})


def generalized_bott(desc: BundleDescriptor) -> GeneralizedBott:
    """Cohomology of the bundle: the degree from the border-strip rule and the
    character of the sections of the modified bundle."""
    res = modification(desc.cfg, desc.lam, desc.lam2)
    if not res.defined:
        return GeneralizedBott(True, None, None, RepSum())
    if desc.cfg.case == "complexes":
        tau_desc = BundleDescriptor(desc.cfg, *res.tau)
    else:
        tau_desc = BundleDescriptor(desc.cfg, res.tau)
    return GeneralizedBott(False, res.iota, res.tau, h0_E_bundle(tau_desc))


def euler_check(desc: BundleDescriptor) -> tuple[bool, str]:
    """Compare the signed Bott sum with the prediction of ``generalized_bott``."""
    chi = euler_character(desc)
    pred = generalized_bott(desc)
    if pred.vanishes:
        ok = not chi
        return ok, "" if ok else f"expected vanishing, Euler characteristic {chi}"
    sign = -1 if pred.degree % 2 else 1
    expected = {k[0]: sign * v for k, v in pred.character.terms.items()}
    ok = expected == chi
    return ok, "" if ok else f"degree {pred.degree}: expected {expected}, got {chi}"


# ---------------------------------------------------------------------------
# Betti tables
# ---------------------------------------------------------------------------


@dataclass
class BettiTable:
    """Graded Betti numbers: entries[(i, j)] is the rank of the i-th term in
    internal degree j.  ``decorations`` carries the representations."""

    entries: dict = field(default_factory=dict)
    decorations: dict = field(default_factory=dict)
    clipped: bool = False

    def add(self, i: int, j: int, reps: RepSum) -> None:
        dim = reps.dim()
        if not dim:
            return
        self.entries[(i, j)] = self.entries.get((i, j), 0) + dim
        self.decorations[(i, j)] = self.decorations.get((i, j), RepSum()) + reps

    def columns(self) -> list[int]:
        return sorted({i for i, _ in self.entries})

    def totals(self) -> dict[int, int]:
        out: dict = defaultdict(int)
        for (i, _j), v in self.entries.items():
            out[i] += v
        return dict(out)

    def rows(self) -> list[int]:
        """Row labels r = j - i, as printed."""
        return sorted({j - i for i, j in self.entries})

    def is_linear(self) -> bool:
        return len(self.rows()) <= 1

    def render(self) -> str:
        """Text layout: a header of column indices, a total line, one line per row."""
        if not self.entries:
            return "total:\n"
        ncol = max(self.columns()) + 1
        rows = self.rows()
        tot = self.totals()
        label_w = max(len("total:"), *(len(f"{r}:") for r in rows))
        cells = {r: [self.entries.get((i, i + r), 0) for i in range(ncol)] for r in rows}
        widths = []
        for i in range(ncol):
            vals = [str(tot.get(i, 0))] + [str(cells[r][i]) if cells[r][i] else "." for r in rows]
            widths.append(max(len(v) for v in vals))
        # column 0's index is flush left, as in the printed tables
        head = " " * label_w + " " + " ".join(
            (str(i).ljust(widths[i]) if i == 0 else str(i).rjust(widths[i])) for i in range(ncol))
        lines = [head.rstrip()]
        lines.append("total:".rjust(label_w) + " " + " ".join(str(tot.get(i, 0)).rjust(widths[i]) for i in range(ncol)))
        for r in rows:
            body = " ".join((str(v) if v else ".").rjust(widths[i]) for i, v in enumerate(cells[r]))
            lines.append(f"{r}:".rjust(label_w) + " " + body)
        return "\n".join(lines) + "\n"


def _e_label(cfg: CaseConfig, lam: Partition) -> RepLabel:
    return RepLabel("GL", cfg.n, tuple(cfg.k + x for x in pad(lam, cfg.n)))


def _f_label(cfg: CaseConfig, lam2: Partition) -> RepLabel:
    return RepLabel("GL", cfg.m, tuple(cfg.l + x for x in pad(lam2, cfg.m)))


def _a_contribution(cfg: CaseConfig, lam: Partition, lam2: Partition):
    """(homological degree i, cohomological degree j, RepSum) of one index, or None."""
    gb = generalized_bott(BundleDescriptor(cfg, lam, lam2))
    if gb.vanishes or not gb.character:
        return None
    size = sum(lam) + sum(lam2)
    reps = RepSum()
    for (vlab,), mult in gb.character.terms.items():
        if cfg.case == "complexes":
            reps.add((_e_label(cfg, lam), vlab, _f_label(cfg, lam2)), mult)
        else:
            reps.add((_e_label(cfg, lam), vlab), mult)
    return size - gb.degree, gb.degree, reps


def geometric_technique_terms(cohomology, i: int, max_size: int) -> dict[int, RepSum]:
    """Term i of a resolution built by the geometric technique.

    ``cohomology(size)`` yields (j, reps) pairs: the representations in H^j of
    the degree-``size`` exterior power of the bundle, already twisted.  Term i
    collects H^j of the exterior power of degree i + j, placed in internal
    degree i + j (relative to the generators).
    """
    out: dict = {}
    for total in range(i, max_size + 1):
        for j, reps in cohomology(total):
            if total - j == i and reps:
                out[total] = out.get(total, RepSum()) + reps
    return out


def _max_index_size(cfg: CaseConfig) -> int:
    r, c = index_box(cfg)
    return r * c + (cfg.m * (cfg.n + cfg.d) if cfg.case == "complexes" else 0)


def a_resolution_term(cfg: CaseConfig, i: int) -> dict[int, RepSum]:
    """Term i of the minimal free resolution over A, as {internal degree: representations}."""

    def cohomology(total):
        for lam, lam2 in index_partitions(cfg, total):
            got = _a_contribution(cfg, lam, lam2)
            if got:
                yield got[1], got[2]

    terms = geometric_technique_terms(cohomology, i, _max_index_size(cfg))
    return {cfg.g0 + t: reps for t, reps in terms.items()}


def poly_det_resolution_term(n: int, f_dim: int, k: int, nu: Partition, i: int) -> RepSum:
    """Term i of the (linear) resolution of the determinantal module over Sym(E x F).

    Labels are (GL(n) label of E, GL(f_dim) label of F); the term sits in
    internal degree nk + i.
    """
    d = f_dim - n
    nu = partition(nu)
    if d < 0 or not contains(tuple([k] * d), nu):
        raise DomainError(f"nu={nu} must fit in a {d}x{k} box")
    comp = rect_complement(nu, d, k)
    out = RepSum()
    for lam in partitions_of(i, n, d):
        for alpha, c in lr_product(transpose(lam), comp, d).items():
            if alpha and alpha[0] > k:
                continue
            e = RepLabel("GL", n, tuple(k + x for x in pad(lam, n)))
            f = RepLabel("GL", f_dim, (k,) * n + pad(alpha, d))
            out.add((e, f), c)
    return out


def a_betti_table(cfg: CaseConfig, i_max: int | None = None) -> BettiTable:
    table = BettiTable()
    for lam, lam2 in index_partitions(cfg):
        got = _a_contribution(cfg, lam, lam2)
        if not got:
            continue
        i, j, reps = got
        if i_max is not None and i > i_max:
            table.clipped = True
            continue
        table.add(i, cfg.g0 + i + j, reps)
    return table


# ---------------------------------------------------------------------------
# Resolutions over B
# ---------------------------------------------------------------------------


def b_module_index(cfg: CaseConfig) -> tuple[Partition, Partition]:
    """Index of the Howe-dual module whose pieces resolve the cfg's module over B."""
    if cfg.case == "complexes":
        return transpose(cfg.nuprime), transpose(cfg.nu)
    return transpose(cfg.nu), ()


def b_resolution_term(cfg: CaseConfig, i: int) -> RepSum:
    """Term i of the linear resolution over B (internal degree g0 + i).

    The term is the dual of the degree-i piece of N.  Dualizing turns E*- and
    F-labels into E- and F*-labels with the same weights, and leaves the
    V-label as written (self-dual groups; V*-weights for complexes), so the
    keys carry over unchanged.
    """
    from .howe_side import check_admissible, n_module_character

    lam, lam2 = b_module_index(cfg)
    if cfg.case != "complexes" and lam and lam[0] > cfg.d:
        raise DomainError(f"first part of {lam} exceeds d={cfg.d}")
    check_admissible(cfg, lam, lam2)
    return n_module_character(cfg, lam, i, lam2).piece(i)


def b_betti_table(cfg: CaseConfig, i_max: int) -> BettiTable:
    from .howe_side import n_module_character

    lam, lam2 = b_module_index(cfg)
    ch = n_module_character(cfg, lam, i_max, lam2)
    table = BettiTable()
    for i in range(i_max + 1):
        table.add(i, cfg.g0 + i, ch.piece(i))
    return table


# ---------------------------------------------------------------------------
# Complete-intersection bookkeeping
# ---------------------------------------------------------------------------


def _frobenius_shapes(p: int, arm_extra: int, leg_extra: int, max_rows: int):
    """Shapes (a_1 + arm_extra, ... | a_1 + leg_extra, ...) of size 2p, a strictly decreasing."""

    def build(arms):
        rows = [0] * (max(len(arms) + a + leg_extra for a in arms) if arms else 0)
        for r, a in enumerate(arms):
            rows[r] += a + arm_extra + 1
            for below in range(r + 1, r + 1 + a + leg_extra):
                rows[below] += 1
        return partition(rows)

    def rec(rest, cap, arms):
        if rest == 0:
            yield tuple(arms)
            return
        for a in range(min(cap, rest), -1, -1):
            cost = 2 * a + arm_extra + leg_extra + 1
            if cost <= rest:
                yield from rec(rest - cost, a - 1, arms + [a])

    for arms in rec(2 * p, 2 * p, []):
        shape = build(list(arms))
        if len(shape) <= max_rows:
            yield shape


def quadric_exterior(cfg: CaseConfig, p: int) -> dict:
    """Exterior power p of the space of quadrics, {(E-shape, F-shape): mult}.

    Symplectic quadrics span the skew square of E, orthogonal ones the
    symmetric square, and for complexes they span E x F*.
    """
    n = cfg.n
    if cfg.case == "symplectic":
        return {(s, ()): 1 for s in _frobenius_shapes(p, 0, 1, n)}
    if cfg.case == "orthogonal":
        return {(s, ()): 1 for s in _frobenius_shapes(p, 1, 0, n)}
    return {(a, transpose(a)): 1 for a in partitions_of(p, n, cfg.m)}


def quadric_symmetric(cfg: CaseConfig, j: int) -> dict:
    """Divided (= symmetric) power j of the dual quadric space, {(E-shape, F-shape): mult}."""
    n = cfg.n
    if cfg.case == "symplectic":
        # even column lengths
        return {(transpose(tuple(2 * x for x in s)), ()): 1 for s in partitions_of(j, None, n // 2)}
    if cfg.case == "orthogonal":
        return {(tuple(2 * x for x in s), ()): 1 for s in partitions_of(j, n)}
    return {(a, a): 1 for a in partitions_of(j, min(n, cfg.m))}


def _shift_label(label: RepLabel, shape: Partition) -> dict:
    """label (x) S_shape of the defining representation, as {label: mult}."""
    N = label.dim
    base = label.weight[-1] if N else 0
    poly = partition(x - base for x in label.weight)
    return {RepLabel("GL", N, tuple(x + base for x in pad(q, N))): c
            for q, c in lr_product(poly, shape, N).items()}


def _tensor_shapes(key: tuple, e_shape: Partition, f_shape: Partition) -> dict:
    out: Counter = Counter()
    for e, c in _shift_label(key[0], e_shape).items():
        if len(key) == 3:
            for f, c2 in _shift_label(key[2], f_shape).items():
                out[(e, key[1], f)] += c * c2
        else:
            out[(e,) + key[1:]] += c
    return out


def eisenbud_terms(cfg: CaseConfig, a_table: BettiTable, i: int) -> dict[int, RepSum]:
    """Term i of the (non-minimal) resolution over the complete intersection
    built from the A-resolution and the divided powers of the quadric space:
    the sum over j of F_{i-2j}, shifted by 2j, tensored with D^j.
    """
    out: dict = {}
    for j in range(i // 2 + 1):
        pieces = quadric_symmetric(cfg, j)
        for (hom, deg), reps in a_table.decorations.items():
            if hom != i - 2 * j:
                continue
            acc = RepSum()
            for key, c in reps.items():
                for (es, fs), c2 in pieces.items():
                    for new, c3 in _tensor_shapes(key, es, fs).items():
                        acc.add(new, c * c2 * c3)
            out[deg + 2 * j] = out.get(deg + 2 * j, RepSum()) + acc
    return out


def s_euler_character(cfg: CaseConfig, lam: Partition, lam2: Partition, max_deg: int) -> dict:
    """Euler characteristic of Tor over the quadric polynomial ring S of N.

    Returns {label key: signed multiplicity} for keys of E-degree (plus
    F-degree) at most ``max_deg`` above the generators.  E*/F labels of N
    carry over to E/F* labels of the dual, as in ``b_resolution_term``.
    """
    from .howe_side import n_module_character

    ch = n_module_character(cfg, lam, max_deg, lam2)
    out: Counter = Counter()
    for p in range(max_deg // 2 + 1):
        sign = -1 if p % 2 else 1
        ext = quadric_exterior(cfg, p)
        for deg in range(max_deg - 2 * p + 1):
            for key, c in ch.piece(deg).items():
                for (es, fs), c2 in ext.items():
                    for new, c3 in _tensor_shapes(key, es, fs).items():
                        out[new] += sign * c * c2 * c3
    return {k: v for k, v in out.items() if v}


def _index_of_key(cfg: CaseConfig, key: tuple) -> tuple[Partition, Partition]:
    lam = partition(x - cfg.k for x in key[0].weight)
    lam2 = partition(x - cfg.l for x in key[2].weight) if cfg.case == "complexes" else ()
    return lam, lam2


def _split_key(cfg: CaseConfig, key: tuple):
    """(index, V-label) of a label key."""
    return _index_of_key(cfg, key), key[1]


@dataclass
class ShiftReport:
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def ci_shift_check(cfg: CaseConfig, max_total: int) -> ShiftReport:
    """Compare the A-resolution with the Tor of N over the quadric ring S.

    S-side: the Euler characteristic of N (x) Lambda(quadrics) is split by
    index; indices the border-strip rule leaves fixed give Tor_0, and every
    other index must equal (-1)^iota times Tor_0 at its modification (or 0).
    A-side: the Bott-computed term with E-label (k^n)+lam must sit in
    homological degree |lam| - iota with the same V-representation as Tor_0
    at tau(lam).  Both are checked for every index of total size <= max_total.
    """
    lam0, lam02 = b_module_index(cfg)
    euler = s_euler_character(cfg, lam0, lam02, max_total)
    s_side: dict = defaultdict(Counter)
    for key, v in euler.items():
        idx, vlab = _split_key(cfg, key)
        s_side[idx][vlab] += v

    a_side: dict = defaultdict(Counter)
    a_hom: dict = {}
    for lam, lam2 in _s_indices(cfg, max_total):
        r, c = index_box(cfg)
        inside = len(lam) <= r and (not lam or lam[0] <= c)
        if cfg.case == "complexes":
            inside = inside and len(lam2) <= cfg.m and (not lam2 or lam2[0] <= cfg.n + cfg.d)
        if not inside:
            continue
        got = _a_contribution(cfg, lam, lam2)
        if got:
            a_hom[(lam, lam2)] = got[0]
            for key, mult in got[2].items():
                a_side[(lam, lam2)][key[1]] += mult

    report = ShiftReport()
    for lam, lam2 in _s_indices(cfg, max_total):
        idx = (lam, lam2)
        report.checked += 1
        res = modification(cfg, lam, lam2)
        here = dict(s_side.get(idx, {}))
        if not res.defined:
            if here:
                report.mismatches.append((idx, "S-side Tor should vanish", here))
            if a_side.get(idx):
                report.mismatches.append((idx, "A-side term should vanish", dict(a_side[idx])))
            continue
        tau = res.tau if cfg.case == "complexes" else (res.tau, ())
        tor0 = {v: c for v, c in s_side.get(tau, {}).items()}
        if any(c < 0 for c in tor0.values()):
            report.mismatches.append((tau, "Tor_0 is not effective", tor0))
        sign = -1 if res.iota % 2 else 1
        if here != {v: sign * c for v, c in tor0.items()}:
            report.mismatches.append((idx, f"S-side Tor_{res.iota} differs from Tor_0 at {tau}", here))
        got = dict(a_side.get(idx, {}))
        if got != tor0:
            report.mismatches.append((idx, "A-side term differs from Tor_0", got))
        elif got and a_hom[idx] != size(lam) + size(lam2) - res.iota:
            report.mismatches.append((idx, "A-side homological degree is not |lam| - iota", a_hom[idx]))
    return report


def _s_indices(cfg: CaseConfig, max_total: int):
    for t in range(max_total + 1):
        if cfg.case != "complexes":
            for lam in partitions_of(t, cfg.n):
                yield lam, ()
            continue
        for s in range(t + 1):
            for lam in partitions_of(s, cfg.n):
                for lam2 in partitions_of(t - s, cfg.m):
                    yield lam, lam2


# ---------------------------------------------------------------------------
# Symmetric powers of the complex E -> V -> E*
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymTerm:
    """Homological degree t of Sym^k of the three-term complex, with twist B(-t).

    ``summands`` lists (p, q, r) for Sym^p(E*) x Lambda^q(V) x Sym^r(E).
    """

    t: int
    summands: tuple

    @property
    def twist(self) -> int:
        return -self.t

    def text(self) -> str:
        parts = []
        for p, q, r in self.summands:
            factors = [_power("Sym", r, "E"), _power("Sym", p, "E*"), _power("Λ", q, "V")]
            factors = [f for f in factors if f]
            parts.append("⊗".join(factors) if factors else "k")
        if len(parts) > 1:
            body = "(" + " ⊕ ".join(f"({x})" if "⊗" in x else x for x in parts) + ")"
        else:
            body = parts[0]
        if body == "k":
            return f"B({self.twist})" if self.t else "B"
        return f"{body}⊗B({self.twist})" if self.t else f"{body}⊗B"

    def reps(self, n: int, dimV: int) -> RepSum:
        out = RepSum()
        for p, q, r in self.summands:
            e_part = tensor_gl_weights((0,) * (n - 1) + (-p,), (r,) + (0,) * (n - 1))
            if q > dimV:
                continue
            v = RepLabel("GL", dimV, (1,) * q + (0,) * (dimV - q))
            for w, c in e_part.items():
                out.add((RepLabel("GL", n, w), v), c)
        return out


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _power(name: str, e: int, space: str) -> str:
    if e == 0:
        return ""
    if e == 1:
        return space
    return f"{name}{str(e).translate(_SUPERSCRIPT)}({space})"


def sym_complex_terms(n: int, d: int, k: int) -> list[SymTerm]:
    """Terms of Sym^k(E -> V -> E*) over B, from homological degree 0 up to 2k."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    terms = []
    for t in range(2 * k + 1):
        summands = tuple((k - q - r, q, r) for r in range(k + 1) for q in [t - 2 * r]
                         if q >= 0 and k - q - r >= 0)
        if summands:
            terms.append(SymTerm(t, summands))
    return terms


def sym0_complex_reps(n: int, d: int, k: int) -> dict[int, RepSum]:
    """Representations of the trace-free part: Sym^k minus Sym^(k-2) shifted by two."""
    dimV = 2 * n + 2 * d
    full = {t.t: t.reps(n, dimV) for t in sym_complex_terms(n, d, k)}
    if k < 2:
        return full
    out = {}
    lower = {t.t + 2: t.reps(n, dimV) for t in sym_complex_terms(n, d, k - 2)}
    for t, reps in full.items():
        diff = dict(reps.terms)
        for key, c in lower.get(t, RepSum()).items():
            diff[key] = diff.get(key, 0) - c
        out[t] = RepSum(diff)
    return out


# ---------------------------------------------------------------------------
# Support variety
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SupportVariety:
    ambient: str
    symmetry: str
    rank_bound: int
    ambient_max_rank: int

    def text(self) -> str:
        sym = "" if self.symmetry == "none" else f"{self.symmetry} "
        return f"{sym}matrices in {self.ambient} of rank <= {self.rank_bound}"


def support_variety(cfg: CaseConfig) -> SupportVariety:
    n = cfg.n
    if cfg.case == "symplectic":
        top = n - n % 2
        return SupportVariety("Λ²E", "skew", min(2 * cfg.k, top), top)
    if cfg.case == "orthogonal":
        return SupportVariety("Sym²E", "symmetric", min(2 * cfg.k, n), n)
    top = min(n, cfg.m)
    return SupportVariety("E⊗F*", "none", min(cfg.k + cfg.l, top), top)


# ---------------------------------------------------------------------------
# Output formats
# ---------------------------------------------------------------------------


def _v_text(cfg: CaseConfig, label: RepLabel) -> str:
    if cfg.case == "complexes":
        return ",".join(map(str, label.weight))
    return ",".join(map(str, pad(label.weight, cfg.dimV // 2)))


def rep_list_text(cfg: CaseConfig, reps: RepSum) -> str:
    """Terms "(E;V)" (or "(E;V;F)"), repeated by multiplicity, sorted, joined by ⊕."""
    items = []
    for key, c in reps.items():
        parts = [",".join(map(str, key[0].weight)), _v_text(cfg, key[1])]
        if len(key) == 3:
            parts.append(",".join(map(str, key[2].weight)))
        items += ["(" + ";".join(parts) + ")"] * c
    return " ⊕ ".join(sorted(items)) if items else "0"


def terms_json(cfg: CaseConfig, ring: str, table: BettiTable) -> dict:
    terms = []
    for (i, j) in sorted(table.decorations):
        labels = []
        for key, c in table.decorations[(i, j)].items():
            entry = {"E": list(key[0].weight), "V": list(key[1].weight),
                     "F": list(key[2].weight) if len(key) == 3 else [], "mult": c}
            labels.append(entry)
        terms.append({"i": i, "j": j, "labels": labels})
    return {"case": cfg.case, "params": cfg.params(), "ring": ring, "terms": terms}
