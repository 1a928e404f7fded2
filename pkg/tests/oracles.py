"""Independent reference computations used by the tests.

Nothing here imports the package's Littlewood-Richardson, branching, Bott or
Howe-side code: characters are Laurent polynomials (dicts from exponent
tuples to integers), irreducible characters come from the Weyl character
formula by exact division, and decompositions read off the coefficients of
strictly dominant exponents after multiplying by the Weyl denominator.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product


# ---------------------------------------------------------------------------
# Partitions and tableaux
# ---------------------------------------------------------------------------


def conj(p):
    p = [x for x in p if x]
    return tuple(sum(1 for x in p if x > i) for i in range(p[0])) if p else ()


def skew_cells(outer, inner):
    inner = list(inner) + [0] * (len(outer) - len(inner))
    return [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]


def lr_bruteforce(lam, mu, nu) -> int:
    """Count LR tableaux of shape nu/lam and content mu.

    Cells are filled one at a time in reverse reading order (top to bottom,
    right to left); a partial filling is abandoned as soon as it breaks the
    row, column, lattice or content condition.
    """
    lam, mu, nu = tuple(x for x in lam if x), tuple(x for x in mu if x), tuple(x for x in nu if x)
    if sum(lam) + sum(mu) != sum(nu) or len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    order = []
    inner = list(lam) + [0] * (len(nu) - len(lam))
    for r in range(len(nu)):
        order.extend((r, c) for c in range(nu[r] - 1, inner[r] - 1, -1))
    cellset = set(order)
    t: dict = {}
    seen = [0] * (len(mu) + 1)

    def rec(pos):
        if pos == len(order):
            return 1
        r, c = order[pos]
        total = 0
        for x in range(1, len(mu) + 1):
            if seen[x] >= mu[x - 1]:
                continue
            if x > 1 and seen[x] + 1 > seen[x - 1]:
                continue
            if (r, c + 1) in cellset and t[(r, c + 1)] < x:
                continue
            if (r - 1, c) in cellset and t[(r - 1, c)] >= x:
                continue
            t[(r, c)] = x
            seen[x] += 1
            total += rec(pos + 1)
            seen[x] -= 1
            del t[(r, c)]
        return total

    return rec(0)


def ssyt(shape, nletters):
    """All semistandard tableaux of the shape with entries 0..nletters-1, as row lists."""
    shape = [x for x in shape if x]
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    out = []

    def rec(i, t):
        if i == len(cells):
            out.append(dict(t))
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = max(lo, t[(r, c - 1)])
        if r > 0:
            lo = max(lo, t[(r - 1, c)] + 1)
        for x in range(lo, nletters):
            t[(r, c)] = x
            rec(i + 1, t)
        t.pop((r, c), None)

    rec(0, {})
    return out


# ---------------------------------------------------------------------------
# Laurent characters
# ---------------------------------------------------------------------------


def add_into(acc, char, scale=1, shift=None):
    for e, c in char.items():
        if shift is not None:
            e = tuple(a + b for a, b in zip(e, shift))
        acc[e] = acc.get(e, 0) + scale * c
    return acc


def clean(char):
    return {e: c for e, c in char.items() if c}


def multiply(a, b):
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return clean(out)


def schur_char(shape, letters):
    """Character of S_shape of a space whose basis vectors have the given weights."""
    dim = len(letters[0]) if letters else 0
    out: dict = {}
    for t in ssyt(shape, len(letters)):
        e = [0] * dim
        for x in t.values():
            for j, v in enumerate(letters[x]):
                e[j] += v
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return out


def unit(rank):
    return tuple([1 if j == i else 0 for j in range(rank)] for i in range(rank))


def letters_for(kind, rank):
    """Torus weights of the defining representation: GL(rank), Sp(2 rank), SO(2 rank), SO(2 rank + 1)."""
    basis = [tuple(v) for v in unit(rank)]
    neg = [tuple(-x for x in v) for v in basis]
    if kind == "A":
        return basis
    if kind in ("C", "D"):
        return basis + neg
    if kind == "B":
        return basis + neg + [(0,) * rank]
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# Root data
# ---------------------------------------------------------------------------


def positive_roots(kind, m):
    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            v = [0] * m
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
            if kind != "A":
                v = [0] * m
                v[i], v[j] = 1, 1
                roots.append(tuple(v))
        if kind == "B":
            v = [0] * m
            v[i] = 1
            roots.append(tuple(v))
        if kind == "C":
            v = [0] * m
            v[i] = 2
            roots.append(tuple(v))
    return roots


def rho2(kind, m):
    """Twice the half-sum of positive roots."""
    out = [0] * m
    for a in positive_roots(kind, m):
        for i, x in enumerate(a):
            out[i] += x
    return tuple(out)


def _perm_sign(p):
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


@lru_cache(maxsize=None)
def weyl_group(kind, m):
    """Elements as (permutation, sign vector, determinant)."""
    out = []
    for p in permutations(range(m)):
        if kind == "A":
            out.append((p, (1,) * m, _perm_sign(p)))
            continue
        for signs in product((1, -1), repeat=m):
            flips = signs.count(-1)
            if kind == "D" and flips % 2:
                continue
            out.append((p, signs, _perm_sign(p) * (-1) ** flips))
    return tuple(out)


def act(w, v):
    p, signs, _ = w
    return tuple(signs[i] * v[p[i]] for i in range(len(v)))


def is_dominant(kind, lam):
    m = len(lam)
    if any(lam[i] < lam[i + 1] for i in range(m - 1)):
        return False
    if kind in ("B", "C") and m and lam[-1] < 0:
        return False
    if kind == "D" and m >= 2 and lam[-2] < abs(lam[-1]):
        return False
    return True


def decompose(char, kind, m):
    """Coefficients of the strictly dominant terms of the alternant of char * x^rho.

    For a W-invariant character these are its irreducible multiplicities; for
    the torus character of a bundle fibre they give the Euler characteristic.
    """
    r2 = rho2(kind, m)
    alt: dict = {}
    for e, c in char.items():
        e2 = tuple(2 * x + r for x, r in zip(e, r2))
        for w in weyl_group(kind, m):
            f = act(w, e2)
            alt[f] = alt.get(f, 0) + w[2] * c
    out = {}
    for f, c in alt.items():
        if not c:
            continue
        lam2 = tuple(a - b for a, b in zip(f, r2))
        if any(x % 2 for x in lam2):
            continue
        lam = tuple(x // 2 for x in lam2)
        if is_dominant(kind, lam) and _strictly_regular(kind, f):
            out[lam] = out.get(lam, 0) + c
    return clean(out)


def _strictly_regular(kind, f):
    m = len(f)
    if any(f[i] <= f[i + 1] for i in range(m - 1)):
        return False
    if kind in ("B", "C") and m and f[-1] <= 0:
        return False
    if kind == "D" and m >= 2 and f[-2] <= abs(f[-1]):
        return False
    return True


def weyl_character(kind, m, weight):
    """A_{weight+rho} / A_rho as a Laurent polynomial, for any integral weight.

    Divides the alternant by the factors (1 - x^-alpha) of the Weyl
    denominator one root at a time; each division is exact.
    """
    r2 = rho2(kind, m)
    num: dict = {}
    base = tuple(2 * x + r for x, r in zip(weight, r2))
    for w in weyl_group(kind, m):
        f = act(w, base)
        e2 = tuple(a - b for a, b in zip(f, r2))
        if any(x % 2 for x in e2):
            raise ValueError("weight not integral")
        e = tuple(x // 2 for x in e2)
        num[e] = num.get(e, 0) + w[2]
    poly = clean(num)
    for alpha in positive_roots(kind, m):
        poly = _divide_binomial(poly, alpha)
    return poly


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _divide_binomial(poly, alpha):
    """Q with Q * (1 - x^-alpha) = P; Q(e) = sum_{t >= 0} P(e + t alpha)."""
    if not poly:
        return {}
    lo = min(_dot(e, alpha) for e in poly)
    aa = _dot(alpha, alpha)
    cand = set()
    for e in poly:
        t = 0
        while _dot(e, alpha) - t * aa >= lo:
            cand.add(tuple(x - t * a for x, a in zip(e, alpha)))
            t += 1
    # running sums along each alpha-line, from the top of the line down
    acc: dict = {}
    for e in sorted(cand, key=lambda v: -_dot(v, alpha)):
        up = tuple(x + a for x, a in zip(e, alpha))
        acc[e] = poly.get(e, 0) + acc.get(up, 0)
    out = {e: c for e, c in acc.items() if c}
    # exactness: the quotient times the binomial gives back the input
    back = dict(out)
    for e, c in out.items():
        f = tuple(x - a for x, a in zip(e, alpha))
        back[f] = back.get(f, 0) - c
    assert clean(back) == clean(poly), "inexact division"
    return out


# ---------------------------------------------------------------------------
# Classical groups through characters
# ---------------------------------------------------------------------------


def group_data(kind, M):
    """(root type, rank) of Sp(M) or SO(M)."""
    if kind == "Sp":
        return "C", M // 2
    return ("B" if M % 2 else "D"), M // 2


def o_label_to_so(lam, M):
    """SO(M) highest weights in the restriction of the O(M) label (taken mod det)."""
    lam = tuple(x for x in lam if x)
    m = M // 2
    cols = conj(lam)
    if cols and cols[0] > m and not (M % 2 == 0 and cols[0] == m):
        # associated label: same SO restriction
        first = M - cols[0]
        cols = (first,) + cols[1:]
        lam = conj(tuple(sorted(cols, reverse=True)))
    w = tuple(lam) + (0,) * (m - len(lam))
    if M % 2 == 0 and m and w[-1]:
        return [w, w[:-1] + (-w[-1],)]
    return [w]


def irreducible_char(kind, M, lam):
    root, m = group_data(kind, M)
    if kind == "Sp":
        w = tuple(lam) + (0,) * (m - len(lam))
        return weyl_character(root, m, w)
    out: dict = {}
    for w in o_label_to_so(lam, M):
        add_into(out, weyl_character(root, m, w))
    return clean(out)


def restrict_oracle(kind, beta, M):
    """{dominant weight: mult} of S_beta(defining rep) restricted to Sp(M) or SO(M)."""
    root, m = group_data(kind, M)
    return decompose(schur_char(beta, letters_for(root, m)), root, m)


def nl_oracle(kind, mu, nu, M):
    root, m = group_data(kind, M)
    return decompose(multiply(irreducible_char(kind, M, mu), irreducible_char(kind, M, nu)), root, m)


def labels_to_weights(kind, M, reps):
    """Turn {label weight: mult} (Sp or O labels) into {dominant weight: mult}."""
    out = Counter()
    m = M // 2
    for lam, c in reps.items():
        if kind == "Sp":
            out[tuple(lam) + (0,) * (m - len(lam))] += c
        else:
            for w in o_label_to_so(lam, M):
                out[w] += c
    return dict(out)


def euler_line(kind, m, weight):
    """Euler characteristic of a line bundle on the full flag variety:
    {dominant weight: signed mult} from the Weyl character formula."""
    return decompose(weyl_character(kind, m, weight), kind, m)


# ---------------------------------------------------------------------------
# Homogeneous bundles from torus weights
# ---------------------------------------------------------------------------


def alternant_euler(char, kind, m):
    """Euler characteristic of the homogeneous bundle whose fibre has the given
    torus character: the fibre's weights straightened one by one through the
    alternant, with no Levi decomposition."""
    return decompose(char, kind, m)


def isotropic_bundle_euler(case, n, d, dprime, k, lam, comp):
    """Euler characteristic on the isotropic Grassmannian of n-planes of
    S_{lam^T}(R-perp) x (det R*)^k x S_[comp](R-perp/R).

    Coordinates: the first n for R* (R has weights -e_i), the rest for the
    torus of the middle symplectic/orthogonal space.
    """
    rank = n + d
    root = "C" if case == "symplectic" else ("B" if dprime else "D")
    letters = [tuple(-1 if j == i else 0 for j in range(rank)) for i in range(n)]
    mid = letters_for("C" if case == "symplectic" else ("B" if dprime else "D"), d) if d or dprime else []
    letters += [(0,) * n + v for v in mid]
    bundle = schur_char(conj(lam), letters) if lam else {(0,) * rank: 1}
    det = tuple([k] * n + [0] * d)
    bundle = {tuple(a + b for a, b in zip(e, det)): c for e, c in bundle.items()}
    mid_dim = 2 * d + dprime
    if mid_dim:
        kind = "Sp" if case == "symplectic" else "O"
        mchar = irreducible_char(kind, mid_dim, comp)
        mchar = {(0,) * n + e: c for e, c in mchar.items()}
        bundle = multiply(bundle, mchar)
    out = Counter(alternant_euler(bundle, root, rank))
    if case == "orthogonal" and mid_dim == 0 and n:
        flipped = {e[:-1] + (-e[-1],): c for e, c in bundle.items()}
        out.update(alternant_euler(flipped, root, rank))
    return clean(dict(out))


def flag_bundle_euler(n, m, d, k, l, olnu, lam, lam2):
    """Euler characteristic on Flag(n, n+d, V) (dim V = n+d+m) of
    (det R_n*)^k x S_olnu(Q*) x (det V/R_{n+d})^l x S_{lam^T}((V/R_n)*) x S_{lam2^T}(R_{n+d}).

    Coordinates: R_n* is e_1..e_n, Q* is e_{n+1}..e_{n+d}, (V/R_{n+d})* the rest.
    """
    N = n + d + m
    basis = [tuple(1 if j == i else 0 for j in range(N)) for i in range(N)]
    quot_dual = basis[n:]
    sub = [tuple(-x for x in v) for v in basis[:n + d]]
    char = schur_char(conj(lam), quot_dual) if lam else {(0,) * N: 1}
    char = multiply(char, schur_char(conj(lam2), sub) if lam2 else {(0,) * N: 1})
    if d:
        q = weyl_character("A", d, tuple(olnu))
        char = multiply(char, {(0,) * n + e + (0,) * m: c for e, c in q.items()})
    twist = tuple([k] * n + [0] * d + [-l] * m)
    char = {tuple(a + b for a, b in zip(e, twist)): c for e, c in char.items()}
    return decompose(char, "A", N)


# ---------------------------------------------------------------------------
# Howe duality on the torus
# ---------------------------------------------------------------------------


def howe_piece_oracle(case, n, N, k, lam, deg):
    """Degree-``deg`` piece of the isotypic module, computed on tori.

    For U symplectic of dim 2k (``case`` symplectic) or orthogonal of dim 2k
    (orthogonal, dim V = 2N even): take S_gamma(U) x Lambda(U x F) for each
    gamma of size deg with at most n rows, extract the [lam]-isotypic part for
    the group of U by the alternant, twist by det(F)^-k and decompose the
    remaining F-torus character for the group of V = F + F*.

    Returns {(E-weight with the (k^n) twist, V highest weight): mult}.
    """
    uroot = "C" if case == "symplectic" else "D"
    vroot = "C" if case == "symplectic" else "D"
    uletters = letters_for(uroot, k) if k else []
    rank = k + N
    # Lambda(U x F): product over (u, f) of (1 + x^u y^f)
    ext = {(0,) * rank: 1}
    for u in uletters:
        for a in range(N):
            y = tuple(1 if j == a else 0 for j in range(N))
            factor = {(0,) * rank: 1, tuple(u) + y: 1}
            ext = multiply(ext, factor)
    out = Counter()
    rho_u = rho2(uroot, k) if k else ()
    target = tuple(lam) + (0,) * (k - len(lam))
    targets = [target]
    for gamma in _partitions(deg, min(n, 2 * k) if k else 0):
        if k == 0 and gamma:
            continue
        su = schur_char(gamma, uletters) if gamma else {(0,) * k: 1}
        su = {e + (0,) * N: c for e, c in su.items()}
        full = multiply(su, ext)
        # isotypic extraction: coefficient of x^{lam + rho} in char * A_rho (U variables)
        fchar: dict = {}
        for e, c in full.items():
            ue, fe = e[:k], e[k:]
            for w in (weyl_group(uroot, k) if k else [((), (), 1)]):
                shifted = tuple(2 * a + b for a, b in zip(ue, act(w, rho_u))) if k else ()
                lam2 = tuple(a - b for a, b in zip(shifted, rho_u)) if k else ()
                if any(x % 2 for x in lam2):
                    continue
                lw = tuple(x // 2 for x in lam2)
                if lw in targets and (not k or _strictly_regular(uroot, shifted)):
                    key = tuple(x - k for x in fe)
                    fchar[key] = fchar.get(key, 0) + w[2] * c
        fchar = clean(fchar)
        if not fchar:
            continue
        for v, c in decompose(fchar, vroot, N).items():
            e = tuple(k + x for x in tuple(gamma) + (0,) * (n - len(gamma)))
            out[(e, v)] += c
    return clean(dict(out))


def _partitions(total, max_len):
    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    return list(rec(total, total, max_len))


# ---------------------------------------------------------------------------
# Koszul complex over the polynomial ring
# ---------------------------------------------------------------------------


def koszul_euler_terms(n, f_dim, module_pieces, exterior, max_i, g0):
    """Signed Euler characteristic of Lambda(E x F) x M in degree g0 + i, for i <= max_i.

    ``module_pieces[j]`` is {(E-weight, F-weight): mult}; ``exterior(p)`` gives the
    GL(n) x GL(f_dim) pieces {(E-shape, F-shape): mult} of Lambda^p(E x F);
    products are taken by Schur-polynomial multiplication on the torus.
    """
    out = {}
    ecoords, fcoords = [tuple(v) for v in unit(n)], [tuple(v) for v in unit(f_dim)]
    for i in range(max_i + 1):
        acc: dict = {}
        for p in range(i + 1):
            sign = -1 if p % 2 else 1
            for (ew, fw), c in module_pieces.get(g0 + i - p, {}).items():
                mchar = _pair_char(weyl_character("A", n, ew), weyl_character("A", f_dim, fw))
                for (es, fs), c2 in exterior(p).items():
                    xchar = _pair_char(schur_char(es, ecoords) if es else {(0,) * n: 1},
                                       schur_char(fs, fcoords) if fs else {(0,) * f_dim: 1})
                    add_into(acc, multiply(mchar, xchar), sign * c * c2)
        acc = clean(acc)
        out[i] = _decompose_pair(acc, n, f_dim)
    return out


def _pair_char(a, b):
    return {ea + eb: ca * cb for ea, ca in a.items() for eb, cb in b.items()}


def _decompose_pair(char, n, f):
    """Decompose a GL(n) x GL(f) character."""
    first = {}
    for e, c in char.items():
        first.setdefault(e[n:], {})[e[:n]] = c
    # decompose in the first factor for each fixed second exponent, then the second
    inter: dict = {}
    for fe, part in first.items():
        for lam, c in decompose(part, "A", n).items():
            inter.setdefault(lam, {})[fe] = c
    out = {}
    for lam, part in inter.items():
        for mu, c in decompose(clean(part), "A", f).items():
            out[(lam, mu)] = c
    return clean(out)


# ---------------------------------------------------------------------------
# Universal characters (determinantal and skew-Schur forms)
# ---------------------------------------------------------------------------


def _h(p, letters):
    if p < 0:
        return {}
    return schur_char((p,) if p else (), letters)


def _e(p, letters):
    if p < 0 or p > len(letters):
        return {}
    return schur_char((1,) * p, letters)


def _det(matrix):
    n = len(matrix)
    out: dict = {}
    for p in permutations(range(n)):
        term = None
        for i in range(n):
            entry = matrix[i][p[i]]
            if not entry:
                term = {}
                break
            term = entry if term is None else multiply(term, entry)
        if term:
            add_into(out, term, _perm_sign(p))
    return clean(out)


def _jt(parts, letters, gen, rank):
    L = len(parts)
    if L == 0:
        return {(0,) * rank: 1}
    mat = []
    for i in range(L):
        row = []
        for j in range(L):
            entry = dict(gen(parts[i] - i + j, letters))
            add_into(entry, gen(parts[i] - i - j - 2, letters), -1)
            row.append(clean(entry))
        mat.append(row)
    return _det(mat)


def universal_sp_char(lam, m):
    """det(e_{c_i - i + j} - e_{c_i - i - j}) over the columns c of lam, in the
    letters of Sp(2m); lam may have more than m rows."""
    return _jt(conj(lam), letters_for("C", m), _e, m)


def universal_o_char(lam, M):
    """det(h_{lam_i - i + j} - h_{lam_i - i - j}) in the letters of SO(M); agrees
    with the O(M) character on the SO torus, so it sees labels only mod det."""
    kind, m = group_data("O", M)
    return _jt(tuple(lam), letters_for(kind, m), _h, m)


def _skew_schur(outer, inner, letters):
    out: dict = {}
    size = sum(outer) - sum(inner)
    for d in _partitions(size, len(outer)):
        c = lr_bruteforce(inner, d, outer)
        if c:
            add_into(out, schur_char(d, letters), c)
    return out


def universal_gl_char(alpha, beta, k):
    """Mixed tensor character sum_g (-1)^|g| s_{alpha/g}(x) s_{beta/g'}(1/x) in k variables."""
    letters = [tuple(v) for v in unit(k)]
    inv = [tuple(-x for x in v) for v in letters]
    out: dict = {}
    for s in range(min(sum(alpha), sum(beta)) + 1):
        for g in _partitions(s, len(alpha)):
            gc = conj(g)
            left = _skew_schur(tuple(alpha), tuple(g), letters)
            right = _skew_schur(tuple(beta), gc, inv)
            if left and right:
                add_into(out, multiply(left, right), (-1) ** s)
    return clean(out)


# ---------------------------------------------------------------------------
# GL(n) x GL(m) characters
# ---------------------------------------------------------------------------


def _vandermonde(total, start, size):
    """prod_{i<j} (x_i - x_j) over the coordinates start..start+size-1."""
    out = {(0,) * total: 1}
    for i in range(start, start + size):
        for j in range(i + 1, start + size):
            ei = tuple(1 if t == i else 0 for t in range(total))
            ej = tuple(1 if t == j else 0 for t in range(total))
            out = multiply(out, {ei: 1, ej: -1})
    return out


def decompose_gl_pair(char, n, m):
    """{(alpha, beta): mult} for a GL(n) x GL(m) character on coordinates (x | y)."""
    total = n + m
    prod_ = multiply(multiply(char, _vandermonde(total, 0, n)), _vandermonde(total, n, m))
    out = {}
    for e, c in prod_.items():
        a, b = e[:n], e[n:]
        if all(a[i] > a[i + 1] for i in range(n - 1)) and all(b[i] > b[i + 1] for i in range(m - 1)):
            alpha = tuple(a[i] - (n - 1 - i) for i in range(n))
            beta = tuple(b[i] - (m - 1 - i) for i in range(m))
            out[(alpha, beta)] = c
    return {k: v for k, v in out.items() if v}


def hook_schur_char(lam, n, m):
    """S_lam(E|F) with E even of dim n, F odd of dim m, on coordinates (x | y):
    sum_{mu, nu} c^lam_{mu nu} s_mu(E) s_{nu'}(F)."""
    ex = [tuple(1 if t == i else 0 for t in range(n + m)) for i in range(n)]
    fy = [tuple(1 if t == n + j else 0 for t in range(n + m)) for j in range(m)]
    out: dict = {}
    size = sum(lam)
    for s in range(size + 1):
        for mu in _partitions(s, n):
            for nu in _partitions(size - s, size):
                c = lr_bruteforce(mu, nu, tuple(lam))
                if c:
                    add_into(out, multiply(schur_char(mu, ex), schur_char(conj(nu), fy)), c)
    return clean(out)


def odd_homology_euler(lam, n, m, max_i):
    """sum_{i <= max_i} (-1)^i Sym^i(E x F*) x S_lam(E|F), decomposed; the returned
    dict is keyed by (GL(n) weight, GL(m) weight) and trusted only in E-degree
    at most |lam| (a fixed isotypic piece never needs more terms than that)."""
    total = n + m
    letters = []
    for a in range(n):
        for b in range(m):
            letters.append(tuple(1 if t == a else (-1 if t == n + b else 0) for t in range(total)))
    base = hook_schur_char(lam, n, m)
    out: dict = {}
    for i in range(max_i + 1):
        add_into(out, multiply(schur_char((i,) if i else (), letters), base), (-1) ** i)
    return decompose_gl_pair(clean(out), n, m)


# ---------------------------------------------------------------------------
# Products of groups and coordinate rings
# ---------------------------------------------------------------------------


def decompose_blocks(char, blocks):
    """Decompose a character of a product of groups.

    ``blocks`` lists (root type, rank) in coordinate order.  For an invariant
    character, the multiplicity of the irreducible with highest weight w is
    the coefficient of x^w in char * prod_{alpha > 0} (1 - x^-alpha), read at
    dominant w only.
    """
    total = sum(r for _k, r in blocks)
    out = dict(char)
    start = 0
    for kind, rank in blocks:
        for alpha in positive_roots(kind, rank):
            full = (0,) * start + alpha + (0,) * (total - start - rank)
            out = multiply(out, {(0,) * total: 1, tuple(-x for x in full): -1})
        start += rank
    res = {}
    for e, c in out.items():
        start = 0
        ok = True
        for kind, rank in blocks:
            if not is_dominant(kind, e[start:start + rank]):
                ok = False
                break
            start += rank
        if ok and c:
            res[e] = c
    return res


def coordinate_ring_oracle(case, n, N, m, max_deg):
    """Degree pieces of Sym(degree-one space) / (quadrics), as Euler
    characteristics of the Koszul complex on the quadrics; keyed by the
    concatenated highest weight over the blocks.

    symplectic: blocks (GL(n), Sp(N)) with N even, quadrics Lambda^2 E.
    orthogonal: blocks (GL(n), SO(N)), quadrics Sym^2 E.
    complexes: blocks (GL(n), GL(N) on V*, GL(m) on F*), quadrics E x F*.
    """
    if case == "complexes":
        total = n + N + m
        basis = [tuple(1 if t == i else 0 for t in range(total)) for i in range(total)]
        e, z, g = basis[:n], basis[n:n + N], basis[n + N:]
        neg = lambda v: tuple(-x for x in v)
        add = lambda a, b: tuple(x + y for x, y in zip(a, b))
        letters = [add(a, b) for a in e for b in z] + [add(neg(b), c) for b in z for c in g]
        quadrics = [add(a, c) for a in e for c in g]
        blocks = [("A", n), ("A", N), ("A", m)]
    else:
        kind = "C" if case == "symplectic" else ("B" if N % 2 else "D")
        rank = N // 2
        total = n + rank
        vl = letters_for(kind, rank)
        letters = [tuple(1 if t == a else 0 for t in range(n)) + v for a in range(n) for v in vl]
        if case == "symplectic":
            pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        else:
            pairs = [(a, b) for a in range(n) for b in range(a, n)]
        quadrics = [tuple((t == a) + (t == b) for t in range(n)) + (0,) * rank for a, b in pairs]
        blocks = [("A", n), (kind, rank)]
    out = {}
    for j in range(max_deg + 1):
        char: dict = {}
        for p in range(j // 2 + 1):
            if p > len(quadrics):
                break
            ext = schur_char((1,) * p, quadrics) if p else {(0,) * total: 1}
            sym = schur_char((j - 2 * p,) if j - 2 * p else (), letters)
            if ext and sym:
                add_into(char, multiply(ext, sym), (-1) ** p)
        out[j] = decompose_blocks(clean(char), blocks)
    return out
