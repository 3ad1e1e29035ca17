"""Exact root-system combinatorics for the simple Lie types A through G.

Weights are integer tuples in fundamental-weight (Dynkin) coordinates: the
i-th entry of a weight is its pairing with the i-th simple coroot.  Simple
roots are then the rows of the Cartan matrix, and a simple reflection is
``w - w[i] * alpha_i``, all in exact integer arithmetic.

Node numbering is Bourbaki's, so for G2 the first node is the *short*
simple root: weight (1, 0) is the 7-dimensional representation and (0, 1)
the 14-dimensional adjoint.  The affine node is indexed 0 everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError

Weight = tuple  # integer tuple in Dynkin coordinates

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class LieType:
    """A simple Lie type, e.g. series 'G' at rank 2."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _RANK_RANGE:
            raise InputError(f"unknown series {self.series!r}")
        lo, hi = _RANK_RANGE[self.series]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            raise InputError(f"invalid rank {self.rank} for series {self.series}")

    @classmethod
    def parse(cls, name: str) -> "LieType":
        """Parse concatenated series-plus-rank syntax such as 'G2' or 'E7'."""
        name = name.strip()
        if len(name) < 2 or not name[0].isalpha():
            raise InputError(f"cannot parse group name {name!r}")
        try:
            return cls(name[0].upper(), int(name[1:]))
        except ValueError as exc:
            raise InputError(f"cannot parse group name {name!r}") from exc

    def __str__(self):
        return f"{self.series}{self.rank}"


def _cartan_matrix(series: str, n: int) -> list[list[int]]:
    """Bourbaki Cartan matrix with entry [i][j] = <alpha_i, alpha_j^vee>."""
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if series in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if series == "B" and n >= 2:
            bond(n - 2, n - 1, -2, -1)   # alpha_n short
        if series == "C" and n >= 2:
            bond(n - 2, n - 1, -1, -2)   # alpha_n long
    elif series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif series == "E":
        # chain 1-3-4-5-..., node 2 attached to node 4
        chain = [0] + list(range(2, n))
        for u, v in zip(chain, chain[1:]):
            bond(u, v)
        bond(1, 3)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)               # alpha_3, alpha_4 short
        bond(2, 3)
    elif series == "G":
        bond(0, 1, -1, -3)               # alpha_1 short
    return a


_WEYL_ORDER_EXC = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                   ("F", 4): 1152, ("G", 2): 12}


def weyl_order_of_type(series: str, rank: int) -> int:
    import math
    if series == "A":
        return math.factorial(rank + 1)
    if series in ("B", "C"):
        return (1 << rank) * math.factorial(rank)
    if series == "D":
        return (1 << (rank - 1)) * math.factorial(rank)
    return _WEYL_ORDER_EXC[(series, rank)]


def _mat_inverse(a):
    n = len(a)
    m = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(i == j) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Complete Cartan, Weyl and alcove data for one simple type.

    Immutable after construction; instances are cached per LieType and may
    be shared freely across threads.  ``marks`` and ``comarks`` include the
    affine node first, so both start with 1.
    """

    lie_type: LieType
    cartan: tuple                 # rows are the simple roots
    cartan_inv: tuple             # exact rational inverse
    simple_roots: tuple
    positive_roots: tuple         # weight coordinates
    positive_root_coords: tuple   # coefficients over the simple roots
    rho: Weight
    highest_root: Weight
    affine_root: Weight
    marks: tuple
    comarks: tuple
    dual_coxeter: int
    form: tuple                   # F[i][j] = (omega_i, omega_j), F(theta,theta)=2
    root_lengths: tuple           # (alpha_i, alpha_i)/2, equals 1 on long roots
    weyl_order: int

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def level(self, w) -> int:
        """Pairing with the highest coroot: sum of comark_i * w_i."""
        return sum(c * x for c, x in zip(self.comarks[1:], w))

    def reflect(self, i: int, w):
        """Simple reflection at nonaffine node i (1-based)."""
        ci = w[i - 1]
        if ci == 0:
            return tuple(w)
        root = self.simple_roots[i - 1]
        return tuple(x - ci * r for x, r in zip(w, root))

    def form_pair(self, v, w) -> Fraction:
        """Exact invariant inner product of two weight vectors."""
        total = Fraction(0)
        for i, vi in enumerate(v):
            if vi:
                row = self.form[i]
                total += vi * sum(wj * row[j] for j, wj in enumerate(w) if wj)
        return total

    def is_dominant(self, w) -> bool:
        return all(x >= 0 for x in w)

    def __repr__(self):
        return f"RootSystem({self.lie_type})"


def _positive_roots(cartan):
    n = len(cartan)
    simple = [tuple(cartan[i]) for i in range(n)]
    unit = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known = {unit[i]: simple[i] for i in range(n)}
    layer = list(unit)
    while layer:
        nxt = []
        for rc in layer:
            wt = known[rc]
            for i in range(n):
                # alpha_i-string through wt: p steps down already known
                p = 0
                down = list(rc)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in known:
                        break
                    p += 1
                if p - wt[i] >= 1:
                    up = list(rc)
                    up[i] += 1
                    key = tuple(up)
                    if key not in known:
                        known[key] = tuple(a + b for a, b in zip(wt, simple[i]))
                        nxt.append(key)
        layer = nxt
    items = sorted(known.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    coords = tuple(k for k, _ in items)
    weights = tuple(v for _, v in items)
    return weights, coords


def _symmetrizer(cartan):
    """Ratios (alpha_i, alpha_i)/2 normalized so long roots give 1."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                stack.append(j)
    top = max(d)
    return tuple(x / top for x in d)


@lru_cache(maxsize=None)
def _build(series: str, rank: int) -> RootSystem:
    t = LieType(series, rank)
    n = rank
    cartan = _cartan_matrix(series, n)
    cartan_t = tuple(tuple(row) for row in cartan)
    cartan_inv = _mat_inverse(cartan)
    d = _symmetrizer(cartan)
    # form on fundamental weights: F = A^{-1} diag(d)
    form = tuple(tuple(cartan_inv[i][j] * d[j] for j in range(n)) for i in range(n))
    pos_w, pos_c = _positive_roots(cartan)

    def norm2(w):
        return sum(w[i] * form[i][j] * w[j] for i in range(n) for j in range(n))

    dominant = [(w, c) for w, c in zip(pos_w, pos_c) if all(x >= 0 for x in w)]
    theta, theta_c = max(dominant, key=lambda wc: norm2(wc[0]))
    if norm2(theta) != 2:
        raise AssertionError("highest-root normalization failed")
    marks = (1,) + tuple(theta_c)
    comarks = [Fraction(1)] + [m * d[i] for i, m in enumerate(theta_c)]
    if any(c.denominator != 1 for c in comarks):
        raise AssertionError("comarks must be integers")
    comarks = tuple(int(c) for c in comarks)
    hvee = sum(comarks)
    rs = RootSystem(
        lie_type=t,
        cartan=cartan_t,
        cartan_inv=cartan_inv,
        simple_roots=cartan_t,
        positive_roots=pos_w,
        positive_root_coords=pos_c,
        rho=(1,) * n,
        highest_root=theta,
        affine_root=tuple(-x for x in theta),
        marks=marks,
        comarks=comarks,
        dual_coxeter=hvee,
        form=form,
        root_lengths=d,
        weyl_order=weyl_order_of_type(series, rank),
    )
    return rs


def build_root_system(t) -> RootSystem:
    """Construct (or fetch the cached) root system for a Lie type.

    Accepts a LieType or a string like "G2".  Raises InputError when the
    rank is invalid for the series.
    """
    if isinstance(t, str):
        t = LieType.parse(t)
    return _build(t.series, t.rank)


def _check_weight(rs: RootSystem, w):
    if len(w) != rs.rank:
        raise InputError(f"weight length {len(w)} does not match rank {rs.rank}")
    return tuple(w)


def weyl_orbit(rs: RootSystem, w) -> list:
    """Full Weyl orbit of a weight, sorted for reproducibility."""
    w = _check_weight(rs, w)
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(1, rs.rank + 1):
                u = rs.reflect(i, v)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen)


def weyl_orbit_signed(rs: RootSystem, w) -> list:
    """Orbit of a strictly dominant weight with determinant signs."""
    w = _check_weight(rs, w)
    if not all(x > 0 for x in w):
        raise InputError("signed orbit requires a strictly dominant weight")
    seen = {w: 1}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            s = seen[v]
            for i in range(1, rs.rank + 1):
                u = rs.reflect(i, v)
                if u not in seen:
                    seen[u] = -s
                    nxt.append(u)
        frontier = nxt
    return sorted(seen.items())


def dominant_reduce(rs: RootSystem, w):
    """The dominant representative of the Weyl orbit of w."""
    v = _check_weight(rs, w)
    while True:
        for i in range(1, rs.rank + 1):
            if v[i - 1] < 0:
                v = rs.reflect(i, v)
                break
        else:
            return v


def shifted_dominant_reduce(rs: RootSystem, w):
    """Rho-shifted reduction to the dominant chamber.

    Returns None when w + rho lies on a reflection wall, otherwise the pair
    (mu, sign) with mu + rho the dominant representative of w + rho and sign
    the determinant of the Weyl element used.
    """
    v = tuple(x + 1 for x in _check_weight(rs, w))
    sign = 1
    while True:
        for i in range(1, rs.rank + 1):
            if v[i - 1] < 0:
                v = rs.reflect(i, v)
                sign = -sign
                break
        else:
            break
    if any(x == 0 for x in v):
        return None
    return tuple(x - 1 for x in v), sign


def alcove_weights(rs: RootSystem, k: int) -> list:
    """Dominant weights of level at most k, in lexicographic order."""
    if k < 0:
        raise InputError("level must be nonnegative")
    out = []
    comarks = rs.comarks[1:]

    def rec(prefix, budget):
        if len(prefix) == rs.rank:
            out.append(tuple(prefix))
            return
        c = comarks[len(prefix)]
        for v in range(budget // c + 1):
            rec(prefix + [v], budget - c * v)

    rec([], k)
    return sorted(out)


@lru_cache(maxsize=None)
def _dominant_multiplicities(rs: RootSystem, highest: Weight) -> dict:
    """Freudenthal multiplicities of the dominant weights of one irrep."""
    n = rs.rank
    lam = highest
    rho = rs.rho
    lam_rho = tuple(x + 1 for x in lam)
    norm_top = rs.form_pair(lam_rho, lam_rho)
    # box bounds for the simple-root coefficients of lam - mu
    bounds = []
    for j in range(n):
        pairing = sum(lam[i] * rs.form[i][j] for i in range(n))
        bounds.append(int(pairing / rs.root_lengths[j]))
    candidates = []
    cart = rs.cartan
    # box walk keeping mu = lam - sum c_j alpha_j exact at every node
    stack = [(0, (), list(lam))]
    while stack:
        j, coeffs, mu = stack.pop()
        if j == n:
            if all(x >= 0 for x in mu):
                candidates.append((sum(coeffs), coeffs, tuple(mu)))
            continue
        cur = mu
        for c in range(bounds[j] + 1):
            stack.append((j + 1, coeffs + (c,), list(cur)))
            cur = [x - r for x, r in zip(cur, cart[j])]
    candidates.sort()
    mults = {}
    pos = list(zip(rs.positive_roots, rs.positive_root_coords))
    for height, coeffs, mu in candidates:
        if height == 0:
            mults[mu] = 1
            continue
        total = Fraction(0)
        for alpha, alpha_c in pos:
            j = 1
            while True:
                cc = tuple(a - j * b for a, b in zip(coeffs, alpha_c))
                if any(x < 0 for x in cc):
                    break
                nu = tuple(a + j * b for a, b in zip(mu, alpha))
                m = mults.get(dominant_reduce(rs, nu), 0)
                if m:
                    total += m * rs.form_pair(nu, alpha)
                j += 1
        mu_rho = tuple(x + 1 for x in mu)
        den = norm_top - rs.form_pair(mu_rho, mu_rho)
        val = 2 * total / den
        if val.denominator != 1 or val < 0:
            raise AssertionError("Freudenthal recursion produced a bad value")
        if val:
            mults[mu] = int(val)
    return mults


def weight_multiplicity(rs: RootSystem, highest, mu) -> int:
    """Multiplicity of the weight mu in the irrep with the given highest weight."""
    highest = _check_weight(rs, highest)
    mu = _check_weight(rs, mu)
    if not rs.is_dominant(highest):
        raise InputError("highest weight must be dominant")
    diff = tuple(a - b for a, b in zip(highest, mu))
    coeffs = [sum(diff[i] * rs.cartan_inv[i][j] for i in range(rs.rank))
              for j in range(rs.rank)]
    if any(c.denominator != 1 or c < 0 for c in coeffs):
        return 0
    dom = dominant_reduce(rs, mu)
    return _dominant_multiplicities(rs, highest).get(dom, 0)


@lru_cache(maxsize=None)
def full_weights(rs: RootSystem, highest: Weight) -> dict:
    """Every weight of an irrep with its multiplicity."""
    out = {}
    for mu, m in _dominant_multiplicities(rs, highest).items():
        for v in weyl_orbit(rs, mu):
            out[v] = m
    return out


def weyl_dimension(rs: RootSystem, highest) -> int:
    """Dimension via the product formula over positive roots."""
    highest = _check_weight(rs, highest)
    if not rs.is_dominant(highest):
        raise InputError("highest weight must be dominant")
    lam_rho = tuple(x + 1 for x in highest)
    dim = Fraction(1)
    for alpha in rs.positive_roots:
        dim *= rs.form_pair(lam_rho, alpha) / rs.form_pair(rs.rho, alpha)
    if dim.denominator != 1:
        raise AssertionError("dimension formula produced a non-integer")
    return int(dim)
