"""Affine-Weyl invariant modules attached to faces of the level-k alcove.

A face is a proper subset S of the affine Dynkin nodes {0, 1, ..., n}.  Its
reflection group at level k is generated by the simple reflections for the
nonaffine nodes of S and, when 0 lies in S, the reflection in the wall
where the pairing with the highest coroot equals k.  The module is spanned
by labels mu whose shift mu + rho_S lands strictly inside the fundamental
chamber, rho_S being the half sum of the positive roots of the face
subsystem.  rho_S can be half-integral (single short-root faces), so all
chamber walks run on doubled integer coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InputError, InternalLimitError
from .intlinalg import ZEchelon
from .repring import VirtualCharacter
from .rootdata import (RootSystem, alcove_weights, full_weights,
                       weyl_order_of_type)


def face_subset(rs: RootSystem, nodes) -> tuple:
    """Validate and canonicalize a subset of the affine Dynkin nodes."""
    nodes = tuple(sorted(set(nodes)))
    for x in nodes:
        if not 0 <= x <= rs.rank:
            raise InputError(f"node {x} outside 0..{rs.rank}")
    if len(nodes) == rs.rank + 1:
        raise InputError("the full affine diagram is not a face")
    return nodes


def _node_root(rs: RootSystem, i: int):
    return rs.affine_root if i == 0 else rs.simple_roots[i - 1]


@lru_cache(maxsize=None)
def subsystem_positive_roots(rs: RootSystem, subset: tuple) -> tuple:
    """Positive roots of the face subsystem, in its own simple system."""
    simples = {i: _node_root(rs, i) for i in subset}
    all_roots = set(rs.positive_roots) | {tuple(-x for x in w) for w in rs.positive_roots}
    found = set(simples.values())
    frontier = list(found)
    while frontier:
        nxt = []
        for r in frontier:
            for s in simples.values():
                cand = tuple(a + b for a, b in zip(r, s))
                if cand in all_roots and cand not in found:
                    found.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def rho2(rs: RootSystem, subset: tuple) -> tuple:
    """Twice the half sum of the face subsystem's positive roots (integral)."""
    total = [0] * rs.rank
    for r in subsystem_positive_roots(rs, subset):
        for i, x in enumerate(r):
            total[i] += x
    return tuple(total)


def rho_S(rs: RootSystem, subset) -> tuple:
    """Half sum of the positive roots of the face centralizer.

    Expressed in ambient weight coordinates; entries are exact rationals
    and can be half-integral.
    """
    subset = face_subset(rs, subset)
    return tuple(Fraction(x, 2) for x in rho2(rs, subset))


def twist_order(rs: RootSystem, subset) -> int:
    """gcd of the comarks over the complement of the face subset."""
    subset = face_subset(rs, subset)
    complement = [i for i in range(rs.rank + 1) if i not in subset]
    g = 0
    for i in complement:
        g = gcd(g, rs.comarks[i])
    return g


def _pairing(rs, i: int, j: int) -> int:
    """Cartan pairing of affine-diagram nodes i over the coroot of j."""
    root = _node_root(rs, i)
    if j == 0:
        return -rs.level(root)
    return root[j - 1]


def classify_centralizer(rs: RootSystem, subset) -> tuple:
    """Irreducible component types of the face subsystem, largest first."""
    subset = face_subset(rs, subset)
    if not subset:
        return ()
    lengths = {i: Fraction(1) if i == 0 else rs.root_lengths[i - 1] for i in subset}
    adj = {i: [] for i in subset}
    for i in subset:
        for j in subset:
            if i != j and _pairing(rs, i, j) != 0:
                adj[i].append(j)
    seen = set()
    comps = []
    for start in subset:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    types = [_classify_component(rs, comp, adj, lengths) for comp in comps]
    return tuple(sorted(types, key=lambda t: (-t[1], t[0])))


def _classify_component(rs, comp, adj, lengths):
    r = len(comp)
    if r == 1:
        return ("A", 1)
    bonds = [_pairing(rs, u, v) * _pairing(rs, v, u)
             for u in comp for v in adj[u] if u < v]
    if 3 in bonds:
        return ("G", 2)
    if all(b == 1 for b in bonds):
        degrees = {u: len(adj[u]) for u in comp}
        if max(degrees.values()) <= 2:
            return ("A", r)
        hub = next(u for u, d in degrees.items() if d == 3)
        arms = []
        for v in adj[hub]:
            length, prev, cur = 1, hub, v
            while True:
                ahead = [w for w in adj[cur] if w != prev]
                if not ahead:
                    break
                prev, cur = cur, ahead[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[1] == 1:
            return ("D", r)
        return ("E", r)
    longest = max(lengths[u] for u in comp)
    shorts = sum(1 for u in comp if lengths[u] < longest)
    if r == 2:
        return ("B", 2)
    if shorts == 2 and r == 4 and shorts != r - 1:
        return ("F", 4)
    if shorts == 1:
        return ("B", r)
    if shorts == r - 1:
        return ("C", r)
    raise AssertionError(f"unclassifiable component {comp}")


def centralizer_type_string(types) -> str:
    if not types:
        return "T"
    return "+".join(f"{s}{r}" for s, r in types)


def centralizer_weyl_order(types) -> int:
    order = 1
    for s, r in types:
        order *= weyl_order_of_type(s, r)
    return order


@dataclass(frozen=True)
class CentralizerInfo:
    subset: tuple
    centralizer_type: str
    weyl_order: int
    module_rank: int
    twist_order: int

    def to_json_dict(self):
        return {"subset": list(self.subset), "centralizer_type": self.centralizer_type,
                "twist_order": self.twist_order, "module_rank": self.module_rank,
                "weyl_order": self.weyl_order}


def centralizer_info(rs: RootSystem, subset) -> CentralizerInfo:
    subset = face_subset(rs, subset)
    types = classify_centralizer(rs, subset)
    worder = centralizer_weyl_order(types)
    if rs.weyl_order % worder:
        raise AssertionError("centralizer Weyl order must divide the full order")
    return CentralizerInfo(subset=subset,
                           centralizer_type=centralizer_type_string(types),
                           weyl_order=worder,
                           module_rank=rs.weyl_order // worder,
                           twist_order=twist_order(rs, subset))


def census(rs: RootSystem) -> list:
    """Every proper face whose representation module is genuinely twisted.

    One entry per subset; the twist order is the gcd of the complementary
    comarks, and entries exist exactly when that gcd exceeds 1.
    """
    out = []
    n = rs.rank
    for mask in range(2 ** (n + 1) - 1):
        subset = tuple(i for i in range(n + 1) if mask >> i & 1)
        if twist_order(rs, subset) > 1:
            out.append(centralizer_info(rs, subset))
    out.sort(key=lambda e: (-e.twist_order, len(e.subset), e.subset))
    return out


# ---------------------------------------------------------------------------
# chamber reduction on doubled coordinates

def _beta2(rs, subset, w):
    r2 = rho2(rs, subset)
    return tuple(2 * x + y for x, y in zip(w, r2))


def regularize_affine(rs: RootSystem, subset, k: int, w):
    """Reduce w + rho_S into the fundamental chamber of the face group.

    Returns None when w + rho_S lies on a reflection wall, otherwise the
    pair (label, sign) with label + rho_S strictly inside the chamber and
    sign the determinant of the linear part of the group element used.
    """
    subset = face_subset(rs, subset)
    beta = _beta2(rs, subset, w)
    linear = [i for i in subset if i != 0]
    affine = 0 in subset
    theta = rs.highest_root
    sign = 1
    limit = 2 * len(subsystem_positive_roots(rs, subset)) + 16
    for _ in range(limit):
        for i in linear:
            if beta[i - 1] < 0:
                beta = rs.reflect(i, beta)
                sign = -sign
                break
        else:
            if affine:
                lev = rs.level(beta)
                if lev > 2 * k:
                    beta = tuple(x + (2 * k - lev) * t for x, t in zip(beta, theta))
                    sign = -sign
                    continue
                if lev == 2 * k:
                    return None
            if any(beta[i - 1] == 0 for i in linear):
                return None
            r2 = rho2(rs, subset)
            label = []
            for x, y in zip(beta, r2):
                if (x - y) % 2:
                    raise AssertionError("label is not an integral weight")
                label.append((x - y) // 2)
            return tuple(label), sign
    raise InternalLimitError(
        f"chamber walk exceeded {limit} reflections for {w} on face {subset}")


def is_valid_label(rs: RootSystem, subset, k: int, mu) -> bool:
    subset = face_subset(rs, subset)
    beta = _beta2(rs, subset, mu)
    for i in subset:
        if i != 0 and beta[i - 1] <= 0:
            return False
    if 0 in subset and rs.level(beta) >= 2 * k:
        return False
    return True


def enumerate_labels(rs: RootSystem, subset, k: int, bound: int) -> list:
    """Truncated label window for one face module.

    Coordinates are capped at the bound.  Faces containing the affine node
    have labels bounded above in level, so the window keeps the slab of
    depth bound below the top; for the other faces the window is the
    symmetric level band.
    """
    subset = face_subset(rs, subset)
    if 0 in subset:
        lo, hi = k - bound, k
    else:
        lo, hi = -bound, bound
    out = []

    def rec(prefix):
        if len(prefix) == rs.rank:
            mu = tuple(prefix)
            if lo <= rs.level(mu) <= hi and is_valid_label(rs, subset, k, mu):
                out.append(mu)
            return
        for v in range(-bound, bound + 1):
            rec(prefix + [v])

    rec([])
    return sorted(out, key=lambda m: (rs.level(m), m))


class TwistedModuleElement:
    """Integer combination of chamber labels for one face and level."""

    __slots__ = ("subset", "level", "terms")

    def __init__(self, subset, level, terms=None):
        self.subset = tuple(subset)
        self.level = level
        self.terms = {w: c for w, c in dict(terms or {}).items() if c}

    @classmethod
    def label(cls, rs, subset, level, mu):
        subset = face_subset(rs, subset)
        mu = tuple(mu)
        if not is_valid_label(rs, subset, level, mu):
            raise InputError(f"{mu} is not a chamber label for face {subset}")
        return cls(subset, level, {mu: 1})

    def __add__(self, other):
        if (self.subset, self.level) != (other.subset, other.level):
            raise InputError("cannot add elements of different modules")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return TwistedModuleElement(self.subset, self.level, out)

    def scale(self, n: int):
        return TwistedModuleElement(self.subset, self.level,
                                    {w: n * c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, TwistedModuleElement)
                and (self.subset, self.level, self.terms)
                == (other.subset, other.level, other.terms))

    def __hash__(self):
        return hash((self.subset, self.level, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        bits = " + ".join(f"{c}*[{','.join(map(str, w))}]"
                          for w, c in sorted(self.terms.items())) or "0"
        return f"TwistedModuleElement(S={self.subset}, k={self.level}, {bits})"


def _char_weights(rs, c: VirtualCharacter) -> dict:
    out = {}
    for lam, coeff in c.terms.items():
        for nu, m in full_weights(rs, lam).items():
            v = out.get(nu, 0) + coeff * m
            if v:
                out[nu] = v
            else:
                out.pop(nu, None)
    return out


def rg_multiply(rs: RootSystem, c: VirtualCharacter, x: TwistedModuleElement) -> TwistedModuleElement:
    """Module action of a virtual character on an invariant-module element."""
    weights = _char_weights(rs, c)
    out = {}
    for mu, a in x.terms.items():
        for nu, m in weights.items():
            red = regularize_affine(rs, x.subset, x.level, tuple(p + q for p, q in zip(mu, nu)))
            if red is None:
                continue
            lab, sign = red
            v = out.get(lab, 0) + a * m * sign
            if v:
                out[lab] = v
            else:
                out.pop(lab, None)
    return TwistedModuleElement(x.subset, x.level, out)


def _label_product(rs, subset, k, lam, c):
    """Vector of irrep(lam) acting on the single label c."""
    out = {}
    for nu, m in full_weights(rs, lam).items():
        red = regularize_affine(rs, subset, k, tuple(p + q for p, q in zip(c, nu)))
        if red is None:
            continue
        lab, sign = red
        v = out.get(lab, 0) + m * sign
        if v:
            out[lab] = v
        else:
            out.pop(lab, None)
    return out


def _label_key(rs):
    lev = rs.comarks[1:]
    cache = {}

    def key(mu):
        k = cache.get(mu)
        if k is None:
            k = (sum(c * x for c, x in zip(lev, mu)), mu)
            cache[k[1]] = k
        return k

    return key


def _product_echelon(rs, subset, k, candidates, lambda_bound, with_meta=False):
    key = _label_key(rs)
    ech = ZEchelon(key)
    rows = []
    for idx, c in enumerate(candidates):
        for lam in alcove_weights(rs, lambda_bound):
            vec = _label_product(rs, subset, k, lam, c)
            if vec:
                rows.append((max(key(m) for m in vec), vec, (idx, lam)))
    # ascending leading order keeps the elimination nearly collision-free
    rows.sort(key=lambda r: r[0])
    for _, vec, tag in rows:
        ech.insert(vec, {tag: 1} if with_meta else None)
    return ech


def _certify_spanning(rs, subset, k, candidates, window, lambda_bound):
    """Check that every window label is an integer combination of character
    multiples of the candidates.

    Labels are certified from the top of the ordering downward, and each
    certified label is absorbed as a unit pivot, which keeps the integer
    elimination shallow.  Returns (ok, first unreached label or None).
    """
    ech = _product_echelon(rs, subset, k, candidates, lambda_bound)
    key = _label_key(rs)
    for mu in sorted(window, key=key, reverse=True):
        if not ech.absorb_unit(mu):
            return False, mu
    return True, None


@dataclass
class BasisReport:
    group: str
    subset: tuple
    level: int
    candidates: tuple
    module_rank: int
    level_bound: int
    lambda_bound: int
    passed: bool
    failure: str = ""
    labels_checked: int = 0

    def to_json_dict(self):
        return {"group": self.group, "subset": list(self.subset), "level": self.level,
                "candidates": [list(c) for c in self.candidates],
                "module_rank": self.module_rank, "level_bound": self.level_bound,
                "lambda_bound": self.lambda_bound, "labels_checked": self.labels_checked,
                "passed": self.passed, "failure": self.failure}


def verify_module_basis(rs: RootSystem, subset, k: int, candidates,
                        level_bound: int | None = None,
                        lambda_bound: int | None = None) -> BasisReport:
    """Certify, up to the stated bounds, that candidate labels span the module.

    Every window label must be an integer combination of character multiples
    of the candidates; together with the rank count this certifies a basis
    at desk scale.  A pass only covers labels inside the window, which the
    report records.
    """
    subset = face_subset(rs, subset)
    candidates = tuple(tuple(c) for c in candidates)
    if level_bound is None:
        level_bound = k + 2 * rs.dual_coxeter
    if lambda_bound is None:
        lambda_bound = level_bound + rs.dual_coxeter + k
    info = centralizer_info(rs, subset)
    report = BasisReport(group=str(rs.lie_type), subset=subset, level=k,
                         candidates=candidates, module_rank=info.module_rank,
                         level_bound=level_bound, lambda_bound=lambda_bound,
                         passed=False)
    if len(candidates) != info.module_rank:
        report.failure = (f"candidate count {len(candidates)} differs from "
                          f"module rank {info.module_rank}")
        return report
    for c in candidates:
        if not is_valid_label(rs, subset, k, c):
            report.failure = f"{c} is not a chamber label"
            return report
    window = enumerate_labels(rs, subset, k, level_bound)
    report.labels_checked = len(window)
    ok, missed = _certify_spanning(rs, subset, k, candidates, window, lambda_bound)
    if not ok:
        report.failure = f"label {missed} is not reached by the candidates"
        return report
    report.passed = True
    return report


@lru_cache(maxsize=None)
def translation_weight(rs: RootSystem, subset: tuple) -> tuple:
    """Integral weight normal to the face: zero on the linear walls of S,
    level equal to the twist order.  Translation by it identifies the
    modules at levels k and k + twist_order."""
    subset = face_subset(rs, subset)
    d = twist_order(rs, subset)
    fixed = [i - 1 for i in subset if i != 0]
    free = [j for j in range(rs.rank) if j not in fixed]
    best = None
    for radius in range(1, 3 * d + 4):
        found = []

        def rec(pos, partial):
            if pos == len(free):
                vec = [0] * rs.rank
                for idx, val in zip(free, partial):
                    vec[idx] = val
                if rs.level(vec) == d:
                    found.append(tuple(vec))
                return
            for v in range(-radius, radius + 1):
                rec(pos + 1, partial + [v])

        rec(0, [])
        if found:
            best = min(found, key=lambda v: (sum(abs(x) for x in v), v))
            break
    if best is None:
        raise InternalLimitError(f"no translation weight found for face {subset}")
    return best


def find_module_basis(rs: RootSystem, subset, k: int, seeds=(),
                      level_bound: int | None = None,
                      lambda_bound: int | None = None) -> list:
    """Deterministic basis search for one invariant module.

    For faces containing the affine node the level is first reduced modulo
    the twist order via the translation isomorphism.  Candidates are
    scanned by distance from the seed labels (chamber corner when no seeds)
    and added greedily while independent; the result is certified by the
    same window check as verify_module_basis.
    """
    subset = face_subset(rs, subset)
    seeds = [tuple(s) for s in seeds]
    if 0 in subset:
        d = twist_order(rs, subset)
        k0 = k % d
        if k != k0:
            delta = translation_weight(rs, subset)
            steps = (k - k0) // d
            back = [tuple(s - steps * t for s, t in zip(lab, delta)) for lab in seeds]
            base = find_module_basis(rs, subset, k0, seeds=back,
                                     level_bound=level_bound, lambda_bound=lambda_bound)
            return [tuple(b + steps * t for b, t in zip(lab, delta)) for lab in base]
    if level_bound is None:
        level_bound = k + 2 * rs.dual_coxeter
    if lambda_bound is None:
        lambda_bound = level_bound + rs.dual_coxeter + k
    info = centralizer_info(rs, subset)
    rank = info.module_rank
    window = enumerate_labels(rs, subset, k, level_bound)
    if seeds:
        center = [Fraction(sum(_beta2(rs, subset, s)[i] for s in seeds), len(seeds))
                  for i in range(rs.rank)]
    else:
        center = [Fraction(0)] * rs.rank

    def distance(mu):
        b = _beta2(rs, subset, mu)
        diff = [x - c for x, c in zip(b, center)]
        return rs.form_pair(diff, diff)

    ordered = sorted(window, key=lambda m: (distance(m), rs.level(m), m))
    chosen = []
    key = _label_key(rs)
    ech = ZEchelon(key)
    lams = alcove_weights(rs, lambda_bound)

    def add(c):
        chosen.append(c)
        rows = []
        for lam in lams:
            vec = _label_product(rs, subset, k, lam, c)
            if vec:
                rows.append((max(key(m) for m in vec), vec))
        rows.sort(key=lambda r: r[0])
        for _, vec in rows:
            ech.insert(vec, None)

    for s in seeds:
        if ech.contains({s: 1}):
            raise InternalLimitError(
                f"seed label {s} is dependent on earlier seeds for face {subset}")
        add(s)
    for cand in ordered:
        if len(chosen) == rank:
            break
        if cand in chosen or ech.contains({cand: 1}):
            continue
        add(cand)
    if len(chosen) != rank:
        raise InternalLimitError(
            f"found only {len(chosen)} of {rank} generators for face {subset} "
            f"at level {k} (bounds {level_bound}/{lambda_bound})")
    ok, missed = _certify_spanning(rs, subset, k, chosen, window, lambda_bound)
    if not ok:
        raise InternalLimitError(
            f"candidate set {chosen} fails to span label {missed} on face "
            f"{subset} at level {k} (bounds {level_bound}/{lambda_bound})")
    return chosen


# ---------------------------------------------------------------------------
# explicit expansions inside the weight-lattice group ring

def laurent_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k_, v in b.items():
        nv = out.get(k_, 0) + v
        if nv:
            out[k_] = nv
        else:
            out.pop(k_, None)
    return out


def laurent_scale(a: dict, n: int) -> dict:
    return {k_: n * v for k_, v in a.items() if n * v}


def laurent_mul(a: dict, b: dict) -> dict:
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            nv = out.get(key, 0) + va * vb
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def char_expansion(rs: RootSystem, c: VirtualCharacter) -> dict:
    """Weight expansion of a virtual character inside the group ring."""
    return _char_weights(rs, c)


def _affine_group(rs, subset, k):
    """All elements of the face reflection group as affine maps on doubled
    coordinates, each with the determinant of its linear part."""
    n = rs.rank
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    gens = []
    for i in subset:
        if i == 0:
            theta = rs.highest_root
            com = rs.comarks[1:]
            mat = tuple(tuple((1 if a == j else 0) - com[a] * theta[j]
                              for j in range(n)) for a in range(n))
            gens.append((mat, tuple(2 * k * t for t in theta)))
        else:
            root = rs.simple_roots[i - 1]
            mat = tuple(tuple((1 if a == j else 0) - (1 if a == i - 1 else 0) * root[j]
                              for j in range(n)) for a in range(n))
            gens.append((mat, (0,) * n))

    def compose(g, h):
        """Apply h first, then g."""
        mh, th = h
        mg, tg = g
        mat = tuple(tuple(sum(mh[a][b] * mg[b][j] for b in range(n)) for j in range(n))
                    for a in range(n))
        tr = tuple(sum(th[b] * mg[b][j] for b in range(n)) + tg[j] for j in range(n))
        return mat, tr

    elements = {(ident, (0,) * n): 1}
    frontier = list(elements)
    while frontier:
        nxt = []
        for el in frontier:
            s = elements[el]
            for g in gens:
                new = compose(g, el)
                if new not in elements:
                    elements[new] = -s
                    nxt.append(new)
                if len(elements) > 4096:
                    raise InternalLimitError("face reflection group is too large")
        frontier = nxt
    return elements


def _apply_affine(el, v):
    mat, tr = el
    n = len(v)
    return tuple(sum(v[a] * mat[a][j] for a in range(n)) + tr[j] for j in range(n))


def _antisymmetrize(rs, subset, k, point2):
    out = {}
    for el, sign in _affine_group(rs, subset, k).items():
        key = _apply_affine(el, point2)
        nv = out.get(key, 0) + sign
        if nv:
            out[key] = nv
        else:
            out.pop(key, None)
    return out


def _laurent_divide_exact(num: dict, den: dict) -> dict:
    quob = {}
    rem = dict(num)
    lead = max(den)
    lead_c = den[lead]
    while rem:
        top = max(rem)
        shift = tuple(a - b for a, b in zip(top, lead))
        if rem[top] % lead_c:
            raise AssertionError("inexact antisymmetrizer division")
        q = rem[top] // lead_c
        quob[shift] = quob.get(shift, 0) + q
        for e, c in den.items():
            key = tuple(a + b for a, b in zip(e, shift))
            nv = rem.get(key, 0) - q * c
            if nv:
                rem[key] = nv
            else:
                rem.pop(key, None)
    return quob


def module_element_expansion(rs: RootSystem, subset, k: int, mu) -> dict:
    """Group-ring expansion of a basis label: the antisymmetrization of
    mu + rho_S over the level-k face group divided by the level-0
    antisymmetrization of rho_S."""
    subset = face_subset(rs, subset)
    point = _beta2(rs, subset, tuple(mu))
    num = _antisymmetrize(rs, subset, k, point)
    den = _antisymmetrize(rs, subset, 0, rho2(rs, subset))
    quo2 = _laurent_divide_exact(num, den)
    out = {}
    for e, c in quo2.items():
        if any(x % 2 for x in e):
            raise AssertionError("expansion landed outside the weight lattice")
        out[tuple(x // 2 for x in e)] = c
    return out
