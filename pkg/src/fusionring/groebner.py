"""Minimal Buchberger engine over Q and prime fields.

Monomial order is graded reverse lexicographic throughout.  Coefficients
are exact: Fraction over Q, residues modulo p < 2**31 otherwise.  Only what
the quotient-codimension checks need is implemented: reduced bases, normal
forms, and standard-monomial counting for zero-dimensional ideals.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import InputError

INFINITE = None  # sentinel returned for non-zero-dimensional quotients


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


class FieldPoly:
    """Polynomial with a fixed variable count over Q (modulus None) or F_p."""

    __slots__ = ("nvars", "modulus", "terms")

    def __init__(self, nvars, terms=None, modulus=None):
        if modulus is not None and not (1 < modulus < 2 ** 31):
            raise InputError("modulus must be a prime below 2**31")
        self.nvars = nvars
        self.modulus = modulus
        clean = {}
        for e, c in dict(terms or {}).items():
            if len(e) != nvars:
                raise InputError("exponent vector length mismatch")
            c = self._coerce(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    def _coerce(self, c):
        if self.modulus is None:
            return Fraction(c)
        return int(c) % self.modulus

    @classmethod
    def from_int_poly(cls, nvars, int_terms, modulus=None):
        return cls(nvars, dict(int_terms), modulus)

    def is_zero(self):
        return not self.terms

    def leading(self):
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def _inv(self, c):
        if self.modulus is None:
            return Fraction(1) / c
        return pow(c, self.modulus - 2, self.modulus)

    def monic(self):
        if not self.terms:
            return self
        _, lc = self.leading()
        inv = self._inv(lc)
        return FieldPoly(self.nvars,
                         {e: self._norm(c * inv) for e, c in self.terms.items()},
                         self.modulus)

    def _norm(self, c):
        return c if self.modulus is None else c % self.modulus

    def sub_scaled(self, other, coeff, shift):
        """self - coeff * x^shift * other."""
        out = dict(self.terms)
        for e, c in other.terms.items():
            key = tuple(a + b for a, b in zip(e, shift))
            nv = self._norm(out.get(key, 0 if self.modulus else Fraction(0)) - coeff * c)
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
        return FieldPoly(self.nvars, out, self.modulus)

    def __eq__(self, other):
        return (isinstance(other, FieldPoly) and self.modulus == other.modulus
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.modulus, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        tag = "Q" if self.modulus is None else f"F{self.modulus}"
        return f"FieldPoly[{tag}]({self.terms})"


def _divides(e, f):
    return all(a <= b for a, b in zip(e, f))


def normal_form(p: FieldPoly, basis) -> FieldPoly:
    """Remainder of p on division by a Groebner basis (full reduction)."""
    leads = [(g.leading()[0], g.leading()[1], g) for g in basis if not g.is_zero()]
    rem = {}
    work = p
    while not work.is_zero():
        e, c = work.leading()
        for le, lc, g in leads:
            if _divides(le, e):
                shift = tuple(a - b for a, b in zip(e, le))
                work = work.sub_scaled(g, c * p._inv(lc), shift)
                break
        else:
            rem[e] = c
            work = FieldPoly(p.nvars, {f: v for f, v in work.terms.items() if f != e},
                             p.modulus)
    return FieldPoly(p.nvars, rem, p.modulus)


def _s_poly(f: FieldPoly, g: FieldPoly) -> FieldPoly:
    ef, cf = f.leading()
    eg, cg = g.leading()
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    zero = FieldPoly(f.nvars, {}, f.modulus)
    sf = zero.sub_scaled(f, -f._inv(cf), tuple(a - b for a, b in zip(lcm, ef)))
    return sf.sub_scaled(g, g._inv(cg), tuple(a - b for a, b in zip(lcm, eg)))


def buchberger(gens) -> list:
    """Reduced Groebner basis of the ideal generated by gens."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    nvars, modulus = gens[0].nvars, gens[0].modulus
    for g in gens:
        if g.nvars != nvars or g.modulus != modulus:
            raise InputError("generators live in different polynomial rings")
    basis = []
    for g in sorted(gens, key=lambda q: grevlex_key(q.leading()[0])):
        r = normal_form(g, basis)
        if not r.is_zero():
            basis.append(r.monic())
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        pairs.sort(key=lambda ij: grevlex_key(tuple(
            max(a, b) for a, b in zip(basis[ij[0]].leading()[0],
                                      basis[ij[1]].leading()[0]))), reverse=True)
        i, j = pairs.pop()
        ei, ej = basis[i].leading()[0], basis[j].leading()[0]
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading terms reduce to zero
        r = normal_form(_s_poly(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r.monic())
            pairs.extend((t, len(basis) - 1) for t in range(len(basis) - 1))
    return _interreduce(basis)


def _interreduce(basis):
    changed = True
    basis = [g.monic() for g in basis if not g.is_zero()]
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            r = normal_form(basis[i], others)
            if r != basis[i]:
                changed = True
                basis = [g for g in others if not g.is_zero()]
                if not r.is_zero():
                    basis.append(r.monic())
                break
    return sorted((g.monic() for g in basis),
                  key=lambda g: grevlex_key(g.leading()[0]))


def quotient_codimension(gens):
    """Number of standard monomials of the quotient, or INFINITE.

    Exact count of monomials outside the leading-term ideal; finite exactly
    when every variable has a pure power among the leading terms.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return INFINITE
    nvars = gens[0].nvars
    basis = buchberger(gens)
    if any(sum(g.leading()[0]) == 0 for g in basis):
        return 0  # unit ideal
    leads = [g.leading()[0] for g in basis]
    degree_cap = []
    for v in range(nvars):
        pures = [e[v] for e in leads if sum(e) == e[v]]
        if not pures:
            return INFINITE
        degree_cap.append(min(pures))
    count = 0
    for mono in product(*(range(c) for c in degree_cap)):
        if not any(_divides(e, mono) for e in leads):
            count += 1
    return count
