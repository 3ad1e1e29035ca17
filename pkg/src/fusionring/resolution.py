"""The invariant-module complex resolving the fusion ring.

Degree p collects the faces with n - p nodes; the differential component
from a face S into S plus one node j carries the sign (-1)^s, where s is
the position of j in the ordered complement of S (affine node first).  The
degree-zero cohomology is the level-k fusion ring, which the oracle checks
label by label.  Presentations of the fusion ideal are extracted edge by
edge from lifts of vertex-module bases and verified by exact membership
plus quotient codimensions over Q and prime fields.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputError, InternalLimitError
from .fusion import fold_weight, in_fusion_ideal
from .groebner import INFINITE, FieldPoly, quotient_codimension
from .repring import VirtualCharacter, tensor_product, to_polynomial
from .rootdata import (RootSystem, alcove_weights, shifted_dominant_reduce)
from .twisted import (_product_echelon, centralizer_info, enumerate_labels,
                      face_subset, find_module_basis, is_valid_label,
                      regularize_affine)

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


@dataclass
class ComplexSpec:
    group: str
    level: int
    degrees: tuple          # degrees[p] = faces with n - p nodes
    ranks: tuple            # free rank contributed by each degree
    node_order: tuple       # affine node first

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * r for p, r in enumerate(self.ranks))

    def to_json_dict(self):
        return {"group": self.group, "level": self.level,
                "degrees": [[list(s) for s in faces] for faces in self.degrees],
                "ranks": list(self.ranks),
                "euler_characteristic": self.euler_characteristic()}


def build_complex(rs: RootSystem, k: int) -> ComplexSpec:
    """Enumerate the faces by degree with their free module ranks."""
    n = rs.rank
    degrees = []
    ranks = []
    nodes = range(n + 1)
    for p in range(n + 1):
        faces = tuple(sorted(tuple(sorted(c)) for c in combinations(nodes, n - p)))
        degrees.append(faces)
        ranks.append(sum(centralizer_info(rs, f).module_rank for f in faces))
    spec = ComplexSpec(group=str(rs.lie_type), level=k, degrees=tuple(degrees),
                       ranks=tuple(ranks), node_order=tuple(nodes))
    if spec.euler_characteristic() != 0:
        raise AssertionError("free resolution must have zero Euler characteristic")
    return spec


def d1_component(rs: RootSystem, subset, j: int, k: int, mu):
    """One face-to-coface component of the differential on a basis label.

    Returns None when the shifted label is singular for the larger face,
    otherwise (label, sign) including the simplicial sign (-1)^s.
    """
    subset = face_subset(rs, subset)
    if j in subset:
        raise InputError(f"node {j} already lies in the face {subset}")
    target = face_subset(rs, subset + (j,))
    complement = [i for i in range(rs.rank + 1) if i not in subset]
    s = complement.index(j)
    red = regularize_affine(rs, target, k, tuple(mu))
    if red is None:
        return None
    label, sign = red
    return label, sign * (-1) ** s


def _d_vector(rs, subset, k, vec):
    """Full differential of a vector, per target face."""
    out = {}
    for j in range(rs.rank + 1):
        if j in subset or len(subset) == rs.rank:
            continue
        target = face_subset(rs, tuple(subset) + (j,))
        acc = {}
        for mu, c in vec.items():
            red = d1_component(rs, subset, j, k, mu)
            if red is None:
                continue
            lab, sign = red
            v = acc.get(lab, 0) + c * sign
            if v:
                acc[lab] = v
            else:
                acc.pop(lab, None)
        if acc:
            out[target] = acc
    return out


@dataclass
class D2Report:
    group: str
    level: int
    level_bound: int
    modules_checked: int
    labels_checked: int
    passed: bool
    violations: list = field(default_factory=list)

    def to_json_dict(self):
        return {"group": self.group, "level": self.level, "level_bound": self.level_bound,
                "modules_checked": self.modules_checked,
                "labels_checked": self.labels_checked, "passed": self.passed,
                "violations": [str(v) for v in self.violations]}


def d_squared_check(rs: RootSystem, k: int, level_bound: int | None = None) -> D2Report:
    """Exhaust d o d = 0 over the truncated bases of all degree-2 faces."""
    if level_bound is None:
        level_bound = k + 2 * rs.dual_coxeter
    n = rs.rank
    report = D2Report(group=str(rs.lie_type), level=k, level_bound=level_bound,
                      modules_checked=0, labels_checked=0, passed=True)
    if n < 2:
        return report
    for face in combinations(range(n + 1), n - 2):
        face = face_subset(rs, face)
        report.modules_checked += 1
        for mu in enumerate_labels(rs, face, k, level_bound):
            report.labels_checked += 1
            first = _d_vector(rs, face, k, {mu: 1})
            total = {}
            for target, vec in first.items():
                for dest, acc in _d_vector(rs, target, k, vec).items():
                    bucket = total.setdefault(dest, {})
                    for lab, c in acc.items():
                        v = bucket.get(lab, 0) + c
                        if v:
                            bucket[lab] = v
                        else:
                            bucket.pop(lab, None)
            if any(bucket for bucket in total.values()):
                report.passed = False
                report.violations.append((face, mu, total))
    return report


@dataclass
class CokernelReport:
    group: str
    level: int
    level_bound: int
    fusion_rank: int
    edge_labels_checked: int
    vertex_labels_checked: int
    edge_images_vanish: bool
    spans_fusion_ring: bool
    passed: bool
    first_failure: str = ""

    def to_json_dict(self):
        return {"group": self.group, "level": self.level, "level_bound": self.level_bound,
                "fusion_rank": self.fusion_rank,
                "edge_labels_checked": self.edge_labels_checked,
                "vertex_labels_checked": self.vertex_labels_checked,
                "edge_images_vanish": self.edge_images_vanish,
                "spans_fusion_ring": self.spans_fusion_ring,
                "passed": self.passed, "first_failure": self.first_failure}


def cokernel_vs_oracle(rs: RootSystem, k: int, level_bound: int | None = None) -> CokernelReport:
    """Check the degree-zero homology against the Kac-Walton oracle.

    Vertex labels map to the fusion ring by folding; differential images
    must fold to zero and the vertex images must cover the whole alcove.
    """
    if level_bound is None:
        level_bound = k + 2 * rs.dual_coxeter
    n = rs.rank
    alcove = set(alcove_weights(rs, k))
    hit = set()
    edge_ok = True
    first_failure = ""
    vertex_count = edge_count = 0
    for face in combinations(range(n + 1), n):
        face = face_subset(rs, face)
        for mu in enumerate_labels(rs, face, k, level_bound):
            vertex_count += 1
            red = fold_weight(rs, mu, k)
            if red is not None:
                hit.add(red[0])
    for face in combinations(range(n + 1), n - 1):
        face = face_subset(rs, face)
        for mu in enumerate_labels(rs, face, k, level_bound):
            edge_count += 1
            total = {}
            for target, vec in _d_vector(rs, face, k, {mu: 1}).items():
                for lab, c in vec.items():
                    red = fold_weight(rs, lab, k)
                    if red is None:
                        continue
                    w, sign = red
                    v = total.get(w, 0) + c * sign
                    if v:
                        total[w] = v
                    else:
                        total.pop(w, None)
            if total and edge_ok:
                edge_ok = False
                first_failure = f"edge {face} label {mu} folds to {total}"
    spans = hit == alcove
    if not spans and not first_failure:
        first_failure = f"alcove weights {sorted(alcove - hit)} were never reached"
    return CokernelReport(group=str(rs.lie_type), level=k, level_bound=level_bound,
                          fusion_rank=len(alcove), edge_labels_checked=edge_count,
                          vertex_labels_checked=vertex_count,
                          edge_images_vanish=edge_ok, spans_fusion_ring=spans,
                          passed=edge_ok and spans, first_failure=first_failure)


def _partial0(rs, mu) -> VirtualCharacter:
    """Induction of an edge label into the full-group vertex."""
    red = shifted_dominant_reduce(rs, mu)
    if red is None:
        return VirtualCharacter.zero()
    w, sign = red
    return VirtualCharacter.irrep(w).scale(sign)


@dataclass
class ExtractionReport:
    group: str
    level: int
    generators: list
    per_edge_counts: dict
    generator_bound: int
    level_bound: int
    lambda_bound: int

    def to_json_dict(self):
        return {"group": self.group, "level": self.level,
                "generators": [g.to_json_dict() for g in self.generators],
                "per_edge_counts": {str(k_): v for k_, v in self.per_edge_counts.items()},
                "generator_bound": self.generator_bound,
                "level_bound": self.level_bound, "lambda_bound": self.lambda_bound}


def extract_presentation(rs: RootSystem, k: int,
                         level_bound: int | None = None,
                         lambda_bound: int | None = None) -> ExtractionReport:
    """Produce fusion-ideal generators from the edges through the affine node.

    For each nonaffine node j, a basis of the vertex module omitting j is
    lifted to the edge module omitting 0 and j (vertex labels are already
    edge labels), the lift set is extended to an edge basis, and each
    extension element g contributes the generator: its full-group induction
    minus the inductions of the lifts weighted by the solution of
    d1(g) = sum c_s d1(lift_s) over the vertex basis.
    """
    if k < 0:
        raise InputError("level must be nonnegative")
    if level_bound is None:
        level_bound = k + 2 * rs.dual_coxeter
    if lambda_bound is None:
        lambda_bound = level_bound + rs.dual_coxeter + k
    n = rs.rank
    gens: list[VirtualCharacter] = []
    per_edge = {}
    bound = 0
    for j in range(1, n + 1):
        vertex = face_subset(rs, tuple(i for i in range(n + 1) if i != j))
        edge = face_subset(rs, tuple(i for i in vertex if i != 0))
        bound += centralizer_info(rs, edge).module_rank
        vertex_basis = find_module_basis(rs, vertex, k,
                                         level_bound=level_bound,
                                         lambda_bound=lambda_bound)
        for b in vertex_basis:
            if not is_valid_label(rs, edge, k, b):
                raise InternalLimitError(
                    f"vertex basis label {b} is not an edge label for {edge}")
        edge_basis = find_module_basis(rs, edge, k, seeds=vertex_basis,
                                       level_bound=level_bound,
                                       lambda_bound=lambda_bound)
        ech = _product_echelon(rs, vertex, k, vertex_basis, lambda_bound,
                               with_meta=True)
        emitted = 0
        for g in edge_basis:
            if g in vertex_basis:
                continue
            red = regularize_affine(rs, vertex, k, g)
            target = {} if red is None else {red[0]: red[1]}
            residual, combo = ech.reduce(target, want_combination=True)
            if residual:
                raise InternalLimitError(
                    f"cannot express d1({g}) over the vertex basis of {vertex} "
                    f"at level {k}; raise the lambda bound ({lambda_bound})")
            coeffs = {}
            for (idx, lam), c in combo.items():
                coeffs[idx] = coeffs.get(idx, VirtualCharacter.zero()) \
                    + VirtualCharacter.irrep(lam).scale(c)
            gen = _partial0(rs, g)
            for idx, c_s in coeffs.items():
                gen = gen - tensor_product(rs, c_s, _partial0(rs, vertex_basis[idx]))
            if gen:
                gens.append(gen)
                emitted += 1
        per_edge[edge] = emitted
    return ExtractionReport(group=str(rs.lie_type), level=k, generators=gens,
                            per_edge_counts=per_edge, generator_bound=bound,
                            level_bound=level_bound, lambda_bound=lambda_bound)


def g2_fusion_ideal_generators(k: int) -> list:
    """The four level-k fusion-ideal generators for G2, by level parity."""
    if k <= 0:
        raise InputError("the generator list requires a positive level")
    irr = VirtualCharacter.irrep
    if k % 2 == 0:
        h = k // 2
        return [irr((1, h)),
                irr((0, h)) + irr((0, h + 1)),
                irr((1, h - 1)) + irr((1, h + 1)),
                irr((k + 2, 0))]
    h = (k - 1) // 2
    return [irr((0, h + 1)),
            irr((1, h)) + irr((1, h + 1)),
            irr((0, h)) + irr((0, h + 2)),
            irr((k + 2, 0))]


@dataclass
class PresentationReport:
    group: str
    level: int
    generators: list
    membership: list
    codim_q: int | None
    codim_fp: dict
    alcove_count: int
    primes: tuple
    verdict: str

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_dict(self):
        def codim(v):
            return "infinite" if v is INFINITE else v
        return {"group": self.group, "level": self.level,
                "generators": [g.to_json_dict() for g in self.generators],
                "membership": self.membership,
                "codim_Q": codim(self.codim_q),
                "codim_Fp": {str(p): codim(v) for p, v in sorted(self.codim_fp.items())},
                "alcove_count": self.alcove_count,
                "primes": list(self.primes), "verdict": self.verdict}


def verify_presentation(rs: RootSystem, k: int, gens, primes=DEFAULT_PRIMES,
                        run_codimension: bool = True) -> PresentationReport:
    """Certify a generator list against the oracle and by quotient codimension.

    Membership is exact integer folding.  The codimension of the quotient
    by the generated ideal is computed over Q and over each prime field;
    the presentation passes when every generator folds to zero and every
    codimension equals the alcove count.  Primes outside the list are not
    certified, which callers should report alongside the verdict.
    """
    gens = list(gens)
    if not gens:
        raise InputError("generator list must be nonempty")
    if not primes:
        raise InputError("prime list must be nonempty")
    membership = [in_fusion_ideal(rs, g, k) for g in gens]
    alcove_count = len(alcove_weights(rs, k))
    codim_q = None
    codim_fp = {}
    verdict = "pass"
    if not all(membership):
        verdict = "fail"
    elif run_codimension:
        polys = [to_polynomial(rs, g).poly for g in gens]
        q_gens = [FieldPoly(rs.rank, p, None) for p in polys]
        codim_q = quotient_codimension(q_gens)
        if codim_q != alcove_count:
            verdict = "fail"
        for p in primes:
            fp = quotient_codimension([FieldPoly(rs.rank, poly, p) for poly in polys])
            codim_fp[p] = fp
            if fp != alcove_count:
                verdict = "fail"
    return PresentationReport(group=str(rs.lie_type), level=k, generators=gens,
                              membership=membership, codim_q=codim_q,
                              codim_fp=codim_fp, alcove_count=alcove_count,
                              primes=tuple(primes), verdict=verdict)
