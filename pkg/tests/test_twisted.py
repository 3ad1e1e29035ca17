import random
from fractions import Fraction
from math import gcd

import pytest

from fusionring import (InputError, TwistedModuleElement, VirtualCharacter,
                        build_root_system, census, centralizer_info,
                        enumerate_labels, face_subset, find_module_basis,
                        full_weights, module_element_expansion,
                        regularize_affine, rg_multiply, rho_S, tensor_product,
                        twist_order, verify_module_basis)
from fusionring.twisted import (_affine_group, char_expansion, laurent_add,
                                laurent_mul, laurent_scale, rho2,
                                translation_weight)

from conftest import random_character

ALL_SMALL_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(3, 9)]
    + [("E", n) for n in (6, 7, 8)]
    + [("F", 4), ("G", 2)]
)


def test_rho_s_examples(g2):
    assert rho_S(g2, ()) == (Fraction(0), Fraction(0))
    assert rho_S(g2, (1, 2)) == (Fraction(1), Fraction(1))
    # orthogonal pair of the affine and the short simple root
    assert rho_S(g2, (0, 1)) == (Fraction(1), Fraction(-1))
    # the two long simple roots span a rank-two subsystem with three positives
    assert rho_S(g2, (0, 2)) == (Fraction(-3), Fraction(1))
    # single short root gives a genuinely half-integral shift
    assert rho_S(g2, (1,)) == (Fraction(1), Fraction(-1, 2))


def test_twist_order_examples(g2):
    assert twist_order(g2, (0, 1)) == 2
    assert twist_order(g2, (0, 2)) == 1
    f4 = build_root_system("F4")
    assert twist_order(f4, (0, 1, 3, 4)) == 3
    with pytest.raises(InputError):
        twist_order(g2, (0, 1, 2))


def test_census_type_a_c_empty():
    for n in range(1, 9):
        assert census(build_root_system(f"A{n}")) == []
    for n in range(2, 9):
        assert census(build_root_system(f"C{n}")) == []


def test_census_g2(g2):
    entries = census(g2)
    assert len(entries) == 1
    e = entries[0]
    assert e.subset == (0, 1)
    assert e.centralizer_type == "A1+A1"
    assert e.twist_order == 2
    assert e.module_rank == 3


def test_census_f4():
    entries = census(build_root_system("F4"))
    got = sorted((e.centralizer_type, e.twist_order) for e in entries)
    assert got == [("A1+A1+A1", 2), ("A2+A2", 3), ("A3+A1", 2), ("C3+A1", 2)]


def test_census_e6():
    entries = census(build_root_system("E6"))
    order2 = [e for e in entries if e.twist_order == 2]
    order3 = [e for e in entries if e.twist_order == 3]
    assert len(order2) == 7 and len(order3) == 1
    assert sorted(e.centralizer_type for e in order2) == [
        "A1+A1+A1+A1", "A3+A1+A1", "A3+A1+A1", "A3+A1+A1",
        "A5+A1", "A5+A1", "A5+A1"]
    assert order3[0].centralizer_type == "A2+A2+A2"


def test_census_e7():
    rs = build_root_system("E7")
    entries = census(rs)
    assert len([e for e in entries if e.twist_order == 2]) == 14
    order3 = sorted(e.centralizer_type for e in entries if e.twist_order == 3)
    assert order3 == ["A2+A2+A2", "A5+A2", "A5+A2"]
    order4 = [e.centralizer_type for e in entries if e.twist_order == 4]
    assert order4 == ["A3+A3+A1"]


def test_census_e8():
    rs = build_root_system("E8")
    entries = census(rs)
    vertex = [e for e in entries if len(e.subset) == rs.rank]
    beyond = [e for e in entries if len(e.subset) < rs.rank]
    # the eight vertex modules are twisted with the comark as order
    assert sorted(e.twist_order for e in vertex) == [2, 2, 3, 3, 4, 4, 5, 6]
    assert len([e for e in beyond if e.twist_order == 2]) == 25
    assert sorted(e.centralizer_type for e in beyond if e.twist_order == 3) == \
        ["A2+A2+A2", "A2+A2+A2+A1", "A5+A2", "A5+A2"]
    assert [e.centralizer_type for e in beyond if e.twist_order == 4] == ["A3+A3+A1"]


@pytest.mark.parametrize("series,rank", ALL_SMALL_TYPES)
def test_centralizer_rank_factorization(series, rank):
    rs = build_root_system(f"{series}{rank}")
    n = rs.rank
    for mask in range(2 ** (n + 1) - 1):
        subset = tuple(i for i in range(n + 1) if mask >> i & 1)
        info = centralizer_info(rs, subset)
        assert info.module_rank * info.weyl_order == rs.weyl_order
        comps = [i for i in range(n + 1) if i not in subset]
        g = 0
        for i in comps:
            g = gcd(g, rs.comarks[i])
        assert info.twist_order == g
        for i in comps:
            assert rs.comarks[i] % info.twist_order == 0


def test_face_group_order_matches_type(g2):
    # enumerated affine reflection group sizes agree with the classification
    for subset in [(), (1,), (2,), (0,), (0, 1), (0, 2), (1, 2)]:
        info = centralizer_info(g2, face_subset(g2, subset))
        assert len(_affine_group(g2, face_subset(g2, subset), 1)) == info.weyl_order


def test_regularize_examples(g2, a1):
    # already a label
    assert regularize_affine(g2, (0, 1), 1, (0, 0)) == ((0, 0), 1)
    # (0,1) + rho_S = (1,0) sits on the level-1 affine wall
    assert regularize_affine(g2, (0, 1), 1, (0, 1)) is None
    # rank one: shift crosses the affine wall once
    assert regularize_affine(a1, (0,), 2, (4,)) == ((2,), -1)
    # wall case
    assert regularize_affine(a1, (0,), 2, (3,)) is None


@pytest.mark.parametrize("name", ["G2", "C2"])
def test_regularize_sign_consistency(name):
    rs = build_root_system(name)
    rng = random.Random(41)
    faces = [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
    checked = 0
    while checked < 200:
        subset = face_subset(rs, rng.choice(faces))
        k = rng.randint(0, 3)
        w = tuple(rng.randint(-5, 5) for _ in range(rs.rank))
        red = regularize_affine(rs, subset, k, w)
        gen = rng.choice(subset)
        # apply one generator to w + rho_S and reduce again
        beta2 = tuple(2 * x + y for x, y in zip(w, rho2(rs, subset)))
        if gen == 0:
            lev = rs.level(beta2)
            beta2 = tuple(x + (2 * k - lev) * t
                          for x, t in zip(beta2, rs.highest_root))
        else:
            beta2 = rs.reflect(gen, beta2)
        w2 = tuple((x - y) // 2 for x, y in zip(beta2, rho2(rs, subset)))
        red2 = regularize_affine(rs, subset, k, w2)
        if red is None:
            assert red2 is None
        elif w2 == w:
            assert red2 == red
        else:
            assert red2 == (red[0], -red[1])
        checked += 1


def test_parity_periodicity(g2):
    # the level-k and level-(k+2) modules coincide after one lattice shift
    # along the face normal, label by label
    from fusionring.twisted import is_valid_label
    delta = translation_weight(g2, (0, 1))
    assert delta == (0, 1)
    rng = random.Random(19)
    for _ in range(300):
        k = rng.randint(0, 3)
        mu = (rng.randint(-6, 6), rng.randint(-6, 6))
        shifted = tuple(a + b for a, b in zip(mu, delta))
        assert is_valid_label(g2, (0, 1), k, mu) == \
            is_valid_label(g2, (0, 1), k + 2, shifted)


def test_rg_multiply_unit_and_torus(g2):
    x = TwistedModuleElement.label(g2, (0, 1), 1, (0, 0))
    one = VirtualCharacter.irrep((0, 0))
    assert rg_multiply(g2, one, x) == x
    # with no reflections the action is the plain weight expansion
    t = TwistedModuleElement.label(g2, (), 0, (0, 0))
    chi = VirtualCharacter.irrep((1, 0))
    expanded = rg_multiply(g2, chi, t)
    assert expanded.terms == full_weights(g2, (1, 0))


def test_rg_multiply_matches_expansion(g2):
    x = TwistedModuleElement.label(g2, (0, 1), 1, (0, 0))
    chi = VirtualCharacter.irrep((1, 0))
    prod = rg_multiply(g2, chi, x)
    assert prod.terms == {(1, 0): 1, (2, -1): 1, (1, -1): 1}
    lhs = laurent_mul(char_expansion(g2, chi),
                      module_element_expansion(g2, (0, 1), 1, (0, 0)))
    rhs = {}
    for lab, c in prod.terms.items():
        rhs = laurent_add(rhs, laurent_scale(
            module_element_expansion(g2, (0, 1), 1, lab), c))
    assert lhs == rhs


def test_rg_multiply_module_axioms(g2):
    rng = random.Random(13)
    for subset, k in [((0, 1), 1), ((0, 2), 2), ((1,), 0)]:
        base = enumerate_labels(g2, subset, k, 3)
        x = TwistedModuleElement(subset, k, {rng.choice(base): 1,
                                             rng.choice(base): -2})
        for _ in range(3):
            c1 = random_character(g2, rng, level=2, terms=2, coeff=2)
            c2 = random_character(g2, rng, level=2, terms=2, coeff=2)
            assert rg_multiply(g2, c1, rg_multiply(g2, c2, x)) == \
                rg_multiply(g2, tensor_product(g2, c1, c2), x)
            assert rg_multiply(g2, c1 + c2, x) == \
                rg_multiply(g2, c1, x) + rg_multiply(g2, c2, x)


G2_BASES = [
    ("torus", (), 0,
     ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2),
      (2, -1), (2, 0), (2, 1), (3, -1), (3, 0), (3, 1)), 12),
    ("u2 short", (1,), 0,
     ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)), 6),
    ("u2 long", (2,), 0,
     ((0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (-2, 2)), 6),
    ("su3 vertex", (0, 2), 0, ((0, 0), (-1, 0)), 2),
    ("so4 vertex even", (0, 1), 0, ((0, 0), (1, -1), (0, -1)), 3),
    ("so4 vertex odd", (0, 1), 1, ((0, 0), (1, 0), (1, -1)), 3),
]


@pytest.mark.parametrize("name,subset,k,labels,rank", G2_BASES)
def test_g2_module_bases(g2, name, subset, k, labels, rank):
    report = verify_module_basis(g2, subset, k, labels)
    assert report.module_rank == rank
    assert report.passed, report.failure


def test_translated_bases_at_higher_level(g2):
    # the level-k bases are lattice translates of the base-level ones
    assert verify_module_basis(g2, (0, 2), 3, ((3, 0), (2, 0))).passed
    assert verify_module_basis(g2, (0, 1), 2, ((0, 1), (1, 0), (0, 0))).passed
    assert verify_module_basis(g2, (0, 1), 3, ((0, 1), (1, 1), (1, 0))).passed


def test_wrong_candidate_count_fails_fast(g2):
    report = verify_module_basis(g2, (0, 2), 0, ((0, 0),))
    assert not report.passed
    assert "rank" in report.failure


def test_stale_basis_fails(g2):
    # the base-level basis stops generating once the level grows
    report = verify_module_basis(g2, (0, 2), 1, ((0, 0), (-1, 0)))
    assert not report.passed


def test_find_module_basis_matches_proof_structure(g2, a1):
    assert find_module_basis(a1, (0,), 4) == [(4,)]
    assert find_module_basis(g2, (0, 2), 2) == [(2, 0), (1, 0)]
    found = find_module_basis(g2, (0, 1), 2)
    assert len(found) == 3
