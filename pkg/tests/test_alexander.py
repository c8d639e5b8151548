import itertools
import random

import pytest
import sympy

from hurwitz_alexander.alexander import (
    AlexanderMatrix,
    CHECK_NAMES,
    alexander_polynomial,
    build_matrix,
    determinant,
    minor_gcd,
    simplify_unit_pivots,
    verify_polynomial,
)
from hurwitz_alexander.braid import g_nm_presentation
from hurwitz_alexander.constructions import abelian_cgroup, g2_presentation, torus_hurwitz, universal_hurwitz
from hurwitz_alexander.laurent import ONE, ZERO, LaurentPoly, factor_cyclotomic
from hurwitz_alexander.presentation import CPresentation, CRelation, parse
from hurwitz_alexander.words import Word

from conftest import T, asc, sympy_canonical, to_sympy


def sympy_minor_gcd(mat: AlexanderMatrix):
    """Brute force over every maximal proper minor, computed by sympy."""
    nrows, ncols = mat.shape
    k = ncols - 1
    if k == 0:
        return ONE
    rows = []
    for row in mat.rows:
        shift = -min((e.lowest for e in row if e), default=0)
        rows.append([sympy.expand(to_sympy(e) * T**shift) for e in row])
    minors = []
    for csub in itertools.combinations(range(ncols), k):
        for rsub in itertools.combinations(range(nrows), k):
            d = sympy.Matrix([[rows[r][c] for c in csub] for r in rsub]).det(method="berkowitz")
            d = sympy.expand(d)
            if d != 0:
                minors.append(d)
    if not minors:
        return ZERO
    return sympy_canonical(sympy.gcd_list(minors))


def test_abelian_matrix():
    mat = build_matrix(parse("generators: 2\nrel: x1 = x2^-1 x1 x2"))
    # same row as [1 - t, t - 1] up to the unit t^-2 coming from the relator x1^-1 x2^-1 x1 x2
    (row,) = mat.rows
    assert tuple(e.shift(2) for e in row) == (asc(1, -1), asc(-1, 1))


def test_two_strand_matrix():
    m = 3
    p = g_nm_presentation(2, 2 * m)
    mat = build_matrix(p)
    assert mat.shape[1] == 2
    assert mat.row_sums_vanish()


def test_trivial_relators_give_empty_matrix():
    mat = build_matrix(CPresentation(3, (CRelation(2, 2), CRelation(1, 1))))
    assert mat.shape == (0, 3)
    assert minor_gcd(mat) == ZERO


def test_simplify_without_units_is_identity():
    a, b = asc(1, -1, 1), asc(2, 1)
    mat = AlexanderMatrix(((a, -a), (b, -b)), (1, 2))
    assert simplify_unit_pivots(mat) == mat


def test_minor_gcd_abelian():
    mat = build_matrix(parse("generators: 2\nrel: x1 = x2^-1 x1 x2"))
    assert minor_gcd(mat) == asc(-1, 1)


def test_determinant_against_sympy():
    rng = random.Random(3)
    for n in range(1, 5):
        for _ in range(20):
            rows = [[LaurentPoly(rng.randint(-1, 1), [rng.randint(-3, 3) for _ in range(3)]) for _ in range(n)] for _ in range(n)]
            want = sympy.expand(sympy.Matrix([[to_sympy(e) for e in r] for r in rows]).det(method="berkowitz"))
            got = determinant(rows)
            assert sympy.simplify(to_sympy(got) - want) == 0


def small_presentations():
    yield parse("generators: 2\nrel: x1 = x2^-1 x1 x2")
    yield g2_presentation()
    yield universal_hurwitz(3)
    yield universal_hurwitz(4)
    for n, m in [(2, 3), (2, 4), (2, 5), (3, 4)]:
        yield g_nm_presentation(n, m)
    yield abelian_cgroup(3)
    yield abelian_cgroup(4)


@pytest.mark.parametrize("p", list(small_presentations()), ids=lambda p: p.label)
def test_pipeline_matches_brute_force(p):
    mat = build_matrix(p)
    want = sympy_minor_gcd(mat)
    assert minor_gcd(mat) == want
    assert minor_gcd(simplify_unit_pivots(mat)) == want
    assert alexander_polynomial(p).canonical == want


@pytest.mark.parametrize("m", range(1, 7))
def test_two_strand_series(m):
    expected = sympy_canonical((1 - T) * sum(T ** (2 * i) for i in range(m)))
    assert alexander_polynomial(g_nm_presentation(2, 2 * m)).canonical == expected


def test_g2_values():
    r = alexander_polynomial(g2_presentation())
    assert r.canonical == asc(-1, 0, 1)
    assert r.matrix_shape == (7, 4)
    assert r.components == 2
    assert r.checks.all_passed
    assert r.checks["components_multiplicity"].passed


def test_universal_three():
    r = alexander_polynomial(universal_hurwitz(3))
    assert r.canonical == asc(-1, 1) ** 2 * asc(1, 1, 1)
    assert r.factorization.factors == ((1, 2), (3, 1))


def test_trefoil():
    r = alexander_polynomial(g_nm_presentation(2, 3))
    assert r.canonical == asc(1, -1, 1)
    assert r.factorization.factors == ((6, 1),)
    sym = r.checks["irreducible_symmetry"]
    assert sym.applicable and sym.passed


@pytest.mark.parametrize("n", range(1, 6))
def test_abelian_groups(n):
    assert alexander_polynomial(abelian_cgroup(n)).canonical == asc(-1, 1) ** (n - 1)


def test_check_names_and_negative_control():
    report = verify_polynomial(asc(-2, 1), 4, 1)
    assert tuple(report.checks) == CHECK_NAMES
    assert not report["constant_term"].passed
    assert "2" in report["constant_term"].detail
    assert "constant_term" in report.failures()


def test_checks_flag_bad_roots_and_multiplicity():
    report = verify_polynomial(asc(1, 1, 1), 4, 1)
    assert not report["roots_of_unity"].passed
    report = verify_polynomial(asc(-1, 0, 1), 4, 1)
    assert not report["components_multiplicity"].passed


def test_prime_power_degree_forces_trivial():
    report = verify_polynomial(asc(1, 1), 4, 1)
    assert not report["prime_power_trivial"].passed
    assert verify_polynomial(ONE, 8, 1)["prime_power_trivial"].passed


def test_checks_not_applicable_without_degree():
    report = verify_polynomial(asc(1, -1, 1), None, 1)
    assert report.all_passed
    assert not any(c.applicable for c in report.checks.values())


def test_determinism():
    a = alexander_polynomial(torus_hurwitz(2, 3))
    b = alexander_polynomial(torus_hurwitz(2, 3))
    assert a == b and a.to_json() == b.to_json()


def test_permutation_invariance():
    rng = random.Random(5)
    for p in [g2_presentation(), universal_hurwitz(4), g_nm_presentation(3, 4)]:
        base = alexander_polynomial(p).canonical
        for _ in range(5):
            rels = list(p.relations)
            rng.shuffle(rels)
            perm = list(range(1, p.generator_count + 1))
            rng.shuffle(perm)
            mapping = {i + 1: perm[i] for i in range(len(perm))}
            q = CPresentation(p.generator_count, tuple(r.relabel(mapping) for r in rels), p.hurwitz_degree)
            assert alexander_polynomial(q).canonical == base


def test_adding_relations_divides():
    big = universal_hurwitz(6)
    extra = torus_hurwitz(2, 3)
    quotient = CPresentation(6, big.relations + extra.relations, 6)
    d_big = alexander_polynomial(big).canonical
    d_quot = alexander_polynomial(quotient).canonical
    assert d_quot == asc(1, -1, 1)
    assert d_quot.divides(d_big)


def test_parallel_workers_agree():
    p = universal_hurwitz(4)
    mat = build_matrix(p)
    assert minor_gcd(mat, workers=2) == minor_gcd(mat, workers=1)


def test_json_schema():
    obj = alexander_polynomial(g2_presentation()).to_json()
    assert obj["canonical"] == [-1, 0, 1]
    assert obj["factors"] == [{"d": 1, "mult": 1}, {"d": 2, "mult": 1}]
    assert obj["components"] == 2 and obj["generators"] == 4 and obj["hurwitz_degree"] == 4
    assert set(obj) >= {"label", "canonical", "unit", "factors", "generators", "components", "hurwitz_degree", "checks"}
    assert all({"pass", "detail"} <= set(c) for c in obj["checks"].values())
    f = factor_cyclotomic(LaurentPoly(0, obj["canonical"]))
    assert f.to_json() == obj["factors"]
