import pytest
import sympy

from hurwitz_alexander.alexander import alexander_polynomial
from hurwitz_alexander.braid import g_nm_presentation
from hurwitz_alexander.constructions import (
    CentralWordWitness,
    MissingHurwitzDegreeError,
    WitnessError,
    abelian_cgroup,
    builtin,
    g2_presentation,
    hurwitz_power,
    hurwitz_product,
    hurwitzify,
    search_products,
    torus_hurwitz,
    universal_char_oracle,
    universal_hurwitz,
)
from hurwitz_alexander.laurent import LaurentPoly
from hurwitz_alexander.presentation import CPresentation, components, parse
from hurwitz_alexander.words import Word

from conftest import T, asc, from_sympy, sympy_canonical


def permutation_charpoly(m):
    """det(t*I - P) for the monodromy permutation, computed by sympy."""
    basis = [(0, m)] + [(k, j) for j in range(2, m) for k in range(1, m + 1)]
    index = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    P = sympy.zeros(n, n)
    for (k, j), i in index.items():
        target = (k, j) if k == 0 else ((k + 1, j) if k < m else (1, j))
        P[index[target], i] = 1
    return from_sympy(P.charpoly(T).as_expr())


@pytest.mark.parametrize("m", range(2, 6))
def test_universal_matches_oracle(m):
    formula = sympy_canonical((T - 1) * (T**m - 1) ** (m - 2))
    oracle = universal_char_oracle(m)
    assert oracle == permutation_charpoly(m)
    assert oracle == formula
    r = alexander_polynomial(universal_hurwitz(m))
    assert r.canonical == formula
    assert r.components == m
    assert r.checks.all_passed


def test_oracle_small_values():
    assert universal_char_oracle(2) == asc(-1, 1)
    assert universal_char_oracle(4).span == 9


def test_abelian_shape():
    for n in (2, 4):
        p = abelian_cgroup(n)
        assert p.hurwitz_degree == n and components(p) == n
    assert alexander_polynomial(abelian_cgroup(4)).canonical == asc(-1, 1) ** 3
    assert alexander_polynomial(abelian_cgroup(1)).canonical == asc(1)


def test_g2():
    p = g2_presentation()
    r = alexander_polynomial(p)
    assert r.canonical == asc(-1, 0, 1)
    assert r.components == 2 and r.hurwitz_degree == 4


def test_hurwitzify_trefoil():
    g = g_nm_presentation(2, 3)
    witness = CentralWordWitness.from_positive_word(Word.parse("(x1 x2)^3"), 2)
    assert witness.degree == 6 and witness.injection == (1, 2)
    h = hurwitzify(g, witness)
    assert h.generator_count == 6 and h.hurwitz_degree == 6
    assert h == torus_hurwitz(2, 3)
    r = alexander_polynomial(h)
    assert r.canonical == asc(1, -1, 1)
    assert r.checks.all_passed


def test_hurwitzify_identity_witness():
    z = abelian_cgroup(2)
    w = CentralWordWitness.from_positive_word(Word.parse("x1 x2"), 2)
    assert hurwitzify(z, w) == z


def test_witness_errors():
    g = g_nm_presentation(2, 3)
    with pytest.raises(WitnessError):
        CentralWordWitness.from_positive_word(Word.parse("x1 x1"), 2)
    bad = CentralWordWitness(((1, Word()), (1, Word())), (1, 2))
    with pytest.raises(WitnessError):
        hurwitzify(g, bad)
    with pytest.raises(WitnessError):
        hurwitzify(g, CentralWordWitness(((1, Word()),), (1,)))


def test_missing_degree():
    p = parse("generators: 2\nrel: x1 = x2^-1 x1 x2")
    with pytest.raises(MissingHurwitzDegreeError):
        hurwitz_product(p, abelian_cgroup(2))


def test_products():
    z = abelian_cgroup(2)
    zz = hurwitz_product(z, z)
    assert zz.hurwitz_degree == 8 and zz.generator_count == 3
    assert alexander_polynomial(zz).canonical == asc(-1, 1) ** 2
    r = alexander_polynomial(hurwitz_product(g2_presentation(), z))
    assert r.canonical == asc(-1, 1) ** 2 * asc(1, 1)
    h = torus_hurwitz(2, 3)
    r = alexander_polynomial(hurwitz_product(h, h))
    assert r.canonical == asc(1, -1, 1) ** 2
    assert r.checks.all_passed


def test_product_auto_expands():
    g = g_nm_presentation(2, 3)
    a = alexander_polynomial(hurwitz_product(g, g)).canonical
    assert a == asc(1, -1, 1) ** 2


def test_components_add_up_in_products():
    z, g2 = abelian_cgroup(2), g2_presentation()
    for a, b in [(z, z), (g2, z), (g2, g2)]:
        # the shared generator merges one class from each side
        assert components(hurwitz_product(a, b)) == components(a) + components(b) - 1


def test_hurwitz_power():
    p = hurwitz_power(abelian_cgroup(2), 3)
    assert alexander_polynomial(p).canonical == asc(-1, 1) ** 3


@pytest.mark.parametrize(
    "name, gens",
    [("universal:3", 3), ("abelian:2", 2), ("g2", 4), ("torus:2:3", 2), ("torus6:2:3", 6)],
)
def test_builtin(name, gens):
    assert builtin(name).generator_count == gens


@pytest.mark.parametrize("name", ["nope", "universal", "torus:2", "abelian:x"])
def test_builtin_errors(name):
    with pytest.raises(ValueError):
        builtin(name)


CORPUS_FACTORS = {
    "Z2": abelian_cgroup(2),
    "G2": g2_presentation(),
    "T23": torus_hurwitz(2, 3),
    "U3": universal_hurwitz(3),
}


@pytest.mark.parametrize("a, b", [(a, b) for a in CORPUS_FACTORS for b in CORPUS_FACTORS])
def test_product_multiplicativity(a, b):
    pa, pb = CORPUS_FACTORS[a], CORPUS_FACTORS[b]
    da = alexander_polynomial(pa).canonical
    db = alexander_polynomial(pb).canonical
    prod = alexander_polynomial(hurwitz_product(pa, pb))
    assert prod.canonical == da * db
    assert prod.checks.all_passed


@pytest.mark.parametrize("n, m", [(2, 3), (2, 5), (3, 4), (2, 4)])
def test_hurwitzify_keeps_polynomial(n, m):
    g = g_nm_presentation(n, m)
    assert alexander_polynomial(hurwitzify(g)).canonical == alexander_polynomial(g).canonical


def test_search_products():
    bases = {"Z2": abelian_cgroup(2), "T23": torus_hurwitz(2, 3)}
    target = asc(1, -1, 1) * asc(-1, 1)
    assert search_products(target, bases, max_factors=2) == ["T23", "Z2"]
    assert search_products(asc(1, 1), bases, max_factors=2) is None
