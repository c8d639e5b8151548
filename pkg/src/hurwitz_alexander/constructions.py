"""Named C-presentations and constructions on Hurwitz C-presentations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .alexander import alexander_polynomial
from .braid import g_nm_presentation
from .laurent import ONE, LaurentPoly, canonicalize
from .presentation import CPresentation, CRelation, PresentationError, central_relations, ensure_hurwitz, parse
from .words import Word


class MissingHurwitzDegreeError(PresentationError):
    pass


class WitnessError(PresentationError):
    pass


def universal_hurwitz(m: int) -> CPresentation:
    """``<x1..x_m | [x_i, x1...x_m] = 1>``, the universal Hurwitz C-group of degree m."""
    if m < 2:
        raise ValueError("m must be at least 2")
    y = Word.product(range(1, m + 1))
    return CPresentation(m, tuple(central_relations(m, y)), m, f"G~_{m}")


def universal_char_oracle(m: int) -> LaurentPoly:
    """
    Characteristic polynomial ``det(t - h)`` of the monodromy on the
    abelianized kernel of the universal group, built from its permutation
    action on the free basis ``a_{0,m}``, ``a_{k,j}`` (k = 1..m, j = 2..m-1).

    ``h`` fixes ``a_{0,m}``, shifts ``a_{k,j} -> a_{k+1,j}`` and sends
    ``a_{m,j}`` back to ``a_{1,j}`` (up to conjugation by ``a_{0,m}``).
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    basis = [(0, m)] + [(k, j) for j in range(2, m) for k in range(1, m + 1)]

    def h(a: tuple[int, int]) -> tuple[int, int]:
        k, j = a
        if a == (0, m):
            return a
        return (k + 1, j) if k < m else (1, j)

    seen: set[tuple[int, int]] = set()
    charpoly = ONE
    for start in basis:
        if start in seen:
            continue
        length = 0
        a = start
        while a not in seen:
            seen.add(a)
            a = h(a)
            length += 1
        # a cycle of length L contributes t^L - 1
        charpoly = charpoly * LaurentPoly(0, [-1] + [0] * (length - 1) + [1])
    return charpoly


def abelian_cgroup(n: int) -> CPresentation:
    """Z^n as a C-group: ``x_i = x_j^-1 x_i x_j`` for all ``i != j``."""
    if n < 1:
        raise ValueError("n must be positive")
    rels = [CRelation(i, i, Word.gen(j)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return CPresentation(n, tuple(rels), n, f"Z^{n}")


G2_TEXT = """\
label: G(2)
generators: 4
rel: x4 = x2^2 x1 x2^-2
rel: x3 = x2
rel: x2 = x4^2 x2 x4^-2
central: x1 x2 x3 x4
hurwitz_degree: 4
"""


def g2_presentation() -> CPresentation:
    """The two-component group G(2) of degree 4 with Alexander polynomial t^2 - 1."""
    return parse(G2_TEXT)


@dataclass(frozen=True)
class CentralWordWitness:
    """
    A quasipositive word ``xbar_1 ... xbar_m`` with ``xbar_j = w_j^-1 x_{i_j} w_j``.

    ``letters[j-1] = (i_j, w_j)``; ``injection[i-1]`` is the position
    ``j(i)`` where ``xbar_{j(i)} = x_i`` with trivial conjugator.
    """

    letters: tuple[tuple[int, Word], ...]
    injection: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.letters)

    def validate(self, n: int) -> None:
        if len(self.injection) != n:
            raise WitnessError(f"injection must cover all {n} generators, got {len(self.injection)}")
        if len(set(self.injection)) != n:
            raise WitnessError("injection is not injective")
        for i, j in enumerate(self.injection, 1):
            if not 1 <= j <= self.degree:
                raise WitnessError(f"injection position {j} out of range")
            gen, conj = self.letters[j - 1]
            if gen != i or conj:
                raise WitnessError(f"position {j} must be x{i} with trivial conjugator")
        for gen, conj in self.letters:
            if not 1 <= gen <= n or conj.max_generator() > n:
                raise WitnessError("witness uses generators out of range")

    def word(self) -> Word:
        out = Word()
        for gen, conj in self.letters:
            out = out * Word.gen(gen).conjugate(conj)
        return out

    @classmethod
    def from_positive_word(cls, w: Word, n: int) -> CentralWordWitness:
        """Witness for a positive word; each generator is injected at its first occurrence."""
        letters = []
        for g, e in w.runs:
            if e < 0:
                raise WitnessError(f"{w} is not a positive word")
            letters.extend([(g, Word())] * e)
        first: dict[int, int] = {}
        for pos, (g, _) in enumerate(letters, 1):
            first.setdefault(g, pos)
        missing = [i for i in range(1, n + 1) if i not in first]
        if missing:
            raise WitnessError(f"generators {missing} do not occur in {w}")
        return cls(tuple(letters), tuple(first[i] for i in range(1, n + 1)))


def hurwitzify(p: CPresentation, witness: CentralWordWitness | None = None) -> CPresentation:
    """
    Expand ``p`` to a Hurwitz C-presentation of degree ``witness.degree``.

    Generator ``j`` of the result is the witness letter at position ``j``;
    the old ``x_i`` becomes generator ``j(i)``. Each non-injected position
    gets the relation ``xbar_j = w_j^-1 x_{i_j} w_j``, and the product of all
    new generators is declared central. The caller vouches that the witness
    word is central in ``p``.

    Without a witness, the recorded ``hurwitz_word`` of ``p`` is used.
    """
    n = p.generator_count
    if witness is None:
        if p.hurwitz_word is None:
            if p.hurwitz_degree == n:
                return p
            raise MissingHurwitzDegreeError(f"{p.label or 'presentation'} has no central word to expand")
        witness = CentralWordWitness.from_positive_word(p.hurwitz_word, n)
    witness.validate(n)
    m = witness.degree
    if m == n and witness.injection == tuple(range(1, n + 1)) and p.hurwitz_degree == n:
        return p
    mapping = {i: j for i, j in enumerate(witness.injection, 1)}
    rels = [rel.relabel(mapping) for rel in p.relations]
    injected = set(witness.injection)
    for j, (gen, conj) in enumerate(witness.letters, 1):
        if j not in injected:
            rels.append(CRelation(j, mapping[gen], conj.relabel(mapping)))
    out = CPresentation(m, tuple(rels), None, p.label)
    out = ensure_hurwitz(out, m)
    label = f"{p.label}^H{m}" if p.label else None
    return replace(out, label=label)


def hurwitz_product(p1: CPresentation, p2: CPresentation) -> CPresentation:
    """
    Hurwitz product of two Hurwitz C-presentations of degrees ``m1, m2``.

    The last generators of both factors are identified with a shared
    generator ``c``; each ``x_{j,i}`` (j < m_i) commutes with ``y_other^{m_i}``
    where ``y_other`` is the product of the other factor's generators. The
    result has degree ``2*m1*m2`` with central word ``y1^{m2} y2^{m1}``.
    A factor whose recorded degree exceeds its generator count is expanded
    with :func:`hurwitzify` first.
    """
    factors = []
    for p in (p1, p2):
        if p.hurwitz_degree is None:
            raise MissingHurwitzDegreeError(f"{p.label or 'presentation'} has no Hurwitz degree")
        if p.hurwitz_degree != p.generator_count:
            p = hurwitzify(p)
        factors.append(p)
    p1, p2 = factors
    m1, m2 = p1.generator_count, p2.generator_count
    c = m1 + m2 - 1
    map1 = {i: i for i in range(1, m1)}
    map1[m1] = c
    map2 = {i: m1 - 1 + i for i in range(1, m2)}
    map2[m2] = c
    y1 = Word.product(map1[i] for i in range(1, m1 + 1))
    y2 = Word.product(map2[i] for i in range(1, m2 + 1))
    rels = [r.relabel(map1) for r in p1.relations]
    rels += [r.relabel(map2) for r in p2.relations]
    rels += [CRelation(map1[j], map1[j], y2**m1) for j in range(1, m1)]
    rels += [CRelation(map2[j], map2[j], y1**m2) for j in range(1, m2)]
    label = f"{p1.label or 'P1'} ◇ {p2.label or 'P2'}"
    return CPresentation(c, tuple(rels), 2 * m1 * m2, label, y1**m2 * y2**m1)


def hurwitz_power(p: CPresentation, k: int) -> CPresentation:
    """Left-folded ``p ◇ p ◇ ... ◇ p`` with ``k`` factors."""
    if k < 1:
        raise ValueError("k must be positive")
    out = p
    for _ in range(k - 1):
        out = hurwitz_product(out, p)
    return out


def torus(n: int, m: int) -> CPresentation:
    return g_nm_presentation(n, m)


def torus_hurwitz(n: int, m: int) -> CPresentation:
    """``G_{n,m}`` expanded to a Hurwitz C-presentation of degree ``n*m``."""
    return hurwitzify(torus(n, m))


def builtin(name: str) -> CPresentation:
    """
    Named presentations: ``universal:<m>``, ``abelian:<n>``, ``g2``,
    ``torus:<n>:<m>`` and ``torus6:<n>:<m>`` (the Hurwitz expansion).
    """
    key, *args = name.split(":")
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ValueError(f"bad builtin arguments in {name!r}") from None
    table = {
        "universal": (universal_hurwitz, 1),
        "abelian": (abelian_cgroup, 1),
        "g2": (g2_presentation, 0),
        "torus": (torus, 2),
        "torus6": (torus_hurwitz, 2),
    }
    if key not in table:
        raise ValueError(f"unknown builtin {key!r}; expected one of {sorted(table)}")
    fn, arity = table[key]
    if len(nums) != arity:
        raise ValueError(f"builtin {key!r} takes {arity} integer argument(s)")
    return fn(*nums)


def search_products(
    target: LaurentPoly,
    bases: dict[str, CPresentation],
    max_factors: int = 3,
) -> list[str] | None:
    """
    Look for a Hurwitz product of ``bases`` whose Alexander polynomial is
    ``target`` up to units. Returns the factor names of the first hit, or None.

    Combinations are tried by increasing length, in sorted-name order; each
    candidate is built and run through the full pipeline.
    """
    want = canonicalize(target)[0]
    names = sorted(bases)
    for k in range(1, max_factors + 1):
        for combo in itertools.combinations_with_replacement(names, k):
            p = bases[combo[0]]
            for name in combo[1:]:
                p = hurwitz_product(p, bases[name])
            if alexander_polynomial(p).canonical == want:
                return list(combo)
    return None
