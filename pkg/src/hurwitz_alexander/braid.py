"""Braid words and the Artin action of Br_n on the free group F_n.

``sigma_j`` sends ``x_j -> x_j x_{j+1} x_j^-1`` and ``x_{j+1} -> x_j`` and
fixes the other generators. Braid words act letter by letter, left to
right. Torus-link monodromies ``(sigma_1 ... sigma_{n-1})^m`` give the
presentations ``G_{n,m}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .laurent import LaurentPoly, canonicalize
from .presentation import CPresentation, CRelation
from .words import Word, _WordParser, extract_conjugate


class BraidIndexError(ValueError):
    pass


class NotCoprimeError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """Word in the standard generators ``s1..s_{n-1}`` of Br_n; letters are ``(i, ±1)``."""

    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidIndexError("a braid needs at least 2 strands")
        object.__setattr__(self, "letters", tuple(self.letters))
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise BraidIndexError(f"s{i} is not a generator of Br_{self.strands}")
            if s not in (1, -1):
                raise ValueError("braid letters carry exponent +1 or -1")

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> BraidWord:
        """Parse ``"s1 s2^-1 (s1 s2)^3"``; strands default to the largest index + 1."""
        w = _WordParser(text, "s").parse()
        n = strands if strands is not None else w.max_generator() + 1
        return cls(max(n, 2), tuple(w.letters()))

    @classmethod
    def from_generators(cls, strands: int, gens: Iterable[int]) -> BraidWord:
        """Positive word; a negative entry ``-i`` stands for ``s_i^-1``."""
        return cls(strands, tuple((abs(g), 1 if g > 0 else -1) for g in gens))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise BraidIndexError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> BraidWord:
        base = self if n >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(n))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for i, s in self.letters)


def _sigma_images(j: int, sign: int) -> dict[int, Word]:
    xj, xk = Word.gen(j), Word.gen(j + 1)
    if sign > 0:
        return {j: xj * xk * xj.inverse(), j + 1: xj}
    return {j: xk, j + 1: xk.inverse() * xj * xk}


def artin_apply(b: BraidWord, w: Word) -> Word:
    """
    Apply ``b`` to ``w``, one letter at a time from the left.

    >>> artin_apply(BraidWord.parse("s1"), Word.parse("x2"))
    Word('x1')
    """
    if w.max_generator() > b.strands:
        raise BraidIndexError(f"{w} uses generators beyond x{b.strands}")
    for j, s in b.letters:
        w = w.substitute(_sigma_images(j, s))
    return w


def artin_images(b: BraidWord) -> list[Word]:
    """Images of ``x1..x_n``."""
    return [artin_apply(b, Word.gen(i)) for i in range(1, b.strands + 1)]


def same_action(a: BraidWord, b: BraidWord) -> bool:
    """Equal images of every generator; the Artin representation is faithful."""
    return a.strands == b.strands and artin_images(a) == artin_images(b)


def half_twist(n: int) -> BraidWord:
    """Garside element ``(s1)(s2 s1)...(s_{n-1}...s1)``."""
    gens = [i for k in range(1, n) for i in range(k, 0, -1)]
    return BraidWord.from_generators(n, gens)


def full_twist(n: int) -> BraidWord:
    """``(s1 ... s_{n-1})^n``, the square of the Garside element."""
    return BraidWord.from_generators(n, list(range(1, n)) * n)


def b_nm(n: int, m: int) -> BraidWord:
    """Braid monodromy ``(s1 ... s_{n-1})^m`` of ``w^n = z^m``."""
    if m < 1:
        raise ValueError("m must be positive")
    return BraidWord.from_generators(n, list(range(1, n)) * m)


def braid_presentation(b: BraidWord, label: str | None = None) -> CPresentation:
    """``<x1..x_n | x_i = b(x_i)>`` with each relation stored as a conjugation."""
    rels = []
    for i in range(1, b.strands + 1):
        j, conj = extract_conjugate(artin_apply(b, Word.gen(i)))
        rels.append(CRelation(i, j, conj))
    return CPresentation(b.strands, tuple(rels), label=label)


def g_nm_presentation(n: int, m: int) -> CPresentation:
    """
    ``G_{n,m}``: relations ``x_i = b_{n,m}(x_i)``.

    Hurwitz degree ``n*m`` with central word ``(x1...x_n)^m``.
    """
    p = braid_presentation(b_nm(n, m), label=f"G_{{{n},{m}}}")
    central = Word.product(range(1, n + 1)) ** m
    return CPresentation(p.generator_count, p.relations, n * m, p.label, central)


def le_formula(n: int, m: int) -> LaurentPoly:
    """Exact quotient ``(t-1)(t^{nm}-1) / ((t^n-1)(t^m-1))`` for coprime ``n, m``."""
    if math.gcd(n, m) != 1:
        raise NotCoprimeError(f"n = {n} and m = {m} are not coprime")

    def tpow_minus_one(k: int) -> LaurentPoly:
        return LaurentPoly(0, [-1] + [0] * (k - 1) + [1])

    num = tpow_minus_one(1) * tpow_minus_one(n * m)
    den = tpow_minus_one(n) * tpow_minus_one(m)
    return canonicalize(num.exact_div(den))[0]

