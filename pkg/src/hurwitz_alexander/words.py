"""Freely reduced words in a free group on generators x1, x2, ...

A word is stored run-length encoded: a tuple of ``(generator, exponent)``
pairs with nonzero exponents and distinct neighbouring generators, which
is the unique freely reduced form. Generators are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .laurent import LaurentPoly, ZERO


class NotAConjugateError(ValueError):
    """The word is not of the form ``u * x_j * u^-1``."""


class WordSyntaxError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


def _reduce(runs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for g, e in runs:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            e += stack.pop()[1]
            if e == 0:
                continue
        stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True, init=False)
class Word:
    """
    Element of a free group.

    >>> Word.parse("x1 x2") * Word.parse("x2^-1 x3")
    Word('x1 x3')
    >>> Word.gen(1).conjugate(Word.gen(2))
    Word('x2^-1 x1 x2')
    """

    runs: tuple[tuple[int, int], ...]

    def __init__(self, runs: Iterable[tuple[int, int]] = ()):
        runs = tuple((int(g), int(e)) for g, e in runs)
        for g, _ in runs:
            if g < 1:
                raise ValueError(f"generator index must be positive, got {g}")
        object.__setattr__(self, "runs", _reduce(runs))

    @classmethod
    def gen(cls, i: int, e: int = 1) -> Word:
        return cls(((i, e),))

    @classmethod
    def product(cls, gens: Iterable[int]) -> Word:
        """``x_{g1} x_{g2} ...`` for the given generator indices."""
        return cls((g, 1) for g in gens)

    @classmethod
    def parse(cls, text: str) -> Word:
        return _WordParser(text, "x").parse()

    def __len__(self) -> int:
        """Letter length (sum of absolute exponents)."""
        return sum(abs(e) for _, e in self.runs)

    def __bool__(self) -> bool:
        return bool(self.runs)

    def letters(self) -> Iterator[tuple[int, int]]:
        """Single letters ``(generator, ±1)`` left to right."""
        for g, e in self.runs:
            s = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, s

    def generators(self) -> set[int]:
        return {g for g, _ in self.runs}

    def max_generator(self) -> int:
        return max((g for g, _ in self.runs), default=0)

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.runs + other.runs)

    def inverse(self) -> Word:
        return Word((g, -e) for g, e in reversed(self.runs))

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        return Word(base.runs * abs(n))

    def conjugate(self, by: Word) -> Word:
        """``by^-1 * self * by``."""
        return by.inverse() * self * by

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.runs)

    def substitute(self, images: dict[int, Word]) -> Word:
        """Apply the endomorphism ``x_g -> images[g]``; missing keys are fixed."""
        out: list[tuple[int, int]] = []
        for g, e in self.runs:
            img = images.get(g)
            if img is None:
                out.append((g, e))
                continue
            piece = img if e > 0 else img.inverse()
            out.extend(piece.runs * abs(e))
        return Word(out)

    def relabel(self, mapping: dict[int, int]) -> Word:
        return Word((mapping.get(g, g), e) for g, e in self.runs)

    def fox(self, i: int) -> LaurentPoly:
        return fox_abelianized(self, i)

    def __str__(self) -> str:
        return " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.runs)

    def __repr__(self) -> str:
        return f"Word('{self}')"


IDENTITY = Word()


def fox_abelianized(w: Word, i: int) -> LaurentPoly:
    """
    Image of the Fox derivative ``d w / d x_i`` under ``x_j -> t``.

    One left-to-right scan with the running exponent sum ``e``: a run
    ``x_i^k`` contributes ``t^e + ... + t^(e+k-1)`` for ``k > 0`` and
    ``-(t^(e-1) + ... + t^(e+k))`` for ``k < 0``.

    >>> fox_abelianized(Word.parse("x1 x2 x1^-1 x2^-1"), 1)
    LaurentPoly('-t + 1')
    """
    terms: dict[int, int] = {}
    e = 0
    for g, k in w.runs:
        if g == i:
            if k > 0:
                for s in range(e, e + k):
                    terms[s] = terms.get(s, 0) + 1
            else:
                for s in range(e + k, e):
                    terms[s] = terms.get(s, 0) - 1
        e += k
    return LaurentPoly.from_dict(terms) if terms else ZERO


def exponent_sum(w: Word) -> int:
    return w.exponent_sum()


def extract_conjugate(w: Word) -> tuple[int, Word]:
    """
    Split ``w = u * x_j * u^-1`` and return ``(j, u^-1)``, so that
    ``w == x_j.conjugate(u^-1)``.

    >>> extract_conjugate(Word.parse("x1 x2 x1^-1"))
    (2, Word('x1^-1'))
    """
    runs = w.runs
    n = len(runs)
    if n % 2 == 0:
        raise NotAConjugateError(f"{w} is not a conjugate of a generator")
    mid = n // 2
    j, e = runs[mid]
    if e != 1:
        raise NotAConjugateError(f"{w} is not a conjugate of a generator")
    for k in range(mid):
        g1, e1 = runs[k]
        g2, e2 = runs[n - 1 - k]
        if g1 != g2 or e1 != -e2:
            raise NotAConjugateError(f"{w} is not a conjugate of a generator")
    u = Word(runs[:mid])
    return j, u.inverse()


class _WordParser:
    """
    Recursive-descent parser for ``x1 x2^-2 (x1 x2)^3``.

    Atoms are ``<prefix><index>`` or a parenthesized group, each optionally
    followed by ``^<int>``; juxtaposition is multiplication.
    """

    _token = re.compile(r"\s*(?:(\()|(\))|(\^)\s*([+-]?\d+)|([A-Za-z])(\d+)|(\S))")

    def __init__(self, text: str, prefix: str, offset: int = 0):
        self.text = text
        self.prefix = prefix
        self.offset = offset
        self.tokens = self._lex()
        self.pos = 0

    def _lex(self) -> list[tuple[str, object, int]]:
        out = []
        for m in self._token.finditer(self.text):
            col = m.start() + len(m.group(0)) - len(m.group(0).lstrip()) + 1 + self.offset
            if m.group(1):
                out.append(("(", None, col))
            elif m.group(2):
                out.append((")", None, col))
            elif m.group(3):
                out.append(("^", int(m.group(4)), col))
            elif m.group(5):
                if m.group(5) != self.prefix:
                    raise WordSyntaxError(
                        f"expected generator '{self.prefix}<n>', got '{m.group(5)}{m.group(6)}'", col
                    )
                out.append(("gen", int(m.group(6)), col))
            else:
                raise WordSyntaxError(f"unexpected character {m.group(7)!r}", col)
        return out

    def parse(self) -> Word:
        runs = self._sequence()
        if self.pos != len(self.tokens):
            _, _, col = self.tokens[self.pos]
            raise WordSyntaxError("unbalanced ')'", col)
        return Word(runs)

    def _sequence(self) -> list[tuple[int, int]]:
        runs: list[tuple[int, int]] = []
        while self.pos < len(self.tokens):
            kind, val, col = self.tokens[self.pos]
            if kind == ")":
                break
            if kind == "^":
                raise WordSyntaxError("exponent without a base", col)
            self.pos += 1
            if kind == "gen":
                if val < 1:
                    raise WordSyntaxError("generator index must be positive", col)
                atom = [(val, 1)]
            else:
                atom = self._sequence()
                if self.pos >= len(self.tokens) or self.tokens[self.pos][0] != ")":
                    raise WordSyntaxError("missing ')'", col)
                self.pos += 1
            power = 1
            if self.pos < len(self.tokens) and self.tokens[self.pos][0] == "^":
                power = self.tokens[self.pos][1]
                self.pos += 1
            runs.extend((Word(atom) ** power).runs)
        return runs
