"""C-presentations: groups whose relations are all conjugations between generators.

A relation ``x_i = w^-1 x_j w`` is a :class:`CRelation`. The line-oriented
DSL read by :func:`parse` looks like::

    # the group G(2)
    label: G(2)
    generators: 4
    rel: x4 = x2^2 x1 x2^-2
    rel: x3 = x2
    rel: x2 = x4^2 x2 x4^-2
    central: x1 x2 x3 x4

``central: <word>`` expands to one relation ``x_i = w^-1 x_i w`` per
generator. ``hurwitz_degree: <d>`` records the Hurwitz degree and
``hurwitz_word: <word>`` a central quasipositive word of that length when
it is not simply ``x1 ... xm``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from .words import NotAConjugateError, Word, WordSyntaxError, _WordParser, extract_conjugate


class PresentationError(ValueError):
    pass


class PresentationSyntaxError(PresentationError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class IndexOutOfRangeError(PresentationError):
    pass


@dataclass(frozen=True)
class CRelation:
    """``x_left = conjugator^-1 * x_right * conjugator``.

    The conjugator is normalized so it does not begin with a power of
    ``x_right`` (such a prefix commutes with ``x_right`` and cancels).
    """

    left: int
    right: int
    conjugator: Word = field(default_factory=Word)

    def __post_init__(self):
        runs = self.conjugator.runs
        if runs and runs[0][0] == self.right:
            object.__setattr__(self, "conjugator", Word(runs[1:]))

    def rhs(self) -> Word:
        return Word.gen(self.right).conjugate(self.conjugator)

    def relator(self) -> Word:
        """``x_left^-1 * w^-1 * x_right * w``, freely reduced."""
        return Word.gen(self.left, -1) * self.rhs()

    def is_trivial(self) -> bool:
        return not self.relator()

    def relabel(self, mapping: dict[int, int]) -> CRelation:
        return CRelation(
            mapping.get(self.left, self.left),
            mapping.get(self.right, self.right),
            self.conjugator.relabel(mapping),
        )

    def __str__(self) -> str:
        return f"x{self.left} = {self.rhs()}"


class UnionFind:
    """Disjoint sets over ``1..n`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


@dataclass(frozen=True)
class CPresentation:
    """
    A C-presentation on generators ``x1..x_{generator_count}``.

    ``hurwitz_degree`` is the asserted Hurwitz degree. When it exceeds the
    generator count, ``hurwitz_word`` holds a central quasipositive word of
    that length (one letter per C-generator of the larger presentation).
    """

    generator_count: int
    relations: tuple[CRelation, ...] = ()
    hurwitz_degree: int | None = None
    label: str | None = None
    hurwitz_word: Word | None = None

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        m = self.generator_count
        if m < 1:
            raise PresentationError("a presentation needs at least one generator")
        for rel in self.relations:
            for idx in (rel.left, rel.right, rel.conjugator.max_generator()):
                if idx > m:
                    raise IndexOutOfRangeError(f"generator x{idx} out of range 1..{m} in {rel}")
        if self.hurwitz_word is not None and self.hurwitz_word.max_generator() > m:
            raise IndexOutOfRangeError("hurwitz_word uses generators out of range")

    def relators(self) -> list[Word]:
        return [rel.relator() for rel in self.relations]

    def product_word(self) -> Word:
        """``x1 x2 ... x_m``."""
        return Word.product(range(1, self.generator_count + 1))

    def central_word(self) -> Word | None:
        """The recorded central word: ``hurwitz_word`` or, at full degree, ``x1...x_m``."""
        if self.hurwitz_word is not None:
            return self.hurwitz_word
        if self.hurwitz_degree == self.generator_count:
            return self.product_word()
        return None

    def with_label(self, label: str) -> CPresentation:
        return replace(self, label=label)

    def render(self) -> str:
        return render(self)


def components(p: CPresentation) -> int:
    """Number of irreducible components: rank of the abelianization."""
    return len(component_classes(p))


def component_classes(p: CPresentation) -> list[list[int]]:
    uf = UnionFind(p.generator_count)
    for rel in p.relations:
        uf.union(rel.left, rel.right)
    classes: dict[int, list[int]] = {}
    for g in range(1, p.generator_count + 1):
        classes.setdefault(uf.find(g), []).append(g)
    return sorted(classes.values())


def relators(p: CPresentation) -> list[Word]:
    return p.relators()


def central_relations(m: int, y: Word) -> list[CRelation]:
    return [CRelation(i, i, y) for i in range(1, m + 1)]


def ensure_hurwitz(p: CPresentation, degree: int | None = None) -> CPresentation:
    """
    Add ``x_i = y^-1 x_i y`` (``y = x1...x_m``) for each generator where
    missing and set ``hurwitz_degree = m``.

    The caller vouches that ``y`` is central in the presented group; if it is
    not, the group changes.
    """
    m = p.generator_count
    if degree is not None and degree != m:
        raise PresentationError(f"Hurwitz degree {degree} differs from generator count {m}")
    present = set(p.relations)
    added = [r for r in central_relations(m, p.product_word()) if r not in present]
    return replace(p, relations=p.relations + tuple(added), hurwitz_degree=m, hurwitz_word=None)


# DSL


_LINE = re.compile(r"^\s*([a-z_]+)\s*:\s*(.*?)\s*$")
_REL = re.compile(r"^x(\d+)\s*=\s*(.*)$")


def _parse_word(text: str, lineno: int, offset: int) -> Word:
    try:
        return _WordParser(text, "x", offset).parse()
    except WordSyntaxError as exc:
        raise PresentationSyntaxError(str(exc).rsplit(" (column", 1)[0], lineno, exc.column) from exc


def parse(text: str) -> CPresentation:
    """
    Parse the presentation DSL.

    >>> p = parse("generators: 2\\nrel: x1 = x2^-1 x1 x2")
    >>> p.generator_count, len(p.relations)
    (2, 1)
    """
    m = None
    degree = None
    label = None
    hword = None
    relations: list[tuple[int, CRelation | Word]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        mt = _LINE.match(line)
        if not mt:
            raise PresentationSyntaxError("expected '<key>: <value>'", lineno)
        key, value = mt.group(1), mt.group(2)
        vcol = mt.start(2) + 1
        if key == "generators":
            if m is not None:
                raise PresentationSyntaxError("duplicate 'generators'", lineno)
            m = _parse_int(value, lineno, vcol)
        elif key == "hurwitz_degree":
            degree = _parse_int(value, lineno, vcol)
        elif key == "label":
            label = value
        elif key == "hurwitz_word":
            hword = _parse_word(value, lineno, vcol - 1)
        elif key == "central":
            relations.append((lineno, _parse_word(value, lineno, vcol - 1)))
        elif key == "rel":
            mr = _REL.match(value)
            if not mr:
                raise PresentationSyntaxError("expected 'x<i> = <word>'", lineno, vcol)
            left = int(mr.group(1))
            rhs = _parse_word(mr.group(2), lineno, vcol - 1 + mr.start(2))
            try:
                j, conj = extract_conjugate(rhs)
            except NotAConjugateError as exc:
                raise NotAConjugateError(f"line {lineno}: {exc}") from None
            relations.append((lineno, CRelation(left, j, conj)))
        else:
            raise PresentationSyntaxError(f"unknown key '{key}'", lineno)
    if m is None:
        raise PresentationSyntaxError("missing 'generators: <m>'", 1)
    rels: list[CRelation] = []
    for lineno, item in relations:
        new = central_relations(m, item) if isinstance(item, Word) else [item]
        for r in new:
            idx = max(r.left, r.right, r.conjugator.max_generator())
            if idx > m:
                raise IndexOutOfRangeError(f"line {lineno}: generator x{idx} out of range 1..{m}")
        rels.extend(new)
    return CPresentation(m, tuple(rels), degree, label, hword)


def _parse_int(value: str, lineno: int, col: int) -> int:
    try:
        n = int(value)
    except ValueError:
        raise PresentationSyntaxError(f"expected an integer, got {value!r}", lineno, col) from None
    if n < 1:
        raise PresentationSyntaxError("value must be positive", lineno, col)
    return n


def render(p: CPresentation) -> str:
    lines = []
    if p.label is not None:
        lines.append(f"label: {p.label}")
    lines.append(f"generators: {p.generator_count}")
    if p.hurwitz_degree is not None:
        lines.append(f"hurwitz_degree: {p.hurwitz_degree}")
    if p.hurwitz_word is not None:
        lines.append(f"hurwitz_word: {p.hurwitz_word}")
    lines.extend(f"rel: {rel}" for rel in p.relations)
    return "\n".join(lines) + "\n"

