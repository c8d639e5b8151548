"""Exact integer Laurent polynomials in one variable ``t``.

Values are immutable. Coefficients are Python ints, so arithmetic never
overflows. Alongside the ring operations this module provides GCDs
(primitive pseudo-remainder sequence), the canonical representative
modulo units ``±t^k``, cyclotomic polynomials and trial-division
factorization into cyclotomic factors.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence


class NonDivisibleError(ArithmeticError):
    """Raised by exact division when the divisor does not divide."""


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


@dataclass(frozen=True, init=False)
class LaurentPoly:
    """
    An element of Z[t, t^-1].

    ``coeffs[i]`` is the coefficient of ``t^(lowest + i)``. The first and last
    stored coefficients are nonzero; zero is ``LaurentPoly(0, ())``.

    >>> LaurentPoly(0, (-1, 1)) * LaurentPoly(0, (1, 1))
    LaurentPoly('t^2 - 1')
    >>> LaurentPoly(-1, (0, 0, 3))
    LaurentPoly('3*t')
    """

    lowest: int
    coeffs: tuple[int, ...]

    def __init__(self, lowest: int = 0, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        lo, hi = 0, len(c)
        while lo < hi and c[lo] == 0:
            lo += 1
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "lowest", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "lowest", int(lowest) + lo)
            object.__setattr__(self, "coeffs", tuple(c[lo:hi]))

    # constructors

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> LaurentPoly:
        return cls(exponent, (c,))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> LaurentPoly:
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(k, 0) for k in range(lo, hi + 1)])

    @classmethod
    def from_ascending(cls, coeffs: Sequence[int]) -> LaurentPoly:
        """Polynomial ``c0 + c1*t + ...`` from its ascending coefficient list."""
        return cls(0, coeffs)

    # basic queries

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """True for ``±t^k``, the units of Z[t, t^-1]."""
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    @property
    def highest(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return self.lowest + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """Width ``highest - lowest``; the degree of the canonical part."""
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, exponent: int) -> int:
        i = exponent - self.lowest
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def __call__(self, x):
        """Evaluate at ``x``; exact for ints and Fractions."""
        if not self.coeffs:
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.lowest:
            acc = acc * x**self.lowest
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # ring operations

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.lowest, [-c for c in self.coeffs])

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.lowest, other.lowest)
        hi = max(self.highest, other.highest)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs, self.lowest - lo):
            out[i] += c
        for i, c in enumerate(other.coeffs, other.lowest - lo):
            out[i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(self.lowest + other.lowest, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise NonDivisibleError("only units have negative powers")
            return LaurentPoly(-self.lowest * (-n), (self.coeffs[0] ** (-n),))
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t^k``."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.lowest + k, self.coeffs)

    def divmod_poly(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """
        Division with remainder after aligning both lowest exponents at zero.

        Requires that every leading-coefficient division along the way is
        exact over Z; otherwise raises NonDivisibleError.
        """
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return LaurentPoly(), LaurentPoly()
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        dn = len(den) - 1
        q = [0] * max(len(num) - dn, 0)
        for k in range(len(num) - 1, dn - 1, -1):
            c = num[k]
            if c == 0:
                continue
            qc, r = divmod(c, lead)
            if r:
                raise NonDivisibleError(f"leading coefficient {lead} does not divide {c}")
            q[k - dn] = qc
            for j in range(dn + 1):
                num[k - dn + j] -= qc * den[j]
        shift = self.lowest - other.lowest
        quotient = LaurentPoly(shift, q)
        remainder = LaurentPoly(self.lowest, num[:dn])
        return quotient, remainder

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """
        Exact quotient in Z[t, t^-1].

        >>> (LaurentPoly(0, (-1, 0, 0, 1))).exact_div(LaurentPoly(0, (-1, 1)))
        LaurentPoly('t^2 + t + 1')
        """
        other = _coerce(other)
        try:
            q, r = self.divmod_poly(other)
        except NonDivisibleError as exc:
            raise NonDivisibleError(f"{other} does not divide {self}") from exc
        if r:
            raise NonDivisibleError(f"{other} does not divide {self}")
        return q

    def divides(self, other: LaurentPoly) -> bool:
        """True when ``self`` divides ``other`` in Z[t, t^-1]."""
        if not self.coeffs:
            return not other.coeffs
        try:
            other.exact_div(self)
        except NonDivisibleError:
            return False
        return True

    def __floordiv__(self, other) -> LaurentPoly:
        return self.exact_div(other)

    # unit handling

    def canonical(self) -> LaurentPoly:
        return canonicalize(self)[0]

    def char_sign(self) -> LaurentPoly:
        """``(-1)^deg`` times the canonical part, i.e. leading term ``(-t)^deg``."""
        q = self.canonical()
        return -q if q.span % 2 else q

    def substitute_inverse(self) -> LaurentPoly:
        """``p(t^-1)``."""
        if not self.coeffs:
            return self
        return LaurentPoly(-self.highest, reversed(self.coeffs))

    # rendering

    def ascending(self) -> list[int]:
        """Coefficients ``[c0, c1, ...]`` of a polynomial with lowest exponent >= 0."""
        if self.lowest < 0:
            raise ValueError("negative exponents present")
        return [0] * self.lowest + list(self.coeffs)

    def to_json(self) -> dict:
        return {"lowest": self.lowest, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> LaurentPoly:
        return cls(obj["lowest"], obj["coeffs"])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(self.highest, self.lowest - 1, -1):
            c = self.coeff(e)
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(0, (x,))
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly(0, (1,))
T = LaurentPoly(1, (1,))


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+)\s*\*?\s*)?
        (t(?:\s*\^\s*(-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """
    Parse the textual rendering produced by ``str(LaurentPoly)``.

    >>> parse_laurent("t^2 - t + 1")
    LaurentPoly('t^2 - t + 1')
    >>> parse_laurent("-3*t^-2 + 1")
    LaurentPoly('1 - 3*t^-2')
    """
    text = text.strip()
    if text == "0":
        return ZERO
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse Laurent polynomial at {pos}: {text!r}")
        if m.group(1) is None and not first:
            raise ValueError(f"missing sign at {pos}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exp = 0
        terms[exp] = terms.get(exp, 0) + sign * mag
        pos = m.end()
        first = False
    return LaurentPoly.from_dict(terms)


def canonicalize(p: LaurentPoly) -> tuple[LaurentPoly, int, int]:
    """
    Strip the unit ``sign * t^shift``: returns ``(q, sign, shift)`` with
    ``p == sign * t^shift * q``, ``q(0) != 0`` and positive leading coefficient.

    >>> canonicalize(LaurentPoly(3, (1, -1)))
    (LaurentPoly('t - 1'), -1, 3)
    """
    if not p.coeffs:
        raise ZeroPolynomialError("cannot canonicalize the zero polynomial")
    sign = 1 if p.coeffs[-1] > 0 else -1
    q = LaurentPoly(0, p.coeffs if sign > 0 else [-c for c in p.coeffs])
    return q, sign, p.lowest


def is_reciprocal(p: LaurentPoly) -> bool:
    return p.coeffs == p.coeffs[::-1]


# GCD


def primitive_part(p: LaurentPoly) -> LaurentPoly:
    c = p.content()
    if c == 0:
        return p
    if p.leading < 0:
        c = -c
    return LaurentPoly(p.lowest, [x // c for x in p.coeffs])


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ascending integer coefficient lists, ``deg a >= deg b``."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j in range(db + 1):
            a[shift + j] -= la * b[j]
        while a and a[-1] == 0:
            a.pop()
    return a


def _prim(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    Canonical GCD in Z[t, t^-1] (defined up to units ``±t^k``).

    Integer content GCD times the primitive pseudo-remainder-sequence GCD of
    the primitive parts.

    >>> gcd(LaurentPoly(0, (-1, 0, 1)), LaurentPoly(0, (-1, 0, 0, 1)))
    LaurentPoly('t - 1')
    """
    if not a.coeffs and not b.coeffs:
        raise ZeroPolynomialError("gcd(0, 0) is undefined")
    if not a.coeffs:
        return canonicalize(b)[0]
    if not b.coeffs:
        return canonicalize(a)[0]
    cont = math.gcd(a.content(), b.content())
    x = _prim(list(a.coeffs))
    y = _prim(list(b.coeffs))
    if len(x) < len(y):
        x, y = y, x
    while y and len(y) > 1:
        r = _pseudo_rem(x, y)
        x, y = y, (_prim(r) if r else [])
    if y:
        # a nonzero constant remainder: the primitive parts are coprime
        x = [1]
    g = LaurentPoly(0, [cont * c for c in x])
    return canonicalize(g)[0]


def gcd_many(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """GCD of a sequence; ZERO when every entry is zero."""
    acc = ZERO
    for p in polys:
        if not p.coeffs:
            continue
        acc = canonicalize(p)[0] if not acc.coeffs else gcd(acc, p)
        if acc == ONE:
            break
    return acc


# cyclotomic polynomials


def factor_integer(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    result = n
    for p in factor_integer(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_power_base(n: int) -> int | None:
    """``p`` when ``n = p^k`` with ``k >= 1``, else None."""
    if n < 2:
        return None
    fac = factor_integer(n)
    if len(fac) == 1:
        return next(iter(fac))
    return None


_cyclo_cache: dict[int, LaurentPoly] = {}
_cyclo_lock = threading.Lock()


def cyclotomic(d: int) -> LaurentPoly:
    """
    The d-th cyclotomic polynomial: ``(1 + t + ... + t^(d-1))`` divided by
    the product of ``Φ_e`` over proper divisors ``e > 1`` of ``d``.

    >>> cyclotomic(6)
    LaurentPoly('t^2 - t + 1')
    """
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    cached = _cyclo_cache.get(d)
    if cached is not None:
        return cached
    if d == 1:
        phi = LaurentPoly(0, (-1, 1))
    else:
        phi = LaurentPoly(0, [1] * d)
        for e in divisors(d)[1:-1]:
            phi = phi.exact_div(cyclotomic(e))
    with _cyclo_lock:
        _cyclo_cache.setdefault(d, phi)
    return phi


@dataclass(frozen=True)
class CyclotomicFactorization:
    """
    ``sign * t^t_shift * prod(Φ_d^mult) * residual`` reproduces the input.

    ``residual`` is ONE for a complete factorization; anything else is the
    non-cyclotomic leftover.
    """

    sign: int
    t_shift: int
    factors: tuple[tuple[int, int], ...]
    residual: LaurentPoly = ONE

    @property
    def complete(self) -> bool:
        return self.residual == ONE

    def multiplicity(self, d: int) -> int:
        for idx, mult in self.factors:
            if idx == d:
                return mult
        return 0

    def reconstruct(self) -> LaurentPoly:
        p = self.residual
        for d, mult in self.factors:
            p = p * cyclotomic(d) ** mult
        return (p * self.sign).shift(self.t_shift)

    def to_json(self) -> list[dict]:
        return [{"d": d, "mult": m} for d, m in self.factors]


def factor_cyclotomic(p: LaurentPoly) -> CyclotomicFactorization:
    """
    Trial-divide by every ``Φ_d`` with ``φ(d) <= deg``; ``d`` runs up to
    ``2*deg^2 + 1``, which covers every ``d`` with ``φ(d) <= deg``.

    >>> factor_cyclotomic(LaurentPoly(0, (-1, 0, 1))).factors
    ((1, 1), (2, 1))
    """
    q, sign, shift = canonicalize(p)
    deg = q.span
    factors = []
    rest = q
    for d in range(1, 2 * deg * deg + 2):
        if rest.span < 1:
            break
        if euler_phi(d) > rest.span:
            continue
        phi = cyclotomic(d)
        mult = 0
        while rest.span >= phi.span:
            quo, rem = rest.divmod_poly(phi)
            if rem:
                break
            rest = quo
            mult += 1
        if mult:
            factors.append((d, mult))
    return CyclotomicFactorization(sign, shift, tuple(factors), rest)
