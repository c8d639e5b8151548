"""Alexander polynomials of C-groups via the abelianized Fox matrix.

Pipeline: relators -> Fox matrix over Z[t, t^-1] -> unit-pivot elimination
-> GCD of the maximal proper minors -> canonical form -> cyclotomic
factorization -> structural checks.
"""

from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .laurent import (
    ONE,
    ZERO,
    CyclotomicFactorization,
    LaurentPoly,
    canonicalize,
    cyclotomic,
    factor_cyclotomic,
    gcd,
    is_reciprocal,
    prime_power_base,
)
from .presentation import CPresentation, components
from .words import fox_abelianized

WORKERS_ENV = "HURWITZ_ALEXANDER_WORKERS"

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlexanderMatrix:
    """Rows are relators, columns generators; ``columns[c]`` is the original generator index."""

    rows: tuple[tuple[LaurentPoly, ...], ...]
    columns: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def row_sums_vanish(self) -> bool:
        return all(sum(row, ZERO).is_zero() for row in self.rows)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)


def build_matrix(p: CPresentation) -> AlexanderMatrix:
    """Fox matrix of the nonempty relators of ``p``."""
    m = p.generator_count
    rows = []
    for r in p.relators():
        if not r:
            continue
        rows.append(tuple(fox_abelianized(r, i) for i in range(1, m + 1)))
    mat = AlexanderMatrix(tuple(rows), tuple(range(1, m + 1)))
    assert mat.row_sums_vanish(), "Fox matrix row does not sum to zero"
    return mat


def simplify_unit_pivots(mat: AlexanderMatrix) -> AlexanderMatrix:
    """
    Eliminate unit entries ``±t^k``.

    With the lexicographically first unit at ``(r, c)``, clear column ``c``
    in every other row by adding multiples of row ``r``, then drop row ``r``
    and column ``c``. The first elementary ideal is unchanged.
    """
    rows = [list(row) for row in mat.rows if any(row)]
    cols = list(mat.columns)
    while True:
        pivot = _first_unit(rows)
        if pivot is None:
            break
        r, c = pivot
        prow = rows[r]
        inv = prow[c] ** -1
        out = []
        for i, row in enumerate(rows):
            if i == r:
                continue
            f = row[c]
            if f:
                f = f * inv
                row = [a - f * b for a, b in zip(row, prow)]
            del row[c]
            if any(row):
                out.append(row)
        rows = out
        del cols[c]
    return AlexanderMatrix(tuple(_dedupe_rows(rows)), tuple(cols))


def _dedupe_rows(rows) -> list[tuple[LaurentPoly, ...]]:
    """Drop rows that are a unit multiple of an earlier row."""
    seen = set()
    out = []
    for row in rows:
        lead = next(e for e in row if e)
        unit = LaurentPoly.monomial(lead.lowest, 1 if lead.leading > 0 else -1) ** -1
        key = tuple(e * unit for e in row)
        if key not in seen:
            seen.add(key)
            out.append(tuple(row))
    return out


def _first_unit(rows: list[list[LaurentPoly]]) -> tuple[int, int] | None:
    for r, row in enumerate(rows):
        for c, e in enumerate(row):
            if e.is_unit():
                return r, c
    return None


def determinant(rows) -> LaurentPoly:
    """Fraction-free Bareiss elimination over Z[t, t^-1]."""
    n = len(rows)
    if n == 0:
        return ONE
    a = [list(r) for r in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * akk - aik * row_k[j]
                row_i[j] = num.exact_div(prev) if prev != ONE else num
        prev = akk
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _minor(args) -> LaurentPoly:
    rows, rsub, csub = args
    return determinant([[rows[r][c] for c in csub] for r in rsub])


def _minor_gcd_chunk(args) -> LaurentPoly:
    rows, jobs = args
    acc = ZERO
    for rsub, csub in jobs:
        d = _minor((rows, rsub, csub))
        if d:
            acc = canonicalize(d)[0] if not acc else gcd(acc, d)
            if acc == ONE:
                break
    return acc


def minor_gcd(mat: AlexanderMatrix, workers: int | None = None) -> LaurentPoly:
    """
    Canonical GCD of all ``(cols-1) x (cols-1)`` minors.

    Column subsets form the outer loop and row subsets the inner one, both
    lexicographic; accumulation stops once the GCD is 1. Returns ZERO when
    there are fewer than ``cols - 1`` rows or every minor vanishes.
    """
    nrows, ncols = mat.shape
    k = ncols - 1
    if k <= 0:
        return ONE
    if nrows < k:
        return ZERO
    rows = mat.rows
    jobs = [
        (rsub, csub)
        for csub in itertools.combinations(range(ncols), k)
        for rsub in itertools.combinations(range(nrows), k)
    ]
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    if workers <= 1 or len(jobs) < 64:
        return _minor_gcd_chunk((rows, jobs))
    size = -(-len(jobs) // (workers * 4))
    chunks = [(rows, jobs[i : i + size]) for i in range(0, len(jobs), size)]
    acc = ZERO
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_minor_gcd_chunk, chunks):
            if part:
                acc = part if not acc else gcd(acc, part)
    return acc


def t_minus_one_multiplicity(p: LaurentPoly) -> int:
    q = canonicalize(p)[0]
    phi1 = cyclotomic(1)
    mult = 0
    while q.span >= 1:
        quo, rem = q.divmod_poly(phi1)
        if rem:
            break
        q = quo
        mult += 1
    return mult


# checks


@dataclass(frozen=True)
class Check:
    passed: bool
    detail: str
    applicable: bool = True

    def to_json(self) -> dict:
        return {"pass": self.passed, "detail": self.detail, "applicable": self.applicable}


@dataclass(frozen=True)
class CheckReport:
    checks: dict[str, Check]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def __getitem__(self, name: str) -> Check:
        return self.checks[name]

    def to_json(self) -> dict:
        return {name: c.to_json() for name, c in self.checks.items()}


CHECK_NAMES = (
    "constant_term",
    "roots_of_unity",
    "divides_universal",
    "components_multiplicity",
    "irreducible_symmetry",
    "prime_power_trivial",
    "sign",
)


def _na(reason: str) -> Check:
    return Check(True, f"not applicable: {reason}", applicable=False)


def universal_bound(m: int, cap: int | None = None) -> LaurentPoly:
    """``(t-1)(t^m-1)^(m-2)``; with ``cap`` the exponent is ``min(m-2, cap)``."""
    if m < 2:
        return ONE
    e = m - 2 if cap is None else min(m - 2, cap)
    return LaurentPoly(0, (-1, 1)) * (LaurentPoly(0, [-1] + [0] * (m - 1) + [1]) ** e)


def verify_polynomial(
    delta: LaurentPoly,
    m: int | None,
    k: int,
    factorization: CyclotomicFactorization | None = None,
) -> CheckReport:
    """
    Structural checks on a canonical Alexander polynomial of a Hurwitz
    C-group of degree ``m`` with ``k`` irreducible components.
    """
    checks: dict[str, Check] = {}
    if m is None:
        for name in CHECK_NAMES:
            checks[name] = _na("no Hurwitz degree recorded")
        return CheckReport(checks)
    if delta.is_zero():
        checks["constant_term"] = Check(False, "Alexander polynomial is 0")
        for name in CHECK_NAMES[1:]:
            checks[name] = Check(False, "Alexander polynomial is 0")
        return CheckReport(checks)
    q = canonicalize(delta)[0]
    if factorization is None:
        factorization = factor_cyclotomic(q)
    c0 = q.coeff(0)
    deg = q.span

    checks["constant_term"] = Check(abs(c0) == 1, f"Delta(0) = {c0}")

    if not factorization.complete:
        checks["roots_of_unity"] = Check(False, f"non-cyclotomic residual {factorization.residual}")
    else:
        bad = [d for d, _ in factorization.factors if m % d]
        checks["roots_of_unity"] = Check(
            not bad,
            f"factor indices {[d for d, _ in factorization.factors]} vs m = {m}"
            + (f"; {bad} do not divide m" if bad else ""),
        )

    bound = universal_bound(m, deg)
    ok = q.divides(bound)
    checks["divides_universal"] = Check(ok, f"Delta {'divides' if ok else 'does not divide'} (t-1)(t^{m}-1)^{m - 2}")

    mult = t_minus_one_multiplicity(q)
    checks["components_multiplicity"] = Check(
        mult == k - 1,
        f"multiplicity of (t-1) is {mult}, components - 1 = {k - 1}"
        + ("" if mult >= k - 1 else "; (t-1)^(k-1) does not divide Delta"),
    )

    if k == 1:
        recip = is_reciprocal(q)
        even = deg % 2 == 0
        at_one = q(1)
        checks["irreducible_symmetry"] = Check(
            recip and even and at_one == 1,
            f"reciprocal={recip}, degree={deg}, Delta(1)={at_one}",
        )
        p = prime_power_base(m)
        if p is not None:
            checks["prime_power_trivial"] = Check(q == ONE, f"m = {m} is a power of {p}; Delta = {q}")
        else:
            checks["prime_power_trivial"] = _na(f"m = {m} is not a prime power")
    else:
        checks["irreducible_symmetry"] = _na(f"{k} components")
        checks["prime_power_trivial"] = _na(f"{k} components")

    # (-1)^deg * Delta(0) = (-1)^(deg - (k-1)) in the det(h - t) normalization
    char_c0 = c0 if deg % 2 == 0 else -c0
    want = (-1) ** ((deg - (k - 1)) % 2)
    checks["sign"] = Check(char_c0 == want, f"det(h - t) Delta(0) = {char_c0}, expected {want}")
    return CheckReport(checks)


@dataclass(frozen=True)
class AlexanderResult:
    canonical: LaurentPoly
    factorization: CyclotomicFactorization | None
    generator_count: int
    components: int
    hurwitz_degree: int | None
    checks: CheckReport
    label: str | None = None
    matrix_shape: tuple[int, int] = (0, 0)
    reduced_shape: tuple[int, int] = (0, 0)

    @property
    def char_sign(self) -> LaurentPoly:
        return self.canonical.char_sign() if self.canonical else ZERO

    def to_json(self) -> dict:
        deg = self.canonical.span if self.canonical else 0
        return {
            "label": self.label,
            "canonical": self.canonical.ascending() if self.canonical else [],
            "unit": {"sign": -1 if deg % 2 else 1, "t_power": 0},
            "factors": self.factorization.to_json() if self.factorization else [],
            "residual": (
                str(self.factorization.residual)
                if self.factorization and not self.factorization.complete
                else None
            ),
            "generators": self.generator_count,
            "components": self.components,
            "hurwitz_degree": self.hurwitz_degree,
            "checks": self.checks.to_json(),
        }


def verify(result: AlexanderResult) -> CheckReport:
    return verify_polynomial(result.canonical, result.hurwitz_degree, result.components, result.factorization)


def alexander_polynomial(
    p: CPresentation,
    simplify: bool = True,
    workers: int | None = None,
) -> AlexanderResult:
    """Full pipeline on a presentation."""
    mat = build_matrix(p)
    reduced = simplify_unit_pivots(mat) if simplify or mat.shape[1] > 6 else mat
    log.debug("%s: Fox matrix %s, reduced %s", p.label, mat.shape, reduced.shape)
    raw = minor_gcd(reduced, workers)
    k = components(p)
    if raw.is_zero():
        canonical, fac = ZERO, None
    else:
        canonical = canonicalize(raw)[0]
        fac = factor_cyclotomic(canonical)
    report = verify_polynomial(canonical, p.hurwitz_degree, k, fac)
    return AlexanderResult(
        canonical=canonical,
        factorization=fac,
        generator_count=p.generator_count,
        components=k,
        hurwitz_degree=p.hurwitz_degree,
        checks=report,
        label=p.label,
        matrix_shape=mat.shape,
        reduced_shape=reduced.shape,
    )
