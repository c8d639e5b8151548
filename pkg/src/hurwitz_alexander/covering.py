"""First Betti numbers of cyclic coverings branched along Hurwitz curves.

Everything reduces to counting roots of the Alexander polynomial that are
n-th roots of unity: a factor ``Φ_d^mult`` with ``d | n`` contributes
``mult * φ(d)`` such roots.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import CyclotomicFactorization, euler_phi


class ResidualPresentError(ValueError):
    """The factorization has a non-cyclotomic residual."""


@dataclass(frozen=True)
class BettiReport:
    n: int
    b1: int
    r_n: int
    affine_h1_dim: int
    components: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "b1": self.b1,
            "r_n": self.r_n,
            "affine_h1_dim": self.affine_h1_dim,
            "components": self.components,
        }


def _require_complete(f: CyclotomicFactorization) -> None:
    if not f.complete:
        raise ResidualPresentError(f"non-cyclotomic residual {f.residual}")


def components_from_delta(f: CyclotomicFactorization) -> int:
    """Irreducible components: multiplicity of ``t - 1`` plus one."""
    _require_complete(f)
    return f.multiplicity(1) + 1


def betti_b1(f: CyclotomicFactorization, n: int) -> BettiReport:
    """
    ``b1`` of the resolved n-sheeted covering: roots of Delta that are n-th
    roots of unity other than 1, counted with multiplicity.

    >>> from .laurent import CyclotomicFactorization
    >>> betti_b1(CyclotomicFactorization(1, 0, ((6, 2),)), 6).b1
    4
    """
    if n < 1:
        raise ValueError("covering degree must be positive")
    _require_complete(f)
    b1 = sum(mult * euler_phi(d) for d, mult in f.factors if d > 1 and n % d == 0)
    ones = f.multiplicity(1)
    r_n = b1 + ones
    return BettiReport(n=n, b1=b1, r_n=r_n, affine_h1_dim=r_n + 1, components=ones + 1)


def factorization_from_pairs(pairs) -> CyclotomicFactorization:
    """Build a sign +1, shift 0 factorization from ``(d, mult)`` pairs."""
    merged: dict[int, int] = {}
    for d, mult in pairs:
        if d < 1 or mult < 1:
            raise ValueError("cyclotomic index and multiplicity must be positive")
        merged[d] = merged.get(d, 0) + mult
    return CyclotomicFactorization(1, 0, tuple(sorted(merged.items())))
