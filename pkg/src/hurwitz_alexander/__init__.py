"""Alexander polynomials of C-groups and Hurwitz C-groups via Fox calculus."""

from .alexander import AlexanderResult, alexander_polynomial, build_matrix, minor_gcd, simplify_unit_pivots, verify
from .braid import BraidWord, artin_apply, b_nm, full_twist, g_nm_presentation, half_twist, le_formula
from .constructions import (
    CentralWordWitness,
    abelian_cgroup,
    builtin,
    g2_presentation,
    hurwitz_product,
    hurwitzify,
    search_products,
    universal_char_oracle,
    universal_hurwitz,
)
from .covering import BettiReport, betti_b1, components_from_delta
from .laurent import LaurentPoly, canonicalize, cyclotomic, factor_cyclotomic, gcd
from .presentation import CPresentation, CRelation, components, ensure_hurwitz, parse, render
from .words import Word, extract_conjugate, fox_abelianized

__version__ = "0.1.0"
