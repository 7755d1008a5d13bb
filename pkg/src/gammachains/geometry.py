"""Bookkeeping on the curves y^2 = 1 - x^n behind the periods I_{n/k}.

``I_{n/k} = 2k int_0^1 x^(k-1) dx / sqrt(1 - x^n)`` integrates the
differential ``x^(k-1) dx / y``; it is holomorphic on the compact surface
when ``k <= genus(n)`` and has a pole at infinity otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .closed_form import ClosedForm, solve_closed_form
from .numerics import context, eval_expr, ref_gamma

__all__ = [
    "FormClass",
    "FormKind",
    "Verdict",
    "TranscendenceVerdict",
    "EllipticStatus",
    "TableRow",
    "genus",
    "classify_form",
    "schneider",
    "uses_meromorphic",
    "table_row",
]

PUBLISHED_TABLE_MAX_Q = 8


class FormKind(enum.Enum):
    HOLOMORPHIC = "holomorphic"
    MEROMORPHIC = "meromorphic_pole_at_infinity"


class Verdict(enum.Enum):
    PROVEN_TRANSCENDENTAL = "proven_transcendental"
    NOT_APPLICABLE = "criterion_not_applicable"


class EllipticStatus(enum.Enum):
    """Annotation copied from the published table; never computed."""

    YES = "yes"
    UNKNOWN = "unknown"
    NOT_AVAILABLE = "n/a"


_ELLIPTIC_LOOKUP = {2: EllipticStatus.YES, 3: EllipticStatus.YES, 4: EllipticStatus.YES,
                    5: EllipticStatus.UNKNOWN, 6: EllipticStatus.YES,
                    7: EllipticStatus.UNKNOWN, 8: EllipticStatus.YES}


@dataclass(frozen=True)
class FormClass:
    n: int
    k: int
    kind: FormKind

    @property
    def holomorphic(self) -> bool:
        return self.kind is FormKind.HOLOMORPHIC


@dataclass(frozen=True)
class TranscendenceVerdict:
    verdict: Verdict
    witness: Tuple[Fraction, Fraction]  # (a, b) in B(a, b)

    @property
    def proven(self) -> bool:
        return self.verdict is Verdict.PROVEN_TRANSCENDENTAL


def genus(n: int) -> int:
    """Genus of the compact curve y^2 = 1 - x^n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return (n - 1) // 2


def classify_form(n: int, k: int) -> FormClass:
    if n < 3:
        raise ValueError(f"the differential classification needs n >= 3, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    kind = FormKind.HOLOMORPHIC if k <= genus(n) else FormKind.MEROMORPHIC
    return FormClass(n, k, kind)


def schneider(nk) -> TranscendenceVerdict:
    """Schneider's criterion applied to I_{n/k} = (2k/n) B(k/n, 1/2).

    B(a, b) with rational a, b, a + b all non-integral is transcendental.
    """
    nk = Fraction(nk)
    if nk < 1:
        raise ValueError(f"period index must be >= 1, got {nk}")
    a, b = 1 / nk, Fraction(1, 2)
    ok = a.denominator != 1 and (a + b).denominator != 1
    return TranscendenceVerdict(
        Verdict.PROVEN_TRANSCENDENTAL if ok else Verdict.NOT_APPLICABLE, (a, b))


def _meromorphic_index(s: Fraction) -> bool:
    n, k = s.numerator, s.denominator
    if n < 3:  # I_1, I_2: no geometric reading
        return False
    return not classify_form(n, k).holomorphic


def uses_meromorphic(cf: ClosedForm) -> bool:
    """True iff some I_{n/k} in the closed form comes from a meromorphic form."""
    return any(_meromorphic_index(s) for s in cf.expr.i_indices())


@dataclass(frozen=True)
class TableRow:
    q: int
    closed_form: ClosedForm
    uses_meromorphic: bool
    elliptic_K_status: EllipticStatus
    schneider: Dict[Fraction, TranscendenceVerdict] = field(default_factory=dict)
    forms: Dict[Fraction, Optional[FormClass]] = field(default_factory=dict)
    rel_error: Optional[float] = None

    @property
    def extrapolated(self) -> bool:
        """Rows beyond the published table are computed fresh."""
        return self.q > PUBLISHED_TABLE_MAX_Q


def table_row(q: int, digits: Optional[int] = 50) -> TableRow:
    """Row for Gamma(1/q); pass ``digits=None`` to skip numeric verification."""
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    cf = solve_closed_form(1, q)
    indices = cf.expr.i_indices()
    forms = {s: classify_form(s.numerator, s.denominator) if s.numerator >= 3 else None
             for s in indices}
    rel = None
    if digits is not None:
        ctx = context(digits + 10)
        want = ctx.mpf(ref_gamma(cf.arg, digits)) ** cf.exponent
        rel = float(abs(ctx.mpf(eval_expr(cf.expr, digits)) / want - 1))
    return TableRow(
        q=q,
        closed_form=cf,
        uses_meromorphic=uses_meromorphic(cf),
        elliptic_K_status=_ELLIPTIC_LOOKUP.get(q, EllipticStatus.NOT_AVAILABLE),
        schneider={s: schneider(s) for s in indices},
        forms=forms,
        rel_error=rel,
    )
