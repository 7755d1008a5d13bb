"""Residue doubling dynamics behind the Gamma computation chains.

A chain starts at a fraction ``x0 = p/q`` in (0, 1] and repeatedly maps
``x -> 2x`` (reducing by one whenever the result exceeds 1) until it

* reaches exactly 1 (``Gamma(1) = 1`` ends the chain),
* returns to a fraction already visited, or
* reaches ``1 - x_j`` for an already visited ``x_j`` (closed by reflection).

The first such hit gives the shortest chain.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

__all__ = [
    "StepKind",
    "Closure",
    "ChainStep",
    "Chain",
    "double_step",
    "minimal_chain",
    "pm_order",
    "replay",
    "render_chain",
]


class StepKind(enum.Enum):
    DOUBLE = "double"          # p -> 2p
    REDUCE_MOD = "reduce_mod"  # p -> p (mod q), only right after a doubling past 1
    REFLECT = "reflect"        # p -> q - p, closing step only


class Closure(enum.Enum):
    CYCLE_SAME_PLUS = "cycle_same_plus"
    CYCLE_REFLECT_MINUS = "cycle_reflect_minus"
    TERMINATES_AT_ONE = "terminates_at_one"

    @property
    def sign(self) -> int:
        return -1 if self is Closure.CYCLE_REFLECT_MINUS else 1


@dataclass(frozen=True)
class ChainStep:
    kind: StepKind
    at: Fraction  # argument the step is applied to


@dataclass(frozen=True)
class Chain:
    start: Fraction
    steps: Tuple[ChainStep, ...]
    closure: Closure
    doublings: int
    reentry_index: int = 0
    original: Tuple[int, int] | None = field(default=None, compare=False)

    @property
    def sign(self) -> int:
        return self.closure.sign

    @property
    def visited(self) -> Tuple[Fraction, ...]:
        """Fractions x_0, ..., x_m in (0, 1], one per doubling plus the start."""
        return replay(self.start, self.steps)

    @property
    def duplication_points(self) -> Tuple[Fraction, ...]:
        """The arguments x_0, ..., x_{m-1} at which a doubling was applied."""
        return tuple(s.at for s in self.steps if s.kind is StepKind.DOUBLE)

    @property
    def is_empty(self) -> bool:
        return not self.steps


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def double_step(x) -> Tuple[Fraction, List[ChainStep]]:
    """Map ``x`` in (0, 1) to ``2x`` brought back into (0, 1].

    Returns the new fraction and the steps taken: ``[Double]`` or
    ``[Double, ReduceMod]`` when ``2x`` exceeded 1.
    """
    x = _as_fraction(x)
    if not 0 < x < 1:
        raise ValueError(f"double_step needs 0 < x < 1, got {x}")
    y = 2 * x
    steps = [ChainStep(StepKind.DOUBLE, x)]
    if y > 1:
        steps.append(ChainStep(StepKind.REDUCE_MOD, y))
        y -= 1
    return y, steps


def minimal_chain(p: int, q: int) -> Chain:
    """Shortest closing computation chain starting at ``p/q``.

    Non-reduced input is reduced first; the original pair is kept on the
    returned chain for reporting.
    """
    if q < 1:
        raise ValueError(f"denominator must be >= 1, got {q}")
    if not 1 <= p <= q:
        raise ValueError(f"need 1 <= p <= q, got p={p}, q={q}")
    q0 = q
    start = Fraction(p, q)
    if start == 1:
        return Chain(start, (), Closure.TERMINATES_AT_ONE, 0, 0, (p, q0))

    # x_i = k_i / q over the fixed reduced denominator; ints keep the loop cheap
    q = start.denominator
    k = start.numerator
    index = {k: 0}
    steps: List[ChainStep] = []
    cap = 4 * q
    for m in range(1, cap + 1):
        steps.append(ChainStep(StepKind.DOUBLE, Fraction(k, q)))
        k *= 2
        if k > q:
            steps.append(ChainStep(StepKind.REDUCE_MOD, Fraction(k, q)))
            k -= q
        if k == q:
            return Chain(start, tuple(steps), Closure.TERMINATES_AT_ONE, m, m, (p, q0))
        if k in index:
            return Chain(start, tuple(steps), Closure.CYCLE_SAME_PLUS, m, index[k], (p, q0))
        if q - k in index:
            steps.append(ChainStep(StepKind.REFLECT, Fraction(k, q)))
            return Chain(start, tuple(steps), Closure.CYCLE_REFLECT_MINUS, m, index[q - k],
                         (p, q0))
        index[k] = m
    raise RuntimeError(f"chain from {start} did not close within {cap} doublings")


def replay(start, steps) -> Tuple[Fraction, ...]:
    """Re-apply ``steps`` from ``start``; returns x_0, ..., x_m.

    A trailing reflection is checked for consistency but adds no new point.
    """
    x = _as_fraction(start)
    out = [x]
    it = iter(steps)
    for step in it:
        if step.kind is StepKind.DOUBLE:
            if step.at != x:
                raise ValueError(f"step applied at {step.at}, chain is at {x}")
            x = 2 * x
            if x <= 1:
                out.append(x)
        elif step.kind is StepKind.REDUCE_MOD:
            if step.at != x or x <= 1:
                raise ValueError(f"invalid reduction at {step.at}")
            x -= 1
            out.append(x)
        else:
            if step.at != x:
                raise ValueError(f"reflection applied at {step.at}, chain is at {x}")
            if next(it, None) is not None:
                raise ValueError("reflection must be the closing step")
    return tuple(out)


def pm_order(a: int, n: int) -> Tuple[int, int]:
    """Least ``m >= 1`` with ``a**m == +1`` or ``-1`` modulo odd ``n``.

    Returns ``(m, sign)``. For ``n = 1`` every residue is 1, giving ``(1, +1)``.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 1, got {n}")
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    if n == 1:
        return 1, 1
    r = 1
    for m in range(1, n + 1):
        r = r * a % n
        if r == 1:
            return m, 1
        if r == n - 1:
            return m, -1
    raise AssertionError("unreachable: the multiplicative group is finite")


def _gamma_text(x: Fraction) -> str:
    return f"\u0393({x})"


def render_chain(chain: Chain) -> str:
    """Arrow notation, e.g. ``Γ(1/7) → Γ(2/7) → Γ(4/7) → Γ(8/7) → Γ(1/7)``.

    Doublings show the unreduced argument ``2x``; a reduction then shows
    ``2x - 1`` and the closing reflection shows ``1 - x``.
    """
    if chain.is_empty:
        return f"{_gamma_text(chain.start)} = 1"
    terms = [chain.start]
    for step in chain.steps:
        if step.kind is StepKind.DOUBLE:
            terms.append(2 * step.at)
        elif step.kind is StepKind.REDUCE_MOD:
            terms.append(step.at - 1)
        else:
            terms.append(1 - step.at)
    return " \u2192 ".join(_gamma_text(x) for x in terms)
