"""Canonical products of rational prime powers and period atoms.

A :class:`PeriodExpr` stands for

    prod_p p**e_p  *  prod_a a**e_a

with rational exponents throughout. Atoms are the period ``I_s``, the sine
factor ``sin(pi r)`` and an unresolved ``Gamma(r)``. pi itself is never an
atom; it is written ``I_2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

__all__ = [
    "IVal",
    "SinPi",
    "GammaAt",
    "Atom",
    "PeriodExpr",
    "factor_rational",
    "expr_mul",
    "expr_pow",
    "sin_pi",
    "to_canonical_string",
    "to_latex",
    "to_json",
    "from_json",
]

Rational = Union[int, Fraction]

# sin(pi r) for the denominators whose values are products of prime powers
_FOLDABLE_SINES = {
    Fraction(1, 2): {},
    Fraction(1, 3): {2: Fraction(-1), 3: Fraction(1, 2)},
    Fraction(1, 4): {2: Fraction(-1, 2)},
    Fraction(1, 6): {2: Fraction(-1)},
}
_FOLDABLE_DENOMINATORS = frozenset({1, 2, 3, 4, 6})


def factor_int(n: int) -> Dict[int, int]:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def factor_rational(r: Rational) -> Dict[int, Fraction]:
    """Prime exponents of a positive rational, e.g. 12/7 -> {2: 2, 3: 1, 7: -1}."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"only positive rationals factor into prime powers, got {r}")
    out = {p: Fraction(e) for p, e in factor_int(r.numerator).items()}
    for p, e in factor_int(r.denominator).items():
        out[p] = out.get(p, Fraction(0)) - e
    return out


def _is_prime(n: int) -> bool:
    return n >= 2 and factor_int(n) == {n: 1}


@dataclass(frozen=True, order=True)
class IVal:
    """The period I_s = 2 * int_0^1 dx / sqrt(1 - x**s), s >= 1."""

    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        if self.s < 1:
            raise ValueError(f"I_s needs s >= 1, got {self.s}")

    @property
    def kind(self) -> str:
        return "I"

    @property
    def arg(self) -> Fraction:
        return self.s


@dataclass(frozen=True, order=True)
class SinPi:
    """sin(pi r) for 0 < r <= 1/2 whose value is not a product of prime powers."""

    r: Fraction

    def __post_init__(self):
        r = Fraction(self.r)
        if not 0 < r < 1:
            raise ValueError(f"sin(pi r) atom needs 0 < r < 1, got {r}")
        if r.denominator in _FOLDABLE_DENOMINATORS:
            raise ValueError(f"sin(pi*{r}) folds into prime powers; use sin_pi()")
        object.__setattr__(self, "r", min(r, 1 - r))

    @property
    def kind(self) -> str:
        return "sinpi"

    @property
    def arg(self) -> Fraction:
        return self.r


@dataclass(frozen=True, order=True)
class GammaAt:
    """An unresolved Gamma(r), 0 < r <= 1."""

    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        if not 0 < self.r <= 1:
            raise ValueError(f"Gamma atom needs 0 < r <= 1, got {self.r}")

    @property
    def kind(self) -> str:
        return "gamma"

    @property
    def arg(self) -> Fraction:
        return self.r


Atom = Union[IVal, SinPi, GammaAt]
_KIND_ORDER = {"I": 0, "sinpi": 1, "gamma": 2}
_KIND_CLASS = {"I": IVal, "sinpi": SinPi, "gamma": GammaAt}


def _atom_key(a: Atom):
    return _KIND_ORDER[a.kind], a.arg


class PeriodExpr:
    """Immutable canonical product expression.

    Zero exponents are dropped and entries are kept sorted (primes
    ascending, then atoms by kind and argument), so equality is structural.
    """

    __slots__ = ("_primes", "_atoms")

    def __init__(self, primes: Mapping[int, Rational] | None = None,
                 atoms: Mapping[Atom, Rational] | None = None):
        pr: Dict[int, Fraction] = {}
        for p, e in (primes or {}).items():
            if not _is_prime(p):
                raise ValueError(f"prime key expected, got {p}")
            e = Fraction(e)
            if e:
                pr[p] = e
        at: Dict[Atom, Fraction] = {}
        for a, e in (atoms or {}).items():
            if not isinstance(a, (IVal, SinPi, GammaAt)):
                raise TypeError(f"not an atom: {a!r}")
            e = Fraction(e)
            if e:
                at[a] = e
        self._primes = tuple(sorted(pr.items()))
        self._atoms = tuple(sorted(at.items(), key=lambda kv: _atom_key(kv[0])))

    # constructors -----------------------------------------------------
    @classmethod
    def one(cls) -> "PeriodExpr":
        return cls()

    @classmethod
    def rational(cls, r: Rational) -> "PeriodExpr":
        return cls(primes=factor_rational(r))

    @classmethod
    def atom(cls, a: Atom, e: Rational = 1) -> "PeriodExpr":
        return cls(atoms={a: e})

    @classmethod
    def prime_power(cls, p: int, e: Rational) -> "PeriodExpr":
        return cls(primes={p: e})

    # views ------------------------------------------------------------
    @property
    def primes(self) -> Dict[int, Fraction]:
        return dict(self._primes)

    @property
    def atoms(self) -> Dict[Atom, Fraction]:
        return dict(self._atoms)

    def exponent(self, key) -> Fraction:
        """Exponent of a prime (int) or atom; 0 when absent."""
        src = self._primes if isinstance(key, int) else self._atoms
        for k, e in src:
            if k == key:
                return e
        return Fraction(0)

    def has_gamma(self) -> bool:
        return any(isinstance(a, GammaAt) for a, _ in self._atoms)

    def i_indices(self) -> Tuple[Fraction, ...]:
        return tuple(a.s for a, _ in self._atoms if isinstance(a, IVal))

    def is_one(self) -> bool:
        return not self._primes and not self._atoms

    # algebra ----------------------------------------------------------
    def __mul__(self, other: "PeriodExpr") -> "PeriodExpr":
        if not isinstance(other, PeriodExpr):
            return NotImplemented
        return expr_mul(self, other)

    def __truediv__(self, other: "PeriodExpr") -> "PeriodExpr":
        if not isinstance(other, PeriodExpr):
            return NotImplemented
        return expr_mul(self, expr_pow(other, -1))

    def __pow__(self, e: Rational) -> "PeriodExpr":
        return expr_pow(self, e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeriodExpr):
            return NotImplemented
        return self._primes == other._primes and self._atoms == other._atoms

    def __hash__(self) -> int:
        return hash((self._primes, self._atoms))

    def __repr__(self) -> str:
        return f"PeriodExpr({to_canonical_string(self)})"

    def __str__(self) -> str:
        return to_canonical_string(self)


def _merge(items: Iterable[Tuple[object, Fraction]], scale: Fraction = Fraction(1)):
    out: Dict[object, Fraction] = {}
    for k, e in items:
        out[k] = out.get(k, Fraction(0)) + e * scale
    return out


def expr_mul(a: PeriodExpr, b: PeriodExpr) -> PeriodExpr:
    """Product of two expressions (exponents add)."""
    return PeriodExpr(primes=_merge(a._primes + b._primes),
                      atoms=_merge(a._atoms + b._atoms))


def expr_pow(a: PeriodExpr, e: Rational) -> PeriodExpr:
    """Raise to a rational power (exponents scale); ``e = 0`` gives 1."""
    e = Fraction(e)
    return PeriodExpr(primes=_merge(a._primes, e), atoms=_merge(a._atoms, e))


def sin_pi(r: Rational) -> PeriodExpr:
    """sin(pi r) for 0 < r < 1, folded to prime powers where possible."""
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError(f"need 0 < r < 1, got {r}")
    r = min(r, 1 - r)
    if r in _FOLDABLE_SINES:
        return PeriodExpr(primes=_FOLDABLE_SINES[r])
    return PeriodExpr.atom(SinPi(r))


# rendering --------------------------------------------------------------

def _frac_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _pow_text(base: str, e: Fraction) -> str:
    if e == 1:
        return base
    if e.denominator == 1 and e > 0:
        return f"{base}^{e.numerator}"
    return f"{base}^({_frac_text(e)})"


def _sin_text(r: Fraction) -> str:
    num = "" if r.numerator == 1 else str(r.numerator)
    return f"sin({num}pi/{r.denominator})"


def _atom_text(a: Atom) -> str:
    if isinstance(a, IVal):
        return f"I_{a.s}" if a.s.denominator == 1 else f"I_({_frac_text(a.s)})"
    if isinstance(a, SinPi):
        return _sin_text(a.r)
    return f"Gamma({_frac_text(a.r)})"


def to_canonical_string(e: PeriodExpr) -> str:
    """Plain-text rendering in canonical order, e.g. ``2^(1/3) * 3^(1/2) * I_2 * I_3``."""
    parts = [_pow_text(str(p), x) for p, x in e._primes]
    parts += [_pow_text(_atom_text(a), x) for a, x in e._atoms]
    return " * ".join(parts) if parts else "1"


def _brace(text: str) -> str:
    return text if len(text) == 1 else "{" + text + "}"


def _latex_atom(a: Atom, pi: bool = False) -> str:
    if isinstance(a, IVal):
        if pi and a.s == 2:
            return r"\pi"
        return f"I_{_brace(_frac_text(a.s))}"
    if isinstance(a, SinPi):
        num = "" if a.r.numerator == 1 else str(a.r.numerator)
        return rf"\sin({num}\pi/{a.r.denominator})"
    return rf"\Gamma({_frac_text(a.r)})"


def _latex_factors(e: PeriodExpr, keep, flip: bool = False, pi: bool = False) -> list:
    out = []
    items = [(str(p), x, False) for p, x in e._primes]
    # periods largest index first, as in printed tables
    atoms = sorted(e._atoms, key=lambda kv: (_KIND_ORDER[kv[0].kind],
                                             -kv[0].arg if isinstance(kv[0], IVal) else kv[0].arg))
    items += [(_latex_atom(a, pi), x, not isinstance(a, IVal)) for a, x in atoms]
    for base, x, paren in items:
        if not keep(x):
            continue
        x = -x if flip else x
        if x == 1:
            out.append(base)
        else:
            if paren:
                base = rf"\left({base}\right)"
            out.append(f"{base}^{_brace(_frac_text(x))}")
    return out


def to_latex(e: PeriodExpr, fraction: bool = True, pi: bool = False) -> str:
    r"""LaTeX rendering.

    With ``fraction=True`` negative exponents go to a denominator
    (``\frac{7^6 I_7^4 ...}{2^{52/7}}``); otherwise positive-exponent factors
    come first and the negative ones follow inline. ``pi=True`` shows ``I_2``
    as ``\pi``.
    """
    pos = _latex_factors(e, lambda x: x > 0, pi=pi)
    if fraction:
        den = _latex_factors(e, lambda x: x < 0, flip=True, pi=pi)
        top = " ".join(pos) or "1"
        return rf"\frac{{{top}}}{{{' '.join(den)}}}" if den else top
    return " ".join(pos + _latex_factors(e, lambda x: x < 0, pi=pi)) or "1"


# JSON -------------------------------------------------------------------

def _frac_json(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def to_dict(e: PeriodExpr) -> dict:
    return {
        "primes": [[p, _frac_json(x)] for p, x in e._primes],
        "atoms": [{"kind": a.kind, "arg": _frac_json(a.arg), "exp": _frac_json(x)}
                  for a, x in e._atoms],
    }


def from_dict(d: Mapping) -> PeriodExpr:
    primes = {int(p): Fraction(x) for p, x in d.get("primes", [])}
    atoms: Dict[Atom, Fraction] = {}
    for item in d.get("atoms", []):
        cls = _KIND_CLASS[item["kind"]]
        a = cls(Fraction(item["arg"]))
        atoms[a] = atoms.get(a, Fraction(0)) + Fraction(item["exp"])
    return PeriodExpr(primes=primes, atoms=atoms)


def to_json(e: PeriodExpr) -> str:
    """Canonical JSON text; see ``schema/period_expr.schema.json``."""
    return json.dumps(to_dict(e), sort_keys=True)


def from_json(text: str) -> PeriodExpr:
    return from_dict(json.loads(text))
