"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors over a fixed ambient ring K[x1..xn].  An ideal
is stored as its unique antichain of minimal generators in ascending
lexicographic order, so equal ideals compare, hash and serialize identically.
Every value is immutable and every operation is a pure function, which makes
all of them safe to share between threads.

The text grammar used everywhere (CLI included): a monomial is ``1`` or
``*``-separated factors ``x3`` / ``x3^2``; an ideal is one generator per line,
or the keyword ``unit``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache, reduce

from .errors import DimensionMismatchError, GuardExceededError, ParseError

# Exponents far beyond anything a desk-scale instance produces indicate a
# runaway loop rather than a legitimate input; fail loudly instead of looping.
EXPONENT_LIMIT = 1 << 20


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x1^e1 * ... * xn^en stored as its exponent vector.

    Ordering is lexicographic on the exponent vector.
    """

    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent in {exps}")
            if e > EXPONENT_LIMIT:
                raise OverflowError(f"exponent {e} exceeds the limit {EXPONENT_LIMIT}")
        object.__setattr__(self, "exps", exps)

    @staticmethod
    def unit(nvars: int) -> "Monomial":
        return Monomial((0,) * nvars)

    @staticmethod
    def variable(index: int, nvars: int) -> "Monomial":
        """The monomial x_index (1-based)."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable x{index} outside x1..x{nvars}")
        return Monomial(tuple(1 if i == index else 0 for i in range(1, nvars + 1)))

    @property
    def nvars(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_unit(self) -> bool:
        return self.degree == 0

    def _check(self, other: "Monomial") -> None:
        if len(self.exps) != len(other.exps):
            raise DimensionMismatchError(
                f"monomials over {len(self.exps)} and {len(other.exps)} variables"
            )

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def mul(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def div(self, other: "Monomial") -> "Monomial":
        """Exact division; raises ValueError when other does not divide self."""
        self._check(other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def support(self) -> tuple[int, ...]:
        """1-based indices of the variables dividing this monomial."""
        return tuple(i for i, e in enumerate(self.exps, 1) if e > 0)

    def radical_and_min_support(self) -> tuple["Monomial", int]:
        """The squarefree part and the smallest variable index in the support.

        Undefined for the unit monomial, which has empty support.
        """
        sup = self.support()
        if not sup:
            raise ValueError("the unit monomial has no support")
        return Monomial(tuple(1 if e > 0 else 0 for e in self.exps)), sup[0]

    def __str__(self) -> str:
        if self.is_unit():
            return "1"
        parts = []
        for i, e in enumerate(self.exps, 1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)


_FACTOR_RE = re.compile(r"x([0-9]+)(?:\^([0-9]+))?\Z")


def monomial_from_text(text: str, nvars: int) -> Monomial:
    """Parse the canonical text form, e.g. ``x1^2*x2`` or ``1``."""
    body = text.strip()
    if not body:
        raise ParseError("empty monomial")
    if body == "1" or body == "unit":
        return Monomial.unit(nvars)
    exps = [0] * nvars
    for factor in body.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if m is None:
            raise ParseError(f"bad monomial factor {factor.strip()!r}")
        index = int(m.group(1))
        if not 1 <= index <= nvars:
            raise ParseError(f"variable x{index} outside x1..x{nvars}")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp < 1:
            raise ParseError(f"exponent must be positive in {factor.strip()!r}")
        exps[index - 1] += exp
    return Monomial(tuple(exps))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, normalized to its minimal generators.

    The constructor accepts any iterable of monomials and keeps the antichain
    of divisibility-minimal ones, sorted lexicographically.  The zero ideal has
    no generators; the unit ideal is generated by the unit monomial.
    """

    nvars: int
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        nvars = int(self.nvars)
        if nvars < 1:
            raise ValueError("need at least one variable")
        collected = []
        for g in self.gens:
            if not isinstance(g, Monomial):
                raise TypeError(f"generator {g!r} is not a Monomial")
            if g.nvars != nvars:
                raise DimensionMismatchError(
                    f"generator over {g.nvars} variables in a {nvars}-variable ideal"
                )
            collected.append(g)
        unique = sorted(set(collected))
        minimal = tuple(
            m for m in unique if not any(g is not m and g.divides(m) for g in unique)
        )
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "gens", minimal)

    @staticmethod
    def zero(nvars: int) -> "MonomialIdeal":
        return MonomialIdeal(nvars, ())

    @staticmethod
    def unit(nvars: int) -> "MonomialIdeal":
        return MonomialIdeal(nvars, (Monomial.unit(nvars),))

    @staticmethod
    def principal(m: Monomial) -> "MonomialIdeal":
        return MonomialIdeal(m.nvars, (m,))

    @staticmethod
    def variables(nvars: int, indices) -> "MonomialIdeal":
        """The prime ideal generated by the listed variables (1-based)."""
        return MonomialIdeal(nvars, tuple(Monomial.variable(i, nvars) for i in indices))

    @staticmethod
    def prefix(nvars: int, r: int) -> "MonomialIdeal":
        """The initial-segment prime (x1, ..., xr); zero ideal for r = 0."""
        if not 0 <= r <= nvars:
            raise ValueError(f"prefix length {r} outside 0..{nvars}")
        return MonomialIdeal.variables(nvars, range(1, r + 1))

    @staticmethod
    def from_text_lines(nvars: int, lines) -> "MonomialIdeal":
        return MonomialIdeal(nvars, tuple(monomial_from_text(t, nvars) for t in lines))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def _check(self, other: "MonomialIdeal") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"ideals over {self.nvars} and {other.nvars} variables"
            )

    def member(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def contains(self, other: "MonomialIdeal") -> bool:
        """Whether self contains other as a subideal."""
        self._check(other)
        return all(self.member(g) for g in other.gens)

    def add(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        pairs = tuple(a.lcm(b) for a in self.gens for b in other.gens)
        return MonomialIdeal(self.nvars, pairs)

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        prods = tuple(a.mul(b) for a in self.gens for b in other.gens)
        return MonomialIdeal(self.nvars, prods)

    def colon_monomial(self, g: Monomial) -> "MonomialIdeal":
        """(self : g) = (lcm(m, g)/g for each minimal generator m)."""
        return MonomialIdeal(self.nvars, tuple(m.lcm(g).div(g) for m in self.gens))

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(self : other), the intersection of the single-generator colons."""
        self._check(other)
        if other.is_zero():
            raise ValueError("colon by the zero ideal is undefined here")
        parts = [self.colon_monomial(g) for g in other.gens]
        return reduce(MonomialIdeal.intersect, parts)

    def saturate(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(self : other^infinity), reached by iterating the colon to a fixpoint.

        The iterates form an ascending chain of monomial ideals whose
        generators live in a fixed exponent box, so the loop terminates.
        """
        if other.is_zero():
            raise ValueError("saturation by the zero ideal is undefined")
        current = self
        while True:
            bumped = current.colon(other)
            if bumped == current:
                return current
            current = bumped

    def max_exponents(self) -> tuple[int, ...]:
        """Componentwise max of generator exponents; all zero for the zero ideal."""
        bounds = [0] * self.nvars
        for g in self.gens:
            for i, e in enumerate(g.exps):
                if e > bounds[i]:
                    bounds[i] = e
        return tuple(bounds)

    def max_gen_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    def gens_text(self) -> list[str]:
        return [str(g) for g in self.gens]

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(self.gens_text()) + ")"


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """All monomials of the given total degree, lexicographically decreasing."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    out: list[tuple[int, ...]] = []

    def build(prefix: tuple[int, ...], position: int, left: int) -> None:
        if position == nvars - 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            build(prefix + (e,), position + 1, left - e)

    build((), 0, degree)
    return tuple(Monomial(e) for e in out)


def box_size(bounds) -> int:
    size = 1
    for b in bounds:
        size *= b + 1
    return size


def ensure_box(bounds, guard: int, context: str) -> None:
    size = box_size(bounds)
    if size > guard:
        raise GuardExceededError(
            f"{context}: enumeration box of size {size} exceeds the guard {guard}"
        )


@lru_cache(maxsize=None)
def box_monomials(bounds: tuple[int, ...]) -> tuple[Monomial, ...]:
    """All monomials with exponents componentwise at most bounds, in lex order."""
    ranges = [range(b + 1) for b in bounds]
    return tuple(Monomial(e) for e in itertools.product(*ranges))
