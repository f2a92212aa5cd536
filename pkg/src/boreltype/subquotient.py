"""Monomial subquotient modules M = I/J and their graded structure.

A subquotient is presented by a pair of monomial ideals J <= I; the module is
the image of I in S/J.  The denominator must be nonzero unless the module is
zero (I = J): that is exactly the syntactic form of the standing hypothesis
that M agrees with its torsion submodule, which the chain and filtration
machinery depends on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError, NotArtinianError, ZeroModuleError
from .monomial import Monomial, MonomialIdeal, monomials_of_degree


@dataclass(frozen=True)
class Subquotient:
    numerator: MonomialIdeal
    denominator: MonomialIdeal

    def __post_init__(self):
        if self.numerator.nvars != self.denominator.nvars:
            raise DimensionMismatchError(
                f"numerator over {self.numerator.nvars} variables, "
                f"denominator over {self.denominator.nvars}"
            )
        if not self.numerator.contains(self.denominator):
            raise ValueError(
                f"denominator {self.denominator} is not contained in "
                f"numerator {self.numerator}"
            )
        if self.denominator.is_zero() and self.numerator != self.denominator:
            raise ValueError(
                "a torsion subquotient needs a nonzero denominator "
                "(or numerator = denominator for the zero module)"
            )

    @staticmethod
    def cyclic(ideal: MonomialIdeal) -> "Subquotient":
        """The quotient ring S/ideal presented as unit/ideal."""
        return Subquotient(MonomialIdeal.unit(ideal.nvars), ideal)

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def is_zero(self) -> bool:
        return self.numerator == self.denominator

    def is_cyclic(self) -> bool:
        return self.numerator.is_unit()

    def torsion_submodule(self, support: MonomialIdeal) -> MonomialIdeal:
        """The ideal L with L/J = the submodule killed by a power of ``support``.

        Computed as I intersected with the saturation of J by the support
        ideal.  Saturating by the unit ideal returns J itself, so the torsion
        submodule at the unit ideal is zero, as it should be.
        """
        if support.is_zero():
            raise ValueError("torsion support must be a nonzero ideal")
        return self.denominator.saturate(support).intersect(self.numerator)

    def quotient_by(self, middle: MonomialIdeal) -> "Subquotient":
        """The quotient of this module by the submodule middle/denominator."""
        if not middle.contains(self.denominator):
            raise ValueError("quotient ideal must contain the denominator")
        if not self.numerator.contains(middle):
            raise ValueError("quotient ideal must sit inside the numerator")
        return Subquotient(self.numerator, middle)

    def truncate(self, degree: int) -> "Subquotient":
        """The submodule generated by all elements of degree >= ``degree``."""
        if degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        n = self.nvars
        gens: list[Monomial] = []
        for g in self.numerator.gens:
            if g.degree >= degree:
                gens.append(g)
            else:
                gens.extend(g.mul(m) for m in monomials_of_degree(n, degree - g.degree))
        raised = MonomialIdeal(n, tuple(gens)).add(self.denominator)
        return Subquotient(raised, self.denominator)

    def hilbert_function(self, degree: int) -> int:
        """Number of monomials of the given degree in the numerator but not
        the denominator."""
        if degree < 0:
            return 0
        count = 0
        for m in monomials_of_degree(self.nvars, degree):
            if self.numerator.member(m) and not self.denominator.member(m):
                count += 1
        return count

    def artinian_reduction(self, r: int) -> "Subquotient":
        """The quotient by the action of the trailing variables x_{r+1}..x_n."""
        if not 1 <= r <= self.nvars:
            raise ValueError(f"reduction index {r} outside 1..{self.nvars}")
        trailing = MonomialIdeal.variables(self.nvars, range(r + 1, self.nvars + 1))
        if trailing.is_zero():
            return self
        lowered = self.denominator.add(trailing.multiply(self.numerator))
        return Subquotient(self.numerator, lowered)

    def top_nonzero_degree(self, gen_degree_bound=None, ceiling=None) -> int:
        """Largest degree with a nonzero Hilbert function, for Artinian modules.

        The scan may stop at the first vanishing degree at or past the maximum
        generator degree of the numerator: past that point every graded piece
        is generated by the previous one, so a zero stays zero.  If nothing
        vanishes up to the ceiling the module is reported as not Artinian
        within it.
        """
        if self.is_zero():
            raise ZeroModuleError("the zero module has no top degree")
        bound = self.numerator.max_gen_degree()
        if gen_degree_bound is not None:
            if gen_degree_bound < bound:
                raise ValueError(
                    f"generator degree bound {gen_degree_bound} is below the "
                    f"actual maximum {bound}"
                )
            bound = gen_degree_bound
        if ceiling is None:
            ceiling = max(10 * max(bound, 1), 40)
        ceiling = max(ceiling, bound)
        last = None
        for d in range(ceiling + 2):
            h = self.hilbert_function(d)
            if h > 0:
                last = d
            elif d >= bound:
                # nonzero module: some numerator generator survives, so a
                # nonzero value was seen before this point
                assert last is not None
                return last
            if d > ceiling:
                raise NotArtinianError(
                    f"Hilbert function does not vanish up to degree {ceiling}; "
                    "not Artinian within the ceiling"
                )
        raise AssertionError("unreachable")

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"
