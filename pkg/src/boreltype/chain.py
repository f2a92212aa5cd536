"""The sequential chain of a torsion monomial subquotient.

The chain climbs from 0 to M: at each step take the largest variable index
whose torsion in the remaining quotient is nonzero, then cut at the torsion of
the whole module at that variable.  For Borel-type modules the chain is the
dimension filtration; its successive quotients become Artinian after reducing
by the trailing variables, which is what the regularity formula consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .decomposition import dimension_filtration, krull_dim
from .errors import (
    InternalInconsistencyError,
    NotBorelTypeError,
    ZeroModuleError,
)
from .monomial import Monomial, MonomialIdeal
from .subquotient import Subquotient


@dataclass(frozen=True)
class ChainStep:
    variable_index: int
    ideal: MonomialIdeal


@dataclass(frozen=True)
class SequentialChain:
    base: Subquotient
    steps: tuple[ChainStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def ideals(self) -> list[MonomialIdeal]:
        return [s.ideal for s in self.steps]

    def indices(self) -> list[int]:
        return [s.variable_index for s in self.steps]


def _variable_torsion(module: Subquotient, i: int) -> MonomialIdeal:
    return module.torsion_submodule(
        MonomialIdeal.principal(Monomial.variable(i, module.nvars))
    )


@lru_cache(maxsize=None)
def build_chain(module: Subquotient) -> SequentialChain:
    """Construct the sequential chain, guarding against non-Borel inputs.

    Precondition: the module is nonzero and is exhausted by its x1-torsion.
    The variable indices must strictly decrease and the chain ideals strictly
    grow; a violation means the chain is undefined for this module, which is
    reported as a Borel-type failure.
    """
    if module.is_zero():
        raise ZeroModuleError("the zero module has no sequential chain")
    n = module.nvars
    num = module.numerator
    if _variable_torsion(module, 1) != num:
        raise NotBorelTypeError(
            f"x1-torsion does not exhaust {module}; the chain is undefined"
        )
    steps: list[ChainStep] = []
    current = module.denominator
    previous_index = n + 1
    while current != num:
        remaining = Subquotient(num, current)
        index = None
        for j in range(n, 0, -1):
            if _variable_torsion(remaining, j) != current:
                index = j
                break
        if index is None:
            raise InternalInconsistencyError(
                f"nonzero torsion quotient {remaining} has no torsion at any variable"
            )
        if index >= previous_index:
            raise NotBorelTypeError(
                f"chain index failed to decrease at x{index}; {module} is not "
                "of Borel type"
            )
        lifted = _variable_torsion(module, index)
        if not lifted.contains(current) or lifted == current:
            raise NotBorelTypeError(
                f"chain ideal at x{index} does not strictly extend the previous "
                f"one; {module} is not of Borel type"
            )
        steps.append(ChainStep(index, lifted))
        current = lifted
        previous_index = index
    if not steps:
        raise AssertionError("unreachable: nonzero module produced an empty chain")
    return SequentialChain(module, tuple(steps))


def chain_quotients(chain: SequentialChain) -> list[tuple[Subquotient, Subquotient]]:
    """Per step: the quotient Q = L_step/L_prev and its Artinian reduction."""
    out = []
    prev = chain.base.denominator
    for step in chain.steps:
        quotient = Subquotient(step.ideal, prev)
        out.append((quotient, quotient.artinian_reduction(step.variable_index)))
        prev = step.ideal
    return out


def regular_sequence_holds(chain: SequentialChain, step_number: int) -> bool:
    """Whether x_{n_step+1}, ..., x_n is a regular sequence on the step quotient.

    Checks each variable in turn for being a nonzerodivisor on the quotient by
    the previously consumed ones: x is a nonzerodivisor on L/D exactly when
    (D : x) meet L sits inside D.
    """
    if not 1 <= step_number <= len(chain.steps):
        raise ValueError(f"step {step_number} outside 1..{len(chain.steps)}")
    n = chain.base.nvars
    step = chain.steps[step_number - 1]
    prev = (
        chain.base.denominator
        if step_number == 1
        else chain.steps[step_number - 2].ideal
    )
    top = step.ideal
    denominator = prev
    for k in range(n - step.variable_index):
        x = Monomial.variable(step.variable_index + k + 1, n)
        if not denominator.contains(denominator.colon_monomial(x).intersect(top)):
            return False
        denominator = denominator.add(MonomialIdeal.principal(x).multiply(top))
    return True


def sequential_cm_report(chain: SequentialChain) -> dict:
    """Dimensions of the chain quotients and the regular-sequence verdicts.

    Any failed assertion flags a non-Borel input or an implementation defect.
    """
    n = chain.base.nvars
    dims = []
    prev = chain.base.denominator
    for step in chain.steps:
        dims.append(krull_dim(Subquotient(step.ideal, prev)))
        prev = step.ideal
    expected = [n - s.variable_index for s in chain.steps]
    regular = [
        regular_sequence_holds(chain, k) for k in range(1, len(chain.steps) + 1)
    ]
    ok = (
        dims == expected
        and all(a < b for a, b in zip(dims, dims[1:]))
        and all(regular)
    )
    return {
        "quotient_dims": dims,
        "expected_dims": expected,
        "dims_match": dims == expected,
        "dims_strictly_increase": all(a < b for a, b in zip(dims, dims[1:])),
        "regular_sequences": regular,
        "dim": dims[-1],
        "depth": dims[0],
        "ok": ok,
    }


def torsion_ladder_matches_chain(chain: SequentialChain) -> bool:
    """The distinct nonzero torsion submodules at x_n, ..., x_1, in that order,
    must be exactly the chain ideals."""
    module = chain.base
    distinct: list[MonomialIdeal] = []
    for i in range(module.nvars, 0, -1):
        value = _variable_torsion(module, i)
        if value == module.denominator:
            continue
        if not distinct or value != distinct[-1]:
            distinct.append(value)
    return distinct == chain.ideals()


def dimension_filtration_report(ideal: MonomialIdeal) -> dict:
    """Compare the dimension filtration of S/ideal, computed through primary
    decomposition, with the single-variable torsion submodules.

    For a Borel-type quotient ring the largest submodule of dimension at most
    n - i is exactly the x_i-torsion, for every i.
    """
    module = Subquotient.cyclic(ideal)
    if not _borel_cyclic(module):
        raise NotBorelTypeError(f"S/{ideal} is not of Borel type")
    n = ideal.nvars
    entries = []
    for i in range(1, n + 1):
        via_decomposition = dimension_filtration(ideal, n - i)
        via_torsion = _variable_torsion(module, i)
        entries.append(
            {
                "i": i,
                "dim_bound": n - i,
                "equal": via_decomposition == via_torsion,
            }
        )
    return {"entries": entries, "ok": all(e["equal"] for e in entries)}


def _borel_cyclic(module: Subquotient) -> bool:
    from .borel import borel_verdict

    return borel_verdict(module).is_borel


def iterated_saturation_chain(ideal: MonomialIdeal) -> list[tuple[int, MonomialIdeal]]:
    """The ideal-level chain: repeatedly saturate at the largest variable
    appearing in the current ideal, until the unit ideal is reached.

    For Borel-type ideals this reproduces the module chain of S/ideal; the
    orchestrator checks that coincidence.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("the iterated saturation chain needs a proper nonzero ideal")
    n = ideal.nvars
    out = []
    current = ideal
    while not current.is_unit():
        bounds = current.max_exponents()
        index = max(i + 1 for i, e in enumerate(bounds) if e > 0)
        current = current.saturate(
            MonomialIdeal.principal(Monomial.variable(index, n))
        )
        out.append((index, current))
    return out
