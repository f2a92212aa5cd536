"""Castelnuovo-Mumford regularity of Borel-type modules via the sequential
chain.

For a Borel-type module the regularity is the maximum, over the chain steps,
of the top nonvanishing degree of the Artinian reduction of the step quotient.
The report also carries the dimension and depth read off the first and last
chain indices, and the a-invariants (top degree minus quotient dimension) per
step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .borel import borel_verdict
from .chain import SequentialChain, build_chain, chain_quotients
from .errors import GuardExceededError, NotBorelTypeError, ZeroModuleError
from .subquotient import Subquotient


@dataclass(frozen=True)
class RegularityStep:
    variable_index: int
    top_degree: int
    quotient_dim: int
    a_invariant: int


@dataclass(frozen=True)
class RegularityReport:
    regularity: int
    dim: int
    depth: int
    steps: tuple[RegularityStep, ...]
    chain: SequentialChain

    def to_json(self) -> dict:
        return {
            "regularity": self.regularity,
            "dim": self.dim,
            "depth": self.depth,
            "steps": [
                {
                    "variable_index": s.variable_index,
                    "top_degree": s.top_degree,
                    "quotient_dim": s.quotient_dim,
                    "a_invariant": s.a_invariant,
                }
                for s in self.steps
            ],
        }


def regularity(module: Subquotient, ceiling=None) -> RegularityReport:
    """Regularity, dimension and depth of a Borel-type module."""
    if module.is_zero():
        raise ZeroModuleError("regularity is undefined for the zero module")
    if not borel_verdict(module).is_borel:
        raise NotBorelTypeError(f"{module} is not of Borel type")
    chain = build_chain(module)
    n = module.nvars
    steps = []
    for step, (_, reduced) in zip(chain.steps, chain_quotients(chain)):
        top = reduced.top_nonzero_degree(ceiling=ceiling)
        dim = n - step.variable_index
        steps.append(RegularityStep(step.variable_index, top, dim, top - dim))
    return RegularityReport(
        regularity=max(s.top_degree for s in steps),
        dim=n - chain.steps[-1].variable_index,
        depth=n - chain.steps[0].variable_index,
        steps=tuple(steps),
        chain=chain,
    )


def regularity_oracle_check(module: Subquotient, oracle_guard=None, field="q") -> dict:
    """Cross-validate the chain regularity of a cyclic module against the
    brute-force Betti-number computation on the same ideal.

    Returns a comparison record; reports the oracle as skipped when its
    enumeration box exceeds the guard.
    """
    from .betti import DEFAULT_ORACLE_GUARD, betti_table, oracle_invariants

    if not module.is_cyclic():
        raise ValueError("the oracle cross-check needs a cyclic module S/I")
    report = regularity(module)
    guard = DEFAULT_ORACLE_GUARD if oracle_guard is None else oracle_guard
    try:
        table = betti_table(module.denominator, guard=guard, field=field)
    except GuardExceededError as exc:
        return {
            "chain_regularity": report.regularity,
            "oracle": None,
            "equal": None,
            "skipped": str(exc),
        }
    reg, pd, depth = oracle_invariants(table)
    return {
        "chain_regularity": report.regularity,
        "oracle": {"regularity": reg, "projective_dimension": pd, "depth": depth},
        "equal": report.regularity == reg,
        "depth_equal": report.depth == depth,
        "skipped": None,
    }
