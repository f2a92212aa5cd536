"""Pretty clean prime filtrations and their independent verification."""

from __future__ import annotations

import random

import pytest

from boreltype import (
    FiltrationStep,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    PrimeFiltration,
    Subquotient,
    build_chain,
    filtration_length_report,
    pretty_clean_filtration,
    verify_filtration,
)
from boreltype.errors import NotBorelTypeError, ZeroModuleError
from boreltype.monomial import box_monomials


def I(nvars, *gens):
    return MonomialIdeal.from_text_lines(nvars, gens)


def cyclic(nvars, *gens):
    return Subquotient.cyclic(I(nvars, *gens))


def P(nvars, *variables):
    return MonomialPrime(nvars, tuple(variables))


class TestBuilderGoldens:
    def test_two_factor_module(self):
        f = pretty_clean_filtration(cyclic(2, "x1^2", "x1*x2"))
        got = [(str(s.witness), s.prime) for s in f.steps]
        assert got == [("x1", P(2, 1, 2)), ("1", P(2, 1))]
        assert f.steps[0].ideal == I(2, "x1")
        assert f.steps[1].ideal == MonomialIdeal.unit(2)

    def test_maximal_ideal_is_clean(self):
        f = pretty_clean_filtration(cyclic(2, "x1", "x2"))
        assert [(str(s.witness), s.prime) for s in f.steps] == [("1", P(2, 1, 2))]
        report = verify_filtration(f)
        assert report["pretty_clean"] and report["clean"]

    def test_subquotient_single_factor(self):
        f = pretty_clean_filtration(Subquotient(I(2, "x1"), I(2, "x1^2", "x1*x2")))
        assert [(str(s.witness), s.prime) for s in f.steps] == [("x1", P(2, 1, 2))]

    def test_thick_artinian_line(self):
        f = pretty_clean_filtration(cyclic(2, "x1^2", "x2"))
        assert [(str(s.witness), s.prime) for s in f.steps] == [
            ("x1", P(2, 1, 2)),
            ("1", P(2, 1, 2)),
        ]
        report = verify_filtration(f)
        assert report["pretty_clean"] and report["clean"]

    def test_clean_examples_in_one_and_two_variables(self):
        for module in (
            cyclic(2, "x1"),
            Subquotient(MonomialIdeal.unit(1), I(1, "x1")),
            cyclic(2, "x1^2"),
            Subquotient(MonomialIdeal.unit(1), I(1, "x1^2")),
        ):
            report = verify_filtration(pretty_clean_filtration(module))
            assert report["pretty_clean"], module
            assert report["clean"], module

    def test_zero_module_rejected(self):
        with pytest.raises(ZeroModuleError):
            pretty_clean_filtration(Subquotient(I(2, "x1"), I(2, "x1")))

    def test_non_borel_rejected(self):
        with pytest.raises(NotBorelTypeError):
            pretty_clean_filtration(cyclic(2, "x2"))


class TestVerifierIndependence:
    def test_hand_built_filtration_of_a_non_borel_module(self):
        # the verifier takes any filtration, including ones the builder
        # would refuse to construct: S/(x1*x2) is not of Borel type, yet
        # 0 < (x1)/(x1*x2) < S/(x1*x2) is a clean prime filtration
        base = cyclic(2, "x1*x2")
        steps = (
            FiltrationStep(I(2, "x1"), Monomial((1, 0)), P(2, 2)),
            FiltrationStep(MonomialIdeal.unit(2), Monomial((0, 0)), P(2, 1)),
        )
        report = verify_filtration(PrimeFiltration(base, steps))
        assert report["steps_ok"]
        assert report["pretty_clean"]
        assert report["support"] == ["x1", "x2"]
        assert report["support_equals_ass"]
        assert report["clean"]

    def test_wrong_prime_is_flagged(self):
        base = cyclic(2, "x1", "x2")
        steps = (FiltrationStep(MonomialIdeal.unit(2), Monomial((0, 0)), P(2, 1)),)
        report = verify_filtration(PrimeFiltration(base, steps))
        assert not report["steps_ok"]
        assert any("colon" in v for v in report["violations"])

    def test_truncated_filtration_is_flagged(self):
        base = cyclic(2, "x1^2", "x1*x2")
        steps = (FiltrationStep(I(2, "x1"), Monomial((1, 0)), P(2, 1, 2)),)
        report = verify_filtration(PrimeFiltration(base, steps))
        assert any("does not end" in v for v in report["violations"])

    def test_increasing_primes_are_valid_but_not_pretty_clean(self):
        # same module admits a perfectly valid prime filtration that peels
        # the small prime first; every step checks out but the prime order
        # makes it longer and disqualifies it from pretty cleanness
        base = cyclic(2, "x1^2", "x1*x2")
        steps = (
            FiltrationStep(I(2, "x1^2", "x2"), Monomial((0, 1)), P(2, 1)),
            FiltrationStep(I(2, "x1", "x2"), Monomial((1, 0)), P(2, 1, 2)),
            FiltrationStep(MonomialIdeal.unit(2), Monomial((0, 0)), P(2, 1, 2)),
        )
        report = verify_filtration(PrimeFiltration(base, steps))
        assert report["steps_ok"], report["violations"]
        assert not report["pretty_clean"]
        assert report["length"] == 3
        assert len(pretty_clean_filtration(base)) == 2


class TestLengthReport:
    def test_golden(self):
        M = cyclic(2, "x1^2", "x1*x2")
        report = filtration_length_report(
            pretty_clean_filtration(M), build_chain(M)
        )
        assert report["ok"]
        assert report["total_length"] == 2
        assert [e["factors"] for e in report["entries"]] == [1, 1]

    def test_golden_maximal(self):
        M = cyclic(2, "x1", "x2")
        report = filtration_length_report(pretty_clean_filtration(M), build_chain(M))
        assert report["ok"] and report["total_length"] == 1

    def test_golden_thick(self):
        M = cyclic(2, "x1^2", "x2")
        report = filtration_length_report(pretty_clean_filtration(M), build_chain(M))
        assert report["ok"] and report["total_length"] == 2


class TestCorpus:
    def test_build_verify_and_length(self, borel_corpus):
        for M in borel_corpus:
            if M.is_zero():
                continue
            f = pretty_clean_filtration(M)
            report = verify_filtration(f)
            assert report["pretty_clean"], (M, report["violations"])
            assert report["support_equals_ass"], (M, report)
            length = filtration_length_report(f, build_chain(M))
            assert length["ok"], (M, length)

    def test_witness_order_does_not_change_length(self, borel_corpus):
        rng = random.Random(4242)
        sample = [M for M in borel_corpus if not M.is_zero()][:25]
        for M in sample:
            f = pretty_clean_filtration(M)
            g = _shuffled_witness_filtration(M, rng)
            assert len(g) == len(f)
            report = verify_filtration(g)
            assert report["pretty_clean"] and report["support_equals_ass"]


def _shuffled_witness_filtration(module, rng) -> PrimeFiltration:
    """Builder variant that scans witness candidates in random order."""
    chain = build_chain(module)
    n = module.nvars
    steps = []
    current = module.denominator
    for step in chain.steps:
        prime = MonomialPrime(n, tuple(range(1, step.variable_index + 1)))
        prime_ideal = prime.to_ideal()
        target = step.ideal
        while current != target:
            bounds = tuple(
                max(a, b)
                for a, b in zip(target.max_exponents(), current.max_exponents())
            )
            candidates = list(box_monomials(bounds))
            rng.shuffle(candidates)
            witness = next(
                m
                for m in candidates
                if target.member(m)
                and not current.member(m)
                and current.colon_monomial(m) == prime_ideal
            )
            current = current.add(MonomialIdeal.principal(witness))
            steps.append(FiltrationStep(current, witness, prime))
    return PrimeFiltration(module, tuple(steps))
