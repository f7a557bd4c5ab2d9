import json

import pytest

from freebrace import core
from freebrace.core import Element, Index, Kind
from freebrace.modular import ModularFreeBrace
from freebrace import verify
from freebrace.verify import (
    SampleConfig, UnnormalizedElement, check_axioms, check_closed_forms, check_decomposition,
    check_exhaustive, check_fold_oracle, check_nilpotency, check_star_identities, check_symmetry,
    fold, mul_unnormalized, random_unnormalized, run_suites,
)

from .targets import MutantFreeBrace, UpperTriangularBrace, WrongClosedForms


def T(i, j, k):
    return Index(Kind.TRIPLE, (i, j, k))


class TestSampleConfig:
    def test_same_config_same_stream(self):
        cfg = SampleConfig(2, 5, 3, 99)
        assert [cfg.rng(t).random() for t in range(5)] == [SampleConfig(2, 5, 3, 99).rng(t).random() for t in range(5)]

    def test_trials_get_distinct_streams(self):
        cfg = SampleConfig(2, 5, 3, 99)
        assert len({cfg.rng(t).random() for t in range(5)}) == 5

    @pytest.mark.parametrize("kwargs", [dict(rank=0), dict(rank=1, trials=0), dict(rank=1, seed=-1), dict(rank=1, seed=2**64)])
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            SampleConfig(**kwargs)


class TestSuitesPass:
    def test_axioms(self):
        assert check_axioms(SampleConfig(2, 300, 10, 42)).passed

    def test_all_zero_elements(self):
        rep = check_axioms(SampleConfig(1, 1, 0, 0))
        assert rep.passed and rep.trials == 1

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_star(self, r):
        assert check_star_identities(SampleConfig(r, 100, 10, 1)).passed

    def test_nilpotency(self):
        assert check_nilpotency(SampleConfig(4, 200, 10, 3)).passed

    def test_closed_forms(self):
        assert check_closed_forms(SampleConfig(3, 60, 10, 5)).passed

    def test_decomposition(self):
        assert check_decomposition(SampleConfig(3, 200, 10, 5)).passed

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_symmetry(self, r):
        rep = check_symmetry(r)
        assert rep.passed
        assert rep.trials == r * r * (r - 1) // 2

    def test_fold_oracle(self):
        assert check_fold_oracle(SampleConfig(3, 200, 5, 8)).passed

    def test_exhaustive(self):
        rep = check_exhaustive()
        assert rep.passed
        assert rep.trials == 5**6 + 3**9
        assert rep.config["pair_bound"] == 2 and rep.config["triple_bound"] == 1

    def test_reports_are_deterministic(self):
        cfg = SampleConfig(2, 20, 4, 11)
        assert check_axioms(cfg).to_dict() == check_axioms(cfg).to_dict()

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            run_suites(SampleConfig(1, 1), ["nosuch"])


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_modular_quotients_pass_generic_suites(m):
    cfg = SampleConfig(2, 60, 10, m)
    B = ModularFreeBrace(2, m)
    for suite in (check_axioms, check_star_identities, check_nilpotency, check_closed_forms):
        rep = suite(cfg, B)
        assert rep.passed, rep.summary()
    assert check_symmetry(2, B).passed


def test_upper_triangular_3x3_satisfies_suites():
    B = UpperTriangularBrace(3)
    cfg = SampleConfig(1, 100, 5, 0)
    assert check_axioms(cfg, B).passed
    assert check_star_identities(cfg, B).passed
    assert check_nilpotency(cfg, B).passed


class TestMutations:
    def test_dropping_generator_cross_term_breaks_associativity(self):
        rep = check_axioms(SampleConfig(2, 50, 5, 0), MutantFreeBrace(2, "gen_cross"))
        assert "mul_associativity" in rep.checks_failed()
        # every term the mutant keeps is still linear in the right factor
        assert "distributivity" not in rep.checks_failed()

    def test_dropping_left_pair_breaks_distributivity(self):
        rep = check_axioms(SampleConfig(2, 50, 5, 0), MutantFreeBrace(2, "left_pair"))
        assert "distributivity" in rep.checks_failed()
        failure = next(f for f in rep.failures if f.check == "distributivity")
        assert set(failure.inputs) == {"a", "b", "c"}
        assert failure.expected != failure.got

    def test_star_identities_catch_mutants(self):
        rep = check_star_identities(SampleConfig(2, 20, 5, 0), MutantFreeBrace(2, "gen_cross"))
        assert {"product_star_split", "sum_as_product"} & rep.checks_failed()

    def test_symmetry_catches_missing_fold(self):
        rep = check_symmetry(2, MutantFreeBrace(2, "swapped_pair"))
        assert "swap" in rep.checks_failed()

    def test_nilpotency_catches_cubic_target(self):
        # four strictly upper triangular 4x4 factors always multiply to 0
        rep = check_nilpotency(SampleConfig(1, 30, 3, 0), UpperTriangularBrace(4))
        assert rep.checks_failed() == {"left_nilpotency"}
        rep = check_nilpotency(SampleConfig(1, 30, 3, 0), UpperTriangularBrace(5))
        assert {"left_nilpotency", "right_nilpotency"} <= rep.checks_failed()

    def test_closed_forms_catch_wrong_formula(self):
        rep = check_closed_forms(SampleConfig(2, 10, 5, 0), WrongClosedForms(2))
        assert {"power_closed_form", "lincomb_star"} <= rep.checks_failed()

    def test_fold_oracle_catches_wrong_branch(self, monkeypatch):
        def broken(x, y):
            # treat the j < i branch like the i < j one
            out = mul_unnormalized(x, y)
            extra = [(T(i, j, k), -x[Index.gen(i)] * x[Index.gen(j)] * y[Index.gen(k)])
                     for i in range(1, x.rank + 1) for j in range(1, i) for k in range(1, x.rank + 1)]
            return out + UnnormalizedElement(x.rank, extra)

        monkeypatch.setattr(verify, "mul_unnormalized", broken)
        assert "fold_product" in check_fold_oracle(SampleConfig(2, 20, 3, 0)).checks_failed()

    def test_failures_do_not_abort(self):
        rep = check_axioms(SampleConfig(2, 25, 5, 0), MutantFreeBrace(2, "gen_cross"))
        assert rep.trials == 25
        trials = [f["trial"] for f in rep.to_dict()["failures"]]
        assert trials == sorted(trials)


class TestUnnormalized:
    def test_swapped_pair_times_generator(self):
        x21 = UnnormalizedElement(2, {Index.pair(2, 1): 1})
        x1 = UnnormalizedElement(2, {Index.gen(1): 1})
        z = mul_unnormalized(x21, x1)
        assert z[T(2, 1, 1)] == 1
        assert z[T(1, 2, 1)] == 0
        assert fold(z) == core.mul(core.basis(2, Index.pair(2, 1)), core.basis(2, Index.gen(1)))

    def test_identity(self):
        x = random_unnormalized(3, __import__("random").Random(0), 5)
        assert mul_unnormalized(x, UnnormalizedElement(3)) == x

    def test_generators(self):
        x1 = UnnormalizedElement(2, {Index.gen(1): 1})
        x2 = UnnormalizedElement(2, {Index.gen(2): 1})
        z = mul_unnormalized(x1, x2)
        assert z[Index.pair(1, 2)] == 1
        assert fold(z) == core.mul(core.basis(2, Index.gen(1)), core.basis(2, Index.gen(2)))

    def test_fold_rule(self):
        assert fold(UnnormalizedElement(2, {T(2, 1, 1): 1})) == core.basis(2, Index.triple(1, 2, 1))
        assert fold(UnnormalizedElement(2, {T(1, 2, 1): 1, T(2, 1, 1): 1})) == core.smul(2, core.basis(2, Index.triple(1, 2, 1)))
        pairs = {Index.pair(1, 2): 3, Index.pair(2, 2): -1}
        assert fold(UnnormalizedElement(2, pairs)) == Element(2, pairs)

    def test_rejects_diagonal_triple(self):
        with pytest.raises(core.IndexRangeError):
            UnnormalizedElement(2, {T(1, 1, 2): 1})

    def test_generator_only_inputs(self):
        import random

        rng = random.Random(4)
        for _ in range(50):
            x = random_unnormalized(3, rng, 5, kinds=[Kind.GEN])
            y = random_unnormalized(3, rng, 5, kinds=[Kind.GEN])
            assert fold(mul_unnormalized(x, y)) == core.mul(fold(x), fold(y))

    def test_zero(self):
        z = UnnormalizedElement(2)
        assert fold(mul_unnormalized(z, z)).is_zero()


def test_report_json_schema():
    rep = check_axioms(SampleConfig(2, 3, 2, 0), MutantFreeBrace(2, "left_pair"))
    data = json.loads(rep.to_json())
    assert set(data) == {"suite", "config", "trials", "failures"}
    assert data["suite"] == "axioms" and data["trials"] == 3
    assert data["config"]["seed"] == 0
    assert {"trial", "check", "inputs", "expected", "got"} == set(data["failures"][0])
