# Copyright (C) 2024 The two-zero workbench authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from twozero_workbench.codes.trace_codes import CodeRole, CodeSpec
from twozero_workbench.weights.distribution import WeightDistribution, enumeration_cost, weight_distribution
from twozero_workbench.weights.dual import b2_formula, c2_formula, dual_low_weight
from twozero_workbench.weights.moments import dual_count, full_moment_check, krawtchouk, macwilliams_transform, \
    moment_sums, power_moment_check, transform_check
from twozero_workbench.weights.scaling import scaling_chain_check
from twozero_workbench.gf.tower import build_tower
from twozero_workbench.util.errors import BudgetExceeded, NonIntegerCount

from conftest import params_and_tower

from fractions import Fraction
from math import comb
import pickle

import pytest


T1_C = {0: 1, 2: 8, 4: 24, 6: 32, 8: 16}


class TestDistribution:
    @pytest.mark.parametrize("role, expected", [
        (CodeRole.C, T1_C),
        (CodeRole.Cd, {0: 1, 6: 8}),
    ])
    def test_t1(self, t1, role, expected):
        dist = weight_distribution(CodeSpec.from_params(role, *t1))
        assert dict(dist.counts) == expected
        assert dist.is_valid()

    def test_t2(self, t2):
        dist = weight_distribution(CodeSpec.from_params(CodeRole.C, *t2))
        assert dict(dist.counts) == {0: 1, 2: 9, 3: 6}
        assert dist.weights == [2, 3]

    def test_t3(self, t3):
        dist = weight_distribution(CodeSpec.from_params(CodeRole.C, *t3))
        assert dict(dist.counts) == {0: 1, 2: 8, 4: 16}

    @pytest.mark.parametrize("role", list(CodeRole))
    def test_matches_word_by_word_enumeration(self, worked, brute, role):
        spec = CodeSpec.from_params(role, *worked)
        dist = weight_distribution(spec)
        multiplicity = spec.alphabet ** (spec.nominal_dimension - dist.dimension)
        assert {w: c * multiplicity for w, c in dist.counts.items()} == dict(brute(spec))

    def test_chunking_does_not_change_counts(self, t1):
        spec = CodeSpec.from_params(CodeRole.C, *t1)
        assert weight_distribution(spec, chunks=1) == weight_distribution(spec, chunks=7)

    def test_process_pool(self, t1):
        spec = CodeSpec.from_params(CodeRole.C, *t1)
        assert dict(weight_distribution(spec, workers=2).counts) == T1_C

    def test_independent_of_modulus(self):
        params, _ = params_and_tower((3, 1, 2, 1, 2, 1))
        other = build_tower(3, 1, 2, modulus=(2, 2, 1))
        assert dict(weight_distribution(CodeSpec.from_params(CodeRole.C, params, other)).counts) == T1_C

    def test_budget(self, t1, capsys):
        spec = CodeSpec.from_params(CodeRole.C, *t1)
        assert enumeration_cost(spec) == 8 * 81
        with pytest.raises(BudgetExceeded) as exc:
            weight_distribution(spec, budget=100)
        assert (exc.value.cost, exc.value.budget) == (648, 100)

        assert dict(weight_distribution(spec, budget=100, force=True).counts) == T1_C
        assert "WARNING" in capsys.readouterr().err

    def test_budget_error_survives_pickling(self):
        err = pickle.loads(pickle.dumps(BudgetExceeded(10, 5)))
        assert (err.cost, err.budget) == (10, 5)

    def test_dict_conversion(self):
        dist = WeightDistribution(length=8, alphabet=3, dimension=4, counts=T1_C)
        data = dist.to_dict()
        assert data["counts"]["2"] == 8
        assert WeightDistribution.from_dict(data) == dist

    def test_zero_counts_are_dropped(self):
        dist = WeightDistribution(length=3, alphabet=2, dimension=0, counts={0: 1, 2: 0})
        assert dict(dist.counts) == {0: 1}
        assert dist.num_weights == 0


class TestMoments:
    def test_t1_with_true_dual_counts(self):
        dist = WeightDistribution(length=8, alphabet=3, dimension=4, counts=T1_C)
        report = power_moment_check(dist, 0, 8)
        assert report.ok
        assert moment_sums(dist) == [80, 432, 2592]

    def test_t1_with_closed_form_count(self):
        dist = WeightDistribution(length=8, alphabet=3, dimension=4, counts=T1_C)
        report = power_moment_check(dist, 0, 2)
        assert report.v0_ok and report.v1_ok and not report.v2_ok
        assert report.residuals[2] == 108

    def test_zero_code(self):
        dist = WeightDistribution(length=5, alphabet=3, dimension=0, counts={0: 1})
        assert power_moment_check(dist, 0, 0).v0_ok
        # the dual of the zero code is the full space
        full = macwilliams_transform(dist)
        assert dict(full.counts) == {i: comb(5, i) * 2 ** i for i in range(6)}
        assert power_moment_check(dist, dual_count(dist, 1), dual_count(dist, 2)).ok

    def test_zero_length(self):
        dist = WeightDistribution(length=0, alphabet=4, dimension=0, counts={0: 1})
        assert power_moment_check(dist, 0, 0).ok

    def test_full_identity_family(self):
        dist = WeightDistribution(length=8, alphabet=3, dimension=4, counts=T1_C)
        report = full_moment_check(dist, macwilliams_transform(dist))
        assert report.ok and report.checked == 8

    def test_full_identity_family_flags_failures(self):
        dist = WeightDistribution(length=8, alphabet=3, dimension=4, counts=T1_C)
        dual = macwilliams_transform(dist)
        counts = dict(dual.counts)
        counts[2] = counts.get(2, 0) + 1
        broken = WeightDistribution(length=8, alphabet=3, dimension=4, counts=counts)
        report = full_moment_check(dist, broken)
        assert not report.ok
        assert report.failed[0] == 2

    def test_transform(self, t2):
        dist = weight_distribution(CodeSpec.from_params(CodeRole.C, *t2))
        dual = macwilliams_transform(dist)
        # the dual of the sum-zero code is the repetition code
        assert dict(dual.counts) == {0: 1, 3: 3}
        assert transform_check(dist, 0, 0) == {"b1": 0, "b2": 0, "b1_ok": True, "b2_ok": True}

    def test_non_integral_transform(self):
        dist = WeightDistribution(length=3, alphabet=2, dimension=1, counts={0: 1, 1: 1})
        dist_bad = WeightDistribution(length=3, alphabet=2, dimension=2, counts={0: 1, 1: 3})
        assert dual_count(dist, 0) == 1
        with pytest.raises(NonIntegerCount):
            macwilliams_transform(dist_bad)

    @pytest.mark.parametrize("j, i, n, q, expected", [(0, 3, 5, 2, 1), (1, 0, 4, 3, 8), (1, 2, 4, 3, 2),
                                                      (2, 1, 3, 2, -1)])
    def test_krawtchouk(self, j, i, n, q, expected):
        assert krawtchouk(j, i, n, q) == expected


class TestDualCounts:
    def test_t1(self, t1):
        dual = dual_low_weight(CodeSpec.from_params(CodeRole.C, *t1))
        assert (dual.b1, dual.b2_brute, dual.b2_paper, dual.b2_corrected) == (0, 8, 2, 8)
        assert not dual.formula_agrees and dual.corrected_agrees

    def test_t2(self, t2):
        dual = dual_low_weight(CodeSpec.from_params(CodeRole.C, *t2))
        assert (dual.b1, dual.b2_brute, dual.b2_paper, dual.b2_corrected) == (0, 0, 0, 0)

    def test_t3(self, t3):
        dual = dual_low_weight(CodeSpec.from_params(CodeRole.C, *t3))
        assert dual.to_dict() == {"b1": 0, "b2_brute": 8, "b2_paper": 4, "b2_corrected": 8,
                                  "paper_applicable": True}

    def test_t4(self, t4):
        params, _ = t4
        assert (params.lam, params.k) == (2, 2)
        dual = dual_low_weight(CodeSpec.from_params(CodeRole.C, *t4))
        assert (dual.b1, dual.b2_brute, dual.b2_paper, dual.b2_corrected) == (0, 144, 12, 144)
        assert not dual.formula_agrees and dual.corrected_agrees

    def test_t4_irreducible(self, t4):
        cd = dual_low_weight(CodeSpec.from_params(CodeRole.Cd, *t4))
        cD = dual_low_weight(CodeSpec.from_params(CodeRole.CD, *t4))
        assert (cd.b1, cd.b2_brute, cd.b2_corrected, cd.formula_applicable) == (0, 336, 336, False)
        assert (cD.b1, cD.b2_brute, cD.b2_corrected) == (0, 336, 336)

    def test_t2_irreducible(self, t2):
        dual = dual_low_weight(CodeSpec.from_params(CodeRole.Cd, *t2))
        assert (dual.b2_brute, dual.b2_paper, dual.b2_corrected) == (9, 6, 9)

    def test_t1_irreducible(self, t1):
        params, _ = t1
        assert c2_formula(params) is None
        cd = dual_low_weight(CodeSpec.from_params(CodeRole.Cd, *t1))
        cD = dual_low_weight(CodeSpec.from_params(CodeRole.CD, *t1))
        assert (cd.b2_brute, cd.b2_corrected, cd.formula_applicable) == (8, 8, False)
        assert (cD.b2_brute, cD.b2_corrected) == (8, 8)

    @pytest.mark.parametrize("role", [CodeRole.C, CodeRole.Cd, CodeRole.CD])
    def test_agrees_with_transform(self, worked, role):
        spec = CodeSpec.from_params(role, *worked)
        dual = dual_low_weight(spec)
        dist = weight_distribution(spec)
        assert dual_count(dist, 1) == dual.b1
        assert dual_count(dist, 2) == dual.b2_brute

    def test_closed_form(self, t1, t2, t3, t4):
        assert [b2_formula(t[0]) for t in (t1, t2, t3, t4)] == [2, 0, 4, 12]

    def test_rejects_subfield_codes(self, t1):
        with pytest.raises(ValueError):
            dual_low_weight(CodeSpec.from_params(CodeRole.BarCd, *t1))


class TestScaling:
    def test_t1(self, t1):
        report = scaling_chain_check(*t1)
        assert report.ok
        assert report.weights[CodeRole.Cd] == frozenset({6})

    def test_t2_subfield_step(self, t2):
        report = scaling_chain_check(*t2)
        assert report.weights[CodeRole.BarCd] == frozenset({2})
        assert report.weights[CodeRole.CdDoublePrime] == frozenset({3})
        assert report.ok
        assert report.to_dict()["weights"]["BarCd"] == [2]

    def test_cost_is_summed(self, t1):
        report = scaling_chain_check(*t1)
        assert report.cost == sum(enumeration_cost(CodeSpec.from_params(r, *t1))
                                  for r in (CodeRole.Cd, CodeRole.CdPrime, CodeRole.CdDoublePrime, CodeRole.BarCd))

    def test_budget(self, t1):
        with pytest.raises(BudgetExceeded):
            scaling_chain_check(*t1, budget=10)


def test_fraction_free_residuals():
    dist = WeightDistribution(length=8, alphabet=3, dimension=4, counts=T1_C)
    assert all(isinstance(r, Fraction) for r in power_moment_check(dist, 0, 8).residuals)
