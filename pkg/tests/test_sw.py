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
from twozero_workbench.sw.schmidt_white import CandidatePair, Solution, WeightClass, WeightContext, analyze, \
    candidate_weights, classify_irreducible, digit_sum, irreducible_analysis, sw_order, sw_search, theta
from twozero_workbench.util.errors import NonIntegralTheta, NotCoprime

from conftest import params_and_tower

from fractions import Fraction

from hypothesis import given, strategies as st
import pytest


@pytest.mark.parametrize("x, p, expected", [(0, 2, 0), (5, 2, 2), (12, 7, 6), (80, 3, 8)])
def test_digit_sum(x, p, expected):
    assert digit_sum(x, p) == expected


@given(x=st.integers(0, 10 ** 6), p=st.sampled_from([2, 3, 5, 7]))
def test_digit_sum_congruences(x, p):
    assert (digit_sum(x, p) - x) % (p - 1) == 0
    assert digit_sum(x, p) <= x
    assert digit_sum(x * p, p) == digit_sum(x, p)


class TestTheta:
    @pytest.mark.parametrize("g, p, expected", [
        (3, 2, Fraction(1)),
        (5, 2, Fraction(2)),
        (3, 7, Fraction(1, 3)),
        (2, 3, Fraction(1, 2)),
    ])
    def test_values(self, g, p, expected):
        assert theta(g, p) == expected

    def test_order(self):
        assert sw_order(5, 2) == 4
        assert sw_order(3, 7) == 1

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            theta(4, 2)

    def test_g_too_small(self):
        with pytest.raises(ValueError):
            theta(1, 3)


class TestSearch:
    def test_one_step(self):
        assert sw_search(5, 2, 1) == [Solution(1, -1), Solution(4, 1)]

    def test_two_steps(self):
        assert sw_search(5, 2, 2) == [Solution(1, 1), Solution(4, -1)]

    @pytest.mark.parametrize("g, p", [(3, 7), (2, 3)])
    def test_non_integral_theta(self, g, p):
        assert sw_search(g, p, 1) == []

    def test_invalid_step(self):
        with pytest.raises(ValueError):
            sw_search(5, 2, 0)


class TestCandidates:
    def test_degenerate_pair(self):
        pair = candidate_weights(WeightContext(lam=1, d=5, q=2), 2, 1, 4, Fraction(2), 5, Solution(1, -1))
        assert pair == CandidatePair(Fraction(2), Fraction(0))
        assert pair.degenerate
        assert pair.as_set() == frozenset({2})

    def test_two_steps(self):
        analysis = analyze(5, 2, 2, WeightContext(lam=1, d=5, q=2))
        assert [c.to_list() for c in analysis.candidates] == [[24, 32], [32, 24]]
        assert not any(pair.degenerate for pair in analysis.candidates)
        # w2 - w1 = ε·λ(q-1)p^{sθ}g/(dq)
        assert [c.w2 - c.w1 for c in analysis.candidates] == [8, -8]

    def test_rejects_non_integral_exponent(self):
        with pytest.raises(NonIntegralTheta):
            candidate_weights(WeightContext(lam=1, d=1, q=7), 7, 1, 1, Fraction(1, 3), 3, Solution(1, 1))

    def test_to_dict(self):
        data = analyze(5, 2, 1).to_dict()
        assert data["theta"] == "2/1"
        assert data["h"] == 4
        assert data["solutions"] == [{"m": 1, "epsilon": -1}, {"m": 4, "epsilon": 1}]
        assert data["candidates"] == []

    def test_fractional_candidates_are_strings(self):
        pair = CandidatePair(Fraction(3, 2), Fraction(4))
        assert pair.to_list() == ["3/2", 4]


class TestClassification:
    def test_t1(self, t1):
        result = classify_irreducible(CodeSpec.from_params(CodeRole.Cd, *t1))
        assert result.kind == WeightClass.ONE_WEIGHT
        assert result.weights == (6,)
        assert result.sw_match is None
        assert result.analysis is None

    def test_t2(self, t2):
        result = classify_irreducible(CodeSpec.from_params(CodeRole.Cd, *t2))
        assert result.kind == WeightClass.ONE_WEIGHT
        assert result.to_dict() == {"kind": "one_weight", "weights": [3]}

    def test_requires_irreducible_role(self, t1):
        with pytest.raises(ValueError):
            classify_irreducible(CodeSpec.from_params(CodeRole.C, *t1))

    def test_two_weight_quadratic_case(self):
        # q = 5, k = 2, d = 2: g = gcd(6, 2) = 2 and C_d is indexed by the squares of F_25
        params, tower = params_and_tower((5, 1, 2, 2, 2, 1))
        assert params.g == 2
        spec = CodeSpec.from_params(CodeRole.Cd, params, tower)

        analysis = irreducible_analysis(spec)
        assert (analysis.h, analysis.s, analysis.theta) == (1, 2, Fraction(1, 2))
        assert {c.as_set() for c in analysis.candidates} == {frozenset({8, 12})}

        result = classify_irreducible(spec)
        assert result.kind == WeightClass.TWO_WEIGHT
        assert result.weights == (8, 12)
        assert result.sw_match is True
        assert result.to_dict()["sw_match"] is True
