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

from twozero_workbench.params.family import derive
from twozero_workbench.verify.analysis import WolfmannVerdict, analyze_tuple, key_equation_closed_form, \
    one_weight_expected, two_weight_residual
from twozero_workbench.verify.records import CSV_COLUMNS, csv_row, dumps, exact_number, format_rational, to_report
from twozero_workbench.util.errors import BudgetExceeded
from twozero_workbench.weights.distribution import WeightDistribution

from conftest import T1, T2, T3

from dataclasses import replace
from fractions import Fraction
import json

import pytest


@pytest.fixture(scope="module")
def records():
    return {name: analyze_tuple(derive(*tup)) for name, tup in (("T1", T1), ("T2", T2), ("T3", T3))}


class TestKeyEquation:
    @pytest.mark.parametrize("args, expected", [
        ((4, 5, 1, 2, 4, 8), 0),
        ((4, 5, 1, 2, 4, 4), 2),
        ((3, 4, 1, 2, 3, 0), 0),
    ])
    def test_residual(self, args, expected):
        assert two_weight_residual(*args) == expected

    def test_closed_form_variant(self):
        assert key_equation_closed_form(derive(*T3), 2, 4) == 2
        assert key_equation_closed_form(derive(*T2), 2, 3) == 0

    @pytest.mark.parametrize("w1, w2", [(2, 2), (0, 3), (-1, 2)])
    def test_rejects_degenerate_weights(self, w1, w2):
        with pytest.raises(ValueError):
            two_weight_residual(4, 5, 1, w1, w2, 8)

    @pytest.mark.parametrize("tup, expected", [(T1, 6), (T2, 3), (T3, 4)])
    def test_one_weight_expected(self, tup, expected):
        assert one_weight_expected(derive(*tup)) == expected


class TestAnalyzeTuple:
    def test_t1(self, records):
        rec = records["T1"]
        assert rec.num_weights == 4
        assert not rec.projective
        assert rec.conforming
        assert not rec.paper_b2_agrees
        assert rec.moments_ok and rec.transform_ok and rec.scaling_ok
        assert rec.wolfmann == WolfmannVerdict.INAPPLICABLE
        assert rec.key_eq_residual_brute is None
        assert rec.dims == {"C": 4, "Cd": 2, "CD": 2}
        assert rec.one_weight_checks == {"Cd": True, "CD": True}
        assert rec.discrepancies == ["b2_formula"]
        assert rec.cost == 1080

    def test_t2(self, records):
        rec = records["T2"]
        assert rec.weights == [2, 3]
        assert rec.projective
        assert not rec.thm_nonprojective and not rec.thm_not_two_weight
        assert rec.wolfmann_hypotheses
        assert rec.wolfmann == WolfmannVerdict.OK
        assert rec.key_eq_residual_brute == 0
        assert rec.k_one
        assert rec.discrepancies == ["thm_nonprojective", "thm_not_two_weight"]

    def test_t3(self, records):
        rec = records["T3"]
        assert rec.weights == [2, 4]
        assert rec.thm_nonprojective and not rec.thm_not_two_weight
        assert rec.key_eq_residual_brute == 0
        assert rec.key_eq_residual_paper == 2
        assert rec.dual_Cd.b2_brute == 24
        assert rec.discrepancies == ["b2_formula", "thm_not_two_weight"]

    @pytest.mark.parametrize("name", ["T1", "T2", "T3"])
    def test_both_subcodes_have_the_one_weight(self, records, name):
        assert records[name].one_weight_checks == {"Cd": True, "CD": True}

    def test_wrong_one_weight_of_second_subcode(self, records):
        rec = replace(records["T1"], dist_CD=WeightDistribution(length=8, alphabet=3, dimension=2,
                                                                counts={0: 1, 4: 8}))
        assert rec.one_weight_checks == {"Cd": True, "CD": False}
        assert "one_weight" in rec.discrepancies
        assert to_report(rec)["one_weight_CD"] is False

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            analyze_tuple(derive(*T1), budget=100)


class TestRecords:
    def test_report_keys(self, records):
        report = to_report(records["T1"])
        assert list(report)[:13] == ["p", "t", "q", "k", "d", "e", "D", "lambda", "n", "f", "g", "mu", "dim_C"]
        assert report["weights"] == [2, 4, 6, 8]
        assert (report["b1"], report["b2_brute"], report["b2_paper"], report["b2_corrected"]) == (0, 8, 2, 8)
        assert report["wolfmann"] == "inapplicable"
        assert report["key_eq_residual_brute"] is None
        assert report["cd_class"] == "one_weight"
        assert report["c2_paper"] is None

    def test_rationals_are_exact_strings(self, records):
        report = to_report(records["T3"])
        assert report["key_eq_residual_brute"] == "0/1"
        assert report["key_eq_residual_paper"] == "2/1"

    def test_json_line(self, records):
        line = dumps(to_report(records["T2"]))
        assert "\n" not in line
        data = json.loads(line)
        assert data["projective"] is True
        assert data["discrepancies"] == ["thm_nonprojective", "thm_not_two_weight"]

    def test_csv_row(self, records):
        row = csv_row(records["T1"])
        assert len(row) == len(CSV_COLUMNS)
        assert row == [3, 2, 1, 2, 1, 8, 4, 8, 2, False, True, True]

    @pytest.mark.parametrize("value, expected", [(Fraction(3, 6), "1/2"), (Fraction(4), "4/1"), (None, None)])
    def test_format_rational(self, value, expected):
        assert format_rational(value) == expected

    def test_exact_number(self):
        assert exact_number(Fraction(8)) == 8
        assert exact_number(Fraction(-1, 3)) == "-1/3"
