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

"""
Flat report projections of scan records (JSON lines and CSV summary rows).
"""

from twozero_workbench.verify.analysis import ScanRecord

from collections import OrderedDict
from fractions import Fraction
import json
from typing import Any, Dict, List, Optional, Union

CSV_COLUMNS = ("q", "k", "d", "e", "lambda", "n", "num_weights", "b2_brute", "b2_paper",
               "projective", "thm_nonprojective", "thm_not_two_weight")


def format_rational(value: Optional[Fraction]) -> Optional[str]:
    """Exact "num/den" string, None passes through."""
    if value is None:
        return None
    value = Fraction(value)
    return "{}/{}".format(value.numerator, value.denominator)


def exact_number(value: Union[int, Fraction]) -> Union[int, str]:
    """Integers stay JSON integers, other rationals become "num/den" strings."""
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else format_rational(value)


def to_report(record: ScanRecord) -> Dict[str, Any]:
    """
    Project a record to a flat dict with a fixed key order. Every key is always present.
    """
    p = record.params
    dual, dual_cd = record.dual, record.dual_Cd
    return OrderedDict([
        ("p", p.p), ("t", p.t), ("q", p.q), ("k", p.k), ("d", p.d), ("e", p.e), ("D", p.D),
        ("lambda", p.lam), ("n", p.n), ("f", p.f), ("g", p.g), ("mu", p.mu),
        ("dim_C", record.dims["C"]),
        ("coset_ok", record.coset_ok),
        ("weights", record.weights),
        ("num_weights", record.num_weights),
        ("b1", dual.b1),
        ("b2_brute", dual.b2_brute),
        ("b2_paper", dual.b2_paper),
        ("b2_corrected", exact_number(dual.b2_corrected)),
        ("projective", record.projective),
        ("moments_ok", record.moments_ok),
        ("scaling_ok", record.scaling_ok),
        ("paper_b2_agrees", record.paper_b2_agrees),
        ("thm_nonprojective", record.thm_nonprojective),
        ("thm_not_two_weight", record.thm_not_two_weight),
        ("wolfmann", record.wolfmann.value),
        ("key_eq_residual_brute", format_rational(record.key_eq_residual_brute)),
        ("key_eq_residual_paper", format_rational(record.key_eq_residual_paper)),
        ("cost", record.cost),
        ("k_one", record.k_one),
        ("transform_ok", record.transform_ok),
        ("n2_agrees", p.n2_agrees),
        ("dims", OrderedDict((k, record.dims[k]) for k in ("C", "Cd", "CD"))),
        ("cd_weights", list(record.classification.weights)),
        ("cd_class", record.classification.kind.value),
        ("one_weight_cd", record.one_weight_checks["Cd"]),
        ("one_weight_CD", record.one_weight_checks["CD"]),
        ("sw_match", record.sw_match),
        ("wolfmann_hypotheses", record.wolfmann_hypotheses),
        ("c2_brute", dual_cd.b2_brute),
        ("c2_paper", dual_cd.b2_paper),
        ("c2_corrected", exact_number(dual_cd.b2_corrected)),
        ("discrepancies", record.discrepancies),
    ])


def dumps(data: Dict[str, Any]) -> str:
    """Compact deterministic JSON (key order preserved, UTF-8 text)."""
    return json.dumps(data, ensure_ascii=False, separators=(",", ":"))


def csv_row(record: ScanRecord) -> List[Any]:
    report = to_report(record)
    return [report[c] for c in CSV_COLUMNS]
