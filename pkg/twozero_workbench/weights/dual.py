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
Low-weight words of the duals of C, C_d and C_D: brute-force counts next to the
closed forms of the non-projectivity argument and their shift-complete corrections.
"""

from twozero_workbench.codes.trace_codes import CodeRole, CodeSpec
from twozero_workbench.gf.tower import ZERO

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Optional, Union

import numpy as np

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class DualLowWeight:
    """
    Counts of dual words of weight one and two.

    ``b2_paper`` is None when the closed form does not apply to the role or tuple.
    """

    role: CodeRole
    b1: int
    b2_brute: int
    b2_paper: Optional[int]
    b2_corrected: Rational

    @property
    def formula_applicable(self) -> bool:
        return self.b2_paper is not None

    @property
    def formula_agrees(self) -> bool:
        return self.b2_paper == self.b2_brute

    @property
    def corrected_agrees(self) -> bool:
        return self.b2_corrected == self.b2_brute

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ("b1", self.b1),
            ("b2_brute", self.b2_brute),
            ("b2_paper", self.b2_paper),
            ("b2_corrected", _exact(self.b2_corrected)),
            ("paper_applicable", self.formula_applicable),
        ])


def _exact(value: Rational) -> Union[int, str]:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else str(value)


def _integral(value: Fraction) -> Rational:
    return value.numerator if value.denominator == 1 else value


def b2_formula(params) -> int:
    """Closed-form B2 of C: (λf(q-1)/(de) - 1)(q-1)."""
    q = params.q
    return (params.lam * params.f * (q - 1) // (params.d * params.e) - 1) * (q - 1)


def c2_formula(params) -> Optional[int]:
    """
    Closed-form count for the dual of C_d, ((q-1)/d - 1)(q-1), which is only
    derived for de = q-1 and λ = f = 1.
    """
    q = params.q
    if params.d * params.e != q - 1 or params.lam != 1 or params.f != 1:
        return None
    return ((q - 1) // params.d - 1) * (q - 1)


def b2_shift_complete(params) -> Rational:
    """(q-1)·n·N/2 with N = λf(q-1)/(de) - 1, counting every cyclic shift."""
    q = params.q
    big_n = params.lam * params.f * (q - 1) // (params.d * params.e) - 1
    return _integral(Fraction((q - 1) * params.n * big_n, 2))


def c2_shift_complete(params) -> Rational:
    """(q-1)·n·N'/2 with N' = λ(q-1)g/d - 1."""
    q = params.q
    big_n = Fraction(params.lam * (q - 1) * params.g, params.d) - 1
    return _integral((q - 1) * params.n * big_n / 2)


def _stride_shift_complete(spec: CodeSpec) -> Rational:
    # weight-2 supports {i, i+δ} exist iff γ^{sδ} ∈ F_q^*, i.e. δ is a multiple of the period
    tower, params = spec.tower, spec.params
    norm_index = tower.subfield_step
    period = norm_index // gcd(spec.strides[0], norm_index)
    return _integral((tower.q - 1) * params.n * (Fraction(params.n, period) - 1) / 2)


def dual_low_weight(spec: CodeSpec) -> DualLowWeight:
    """
    Count dual words of weight one and two by enumerating supports and nonzero values.

    A word with support {i, j} and values (a, b) lies in the dual iff
    a·γ^{-s·i} + b·γ^{-s·j} = 0 for every stride s of the code; dividing by
    γ^{-s·i} this depends on δ = j - i only, so each δ is tested once and weighted
    by its n - δ occurrences.

    :param spec: code with role C, Cd or CD
    """
    if spec.role not in (CodeRole.C, CodeRole.Cd, CodeRole.CD):
        raise ValueError("Dual counts are defined for C, Cd and CD only, not {}".format(spec.role))

    tower, params = spec.tower, spec.params
    big_order, n = tower.big_order, spec.length
    units = np.arange(tower.q - 1, dtype=np.int64) * tower.subfield_step

    beta = tower.inv(tower.gamma())
    b1 = sum(1 for i in range(n) for a in units
             if all(tower.mul(int(a), tower.pow(beta, s * i)) == ZERO for s in spec.strides))

    deltas = np.arange(1, n, dtype=np.int64)
    b2 = 0
    for a in units:
        for b in units:
            vanishes = np.ones(deltas.shape, dtype=bool)
            for s in spec.strides:
                # a + b·γ^{-sδ} = 0  ⟺  zech[b - sδ - a] = ZERO
                vanishes &= tower.zech[(b - s * deltas - a) % big_order] == ZERO
            b2 += int(np.sum(n - deltas[vanishes]))

    if spec.role == CodeRole.C:
        paper, corrected = b2_formula(params), b2_shift_complete(params)
    elif spec.role == CodeRole.Cd:
        paper, corrected = c2_formula(params), c2_shift_complete(params)
    else:
        paper, corrected = None, _stride_shift_complete(spec)

    return DualLowWeight(role=spec.role, b1=b1, b2_brute=b2, b2_paper=paper, b2_corrected=corrected)
