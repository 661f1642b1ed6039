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
Weight scaling between C_d, C'_d, C''_d and the p-ary image C̄_d.
"""

from twozero_workbench.codes.trace_codes import CodeRole, CodeSpec
from twozero_workbench.gf.tower import FieldTower
from twozero_workbench.params.family import TwoZeroParams
from twozero_workbench.weights.distribution import DEFAULT_BUDGET, enumeration_cost, weight_distribution

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, Optional

_CHAIN = (CodeRole.Cd, CodeRole.CdPrime, CodeRole.CdDoublePrime, CodeRole.BarCd)


def _scaled(weights: Iterable[int], factor: Fraction) -> FrozenSet[Fraction]:
    return frozenset(factor * w for w in weights)


@dataclass(frozen=True)
class ScalingReport:
    """Nonzero weight sets of the four codes and the verdict of each scaling step."""

    weights: Dict[CodeRole, FrozenSet[int]]
    repetition_ok: bool
    d_over_g_ok: bool
    subfield_ok: bool
    composite_ok: bool
    cost: int

    @property
    def ok(self) -> bool:
        return self.repetition_ok and self.d_over_g_ok and self.subfield_ok and self.composite_ok

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict(
            [("weights", OrderedDict((role.value, sorted(self.weights[role])) for role in _CHAIN))]
            + [(k, getattr(self, k)) for k in ("repetition_ok", "d_over_g_ok", "subfield_ok", "composite_ok", "ok")])


def scaling_chain_check(params: TwoZeroParams, tower: FieldTower, budget: int = DEFAULT_BUDGET,
                        force: bool = False, workers: Optional[int] = 1) -> ScalingReport:
    """
    Enumerate C_d, C'_d, C''_d and C̄_d and compare their weight sets:

    * wt(C_d) = λ·wt(C'_d)
    * wt(C''_d) = (d/g)·wt(C'_d)
    * wt(C̄_d) = q(p-1)/(p(q-1))·wt(C''_d)
    * wt(C_d) = λgp(q-1)/(dq(p-1))·wt(C̄_d)

    Non-integral scaled weights simply fail the comparison.

    :raise BudgetExceeded: if one of the enumerations exceeds the budget
    """
    weights, cost = {}, 0
    for role in _CHAIN:
        spec = CodeSpec.from_params(role, params, tower)
        dist = weight_distribution(spec, budget=budget, force=force, workers=workers)
        weights[role] = frozenset(dist.weights)
        cost += enumeration_cost(spec)

    lam, d, g, q, p = params.lam, params.d, params.g, params.q, params.p
    wt = weights
    return ScalingReport(
        weights=weights,
        repetition_ok=_scaled(wt[CodeRole.CdPrime], Fraction(lam)) == wt[CodeRole.Cd],
        d_over_g_ok=_scaled(wt[CodeRole.CdPrime], Fraction(d, g)) == wt[CodeRole.CdDoublePrime],
        subfield_ok=_scaled(wt[CodeRole.CdDoublePrime], Fraction(q * (p - 1), p * (q - 1))) == wt[CodeRole.BarCd],
        composite_ok=_scaled(wt[CodeRole.BarCd], Fraction(lam * g * p * (q - 1), d * q * (p - 1))) == wt[CodeRole.Cd],
        cost=cost,
    )
