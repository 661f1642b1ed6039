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
Per-tuple verification: every check licensed for the family, collected in a :class:`ScanRecord`.
"""

from twozero_workbench.codes.cyclotomy import CheckPolynomial, check_poly
from twozero_workbench.codes.trace_codes import CodeRole, CodeSpec
from twozero_workbench.gf.tower import DEFAULT_SIZE_CAP, build_tower
from twozero_workbench.params.family import TwoZeroParams
from twozero_workbench.sw.schmidt_white import Classification, classify_irreducible
from twozero_workbench.weights.distribution import DEFAULT_BUDGET, WeightDistribution, enumeration_cost, \
    weight_distribution
from twozero_workbench.weights.dual import DualLowWeight, b2_formula, dual_low_weight
from twozero_workbench.weights.moments import MomentReport, power_moment_check, transform_check
from twozero_workbench.weights.scaling import ScalingReport, scaling_chain_check

from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from typing import Any, Dict, List, Optional


@unique
class WolfmannVerdict(Enum):
    INAPPLICABLE = "inapplicable"
    OK = "ok"
    VIOLATED = "violated"


def two_weight_residual(n: int, q: int, k: int, w1: int, w2: int, b2: int) -> Fraction:
    """
    Residual of the quadratic relation between the two weights of a two-weight code
    of dimension 2k without dual words of weight one:

    nq(w1 + w2) - (q^{2k} - 1)·w1·w2/((q - 1)·q^{2k-2}) - [n²(q - 1) + n + 2·B2/(q - 1)]

    It vanishes whenever B2 is the true number of weight-two dual words.
    """
    if w1 == w2 or w1 <= 0 or w2 <= 0:
        raise ValueError("Weights must be distinct and positive")
    return (Fraction(n * q * (w1 + w2))
            - Fraction((q ** (2 * k) - 1) * w1 * w2, (q - 1) * q ** (2 * k - 2))
            - (n * n * (q - 1) + n + Fraction(2 * b2, q - 1)))


def key_equation_closed_form(params: TwoZeroParams, w1: int, w2: int) -> Fraction:
    """Residual with B2 taken from the closed form, i.e. the constant λf(q-1)/(de)·2 - 2."""
    return two_weight_residual(params.n, params.q, params.k, w1, w2, b2_formula(params))


def one_weight_expected(params: TwoZeroParams) -> int:
    """Weight μ·q^{k-1} of a one-weight C_d."""
    return params.mu * params.q ** (params.k - 1)


@dataclass(frozen=True)
class ScanRecord:
    """
    Outcome of every check on one tuple. Theorem verdicts are derived from the
    weights of C and its dual counts only.
    """

    params: TwoZeroParams
    check: Dict[str, Any]
    degree_ok: bool
    coset_ok: bool
    dims: Dict[str, int]
    dist_C: WeightDistribution
    dual: DualLowWeight
    dual_Cd: DualLowWeight
    moments: MomentReport
    transform: Dict[str, Any]
    scaling: ScalingReport
    classification: Classification
    dist_CD: WeightDistribution
    wolfmann_hypotheses: bool
    wolfmann: WolfmannVerdict
    key_eq_residual_brute: Optional[Fraction]
    key_eq_residual_paper: Optional[Fraction]
    cost: int

    @property
    def weights(self) -> List[int]:
        return self.dist_C.weights

    @property
    def num_weights(self) -> int:
        return self.dist_C.num_weights

    @property
    def projective(self) -> bool:
        return self.dual.b1 == 0 and self.dual.b2_brute == 0

    @property
    def moments_ok(self) -> bool:
        return self.moments.ok

    @property
    def transform_ok(self) -> bool:
        return self.transform["b1_ok"] and self.transform["b2_ok"]

    @property
    def scaling_ok(self) -> bool:
        return self.scaling.ok

    @property
    def paper_b2_agrees(self) -> bool:
        return self.dual.formula_agrees

    @property
    def thm_nonprojective(self) -> bool:
        return not self.projective

    @property
    def thm_not_two_weight(self) -> bool:
        return self.num_weights != 2

    @property
    def conforming(self) -> bool:
        return self.thm_nonprojective and self.thm_not_two_weight

    @property
    def k_one(self) -> bool:
        return self.params.is_k_one

    @property
    def one_weight_checks(self) -> Dict[str, Optional[bool]]:
        """
        Per irreducible subcode, whether it has the weight μq^{k-1} when it is one-weight
        (None for a subcode with more than one nonzero weight).
        """
        expected = one_weight_expected(self.params)
        checks = {}
        for role, weights in (("Cd", list(self.classification.weights)), ("CD", self.dist_CD.weights)):
            checks[role] = weights == [expected] if len(weights) == 1 else None
        return checks

    @property
    def sw_match(self) -> Optional[bool]:
        return self.classification.sw_match

    @property
    def discrepancies(self) -> List[str]:
        """Sorted codes of every check that did not hold."""
        found = []
        if not self.paper_b2_agrees:
            found.append("b2_formula")
        if not self.dual.corrected_agrees:
            found.append("b2_corrected")
        if not self.dual_Cd.corrected_agrees:
            found.append("c2_corrected")
        if not self.moments_ok:
            found.append("moments")
        if not self.transform_ok:
            found.append("transform")
        if not self.scaling_ok:
            found.append("scaling")
        if not self.params.n2_agrees:
            found.append("n2_expressions")
        if not self.degree_ok:
            found.append("check_poly_degree")
        if self.key_eq_residual_brute not in (None, 0):
            found.append("key_equation")
        if False in self.one_weight_checks.values():
            found.append("one_weight")
        if self.sw_match is False:
            found.append("sw_match")
        if self.wolfmann == WolfmannVerdict.VIOLATED:
            found.append("wolfmann")
        if not self.thm_nonprojective:
            found.append("thm_nonprojective")
        if not self.thm_not_two_weight:
            found.append("thm_not_two_weight")
        return sorted(found)


def _wolfmann(projective: bool, num_weights: int, check: CheckPolynomial,
              cd: WeightDistribution, cD: WeightDistribution):
    # projective two-weight reducible codes split into two one-weight subcodes of equal weight
    hypotheses = projective and num_weights == 2 and check.coprime_factors
    if not hypotheses:
        return False, WolfmannVerdict.INAPPLICABLE
    if cd.num_weights == 1 and cD.num_weights == 1 and cd.weights == cD.weights:
        return True, WolfmannVerdict.OK
    return True, WolfmannVerdict.VIOLATED


def analyze_tuple(params: TwoZeroParams, budget: int = DEFAULT_BUDGET, force: bool = False,
                  workers: Optional[int] = 1, cap: int = DEFAULT_SIZE_CAP) -> ScanRecord:
    """
    Run every check on one tuple.

    :param params: admissible tuple
    :param budget: coordinate-evaluation budget per enumerated code
    :param force: enumerate beyond the budget
    :param workers: worker processes for each enumeration
    :param cap: field size cap
    :raise BudgetExceeded: if an enumeration exceeds the budget
    """
    tower = build_tower(params.p, params.t, params.k, cap)
    check = check_poly(params, tower)
    specs = {role: CodeSpec.from_params(role, params, tower) for role in (CodeRole.C, CodeRole.Cd, CodeRole.CD)}

    dist_c = weight_distribution(specs[CodeRole.C], budget=budget, force=force, workers=workers)
    dist_cD = weight_distribution(specs[CodeRole.CD], budget=budget, force=force, workers=workers)
    classification = classify_irreducible(specs[CodeRole.Cd], budget=budget, force=force, workers=workers)
    scaling = scaling_chain_check(params, tower, budget=budget, force=force, workers=workers)
    cost = sum(enumeration_cost(s) for s in specs.values()) + scaling.cost

    dual = dual_low_weight(specs[CodeRole.C])
    dual_cd = dual_low_weight(specs[CodeRole.Cd])
    moments = power_moment_check(dist_c, dual.b1, dual.b2_brute)
    transform = transform_check(dist_c, dual.b1, dual.b2_brute)

    residual_brute = residual_formula = None
    if dist_c.num_weights == 2:
        w1, w2 = dist_c.weights
        residual_brute = two_weight_residual(params.n, params.q, params.k, w1, w2, dual.b2_brute)
        residual_formula = key_equation_closed_form(params, w1, w2)

    projective = dual.b1 == 0 and dual.b2_brute == 0
    hypotheses, verdict = _wolfmann(projective, dist_c.num_weights, check,
                                    classification.distribution, dist_cD)

    return ScanRecord(
        params=params,
        check=check.to_dict(),
        degree_ok=check.degree == 2 * params.k,
        coset_ok=check.coset_ok,
        dims={role.value: spec.dimension() for role, spec in specs.items()},
        dist_C=dist_c,
        dual=dual,
        dual_Cd=dual_cd,
        moments=moments,
        transform=transform,
        scaling=scaling,
        classification=classification,
        dist_CD=dist_cD,
        wolfmann_hypotheses=hypotheses,
        wolfmann=verdict,
        key_eq_residual_brute=residual_brute,
        key_eq_residual_paper=residual_formula,
        cost=cost,
    )
