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
Digit-sum conditions characterising two-weight irreducible cyclic codes, the
weights they predict, and classification of enumerated codes against them.
"""

from twozero_workbench.codes.trace_codes import CodeRole, CodeSpec
from twozero_workbench.util.errors import NonIntegralTheta, NotCoprime
from twozero_workbench.weights.distribution import DEFAULT_BUDGET, WeightDistribution, weight_distribution

from collections import OrderedDict
from dataclasses import dataclass, field
from enum import Enum, unique
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, NamedTuple, Optional, Tuple, Union

from sympy import divisors, n_order


def digit_sum(x: int, p: int) -> int:
    """Sum of the base-p digits of x."""
    if x < 0:
        raise ValueError("Digit sum of a negative number")
    total = 0
    while x:
        x, r = divmod(x, p)
        total += r
    return total


def _check_coprime(g: int, p: int):
    if g < 2:
        raise ValueError("g must be greater than 1")
    if gcd(g, p) != 1:
        raise NotCoprime("gcd({}, {}) != 1".format(g, p))


def sw_order(g: int, p: int) -> int:
    """Multiplicative order of p modulo g."""
    _check_coprime(g, p)
    return int(n_order(p, g))


def theta(g: int, p: int) -> Fraction:
    """
    min{S_p(j(p^h - 1)/g) : 1 ≤ j < g} / (p - 1) with h = ord_g(p).

    :raise NotCoprime: if gcd(g, p) != 1
    """
    h = sw_order(g, p)
    step = (p ** h - 1) // g
    return Fraction(min(digit_sum(j * step, p) for j in range(1, g)), p - 1)


class Solution(NamedTuple):
    m: int
    epsilon: int

    def to_dict(self) -> Dict[str, int]:
        return OrderedDict([("m", self.m), ("epsilon", self.epsilon)])


def _exponent(value: Fraction) -> Optional[int]:
    return value.numerator if value.denominator == 1 and value >= 0 else None


def sw_search(g: int, p: int, s: int) -> List[Solution]:
    """
    All (m, ε) with m | (g-1), ε = ±1,
    m·p^{sθ} ≡ ε (mod g) and m(g-m) = (g-1)·p^{s(h-2θ)}.

    The system has no solution when sθ or s(h - 2θ) is not a nonnegative integer.

    :raise NotCoprime: if gcd(g, p) != 1
    """
    if s < 1:
        raise ValueError("s must be positive")
    th = theta(g, p)
    h = sw_order(g, p)

    e_theta = _exponent(s * th)
    e_gap = _exponent(s * (h - 2 * th))
    if e_theta is None or e_gap is None:
        return []

    residue = pow(p, e_theta, g)
    rhs = (g - 1) * p ** e_gap
    solutions = []
    for m in divisors(g - 1):
        if m * (g - m) != rhs:
            continue
        for eps in (-1, 1):
            if (m * residue - eps) % g == 0:
                solutions.append(Solution(int(m), eps))
    return solutions


@dataclass(frozen=True)
class WeightContext:
    """Code parameters entering the weight formula: C_d has n = λ(q^k - 1)/d."""

    lam: int
    d: int
    q: int


class CandidatePair(NamedTuple):
    w1: Fraction
    w2: Fraction

    @property
    def degenerate(self) -> bool:
        """One of the weights vanishes, so the code is in fact one-weight."""
        return self.w1 == 0 or self.w2 == 0

    def as_set(self) -> frozenset:
        return frozenset(w for w in self if w != 0)

    def to_list(self) -> List[Union[int, str]]:
        return [w.numerator if w.denominator == 1 else str(w) for w in self]


def candidate_weights(context: WeightContext, p: int, s: int, h: int, theta_value: Fraction, g: int,
                      solution: Solution) -> CandidatePair:
    """
    Weights predicted for a solution (m, ε):

    w1 = λ(q-1)p^{sθ}(p^{s(h-θ)} - εm)/(dq),
    w2 = λ(q-1)p^{sθ}(p^{s(h-θ)} + ε(g-m))/(dq).

    :raise NonIntegralTheta: if sθ or s(h - θ) is not an integer
    """
    theta_value = Fraction(theta_value)
    e_theta, e_rest = s * theta_value, s * (h - theta_value)
    if e_theta.denominator != 1 or e_rest.denominator != 1:
        raise NonIntegralTheta("sθ = {} and s(h-θ) = {} must be integers".format(e_theta, e_rest))

    m, eps = solution
    lam, d, q = context.lam, context.d, context.q
    scale = Fraction(lam * (q - 1) * Fraction(p) ** int(e_theta), d * q)
    top = Fraction(p) ** int(e_rest)
    return CandidatePair(scale * (top - eps * m), scale * (top + eps * (g - m)))


@dataclass(frozen=True)
class SWAnalysis:
    """Result of the digit-sum analysis for (g, p, s)."""

    g: int
    p: int
    s: int
    h: int
    theta: Fraction
    solutions: Tuple[Solution, ...]
    candidates: Tuple[CandidatePair, ...] = field(default=())

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ("theta", "{}/{}".format(self.theta.numerator, self.theta.denominator)),
            ("h", self.h),
            ("solutions", [sol.to_dict() for sol in self.solutions]),
            ("candidates", [c.to_list() for c in self.candidates]),
        ])


def analyze(g: int, p: int, s: int, context: Optional[WeightContext] = None) -> SWAnalysis:
    """
    Bundle θ, h, the solutions of the condition system and, given a code context,
    the candidate weight pairs.
    """
    th = theta(g, p)
    h = sw_order(g, p)
    solutions = tuple(sw_search(g, p, s))
    candidates = ()
    if context is not None:
        candidates = tuple(candidate_weights(context, p, s, h, th, g, sol) for sol in solutions)
    return SWAnalysis(g=g, p=p, s=s, h=h, theta=th, solutions=solutions, candidates=candidates)


@unique
class WeightClass(Enum):
    ONE_WEIGHT = "one_weight"
    TWO_WEIGHT = "two_weight"
    MANY = "many"


@dataclass(frozen=True)
class Classification:
    """
    Weight class of an enumerated irreducible code.

    ``sw_match`` is set for two-weight codes only.
    """

    kind: WeightClass
    weights: Tuple[int, ...]
    sw_match: Optional[bool] = None
    analysis: Optional[SWAnalysis] = None
    distribution: Optional[WeightDistribution] = None

    @property
    def count(self) -> int:
        return len(self.weights)

    def to_dict(self) -> Dict[str, Any]:
        d = OrderedDict([("kind", self.kind.value), ("weights", list(self.weights))])
        if self.kind == WeightClass.TWO_WEIGHT:
            d["sw_match"] = self.sw_match
        if self.analysis is not None:
            d["sw"] = self.analysis.to_dict()
        return d


def irreducible_analysis(spec: CodeSpec) -> Optional[SWAnalysis]:
    """
    Digit-sum analysis for C_d with (g, p, s = kt/ord_g(p)), or None when g = 1 or
    ord_g(p) does not divide kt.
    """
    params = spec.params
    g, p = params.g, params.p
    if g < 2:
        return None
    h = sw_order(g, p)
    if (params.k * params.t) % h:
        return None
    context = WeightContext(lam=params.lam, d=params.d, q=params.q)
    return analyze(g, p, params.k * params.t // h, context)


def classify_irreducible(spec: CodeSpec, budget: int = DEFAULT_BUDGET, force: bool = False,
                         workers: Optional[int] = 1) -> Classification:
    """
    Enumerate C_d and classify it by its number of nonzero weights. Two-weight codes
    are compared against every candidate pair of the digit-sum analysis.

    :raise BudgetExceeded: if the enumeration exceeds the budget
    """
    if spec.role != CodeRole.Cd:
        raise ValueError("Classification applies to role Cd, not {}".format(spec.role))

    dist = weight_distribution(spec, budget=budget, force=force, workers=workers)
    weights = tuple(dist.weights)
    analysis = irreducible_analysis(spec)

    if len(weights) == 1:
        return Classification(WeightClass.ONE_WEIGHT, weights, analysis=analysis, distribution=dist)
    if len(weights) == 2:
        observed = frozenset(weights)
        match = analysis is not None and any(c.as_set() == observed for c in analysis.candidates)
        return Classification(WeightClass.TWO_WEIGHT, weights, sw_match=match, analysis=analysis,
                              distribution=dist)
    return Classification(WeightClass.MANY, weights, analysis=analysis, distribution=dist)
