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
Power-moment identities and the MacWilliams transform on exact weight distributions.
"""

from twozero_workbench.util.errors import NonIntegerCount
from twozero_workbench.weights.distribution import WeightDistribution

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Tuple


@dataclass(frozen=True)
class MomentReport:
    """
    Outcome of the first three power-moment identities.
    Residuals are LHS - RHS as exact rationals.
    """

    residuals: Tuple[Fraction, Fraction, Fraction]

    @property
    def v0_ok(self) -> bool:
        return self.residuals[0] == 0

    @property
    def v1_ok(self) -> bool:
        return self.residuals[1] == 0

    @property
    def v2_ok(self) -> bool:
        return self.residuals[2] == 0

    @property
    def ok(self) -> bool:
        return self.v0_ok and self.v1_ok and self.v2_ok

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ("v0_ok", self.v0_ok), ("v1_ok", self.v1_ok), ("v2_ok", self.v2_ok),
            ("residuals", [str(r) for r in self.residuals]),
        ])


@dataclass(frozen=True)
class FullMomentReport:
    """Outcome of the complete identity family for v = 0, ..., n-1."""

    failed: Tuple[int, ...]
    checked: int

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([("ok", self.ok), ("checked", self.checked), ("failed", list(self.failed))])


def power_moment_check(dist: WeightDistribution, b1: int, b2: int) -> MomentReport:
    """
    Check the zeroth, first and second power moments of `dist` against the dual counts
    B1 and B2 of words of weight one and two.

    :param dist: primal distribution (length n, alphabet q, dimension m)
    :param b1: number of dual words of weight 1
    :param b2: number of dual words of weight 2
    """
    n, q, m = dist.length, dist.alphabet, dist.dimension
    nonzero = [(w, c) for w, c in dist.counts.items() if w > 0]

    q_m1 = Fraction(q) ** (m - 1)
    q_m2 = Fraction(q) ** (m - 2)

    r0 = Fraction(sum(c for _, c in nonzero) - (q ** m - 1))
    r1 = sum(w * c for w, c in nonzero) - (n * (q - 1) - b1) * q_m1
    r2 = sum(w * w * c for w, c in nonzero) - \
        (n * n * (q - 1) ** 2 + n * (q - 1) - b1 * (q + 2 * (n - 1) * (q - 1)) + 2 * b2) * q_m2
    return MomentReport((r0, Fraction(r1), Fraction(r2)))


def full_moment_check(dist: WeightDistribution, dual: WeightDistribution) -> FullMomentReport:
    """
    Check Σ_i A_i·C(n-i, v) = q^{m-v}·Σ_i B_i·C(n-i, n-v) for every v = 0, ..., n-1.

    Both sides are multiplied by q^v so the comparison is between integers.
    """
    if dual.length != dist.length or dual.alphabet != dist.alphabet:
        raise ValueError("Distributions do not belong to the same ambient space")
    if dual.dimension != dist.length - dist.dimension:
        raise ValueError("Dual dimension must be {}".format(dist.length - dist.dimension))

    n, q, m = dist.length, dist.alphabet, dist.dimension
    failed = []
    for v in range(n):
        lhs = sum(c * comb(n - i, v) for i, c in dist.counts.items()) * q ** v
        rhs = q ** m * sum(c * comb(n - i, n - v) for i, c in dual.counts.items())
        if lhs != rhs:
            failed.append(v)
    return FullMomentReport(tuple(failed), n)


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    """Krawtchouk polynomial K_j(i) for length n over an alphabet of size q."""
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


def dual_count(dist: WeightDistribution, j: int) -> int:
    """
    Number of dual words of weight j, a single coefficient of the transform.

    :raise NonIntegerCount: if the count is not a nonnegative integer
    """
    n, q, m = dist.length, dist.alphabet, dist.dimension
    total = sum(c * krawtchouk(j, i, n, q) for i, c in dist.counts.items())
    if total % q ** m or total < 0:
        raise NonIntegerCount("Dual count at weight {} is {}/{}".format(j, total, q ** m))
    return total // q ** m


def macwilliams_transform(dist: WeightDistribution) -> WeightDistribution:
    """
    Weight distribution of the dual code: B_j = q^{-m}·Σ_i A_i·K_j(i).

    :raise NonIntegerCount: if some B_j is not a nonnegative integer
    """
    counts = {j: dual_count(dist, j) for j in range(dist.length + 1)}
    return WeightDistribution(length=dist.length, alphabet=dist.alphabet,
                              dimension=dist.length - dist.dimension, counts=counts)


def transform_check(dist: WeightDistribution, b1: int, b2: int) -> Dict[str, Any]:
    """Compare the transform's weight-one and weight-two counts against given values."""
    t1, t2 = dual_count(dist, 1), dual_count(dist, 2)
    return OrderedDict([("b1", t1), ("b2", t2), ("b1_ok", t1 == b1), ("b2_ok", t2 == b2)])


def moment_sums(dist: WeightDistribution) -> List[int]:
    """Σ A_i, Σ w·A_i and Σ w²·A_i over the nonzero weights."""
    return [sum(w ** r * c for w, c in dist.counts.items() if w > 0) for r in range(3)]
