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
Cyclotomic cosets, minimal polynomials and the check polynomial h = h_d·h_D.
"""

from twozero_workbench.gf.polynomials import poly_degree, poly_divmod, poly_mul
from twozero_workbench.gf.tower import FieldTower, ZERO
from twozero_workbench.params.family import TwoZeroParams
from twozero_workbench.util.errors import DegreeMismatch, InternalError

from collections import OrderedDict
from math import gcd
from typing import Any, Dict, List, Sequence


def cyclotomic_coset(a: int, modulus: int, multiplier: int) -> List[int]:
    """
    Orbit of `a` under multiplication by `multiplier` modulo `modulus`.

    :return: sorted residues (minimal representative first)
    """
    if gcd(multiplier, modulus) != 1:
        raise ValueError("Multiplier {} is not invertible modulo {}".format(multiplier, modulus))

    a %= modulus
    coset = {a}
    x = (a * multiplier) % modulus
    while x != a:
        coset.add(x)
        x = (x * multiplier) % modulus
    return sorted(coset)


def min_poly(a: int, tower: FieldTower) -> List[int]:
    """
    Minimal polynomial over F_q of γ^a, i.e. Π (x - γ^{a q^i}) over the coset of a.

    :return: monic polynomial in log form, lowest degree first, coefficients in F_q
    :raise InternalError: if a coefficient falls outside F_q
    """
    poly = [0]
    for r in cyclotomic_coset(a, tower.big_order, tower.q):
        poly = poly_mul(poly, [tower.neg(r), 0], tower)

    for c in poly:
        if not tower.is_in_subfield(c):
            raise InternalError("Minimal polynomial of γ^{} has a coefficient outside F_q".format(a))
    return poly


def x_n_minus_one(n: int, tower: FieldTower) -> List[int]:
    """x^n - 1 in log form."""
    return [tower.neg(0)] + [ZERO] * (n - 1) + [0]


class CheckPolynomial:
    """
    Check polynomial h = h_d·h_D of the code C with its factors.
    """

    def __init__(self, params: TwoZeroParams, tower: FieldTower):
        self._params = params
        self._tower = tower
        self._exponents = (params.d % tower.big_order, (params.d + params.D) % tower.big_order)
        self._cosets = [cyclotomic_coset(a, tower.big_order, tower.q) for a in self._exponents]
        self._h_d = min_poly(self._exponents[0], tower)
        self._h_D = min_poly(self._exponents[1], tower)
        self._h = poly_mul(self._h_d, self._h_D, tower)

    @property
    def h(self) -> List[int]:
        return self._h

    @property
    def h_d(self) -> List[int]:
        return self._h_d

    @property
    def h_D(self) -> List[int]:
        return self._h_D

    @property
    def cosets(self) -> List[List[int]]:
        """Cyclotomic cosets of d and d + D."""
        return self._cosets

    @property
    def degree(self) -> int:
        return poly_degree(self._h, self._tower)

    @property
    def coset_ok(self) -> bool:
        """Both cosets have size k."""
        return all(len(c) == self._params.k for c in self._cosets)

    @property
    def coprime_factors(self) -> bool:
        """h_d and h_D share no root."""
        return not set(self._cosets[0]) & set(self._cosets[1])

    def divides_x_n_minus_one(self) -> bool:
        _, rem = poly_divmod(x_n_minus_one(self._params.n, self._tower), self._h, self._tower)
        return all(c == ZERO for c in rem)

    def assert_degree(self):
        """
        :raise DegreeMismatch: if deg h ≠ 2k
        """
        if self.degree != 2 * self._params.k:
            raise DegreeMismatch(self.degree, 2 * self._params.k)

    def encoded(self, poly: Sequence[int]) -> List[int]:
        return [self._tower.encode_subfield(c) for c in poly]

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ("h", self.encoded(self._h)),
            ("h_d", self.encoded(self._h_d)),
            ("h_D", self.encoded(self._h_D)),
            ("degree", self.degree),
            ("cosets", OrderedDict([("d", self._cosets[0]), ("d+D", self._cosets[1])])),
            ("coset_ok", self.coset_ok),
            ("coprime_factors", self.coprime_factors),
            ("divides_x^n-1", self.divides_x_n_minus_one()),
        ])


def check_poly(params: TwoZeroParams, tower: FieldTower, strict: bool = False) -> CheckPolynomial:
    """
    Build the check polynomial h = h_d·h_D.

    A degree other than 2k is kept and reported through :attr:`CheckPolynomial.degree`;
    pass ``strict=True`` to raise instead.

    :raise DegreeMismatch: in strict mode, if deg h ≠ 2k
    """
    h = CheckPolynomial(params, tower)
    if strict:
        h.assert_degree()
    return h
