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
Admissible parameter tuples (p, t, k, d, e, λ) of the two-zero family and their derived scalars.
"""

from twozero_workbench.util.errors import ConstraintViolated

from collections import OrderedDict
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Iterator

from sympy import divisors, factorint, isprime, n_order


@dataclass(frozen=True)
class TwoZeroParams:
    """
    One admissible tuple of the family together with every derived quantity.

    ``lam`` is λ, the divisor of d with n = λ(q^k - 1)/d.
    """

    p: int
    t: int
    k: int
    q: int
    d: int
    e: int
    D: int
    lam: int
    n: int
    f: int
    g: int
    f_prime: int
    n1: int
    n2: int
    n2_alt: int
    mu: int
    msg_space: int

    @property
    def big_order(self) -> int:
        """q^k - 1"""
        return self.q ** self.k - 1

    @property
    def n2_agrees(self) -> bool:
        """Whether both expressions for n2 give the same value."""
        return self.n2 == self.n2_alt

    @property
    def is_k_one(self) -> bool:
        """Splitting field equals F_q."""
        return self.k == 1

    @property
    def key(self):
        """Enumeration sort key (q, k, d, e, λ)."""
        return self.q, self.k, self.d, self.e, self.lam

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready projection with the field names used in reports."""
        return OrderedDict([
            ("p", self.p), ("t", self.t), ("k", self.k), ("q", self.q),
            ("d", self.d), ("e", self.e), ("D", self.D), ("lambda", self.lam),
            ("n", self.n), ("f", self.f), ("g", self.g), ("f_prime", self.f_prime),
            ("n1", self.n1), ("n2", self.n2), ("mu", self.mu), ("msg_space", self.msg_space),
        ])

    def __str__(self):
        return "(p={}, t={}, k={}, d={}, e={}, λ={})".format(self.p, self.t, self.k, self.d, self.e, self.lam)


def derive(p: int, t: int, k: int, d: int, e: int, lam: int) -> TwoZeroParams:
    """
    Validate a tuple against the family constraints and compute all derived scalars.

    :raise ConstraintViolated: naming the first failed constraint
    """
    if not isprime(p):
        raise ConstraintViolated("p prime", "p={}".format(p))
    for name, value in (("t≥1", t), ("k≥1", k), ("d≥1", d), ("λ≥1", lam)):
        if value < 1:
            raise ConstraintViolated(name)
    if e <= 1:
        raise ConstraintViolated("e>1", "e={}".format(e))

    q = p ** t
    if (q - 1) % (d * e):
        raise ConstraintViolated("de∤(q−1)", "de={}, q−1={}".format(d * e, q - 1))
    if d % lam:
        raise ConstraintViolated("λ∤d", "λ={}, d={}".format(lam, d))

    big_order = q ** k - 1
    n = lam * big_order // d
    if n < 3:
        raise ConstraintViolated("n<3", "n={}".format(n))
    if gcd(n, q) != 1:
        raise ConstraintViolated("gcd(n,q)≠1")
    if n_order(q, n) != k:
        raise ConstraintViolated("ord_n(q)≠k", "ord_{}({})={}".format(n, q, n_order(q, n)))

    mu = lam * (q - 1) // d
    if (q - 1) % mu:
        raise ConstraintViolated("μ∤(q−1)")

    norm_index = big_order // (q - 1)
    g = gcd(norm_index, d)
    f = gcd(norm_index, d * e)
    n1 = big_order // d
    return TwoZeroParams(
        p=p, t=t, k=k, q=q, d=d, e=e, D=big_order // e, lam=lam, n=n,
        f=f, g=g, f_prime=f // g,
        n1=n1, n2=n1 * (q - 1) // gcd(q - 1, n1), n2_alt=big_order // g,
        mu=mu, msg_space=q ** (2 * k),
    )


def is_prime_power(q: int) -> bool:
    """Whether q = p^t for a prime p and t ≥ 1."""
    return q > 1 and len(factorint(q)) == 1


def enumerate_params(max_q: int, max_msgs: int, max_n: int) -> Iterator[TwoZeroParams]:
    """
    Generate every admissible tuple with q ≤ max_q, q^{2k} ≤ max_msgs and n ≤ max_n
    in lexicographic order of (q, k, d, e, λ).
    """
    for q in range(2, max_q + 1):
        if not is_prime_power(q):
            continue

        (p, t), = factorint(q).items()
        k = 1
        while q ** (2 * k) <= max_msgs:
            for d in range(1, q):
                for e in range(2, q):
                    if (q - 1) % (d * e):
                        continue
                    for lam in divisors(d):
                        if lam * (q ** k - 1) // d > max_n:
                            continue
                        try:
                            yield derive(p, t, k, d, e, lam)
                        except ConstraintViolated:
                            continue
            k += 1
