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
Dense polynomial helpers.

Polynomials over the prime field are lists of integer coefficients in ``[0, p)``,
lowest degree first. Polynomials over a subfield of a :class:`FieldTower` are lists of
elements in discrete-log form (``ZERO`` or an exponent), lowest degree first.
"""

from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from sympy import factorint

from twozero_workbench.util.errors import NoPrimitivePolynomial


def _trim(poly: List[int]) -> List[int]:
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def fp_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> List[int]:
    """
    Multiply two residues modulo a monic polynomial over F_p.

    :param a: first factor (degree < deg modulus)
    :param b: second factor (degree < deg modulus)
    :param modulus: monic modulus, lowest degree first, leading coefficient included
    :param p: characteristic
    :return: product reduced modulo `modulus`, as a list of length deg(modulus)
    """
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1 if m > 0 else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p

    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for i in range(m):
                prod[deg - m + i] = (prod[deg - m + i] - c * modulus[i]) % p

    return (prod + [0] * m)[:m]


def fp_powmod(base: Sequence[int], exponent: int, modulus: Sequence[int], p: int) -> List[int]:
    """
    Raise a residue to a power modulo a monic polynomial over F_p (square and multiply).
    """
    m = len(modulus) - 1
    result = [1] + [0] * (m - 1)
    base = list(base)
    while exponent:
        if exponent & 1:
            result = fp_mulmod(result, base, modulus, p)
        base = fp_mulmod(base, base, modulus, p)
        exponent >>= 1
    return result


def x_residue(modulus: Sequence[int], p: int) -> List[int]:
    """
    Class of the indeterminate modulo a monic polynomial of degree m >= 1.
    """
    m = len(modulus) - 1
    if m == 1:
        return [(-modulus[0]) % p]
    return [0, 1] + [0] * (m - 2)


def is_primitive(modulus: Sequence[int], p: int, order_factors: Dict[int, int] = None) -> bool:
    """
    Test whether the indeterminate has multiplicative order exactly p^m - 1
    modulo the monic polynomial `modulus` of degree m.

    :param modulus: monic polynomial, lowest degree first
    :param p: characteristic
    :param order_factors: optional pre-computed factorisation of p^m - 1
    :return: True if `modulus` is primitive
    """
    m = len(modulus) - 1
    if m < 1 or modulus[0] % p == 0:
        return False

    order = p ** m - 1
    if order_factors is None:
        order_factors = factorint(order)

    one = [1] + [0] * (m - 1)
    x = x_residue(modulus, p)
    if fp_powmod(x, order, modulus, p) != one:
        return False

    return all(fp_powmod(x, order // r, modulus, p) != one for r in order_factors)


def primitive_candidates(p: int, m: int) -> Iterator[Tuple[int, ...]]:
    """
    Monic degree-m polynomials over F_p in lexicographic order of their
    coefficient vectors, compared lowest degree first.

    :return: generator of coefficient tuples (lowest degree first, leading 1 included)
    """
    for lower in product(range(p), repeat=m):
        yield tuple(lower) + (1,)


def smallest_primitive_polynomial(p: int, m: int) -> Tuple[int, ...]:
    """
    Find the lexicographically smallest primitive polynomial of degree m over F_p.

    :param p: prime
    :param m: degree (>= 1)
    :return: coefficient tuple, lowest degree first, leading 1 included
    :raise NoPrimitivePolynomial: if the search is exhausted
    """
    order_factors = factorint(p ** m - 1)
    for candidate in primitive_candidates(p, m):
        if is_primitive(candidate, p, order_factors):
            return candidate

    raise NoPrimitivePolynomial("No primitive polynomial of degree {} over F_{}".format(m, p))


def poly_mul(a: Sequence[int], b: Sequence[int], tower) -> List[int]:
    """
    Multiply two polynomials with discrete-log coefficients.

    :param a: first factor, lowest degree first
    :param b: second factor, lowest degree first
    :param tower: :class:`FieldTower` providing the arithmetic
    :return: product, lowest degree first
    """
    zero = tower.ZERO
    prod = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == zero:
            continue
        for j, bj in enumerate(b):
            if bj != zero:
                prod[i + j] = tower.add(prod[i + j], tower.mul(ai, bj))
    return prod


def poly_degree(a: Sequence[int], tower) -> int:
    """
    Degree of a log-form polynomial (-1 for the zero polynomial).
    """
    for i in range(len(a) - 1, -1, -1):
        if a[i] != tower.ZERO:
            return i
    return -1


def poly_divmod(a: Sequence[int], b: Sequence[int], tower) -> Tuple[List[int], List[int]]:
    """
    Polynomial long division with discrete-log coefficients.

    :param a: dividend, lowest degree first
    :param b: divisor, lowest degree first (must be nonzero)
    :param tower: :class:`FieldTower` providing the arithmetic
    :return: quotient and remainder
    """
    zero = tower.ZERO
    db = poly_degree(b, tower)
    if db < 0:
        raise ZeroDivisionError("Polynomial division by zero")

    rem = list(a)
    da = poly_degree(rem, tower)
    if da < db:
        return [zero], rem

    quot = [zero] * (da - db + 1)
    lead_inv = tower.inv(b[db])
    for deg in range(da, db - 1, -1):
        c = rem[deg]
        if c == zero:
            continue
        factor = tower.mul(c, lead_inv)
        quot[deg - db] = factor
        for i in range(db + 1):
            if b[i] != zero:
                rem[deg - db + i] = tower.sub(rem[deg - db + i], tower.mul(factor, b[i]))

    return quot, rem[:max(db, 1)]


def poly_eval(a: Sequence[int], x: int, tower) -> int:
    """
    Evaluate a log-form polynomial at a field element (Horner scheme).
    """
    acc = tower.ZERO
    for c in reversed(a):
        acc = tower.add(tower.mul(acc, x), c)
    return acc
