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

from twozero_workbench.gf.polynomials import is_primitive, smallest_primitive_polynomial
from twozero_workbench.util.errors import DivisionByZero, InternalError, NotPrime, SizeExceeded
from twozero_workbench.util.util import lru_cache

from collections import OrderedDict
import hashlib
from math import gcd
from typing import Dict, Iterator, Optional, Tuple

import numpy as np
from sympy import isprime

# Element of F_{q^k} in discrete-log form: ZERO or an exponent in [0, q^k - 2]
Element = int

ZERO = -1

DEFAULT_SIZE_CAP = 2 ** 22

_CHUNK_ROWS = 1 << 16


def _matpow_mod(matrix: np.ndarray, exponent: int, p: int) -> np.ndarray:
    result = np.eye(matrix.shape[0], dtype=np.int64)
    base = matrix.copy()
    while exponent:
        if exponent & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        exponent >>= 1
    return result


def _chunked_matmul_mod(vectors: np.ndarray, matrix: np.ndarray, p: int) -> np.ndarray:
    out = np.empty((vectors.shape[0], matrix.shape[1]), dtype=np.int64)
    for start in range(0, vectors.shape[0], _CHUNK_ROWS):
        stop = start + _CHUNK_ROWS
        out[start:stop] = (vectors[start:stop].astype(np.int64) @ matrix) % p
    return out


class FieldTower:
    """
    The tower F_p ⊂ F_q ⊂ F_{q^k} with a fixed primitive element γ.

    Elements are held in discrete-log form: the exponent i stands for γ^i and
    :data:`ZERO` for the zero element. Addition uses a Zech logarithm table, traces to
    F_q and F_p are table lookups. Instances are immutable and safe to share.

    Use :func:`build_tower` to create instances.
    """

    ZERO = ZERO

    def __init__(self, p: int, t: int, k: int, modulus: Tuple[int, ...], exp_table: np.ndarray,
                 log_table: np.ndarray, zech: np.ndarray, trace_q: np.ndarray, trace_p: np.ndarray):
        self._p = p
        self._t = t
        self._k = k
        self._q = p ** t
        self._order = self._q ** k
        self._big_order = self._order - 1
        self._modulus = modulus
        self._exp_table = exp_table
        self._log_table = log_table
        self._zech = zech
        self._trace_q = trace_q
        self._trace_p = trace_p
        self._subfield_step = self._big_order // (self._q - 1)
        self._prime_step = self._big_order // (p - 1)
        self._half = self._big_order // 2 if p != 2 else 0

        for table in (exp_table, log_table, zech, trace_q, trace_p):
            table.setflags(write=False)

    @property
    def p(self) -> int:
        """Characteristic."""
        return self._p

    @property
    def t(self) -> int:
        """Degree of F_q over F_p."""
        return self._t

    @property
    def k(self) -> int:
        """Degree of F_{q^k} over F_q."""
        return self._k

    @property
    def q(self) -> int:
        """Size of the middle field F_q."""
        return self._q

    @property
    def degree(self) -> int:
        """Degree t·k of F_{q^k} over F_p."""
        return self._t * self._k

    @property
    def order(self) -> int:
        """Number of elements q^k."""
        return self._order

    @property
    def big_order(self) -> int:
        """Order q^k - 1 of the multiplicative group."""
        return self._big_order

    @property
    def modulus(self) -> Tuple[int, ...]:
        """Primitive polynomial over F_p, lowest degree first, leading 1 included."""
        return self._modulus

    @property
    def subfield_step(self) -> int:
        """(q^k - 1)/(q - 1), the exponent step of F_q^*."""
        return self._subfield_step

    @property
    def prime_step(self) -> int:
        """(q^k - 1)/(p - 1), the exponent step of F_p^*."""
        return self._prime_step

    @property
    def zech(self) -> np.ndarray:
        """Zech logarithms: γ^zech[i] = 1 + γ^i, or ZERO."""
        return self._zech

    @property
    def trace_q(self) -> np.ndarray:
        """trace_q[i] is the log of Tr_{q^k/q}(γ^i), or ZERO."""
        return self._trace_q

    @property
    def trace_p(self) -> np.ndarray:
        """trace_p[i] is the log of Tr_{q^k/p}(γ^i), or ZERO."""
        return self._trace_p

    @property
    def exp_table(self) -> np.ndarray:
        """exp_table[i] is the polynomial-basis integer of γ^i."""
        return self._exp_table

    def elements(self) -> Iterator[Element]:
        """All field elements, ZERO first, then γ^0, γ^1, ..."""
        yield ZERO
        yield from range(self._big_order)

    def one(self) -> Element:
        return 0

    def gamma(self) -> Element:
        return 1 % self._big_order

    def add(self, a: Element, b: Element) -> Element:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        z = int(self._zech[(b - a) % self._big_order])
        if z == ZERO:
            return ZERO
        return (a + z) % self._big_order

    def neg(self, a: Element) -> Element:
        if a == ZERO:
            return ZERO
        return (a + self._half) % self._big_order

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % self._big_order

    def pow(self, a: Element, n: int) -> Element:
        if a == ZERO:
            if n < 0:
                raise DivisionByZero("Negative power of zero")
            return 0 if n == 0 else ZERO
        return (a * n) % self._big_order

    def inv(self, a: Element) -> Element:
        if a == ZERO:
            raise DivisionByZero("Zero has no multiplicative inverse")
        return (-a) % self._big_order

    def trace_to_q(self, x: Element) -> Element:
        if x == ZERO:
            return ZERO
        return int(self._trace_q[x])

    def trace_to_p(self, x: Element) -> Element:
        if x == ZERO:
            return ZERO
        return int(self._trace_p[x])

    def trace_q_to_p(self, y: Element) -> Element:
        """
        Trace of a subfield element y ∈ F_q down to F_p, computed by Frobenius powers.
        """
        acc = ZERO
        for j in range(self._t):
            acc = self.add(acc, self.pow(y, self._p ** j))
        return acc

    def mult_order(self, x: Element) -> int:
        if x == ZERO:
            raise DivisionByZero("Zero has no multiplicative order")
        return self._big_order // gcd(self._big_order, x)

    def is_in_subfield(self, x: Element, level: str = "q") -> bool:
        """Whether x lies in F_q (level 'q') or F_p (level 'p')."""
        return x == ZERO or x % self._step(level) == 0

    def encode_subfield(self, x: Element, level: str = "q") -> int:
        """
        Stable integer code of a subfield element: 0 ↦ 0, γ^{i·step} ↦ i + 1.

        :raise InternalError: if x is not in the subfield
        """
        if x == ZERO:
            return 0
        step = self._step(level)
        if x % step:
            raise InternalError("γ^{} is not in F_{}".format(x, self._q if level == "q" else self._p))
        return x // step + 1

    def decode_subfield(self, code: int, level: str = "q") -> Element:
        """Inverse of :meth:`encode_subfield`."""
        if code == 0:
            return ZERO
        return (code - 1) * self._step(level)

    @lru_cache(maxsize=16)
    def subfield_tables(self, level: str = "q") -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Addition, multiplication and negation tables of F_q (or F_p) on the
        :meth:`encode_subfield` integer codes.

        :return: (add_table, mul_table, neg_table)
        """
        size = (self._q if level == "q" else self._p)
        codes = range(size)
        logs = [self.decode_subfield(c, level) for c in codes]
        add_table = np.array([[self.encode_subfield(self.add(a, b), level) for b in logs] for a in logs],
                             dtype=np.int64)
        mul_table = np.array([[self.encode_subfield(self.mul(a, b), level) for b in logs] for a in logs],
                             dtype=np.int64)
        neg_table = np.array([self.encode_subfield(self.neg(a), level) for a in logs], dtype=np.int64)
        return add_table, mul_table, neg_table

    def to_int(self, x: Element) -> int:
        """Polynomial-basis integer Σ c_r p^r of x."""
        if x == ZERO:
            return 0
        return int(self._exp_table[x])

    def from_int(self, value: int) -> Element:
        """Discrete log of the element with polynomial-basis integer `value`."""
        return int(self._log_table[value])

    def _step(self, level: str) -> int:
        if level == "q":
            return self._subfield_step
        if level == "p":
            return self._prime_step
        raise ValueError("Unknown subfield level '{}'".format(level))

    def checksums(self) -> Dict[str, str]:
        """SHA-256 digests of all tables (stable across runs)."""
        digests = OrderedDict()
        for name, table in (("exp", self._exp_table), ("zech", self._zech),
                            ("trace_q", self._trace_q), ("trace_p", self._trace_p)):
            digests[name] = hashlib.sha256(np.ascontiguousarray(table, dtype="<i8").tobytes()).hexdigest()
        return digests

    def __repr__(self):
        return "FieldTower(p={}, t={}, k={})".format(self._p, self._t, self._k)


@lru_cache(maxsize=8)
def build_tower(p: int, t: int, k: int, cap: int = DEFAULT_SIZE_CAP,
                modulus: Optional[Tuple[int, ...]] = None) -> FieldTower:
    """
    Build the tower F_p ⊂ F_{p^t} ⊂ F_{p^{tk}}.

    γ is the class of the indeterminate modulo the lexicographically smallest
    primitive polynomial of degree tk over F_p, so the construction is deterministic.

    :param p: characteristic
    :param t: degree of F_q over F_p
    :param k: degree of the top field over F_q
    :param cap: maximum number of field elements
    :param modulus: primitive polynomial to use instead of the smallest one (lowest degree first)
    :return: immutable field tower
    :raise NotPrime: if p is not prime
    :raise SizeExceeded: if p^{tk} > cap
    """
    if not isprime(p):
        raise NotPrime("{} is not a prime".format(p))
    if t < 1 or k < 1:
        raise ValueError("t and k must be positive")

    m = t * k
    size = p ** m
    if size > cap:
        raise SizeExceeded(size, cap)

    if modulus is None:
        modulus = smallest_primitive_polynomial(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1 or not is_primitive(modulus, p):
            raise ValueError("{} is not a monic primitive polynomial of degree {} over F_{}".format(modulus, m, p))
    big_order = size - 1

    # multiplication by γ on coefficient row vectors
    companion = np.zeros((m, m), dtype=np.int64)
    for i in range(m - 1):
        companion[i, i + 1] = 1
    companion[m - 1, :] = [(-c) % p for c in modulus[:m]]

    vec_dtype = np.uint8 if p < 256 else np.int64
    vectors = np.zeros((big_order, m), dtype=vec_dtype)
    vectors[0, 0] = 1
    filled = 1
    step_matrix = companion
    while filled < big_order:
        count = min(filled, big_order - filled)
        vectors[filled:filled + count] = _chunked_matmul_mod(vectors[:count], step_matrix, p)
        filled += count
        step_matrix = (step_matrix @ step_matrix) % p

    powers = np.array([p ** r for r in range(m)], dtype=np.int64)
    exp_table = _chunked_matmul_mod(vectors, powers.reshape(m, 1), size).reshape(-1)

    log_table = np.full(size, ZERO, dtype=np.int64)
    log_table[exp_table] = np.arange(big_order, dtype=np.int64)
    if np.count_nonzero(log_table[1:] >= 0) != big_order or log_table[0] != ZERO:
        raise InternalError("Modulus {} is not primitive".format(modulus))

    const = vectors[:, 0].astype(np.int64)
    one_plus = np.where(const == p - 1, exp_table - (p - 1), exp_table + 1)
    zech = log_table[one_plus]

    def trace_matrix(field_degree: int, base: int) -> np.ndarray:
        # row r: coefficient vector of Σ_j (γ^r)^{base^j}
        rows = np.zeros((m, m), dtype=np.int64)
        for r in range(m):
            acc = np.zeros(m, dtype=np.int64)
            for j in range(field_degree):
                acc = (acc + vectors[(r * base ** j) % big_order]) % p
            rows[r] = acc
        return rows

    def trace_logs(matrix: np.ndarray) -> np.ndarray:
        images = _chunked_matmul_mod(vectors, matrix, p)
        return log_table[_chunked_matmul_mod(images, powers.reshape(m, 1), size).reshape(-1)]

    trace_q = trace_logs(trace_matrix(k, p ** t))
    trace_p = trace_logs(trace_matrix(m, p))

    subfield_step = big_order // (p ** t - 1)
    if np.any((trace_q >= 0) & (trace_q % subfield_step != 0)):
        raise InternalError("Trace to F_q left the subfield")
    if np.any((trace_p >= 0) & (trace_p % (big_order // (p - 1)) != 0)):
        raise InternalError("Trace to F_p left the subfield")

    return FieldTower(p, t, k, modulus, exp_table, log_table, zech, trace_q, trace_p)
