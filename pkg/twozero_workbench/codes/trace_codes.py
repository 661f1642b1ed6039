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
Trace representation of the six codes derived from the family:
C, C_d, C_D (length n), C'_d (length n1), C''_d and C̄_d (length n2).
"""

from twozero_workbench.gf.polynomials import poly_eval
from twozero_workbench.gf.tower import Element, FieldTower, ZERO
from twozero_workbench.params.family import TwoZeroParams

from dataclasses import dataclass, field
from enum import Enum, unique
from typing import List, Optional, Sequence, Tuple

import numpy as np


@unique
class CodeRole(Enum):
    """
    Members of the derived code family.
    """
    C = "C"
    Cd = "Cd"
    CD = "CD"
    CdPrime = "CdPrime"
    CdDoublePrime = "CdDoublePrime"
    BarCd = "BarCd"

    def __repr__(self):
        return self.name

    def __str__(self):
        return self.__repr__()


@dataclass(frozen=True)
class CodeSpec:
    """
    A code of the family: coordinate j of the word for message (u, v) is
    Tr(u·β^{s1·j} + v·β^{s2·j}) with β = γ^{-1}, the role's strides and trace level.
    """

    role: CodeRole
    params: TwoZeroParams
    tower: FieldTower = field(compare=False, repr=False)
    length: int
    strides: Tuple[int, ...]
    level: str

    @classmethod
    def from_params(cls, role: CodeRole, params: TwoZeroParams, tower: FieldTower) -> "CodeSpec":
        """
        Build the code description for a role.

        :param role: family member
        :param params: admissible tuple
        :param tower: field tower for (p, t, k) of `params`
        """
        role = CodeRole(role)
        if (tower.p, tower.t, tower.k) != (params.p, params.t, params.k):
            raise ValueError("Tower {} does not match parameters {}".format(tower, params))

        d, big_d, g = params.d, params.D, params.g
        layout = {
            CodeRole.C: (params.n, (d, d + big_d), "q"),
            CodeRole.Cd: (params.n, (d,), "q"),
            CodeRole.CD: (params.n, (d + big_d,), "q"),
            CodeRole.CdPrime: (params.n1, (d,), "q"),
            CodeRole.CdDoublePrime: (params.n2, (g,), "q"),
            CodeRole.BarCd: (params.n2, (g,), "p"),
        }
        length, strides, level = layout[role]
        return cls(role=role, params=params, tower=tower, length=length, strides=strides, level=level)

    @property
    def alphabet(self) -> int:
        """Alphabet size: q, or p for C̄_d."""
        return self.tower.q if self.level == "q" else self.tower.p

    @property
    def msg_rank(self) -> int:
        """Number of message components: 2 for C, 1 otherwise."""
        return len(self.strides)

    @property
    def nominal_dimension(self) -> int:
        """Dimension of the message space over the alphabet field."""
        per_component = self.tower.k if self.level == "q" else self.tower.degree
        return self.msg_rank * per_component

    @property
    def message_count(self) -> int:
        """Number of messages (q^k per component)."""
        return self.tower.order ** self.msg_rank

    @property
    def trace_table(self) -> np.ndarray:
        return self.tower.trace_q if self.level == "q" else self.tower.trace_p

    def coordinate(self, j: int, u: Element, v: Optional[Element] = None) -> Element:
        """Coordinate j as a field element in log form."""
        tw = self.tower
        x = tw.mul(u, tw.pow(tw.inv(tw.gamma()), self.strides[0] * j))
        if self.msg_rank == 2:
            x = tw.add(x, tw.mul(v if v is not None else ZERO, tw.pow(tw.inv(tw.gamma()), self.strides[1] * j)))
        return tw.trace_to_q(x) if self.level == "q" else tw.trace_to_p(x)

    def codeword(self, u: Element, v: Optional[Element] = None) -> List[int]:
        """
        Codeword for message (u, v) with coordinates in the subfield integer encoding.

        :param u: first message component
        :param v: second component (required for C, must be absent otherwise)
        """
        if (v is not None) != (self.msg_rank == 2):
            raise ValueError("Role {} takes {} message component(s)".format(self.role, self.msg_rank))
        return [self.tower.encode_subfield(self.coordinate(j, u, v), self.level) for j in range(self.length)]

    def trace_rows(self, stride: int, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
        """
        Traces of u·β^{stride·j} for messages u with index in [start, stop).

        Message index 0 is ZERO, index i > 0 is γ^{i-1}.

        :return: array of shape (stop - start, length) with log-form traces
        """
        stop = self.tower.order if stop is None else stop
        big_order = self.tower.big_order
        idx = np.arange(start, stop, dtype=np.int64)
        j = np.arange(self.length, dtype=np.int64)
        exps = (idx[:, None] - 1 - (stride % big_order) * j[None, :]) % big_order
        rows = self.trace_table[exps]
        rows[idx == 0, :] = ZERO
        return rows

    def generator_matrix(self) -> np.ndarray:
        """
        Images of an F_q-basis (F_p-basis for C̄_d) of the message space: the words of
        (γ^i, 0) and (0, γ^i) for i below the component dimension.

        :return: integer matrix of encoded coordinates
        """
        per_component = self.nominal_dimension // self.msg_rank
        rows = []
        for component in range(self.msg_rank):
            for i in range(per_component):
                msg = [ZERO] * self.msg_rank
                msg[component] = i % self.tower.big_order
                rows.append(self.codeword(*msg))
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.length)

    def dimension(self) -> int:
        """Rank of :meth:`generator_matrix` over the alphabet field."""
        return matrix_rank(self.generator_matrix(), self.tower, self.level)

    def evaluate(self, word: Sequence[int], x: Element) -> Element:
        """Evaluate the word, read as c(X) = Σ c_j X^j, at the field element x."""
        return poly_eval([self.tower.decode_subfield(int(c), self.level) for c in word], x, self.tower)


def matrix_rank(matrix: np.ndarray, tower: FieldTower, level: str = "q") -> int:
    """
    Rank of a matrix over F_q (or F_p) with entries in the subfield integer encoding,
    by Gaussian elimination.
    """
    add_t, mul_t, neg_t = tower.subfield_tables(level)
    size = add_t.shape[0]
    inv_t = np.zeros(size, dtype=np.int64)
    for a in range(1, size):
        inv_t[a] = int(np.nonzero(mul_t[a] == 1)[0][0])

    m = np.array(matrix, dtype=np.int64, copy=True)
    rank = 0
    rows, cols = m.shape if m.ndim == 2 else (0, 0)
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(m[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + int(pivots[0])
        m[[rank, pivot]] = m[[pivot, rank]]
        m[rank] = mul_t[inv_t[m[rank, col]], m[rank]]
        for r in range(rows):
            if r != rank and m[r, col]:
                m[r] = add_t[m[r], mul_t[neg_t[m[r, col]], m[rank]]]
        rank += 1
    return rank
