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
Exact weight distributions by exhaustive enumeration of the message space.
"""

from twozero_workbench.codes.trace_codes import CodeSpec
from twozero_workbench.gf.tower import ZERO
from twozero_workbench.util.errors import BudgetExceeded, InternalError
from twozero_workbench.util.util import resolve_workers, split_range

from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import sys
from typing import Any, Dict, List, Mapping, Optional

import numpy as np

DEFAULT_BUDGET = 2 ** 31


@dataclass(frozen=True)
class WeightDistribution:
    """
    Exact weight distribution of a linear code.

    ``counts`` maps each occurring weight to its number of words, zero word included.
    """

    length: int
    alphabet: int
    dimension: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts", OrderedDict(
            (int(w), int(c)) for w, c in sorted(self.counts.items()) if c))

    @property
    def weights(self) -> List[int]:
        """Sorted nonzero weights."""
        return [w for w in self.counts if w > 0]

    @property
    def num_weights(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def is_valid(self) -> bool:
        """Check count sum, zero word and weight range."""
        return (self.total == self.alphabet ** self.dimension
                and self.counts.get(0) == 1
                and all(0 <= w <= self.length for w in self.counts))

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ("n", self.length),
            ("q", self.alphabet),
            ("dim", self.dimension),
            ("counts", OrderedDict((str(w), c) for w, c in self.counts.items())),
        ])

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "WeightDistribution":
        return cls(length=int(data["n"]), alphabet=int(data["q"]), dimension=int(data["dim"]),
                   counts={int(w): int(c) for w, c in data["counts"].items()})


def enumeration_cost(spec: CodeSpec) -> int:
    """Number of coordinate evaluations for a full enumeration of `spec`."""
    return spec.length * spec.message_count


def _neg_logs(rows: np.ndarray, half: int, big_order: int) -> np.ndarray:
    return np.where(rows == ZERO, ZERO, (rows + half) % big_order)


def _count_chunk(spec: CodeSpec, start: int, stop: int) -> np.ndarray:
    """
    Weight histogram of the messages whose first component index lies in [start, stop).
    """
    tower = spec.tower
    first = spec.trace_rows(spec.strides[0], start, stop)
    if spec.msg_rank == 1:
        weights = np.count_nonzero(first != ZERO, axis=1)
        return np.bincount(weights, minlength=spec.length + 1)

    # coordinate vanishes iff Tr(u·x) = -Tr(v·y)
    half = tower.big_order // 2 if tower.p != 2 else 0
    neg_second = _neg_logs(spec.trace_rows(spec.strides[1]), half, tower.big_order).astype(np.int32)
    hist = np.zeros(spec.length + 1, dtype=np.int64)
    for row in first.astype(np.int32):
        weights = np.count_nonzero(neg_second != row[None, :], axis=1)
        hist += np.bincount(weights, minlength=spec.length + 1)
    return hist


def weight_distribution(spec: CodeSpec, budget: int = DEFAULT_BUDGET, force: bool = False,
                        workers: Optional[int] = 1, chunks: Optional[int] = None) -> WeightDistribution:
    """
    Compute the exact weight distribution of a code by enumerating every message.

    The first message component is partitioned into contiguous chunks, which are
    counted inline (``workers == 1``) or on a process pool and merged by addition.

    :param spec: code to enumerate
    :param budget: maximum number of coordinate evaluations
    :param force: enumerate even if the budget is exceeded
    :param workers: number of worker processes (None for one per CPU)
    :param chunks: number of chunks (default: four per worker)
    :return: exact distribution
    :raise BudgetExceeded: if the enumeration cost exceeds `budget` and `force` is not set
    """
    cost = enumeration_cost(spec)
    if cost > budget:
        if not force:
            raise BudgetExceeded(cost, budget)
        print("WARNING: enumerating {} ({} evaluations) beyond the budget of {}".format(
            spec.role, cost, budget), file=sys.stderr)

    workers = resolve_workers(workers)
    ranges = split_range(spec.tower.order, chunks if chunks else 4 * workers)

    if workers == 1 or len(ranges) == 1:
        partials = [_count_chunk(spec, start, stop) for start, stop in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_count_chunk, spec, start, stop) for start, stop in ranges]
            partials = [f.result() for f in futures]

    hist = np.sum(partials, axis=0)
    rank = spec.dimension()
    multiplicity = spec.alphabet ** (spec.nominal_dimension - rank)
    if np.any(hist % multiplicity):
        raise InternalError("Word multiplicities of {} are not uniform".format(spec.role))

    counts = {w: int(c) // multiplicity for w, c in enumerate(hist) if c}
    dist = WeightDistribution(length=spec.length, alphabet=spec.alphabet, dimension=rank, counts=counts)
    if not dist.is_valid():
        raise InternalError("Enumerated distribution of {} is inconsistent".format(spec.role))
    return dist
