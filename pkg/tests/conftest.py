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

from twozero_workbench.codes.trace_codes import CodeSpec
from twozero_workbench.gf.tower import build_tower
from twozero_workbench.params.family import derive

from collections import Counter
from itertools import product

import pytest


# Worked tuples (p, t, k, d, e, λ)
T1 = (3, 1, 2, 1, 2, 1)
T2 = (2, 2, 1, 1, 3, 1)
T3 = (5, 1, 1, 1, 2, 1)
# λ = 2 and k = 2: every word of C_d repeats a word of C'_d twice
T4 = (5, 1, 2, 2, 2, 2)


def params_and_tower(tup):
    params = derive(*tup)
    return params, build_tower(params.p, params.t, params.k)


@pytest.fixture(scope="session")
def t1():
    return params_and_tower(T1)


@pytest.fixture(scope="session")
def t2():
    return params_and_tower(T2)


@pytest.fixture(scope="session")
def t3():
    return params_and_tower(T3)


@pytest.fixture(scope="session")
def t4():
    return params_and_tower(T4)


@pytest.fixture(params=[T1, T2, T3, T4], ids=["T1", "T2", "T3", "T4"], scope="session")
def worked(request):
    return params_and_tower(request.param)


def brute_counts(spec: CodeSpec) -> Counter:
    """
    Weight counts over all messages, one codeword at a time (duplicates included).
    """
    tower = spec.tower
    counts = Counter()
    for msg in product(list(tower.elements()), repeat=spec.msg_rank):
        word = spec.codeword(*msg)
        counts[sum(1 for c in word if c)] += 1
    return counts


@pytest.fixture(scope="session")
def brute():
    return brute_counts
