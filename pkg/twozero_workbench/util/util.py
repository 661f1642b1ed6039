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

import asyncio
from concurrent.futures import ThreadPoolExecutor
import functools
import os

__cached_functions = []


def lru_cache(maxsize: int = 128, typed: bool = False):
    """
    functools.lru_cache that registers the decorated function, so that
    :func:`clear_lru_caches` can drop all cached tables at once.
    """
    def decorator(func):
        func = functools.lru_cache(maxsize=maxsize, typed=typed)(func)
        __cached_functions.append(func)
        return func

    return decorator


def clear_lru_caches():
    """
    Clear all registered LRU caches. The functions stay registered.
    """
    for func in __cached_functions:
        func.cache_clear()


def get_base_path() -> str:
    """
    Get package base path (the directory containing ``etc/``).

    :return: absolute path to the package directory
    """
    return os.path.realpath(os.path.join(os.path.dirname(__file__), '..'))


def resolve_workers(workers) -> int:
    """
    Resolve a configured worker count. ``None`` or values below 1 mean one worker per CPU.

    :param workers: configured worker count
    :return: effective worker count (at least 1)
    """
    if workers is None or int(workers) < 1:
        return os.cpu_count() or 1
    return int(workers)


def split_range(total: int, parts: int):
    """
    Partition ``range(total)`` into at most `parts` contiguous, non-empty chunks.

    :param total: number of items
    :param parts: requested number of chunks
    :return: list of (start, stop) tuples in ascending order
    """
    parts = max(1, min(parts, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]


class SoftKeyboardInterrupt(Exception):
    """
    Replacement for KeyboardInterrupt that inherits from :class:: Exception instead of
    :class:: BaseException, to avoid uncatchable stack traces when a :class:: KeyboardInterrupt
    happens within a coroutine.
    See: https://github.com/python/asyncio/issues/341
    """
    pass


async def base_coroutine(cr):
    """
    Base coroutine that wraps and waits another coroutine and catches KeyboardInterrupts.
    Caught keyboardInterrupts are re-raised as SoftKeyboardInterrupts.

    :param cr: coroutine to wrap
    :return: Return value of the wrapped coroutine
    """
    try:
        return await cr
    except KeyboardInterrupt as k:
        raise SoftKeyboardInterrupt() from k


def run_in_event_loop(coroutine):
    """
    Wrap and run coroutine in a fresh event loop.

    :param coroutine: coroutine to run in the event loop
    :return: return value of the coroutine
    """
    loop = asyncio.new_event_loop()
    asyncio.set_event_loop(loop)
    loop.set_default_executor(ThreadPoolExecutor(max_workers=os.cpu_count()))
    try:
        return loop.run_until_complete(base_coroutine(coroutine))
    finally:
        loop.run_until_complete(loop.shutdown_asyncgens())
        asyncio.set_event_loop(None)
        loop.close()
