# Copyright (C) 2017-2019 Janek Bevendorff, Webis Group
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

from twozero_workbench.conf.interfaces import ConfigLoader
from twozero_workbench.event.dispatch import EventBroadcaster
from twozero_workbench.event.events import ScanFinishedEvent, TupleAnalyzedEvent, TupleSkippedEvent
from twozero_workbench.job.interfaces import JobExecutor
from twozero_workbench.output.formats import FileOutput, ScanRecordWriter
from twozero_workbench.params.family import TwoZeroParams, enumerate_params
from twozero_workbench.util.errors import BudgetExceeded, SinkError
from twozero_workbench.util.util import clear_lru_caches, resolve_workers
from twozero_workbench.verify.analysis import analyze_tuple
from twozero_workbench.verify.records import to_report

from collections import deque, OrderedDict
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Any, Dict, List, Optional

import asyncio
import sys


class ScanExecutor(JobExecutor):
    """
    Scan executor.

    Enumerates every admissible tuple within the configured budgets (job.scan.*) and
    analyzes each of them, in worker processes if job.exec.workers > 1. At most
    job.exec.window tuples are in flight; results are awaited strictly in
    enumeration order so that outputs are identical for any worker count.

    Events published by this class:

    * `onTupleAnalyzed`: [type TupleAnalyzedEvent]
                         fired for every analyzed tuple, in enumeration order
    * `onTupleSkipped`:  [type TupleSkippedEvent]
                         fired for tuples whose enumeration exceeds the budget
    * `onScanFinished`:  [type ScanFinishedEvent]
                         fired when all tuples have been processed, before outputs are closed
    """

    def __init__(self):
        super().__init__()

    async def run(self, conf: ConfigLoader) -> Dict[str, Any]:
        self._config = conf
        executor = None     # type: Optional[Executor]
        try:
            self._load_outputs(conf.get("job.outputs"))
            self._load_aggregators(conf.get("job.aggregators"))

            tuples = list(enumerate_params(conf.get("job.scan.max_q"), conf.get("job.scan.max_msgs"),
                                           conf.get("job.scan.max_n")))
            group_id = TupleAnalyzedEvent.generate_group_id(
                ["{}={}".format(k, conf.get("job.scan." + k)) for k in ("max_q", "max_msgs", "max_n")])

            workers = resolve_workers(conf.get("job.exec.workers"))
            window = 1
            if workers > 1:
                executor = ProcessPoolExecutor(max_workers=workers)
                window = conf.get("job.exec.window") or 2 * workers

            await self._run_tuples(executor, tuples, group_id, window)

            await EventBroadcaster().publish("onScanFinished",
                                             ScanFinishedEvent(group_id, 0, self.aggregators), self.__class__)
            return await self._finish()
        finally:
            if executor is not None:
                executor.shutdown()
            EventBroadcaster.teardown()
            clear_lru_caches()

    async def _run_tuples(self, executor: Optional[Executor], tuples: List[TwoZeroParams], group_id: str,
                          window: int):
        """
        Analyze tuples with a bounded number of in-flight futures and publish results in order.

        :param executor: process pool (None to analyze in the event loop's thread)
        :param tuples: tuples in enumeration order
        :param group_id: event group ID
        :param window: maximum number of tuples in flight
        """
        loop = asyncio.get_event_loop()
        budget = self._config.get("job.budget.evaluations")
        force = self._config.get("job.budget.force")
        cap = self._config.get("field.size_cap")
        total = len(tuples) if tuples else None

        def submit(params: TwoZeroParams):
            if executor is None:
                fut = loop.create_future()
                try:
                    fut.set_result(analyze_tuple(params, budget, force, 1, cap))
                except BudgetExceeded as e:
                    fut.set_exception(e)
                return fut
            return loop.run_in_executor(executor, analyze_tuple, params, budget, force, 1, cap)

        pending = deque()
        upcoming = iter(enumerate(tuples))
        for serial, params in upcoming:
            pending.append((serial, params, submit(params)))
            if len(pending) >= window:
                break

        while pending:
            serial, params, fut = pending.popleft()
            try:
                record = await fut
            except BudgetExceeded as e:
                print("WARNING: skipping {}: {}".format(params, e), file=sys.stderr)
                event = TupleSkippedEvent(group_id, serial, total, params, str(e))
                await EventBroadcaster().publish("onTupleSkipped", event, self.__class__)
            else:
                event = TupleAnalyzedEvent(group_id, serial, total, params, record, to_report(record))
                await EventBroadcaster().publish("onTupleAnalyzed", event, self.__class__)

            for serial, params in upcoming:
                pending.append((serial, params, submit(params)))
                break

    async def _finish(self) -> Dict[str, Any]:
        written = sum(o.records_written for o in self.outputs if isinstance(o, ScanRecordWriter))
        for output in self.outputs:
            await output.save()

        summary = OrderedDict()
        for aggregator in self.aggregators:
            aggregator.meta_data = {"records_written": written}
            summary.update(aggregator.get_summary())
            await aggregator.save()

        failures = sum(o.failures for o in self.outputs if isinstance(o, FileOutput))
        if failures:
            error = SinkError("{} record(s) could not be written".format(failures))
            error.summary = summary
            raise error

        return summary
