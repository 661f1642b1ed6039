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

from twozero_workbench.event.events import Event, ScanFinishedEvent, TupleAnalyzedEvent, TupleSkippedEvent
from twozero_workbench.event.interfaces import EventHandler
from twozero_workbench.output.interfaces import Aggregator
from twozero_workbench.verify.analysis import ScanRecord

from collections import Counter, OrderedDict
from typing import Any, Dict


class ScanSummaryAggregator(EventHandler, Aggregator):
    """
    Count conforming tuples, closed-form agreements and discrepancies over a scan.
    ``discrepancy_count`` counts B2 closed-form mismatches; ``discrepancies`` tallies every code.

    Handles events:

    * `onTupleAnalyzed`: [type TupleAnalyzedEvent] adds the record
    * `onTupleSkipped`:  [type TupleSkippedEvent] counts the skipped tuple
    * `onScanFinished`:  [type ScanFinishedEvent] freezes the summary
    """

    def __init__(self, meta_data: Dict[str, Any] = None):
        super().__init__(meta_data)
        self._tuples = 0
        self._conforming = 0
        self._b2_agreements = 0
        self._k_one = 0
        self._skipped = 0
        self._discrepancies = Counter()
        self._finished = False

    async def handle(self, name: str, event: Event, sender: type):
        if isinstance(event, TupleSkippedEvent):
            self._skipped += 1
        elif isinstance(event, TupleAnalyzedEvent):
            self.add_record(event.record)
        elif isinstance(event, ScanFinishedEvent):
            self._finished = True
        else:
            raise RuntimeError("Unsupported event type {}".format(event.__class__.__name__))

    def add_record(self, record: ScanRecord):
        self._tuples += 1
        self._conforming += int(record.conforming)
        self._b2_agreements += int(record.paper_b2_agrees)
        self._k_one += int(record.k_one)
        self._discrepancies.update(record.discrepancies)

    @property
    def finished(self) -> bool:
        return self._finished

    def get_summary(self) -> Dict[str, Any]:
        summary = OrderedDict([
            ("tuples", self._tuples),
            ("theorem_conforming", self._conforming),
            ("b2_agreements", self._b2_agreements),
            ("discrepancy_count", self._discrepancies["b2_formula"]),
            ("records_written", self._meta_data.get("records_written", self._tuples)),
            ("k_one", self._k_one),
            ("skipped", self._skipped),
            ("discrepancies", OrderedDict(sorted(self._discrepancies.items()))),
        ])
        return summary
