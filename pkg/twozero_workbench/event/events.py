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

from twozero_workbench.event.interfaces import Event
from twozero_workbench.output.interfaces import Aggregator
from twozero_workbench.params.family import TwoZeroParams

from typing import Any, Dict, List, Optional


class ProgressEvent(Event):
    """
    Event for indicating progress of an operation with a fixed number of steps to be performed.
    """

    def __init__(self, group_id: str, serial: int, events_total: Optional[int] = None):
        """
        :param group_id: event group ID token
        :param serial: event serial number
        :param events_total: total number of events that will be sent in this event group
        """
        super().__init__(group_id, serial)

        if events_total is not None and events_total < 1:
            raise AttributeError("events_total must be greater than 0")

        self._events_total = events_total

    @property
    def text(self) -> str:
        """Get user-readable textual representation of this event."""
        if self._events_total is None:
            return "Progress: {}".format(self.serial + 1)

        return "Progress: {}/{} ({:.2f}%)".format(self.serial + 1, self.events_total, self.percent_done)

    @property
    def generic_text(self) -> Optional[str]:
        """Generic progress description."""
        return None

    @property
    def unit(self) -> Optional[str]:
        """Progress item unit name."""
        return None

    @property
    def events_total(self) -> Optional[int]:
        """Get total number of events that will be sent in this event group."""
        return self._events_total

    @property
    def percent_done(self) -> Optional[float]:
        """Total progress in percent (None if total process is unknown)."""
        if self._events_total is None:
            return None

        return (float(self.serial + 1) / self.events_total) * 100.0

    @property
    def finished(self) -> bool:
        """True if all operations have finished."""
        return self._events_total is not None and self.serial + 1 >= self._events_total


class TupleAnalyzedEvent(ProgressEvent):
    """
    Event fired after a parameter tuple has been analyzed, in enumeration order.
    """

    def __init__(self, group_id: str, serial: int, tuples_total: Optional[int] = None,
                 params: Optional[TwoZeroParams] = None, record: Any = None, report: Optional[Dict[str, Any]] = None):
        """
        :param group_id: event group ID token
        :param serial: position of the tuple in enumeration order
        :param tuples_total: number of tuples in this scan
        :param params: analyzed tuple
        :param record: full :class:`ScanRecord`
        :param report: flat report projection of the record
        """
        super().__init__(group_id, serial, tuples_total)
        self._params = params
        self._record = record
        self._report = report

    @property
    def params(self) -> Optional[TwoZeroParams]:
        """Analyzed tuple"""
        return self._params

    @property
    def record(self):
        """Scan record of the tuple"""
        return self._record

    @property
    def report(self) -> Optional[Dict[str, Any]]:
        """Flat report projection of the record"""
        return self._report

    @property
    def text(self) -> str:
        if self.events_total is None:
            return "Analyzed tuple {}: {}".format(self.serial + 1, self._params)

        return "Analyzed tuple {} of {}: {}".format(self.serial + 1, self.events_total, self._params)

    @property
    def generic_text(self) -> Optional[str]:
        return "Analyzing tuples"

    @property
    def unit(self) -> Optional[str]:
        return "tuple(s)"


class TupleSkippedEvent(TupleAnalyzedEvent):
    """
    Event fired instead of :class:`TupleAnalyzedEvent` when a tuple could not be
    analyzed within the evaluation budget.
    """

    def __init__(self, group_id: str, serial: int, tuples_total: Optional[int] = None,
                 params: Optional[TwoZeroParams] = None, reason: str = ""):
        super().__init__(group_id, serial, tuples_total, params)
        self._reason = reason

    @property
    def reason(self) -> str:
        """Why the tuple was skipped"""
        return self._reason

    @property
    def text(self) -> str:
        return "Skipped tuple {}: {}".format(self._params, self._reason)


class ScanFinishedEvent(Event):
    """
    Event fired when a scan has finished, before outputs are closed.
    """

    def __init__(self, group_id: str, serial: int, aggregators: List[Aggregator]):
        """
        :param group_id: event group ID token
        :param serial: event serial number
        :param aggregators: list of scan aggregators
        """
        super().__init__(group_id, serial)
        self._aggregators = aggregators

    @property
    def aggregators(self) -> List[Aggregator]:
        """Get aggregators associated with this event"""
        return self._aggregators
