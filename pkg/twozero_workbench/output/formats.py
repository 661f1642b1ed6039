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

from twozero_workbench.conf.interfaces import path_property
from twozero_workbench.event.events import Event, ProgressEvent, TupleAnalyzedEvent, TupleSkippedEvent
from twozero_workbench.event.interfaces import EventHandler
from twozero_workbench.output.interfaces import Output
from twozero_workbench.verify.records import CSV_COLUMNS, csv_row, dumps

import csv
import sys
from typing import Any, List, Optional, TextIO

from tqdm import tqdm


class FileOutput(EventHandler, Output):
    """
    Base class for outputs streaming scan records into a file.

    Write failures are reported on stderr and counted; the scan continues.
    """

    def __init__(self, path: Optional[str] = None):
        self._path = path
        self._file = None       # type: Optional[TextIO]
        self._written = 0
        self._failures = 0

    @path_property
    def path(self) -> Optional[str]:
        """Get output file path"""
        return self._path

    @path.setter
    def path(self, path: str):
        """Set output file path"""
        self._path = path

    @property
    def records_written(self) -> int:
        """Number of records successfully written"""
        return self._written

    @property
    def failures(self) -> int:
        """Number of records that could not be written"""
        return self._failures

    def _open(self) -> bool:
        if self._file is not None:
            return True
        if self._path is None:
            raise RuntimeError("{} has no output path".format(self.__class__.__name__))
        try:
            self._file = open(self._path, "w", encoding="utf-8", newline="")
            self._write_header()
        except OSError as e:
            print("WARNING: cannot open '{}': {}".format(self._path, e), file=sys.stderr)
            self._file = None
            return False
        return True

    def _write_header(self):
        pass

    def _emit(self, event: TupleAnalyzedEvent):
        raise NotImplementedError

    async def handle(self, name: str, event: Event, sender: type):
        """
        Accepts events:
            - TupleAnalyzedEvent (skipped tuples are ignored)
        """
        if not isinstance(event, TupleAnalyzedEvent):
            raise RuntimeError("event must be of type TupleAnalyzedEvent")
        if isinstance(event, TupleSkippedEvent):
            return

        if not self._open():
            self._failures += 1
            return
        try:
            self._emit(event)
            self._file.flush()
            self._written += 1
        except OSError as e:
            print("WARNING: failed to write record {} to '{}': {}".format(
                event.serial + 1, self._path, e), file=sys.stderr)
            self._failures += 1

    async def save(self):
        self._open()
        if self._file is not None:
            try:
                self._file.close()
            except OSError as e:
                print("WARNING: failed to close '{}': {}".format(self._path, e), file=sys.stderr)
                self._failures += 1
            self._file = None

    def reset(self):
        self.__init__(self._path)


class ScanRecordWriter(FileOutput):
    """
    Stream one JSON report per analyzed tuple into a JSON lines file.
    """

    def _emit(self, event: TupleAnalyzedEvent):
        self._file.write(dumps(event.report) + "\n")


class CsvSummaryWriter(FileOutput):
    """
    Write one summary row per analyzed tuple into a CSV file.
    """

    def _write_header(self):
        self._writer = csv.writer(self._file, lineterminator="\n")
        self._writer.writerow(CSV_COLUMNS)

    def _emit(self, event: TupleAnalyzedEvent):
        self._writer.writerow(self._format_row(csv_row(event.record)))

    @staticmethod
    def _format_row(row: List[Any]) -> List[str]:
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return str(v)

        return [fmt(v) for v in row]


class ProgressPrinter(EventHandler, Output):
    """
    Print progress events to stderr.
    """

    def __init__(self, text: str = None):
        super().__init__()
        self._text = text

    @property
    def text(self) -> str:
        """Get custom display text"""
        return self._text

    @text.setter
    def text(self, text: str):
        """
        Set custom display text (overrides the native event text).
        You can use the placeholders {0}, {1} and {2} for current event number, total number
        of events and progress percentage. The usual python format string parameters are accepted.
        """
        self._text = text

    async def handle(self, name: str, event: Event, sender: type):
        """
        Accepts events:
            - ProgressEvent
        """
        if not isinstance(event, ProgressEvent):
            raise RuntimeError("event must be of type ProgressEvent")

        if self._text is None:
            print(event.text, file=sys.stderr)
        else:
            total = event.events_total if event.events_total is not None else "unknown"
            percent_done = event.percent_done if event.percent_done is not None else "unknown"
            print(self._text.format(event.serial + 1, total, percent_done), file=sys.stderr)

    async def save(self):
        pass

    def reset(self):
        pass


class ProgressBar(ProgressPrinter):
    """
    Print progress as a progress bar to stderr.
    """

    def __init__(self, text: str = None, unit: str = None):
        super().__init__(text)
        self._unit = unit
        self._bars = dict()

    @property
    def unit(self) -> str:
        """Get custom item unit"""
        return self._unit

    @unit.setter
    def unit(self, unit: str):
        """
        Set custom item unit.
        """
        self._unit = unit

    async def handle(self, name: str, event: Event, sender: type):
        """
        Accepts events:
            - ProgressEvent
        """
        if not isinstance(event, ProgressEvent):
            raise RuntimeError("event must be of type ProgressEvent")

        if event.group_id not in self._bars:
            self._bars[event.group_id] = tqdm(leave=False, file=sys.stderr,
                                              unit=self.unit if self.unit else event.unit,
                                              desc=self._text if self._text else event.generic_text)

        bar = self._bars[event.group_id]
        if event.events_total:
            bar.total = event.events_total
        bar.n = event.serial + 1
        bar.update(0)

    async def save(self):
        for bar in self._bars.values():
            bar.close()
        self._bars.clear()

    def reset(self):
        self._bars = dict()
