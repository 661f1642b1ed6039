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

from twozero_workbench.conf.interfaces import ConfigLoader, Configurable
from twozero_workbench.event.dispatch import EventBroadcaster
from twozero_workbench.event.interfaces import EventHandler
from twozero_workbench.output.interfaces import Output, Aggregator

from abc import abstractmethod, ABCMeta
from importlib import import_module
from typing import Any, Dict, List, Optional

import os


class JobExecutor(metaclass=ABCMeta):
    """
    Base class for jobs whose results are delivered to event-driven sinks.

    Sinks are the outputs and aggregators listed under ``job.outputs`` and ``job.aggregators``.
    Each list entry names a class (relative to the package or fully qualified), optional
    constructor ``parameters``, the ``events`` it listens to and an optional ``enabled_by``
    switch. The switch names another config option: a false value skips the sink, a string
    value becomes its ``path`` property.
    """

    def __init__(self):
        self._outputs = []          # type: List[Output]
        self._aggregators = []      # type: List[Aggregator]
        self._config = None         # type: ConfigLoader

    @property
    def outputs(self) -> List[Output]:
        return self._outputs

    @property
    def aggregators(self) -> List[Aggregator]:
        return self._aggregators

    @staticmethod
    def _resolve_class(name: str) -> type:
        mod_path, _, cls_name = name.rpartition(".")
        try:
            module = import_module(mod_path)
        except ModuleNotFoundError:
            module = import_module("twozero_workbench." + mod_path)
        return getattr(module, cls_name)

    def _create_sink(self, entry: Dict[str, Any], sink_type: type) -> Optional[Configurable]:
        """
        Instantiate and configure one sink entry.

        :param entry: sink entry of the job configuration
        :param sink_type: required base class
        :return: configured sink or None if its switch is off
        :raise ValueError: if the class is not a `sink_type`
        """
        props = {}
        switch = entry.get("enabled_by")
        if switch:
            value = self._config.get(switch)
            if not value:
                return None
            if isinstance(value, str):
                props["path"] = value
        props.update(entry.get("parameters") or {})

        sink = self._resolve_class(entry["name"])()
        if not isinstance(sink, sink_type):
            raise ValueError("'{}' is not a subclass of {}".format(entry["name"], sink_type.__name__))

        for name, value in props.items():
            if not sink.has_property(name):
                continue
            if isinstance(value, str) and sink.is_path_property(name):
                value = os.path.abspath(value)
            sink.set_property(name, value)

        return sink

    def _subscribe(self, sink: EventHandler, events: List[Dict[str, Any]]):
        """
        Subscribe a sink to its events. An event entry may restrict senders by class name.
        """
        if events and not isinstance(sink, EventHandler):
            raise ValueError("'{}' cannot handle events".format(sink.__class__.__name__))

        for event in events:
            senders = event.get("senders")
            if isinstance(senders, list):
                senders = {self._resolve_class(s) if isinstance(s, str) else s for s in senders}
            else:
                senders = None
            EventBroadcaster().subscribe(event["name"], sink, senders)

    def _load_sinks(self, entries: List[Dict[str, Any]], sink_type: type) -> List[Any]:
        sinks = []
        for entry in entries or []:
            sink = self._create_sink(entry, sink_type)
            if sink is None:
                continue
            self._subscribe(sink, entry.get("events") or [])
            sinks.append(sink)
        return sinks

    def _load_outputs(self, entries: List[Dict[str, Any]]):
        self._outputs.extend(self._load_sinks(entries, Output))

    def _load_aggregators(self, entries: List[Dict[str, Any]]):
        self._aggregators.extend(self._load_sinks(entries, Aggregator))

    @abstractmethod
    async def run(self, conf: ConfigLoader) -> Dict[str, Any]:
        """
        Execute the job.

        :param conf: job configuration
        :return: job summary
        :raise SinkError: if results could not be delivered (the summary is attached)
        """
        pass
