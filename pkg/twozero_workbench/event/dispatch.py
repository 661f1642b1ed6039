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

from twozero_workbench.event.interfaces import Event, EventHandler

from threading import current_thread, Lock
from typing import Dict, List, Optional, Set, Tuple
import os


class EventBroadcaster:
    """
    Delivers scan events to outputs and aggregators.

    Calling ``EventBroadcaster()`` returns the broadcaster bound to the current process and
    thread, so subscriptions made while loading a job are visible to the code publishing its
    results. Events are only published from the thread running the scan's event loop; worker
    processes return results instead of publishing.
    """

    _lock = Lock()
    _instances = {}     # type: Dict[str, EventBroadcaster]

    @staticmethod
    def _current_id() -> str:
        return "{}_{}".format(os.getpid(), current_thread().name)

    def __new__(cls, instance: Optional[str] = None):
        """
        :param instance: instance identifier (defaults to the current process and thread)
        """
        key = instance or cls._current_id()
        with cls._lock:
            if key not in cls._instances:
                obj = super().__new__(cls)
                obj._subscribers = {}     # type: Dict[str, List[Tuple[Optional[Set[type]], EventHandler]]]
                cls._instances[key] = obj
            return cls._instances[key]

    @classmethod
    def teardown(cls, instance: Optional[str] = None):
        """
        Drop the broadcaster of the current thread (or `instance`) with all its subscriptions.
        """
        with cls._lock:
            cls._instances.pop(instance or cls._current_id(), None)

    def subscribe(self, event_name: str, handler: EventHandler, senders: Set[type] = None):
        """
        Subscribe `handler` to events named `event_name`. Handlers are notified in
        subscription order; subscribing the same pair twice has no effect.

        :param event_name: event name, e.g. 'onTupleAnalyzed'
        :param handler: event handler
        :param senders: sender classes to listen to (None for all)
        """
        pairs = self._subscribers.setdefault(event_name, [])
        if (senders, handler) not in pairs:
            pairs.append((senders, handler))

    async def publish(self, event_name: str, event: Event, sender: type):
        """
        Await every matching handler of `event_name` in subscription order.

        :param event_name: event name
        :param event: event to publish
        :param sender: class of the publishing object
        """
        for senders, handler in self._subscribers.get(event_name, []):
            if senders is None or sender in senders:
                await handler.handle(event_name, event, sender)
