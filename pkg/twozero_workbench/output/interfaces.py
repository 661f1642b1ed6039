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

from twozero_workbench.conf.interfaces import Configurable

from abc import ABCMeta, abstractmethod
from typing import Any, Dict


class Output(Configurable, metaclass=ABCMeta):
    """
    Base class for scan output handlers.
    """

    @abstractmethod
    async def save(self):
        """Flush and close everything written so far."""
        pass

    @abstractmethod
    def reset(self):
        """Reset output and clear all variable data"""
        pass


class Aggregator(Output, metaclass=ABCMeta):
    """
    Base class for aggregating scan records into a summary.
    """

    def __init__(self, meta_data: Dict[str, Any] = None):
        self._initial_meta_data = meta_data if meta_data is not None else {}
        self._meta_data = dict(self._initial_meta_data)

    @abstractmethod
    def add_record(self, record: Any):
        """
        Add a scan record to the aggregation.

        :param record: analyzed tuple record
        """
        pass

    @abstractmethod
    def get_summary(self) -> Dict[str, Any]:
        """
        :return: JSON-ready summary of all records added so far
        """
        pass

    async def save(self):
        pass

    def reset(self):
        self.__init__(self._initial_meta_data)

    @property
    def meta_data(self) -> Dict[str, Any]:
        """Get scan meta data"""
        return self._meta_data

    @meta_data.setter
    def meta_data(self, meta_data: Dict[str, Any]):
        """Add scan meta data"""
        self._meta_data.update(meta_data)
