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
from twozero_workbench.util.util import get_base_path

from copy import deepcopy
from typing import Any, Dict, Union
import os
import yaml


class YamlLoader(ConfigLoader):
    """
    Parser for YAML config files.
    """

    def __init__(self):
        self._config = {}

    def get(self, name: str = None) -> Any:
        """
        Get configuration option. Use dot notation to reference hierarchies of options.

        :param name: dot-separated config option path, None to get full config dict
        :return: option value
        :raise: KeyError if option not found
        """
        if name is None:
            return self._config

        cfg = self._config
        for k in name.split("."):
            if type(cfg) is not dict or k not in cfg:
                raise KeyError("Missing config option '{}'".format(name))

            cfg = cfg[k]

        return cfg

    def load(self, cfg: Union[str, Dict[str, Any]]):
        if type(cfg) is str:
            with open(cfg, "r", encoding="utf-8") as f:
                cfg = yaml.safe_load(f)

        if type(cfg) is not dict:
            raise RuntimeError("Invalid configuration")

        self._config = self._parse_dot_notation(cfg)

    def set_option(self, name: str, value: Any):
        """
        Set an option, creating intermediate levels as needed.

        :param name: dot-separated config option path
        :param value: option value
        """
        keys = name.split(".")
        cfg = self._config
        for k in keys[:-1]:
            cfg = cfg.setdefault(k, {})

        cfg[keys[-1]] = value

    def _parse_dot_notation(self, cfg: Dict[str, Any]) -> Dict[str, Any]:
        parsed_cfg = {}
        for i in cfg:
            if "." not in i:
                if type(cfg[i]) is not dict:
                    parsed_cfg[i] = cfg[i]
                else:
                    parsed_cfg.setdefault(i, {}).update(self._parse_dot_notation(cfg[i]))
                continue

            keys = i.split(".", 1)
            if keys[0] not in parsed_cfg:
                parsed_cfg[keys[0]] = {}
            parsed_cfg[keys[0]].update(self._parse_dot_notation({keys[1]: cfg[i]}))
        return parsed_cfg


class JobConfigLoader(YamlLoader):
    """
    Workbench configuration loader, pre-populated with the packaged defaults.
    """

    _default_config = None

    def __init__(self, cfg: Dict[str, Any] = None, defaults_file: str = None):
        """
        :param cfg: optional configuration dict applied on top of the defaults
        :param defaults_file: file from which to load defaults (default: etc/defaults.yml)
        """
        super().__init__()

        if defaults_file is not None or JobConfigLoader._default_config is None:
            defaults = YamlLoader()
            if defaults_file is None:
                defaults_file = "defaults.yml"
            if not os.path.isabs(defaults_file):
                defaults_file = os.path.join(get_base_path(), "etc", defaults_file)
            defaults.load(defaults_file)
            JobConfigLoader._default_config = defaults

        self._config = deepcopy(JobConfigLoader._default_config.get())

        if cfg is not None:
            self.update(cfg)

    def update(self, cfg: Dict[str, Any]):
        """
        Merge a (possibly dot-notated) dict into the current configuration.

        :param cfg: update dict
        """
        self._merge(self._config, self._parse_dot_notation(cfg))

    def _merge(self, target: Dict[str, Any], source: Dict[str, Any]):
        for k, v in source.items():
            if type(v) is dict and type(target.get(k)) is dict:
                self._merge(target[k], v)
            else:
                target[k] = v
