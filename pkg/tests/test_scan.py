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

from twozero_workbench.conf.loader import JobConfigLoader
from twozero_workbench.event.dispatch import EventBroadcaster
from twozero_workbench.job.executors import ScanExecutor
from twozero_workbench.output.formats import CsvSummaryWriter, ScanRecordWriter
from twozero_workbench.output.interfaces import Aggregator, Output
from twozero_workbench.util.errors import SinkError
from twozero_workbench.util.util import run_in_event_loop

import csv
import json
import os

import pytest


def scan(tmp_path, **options):
    records = str(tmp_path / "records.jsonl")
    cfg = {
        "job.output.records": records,
        "job.output.summary_csv": str(tmp_path / "summary.csv"),
        "job.output.progress": False,
    }
    cfg.update({"job." + k: v for k, v in options.items()})
    summary = run_in_event_loop(ScanExecutor().run(JobConfigLoader(cfg)))
    with open(records, encoding="utf-8") as f:
        lines = [json.loads(line) for line in f]
    return summary, lines


class TestScan:
    def test_ternary_only(self, tmp_path):
        summary, lines = scan(tmp_path, **{"scan.max_q": 3, "scan.max_msgs": 728, "scan.max_n": 1000})
        assert summary["tuples"] == 1
        assert summary["theorem_conforming"] == 1
        assert summary["b2_agreements"] == 0
        assert summary["discrepancy_count"] == 1
        assert summary["discrepancies"] == {"b2_formula": 1}
        assert summary["records_written"] == 1
        assert summary["skipped"] == 0
        assert [(r["q"], r["k"], r["n"]) for r in lines] == [(3, 2, 8)]

        with open(tmp_path / "summary.csv", encoding="utf-8") as f:
            rows = list(csv.reader(f))
        assert rows[0][:6] == ["q", "k", "d", "e", "lambda", "n"]
        assert rows[1] == ["3", "2", "1", "2", "1", "8", "4", "8", "2", "false", "true", "true"]

    def test_empty_space(self, tmp_path):
        summary, lines = scan(tmp_path, **{"scan.max_q": 2, "scan.max_msgs": 10 ** 6, "scan.max_n": 1000})
        assert lines == []
        assert summary["tuples"] == 0 and summary["discrepancy_count"] == 0
        assert os.path.exists(tmp_path / "records.jsonl")

    def test_small_counterexamples(self, tmp_path):
        summary, lines = scan(tmp_path, **{"scan.max_q": 5, "scan.max_msgs": 1000, "scan.max_n": 100})
        assert len(lines) == summary["tuples"] == summary["records_written"]
        keys = [(r["q"], r["k"], r["d"], r["e"], r["lambda"]) for r in lines]
        assert keys == sorted(keys)

        by_key = dict(zip(keys, lines))
        t2, t3 = by_key[(4, 1, 1, 3, 1)], by_key[(5, 1, 1, 2, 1)]
        assert not t2["thm_nonprojective"] and not t2["thm_not_two_weight"]
        assert t2["wolfmann"] == "ok"
        assert t3["thm_nonprojective"] and not t3["thm_not_two_weight"]
        assert summary["theorem_conforming"] <= summary["tuples"] - 2
        assert all(r["moments_ok"] and r["transform_ok"] for r in lines)

        assert summary["discrepancy_count"] == sum("b2_formula" in r["discrepancies"] for r in lines)
        assert summary["discrepancy_count"] == summary["discrepancies"].get("b2_formula", 0)
        assert sum(summary["discrepancies"].values()) == sum(len(r["discrepancies"]) for r in lines)

    def test_budget_skips(self, tmp_path, capsys):
        summary, lines = scan(tmp_path, **{"scan.max_q": 3, "scan.max_msgs": 728, "scan.max_n": 1000,
                                           "budget.evaluations": 100})
        assert lines == []
        assert summary["skipped"] == 1 and summary["tuples"] == 0
        assert "WARNING: skipping" in capsys.readouterr().err

    def test_worker_count_does_not_change_output(self, tmp_path):
        space = {"scan.max_q": 4, "scan.max_msgs": 300, "scan.max_n": 100}
        (tmp_path / "one").mkdir()
        (tmp_path / "two").mkdir()
        _, single = scan(tmp_path / "one", **space)
        _, pooled = scan(tmp_path / "two", **dict(space, **{"exec.workers": 2, "exec.window": 3}))
        assert single == pooled

    def test_unwritable_sink(self, tmp_path, capsys):
        cfg = JobConfigLoader({
            "job.output.records": str(tmp_path / "missing" / "records.jsonl"),
            "job.output.progress": False,
            "job.scan.max_q": 3, "job.scan.max_msgs": 728, "job.scan.max_n": 1000,
        })
        with pytest.raises(SinkError) as exc:
            run_in_event_loop(ScanExecutor().run(cfg))
        assert exc.value.summary["tuples"] == 1
        assert "WARNING" in capsys.readouterr().err


class TestConfig:
    def test_defaults(self):
        conf = JobConfigLoader()
        assert conf.get("job.budget.evaluations") == 2 ** 31
        assert conf.get("job.exec.workers") == 1
        assert conf.get("field.size_cap") == 2 ** 22

    def test_defaults_are_not_shared(self):
        conf = JobConfigLoader()
        conf.set_option("job.scan.max_q", 3)
        assert JobConfigLoader().get("job.scan.max_q") == 9

    def test_missing_option(self):
        with pytest.raises(KeyError):
            JobConfigLoader().get("job.nope")

    def test_disabled_outputs_are_not_created(self, tmp_path):
        executor = ScanExecutor()
        conf = JobConfigLoader({"job.output.records": str(tmp_path / "r.jsonl"), "job.output.progress": False})
        executor._config = conf
        executor._load_outputs(conf.get("job.outputs"))
        try:
            assert [type(o) for o in executor.outputs] == [ScanRecordWriter]
            assert not any(isinstance(o, CsvSummaryWriter) for o in executor.outputs)
        finally:
            EventBroadcaster.teardown()

    def test_sink_properties(self):
        writer = ScanRecordWriter()
        assert writer.has_property("path") and writer.is_path_property("path")
        assert writer.has_property("records_written") and not writer.is_path_property("records_written")
        assert not writer.has_property("nope")
        with pytest.raises(KeyError):
            writer.set_property("nope", 1)

        executor = ScanExecutor()
        executor._config = JobConfigLoader()
        sink = executor._create_sink({"name": "output.formats.ScanRecordWriter",
                                      "parameters": {"path": "records.jsonl", "nope": 1}}, Output)
        assert sink.path == os.path.abspath("records.jsonl")
        with pytest.raises(ValueError):
            executor._create_sink({"name": "output.formats.ScanRecordWriter"}, Aggregator)


@pytest.mark.slow
def test_moment_suite(tmp_path):
    summary, lines = scan(tmp_path, **{"scan.max_q": 9, "scan.max_msgs": 2 ** 24, "scan.max_n": 4096,
                                       "exec.workers": None})
    assert summary["skipped"] == 0
    for r in lines:
        assert r["moments_ok"], r
        assert r["transform_ok"], r
        assert not {"b2_corrected", "c2_corrected"} & set(r["discrepancies"]), r
