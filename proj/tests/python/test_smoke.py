# Copyright 2026 The loopfix Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import pathlib

import pytest

import loopfix

ROOT = pathlib.Path(__file__).resolve().parents[2]
CORPUS = ROOT / "corpus"

FLAG_PAIRS = """\
@input sum int sum
@input i int i
@input more bool more
sum=0 i=0 more=true -> true
sum=1 i=1 more=true -> true
sum=3 i=2 more=false -> false
"""


def read(name):
    return (CORPUS / name).read_text()


def test_pretty_print_round_trips():
    text = loopfix.pretty_print(read("comparison.lp"))
    assert loopfix.pretty_print(text) == text
    assert "while (true)" in text


def test_detect_reports_hanging_tests():
    report = loopfix.detect(read("countdown.lp"), max_iterations=1000)
    assert report["global_cap"] == 1000
    assert [e["test"] for e in report["hanging"]] == ["countdownFive"]


def test_mine_countdown():
    record = loopfix.mine(read("countdown.lp"))
    assert record["angelic_record"] == 5
    assert record["tests"][0]["chi"] == 5


def test_collect_returns_pairset_text():
    spec = loopfix.collect(read("comparison.lp"))
    assert spec["pairset"].startswith("@input")
    assert spec["context_items"] > 0


def test_synthesize_flag_guard():
    result = loopfix.synthesize(FLAG_PAIRS)
    assert result["guard"] == "more"
    assert result["smt_formulations"] == 1
    assert result["smt_components"] == 0


def test_repair_comparison():
    out = loopfix.repair(read("comparison.lp"), file_name="comparison.lp")
    (patch,) = out["patches"]
    assert patch["patched_guard"] == "len(a) > i"
    assert patch["smt_formulations"] == 2
    assert out["validation"]["all_tests_pass"]
    assert "while (len(a) > i)" in out["patched_source"]
    assert "--- a/comparison.lp" in patch["diff"]


def test_errors_carry_code_and_exit_status():
    with pytest.raises(loopfix.LoopfixError) as info:
        loopfix.repair(read("healthy.lp"))
    assert info.value.code == "NoInfiniteLoopDetected"
    assert info.value.exit_code == 10
    with pytest.raises(loopfix.LoopfixError) as info:
        loopfix.pretty_print("fn f( {")
    assert info.value.exit_code == 3


def test_corpus_passes():
    report = loopfix.run_corpus(str(CORPUS / "manifest.json"))
    assert report["passed"] == report["total"] == 10
