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

"""Repairs infinite loops in programs of a small imperative language."""

import json as _json

from . import _core
from ._core import DEFAULT_GLOBAL_CAP, MAX_STAGE, LoopfixError

__all__ = [
    "DEFAULT_GLOBAL_CAP",
    "MAX_STAGE",
    "LoopfixError",
    "collect",
    "detect",
    "instrument",
    "mine",
    "pretty_print",
    "repair",
    "run_corpus",
    "synthesize",
]

pretty_print = _core.pretty_print
instrument = _core.instrument


def detect(source, **options):
    """Hanging tests of `source` as a dict."""
    return _json.loads(_core.detect(source, **options))


def mine(source, **options):
    """Angelic records and idempotence of the first hanging loop."""
    return _json.loads(_core.mine(source, **options))


def collect(source, **options):
    """The specification of the first hanging loop; `pairset` holds its text."""
    return _json.loads(_core.collect(source, **options))


def synthesize(pairs, **options):
    """A guard consistent with a PairSet document."""
    return _json.loads(_core.synthesize(pairs, **options))


def repair(source, **options):
    """Repairs every hanging loop; `patched_source` holds the result."""
    return _json.loads(_core.repair(source, **options))


def run_corpus(manifest, **options):
    """Runs a corpus manifest and returns the per-case report."""
    return _json.loads(_core.run_corpus(manifest, **options))
