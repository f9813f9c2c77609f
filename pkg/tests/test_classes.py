#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright Sensors & Signals LLC https://www.snstac.com
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""SISLINK Class Tests."""

import asyncio

import networkx as nx
import pytest

from sympy import Rational

from sislink.classes import (
    AbelianGroupStructure,
    BatchWorker,
    CheckResult,
    MultiplicitySequence,
    PlumbingGraph,
    TableRow,
    ValidationError,
)


__author__ = "Greg Albrecht <oss@undef.net>"
__copyright__ = "Copyright Sensors & Signals LLC https://www.snstac.com"
__license__ = "Apache License, Version 2.0"


def _fail():
    raise ValidationError("no")


@pytest.mark.asyncio
async def test_batch_worker():
    """Test that a worker stores results and exceptions by index."""
    queue: asyncio.Queue = asyncio.Queue()
    results: dict = {}
    queue.put_nowait((0, pow, (3, 2)))
    queue.put_nowait((1, _fail, ()))
    queue.put_nowait((2, sorted, ([3, 1, 2],)))
    worker = BatchWorker(queue, {}, results)
    task = asyncio.ensure_future(worker.run())
    await queue.join()
    task.cancel()
    await asyncio.gather(task, return_exceptions=True)
    assert results[0] == 9
    assert isinstance(results[1], ValidationError)
    assert results[2] == [1, 2, 3]


@pytest.mark.asyncio
async def test_batch_worker_handle_data():
    """Test a single job with `handle_data()`."""
    results: dict = {}
    worker = BatchWorker(asyncio.Queue(), {"WORKERS": 1}, results)
    await worker.handle_data((5, divmod, (17, 5)))
    assert results == {5: (3, 2)}


def test_multiplicity_sequence():
    """Test expansion and text form of a sequence."""
    seq = MultiplicitySequence(((4, 2), (2, 3)))
    assert seq.expanded == (4, 4, 2, 2, 2, 1, 1)
    assert seq.multiplicity == 4
    assert str(seq) == "[4_2,2_3]"
    with pytest.raises(ValidationError):
        MultiplicitySequence.from_expanded([1, 1])


def test_plumbing_graph_chain():
    """Test chains, valences and node detection."""
    graph = PlumbingGraph.chain([-2, -3, -4], start=5)
    assert graph.vertices == [5, 6, 7]
    assert graph.edges == [(5, 6), (6, 7)]
    assert graph.valence(6) == 2
    assert graph.nodes() == []
    assert 7 in graph and 8 not in graph
    assert repr(graph) == "PlumbingGraph([5:-2, 6:-3, 7:-4], edges=[(5, 6), (6, 7)])"


def test_plumbing_graph_frozen():
    """Test that the wrapped graph cannot be modified in place."""
    graph = PlumbingGraph.chain([-2, -2])
    with pytest.raises(nx.NetworkXError):
        graph.graph.add_node(9)
    copy = graph.mutable_copy()
    copy.add_node(9, euler=-2, genus=0)
    assert len(graph) == 2


def test_abelian_group():
    """Test order and text form of abelian groups."""
    assert AbelianGroupStructure((2, 6)).order == 12
    assert str(AbelianGroupStructure((2, 6))) == "Z_2 + Z_6"
    assert AbelianGroupStructure((0,)).order == 0
    assert str(AbelianGroupStructure((3, 0))) == "Z_3 + Z"
    assert AbelianGroupStructure(()).is_trivial


def test_table_row_verdict():
    """Test verdict strings."""
    assert TableRow("C1", "[4]", True, Rational(10), 10).verdict == "True"
    assert TableRow("C4", "[3]", False, Rational(8), 10).verdict == "False (8)"
    assert TableRow("X", "[3]", False, Rational(7, 2), 1).verdict == "False (7/2)"


def test_check_result():
    """Test `CheckResult.passed`."""
    assert CheckResult("a", "det", [5], [5]).passed
    assert not CheckResult("a", "det", 5, 4).passed
