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

"""SISLINK Splice Diagram Tests."""

import json
import random

import pytest

from sislink.branch import parse_sequence_list
from sislink.classes import (
    NotNegativeDefiniteError,
    PlumbingGraph,
    SISInput,
    UnsupportedGraphError,
)
from sislink.data_functions import get_fixtures
from sislink.plumbing import (
    blow_up_edge,
    blow_up_vertex,
    is_negative_definite,
    star_shape,
    subgraph_determinant,
)
from sislink.splice import (
    in_semigroup,
    semigroup_condition,
    sis_semigroup_scan,
    splice_diagram,
    verdict_to_dict,
    verdict_to_json,
)
from sislink.superisolated import build_graph, catalog


__author__ = "Greg Albrecht <oss@undef.net>"
__copyright__ = "Copyright Sensors & Signals LLC https://www.snstac.com"
__license__ = "Apache License, Version 2.0"


@pytest.fixture
def fixtures():
    """Bundled graph fixtures."""
    return get_fixtures()


@pytest.fixture
def steiner():
    """The tricuspidal quartic."""
    return SISInput(4, tuple(parse_sequence_list("[2],[2],[2]")), "C4")


def test_in_semigroup():
    """Test membership in numerical semigroups."""
    assert in_semigroup(0, ())
    assert not in_semigroup(1, (2, 3))
    assert in_semigroup(7, (2, 5))
    assert not in_semigroup(3, (2,))
    assert in_semigroup(44, (2,))
    assert in_semigroup(5, (1,))
    assert not in_semigroup(4, ())


def test_splice_diagram_e8(fixtures):
    """Test the single-node diagram of E8."""
    diagram = splice_diagram(fixtures["e8"].graph)
    assert diagram.nodes == (0,)
    assert diagram.leaves == (1, 3, 7)
    assert sorted(inc.weight for inc in diagram.at(0)) == [2, 3, 5]
    assert diagram.weight(0, 4) == 5
    assert {inc.end for inc in diagram.at(0)} == {1, 3, 7}
    with pytest.raises(KeyError):
        diagram.weight(0, 7)


def test_splice_diagram_ends(fixtures):
    """Test that valence-2 vertices are suppressed between nodes."""
    diagram = splice_diagram(fixtures["suspension-e8-arm"].graph)
    assert diagram.nodes == (3, 8)
    assert [inc.end for inc in diagram.at(8) if inc.toward == 7] == [3]
    assert diagram.weight(8, 7) == 1
    assert diagram.weight(3, 10) == 2


def test_splice_diagram_errors():
    """Test that unsupported graphs are refused."""
    cycle = PlumbingGraph.from_data(
        [(0, -2), (1, -2), (2, -2)], [(0, 1), (1, 2), (0, 2)]
    )
    with pytest.raises(UnsupportedGraphError):
        splice_diagram(cycle)
    with pytest.raises(UnsupportedGraphError):
        splice_diagram(PlumbingGraph.from_data([(0, -2, 1)]))
    with pytest.raises(NotNegativeDefiniteError):
        splice_diagram(PlumbingGraph.chain([-1, -1]))


def _node_weights(diagram):
    return {
        node: sorted(inc.weight for inc in diagram.at(node)) for node in diagram.nodes
    }


def test_node_weights_star_shape(fixtures):
    """Test that the weights at the single node are the Seifert alphas."""
    checked = 0
    for fixture in fixtures.values():
        try:
            seifert = star_shape(fixture.graph)
        except UnsupportedGraphError:
            continue
        if len(seifert.legs) < 3 or not is_negative_definite(fixture.graph):
            continue
        diagram = splice_diagram(fixture.graph)
        assert len(diagram.nodes) == 1, fixture.name
        alphas = sorted(alpha for alpha, _ in seifert.legs)
        assert _node_weights(diagram)[diagram.nodes[0]] == alphas, fixture.name
        checked += 1
    assert checked >= 3


def test_node_weights_blow_up(fixtures):
    """Test that blow-ups of edges and leaves keep the weights at every node."""
    rng = random.Random(99)
    for fixture in fixtures.values():
        graph = fixture.graph
        if not is_negative_definite(graph):
            continue
        try:
            before = _node_weights(splice_diagram(graph))
        except UnsupportedGraphError:
            continue
        if not before:
            continue
        blown = graph
        for _ in range(4):
            leaves = [vid for vid in blown.vertices if blown.valence(vid) == 1]
            if leaves and rng.random() < 0.4:
                blown = blow_up_vertex(blown, rng.choice(leaves))
            else:
                blown = blow_up_edge(blown, *rng.choice(blown.edges))
        after = _node_weights(splice_diagram(blown))
        assert after == before, fixture.name


def test_semigroup_e8(fixtures):
    """Test that a single node imposes no condition."""
    verdict = semigroup_condition(splice_diagram(fixtures["e8"].graph))
    assert verdict.passes
    assert verdict.failures == ()


def test_semigroup_e8_arm(fixtures):
    """Test the failure at the E8 arm of the suspension graph."""
    verdict = semigroup_condition(splice_diagram(fixtures["suspension-e8-arm"].graph))
    assert not verdict.passes
    assert len(verdict.failures) == 1
    failure = verdict.failures[0]
    assert (failure.node, failure.toward, failure.end) == (8, 7, 3)
    assert failure.weight == 1
    assert failure.generators == (2, 3)


def test_semigroup_fixtures(fixtures):
    """Test the recorded semigroup outcome of every fixture."""
    for fixture in fixtures.values():
        if "semigroup_passes" in fixture.expected:
            verdict = semigroup_condition(splice_diagram(fixture.graph))
            assert verdict.passes == fixture.expected["semigroup_passes"], fixture.name


def test_central_weights(steiner):
    """Test that every cusp branch seen from the center is unimodular."""
    for sis in (steiner, catalog(5)[3], catalog(6)[10]):
        graph = build_graph(sis)
        for nbr in graph.neighbors(0):
            assert subgraph_determinant(graph, 0, nbr) == 1


def test_semigroup_steiner(steiner):
    """Test that three cusps make the central node fail."""
    verdict = semigroup_condition(splice_diagram(build_graph(steiner)))
    central = [f for f in verdict.failures if f.node == 0]
    assert len(central) == 3
    assert all(f.weight == 1 and f.generators == (2, 3) for f in central)


def test_sis_semigroup_scan():
    """Test that the central node fails exactly when there are 3+ cusps."""
    rows = sis_semigroup_scan(catalog(4) + catalog(5))
    assert len(rows) == 12
    for row in rows:
        assert row.central_is_node == (row.n_cusps >= 3)
        assert row.central_fails == (row.n_cusps >= 3)
        if row.n_cusps >= 3:
            assert not row.passes
    quintic_c4 = rows[4 + 3]
    assert quintic_c4.cusps == "[3],[2_3]"
    assert not quintic_c4.central_is_node


def test_verdict_to_json(fixtures):
    """Test the JSON form of a verdict."""
    verdict = semigroup_condition(splice_diagram(fixtures["suspension-e8-arm"].graph))
    data = json.loads(verdict_to_json(verdict))
    assert data == verdict_to_dict(verdict)
    assert data["passes"] is False
    assert data["failures"][0] == {
        "node": 8,
        "toward": 7,
        "end": 3,
        "weight": 1,
        "generators": [2, 3],
    }
