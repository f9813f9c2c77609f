#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# splice.py from https://github.com/snstac/sislink
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

"""SISLINK splice diagrams and the semigroup condition."""

import json
import logging

from typing import Any, Dict, Iterable, List, Sequence

import networkx as nx

from .classes import (
    NotNegativeDefiniteError,
    PlumbingGraph,
    SemigroupFailure,
    SemigroupVerdict,
    SISInput,
    SpliceDiagram,
    SpliceIncidence,
    SpliceScanRow,
    UnsupportedGraphError,
)
from .plumbing import is_negative_definite, subgraph_determinant
from .superisolated import build_graph

__all__ = [
    "splice_diagram",
    "semigroup_condition",
    "in_semigroup",
    "sis_semigroup_scan",
    "verdict_to_dict",
    "verdict_to_json",
]

_logger = logging.getLogger(__name__)


def splice_diagram(g: PlumbingGraph) -> SpliceDiagram:
    """Splice diagram of a negative definite genus-0 plumbing tree.

    Vertices of valence two are suppressed. For every node v and every
    neighbour w the weight is det(-M) of the branch of the tree at v
    containing w.
    """
    if len(g) == 0 or not nx.is_tree(g.graph):
        raise UnsupportedGraphError("Splice diagrams need a connected tree.")
    if any(g.genus(vid) for vid in g.vertices):
        raise UnsupportedGraphError("Splice diagrams need genus-0 vertices.")
    if not is_negative_definite(g):
        raise NotNegativeDefiniteError(
            "Splice diagrams need a negative definite graph."
        )

    nodes = tuple(g.nodes())
    leaves = tuple(vid for vid in g.vertices if g.valence(vid) == 1)
    incidences: List[SpliceIncidence] = []
    for node in nodes:
        for toward in g.neighbors(node):
            previous, current = node, toward
            while g.valence(current) == 2:
                previous, current = current, next(
                    nbr for nbr in g.neighbors(current) if nbr != previous
                )
            weight = subgraph_determinant(g, node, toward)
            incidences.append(SpliceIncidence(node, toward, current, weight))
    return SpliceDiagram(g, nodes, leaves, tuple(incidences))


def in_semigroup(target: int, generators: Sequence[int]) -> bool:
    """Whether ``target`` is a sum of ``generators`` (with repetition)."""
    reachable = [True] + [False] * target
    for value in range(1, target + 1):
        reachable[value] = any(
            reachable[value - gen] for gen in generators if 0 < gen <= value
        )
    return reachable[target]


def _leaf_generator(sd: SpliceDiagram, node: int, leaf: int) -> int:
    """Product of the weights off the path node -> leaf at the nodes along it."""
    path = nx.shortest_path(sd.graph.graph, node, leaf)
    node_set = set(sd.nodes)
    product = 1
    for i in range(1, len(path) - 1):
        if path[i] not in node_set:
            continue
        on_path = {path[i - 1], path[i + 1]}
        for inc in sd.at(path[i]):
            if inc.toward not in on_path:
                product *= inc.weight
    return product


def semigroup_condition(sd: SpliceDiagram) -> SemigroupVerdict:
    """Check every node-to-node weight against its leaf semigroup."""
    node_set = set(sd.nodes)
    leaf_set = set(sd.leaves)
    failures: List[SemigroupFailure] = []
    for inc in sd.incidences:
        if inc.end not in node_set:
            continue
        rest = sd.graph.mutable_copy()
        rest.remove_node(inc.node)
        side = nx.node_connected_component(rest, inc.toward)
        generators = tuple(
            sorted(
                _leaf_generator(sd, inc.node, leaf) for leaf in side & leaf_set
            )
        )
        if not in_semigroup(inc.weight, generators):
            _logger.debug(
                "Semigroup failure at %s toward %s: %s not in <%s>",
                inc.node,
                inc.toward,
                inc.weight,
                generators,
            )
            failures.append(
                SemigroupFailure(inc.node, inc.toward, inc.end, inc.weight, generators)
            )
    return SemigroupVerdict(tuple(failures))


def sis_semigroup_scan(rows: Iterable[SISInput]) -> List[SpliceScanRow]:
    """Semigroup condition of each superisolated graph, central vertex id 0."""
    results: List[SpliceScanRow] = []
    for sis in rows:
        graph = build_graph(sis)
        verdict = semigroup_condition(splice_diagram(graph))
        results.append(
            SpliceScanRow(
                label=sis.label,
                cusps=sis.cusps_text,
                n_cusps=len(sis.cusps),
                central_is_node=graph.valence(0) >= 3,
                central_fails=any(f.node == 0 for f in verdict.failures),
                passes=verdict.passes,
            )
        )
    return results


def verdict_to_dict(v: SemigroupVerdict) -> Dict[str, Any]:
    return {
        "passes": v.passes,
        "failures": [
            {
                "node": f.node,
                "toward": f.toward,
                "end": f.end,
                "weight": f.weight,
                "generators": list(f.generators),
            }
            for f in v.failures
        ],
    }


def verdict_to_json(v: SemigroupVerdict) -> str:
    return json.dumps(verdict_to_dict(v), indent=2)
