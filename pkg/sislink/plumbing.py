#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# plumbing.py from https://github.com/snstac/sislink
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

"""SISLINK plumbing graph engine.

Intersection matrices, negative definiteness, first homology of the link,
canonical cycle and K^2+s, Laufer's minimal cycle, blow-ups and blow-downs,
star-shape recognition, isomorphism and graph I/O (JSON and DOT).

Determinants of (sub)graphs always mean det(-M), positive on negative
definite graphs.
"""

import json
import logging
import random
import re

from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from networkx.algorithms.isomorphism import categorical_node_match
from sympy import Rational
from sympy.polys.matrices import DomainMatrix

from .classes import (
    AbelianGroupStructure,
    NotNegativeDefiniteError,
    PlumbingGraph,
    SeifertData,
    UnsupportedGraphError,
    ValidationError,
)
from .exactmath import (
    det,
    int_matrix,
    nontrivial_factors,
    smith_normal_form,
    solve_rational,
)

__all__ = [
    "intersection_matrix",
    "determinant",
    "subgraph_determinant",
    "is_negative_definite",
    "homology",
    "canonical_k2s",
    "minimal_cycle",
    "cycle_pairings",
    "minimize",
    "blow_up_vertex",
    "blow_up_edge",
    "star_shape",
    "continued_fraction_value",
    "hirzebruch_jung",
    "isomorphic",
    "graph_to_dict",
    "graph_from_dict",
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
    "graph_from_dot",
]

_logger = logging.getLogger(__name__)

_node_match = categorical_node_match(["euler", "genus"], [0, 0])


def _is_tree(g: PlumbingGraph) -> bool:
    return len(g) == 0 or nx.is_tree(g.graph)


def _require_tree(g: PlumbingGraph) -> None:
    if not _is_tree(g):
        raise UnsupportedGraphError("Plumbing graph must be a connected tree.")


def _require_rational(g: PlumbingGraph) -> None:
    _require_tree(g)
    positive = [vid for vid in g.vertices if g.genus(vid) > 0]
    if positive:
        raise UnsupportedGraphError(f"Vertices {positive} have positive genus.")


def _require_negative_definite(g: PlumbingGraph) -> None:
    if not is_negative_definite(g):
        raise NotNegativeDefiniteError("Intersection form is not negative definite.")


def _matrix_rows(g: PlumbingGraph, vertices: Sequence[int], sign: int = 1) -> list:
    index = {vid: i for i, vid in enumerate(vertices)}
    rows = [[0] * len(vertices) for _ in vertices]
    for vid in vertices:
        rows[index[vid]][index[vid]] = sign * g.euler(vid)
    for u, w in g.graph.subgraph(vertices).edges:
        rows[index[u]][index[w]] += sign
        rows[index[w]][index[u]] += sign
    return rows


def intersection_matrix(g: PlumbingGraph) -> DomainMatrix:
    """Intersection matrix in sorted vertex-id order."""
    return int_matrix(_matrix_rows(g, g.vertices))


def determinant(g: PlumbingGraph, vertices: Optional[Iterable[int]] = None) -> int:
    """det(-M) of the graph, or of the full subgraph on ``vertices``."""
    chosen = sorted(vertices) if vertices is not None else g.vertices
    return det(int_matrix(_matrix_rows(g, chosen, sign=-1)))


def subgraph_determinant(g: PlumbingGraph, v: int, w: int) -> int:
    """det(-M) of the component of the graph minus ``v`` that contains ``w``."""
    rest = g.mutable_copy()
    rest.remove_node(v)
    return determinant(g, nx.node_connected_component(rest, w))


def is_negative_definite(g: PlumbingGraph) -> bool:
    """All leading principal minors of -M are positive."""
    rows = _matrix_rows(g, g.vertices, sign=-1)
    for k in range(1, len(rows) + 1):
        if det(int_matrix([row[:k] for row in rows[:k]])) <= 0:
            return False
    return True


def homology(g: PlumbingGraph) -> AbelianGroupStructure:
    """H_1 of the plumbed 3-manifold: the cokernel of the intersection matrix."""
    _require_rational(g)
    factors = smith_normal_form(intersection_matrix(g))
    return AbelianGroupStructure(nontrivial_factors(factors))


def canonical_k2s(g: PlumbingGraph) -> Tuple[Dict[int, Rational], Rational]:
    """Canonical cycle K and the invariant K^2 + s.

    K solves the adjunction relations K.E_v = 2 g_v - 2 - E_v^2.
    """
    _require_negative_definite(g)
    vertices = g.vertices
    rhs = [2 * g.genus(vid) - 2 - g.euler(vid) for vid in vertices]
    coeffs = solve_rational(intersection_matrix(g), rhs)
    k_squared = sum((k * r for k, r in zip(coeffs, rhs)), Rational(0))
    return dict(zip(vertices, coeffs)), k_squared + len(vertices)


def cycle_pairings(g: PlumbingGraph, cycle: Dict[int, Any]) -> Dict[int, Any]:
    """Z.E_v for every vertex v."""
    return {
        vid: cycle.get(vid, 0) * g.euler(vid)
        + sum(cycle.get(nbr, 0) for nbr in g.neighbors(vid))
        for vid in g.vertices
    }


def minimal_cycle(g: PlumbingGraph) -> Dict[int, int]:
    """Minimal (Artin) cycle by Laufer's ascent from the all-ones cycle."""
    if len(g) == 0 or not nx.is_connected(g.graph):
        raise ValidationError("Minimal cycle needs a non-empty connected graph.")
    _require_negative_definite(g)
    cycle = {vid: 1 for vid in g.vertices}
    while True:
        pairings = cycle_pairings(g, cycle)
        positive = [vid for vid in g.vertices if pairings[vid] > 0]
        if not positive:
            return cycle
        cycle[positive[0]] += 1


def _blow_down(graph: nx.Graph, vid: int) -> None:
    neighbors = list(graph.neighbors(vid))
    for nbr in neighbors:
        graph.nodes[nbr]["euler"] += 1
    if len(neighbors) == 2:
        graph.add_edge(*neighbors)
    graph.remove_node(vid)


def minimize(g: PlumbingGraph, rng: Optional[random.Random] = None) -> PlumbingGraph:
    """Blow down rational (-1)-vertices of valence <= 2 until none is left.

    With ``rng`` the next blow-down is picked at random among the candidates;
    otherwise the lowest id goes first.
    """
    _require_tree(g)
    graph = g.mutable_copy()
    while True:
        candidates = [
            vid
            for vid in sorted(graph.nodes)
            if graph.nodes[vid]["euler"] == -1
            and graph.nodes[vid]["genus"] == 0
            and graph.degree(vid) <= 2
        ]
        if not candidates:
            return PlumbingGraph(graph)
        vid = rng.choice(candidates) if rng else candidates[0]
        _logger.debug("Blowing down vertex %s", vid)
        _blow_down(graph, vid)


def _next_id(graph: nx.Graph) -> int:
    return max(graph.nodes, default=-1) + 1


def blow_up_vertex(g: PlumbingGraph, vid: int) -> PlumbingGraph:
    """Blow up a generic point of E_v: new (-1)-leaf, E_v^2 drops by one."""
    graph = g.mutable_copy()
    new = _next_id(graph)
    graph.nodes[vid]["euler"] -= 1
    graph.add_node(new, euler=-1, genus=0)
    graph.add_edge(vid, new)
    return PlumbingGraph(graph)


def blow_up_edge(g: PlumbingGraph, u: int, w: int) -> PlumbingGraph:
    """Blow up the intersection point E_u . E_w."""
    graph = g.mutable_copy()
    if not graph.has_edge(u, w):
        raise ValidationError(f"No edge ({u}, {w}) to blow up.")
    new = _next_id(graph)
    graph.remove_edge(u, w)
    graph.nodes[u]["euler"] -= 1
    graph.nodes[w]["euler"] -= 1
    graph.add_node(new, euler=-1, genus=0)
    graph.add_edges_from([(u, new), (new, w)])
    return PlumbingGraph(graph)


def continued_fraction_value(entries: Sequence[int]) -> Tuple[int, int]:
    """``(alpha, beta)`` with alpha/beta = b_1 - 1/(b_2 - 1/(... - 1/b_k))."""
    if not entries:
        raise ValidationError("Empty continued fraction.")
    num, den = entries[-1], 1
    for entry in reversed(entries[:-1]):
        num, den = entry * num - den, num
    return num, den


def hirzebruch_jung(alpha: int, beta: int) -> List[int]:
    """Entries b_i >= 2 of the negative continued fraction of alpha/beta."""
    if not 1 <= beta < alpha:
        raise ValidationError(f"Need 1 <= beta < alpha, got ({alpha}, {beta}).")
    entries: List[int] = []
    num, den = alpha, beta
    while den:
        entry = -(-num // den)
        entries.append(entry)
        num, den = den, entry * den - num
    return entries


def star_shape(g: PlumbingGraph) -> SeifertData:
    """Seifert invariants of a minimal star-shaped graph.

    The center is the unique vertex of valence >= 3 (for a chain, the lowest
    id). Each leg is read from the vertex next to the center outward.
    """
    _require_rational(g)
    if len(g) == 0:
        raise UnsupportedGraphError("Empty graph is not star-shaped.")
    nodes = g.nodes()
    if len(nodes) > 1:
        raise UnsupportedGraphError(f"Graph is not star-shaped: nodes {nodes}.")
    center = nodes[0] if nodes else g.vertices[0]

    legs: List[Tuple[int, int]] = []
    for first in g.neighbors(center):
        entries: List[int] = []
        previous, current = center, first
        while True:
            entry = -g.euler(current)
            if entry < 2:
                raise UnsupportedGraphError(
                    f"Graph is not minimal: leg vertex {current} has Euler {-entry}."
                )
            entries.append(entry)
            ahead = [nbr for nbr in g.neighbors(current) if nbr != previous]
            if not ahead:
                break
            previous, current = current, ahead[0]
        legs.append(continued_fraction_value(entries))
    return SeifertData(-g.euler(center), tuple(legs))


def isomorphic(g1: PlumbingGraph, g2: PlumbingGraph) -> bool:
    """Isomorphism of decorated graphs, matching Euler numbers and genera."""
    return nx.is_isomorphic(g1.graph, g2.graph, node_match=_node_match)


def graph_to_dict(g: PlumbingGraph) -> Dict[str, list]:
    return {
        "vertices": [
            {"id": vid, "euler": g.euler(vid), "genus": g.genus(vid)}
            for vid in g.vertices
        ],
        "edges": [list(edge) for edge in g.edges],
    }


def graph_from_dict(data: Dict[str, Any]) -> PlumbingGraph:
    try:
        vertices = [
            (int(item["id"]), int(item["euler"]), int(item.get("genus", 0)))
            for item in data["vertices"]
        ]
        edges = [(int(u), int(w)) for u, w in data.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"Malformed plumbing graph data: {exc}") from exc
    return PlumbingGraph.from_data(vertices, edges)


def graph_to_json(g: PlumbingGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2)


def graph_from_json(text: str) -> PlumbingGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"Plumbing graph is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError("Plumbing graph JSON must be an object.")
    return graph_from_dict(data)


_DOT_NODE = re.compile(r"^\s*(\d+)\s*\[(.*)\]\s*;?\s*$")
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$")
_DOT_ATTR = re.compile(r"(\w+)\s*=\s*\"?(-?\d+)\"?")


def graph_to_dot(g: PlumbingGraph, name: str = "plumbing") -> str:
    """DOT text with Euler numbers as labels."""
    lines = [f"graph {name} {{"]
    for vid in g.vertices:
        label = str(g.euler(vid))
        if g.genus(vid):
            label += f" [g={g.genus(vid)}]"
        lines.append(
            f'  {vid} [label="{label}", euler={g.euler(vid)}, genus={g.genus(vid)}];'
        )
    for u, w in g.edges:
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_from_dot(text: str) -> PlumbingGraph:
    """Read back the DOT dialect written by :func:`graph_to_dot`."""
    vertices: List[Tuple[int, int, int]] = []
    edges: List[Tuple[int, int]] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(("graph", "}", "//")):
            continue
        edge = _DOT_EDGE.match(stripped)
        if edge:
            edges.append((int(edge.group(1)), int(edge.group(2))))
            continue
        node = _DOT_NODE.match(stripped)
        if node:
            attrs = dict(_DOT_ATTR.findall(node.group(2)))
            if "euler" not in attrs:
                raise ValidationError(f"DOT line {number}: vertex without euler.")
            vertices.append(
                (int(node.group(1)), int(attrs["euler"]), int(attrs.get("genus", 0)))
            )
            continue
        raise ValidationError(f"DOT line {number} not understood: {stripped!r}")
    return PlumbingGraph.from_data(vertices, edges)
