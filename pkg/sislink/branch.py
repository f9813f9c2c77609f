#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# branch.py from https://github.com/snstac/sislink
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

"""SISLINK plane branch toolkit.

Multiplicity sequences in bracket notation (``[4_2,2_3]`` is
``[4,4,2,2,2,1,1]``), their proximity structure, the minimal embedded
resolution graph with total multiplicities, Newton pairs and the Alexander
polynomial.
"""

import logging
import re

from math import gcd
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from sympy import Poly, ZZ

import networkx as nx

from .classes import (
    ConsistencyError,
    EmbeddedResolutionGraph,
    MultiplicitySequence,
    PlaneBranch,
    PlumbingGraph,
    SequenceParseError,
    ValidationError,
)
from .exactmath import T, evaluate, poly_divmod

__all__ = [
    "parse_sequence",
    "parse_sequence_list",
    "proximity",
    "embedded_resolution",
    "alexander",
    "newton_pairs",
    "puiseux_characteristic",
    "sequence_from_newton_pairs",
    "torus_knot_alexander",
    "plane_branch",
]

_logger = logging.getLogger(__name__)

_ITEM = re.compile(r"\s*(\d+)\s*(?:_\s*(\d+)\s*)?")
_GROUP = re.compile(r"\s*(\[[^\[\]]*\])\s*")


def parse_sequence(text: str) -> MultiplicitySequence:
    """Parse bracket notation such as ``[3_2,2]`` into a sequence."""
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped) and stripped[pos].isspace():
        pos += 1
    if pos >= len(stripped) or stripped[pos] != "[":
        raise SequenceParseError("Expected '['", text, pos)
    pos += 1

    runs: List[Tuple[int, int]] = []
    while True:
        match = _ITEM.match(stripped, pos)
        if not match:
            raise SequenceParseError("Expected an integer", text, pos)
        value = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) is not None else 1
        if value < 2:
            raise SequenceParseError(
                f"Multiplicity {value} is below 2", text, match.start(1)
            )
        if repeat < 1:
            raise SequenceParseError(
                f"Repeat count {repeat} is below 1", text, match.start(2)
            )
        if runs and value > runs[-1][0]:
            raise SequenceParseError(
                f"Multiplicity {value} increases", text, match.start(1)
            )
        if runs and value == runs[-1][0]:
            runs[-1] = (value, runs[-1][1] + repeat)
        else:
            runs.append((value, repeat))
        pos = match.end()
        if pos < len(stripped) and stripped[pos] == ",":
            pos += 1
            continue
        if pos < len(stripped) and stripped[pos] == "]":
            pos += 1
            break
        raise SequenceParseError("Expected ',' or ']'", text, pos)

    if pos != len(stripped):
        raise SequenceParseError("Trailing characters", text, pos)
    return MultiplicitySequence(tuple(runs))


def parse_sequence_list(text: str) -> List[MultiplicitySequence]:
    """Parse a comma separated list of sequences, e.g. ``[3],[2_3]``."""
    sequences: List[MultiplicitySequence] = []
    pos = 0
    while True:
        match = _GROUP.match(text, pos)
        if not match:
            raise SequenceParseError("Expected a bracketed sequence", text, pos)
        try:
            sequences.append(parse_sequence(match.group(1)))
        except SequenceParseError as exc:
            raise SequenceParseError(
                "Bad sequence", text, match.start(1) + exc.position
            ) from exc
        pos = match.end()
        if pos == len(text):
            return sequences
        if text[pos] != ",":
            raise SequenceParseError("Expected ','", text, pos)
        pos += 1


def proximity(seq: MultiplicitySequence) -> Tuple[FrozenSet[int], ...]:
    """For every point, the set of earlier points it is proximate to.

    Point ``i`` has as proximate points the run ``i+1, ..., i+s`` whose
    multiplicities add up to exactly ``m_i``. The final point has none.
    """
    values = seq.expanded
    count = len(values)
    prox: List[Set[int]] = [set() for _ in range(count)]
    for i, value in enumerate(values[:-1]):
        total = 0
        j = i
        while total < value and j + 1 < count:
            j += 1
            total += values[j]
            prox[j].add(i)
        if total != value:
            raise ValidationError(
                f"Invalid multiplicity sequence {seq}: no exact run after point {i}."
            )
    for j, points in enumerate(prox):
        if j and (j - 1) not in points:
            raise ValidationError(
                f"Invalid multiplicity sequence {seq}: point {j} not on E_{j - 1}."
            )
        if len(points) > 2:
            raise ValidationError(
                f"Invalid multiplicity sequence {seq}: point {j} is proximate to "
                f"{len(points)} points."
            )
    return tuple(frozenset(points) for points in prox)


def embedded_resolution(
    seq: MultiplicitySequence, prox: Sequence[FrozenSet[int]]
) -> EmbeddedResolutionGraph:
    """Blow up every point of the sequence and record the exceptional tree."""
    values = seq.expanded
    graph = nx.Graph()
    multiplicities: Dict[int, int] = {}
    for j, value in enumerate(values):
        graph.add_node(j)
        earlier = sorted(prox[j])
        if len(earlier) == 2:
            if graph.has_edge(*earlier):
                graph.remove_edge(*earlier)
            else:
                raise ValidationError(
                    f"Invalid multiplicity sequence {seq}: point {j} is not an "
                    "intersection point."
                )
        for i in earlier:
            graph.add_edge(i, j)
        multiplicities[j] = value + sum(multiplicities[i] for i in earlier)

    proximate_counts = [0] * len(values)
    for points in prox:
        for i in points:
            proximate_counts[i] += 1
    for j in graph.nodes:
        graph.nodes[j]["euler"] = -1 - proximate_counts[j]
        graph.nodes[j]["genus"] = 0

    arrow = len(values) - 1
    _logger.debug("Resolution of %s: arrow M=%s", seq, multiplicities[arrow])
    return EmbeddedResolutionGraph(PlumbingGraph(graph), multiplicities, arrow)


def alexander(branch: PlaneBranch) -> Poly:
    """Alexander polynomial normalised by Delta(1) = 1."""
    resolution = branch.resolution
    graph = resolution.graph
    numerator = Poly(1 - T, T, domain=ZZ)
    denominator = Poly(1, T, domain=ZZ)
    for vid in graph.vertices:
        valence = graph.valence(vid) + (1 if vid == resolution.arrow_vertex else 0)
        factor = Poly(1 - T ** resolution.multiplicities[vid], T, domain=ZZ)
        if valence >= 3:
            numerator = numerator * factor ** (valence - 2)
        elif valence == 1:
            denominator = denominator * factor

    quotient, remainder = poly_divmod(numerator, denominator)
    if not remainder.is_zero:
        raise ConsistencyError(f"Alexander product of {branch.sequence} is not exact.")
    if quotient.degree() != branch.milnor or evaluate(quotient, 1) != 1:
        raise ConsistencyError(
            f"Alexander polynomial of {branch.sequence} has degree "
            f"{quotient.degree()}, expected {branch.milnor}."
        )
    return quotient


def _euclid_runs(x: int, e: int) -> List[Tuple[int, int]]:
    runs: List[Tuple[int, int]] = []
    a, b = x, e
    while b:
        quotient, rest = divmod(a, b)
        if quotient:
            runs.append((b, quotient))
        a, b = b, rest
    return runs


def _value_runs(values: Sequence[int]) -> List[Tuple[int, int]]:
    runs: List[Tuple[int, int]] = []
    for value in values:
        if runs and runs[-1][0] == value:
            runs[-1] = (value, runs[-1][1] + 1)
        else:
            runs.append((value, 1))
    return runs


def newton_pairs(
    seq: MultiplicitySequence, prox: Sequence[FrozenSet[int]]
) -> Tuple[Tuple[int, int], ...]:
    """Newton pairs ``(p_k, q_k)`` of the branch.

    The points split into blocks, one per characteristic exponent; a block
    starts at the first free point after a satellite point. Inside a block the
    multiplicity runs are the Euclidean remainder runs of
    ``(beta_k - beta_{k-1}, e_{k-1})``.
    """
    values = seq.expanded
    starts = [0]
    for j in range(2, len(values)):
        if len(prox[j]) == 1 and len(prox[j - 1]) == 2:
            starts.append(j)
    bounds = list(zip(starts, starts[1:] + [len(values)]))

    n = values[0]
    previous_e = n
    beta = 0
    characteristic: List[int] = []
    for start, stop in bounds:
        runs = _value_runs(values[start:stop])
        lead = runs[0][1] if runs[0][0] == previous_e else 0
        if lead and len(runs) < 2:
            raise ValidationError(f"Invalid multiplicity sequence {seq}.")
        smaller = runs[1] if lead else runs[0]
        if smaller[0] >= previous_e:
            raise ValidationError(f"Invalid multiplicity sequence {seq}.")
        step = lead * previous_e + smaller[0]
        if _euclid_runs(step, previous_e) != runs:
            raise ValidationError(
                f"Invalid multiplicity sequence {seq}: block {values[start:stop]} "
                "is not a Euclidean run."
            )
        beta += step
        characteristic.append(beta)
        previous_e = runs[-1][0]
    if previous_e != 1:
        raise ValidationError(f"Invalid multiplicity sequence {seq}: gcd {previous_e}.")
    return _pairs_from_characteristic(n, characteristic)


def _pairs_from_characteristic(
    n: int, betas: Sequence[int]
) -> Tuple[Tuple[int, int], ...]:
    pairs: List[Tuple[int, int]] = []
    e_prev, beta_prev = n, 0
    for k, beta in enumerate(betas):
        e_k = gcd(e_prev, beta)
        q_k = beta // e_k if k == 0 else (beta - beta_prev) // e_k
        pairs.append((e_prev // e_k, q_k))
        e_prev, beta_prev = e_k, beta
    return tuple(pairs)


def puiseux_characteristic(pairs: Sequence[Tuple[int, int]]) -> Tuple[int, List[int]]:
    """Multiplicity ``n`` and characteristic exponents from Newton pairs."""
    if not pairs:
        raise ValidationError("At least one Newton pair is needed.")
    n = 1
    for p, _ in pairs:
        if p < 2:
            raise ValidationError(f"Newton pair entry p={p} must be >= 2.")
        n *= p
    betas: List[int] = []
    e_prev = n
    beta = 0
    for k, (p, q) in enumerate(pairs):
        if q < 1 or gcd(p, q) != 1 or (k == 0 and q <= p):
            raise ValidationError(f"Invalid Newton pair ({p}, {q}).")
        e_k = e_prev // p
        beta += q * e_k
        betas.append(beta)
        e_prev = e_k
    return n, betas


def sequence_from_newton_pairs(
    pairs: Sequence[Tuple[int, int]]
) -> MultiplicitySequence:
    """Forward Euclidean-run expansion of Newton pairs."""
    n, betas = puiseux_characteristic(pairs)
    values: List[int] = []
    e_prev, beta_prev = n, 0
    for beta in betas:
        for value, repeat in _euclid_runs(beta - beta_prev, e_prev):
            values.extend([value] * repeat)
        e_prev, beta_prev = gcd(e_prev, beta), beta
    return MultiplicitySequence.from_expanded(values)


def torus_knot_alexander(p: int, q: int) -> Poly:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))."""
    numerator = Poly((T ** (p * q) - 1) * (T - 1), T, domain=ZZ)
    denominator = Poly((T**p - 1) * (T**q - 1), T, domain=ZZ)
    quotient, remainder = poly_divmod(numerator, denominator)
    if not remainder.is_zero:
        raise ValidationError(f"({p}, {q}) is not a coprime pair.")
    return quotient


def plane_branch(seq: MultiplicitySequence) -> PlaneBranch:
    """Assemble every derived structure of a branch."""
    prox = proximity(seq)
    resolution = embedded_resolution(seq, prox)
    delta = sum(m * (m - 1) // 2 for m in seq.expanded)
    return PlaneBranch(
        sequence=seq,
        proximity=prox,
        resolution=resolution,
        delta=delta,
        milnor=2 * delta,
        newton_pairs=newton_pairs(seq, prox),
    )
