#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# classes.py from https://github.com/snstac/sislink
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

"""SISLINK Class Definitions."""

import asyncio
import functools
import logging

from configparser import SectionProxy
from dataclasses import dataclass, field
from math import gcd
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import networkx as nx

from sympy import Poly, Rational

import sislink


class SISLinkError(Exception):
    """Base class for all sislink errors."""


class ValidationError(SISLinkError, ValueError):
    """Input rejected: bad notation, violated precondition or unsupported data."""


class SequenceParseError(ValidationError):
    """Malformed multiplicity sequence notation."""

    def __init__(self, message: str, text: str = "", position: int = 0) -> None:
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class DimensionError(ValidationError):
    """Matrix has the wrong shape for the requested operation."""


class SingularMatrixError(ValidationError):
    """Linear system has no unique solution."""


class NotNegativeDefiniteError(ValidationError):
    """Intersection form is not negative definite."""


class UnsupportedGraphError(ValidationError):
    """Graph or parameters fall outside what the tool computes."""


class ConsistencyError(SISLinkError, RuntimeError):
    """Two independent computations of the same invariant disagree."""


@dataclass(frozen=True)
class MultiplicitySequence:
    """Multiplicity sequence of a plane branch, in compressed run notation.

    ``compressed`` holds ``(value, repeat)`` runs with values >= 2 and
    non-increasing; ``expanded`` appends as many ones as the last value.
    """

    compressed: Tuple[Tuple[int, int], ...]

    @property
    def expanded(self) -> Tuple[int, ...]:
        values: List[int] = []
        for value, repeat in self.compressed:
            values.extend([value] * repeat)
        values.extend([1] * self.compressed[-1][0])
        return tuple(values)

    @property
    def multiplicity(self) -> int:
        """Multiplicity of the branch (first entry)."""
        return self.compressed[0][0]

    @classmethod
    def from_expanded(cls, values: Sequence[int]) -> "MultiplicitySequence":
        """Compress an expanded sequence; trailing ones are dropped."""
        runs: List[List[int]] = []
        for value in values:
            if value == 1:
                break
            if runs and runs[-1][0] == value:
                runs[-1][1] += 1
            else:
                runs.append([value, 1])
        if not runs:
            raise ValidationError("Multiplicity sequence has no entry above 1.")
        return cls(tuple((value, repeat) for value, repeat in runs))

    def __str__(self) -> str:
        items = [
            str(value) if repeat == 1 else f"{value}_{repeat}"
            for value, repeat in self.compressed
        ]
        return "[" + ",".join(items) + "]"


class PlumbingGraph:
    """Decorated plumbing tree: each vertex carries an Euler number and a genus.

    Backed by a frozen :class:`networkx.Graph` with node attributes ``euler``
    and ``genus``. Vertices are integer ids; every derived matrix uses the
    sorted id order.
    """

    def __init__(self, graph: Optional[nx.Graph] = None) -> None:
        self.graph: nx.Graph = nx.freeze(nx.Graph(graph) if graph else nx.Graph())

    @classmethod
    def from_data(
        cls,
        vertices: Iterable[Sequence[int]],
        edges: Iterable[Sequence[int]] = (),
    ) -> "PlumbingGraph":
        """Build from ``(id, euler[, genus])`` tuples and ``(u, w)`` pairs."""
        graph = nx.Graph()
        for item in vertices:
            vid, euler, *rest = item
            genus = int(rest[0]) if rest else 0
            if genus < 0:
                raise ValidationError(f"Vertex {vid} has negative genus {genus}.")
            if vid in graph:
                raise ValidationError(f"Duplicate vertex id {vid}.")
            graph.add_node(int(vid), euler=int(euler), genus=genus)
        for u, w in edges:
            if u not in graph or w not in graph:
                raise ValidationError(f"Edge ({u}, {w}) names an unknown vertex.")
            if u == w:
                raise ValidationError(f"Loop at vertex {u} is not allowed.")
            if graph.has_edge(u, w):
                raise ValidationError(f"Repeated edge ({u}, {w}).")
            graph.add_edge(int(u), int(w))
        return cls(graph)

    @classmethod
    def chain(cls, eulers: Sequence[int], start: int = 0) -> "PlumbingGraph":
        """A linear chain with ids ``start, start + 1, ...``."""
        ids = range(start, start + len(eulers))
        return cls.from_data(
            [(vid, euler) for vid, euler in zip(ids, eulers)],
            [(vid, vid + 1) for vid in ids[:-1]],
        )

    @property
    def vertices(self) -> List[int]:
        return sorted(self.graph.nodes)

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return sorted(tuple(sorted(edge)) for edge in self.graph.edges)

    def euler(self, vid: int) -> int:
        return self.graph.nodes[vid]["euler"]

    def genus(self, vid: int) -> int:
        return self.graph.nodes[vid]["genus"]

    def neighbors(self, vid: int) -> List[int]:
        return sorted(self.graph.neighbors(vid))

    def valence(self, vid: int) -> int:
        return self.graph.degree(vid)

    def nodes(self) -> List[int]:
        """Vertices of valence at least three."""
        return [vid for vid in self.vertices if self.valence(vid) >= 3]

    def mutable_copy(self) -> nx.Graph:
        return nx.Graph(self.graph)

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def __contains__(self, vid: object) -> bool:
        return vid in self.graph

    def __repr__(self) -> str:
        eulers = ", ".join(f"{vid}:{self.euler(vid)}" for vid in self.vertices)
        return f"PlumbingGraph([{eulers}], edges={self.edges})"


@dataclass(frozen=True)
class EmbeddedResolutionGraph:
    """Minimal embedded resolution of a plane branch.

    ``multiplicities`` maps each vertex to the multiplicity M_v of the total
    transform along it; ``arrow_vertex`` is the (-1)-curve meeting the strict
    transform.
    """

    graph: PlumbingGraph
    multiplicities: Mapping[int, int]
    arrow_vertex: int

    @property
    def arrow_multiplicity(self) -> int:
        return self.multiplicities[self.arrow_vertex]


@dataclass(frozen=True)
class PlaneBranch:
    """An irreducible plane curve germ, described by its multiplicity sequence."""

    sequence: MultiplicitySequence
    proximity: Tuple[FrozenSet[int], ...]
    resolution: EmbeddedResolutionGraph
    delta: int
    milnor: int
    newton_pairs: Tuple[Tuple[int, int], ...]

    @property
    def is_one_pair(self) -> bool:
        return len(self.newton_pairs) == 1


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Finitely generated abelian group by invariant factors (1s dropped).

    A factor 0 stands for a free summand Z.
    """

    factors: Tuple[int, ...]

    @property
    def order(self) -> int:
        """Group order, or 0 when the group is infinite."""
        order = 1
        for factor in self.factors:
            order *= factor
        return order

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " + ".join("Z" if f == 0 else f"Z_{f}" for f in self.factors)


@dataclass(frozen=True)
class SeifertData:
    """Seifert invariants of a star-shaped graph.

    Central vertex has Euler number ``-b``; each leg is an ``(alpha, beta)``
    pair with ``alpha/beta`` the negative continued fraction of the leg read
    from the center outward.
    """

    b: int
    legs: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        for alpha, beta in self.legs:
            if alpha < 2 or not 1 <= beta < alpha:
                raise ValidationError(f"Invalid Seifert leg ({alpha}, {beta}).")
            if gcd(alpha, beta) != 1:
                raise ValidationError(f"Seifert leg ({alpha}, {beta}) not coprime.")

    @property
    def e(self) -> Rational:
        """Orbifold Euler number."""
        return -Rational(self.b) + sum(
            (Rational(beta, alpha) for alpha, beta in self.legs), Rational(0)
        )

    def __str__(self) -> str:
        legs = ",".join(f"({alpha},{beta})" for alpha, beta in self.legs)
        return f"({self.b};{legs})"


@dataclass(frozen=True)
class BrieskornTriple:
    """Exponents of the Brieskorn singularity x^a1 + y^a2 + z^a3."""

    a1: int
    a2: int
    a3: int

    def __post_init__(self) -> None:
        if min(self) < 2:
            raise ValidationError(f"Brieskorn exponents must be >= 2: {tuple(self)}.")
        if gcd(gcd(self.a1, self.a2), self.a3) != 1:
            raise ValidationError(f"Brieskorn exponents not coprime: {tuple(self)}.")

    def __iter__(self) -> Iterator[int]:
        return iter((self.a1, self.a2, self.a3))

    def __str__(self) -> str:
        return f"({self.a1},{self.a2},{self.a3})"


@dataclass(frozen=True)
class SISInput:
    """Degree and cusp list of a rational cuspidal plane curve."""

    d: int
    cusps: Tuple[MultiplicitySequence, ...]
    label: str = ""

    @property
    def cusps_text(self) -> str:
        return ",".join(str(cusp) for cusp in self.cusps)


@dataclass(frozen=True)
class ClosedForms:
    """Degree-only values of K^2+s, mu, p_g and |H|."""

    k2s: int
    mu: int
    pg: int
    h_order: int


@dataclass(frozen=True)
class InvariantReport:
    """All invariants of a superisolated singularity and its SWC verdict."""

    sis: SISInput
    graph: PlumbingGraph
    h_order: int
    k2s: Rational
    mu: int
    pg: int
    delta_f: Poly
    casson_walker: Rational
    torsion: Rational
    sw: Rational
    swc_rhs: Rational
    swc_holds: bool
    swc_rhs_integral: bool


@dataclass(frozen=True)
class TableRow:
    """One line of a verdict table."""

    label: str
    cusps: str
    swc_holds: bool
    swc_rhs: Rational
    pg: int

    @property
    def verdict(self) -> str:
        if self.swc_holds:
            return "True"
        return f"False ({sislink.rational_str(self.swc_rhs)})"


@dataclass(frozen=True)
class SpliceIncidence:
    """Weight at ``node`` on the diagram edge that leaves through ``toward``.

    ``end`` is the node or leaf reached along that edge.
    """

    node: int
    toward: int
    end: int
    weight: int


@dataclass(frozen=True)
class SpliceDiagram:
    """Splice diagram of a plumbing tree."""

    graph: PlumbingGraph
    nodes: Tuple[int, ...]
    leaves: Tuple[int, ...]
    incidences: Tuple[SpliceIncidence, ...]

    def at(self, node: int) -> List[SpliceIncidence]:
        return [inc for inc in self.incidences if inc.node == node]

    def weight(self, node: int, toward: int) -> int:
        for inc in self.incidences:
            if inc.node == node and inc.toward == toward:
                return inc.weight
        raise KeyError((node, toward))


@dataclass(frozen=True)
class SemigroupFailure:
    """A node-to-node weight outside the semigroup of its leaf generators."""

    node: int
    toward: int
    end: int
    weight: int
    generators: Tuple[int, ...]


@dataclass(frozen=True)
class SemigroupVerdict:
    """Outcome of the semigroup condition over a whole diagram."""

    failures: Tuple[SemigroupFailure, ...]

    @property
    def passes(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class SpliceScanRow:
    """Semigroup condition summary for one catalog entry."""

    label: str
    cusps: str
    n_cusps: int
    central_is_node: bool
    central_fails: bool
    passes: bool


@dataclass(frozen=True)
class Fixture:
    """A named graph with expected invariants and their source anchors.

    ``source`` optionally names the construction the graph must match: a
    superisolated curve (``{"sis": {"d": .., "cusps": ..}}``) or a Brieskorn
    triple (``{"brieskorn": [a1, a2, a3]}``).
    """

    name: str
    graph: PlumbingGraph
    expected: Mapping[str, Any]
    anchors: Mapping[str, str]
    source: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CheckResult:
    """Single expectation checked by ``fixtures verify``."""

    name: str
    check: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


Job = Tuple[Callable[..., Any], Tuple[Any, ...]]


class BatchWorker:
    """Pool worker: pulls ``(index, func, args)`` jobs off a queue.

    Each job is a pure computation run in the default executor; the result (or
    the raised exception) is stored under its index so callers can restore
    submission order.
    """

    _logger = logging.getLogger(__name__)
    if not _logger.handlers:
        _logger.setLevel(sislink.LOG_LEVEL)
        _console_handler = logging.StreamHandler()
        _console_handler.setLevel(sislink.LOG_LEVEL)
        _console_handler.setFormatter(sislink.LOG_FORMAT)
        _logger.addHandler(_console_handler)
        _logger.propagate = False
    logging.getLogger("asyncio").setLevel(sislink.LOG_LEVEL)

    def __init__(
        self,
        queue: asyncio.Queue,
        config: Union[dict, SectionProxy],
        results: Dict[int, Any],
    ) -> None:
        """Initialize an instance of this class."""
        self.queue = queue
        self.config = config
        self.results = results

        if isinstance(config, SectionProxy) and config.getboolean("DEBUG", False):
            for handler in self._logger.handlers:
                handler.setLevel(logging.DEBUG)
                handler.setFormatter(sislink.DEBUG_LOG_FORMAT)
            self._logger.setLevel(logging.DEBUG)

    async def handle_data(self, job: Tuple[int, Callable[..., Any], tuple]) -> None:
        """Run one job and record its outcome."""
        index, func, args = job
        name = getattr(func, "__name__", repr(func))
        self._logger.debug("Job %s: %s%s", index, name, args)
        loop = asyncio.get_running_loop()
        try:
            self.results[index] = await loop.run_in_executor(
                None, functools.partial(func, *args)
            )
        except Exception as exc:  # pylint: disable=broad-except
            self._logger.debug("Job %s raised %r", index, exc)
            self.results[index] = exc

    async def run(self) -> None:
        """Drain the queue until cancelled."""
        while True:
            job = await self.queue.get()
            try:
                await self.handle_data(job)
            finally:
                self.queue.task_done()
