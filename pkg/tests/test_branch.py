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

"""SISLINK Plane Branch Tests."""

import pytest

from sislink.branch import (
    alexander,
    newton_pairs,
    parse_sequence,
    parse_sequence_list,
    plane_branch,
    proximity,
    puiseux_characteristic,
    sequence_from_newton_pairs,
    torus_knot_alexander,
)
from sislink.classes import MultiplicitySequence, SequenceParseError, ValidationError
from sislink.exactmath import evaluate, is_palindromic, poly_coeffs
from sislink.plumbing import determinant
from sislink.superisolated import catalog


__author__ = "Greg Albrecht <oss@undef.net>"
__copyright__ = "Copyright Sensors & Signals LLC https://www.snstac.com"
__license__ = "Apache License, Version 2.0"


@pytest.fixture
def catalog_cusps():
    """Every distinct cusp of the bundled catalogs."""
    cusps = {}
    for d in (4, 5, 6):
        for sis in catalog(d):
            for cusp in sis.cusps:
                cusps[str(cusp)] = cusp
    return list(cusps.values())


def test_parse_sequence():
    """Test expansion of compressed notation."""
    assert parse_sequence("[4_2,2_3]").expanded == (4, 4, 2, 2, 2, 1, 1)
    assert parse_sequence("[3]").expanded == (3, 1, 1, 1)
    assert parse_sequence("[2_3]").expanded == (2, 2, 2, 1, 1)
    assert parse_sequence(" [ 3 _ 2 , 2 ] ").expanded == (3, 3, 2, 1, 1)


def test_parse_sequence_merges_runs():
    """Test that adjacent equal runs render back in compressed form."""
    assert str(parse_sequence("[2,2,2]")) == "[2_3]"
    assert str(parse_sequence("[4,2_4]")) == "[4,2_4]"


@pytest.mark.parametrize(
    "text", ["3", "[3", "[3,]", "[2,3]", "[1]", "[2_0]", "[x]", "[3] extra", "[]"]
)
def test_parse_sequence_errors(text):
    """Test that malformed notation raises `SequenceParseError`."""
    with pytest.raises(SequenceParseError):
        parse_sequence(text)


def test_parse_sequence_error_position():
    """Test that the error carries the offending position."""
    with pytest.raises(SequenceParseError) as excinfo:
        parse_sequence("[2,3]")
    assert excinfo.value.position > 0
    assert isinstance(excinfo.value, ValueError)


def test_parse_sequence_list():
    """Test a comma-separated list of cusps."""
    cusps = parse_sequence_list("[3],[2_3]")
    assert [str(c) for c in cusps] == ["[3]", "[2_3]"]
    assert len(parse_sequence_list("[2], [2] ,[2]")) == 3


def test_from_expanded():
    """Test compression of an expanded sequence."""
    seq = MultiplicitySequence.from_expanded([4, 2, 2, 2, 2, 1, 1])
    assert seq.compressed == ((4, 1), (2, 4))
    assert seq.multiplicity == 4


def test_proximity():
    """Test proximity sets of small sequences."""
    prox = proximity(parse_sequence("[2]"))
    assert prox[1] == {0} and prox[2] == {0, 1}
    prox = proximity(parse_sequence("[3]"))
    assert prox[1] == {0} and prox[2] == {0, 1} and prox[3] == {0, 2}
    prox = proximity(parse_sequence("[2_3]"))
    assert prox[1] == {0}
    assert prox[2] == {1}
    assert prox[3] == {2}
    assert prox[4] == {2, 3}


def test_proximity_invalid():
    """Test that a sequence without exact runs is rejected."""
    with pytest.raises(ValidationError):
        plane_branch(parse_sequence("[3,2_2]"))


def test_embedded_resolution_cusp():
    """Test the resolution of the ordinary cusp."""
    resolution = plane_branch(parse_sequence("[2]")).resolution
    graph = resolution.graph
    assert sorted(graph.euler(v) for v in graph.vertices) == [-3, -2, -1]
    assert graph.euler(resolution.arrow_vertex) == -1
    assert [resolution.multiplicities[v] for v in graph.vertices] == [2, 3, 6]
    assert resolution.arrow_multiplicity == 6


def test_embedded_resolution_multiplicities():
    """Test total multiplicities along the arrow vertex."""
    assert plane_branch(parse_sequence("[3]")).resolution.arrow_multiplicity == 12
    assert plane_branch(parse_sequence("[2_3]")).resolution.arrow_multiplicity == 14
    resolution = plane_branch(parse_sequence("[3]")).resolution
    graph = resolution.graph
    assert graph.valence(resolution.arrow_vertex) == 2
    assert sorted(graph.euler(v) for v in graph.vertices) == [-4, -2, -2, -1]


def test_alexander_cusp():
    """Test that the cusp has Alexander polynomial t^2 - t + 1."""
    assert poly_coeffs(alexander(plane_branch(parse_sequence("[2]")))) == [1, -1, 1]


@pytest.mark.parametrize(
    "text,pair",
    [("[2_3]", (2, 7)), ("[3]", (3, 4)), ("[2_6]", (2, 13)), ("[4]", (4, 5))],
)
def test_alexander_one_pair(text, pair):
    """Test one-pair branches against the torus knot closed form."""
    branch = plane_branch(parse_sequence(text))
    assert branch.newton_pairs == (pair,)
    assert branch.is_one_pair
    assert alexander(branch) == torus_knot_alexander(*pair)


def test_branch_properties(catalog_cusps):
    """Test mu = 2 delta = deg, value 1 at t = 1 and palindromy."""
    for cusp in catalog_cusps:
        branch = plane_branch(cusp)
        delta_poly = alexander(branch)
        assert branch.milnor == 2 * branch.delta == delta_poly.degree()
        assert evaluate(delta_poly, 1) == 1
        assert is_palindromic(delta_poly)
        graph = branch.resolution.graph
        eulers = [graph.euler(v) for v in graph.vertices]
        assert eulers.count(-1) == 1
        assert all(e <= -2 for e in eulers if e != -1)
        assert determinant(graph) == 1


def test_newton_pairs():
    """Test Newton pairs of one- and two-pair branches."""
    assert plane_branch(parse_sequence("[2_3]")).newton_pairs == ((2, 7),)
    assert plane_branch(parse_sequence("[3]")).newton_pairs == ((3, 4),)
    assert plane_branch(parse_sequence("[2]")).newton_pairs == ((2, 3),)
    seq = parse_sequence("[4,2_4]")
    assert plane_branch(seq).newton_pairs == ((2, 3), (2, 5))
    assert not plane_branch(seq).is_one_pair


def test_newton_pairs_direct():
    """Test `newton_pairs()` on a sequence and its proximity."""
    seq = parse_sequence("[10,2_7]")
    assert newton_pairs(seq, proximity(seq)) == ((5, 6), (2, 5))


def test_puiseux_round_trip():
    """Test Newton pairs -> Puiseux characteristic -> sequence -> pairs."""
    assert puiseux_characteristic([(5, 6), (2, 5)]) == (10, [12, 17])
    assert str(sequence_from_newton_pairs([(5, 6), (2, 5)])) == "[10,2_7]"
    for pairs in (
        [(2, 3)],
        [(2, 7)],
        [(3, 4)],
        [(2, 3), (2, 5)],
        [(3, 5), (2, 3)],
    ):
        seq = sequence_from_newton_pairs(pairs)
        assert plane_branch(seq).newton_pairs == tuple(pairs)


def test_puiseux_invalid():
    """Test that invalid Newton pairs are rejected."""
    with pytest.raises(ValidationError):
        puiseux_characteristic([])
    with pytest.raises(ValidationError):
        puiseux_characteristic([(2, 4)])
    with pytest.raises(ValidationError):
        puiseux_characteristic([(3, 2)])
