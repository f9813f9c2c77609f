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

"""SISLINK Exact Arithmetic Tests."""

import cmath
import random

import pytest

from sympy import Rational

from sislink.classes import DimensionError, SingularMatrixError, ValidationError
from sislink.exactmath import (
    compose_power,
    det,
    derivative,
    divmod_t_minus_one,
    evaluate,
    int_matrix,
    is_palindromic,
    nontrivial_factors,
    poly_add,
    poly_coeffs,
    poly_divmod,
    poly_from_coeffs,
    poly_mul,
    rational_str,
    reduce_mod_cyclic,
    smith_normal_form,
    solve_rational,
)


__author__ = "Greg Albrecht <oss@undef.net>"
__copyright__ = "Copyright Sensors & Signals LLC https://www.snstac.com"
__license__ = "Apache License, Version 2.0"


@pytest.fixture
def e8_rows():
    """Intersection matrix of E8: center 0, legs 1 / 2-3 / 4-5-6-7."""
    edges = [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)]
    rows = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for u, w in edges:
        rows[u][w] = rows[w][u] = 1
    return rows


def _cofactor_det(rows):
    if not rows:
        return 1
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, entry in enumerate(rows[0]):
        if entry:
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            total += (-1) ** j * entry * _cofactor_det(minor)
    return total


def test_det_small():
    """Test `det()` on 1x1 and empty matrices."""
    assert det(int_matrix([[-5]])) == -5
    assert det(int_matrix([[7]])) == 7
    assert det(int_matrix([])) == 1


def test_det_e8(e8_rows):
    """Test that -M(E8) is unimodular."""
    assert det(int_matrix([[-x for x in row] for row in e8_rows])) == 1


def test_det_not_square():
    """Test that a non-square matrix is rejected."""
    with pytest.raises(DimensionError):
        det(int_matrix([[1, 2, 3], [4, 5, 6]]))


def test_det_matches_snf_and_cofactors():
    """Test |det| = product of invariant factors on random small matrices."""
    rng = random.Random(1729)
    for _ in range(60):
        size = rng.randint(1, 6)
        rows = [[rng.randint(-4, 4) for _ in range(size)] for _ in range(size)]
        value = det(int_matrix(rows))
        assert value == _cofactor_det(rows)
        factors = smith_normal_form(int_matrix(rows))
        assert len(factors) == size
        if value:
            product = 1
            for factor in factors:
                product *= factor
            assert product == abs(value)
            for smaller, larger in zip(factors, factors[1:]):
                assert larger % smaller == 0
        else:
            assert factors[-1] == 0


def test_smith_normal_form():
    """Test invariant factors of diagonal and non-canonical inputs."""
    assert smith_normal_form(int_matrix([[-4]])) == [4]
    assert smith_normal_form(int_matrix([[2, 0], [0, 3]])) == [1, 6]
    assert smith_normal_form(int_matrix([[6, 0], [0, 4]])) == [2, 12]
    assert nontrivial_factors([1, 1, 2, 6]) == (2, 6)
    assert smith_normal_form(int_matrix([[0, 0], [0, 0]])) == [0, 0]


def test_solve_rational(e8_rows):
    """Test exact solving, including the E8 canonical cycle."""
    identity = int_matrix([[1, 0], [0, 1]])
    assert solve_rational(identity, [3, Rational(1, 2)]) == [3, Rational(1, 2)]
    assert solve_rational(int_matrix([[-2]]), [0]) == [0]
    assert solve_rational(int_matrix(e8_rows), [0] * 8) == [0] * 8
    assert solve_rational(int_matrix([[2, 1], [1, 3]]), [1, 0]) == [
        Rational(3, 5),
        Rational(-1, 5),
    ]


def test_solve_singular():
    """Test that singular systems raise `SingularMatrixError`."""
    with pytest.raises(SingularMatrixError):
        solve_rational(int_matrix([[1, 2], [2, 4]]), [1, 1])


def test_poly_ops():
    """Test the polynomial helpers on small examples."""
    p = poly_from_coeffs([1, -1, 1])
    assert evaluate(p, 1) == 1
    assert poly_coeffs(compose_power(p, 6)) == [1, 0, 0, 0, 0, 0, -1] + [0] * 5 + [1]
    assert poly_coeffs(reduce_mod_cyclic(poly_from_coeffs([0] * 7 + [1]), 5)) == [
        0,
        0,
        1,
    ]
    assert poly_coeffs(poly_add(p, poly_from_coeffs([0, 1]))) == [1, 0, 1]
    assert poly_coeffs(poly_mul(p, poly_from_coeffs([1, 1]))) == [1, 0, 0, 1]
    assert poly_coeffs(derivative(p)) == [-1, 2]
    assert evaluate(p, Rational(1, 2)) == Rational(3, 4)
    assert poly_coeffs(poly_from_coeffs([])) == []
    assert is_palindromic(p)
    assert not is_palindromic(poly_from_coeffs([1, 2]))


def test_divmod_t_minus_one():
    """Test division by (t - 1)^2 reconstructs the dividend."""
    p = poly_from_coeffs([1, -1, 1])
    quotient, remainder = divmod_t_minus_one(p, 2)
    assert poly_coeffs(quotient) == [1]
    assert poly_coeffs(remainder) == [0, 1]
    square = poly_from_coeffs([1, -2, 1])
    assert poly_add(poly_mul(quotient, square), remainder) == p


def test_poly_divmod_by_zero():
    """Test that division by the zero polynomial is rejected."""
    with pytest.raises(ValidationError):
        poly_divmod(poly_from_coeffs([1, 1]), poly_from_coeffs([]))


def test_reduce_mod_cyclic_preserves_root_values():
    """Test that folding exponents keeps values at d-th roots of unity."""
    rng = random.Random(7)
    for d in range(2, 13):
        coeffs = [rng.randint(-3, 3) for _ in range(3 * d + 2)]
        p = poly_from_coeffs(coeffs)
        folded = poly_coeffs(reduce_mod_cyclic(p, d))
        assert evaluate(reduce_mod_cyclic(p, d), 1) == evaluate(p, 1)
        for k in range(d):
            root = cmath.exp(2j * cmath.pi * k / d)
            direct = sum(c * root**e for e, c in enumerate(coeffs))
            reduced = sum(c * root**e for e, c in enumerate(folded))
            assert abs(direct - reduced) < 1e-9


def test_rational_str():
    """Test p/q rendering."""
    assert rational_str(Rational(-21, 2)) == "-21/2"
    assert rational_str(Rational(8)) == "8"
    assert rational_str(3) == "3"
