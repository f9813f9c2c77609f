#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# exactmath.py from https://github.com/snstac/sislink
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

"""SISLINK exact arithmetic: integer matrices, invariant factors, polynomials.

Everything here is exact. Matrices are sympy ``DomainMatrix`` objects over
``ZZ`` (or ``QQ`` for solving), polynomials are ``Poly`` objects over ``ZZ`` in
the generator ``T``.
"""

import logging

from typing import Dict, List, Sequence, Tuple, Union

from sympy import Poly, QQ, Rational, Symbol, ZZ, factorint
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from .classes import DimensionError, SingularMatrixError, ValidationError

__all__ = [
    "T",
    "int_matrix",
    "matrix_rows",
    "det",
    "smith_normal_form",
    "nontrivial_factors",
    "solve_rational",
    "poly_from_coeffs",
    "poly_coeffs",
    "poly_add",
    "poly_mul",
    "poly_divmod",
    "compose_power",
    "divmod_t_minus_one",
    "derivative",
    "evaluate",
    "reduce_mod_cyclic",
    "is_palindromic",
    "rational_str",
]

Number = Union[int, Rational]

T = Symbol("t")

_logger = logging.getLogger(__name__)


def int_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    """Build an integer matrix from a list of rows."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    for row in rows:
        if len(row) != ncols:
            raise DimensionError("Ragged rows in integer matrix.")
    data = [[ZZ(int(x)) for x in row] for row in rows]
    return DomainMatrix(data, (nrows, ncols), ZZ)


def matrix_rows(m: DomainMatrix) -> List[List[int]]:
    """Integer rows of an integer matrix."""
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return [[] for _ in range(nrows)]
    return [[int(x) for x in row] for row in m.to_list()]


def _require_square(m: DomainMatrix) -> int:
    nrows, ncols = m.shape
    if nrows != ncols:
        raise DimensionError(f"Expected a square matrix, got {nrows}x{ncols}.")
    return nrows


def det(m: DomainMatrix) -> int:
    """Exact determinant (fraction-free Bareiss elimination over ZZ)."""
    if _require_square(m) == 0:
        return 1
    return int(m.det())


def _canonical_chain(diagonal: Sequence[int]) -> List[int]:
    """Rebuild the divisibility chain from any diagonal presentation.

    The group Z/d_1 + ... + Z/d_r only depends on the multiset of prime powers
    of its entries, so the chain is reassembled from those. Zero entries are
    free summands and go last.
    """
    free = sum(1 for x in diagonal if x == 0)
    finite = [abs(int(x)) for x in diagonal if x != 0]
    exponents: Dict[int, List[int]] = {}
    for value in finite:
        for prime, power in factorint(value).items():
            exponents.setdefault(prime, []).append(power)
    chain = [1] * len(finite)
    for prime, powers in exponents.items():
        powers.sort()
        # Largest powers go to the last factors.
        for offset, power in enumerate(reversed(powers)):
            chain[len(finite) - 1 - offset] *= prime**power
    return chain + [0] * free


def smith_normal_form(m: DomainMatrix) -> List[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix, 1s included.

    Zero factors (free summands of the cokernel) come last. The list has
    ``min(rows, cols)`` entries.
    """
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return []
    factors = [int(x) for x in invariant_factors(m)]
    factors += [0] * (min(nrows, ncols) - len(factors))
    return _canonical_chain(factors)


def nontrivial_factors(factors: Sequence[int]) -> Tuple[int, ...]:
    """Drop the unit factors from an invariant factor list."""
    return tuple(f for f in factors if f != 1)


def solve_rational(m: DomainMatrix, b: Sequence[Number]) -> List[Rational]:
    """Exact solution of ``m x = b`` for a nonsingular square ``m``."""
    size = _require_square(m)
    if len(b) != size:
        raise DimensionError(f"Right-hand side has {len(b)} entries, need {size}.")
    if size == 0:
        return []
    if det(m) == 0:
        raise SingularMatrixError("Matrix is singular.")
    mq = m.convert_to(QQ)
    rhs = DomainMatrix([[QQ.from_sympy(Rational(x))] for x in b], (size, 1), QQ)
    solution = mq.lu_solve(rhs)
    return [QQ.to_sympy(row[0]) for row in solution.to_list()]


def poly_from_coeffs(coeffs: Sequence[int]) -> Poly:
    """Polynomial from coefficients listed by increasing exponent."""
    terms = {(k,): int(c) for k, c in enumerate(coeffs) if c}
    if not terms:
        return Poly(0, T, domain=ZZ)
    return Poly.from_dict(terms, T, domain=ZZ)


def poly_coeffs(p: Poly) -> List[int]:
    """Coefficients by increasing exponent; the zero polynomial gives []."""
    if p.is_zero:
        return []
    return [int(c) for c in reversed(p.all_coeffs())]


def poly_add(p: Poly, q: Poly) -> Poly:
    return p.add(q)


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p.mul(q)


def poly_divmod(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    """Quotient and remainder; the divisor must be monic up to sign."""
    if q.is_zero:
        raise ValidationError("Polynomial division by zero.")
    if abs(int(q.LC())) != 1:
        raise ValidationError("Divisor must have leading coefficient +-1 over ZZ.")
    quotient, remainder = p.div(q)
    return quotient, remainder


def compose_power(p: Poly, k: int) -> Poly:
    """p(t^k)."""
    if k < 1:
        raise ValidationError(f"Exponent must be positive, got {k}.")
    if p.is_zero:
        return p
    terms = {(exp * k,): int(c) for (exp,), c in p.terms()}
    return Poly.from_dict(terms, T, domain=ZZ)


def divmod_t_minus_one(p: Poly, j: int) -> Tuple[Poly, Poly]:
    """Quotient and remainder of ``p`` by ``(t - 1)**j``."""
    return poly_divmod(p, Poly((T - 1) ** j, T, domain=ZZ))


def derivative(p: Poly) -> Poly:
    return p.diff(T)


def evaluate(p: Poly, value: Number) -> Rational:
    """Exact value of ``p`` at a rational point."""
    return Rational(p.eval(Rational(value)))


def reduce_mod_cyclic(p: Poly, d: int) -> Poly:
    """Remainder of ``p`` modulo ``t^d - 1``: exponents fold onto e mod d."""
    if d < 1:
        raise ValidationError(f"Cyclic modulus must be positive, got {d}.")
    folded: Dict[int, int] = {}
    if not p.is_zero:
        for (exp,), coeff in p.terms():
            folded[exp % d] = folded.get(exp % d, 0) + int(coeff)
    return poly_from_coeffs([folded.get(k, 0) for k in range(d)])


def is_palindromic(p: Poly) -> bool:
    """True when t^deg p(1/t) = p(t)."""
    coeffs = poly_coeffs(p)
    return coeffs == coeffs[::-1]


def rational_str(value: Number) -> str:
    """Render as ``p/q`` (or ``p`` for integers)."""
    value = Rational(value)
    if value.q == 1:
        return str(value.p)
    return f"{value.p}/{value.q}"
