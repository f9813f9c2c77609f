#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# seifert.py from https://github.com/snstac/sislink
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

"""SISLINK star-shaped graphs: Seifert invariants and Brieskorn spheres."""

import logging

from math import gcd
from typing import List, Sequence, Tuple

from sympy import Rational, ilcm

from .classes import (
    BrieskornTriple,
    ConsistencyError,
    PlaneBranch,
    PlumbingGraph,
    SeifertData,
    UnsupportedGraphError,
    ValidationError,
)
from .plumbing import continued_fraction_value, determinant, hirzebruch_jung

__all__ = [
    "continued_fraction_value",
    "hirzebruch_jung",
    "pinkham_pg",
    "brieskorn_seifert",
    "brieskorn_graph",
    "seifert_to_graph",
    "brieskorn_mu",
    "brieskorn_pg",
    "laufer_check",
    "uac_brieskorn",
]

_logger = logging.getLogger(__name__)


def _ceil_div(num: int, den: int) -> int:
    return -(-num // den)


def pinkham_pg(s: SeifertData) -> int:
    """Geometric genus of the weighted homogeneous singularity with data ``s``.

    Sums max(0, -1 - l*b + sum ceil(l*beta_i/alpha_i)) over l >= 0. Terms past
    ceil((#legs - 1)/|e|) are negative and are not evaluated.
    """
    e = s.e
    if e >= 0:
        raise ValidationError(f"Pinkham's formula needs e < 0, got e = {e}.")
    bound = _ceil_div((len(s.legs) - 1) * e.q, abs(e.p))
    total = 0
    for level in range(max(bound, 0) + 1):
        term = -1 - level * s.b + sum(
            _ceil_div(level * beta, alpha) for alpha, beta in s.legs
        )
        if term > 0:
            _logger.debug("Pinkham term at l=%s: %s", level, term)
            total += term
    return total


def seifert_to_graph(s: SeifertData) -> PlumbingGraph:
    """Star-shaped graph: center (id 0) of Euler -b, one chain per leg."""
    vertices: List[Tuple[int, int]] = [(0, -s.b)]
    edges: List[Tuple[int, int]] = []
    next_id = 1
    for alpha, beta in s.legs:
        previous = 0
        for entry in hirzebruch_jung(alpha, beta):
            vertices.append((next_id, -entry))
            edges.append((previous, next_id))
            previous = next_id
            next_id += 1
    return PlumbingGraph.from_data(vertices, edges)


def brieskorn_seifert(t: BrieskornTriple) -> SeifertData:
    """Seifert invariants of the link of x^a1 + y^a2 + z^a3.

    For each exponent a_i with alpha_i = l/lcm(a_j, a_k) > 1 there are
    gcd(a_j, a_k) legs (alpha_i, beta_i), where (l/a_i) * beta_i = -1 mod alpha_i
    and l = lcm(a_1, a_2, a_3). The central weight follows from
    e = -a_1 a_2 a_3 / l^2. Only base genus zero is supported.
    """
    exps = tuple(t)
    lcm_all = int(ilcm(*exps))
    e = Rational(-exps[0] * exps[1] * exps[2], lcm_all**2)

    legs: List[Tuple[int, int]] = []
    cone_defect = Rational(0)
    for i, a_i in enumerate(exps):
        a_j, a_k = (exps[x] for x in range(3) if x != i)
        alpha = lcm_all // int(ilcm(a_j, a_k))
        if alpha == 1:
            continue
        count = gcd(a_j, a_k)
        unit = (lcm_all // a_i) % alpha
        if gcd(unit, alpha) != 1:
            raise UnsupportedGraphError(f"Unsupported Brieskorn triple {t}.")
        beta = (-pow(unit, -1, alpha)) % alpha
        legs.extend([(alpha, beta)] * count)
        cone_defect += count * (1 - Rational(1, alpha))

    orbifold_chi = -Rational(exps[0] * exps[1] * exps[2], lcm_all) * (
        1 - sum(Rational(1, a) for a in exps)
    )
    if orbifold_chi + cone_defect != 2:
        raise UnsupportedGraphError(
            f"Unsupported triple {t} (positive base genus suspected)."
        )

    b = sum((Rational(beta, alpha) for alpha, beta in legs), Rational(0)) - e
    if b.q != 1 or b < 1:
        raise UnsupportedGraphError(
            f"Unsupported triple {t}: central weight {b} is not a positive integer."
        )
    data = SeifertData(int(b), tuple(legs))

    product = 1
    for alpha, _ in data.legs:
        product *= alpha
    order = product * abs(data.e)
    if data.e != e or determinant(seifert_to_graph(data)) != order:
        raise ConsistencyError(f"Seifert data {data} does not match triple {t}.")
    _logger.debug("Brieskorn %s -> %s", t, data)
    return data


def brieskorn_graph(t: BrieskornTriple) -> PlumbingGraph:
    return seifert_to_graph(brieskorn_seifert(t))


def brieskorn_mu(t: BrieskornTriple) -> int:
    """Milnor number (a1 - 1)(a2 - 1)(a3 - 1)."""
    return (t.a1 - 1) * (t.a2 - 1) * (t.a3 - 1)


def brieskorn_pg(t: BrieskornTriple) -> int:
    """Positive lattice points with k1/a1 + k2/a2 + k3/a3 <= 1."""
    a1, a2, a3 = t
    whole = a1 * a2 * a3
    count = 0
    for k1 in range(1, a1):
        for k2 in range(1, a2):
            room = whole - k1 * a2 * a3 - k2 * a1 * a3
            if room < a1 * a2:
                break
            count += room // (a1 * a2)
    return count


def laufer_check(mu: int, pg: int, k2s: Rational) -> bool:
    """Laufer's identity 12 p_g = mu - (K^2 + s)."""
    return 12 * pg == mu - Rational(k2s)


def uac_brieskorn(d: int, cusps: Sequence[PlaneBranch]) -> BrieskornTriple:
    """Brieskorn model (p, q, pq + d) of the universal abelian cover.

    Only superisolated curves with a single one-pair cusp are covered.
    """
    if len(cusps) != 1 or not cusps[0].is_one_pair:
        raise UnsupportedGraphError(
            "Unsupported: general universal abelian cover construction out of scope."
        )
    p, q = cusps[0].newton_pairs[0]
    return BrieskornTriple(p, q, p * q + d)
