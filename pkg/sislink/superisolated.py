#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# superisolated.py from https://github.com/snstac/sislink
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

"""SISLINK superisolated singularities.

Resolution graphs built from a degree and a cusp list, the closed-form
invariants of a rational cuspidal curve, and the Seiberg-Witten invariant
verdict built from the Casson-Walker invariant and Reidemeister-Turaev torsion.
"""

import functools
import logging

from typing import Any, List, Optional, Tuple, Union

import mpmath

from sympy import Poly, Rational, ZZ

import sislink

from .branch import alexander, parse_sequence_list, plane_branch
from .classes import (
    ClosedForms,
    ConsistencyError,
    InvariantReport,
    PlaneBranch,
    PlumbingGraph,
    SISInput,
    TableRow,
    ValidationError,
)
from .data_functions import get_catalog
from .exactmath import (
    T,
    compose_power,
    derivative,
    divmod_t_minus_one,
    evaluate,
    poly_coeffs,
    reduce_mod_cyclic,
)
from .plumbing import canonical_k2s, homology

__all__ = [
    "validate",
    "build_graph",
    "closed_forms",
    "char_poly",
    "casson_walker",
    "root_of_unity_sums",
    "torsion",
    "sw_verdict",
    "catalog",
    "row_from_report",
    "table",
]

_logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=256)
def validate(sis: SISInput) -> Tuple[PlaneBranch, ...]:
    """Check that ``sis`` describes a rational cuspidal curve of degree d.

    The Milnor numbers of the cusps must add up to (d - 1)(d - 2), and no cusp
    may have multiplicity d or more.
    """
    d = sis.d
    if d < 3:
        raise ValidationError(f"Degree must be at least 3, got d = {d}.")
    if not sis.cusps:
        raise ValidationError("At least one cusp is needed.")
    for cusp in sis.cusps:
        if cusp.multiplicity > d - 1:
            raise ValidationError(
                f"Cusp {cusp} has multiplicity {cusp.multiplicity} > d - 1 = {d - 1}."
            )
    branches = tuple(plane_branch(cusp) for cusp in sis.cusps)
    total = sum(branch.milnor for branch in branches)
    needed = (d - 1) * (d - 2)
    if total != needed:
        raise ValidationError(
            f"Milnor numbers of {sis.cusps_text} sum to {total}, "
            f"but a rational cuspidal curve of degree {d} needs {needed}."
        )
    return branches


def build_graph(sis: SISInput) -> PlumbingGraph:
    """Minimal good resolution graph; the central curve gets id 0.

    Each cusp's embedded resolution graph is hung off the central vertex at
    its arrow vertex. The central Euler number is -d minus the arrow
    multiplicities.
    """
    branches = validate(sis)
    vertices = []
    edges = []
    central = -sis.d
    next_id = 1
    for branch in branches:
        resolution = branch.resolution
        offset = {vid: next_id + i for i, vid in enumerate(resolution.graph.vertices)}
        next_id += len(offset)
        for vid, new in offset.items():
            vertices.append((new, resolution.graph.euler(vid)))
        edges.extend((offset[u], offset[w]) for u, w in resolution.graph.edges)
        edges.append((0, offset[resolution.arrow_vertex]))
        central -= resolution.arrow_multiplicity
    vertices.insert(0, (0, central))
    return PlumbingGraph.from_data(vertices, edges)


def closed_forms(sis: Union[SISInput, int]) -> ClosedForms:
    """K^2+s, mu, p_g and |H| as functions of the degree alone."""
    d = sis.d if isinstance(sis, SISInput) else int(sis)
    return ClosedForms(
        k2s=-d * (d - 2) ** 2 + 1,
        mu=(d - 1) ** 3 + (d - 1) * (d - 2),
        pg=d * (d - 1) * (d - 2) // 6,
        h_order=d,
    )


def _cusp_product(branches: Tuple[PlaneBranch, ...]) -> Poly:
    product = Poly(1, T, domain=ZZ)
    for branch in branches:
        product = product * alexander(branch)
    return product


def char_poly(sis: SISInput) -> Poly:
    """Characteristic polynomial (t^d - 1)/(t - 1) * prod Delta_i(t^(d+1))."""
    branches = validate(sis)
    result = Poly(sum(T**k for k in range(sis.d)), T, domain=ZZ)
    for branch in branches:
        result = result * compose_power(alexander(branch), sis.d + 1)
    return result


def _symmetrized_second_derivative(p: Poly, delta: int) -> Rational:
    """(t^-delta p(t))'' at t = 1."""
    first = evaluate(derivative(p), 1)
    second = evaluate(derivative(derivative(p)), 1)
    return delta * (delta + 1) * evaluate(p, 1) - 2 * delta * first + second


def casson_walker(sis: SISInput) -> Rational:
    """Casson-Walker invariant -1/2 * Delta''(1) + (d - 1)(d - 2)/24.

    Delta is the product of the cusp Alexander polynomials, symmetrized as a
    whole; the sum of the per-cusp values must agree.
    """
    branches = validate(sis)
    delta_total = sum(branch.delta for branch in branches)
    whole = _symmetrized_second_derivative(_cusp_product(branches), delta_total)
    parts = sum(
        (
            _symmetrized_second_derivative(alexander(branch), branch.delta)
            for branch in branches
        ),
        Rational(0),
    )
    if whole != parts:
        raise ConsistencyError(
            f"Symmetrized second derivatives disagree for {sis.cusps_text}: "
            f"{whole} != {parts}."
        )
    d = sis.d
    return -whole / 2 + Rational((d - 1) * (d - 2), 24)


def root_of_unity_sums(d: int) -> Tuple[Rational, Rational]:
    """Sums of 1/(x - 1) and 1/(x - 1)^2 over d-th roots of unity x != 1."""
    if d < 1:
        raise ValidationError(f"Order must be positive, got {d}.")
    return Rational(-(d - 1), 2), Rational(-(d - 1) * (d - 5), 12)


@functools.lru_cache(maxsize=1)
def check_root_of_unity_sums(
    max_d: int = sislink.ROOT_SUM_CHECK_MAX_D, dps: int = sislink.ROOT_SUM_CHECK_DPS
) -> bool:
    """Compare the closed forms against high-precision sums, once per process."""
    with mpmath.workdps(dps):
        tolerance = mpmath.mpf(10) ** (-(dps // 2))
        for d in range(2, max_d + 1):
            roots = mpmath.unitroots(d)[1:]
            exact = root_of_unity_sums(d)
            numeric = (
                mpmath.fsum(1 / (x - 1) for x in roots),
                mpmath.fsum(1 / (x - 1) ** 2 for x in roots),
            )
            for value, approx in zip(exact, numeric):
                if abs(approx - mpmath.mpf(value.p) / value.q) > tolerance:
                    raise ConsistencyError(
                        f"Root of unity sum for d={d} is {approx}, closed form {value}."
                    )
    _logger.debug("Root of unity sums verified for d <= %s", max_d)
    return True


def torsion(sis: SISInput) -> Rational:
    """Reidemeister-Turaev torsion (1/d) sum P(x)/(x - 1)^2 over x^d = 1, x != 1.

    P is the product of the cusp Alexander polynomials reduced mod t^d - 1 and
    written as Q (t - 1)^2 + a1 (t - 1) + a0. Q sums to d times its
    coefficients at exponents divisible by d, minus Q(1).
    """
    check_root_of_unity_sums()
    d = sis.d
    branches = validate(sis)
    reduced = reduce_mod_cyclic(_cusp_product(branches), d)
    quotient, remainder = divmod_t_minus_one(reduced, 2)
    rem = poly_coeffs(remainder) + [0, 0]
    a1, a0 = rem[1], rem[0] + rem[1]
    if a0 != 1:
        raise ConsistencyError(f"Cusp product of {sis.cusps_text} is not 1 at t=1.")
    coeffs = poly_coeffs(quotient)
    quotient_sum = d * sum(coeffs[::d]) - sum(coeffs)
    s1, s2 = root_of_unity_sums(d)
    return (quotient_sum + a1 * s1 + a0 * s2) / d


def sw_verdict(sis: SISInput) -> InvariantReport:
    """Every invariant of the singularity and the Seiberg-Witten verdict.

    Graph-derived |H| and K^2+s are checked against their closed forms.
    A non-integral right-hand side is logged and reported as failing.
    """
    validate(sis)
    graph = build_graph(sis)
    forms = closed_forms(sis)

    h_order = homology(graph).order
    _, k2s = canonical_k2s(graph)
    if h_order != forms.h_order or k2s != forms.k2s:
        raise ConsistencyError(
            f"Graph of {sis.cusps_text} gives |H|={h_order}, K^2+s={k2s}; closed "
            f"forms give {forms.h_order}, {forms.k2s}."
        )

    delta_f = char_poly(sis)
    if delta_f.degree() != forms.mu or evaluate(delta_f, 1) != sis.d:
        raise ConsistencyError(
            f"Characteristic polynomial of {sis.cusps_text} has degree "
            f"{delta_f.degree()}, expected mu = {forms.mu}."
        )
    if 12 * forms.pg != forms.mu - forms.k2s:
        raise ConsistencyError(f"Laufer identity fails for d = {sis.d}.")

    lam = casson_walker(sis)
    tor = torsion(sis)
    sw = -lam / h_order + tor
    rhs = sw - k2s / 8
    integral = rhs.q == 1
    if not integral:
        _logger.warning(
            "Non-integral sw - (K^2+s)/8 = %s for d=%s %s",
            sislink.rational_str(rhs),
            sis.d,
            sis.cusps_text,
        )
    return InvariantReport(
        sis=sis,
        graph=graph,
        h_order=h_order,
        k2s=k2s,
        mu=forms.mu,
        pg=forms.pg,
        delta_f=delta_f,
        casson_walker=lam,
        torsion=tor,
        sw=sw,
        swc_rhs=rhs,
        swc_holds=integral and rhs == forms.pg,
        swc_rhs_integral=integral,
    )


def catalog(d: int, catalog_file: str = "") -> List[SISInput]:
    """Bundled rational cuspidal curves of degree ``d``, in printed order."""
    catalogs = get_catalog(catalog_file)
    if d not in catalogs:
        raise ValidationError(
            f"No bundled catalog for d = {d}; available: {sorted(catalogs)}."
        )
    return [
        SISInput(d, tuple(parse_sequence_list(entry["cusps"])), entry["label"])
        for entry in catalogs[d]
    ]


def row_from_report(report: InvariantReport) -> TableRow:
    return TableRow(
        label=report.sis.label,
        cusps=report.sis.cusps_text,
        swc_holds=report.swc_holds,
        swc_rhs=report.swc_rhs,
        pg=report.pg,
    )


def table(d: int, config: Optional[Any] = None) -> List[TableRow]:
    """Verdict rows for the catalog of degree ``d``, computed by the worker pool."""
    from .functions import run_batch  # pylint: disable=import-outside-toplevel

    config = config if config is not None else {}
    entries = catalog(d, config.get("CATALOG_FILE", ""))
    reports = run_batch([(sw_verdict, (sis,)) for sis in entries], config)
    return [row_from_report(report) for report in reports]
