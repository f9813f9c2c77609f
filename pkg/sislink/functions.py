#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# functions.py from https://github.com/snstac/sislink
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

"""SISLINK functions: worker pool orchestration, rendering and fixture checks."""

import asyncio
import json
import logging
import os

from configparser import ConfigParser, SectionProxy
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

import sislink

from .branch import parse_sequence_list
from .classes import (
    BatchWorker,
    BrieskornTriple,
    CheckResult,
    Fixture,
    InvariantReport,
    Job,
    PlumbingGraph,
    SemigroupVerdict,
    SISInput,
    SpliceScanRow,
    TableRow,
)
from .data_functions import get_catalog, get_check_specs, get_fixtures
from .exactmath import poly_coeffs, rational_str
from .plumbing import (
    canonical_k2s,
    cycle_pairings,
    determinant,
    graph_to_json,
    homology,
    is_negative_definite,
    isomorphic,
    minimal_cycle,
    star_shape,
)
from .seifert import (
    brieskorn_graph,
    brieskorn_mu,
    brieskorn_pg,
    brieskorn_seifert,
    laufer_check,
    pinkham_pg,
    uac_brieskorn,
)
from .splice import semigroup_condition, splice_diagram
from .superisolated import (
    build_graph,
    catalog,
    closed_forms,
    row_from_report,
    sw_verdict,
    validate,
)

Config = Union[dict, SectionProxy]

_logger = logging.getLogger(__name__)


def default_config(config_file: str = "", debug: bool = False) -> SectionProxy:
    """Load the ``[sislink]`` section of an INI file, with defaults filled in.

    Parameters
    ----------
    config_file : Path of the INI file, or "" for defaults only.
    debug : Force ``DEBUG = true``.

    Returns
    -------
    `SectionProxy`
        The ``[sislink]`` section.
    """
    parser = ConfigParser()
    if config_file:
        if not parser.read(config_file, encoding="UTF-8"):
            raise sislink.ValidationError(f"Cannot read config file {config_file!r}.")
    if not parser.has_section(sislink.CONFIG_SECTION):
        parser.add_section(sislink.CONFIG_SECTION)
    config = parser[sislink.CONFIG_SECTION]
    config.setdefault("DEBUG", "false")
    config.setdefault("WORKERS", str(sislink.DEFAULT_WORKERS))
    config.setdefault("CATALOG_FILE", "")
    config.setdefault("FIXTURES_FILE", "")
    if debug:
        config["DEBUG"] = "true"
    return config


def _workers(config: Config) -> int:
    value = config.get("WORKERS", sislink.DEFAULT_WORKERS)
    try:
        count = int(value)
    except (TypeError, ValueError) as exc:
        raise sislink.ValidationError(
            f"WORKERS must be an integer, got {value!r}."
        ) from exc
    return max(1, count)


def create_workers(
    queue: asyncio.Queue, config: Config, results: Dict[int, Any]
) -> List[BatchWorker]:
    """One :class:`BatchWorker` per configured ``WORKERS`` slot."""
    return [BatchWorker(queue, config, results) for _ in range(_workers(config))]


async def run_batch_async(jobs: Sequence[Job], config: Config) -> List[Any]:
    """Fan ``jobs`` out to the worker pool; results come back in job order.

    The first job (in order) that raised has its exception re-raised.
    """
    queue: asyncio.Queue = asyncio.Queue()
    results: Dict[int, Any] = {}
    for index, (func, args) in enumerate(jobs):
        queue.put_nowait((index, func, args))

    tasks = [
        asyncio.ensure_future(worker.run())
        for worker in create_workers(queue, config, results)
    ]
    try:
        await queue.join()
    finally:
        for task in tasks:
            task.cancel()
        await asyncio.gather(*tasks, return_exceptions=True)

    ordered = [results[index] for index in range(len(jobs))]
    for result in ordered:
        if isinstance(result, Exception):
            raise result
    return ordered


def run_batch(jobs: Sequence[Job], config: Optional[Config] = None) -> List[Any]:
    """Blocking wrapper around :func:`run_batch_async`."""
    return asyncio.run(run_batch_async(jobs, config if config is not None else {}))


def report_to_dict(report: InvariantReport) -> Dict[str, Any]:
    return {
        "d": report.sis.d,
        "cusps": report.sis.cusps_text,
        "h_order": report.h_order,
        "k2s": rational_str(report.k2s),
        "mu": report.mu,
        "pg": report.pg,
        "delta_f": poly_coeffs(report.delta_f),
        "casson_walker": rational_str(report.casson_walker),
        "torsion": rational_str(report.torsion),
        "sw": rational_str(report.sw),
        "swc_rhs": rational_str(report.swc_rhs),
        "swc_rhs_integral": report.swc_rhs_integral,
        "swc_holds": report.swc_holds,
    }


def render_report(report: InvariantReport) -> str:
    """Aligned text block for ``sis report``."""
    lines = [
        ("d", str(report.sis.d)),
        ("cusps", report.sis.cusps_text),
        ("vertices", str(len(report.graph))),
        ("|H|", str(report.h_order)),
        ("K^2+s", rational_str(report.k2s)),
        ("mu", str(report.mu)),
        ("p_g", str(report.pg)),
        ("deg Delta_f", str(report.delta_f.degree())),
        ("lambda", rational_str(report.casson_walker)),
        ("T", rational_str(report.torsion)),
        ("sw", rational_str(report.sw)),
        ("sw-(K^2+s)/8", rational_str(report.swc_rhs)),
        ("SWC", "TRUE" if report.swc_holds else "FALSE"),
    ]
    if not report.swc_rhs_integral:
        lines.append(("warning", "sw-(K^2+s)/8 is not an integer"))
    width = max(len(key) for key, _ in lines)
    return "\n".join(f"{key.ljust(width)} = {value}" for key, value in lines)


def table_to_dicts(rows: Sequence[TableRow]) -> List[Dict[str, Any]]:
    return [
        {
            "label": row.label,
            "cusps": row.cusps,
            "swc_holds": row.swc_holds,
            "swc_rhs": rational_str(row.swc_rhs),
            "pg": row.pg,
            "verdict": row.verdict,
        }
        for row in rows
    ]


def render_table(rows: Sequence[TableRow]) -> str:
    """Label, cusps and verdict columns, aligned."""
    header = ("label", "cusps", "verdict")
    body = [(row.label, row.cusps, row.verdict) for row in rows]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(3)]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(r, widths)).rstrip()
        for r in [header] + body
    )


def scan_to_dicts(rows: Sequence[SpliceScanRow]) -> List[Dict[str, Any]]:
    return [
        {
            "label": row.label,
            "cusps": row.cusps,
            "n_cusps": row.n_cusps,
            "central_is_node": row.central_is_node,
            "central_fails": row.central_fails,
            "passes": row.passes,
        }
        for row in rows
    ]


def render_scan(rows: Sequence[SpliceScanRow]) -> str:
    """Label, cusps and semigroup columns, aligned like :func:`render_table`."""
    header = ("label", "cusps", "central", "semigroup")
    body = [
        (
            row.label,
            row.cusps,
            ("node, fails" if row.central_fails else "node")
            if row.central_is_node
            else "-",
            "PASS" if row.passes else "FAIL",
        )
        for row in rows
    ]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(4)]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(r, widths)).rstrip()
        for r in [header] + body
    )


def render_cycle(g: PlumbingGraph, cycle: Dict[int, Any]) -> str:
    return "\n".join(
        f"{vid}: {rational_str(cycle[vid])}" for vid in g.vertices
    )


def _parse_sis(d: int, cusps: str, label: str = "") -> SISInput:
    return SISInput(int(d), tuple(parse_sequence_list(cusps)), label)


def _source_graph(source: Dict[str, Any]) -> Optional[PlumbingGraph]:
    if "sis" in source:
        return build_graph(_parse_sis(source["sis"]["d"], source["sis"]["cusps"]))
    if "brieskorn" in source:
        return brieskorn_graph(BrieskornTriple(*source["brieskorn"]))
    return None


def _star_shape_dict(g: PlumbingGraph) -> Dict[str, Any]:
    data = star_shape(g)
    return {"b": data.b, "legs": sorted(list(leg) for leg in data.legs)}


def _failure_at(verdict: SemigroupVerdict, node: int, toward: int) -> Any:
    for failure in verdict.failures:
        if failure.node == node and failure.toward == toward:
            return {
                "node": failure.node,
                "toward": failure.toward,
                "weight": failure.weight,
                "generators": list(failure.generators),
            }
    return None


def _zmin_pairing(g: PlumbingGraph) -> List[int]:
    pairings = cycle_pairings(g, minimal_cycle(g))
    return [int(pairings[vid]) for vid in g.vertices]


_FIXTURE_CHECKS: Dict[str, Callable[[Fixture, Any], Any]] = {
    "det": lambda fx, _: determinant(fx.graph),
    "homology": lambda fx, _: list(homology(fx.graph).factors),
    "k2s": lambda fx, _: rational_str(canonical_k2s(fx.graph)[1]),
    "negative_definite": lambda fx, _: is_negative_definite(fx.graph),
    "star_shape": lambda fx, _: _star_shape_dict(fx.graph),
    "pinkham_pg": lambda fx, _: pinkham_pg(star_shape(fx.graph)),
    "zmin": lambda fx, _: [minimal_cycle(fx.graph)[vid] for vid in fx.graph.vertices],
    "zmin_pairing": lambda fx, _: _zmin_pairing(fx.graph),
    "isomorphic_to_source": lambda fx, _: isomorphic(
        fx.graph, _source_graph(dict(fx.source))
    ),
    "semigroup_passes": lambda fx, _: semigroup_condition(
        splice_diagram(fx.graph)
    ).passes,
    "semigroup_witness": lambda fx, exp: _failure_at(
        semigroup_condition(splice_diagram(fx.graph)), exp["node"], exp["toward"]
    ),
}


def check_fixture(fixture: Fixture) -> List[CheckResult]:
    """Compare every expected value of a graph fixture with its computation."""
    results = []
    for key, expected in fixture.expected.items():
        if key not in _FIXTURE_CHECKS:
            raise sislink.ValidationError(
                f"Fixture {fixture.name} has an unknown check {key!r}."
            )
        actual = _FIXTURE_CHECKS[key](fixture, expected)
        results.append(CheckResult(fixture.name, key, expected, actual))
    return results


def check_sis(item: Dict[str, Any]) -> List[CheckResult]:
    """Expected invariants of one superisolated singularity."""
    report = report_to_dict(sw_verdict(_parse_sis(item["d"], item["cusps"])))
    return [
        CheckResult(item["name"], key, expected, report[key])
        for key, expected in item["expected"].items()
    ]


def check_closed_forms(item: Dict[str, Any]) -> List[CheckResult]:
    forms = closed_forms(int(item["d"]))
    actual = {
        "k2s": forms.k2s,
        "mu": forms.mu,
        "pg": forms.pg,
        "h_order": forms.h_order,
        "laufer": laufer_check(forms.mu, forms.pg, forms.k2s),
    }
    return [
        CheckResult(item["name"], key, expected, actual[key])
        for key, expected in item["expected"].items()
    ]


def _brieskorn_values(triple: BrieskornTriple) -> Dict[str, Any]:
    graph = brieskorn_graph(triple)
    data = brieskorn_seifert(triple)
    k2s = canonical_k2s(graph)[1]
    mu = brieskorn_mu(triple)
    pg = brieskorn_pg(triple)
    return {
        "triple": list(triple),
        "seifert": str(data),
        "homology": list(homology(graph).factors),
        "det": determinant(graph),
        "k2s": rational_str(k2s),
        "mu": mu,
        "pg": pg,
        "pinkham_pg": pinkham_pg(data),
        "laufer": laufer_check(mu, pg, k2s),
    }


def check_uac(item: Dict[str, Any]) -> List[CheckResult]:
    """Brieskorn model of the cover of a one-cusp superisolated singularity."""
    sis = _parse_sis(item["d"], item["cusp"])
    actual = _brieskorn_values(uac_brieskorn(sis.d, validate(sis)))
    return [
        CheckResult(item["name"], key, expected, actual[key])
        for key, expected in item["expected"].items()
    ]


def check_brieskorn(item: Dict[str, Any]) -> List[CheckResult]:
    actual = _brieskorn_values(BrieskornTriple(*item["triple"]))
    return [
        CheckResult(item["name"], key, expected, actual[key])
        for key, expected in item["expected"].items()
    ]


def check_catalog(d: int, config: Config) -> List[CheckResult]:
    """Every bundled verdict of degree ``d`` against the computed one."""
    catalog_file = config.get("CATALOG_FILE", "")
    sis_inputs = catalog(d, catalog_file)
    entries = get_catalog(catalog_file)[d]
    rows = [row_from_report(sw_verdict(sis)) for sis in sis_inputs]
    return [
        CheckResult(
            f"catalog-d{d}-{row.label}", "verdict", entry["verdict"], row.verdict
        )
        for entry, row in zip(entries, rows)
        if "verdict" in entry
    ]


_CHECKERS: Dict[str, Callable[[Dict[str, Any]], List[CheckResult]]] = {
    "sis_checks": check_sis,
    "closed_form_checks": check_closed_forms,
    "uac_checks": check_uac,
    "brieskorn_checks": check_brieskorn,
}


def verify_fixtures(config: Optional[Config] = None) -> List[CheckResult]:
    """Run every bundled expectation through the worker pool."""
    config = config if config is not None else {}
    fixtures_file = config.get("FIXTURES_FILE", "")
    jobs: List[Job] = [
        (check_fixture, (fixture,)) for fixture in get_fixtures(fixtures_file).values()
    ]
    for section, items in get_check_specs(fixtures_file).items():
        jobs.extend((_CHECKERS[section], (item,)) for item in items)
    plain = {"CATALOG_FILE": config.get("CATALOG_FILE", "")}
    jobs.extend((check_catalog, (d, plain)) for d in sislink.CATALOG_DEGREES)

    results: List[CheckResult] = []
    for batch in run_batch(jobs, config):
        results.extend(batch)
    for result in results:
        if not result.passed:
            _logger.error(
                "%s %s: expected %r, got %r",
                result.name,
                result.check,
                result.expected,
                result.actual,
            )
    return results


def dump_fixtures(out_dir: str, config: Optional[Config] = None) -> List[str]:
    """Write each fixture graph to ``<out_dir>/<name>.json``."""
    config = config if config is not None else {}
    fixtures = get_fixtures(config.get("FIXTURES_FILE", ""))
    written = []
    try:
        os.makedirs(out_dir, exist_ok=True)
        for name, fixture in fixtures.items():
            path = os.path.join(out_dir, f"{name}.json")
            with open(path, "w", encoding="UTF-8") as json_fd:
                json_fd.write(graph_to_json(fixture.graph) + "\n")
            written.append(path)
    except OSError as exc:
        raise sislink.ValidationError(
            f"Cannot write fixtures to {out_dir!r}: {exc.strerror or exc}"
        ) from exc
    return written


def check_results_to_json(results: Sequence[CheckResult]) -> str:
    return json.dumps(
        [
            {
                "name": r.name,
                "check": r.check,
                "expected": r.expected,
                "actual": r.actual,
                "passed": r.passed,
            }
            for r in results
        ],
        indent=2,
        default=str,
    )
