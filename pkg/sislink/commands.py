#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# commands.py from https://github.com/snstac/sislink
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

"""SISLINK Command Line."""

import argparse
import json
import logging
import sys

from typing import Callable, Dict, List, Optional

import sislink
import sislink.functions as func

from sislink import (
    BrieskornTriple,
    ConsistencyError,
    SISInput,
    ValidationError,
    parse_sequence_list,
    rational_str,
)
from sislink import plumbing, seifert, splice, superisolated
from sislink.data_functions import read_graph_file

_logger = logging.getLogger("sislink")


def _setup_logging(debug: bool) -> None:
    if not _logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(sislink.LOG_FORMAT)
        _logger.addHandler(handler)
    _logger.setLevel(sislink.LOG_LEVEL)
    if debug:
        _logger.setLevel(logging.DEBUG)
        for handler in _logger.handlers:
            handler.setFormatter(sislink.DEBUG_LOG_FORMAT)


def _sis_input(d: int, cusps: str) -> SISInput:
    return SISInput(d, tuple(parse_sequence_list(cusps)))


def _graph(args, config) -> "sislink.PlumbingGraph":
    return read_graph_file(args.graph, config.get("FIXTURES_FILE", ""))


def cmd_sis(args, config) -> int:
    if args.action == "report":
        report = superisolated.sw_verdict(_sis_input(args.d, args.cusps))
        if args.json:
            print(json.dumps(func.report_to_dict(report), indent=2))
        else:
            print(func.render_report(report))
        return sislink.EXIT_OK

    rows = superisolated.table(args.d, config)
    if args.json:
        print(json.dumps(func.table_to_dicts(rows), indent=2))
    else:
        print(func.render_table(rows))
    return sislink.EXIT_OK


def cmd_plumbing(args, config) -> int:
    graph = _graph(args, config)
    action = args.action
    if action == "det":
        print(plumbing.determinant(graph))
    elif action == "homology":
        group = plumbing.homology(graph)
        print(f"{group} (order {group.order})")
    elif action == "k2s":
        cycle, k2s = plumbing.canonical_k2s(graph)
        print(func.render_cycle(graph, cycle))
        print(f"K^2+s = {rational_str(k2s)}")
    elif action == "zmin":
        cycle = plumbing.minimal_cycle(graph)
        pairings = plumbing.cycle_pairings(graph, cycle)
        print("Z     = " + " ".join(str(cycle[vid]) for vid in graph.vertices))
        print("Z.E_v = " + " ".join(str(pairings[vid]) for vid in graph.vertices))
    elif action == "minimize":
        print(plumbing.graph_to_json(plumbing.minimize(graph)))
    elif action == "seifert":
        data = plumbing.star_shape(graph)
        print(f"{data} e = {rational_str(data.e)}")
    elif action == "dot":
        print(plumbing.graph_to_dot(graph), end="")
    else:
        print(plumbing.graph_to_json(graph))
    return sislink.EXIT_OK


def cmd_splice(args, config) -> int:
    if args.action == "scan":
        if args.d is None:
            raise ValidationError("splice scan needs --d.")
        rows = splice.sis_semigroup_scan(
            superisolated.catalog(args.d, config.get("CATALOG_FILE", ""))
        )
        if args.json:
            print(json.dumps(func.scan_to_dicts(rows), indent=2))
        else:
            print(func.render_scan(rows))
        return sislink.EXIT_OK

    if not args.graph:
        raise ValidationError("splice check needs --graph.")
    verdict = splice.semigroup_condition(splice.splice_diagram(_graph(args, config)))
    if args.json:
        print(splice.verdict_to_json(verdict))
    else:
        print("semigroup condition: " + ("PASS" if verdict.passes else "FAIL"))
        for failure in verdict.failures:
            print(
                f"  node {failure.node} toward {failure.toward}: weight "
                f"{failure.weight} not in <{', '.join(map(str, failure.generators))}>"
            )
    return sislink.EXIT_OK


def cmd_brieskorn(args, _config) -> int:
    triple = BrieskornTriple(*args.exponents)
    if args.action == "graph":
        print(seifert.brieskorn_seifert(triple))
        print(plumbing.graph_to_json(seifert.brieskorn_graph(triple)))
    elif args.action == "pg":
        print(seifert.brieskorn_pg(triple))
    else:
        print(seifert.brieskorn_mu(triple))
    return sislink.EXIT_OK


def cmd_seifert(args, config) -> int:
    print(seifert.pinkham_pg(plumbing.star_shape(_graph(args, config))))
    return sislink.EXIT_OK


def cmd_uac(args, _config) -> int:
    sis = _sis_input(args.d, args.cusp)
    triple = seifert.uac_brieskorn(sis.d, superisolated.validate(sis))
    group = plumbing.homology(seifert.brieskorn_graph(triple))
    print(f"Brieskorn {triple}, H_1 = {group}")
    return sislink.EXIT_OK


def cmd_fixtures(args, config) -> int:
    if args.action == "dump":
        for path in func.dump_fixtures(args.out, config):
            print(path)
        return sislink.EXIT_OK

    results = func.verify_fixtures(config)
    failed = [result for result in results if not result.passed]
    if args.json:
        print(func.check_results_to_json(results))
    else:
        for result in results:
            status = "ok  " if result.passed else "FAIL"
            print(f"{status} {result.name} {result.check}")
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return sislink.EXIT_CONSISTENCY if failed else sislink.EXIT_OK


PLUMBING_ACTIONS = [
    "det",
    "homology",
    "k2s",
    "zmin",
    "minimize",
    "seifert",
    "dot",
    "json",
]

COMMANDS: Dict[str, Callable] = {
    "sis": cmd_sis,
    "plumbing": cmd_plumbing,
    "splice": cmd_splice,
    "brieskorn": cmd_brieskorn,
    "seifert": cmd_seifert,
    "uac": cmd_uac,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sislink",
        description="Link invariants of superisolated surface singularities.",
    )
    parser.add_argument("-c", "--CONFIG_FILE", dest="config_file", default="")
    parser.add_argument("--debug", action="store_true")
    parser.add_argument("--version", action="version", version=sislink.__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sis = sub.add_parser("sis", help="Superisolated singularity invariants.")
    sis_sub = sis.add_subparsers(dest="action", required=True)
    report = sis_sub.add_parser("report")
    report.add_argument("--d", type=int, required=True)
    report.add_argument("--cusps", required=True)
    report.add_argument("--json", action="store_true")
    sis_table = sis_sub.add_parser("table")
    sis_table.add_argument(
        "--d", type=int, required=True, choices=sislink.CATALOG_DEGREES
    )
    sis_table.add_argument("--json", action="store_true")

    plumb = sub.add_parser("plumbing", help="Plumbing graph invariants.")
    plumb.add_argument(
        "action",
        choices=PLUMBING_ACTIONS,
    )
    plumb.add_argument("--graph", required=True)

    spl = sub.add_parser("splice", help="Semigroup condition of the splice diagram.")
    spl.add_argument("action", choices=["check", "scan"])
    spl.add_argument("--graph")
    spl.add_argument("--d", type=int, choices=sislink.CATALOG_DEGREES)
    spl.add_argument("--json", action="store_true")

    bri = sub.add_parser("brieskorn", help="Brieskorn sphere data.")
    bri.add_argument("action", choices=["graph", "pg", "mu"])
    bri.add_argument("exponents", type=int, nargs=3, metavar="A")

    sei = sub.add_parser("seifert", help="Pinkham's genus of a star-shaped graph.")
    sei.add_argument("action", choices=["pg"])
    sei.add_argument("--graph", required=True)

    uac = sub.add_parser("uac", help="Brieskorn model of the universal abelian cover.")
    uac.add_argument("--d", type=int, required=True)
    uac.add_argument("--cusp", required=True)

    fix = sub.add_parser("fixtures", help="Bundled fixtures.")
    fix.add_argument("action", choices=["verify", "dump"])
    fix.add_argument("--out", default="fixtures")
    fix.add_argument("--json", action="store_true")
    return parser


def cli(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        config = func.default_config(args.config_file, args.debug)
        _setup_logging(config.getboolean("DEBUG", False))
        return COMMANDS[args.command](args, config)
    except ValidationError as exc:
        _logger.debug("Validation error", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return sislink.EXIT_VALIDATION
    except ConsistencyError as exc:
        _logger.debug("Consistency error", exc_info=True)
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return sislink.EXIT_CONSISTENCY


def main() -> None:
    """CLI tool entry point."""
    sys.exit(cli())


if __name__ == "__main__":
    main()
