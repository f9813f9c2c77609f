#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# data_functions.py from https://github.com/snstac/sislink
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

"""SISLINK bundled data readers: curve catalogs, graph fixtures and graph files."""

import json
import os

from typing import Any, Callable, Dict, List, TextIO, TypeVar

import sislink

from .classes import Fixture, PlumbingGraph, ValidationError
from .plumbing import graph_from_dict, graph_from_dot, graph_from_json

CHECK_SECTIONS = ("sis_checks", "closed_form_checks", "uac_checks", "brieskorn_checks")

_T = TypeVar("_T")

__all__ = [
    "read_catalog_fd",
    "get_catalog",
    "read_fixtures_fd",
    "get_fixtures",
    "read_check_specs_fd",
    "get_check_specs",
    "read_graph_file",
]


def _read_data_file(json_file: str, reader: Callable[[TextIO], _T]) -> _T:
    try:
        with open(json_file, encoding="UTF-8") as json_fd:
            return reader(json_fd)
    except OSError as exc:
        raise ValidationError(
            f"Cannot read data file {json_file!r}: {exc.strerror or exc}"
        ) from exc


def read_catalog_fd(json_fd: TextIO) -> Dict[int, List[Dict[str, Any]]]:
    """Read a curve catalog into a degree -> entries mapping.

    Parameters
    ----------
    json_fd : The file descriptor of the opened catalog file.

    Returns
    -------
    Catalog entries (``label``, ``cusps`` and expected verdict) keyed by degree.
    """
    try:
        data = json.load(json_fd)
        catalogs = {int(d): list(item["entries"]) for d, item in data.items()}
    except (AttributeError, KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"Malformed catalog file: {exc}") from exc
    for d, entries in catalogs.items():
        for entry in entries:
            if "label" not in entry or "cusps" not in entry:
                raise ValidationError(f"Catalog entry for d={d} lacks label or cusps.")
    return catalogs


def get_catalog(json_file: str = "") -> Dict[int, List[Dict[str, Any]]]:
    """Read the curve catalog file, the bundled one by default."""
    json_file = json_file or sislink.DEFAULT_CATALOG_FILE
    return _read_data_file(json_file, read_catalog_fd)


def read_fixtures_fd(json_fd: TextIO) -> Dict[str, Fixture]:
    """Read graph fixtures (graph, expected invariants and anchors) by name."""
    try:
        data = json.load(json_fd)
        items = data["fixtures"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValidationError(f"Malformed fixtures file: {exc}") from exc

    fixtures: Dict[str, Fixture] = {}
    for item in items:
        name = item.get("name")
        if not name or "graph" not in item:
            raise ValidationError(f"Fixture {name!r} lacks a name or a graph.")
        expected = dict(item.get("expected", {}))
        anchors = dict(item.get("anchors", {}))
        missing = sorted(set(expected) - set(anchors))
        if missing:
            raise ValidationError(f"Fixture {name} has unanchored values: {missing}")
        fixtures[name] = Fixture(
            name,
            graph_from_dict(item["graph"]),
            expected,
            anchors,
            dict(item.get("source", {})),
        )
    return fixtures


def read_check_specs_fd(json_fd: TextIO) -> Dict[str, List[Dict[str, Any]]]:
    """Read the graph-free expectations (curve values, closed forms, covers)."""
    try:
        data = json.load(json_fd)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"Malformed fixtures file: {exc}") from exc
    specs = {key: list(data.get(key, [])) for key in CHECK_SECTIONS}
    for section, items in specs.items():
        for item in items:
            expected = set(item.get("expected", {}))
            missing = sorted(expected - set(item.get("anchors", {})))
            if "name" not in item or missing:
                raise ValidationError(
                    f"Check in {section} lacks a name or anchors for {missing}."
                )
    return specs


def get_check_specs(json_file: str = "") -> Dict[str, List[Dict[str, Any]]]:
    json_file = json_file or sislink.DEFAULT_FIXTURES_FILE
    return _read_data_file(json_file, read_check_specs_fd)


def get_fixtures(json_file: str = "") -> Dict[str, Fixture]:
    """Read the fixtures file, the bundled one by default."""
    json_file = json_file or sislink.DEFAULT_FIXTURES_FILE
    return _read_data_file(json_file, read_fixtures_fd)


def read_graph_file(graph_file: str, fixtures_file: str = "") -> PlumbingGraph:
    """Load a plumbing graph from a JSON or DOT file, or by fixture name.

    ``complete-intersection`` and ``complete-intersection.json`` both name the
    bundled fixture when no such file exists.
    """
    if os.path.isfile(graph_file):
        text = _read_data_file(graph_file, lambda graph_fd: graph_fd.read())
        if graph_file.endswith(".dot"):
            return graph_from_dot(text)
        return graph_from_json(text)

    name = os.path.basename(graph_file)
    if name.endswith(".json"):
        name = name[: -len(".json")]
    fixtures = get_fixtures(fixtures_file)
    if name not in fixtures:
        raise ValidationError(f"No graph file or fixture named {graph_file!r}.")
    return fixtures[name].graph
