#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# __init__.py from https://github.com/snstac/sislink
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

"""SISLINK: Link invariants of superisolated surface singularities."""

__version__ = "1.0.0"


from .constants import (
    LOG_FORMAT,
    LOG_LEVEL,
    DEBUG_LOG_FORMAT,
    CONFIG_SECTION,
    DEFAULT_WORKERS,
    DEFAULT_CATALOG_FILE,
    DEFAULT_FIXTURES_FILE,
    CATALOG_DEGREES,
    ROOT_SUM_CHECK_MAX_D,
    ROOT_SUM_CHECK_DPS,
    EXIT_OK,
    EXIT_VALIDATION,
    EXIT_CONSISTENCY,
)

from .classes import (
    SISLinkError,
    ValidationError,
    SequenceParseError,
    DimensionError,
    SingularMatrixError,
    NotNegativeDefiniteError,
    UnsupportedGraphError,
    ConsistencyError,
    MultiplicitySequence,
    PlumbingGraph,
    EmbeddedResolutionGraph,
    PlaneBranch,
    AbelianGroupStructure,
    SeifertData,
    BrieskornTriple,
    SISInput,
    ClosedForms,
    InvariantReport,
    TableRow,
    SpliceDiagram,
    SemigroupVerdict,
    Fixture,
    CheckResult,
    BatchWorker,
)

from .exactmath import rational_str

from .branch import parse_sequence, parse_sequence_list, plane_branch

from .plumbing import homology, canonical_k2s, minimal_cycle, star_shape

from .seifert import brieskorn_seifert, pinkham_pg, uac_brieskorn

from .superisolated import sw_verdict, catalog, table

from .splice import splice_diagram, semigroup_condition

from .data_functions import get_catalog, get_fixtures

from .functions import default_config, run_batch, verify_fixtures
