#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# constants.py from https://github.com/snstac/sislink
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

"""SISLINK Constants."""

import logging

_DEFAULT_CATALOG_FILE = "data/catalog.json"
_DEFAULT_FIXTURES_FILE = "data/fixtures.json"

try:
    from pkg_resources import resource_filename

    DEFAULT_CATALOG_FILE = resource_filename(__name__, _DEFAULT_CATALOG_FILE)
    DEFAULT_FIXTURES_FILE = resource_filename(__name__, _DEFAULT_FIXTURES_FILE)
except ImportError:
    from importlib.resources import files

    DEFAULT_CATALOG_FILE = str(files("sislink").joinpath(_DEFAULT_CATALOG_FILE))
    DEFAULT_FIXTURES_FILE = str(files("sislink").joinpath(_DEFAULT_FIXTURES_FILE))

LOG_LEVEL = logging.INFO
LOG_FORMAT = logging.Formatter(("%(asctime)s sislink %(levelname)s - %(message)s"))
DEBUG_LOG_FORMAT = logging.Formatter(
    (
        "%(asctime)s sislink %(levelname)s %(name)s.%(funcName)s:%(lineno)d "
        " - %(message)s"
    )
)

CONFIG_SECTION: str = "sislink"

DEFAULT_WORKERS: int = 4

# Degrees with a bundled rational cuspidal curve catalog.
CATALOG_DEGREES: tuple = (4, 5, 6)

# Root of unity sums are checked against high-precision evaluation up to here.
ROOT_SUM_CHECK_MAX_D: int = 12
ROOT_SUM_CHECK_DPS: int = 60

EXIT_OK: int = 0
EXIT_VALIDATION: int = 1
EXIT_CONSISTENCY: int = 2
