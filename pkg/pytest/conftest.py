#  Copyright 2026 GrowthLab authors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
# --------------------------------------------------------------------------------------------------------------
#
# conftest.py
#
# Puts the repository root first on sys.path, so that the tests import the
# working copy of GrowthLab and not an installed one.
#
# --------------------------------------------------------------------------------------------------------------

import os, sys

import pytest

sRepositoryRoot = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if sRepositoryRoot not in sys.path:
   sys.path.insert(0, sRepositoryRoot)

from GrowthLab.logger import Logger

@pytest.fixture(autouse=True)
def quiet_logger():
   """Library warnings are expected in many tests, keep them off the console."""
   Logger.config(output_console=False)
   yield
   Logger.config()
