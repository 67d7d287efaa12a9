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
# ******************************************************************************
#
# File: errors.py
#
# Exception hierarchy of GrowthLab. Every exception carries the exit code
# the command line front end terminates with.
#
# History:
#
# 2026-09-02:
#  - initial version
#
# ******************************************************************************

EXIT_SUCCESS     = 0
EXIT_UNEXPECTED  = 1
EXIT_INPUT_ERROR = 2
EXIT_CONSISTENCY = 3

class CGrowthLabError(Exception):
   """
Base class of all errors raised by GrowthLab.
   """
   nExitCode = EXIT_UNEXPECTED

class CInputError(CGrowthLabError):
   """
Invalid argument, domain violation or unparsable input.
   """
   nExitCode = EXIT_INPUT_ERROR

class CDataError(CInputError):
   """
Input data is inconsistent (e.g. factor data not closed under factors).
   """

class CResonanceError(CInputError):
   """
An orbit point hits an arc endpoint and no waiver was given.
   """
   def __init__(self, sMessage, nStep=None):
      super().__init__(sMessage)
      self.nStep = nStep

class CDegeneratePartitionError(CInputError):
   """
Circle partition is not a disjoint cover by nonempty arcs.
   """

class CClassError(CInputError):
   """
Growth class does not allow the requested operation.
   """

class CNotCase2Error(CInputError):
   """
Coding has no slope 1 affine complexity tail.
   """

class CConsistencyError(CGrowthLabError):
   """
Internal cross-check failed. Indicates a bug, never bad input.
   """
   nExitCode = EXIT_CONSISTENCY
