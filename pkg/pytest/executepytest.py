# **************************************************************************************************************
#
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
#
# **************************************************************************************************************
#
# executepytest.py
#
# Executes the GrowthLab test cases in this folder against the working copy of the package.
# The XML log file can be set in command line; if not, the default log is written.
# With --fast the tests marked 'slow' (complete acceptance suite) are skipped.
# Further pytest options can be passed with --pytestcommandline.
#
# --------------------------------------------------------------------------------------------------------------
#
# 14.10.2026
#
# --------------------------------------------------------------------------------------------------------------

import os, sys, shlex, subprocess, argparse

import colorama as col

from PythonExtensionsCollection.String.CString import CString
from PythonExtensionsCollection.Folder.CFolder import CFolder

col.init(autoreset=True)

COLBR = col.Style.BRIGHT + col.Fore.RED
COLBG = col.Style.BRIGHT + col.Fore.GREEN

SUCCESS = 0
ERROR   = 1

# --------------------------------------------------------------------------------------------------------------

def printerror(sMsg):
   sys.stderr.write(COLBR + f"Error: {sMsg}!\n")

# --------------------------------------------------------------------------------------------------------------

sThisScript     = CString.NormalizePath(sys.argv[0])
sThisScriptPath = os.path.dirname(sThisScript)
sThisScriptName = os.path.basename(sThisScript)
sRepositoryRoot = os.path.dirname(sThisScriptPath)
sPython         = CString.NormalizePath(sys.executable)

oCmdLineParser = argparse.ArgumentParser()
oCmdLineParser.add_argument('--logfile', type=str, help='Path and name of XML log file (optional).')
oCmdLineParser.add_argument('--fast', action='store_true', help='Skip the tests marked as slow.')
oCmdLineParser.add_argument('--pytestcommandline', type=str, help='Additional command line for Python pytest module (optional).')
oCmdLineArgs = oCmdLineParser.parse_args()

if oCmdLineArgs.logfile is not None:
   sLogFile = CString.NormalizePath(oCmdLineArgs.logfile, sReferencePathAbs=sThisScriptPath)
else:
   sLogFile = f"{sThisScriptPath}/logfiles/PyTestLog.xml"

oLogFilePath = CFolder(os.path.dirname(sLogFile))
bSuccess, sResult = oLogFilePath.Create(bOverwrite=False, bRecursive=True)
del oLogFilePath
if bSuccess is not True:
   printerror(CString.FormatResult(sThisScriptName, bSuccess, sResult))
   sys.exit(ERROR)

listCmdLineParts = [f"\"{sPython}\"", "-m pytest"]
if oCmdLineArgs.fast:
   listCmdLineParts.append("-m \"not slow\"")
if oCmdLineArgs.pytestcommandline is not None:
   listCmdLineParts.append(oCmdLineArgs.pytestcommandline)
listCmdLineParts.append("--show-capture=all")
listCmdLineParts.append(f"--junitxml=\"{sLogFile}\"")
listCmdLineParts.append(f"\"{sThisScriptPath}/testcases\"")
sCmdLine = " ".join(listCmdLineParts)

# the subprocess calls of the CLI tests import GrowthLab from the repository root
dEnv = dict(os.environ)
dEnv["PYTHONPATH"] = os.pathsep.join(p for p in (sRepositoryRoot, dEnv.get("PYTHONPATH")) if p)

print(f"Now executing command line:\n{sCmdLine}")
print()

nReturn = ERROR
try:
   nReturn = subprocess.call(shlex.split(sCmdLine), cwd=sThisScriptPath, env=dEnv)
except Exception as ex:
   printerror(str(ex))
   sys.exit(ERROR)
print()

if nReturn == SUCCESS:
   print(f"Test results in '{sLogFile}'")
   print(COLBG + f"{sThisScriptName} done")
else:
   printerror(f"[{sThisScriptName}] : Subprocess PYTEST returned {nReturn}")
   nReturn = -nReturn

# nReturn:
# > 0  : internal error of this script
# < 0  : return value (!= 0) from pytest
# == 0 : all tests passed

sys.exit(nReturn)

# --------------------------------------------------------------------------------------------------------------
