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
# CRepositoryConfig.py
#
# Purpose:
# - Static repository information (names, classifiers, dependencies) from config/repository_config.json,
#   completed by the package version and the paths setup.py works with.
#
# - All paths depend on the repository root path, derived from the script given to the constructor.
#
# --------------------------------------------------------------------------------------------------------------
#
# 03.09.2026
#
# --------------------------------------------------------------------------------------------------------------

import os, sys, platform, json, sysconfig
import colorama as col

from PythonExtensionsCollection.String.CString import CString

from GrowthLab.version import VERSION
from GrowthLab.version import VERSION_DATE

col.init(autoreset=True)
COLBR = col.Style.BRIGHT + col.Fore.RED
COLBG = col.Style.BRIGHT + col.Fore.GREEN

# --------------------------------------------------------------------------------------------------------------

def printerror(sMsg):
    sys.stderr.write(COLBR + f"Error: {sMsg}!\n")

# --------------------------------------------------------------------------------------------------------------

class CRepositoryConfig():

    def __init__(self, sCalledBy=None, bVerbose=False):

        if sCalledBy is None:
            raise Exception("CRepositoryConfig needs the path of the calling script")
        sCalledBy = CString.NormalizePath(sCalledBy)
        self.__sReferencePath = os.path.dirname(sCalledBy)

        sRepositoryConfigurationFile = CString.NormalizePath(f"{self.__sReferencePath}/config/repository_config.json")
        with open(sRepositoryConfigurationFile, encoding="utf-8") as hRepositoryConfigurationFile:
            self.__dictRepositoryConfig = json.load(hRepositoryConfigurationFile)

        self.__dictRepositoryConfig['CALLEDBY']                    = sCalledBy
        self.__dictRepositoryConfig['REFERENCEPATH']               = self.__sReferencePath
        self.__dictRepositoryConfig['REPOSITORYCONFIGURATIONFILE'] = sRepositoryConfigurationFile

        self.__dictRepositoryConfig['PACKAGEVERSION'] = VERSION
        self.__dictRepositoryConfig['PACKAGEDATE']    = VERSION_DATE

        self.__InitConfig()
        if bVerbose:
            print(f"Running under {platform.system()} ({os.name})")
            self.PrintConfig()
            print(COLBG + "Repository setup done")
            print()

    def __InitConfig(self):
        sPackageName = self.__dictRepositoryConfig['PACKAGENAME']

        self.__dictRepositoryConfig['PYTHON']                 = CString.NormalizePath(sys.executable)
        self.__dictRepositoryConfig['PYTHONVERSION']          = sys.version
        # purelib is the site-packages folder on every platform
        self.__dictRepositoryConfig['INSTALLEDPACKAGEFOLDER'] = CString.NormalizePath(f"{sysconfig.get_paths()['purelib']}/{sPackageName}")

        self.__dictRepositoryConfig['README_RST']          = CString.NormalizePath(f"{self.__sReferencePath}/README.rst")
        self.__dictRepositoryConfig['PACKAGESOURCEFOLDER'] = CString.NormalizePath(f"{self.__sReferencePath}/{sPackageName}")
        self.__dictRepositoryConfig['TESTFOLDER']          = CString.NormalizePath(f"{self.__sReferencePath}/pytest")

        self.__dictRepositoryConfig['SETUPBUILDFOLDER'] = CString.NormalizePath(f"{self.__sReferencePath}/build")
        self.__dictRepositoryConfig['SETUPDISTFOLDER']  = CString.NormalizePath(f"{self.__sReferencePath}/dist")
        self.__dictRepositoryConfig['EGGINFOFOLDER']    = CString.NormalizePath(f"{self.__sReferencePath}/{self.__dictRepositoryConfig['REPOSITORYNAME']}.egg-info")

    # eof def __InitConfig(self):

    def PrintConfig(self):
        nJust = 30
        print()
        for sKey in self.__dictRepositoryConfig:
            print(sKey.rjust(nJust, ' ') + " : " + str(self.__dictRepositoryConfig[sKey]))
        print()
    # eof def PrintConfig(self):

    def Get(self, sName=None):
        if ( (sName is None) or (sName not in self.__dictRepositoryConfig) ):
            printerror(f"Configuration parameter '{sName}' not existing")
            print("Use instead one of:")
            self.PrintConfig()
            return None
        return self.__dictRepositoryConfig[sName]
    # eof def Get(self, sName=None):

    def GetConfig(self):
        return self.__dictRepositoryConfig
    # eof def GetConfig(self):

# eof class CRepositoryConfig():

# --------------------------------------------------------------------------------------------------------------
