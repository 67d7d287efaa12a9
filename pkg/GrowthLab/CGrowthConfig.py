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
# File: CGrowthConfig.py
#
# Runtime configuration of GrowthLab.
#
# - Static defaults are read from growthlab_config.json next to this module.
# - Some values can be overridden by environment variables; these are read
#   on every access.
#
# History:
#
# 2026-09-03:
#  - initial version
#
# ******************************************************************************

import os
import json

from GrowthLab.errors import CInputError

CONFIG_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "growthlab_config.json")

# configuration key -> environment variable overriding it
DENVIRONMENT_OVERRIDES = {
   "CERTIFICATION_CAP" : "GROWTHLAB_CYCLE_CAP",
}

class CGrowthConfig():
   """
Access to the GrowthLab runtime configuration.

Usually the shared instance returned by ``CGrowthConfig.instance()`` is used.
   """
   __oInstance = None

   def __init__(self, sConfigFile=CONFIG_FILE):
      """
**Arguments:**

*  ``sConfigFile``

   / *Condition*: optional / *Type*: str / *Default*: growthlab_config.json of the package /

   Path to the JSON configuration file.
      """
      try:
         with open(sConfigFile, encoding="utf-8") as hConfigFile:
            self.__dictConfig = json.load(hConfigFile)
      except (OSError, ValueError) as reason:
         raise CInputError(f"Could not load configuration '{sConfigFile}'. Reason: {reason}")
      self.__dictConfig['CONFIGFILE'] = sConfigFile

   @classmethod
   def instance(cls):
      """
Shared configuration object, loaded on first use.
      """
      if cls.__oInstance is None:
         cls.__oInstance = CGrowthConfig()
      return cls.__oInstance

   def Get(self, sName=None):
      """
Get a configuration value.

**Arguments:**

*  ``sName``

   / *Condition*: required / *Type*: str /

   Name of the configuration parameter.

**Returns:**

*  ``value``

   / *Type*: str, int /

   The configured value, or the value of the overriding environment variable
   (converted to the type of the configured value).
      """
      if (sName is None) or (sName not in self.__dictConfig):
         raise CInputError(f"Configuration parameter '{sName}' not existing. Use one of: {', '.join(sorted(self.__dictConfig))}")
      value = self.__dictConfig[sName]
      sEnvName = DENVIRONMENT_OVERRIDES.get(sName)
      if sEnvName is not None and os.environ.get(sEnvName):
         sEnvValue = os.environ[sEnvName]
         try:
            value = type(value)(sEnvValue)
         except ValueError:
            raise CInputError(f"Invalid value '{sEnvValue}' of environment variable {sEnvName}. Reason: expected {type(value).__name__}")
      return value
   # eof def Get(self, sName=None):

   def GetConfig(self):
      """
Copy of all configuration values, environment overrides applied.
      """
      return {sKey: self.Get(sKey) for sKey in self.__dictConfig}

   def PrintConfig(self, fPrint=print):
      nJust = 25
      for sKey, value in self.GetConfig().items():
         fPrint(sKey.rjust(nJust, ' ') + " : " + str(value))

# eof class CGrowthConfig()

def get_config(sName):
   """
Shortcut for ``CGrowthConfig.instance().Get(sName)``.
   """
   return CGrowthConfig.instance().Get(sName)
