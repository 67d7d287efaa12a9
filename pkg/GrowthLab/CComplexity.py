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
# File: CComplexity.py
#
# Subword complexity profiles, affine tail detection (T(n) = slope*n + K),
# balance and recurrence reports.
#
# History:
#
# 2026-09-06:
#  - initial version
#
# 2026-09-23:
#  - exact factor sets of symbolic sources
#
# ******************************************************************************

from dataclasses import dataclass
from fractions import Fraction

from GrowthLab.errors import CInputError
from GrowthLab.logger import Logger
from GrowthLab.CWords import CBiInfiniteSpec, KIND_ROTATION, factors, spec_factors

KIND_T_WORD    = "T_word"
KIND_T_ALGEBRA = "T_algebra"
KIND_V_ALGEBRA = "V_algebra"
KIND_T_RL      = "T_RL"

LPROFILE_KINDS = [KIND_T_WORD, KIND_T_ALGEBRA, KIND_V_ALGEBRA, KIND_T_RL]

# fewest points on a fitted tail line
MIN_TAIL_SUPPORT = 3

@dataclass(frozen=True)
class CGrowthProfile():
   """
Counts n -> value for n = 0..horizon with a per-n exactness flag.
   """
   kind: str
   values: tuple
   exact: tuple

   def __post_init__(self):
      if self.kind not in LPROFILE_KINDS:
         raise CInputError(f"Invalid profile kind '{self.kind}'. Reason: expected one of {LPROFILE_KINDS}")
      object.__setattr__(self, 'values', tuple(self.values))
      object.__setattr__(self, 'exact', tuple(self.exact))
      if len(self.values) != len(self.exact):
         raise CInputError("Invalid profile. Reason: values and exactness flags differ in length")
      if any(nValue < 0 for nValue in self.values):
         raise CInputError("Invalid profile. Reason: negative count")

   @classmethod
   def from_values(cls, sKind, listValues, nStart=0, nExactUpTo=None):
      """
Profile from a list of values for n = nStart, nStart+1, ... . Positions below
nStart are filled with 0 and flagged inexact so that they are never fitted.
      """
      listAll = [0] * nStart + list(listValues)
      if nExactUpTo is None:
         nExactUpTo = len(listAll) - 1
      listExact = [nStart <= n <= nExactUpTo for n in range(len(listAll))]
      return cls(sKind, listAll, listExact)

   @property
   def horizon(self):
      return len(self.values) - 1

   def exact_points(self, nFrom=0):
      return [(n, self.values[n]) for n in range(nFrom, len(self.values)) if self.exact[n]]

# eof class CGrowthProfile()

@dataclass(frozen=True)
class CAffineTail():
   N: int
   K: int
   slope: int
   support: int

   def value(self, n):
      return self.slope * n + self.K

@dataclass(frozen=True)
class CBalanceReport():
   max_discrepancy: int
   per_symbol: tuple
   witness: tuple
   witness_symbol: str = None

def complexity_profile(sWord, nMax, nExactUpTo=None, bFiniteWord=False):
   """
Subword complexity T(n) = number of distinct length-n factors, n = 0..nMax.

**Arguments:**

*  ``sWord``

   / *Condition*: required / *Type*: str /

   Prefix of an infinite word, or a finite word (see ``bFiniteWord``).

*  ``nMax``

   / *Condition*: required / *Type*: int /

   Largest factor length. Clipped to ``len(sWord)`` with a warning.

*  ``nExactUpTo``

   / *Condition*: optional / *Type*: int / *Default*: None /

   Exactness horizon guaranteed by the generator of the prefix. Without it,
   T(n) is flagged exact only for 2n ≤ len(sWord).

*  ``bFiniteWord``

   / *Condition*: optional / *Type*: bool / *Default*: False /

   The word itself is the object of study; all counts are exact.

**Returns:**

*  ``oProfile``

   / *Type*: CGrowthProfile /
   """
   if nMax < 0:
      raise CInputError(f"Invalid horizon {nMax}. Reason: must not be negative")
   if nMax > len(sWord):
      Logger.log_warning(f"Horizon {nMax} exceeds word length {len(sWord)}, clipped")
      nMax = len(sWord)
   listValues = [len(factors(sWord, n)) for n in range(nMax + 1)]
   if bFiniteWord:
      listExact = [True] * (nMax + 1)
   elif nExactUpTo is not None:
      listExact = [n <= nExactUpTo for n in range(nMax + 1)]
   else:
      listExact = [2 * n <= len(sWord) for n in range(nMax + 1)]
   return CGrowthProfile(KIND_T_WORD, listValues, listExact)

def detect_affine_tail(oProfile):
   """
Fit T(n) = slope·n + K, slope in {0, 1}, to the exact points n ≥ 1 at the end
of the profile.

**Arguments:**

*  ``oProfile``

   / *Condition*: required / *Type*: CGrowthProfile /

**Returns:**

*  ``oTail``

   / *Type*: CAffineTail or None /

   Least onset N such that every exact point with n ≥ N lies on the line.
   None if no line with slope 0 or 1 is supported by at least three points.
   """
   listPoints = oProfile.exact_points(nFrom=1)
   if len(listPoints) < MIN_TAIL_SUPPORT:
      return None
   nLast, nLastValue = listPoints[-1]
   for nSlope in (1, 0):
      nK = nLastValue - nSlope * nLast
      nSupport = 0
      nOnset = nLast
      for n, nValue in reversed(listPoints):
         if nValue != nSlope * n + nK:
            break
         nSupport += 1
         nOnset = n
      if nSupport >= MIN_TAIL_SUPPORT:
         return CAffineTail(nOnset, nK, nSlope, nSupport)
   Logger.log_debug(f"no affine tail, fitted slope {fitted_slope(oProfile)}")
   return None

def fitted_slope(oProfile):
   """
Slope through the last two exact points n ≥ 1, None with fewer points.
   """
   listPoints = oProfile.exact_points(nFrom=1)
   if len(listPoints) < 2:
      return None
   (n0, v0), (n1, v1) = listPoints[-2], listPoints[-1]
   return Fraction(v1 - v0, n1 - n0)

def low_complexity_witness(oProfile):
   """
Least exact n ≥ 1 with T(n) ≤ n. Its existence proves the infinite word
behind the profile is eventually periodic.
   """
   for n, nValue in oProfile.exact_points(nFrom=1):
      if nValue <= n:
         return n
   return None

def balance_check(sWord, nMax):
   """
Largest difference of symbol counts between factors of equal length.

For each n ≤ nMax and symbol a the extremes of |u|_a over the length-n
factors u are compared; the largest gap over all n and a is reported with a
witness pair (u, v).

**Returns:**

*  ``oReport``

   / *Type*: CBalanceReport /
   """
   if nMax > len(sWord):
      Logger.log_warning(f"Horizon {nMax} exceeds word length {len(sWord)}, clipped")
      nMax = len(sWord)
   listSymbols = sorted(set(sWord))
   dPerSymbol = {sSymbol: 0 for sSymbol in listSymbols}
   nBest, tWitness, sWitnessSymbol = 0, ("", ""), None
   for n in range(1, nMax + 1):
      listFactors = factors(sWord, n).sorted_words()
      for sSymbol in listSymbols:
         sMax = max(listFactors, key=lambda u: u.count(sSymbol))
         sMin = min(listFactors, key=lambda u: u.count(sSymbol))
         nGap = sMax.count(sSymbol) - sMin.count(sSymbol)
         dPerSymbol[sSymbol] = max(dPerSymbol[sSymbol], nGap)
         if nGap > nBest:
            nBest, tWitness, sWitnessSymbol = nGap, (sMax, sMin), sSymbol
   return CBalanceReport(nBest, tuple(sorted(dPerSymbol.items())), tWitness, sWitnessSymbol)

def uniform_recurrence_bound(sWord, sFactor):
   """
Least N such that every length-N window of the word contains ``sFactor``.

**Returns:**

*  ``nBound``

   / *Type*: int or None /

   None when the bound is forced only by the end of the prefix (the stretch
   after the last occurrence is longer than every gap), i.e. the prefix does
   not witness a bound. This is inconclusive, not a refutation.
   """
   if sFactor == "":
      return 0
   listPositions = []
   nPos = sWord.find(sFactor)
   while nPos != -1:
      listPositions.append(nPos)
      nPos = sWord.find(sFactor, nPos + 1)
   if len(listPositions) == 0:
      raise CInputError(f"Invalid factor {sFactor!r}. Reason: it does not occur in the word")
   nLen = len(sFactor)
   nWitnessed = listPositions[0] + nLen
   for nFirst, nNext in zip(listPositions, listPositions[1:]):
      nWitnessed = max(nWitnessed, nNext - nFirst - 1 + nLen)
   nTail = len(sWord) - listPositions[-1]
   if nTail > nWitnessed:
      return None
   return nWitnessed

def recurrence_profile(sWord, nMax):
   """
For n = 1..nMax: does every length-n factor starting in the first half of the
word occur again later on?

**Returns:**

   / *Type*: list of (n, bool) /
   """
   nHalf = len(sWord) // 2
   listResult = []
   for n in range(1, nMax + 1):
      bRecurrent = True
      for i in range(0, max(0, nHalf - n + 1)):
         if sWord.find(sWord[i:i+n], i + 1) == -1:
            bRecurrent = False
            break
      listResult.append((n, bRecurrent))
   return listResult

def source_factor_sets(oSource, nMax):
   """
Factor sets of lengths 0..nMax of a word source together with the largest
length for which they are exact.

**Arguments:**

*  ``oSource``

   / *Condition*: required / *Type*: CBiInfiniteSpec or str /

   Symbolic word, or a finite prefix of an infinite word.

*  ``nMax``

   / *Condition*: required / *Type*: int /

**Returns:**

*  ``(listFactorSets, nExactUpTo)``

   / *Type*: tuple /
   """
   if isinstance(oSource, CBiInfiniteSpec):
      if oSource.kind != KIND_ROTATION:
         return [spec_factors(oSource, n) for n in range(nMax + 1)], nMax
      from GrowthLab.CRotation import mechanical_word, exact_factor_horizon
      from GrowthLab.CGrowthConfig import get_config
      nLength = max(get_config("EVOLUTION_PREFIX_LENGTH"), 4 * nMax)
      sPrefix = mechanical_word(oSource.coding, nLength)
      nExactUpTo = exact_factor_horizon(oSource.coding, nLength, nMax)
      return [factors(sPrefix, n) for n in range(nMax + 1)], nExactUpTo
   sWord = str(oSource)
   listSets = [factors(sWord, n) for n in range(nMax + 1)]
   return listSets, min(nMax, len(sWord) // 2)

def profile_to_json(oProfile):
   return {
      "kind": oProfile.kind,
      "horizon": oProfile.horizon,
      "values": list(oProfile.values),
      "exact": list(oProfile.exact),
   }

def profile_to_tsv(oProfile):
   listLines = ["n\tvalue\texact"]
   for n, (nValue, bExact) in enumerate(zip(oProfile.values, oProfile.exact)):
      listLines.append(f"{n}\t{nValue}\t{'exact' if bExact else 'prefix-limited'}")
   return "\n".join(listLines) + "\n"

def tail_to_json(oTail):
   if oTail is None:
      return None
   return {"N": oTail.N, "K": oTail.K, "slope": oTail.slope, "support": oTail.support}

def balance_to_json(oReport):
   return {
      "max_discrepancy": oReport.max_discrepancy,
      "per_symbol": dict(oReport.per_symbol),
      "witness": list(oReport.witness),
      "witness_symbol": oReport.witness_symbol,
   }
