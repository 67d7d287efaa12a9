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
# File: CSelfTest.py
#
# Seeded acceptance suite behind 'growthlab selftest'. Every check returns
# (bSuccess, sResult) and never raises for a failing property; unexpected
# exceptions are reported as failures of the check.
#
# History:
#
# 2026-10-05:
#  - initial version
#
# ******************************************************************************

import random
from dataclasses import dataclass
from fractions import Fraction

from GrowthLab.errors import CGrowthLabError
from GrowthLab.logger import Logger
from GrowthLab.CGrowthConfig import get_config
from GrowthLab.CWords import CAlphabet, CBiInfiniteSpec, factors, window, is_prefix_of_power, check_conjugacy_shape
from GrowthLab.CComplexity import complexity_profile, detect_affine_tail, balance_check
from GrowthLab.CRotation import sturmian, sturmian_spec, min_growth_system, mechanical_word, \
                                exact_factor_horizon, golden_convergent, random_convergent, generic_x0, parse_angle
from GrowthLab.CRauzy import evolution, VERDICT_LOSES, VERDICT_CONNECTED
from GrowthLab.CMonomialAlgebra import CPresentation, growth_profiles, brute_force_normal_words, classify_growth, \
                                       good_word_profile, slow_growth_criterion, antidictionary, verify_duality, \
                                       CLASS_BOUNDARY, CLASS_SLOW, CLASS_EXPONENTIAL, CLASS_FINITE_DIM
from GrowthLab.CStructure import decompose, coverage_check

RANDOM_PRESENTATIONS = 200
DECOMPOSED_PRESENTATIONS = 50
CONJUGACY_INSTANCES = 1000
SAMPLED_CODINGS = 20

@dataclass(frozen=True)
class CSelfTestResult():
   item: int
   name: str
   ok: bool
   detail: str

   def to_json(self):
      return {"item": self.item, "name": self.name, "ok": self.ok, "detail": self.detail}

def random_presentation(oRandom, sLetters=None, nMaxWords=3, nMaxLength=4):
   """
Random presentation over 2 or 3 letters with up to ``nMaxWords`` forbidden
words of length 1..nMaxLength.
   """
   if sLetters is None:
      sLetters = oRandom.choice(["ab", "abc"])
   listWords = []
   for _ in range(oRandom.randint(0, nMaxWords)):
      nLength = oRandom.randint(1, nMaxLength)
      listWords.append("".join(oRandom.choice(sLetters) for _ in range(nLength)))
   return CPresentation(CAlphabet(tuple(sLetters)), listWords)

class CSelfTest():
   """
Acceptance checks 1 to 9 with one seed.
   """

   def __init__(self, nSeed=None):
      if nSeed is None:
         nSeed = get_config("DEFAULT_SEED")
      self.nSeed = nSeed
      self.__listPresentations = None
      self.__listCodings = None

   def _random(self, nItem):
      # independent stream per item, so items can run alone
      return random.Random(self.nSeed * 1000 + nItem)

   def _codings(self):
      """
The sampled (alpha, x0) pairs shared by checks 1 and 2.
      """
      if self.__listCodings is None:
         oRandom = self._random(0)
         self.__listCodings = []
         for i in range(SAMPLED_CODINGS):
            if i % 2 == 0:
               alpha = golden_convergent(900 + oRandom.randrange(1000))
            else:
               alpha = random_convergent(oRandom, 900)
            self.__listCodings.append((alpha, generic_x0(oRandom, alpha)))
      return self.__listCodings

   def _presentations(self):
      if self.__listPresentations is None:
         oRandom = self._random(4)
         self.__listPresentations = [random_presentation(oRandom) for _ in range(RANDOM_PRESENTATIONS)]
      return self.__listPresentations

   def check_sturmian_complexity(self):
      for alpha, x0 in self._codings():
         sWord = sturmian(alpha, x0, 800)
         nExact = exact_factor_horizon(sturmian_spec(alpha, x0), 800, 40)
         if nExact < 40:
            return False, f"alpha={alpha} x0={x0}: prefix exact only up to n={nExact}"
         oProfile = complexity_profile(sWord, 40, nExactUpTo=nExact)
         for n in range(1, 41):
            if oProfile.values[n] != n + 1:
               return False, f"alpha={alpha} x0={x0}: T({n})={oProfile.values[n]}"
      return True, f"{SAMPLED_CODINGS} codings with T(n)=n+1 for 1<=n<=40"

   def check_balance_equivalence(self):
      for alpha, x0 in self._codings():
         oReport = balance_check(sturmian(alpha, x0, 800), 40)
         if oReport.max_discrepancy != 1:
            return False, f"alpha={alpha} x0={x0}: discrepancy {oReport.max_discrepancy}"
      oRandom = self._random(2)
      nChecked = 0
      while nChecked < SAMPLED_CODINGS:
         sWord = "".join(oRandom.choice("ab") for _ in range(200))
         oReport = balance_check(sWord, 40)
         if oReport.max_discrepancy < 2:
            continue
         nChecked += 1
         oTail = detect_affine_tail(complexity_profile(sWord, 40))
         if oTail is not None and (oTail.slope, oTail.K) == (1, 1):
            return False, f"unbalanced word with complexity n+1: {sWord}"
      return True, f"{SAMPLED_CODINGS} codings balanced, {SAMPLED_CODINGS} unbalanced words without tail n+1"

   def check_minimal_growth(self):
      listDetails = []
      for listBreakpoints in ([0, 1, 2], [0, 2, 5]):
         listK = []
         for sAlpha in (get_config("DEFAULT_ALPHA"), get_config("NEXT_ALPHA")):
            oSpec = min_growth_system(parse_angle(sAlpha), listBreakpoints)
            sWord = mechanical_word(oSpec, 2000)
            nExact = exact_factor_horizon(oSpec, 2000, get_config("AFFINE_PROBE_LENGTH"))
            oTail = detect_affine_tail(complexity_profile(sWord, nExact, nExactUpTo=nExact))
            if oTail is None or oTail.slope != 1 or oTail.N > 50:
               return False, f"breakpoints {listBreakpoints}, alpha={sAlpha}: tail {oTail}"
            listK.append(oTail.K)
         if listK[0] != listK[1]:
            return False, f"breakpoints {listBreakpoints}: K changes {listK[0]} -> {listK[1]}"
         listDetails.append(f"{listBreakpoints}: K={listK[0]}")
      return True, ", ".join(listDetails)

   def check_growth_classes(self):
      listExpected = [
         ("ab", ["ba"], CLASS_BOUNDARY, None),
         ("ab", ["bb"], CLASS_EXPONENTIAL, [2, 3, 5, 8, 13, 21]),
         ("ab", ["ab", "ba"], CLASS_SLOW, [2] * 6),
         ("a", ["aa"], CLASS_FINITE_DIM, None),
      ]
      for sLetters, listWords, sTag, listT in listExpected:
         oPresentation = CPresentation(CAlphabet(tuple(sLetters)), listWords)
         oClass = classify_growth(oPresentation)
         if oClass.tag != sTag or (sTag == CLASS_BOUNDARY and oClass.K != 1):
            return False, f"{listWords}: class {oClass}, expected {sTag}"
         if listT is not None:
            oT, _ = growth_profiles(oPresentation, 6)
            if list(oT.values[1:]) != listT:
               return False, f"{listWords}: T(1..6) = {list(oT.values[1:])}"
      for oPresentation in self._presentations():
         oT, _ = growth_profiles(oPresentation, 10)
         for n in range(11):
            if oT.values[n] != len(brute_force_normal_words(oPresentation, n)):
               return False, f"{oPresentation!r}: DP count differs from enumeration at n={n}"
      return True, f"4 reference classes, {RANDOM_PRESENTATIONS} presentations DP == enumeration for n<=10"

   def check_good_words(self):
      nWindow = 24
      nWitnesses = 0
      for oPresentation in self._presentations():
         oT, _ = growth_profiles(oPresentation, nWindow)
         oRL = good_word_profile(oPresentation, nWindow)
         for n in range(nWindow + 1):
            if oRL.values[n] > oT.values[n]:
               return False, f"{oPresentation!r}: T_RL({n}) > T({n})"
         try:
            if slow_growth_criterion(oPresentation, nWindow) is not None:
               nWitnesses += 1
         except CGrowthLabError as reason:
            return False, str(reason)
      return True, f"T_RL <= T on {RANDOM_PRESENTATIONS} presentations, {nWitnesses} criterion witnesses all slow or finite"

   def check_duality(self):
      listCases = []
      listCases.append(("(ab)^inf", window(CBiInfiniteSpec.periodic("ab"), 0, 100), 6))
      alpha = parse_angle(get_config("DEFAULT_ALPHA"))
      listCases.append(("Fibonacci coding", sturmian(alpha, 2 * alpha % 1, 900), 12))
      listCases.append(("three-letter coding", mechanical_word(min_growth_system(alpha, [0, 1, 2]), 2000), 10))
      for sName, sWord, nM in listCases:
         listData = [factors(sWord, n) for n in range(1, nM + 1)]
         try:
            oReport = verify_duality(listData)
         except CGrowthLabError as reason:
            return False, f"{sName}: {reason}"
         if sName == "(ab)^inf" and set(oReport.antidictionary.words) != {"aa", "bb"}:
            return False, f"{sName}: antidictionary {sorted(oReport.antidictionary.words)}"
      return True, "(ab)^inf m=6, Fibonacci m=12, three-letter m=10"

   def check_decomposition(self):
      listPresentations = [CPresentation(CAlphabet(("a", "b")), ["ba"]),
                           CPresentation(CAlphabet(("a", "b")), ["ab", "ba"]),
                           CPresentation(CAlphabet(("a",)), ["aa"])]
      oRandom = self._random(7)
      nAttempts = 0
      nFound = 0
      while nFound < DECOMPOSED_PRESENTATIONS and nAttempts < 20000:
         nAttempts += 1
         oPresentation = random_presentation(oRandom, "ab")
         if classify_growth(oPresentation).tag in (CLASS_BOUNDARY, CLASS_SLOW):
            listPresentations.append(oPresentation)
            nFound += 1
      if nFound < DECOMPOSED_PRESENTATIONS:
         return False, f"only {nFound} random boundary/slow presentations found"
      nMutations = 0
      for oPresentation in listPresentations:
         try:
            oDescription = decompose(oPresentation)
         except CGrowthLabError as reason:
            return False, f"{oPresentation!r}: {reason}"
         if not coverage_check(oDescription, oPresentation, 12).ok:
            return False, f"{oPresentation!r}: coverage fails"
         for sKind, tFamily in oDescription.families():
            oMutant = oDescription.without(sKind, tFamily)
            if coverage_check(oMutant, oPresentation, oDescription.separation_length).ok:
               return False, f"{oPresentation!r}: coverage passes without {sKind} {tFamily}"
            nMutations += 1
      return True, f"{len(listPresentations)} presentations covered up to n=12, {nMutations} mutants rejected"

   def check_rauzy_dichotomy(self):
      oTwoRay = CBiInfiniteSpec.two_ray("aa", "ab", "bb")
      oEvolution = evolution(oTwoRay, 8)
      if oEvolution.verdict != VERDICT_LOSES:
         return False, f"two-ray word: {oEvolution.verdict_text()}"
      # the window holds every factor of length <= 9 of the two-ray word
      listChecks = [(oEvolution, complexity_profile(window(oTwoRay, -100, 200), 9, nExactUpTo=9))]
      for alpha, x0 in self._codings()[:4]:
         oSource = CBiInfiniteSpec.rotation(sturmian_spec(alpha, x0))
         oEvolution = evolution(oSource, 10)
         if oEvolution.verdict != VERDICT_CONNECTED:
            return False, f"Sturmian coding: {oEvolution.verdict_text()}"
         nExact = exact_factor_horizon(oSource.coding, 800, 11)
         listChecks.append((oEvolution, complexity_profile(sturmian(alpha, x0, 800), 11, nExactUpTo=nExact)))
      for oEvolution, oProfile in listChecks:
         for oStats in oEvolution.stats:
            k = oStats.k
            if not (oStats.exact and oProfile.exact[k + 1]):
               continue
            if oStats.n_edges - oStats.n_vertices != oProfile.values[k + 1] - oProfile.values[k]:
               return False, f"|E|-|V|={oStats.n_edges - oStats.n_vertices} but T({k+1})-T({k})={oProfile.values[k + 1] - oProfile.values[k]}"
      return True, "two-ray loses strong connectivity, 4 Sturmian codings strongly connected for k<=10, |E|-|V|=T(k+1)-T(k)"

   def check_conjugacy_shape(self):
      oRandom = self._random(9)
      for _ in range(CONJUGACY_INSTANCES):
         sS = "".join(oRandom.choice("ab") for _ in range(oRandom.randint(1, 5)))
         sW = sS * oRandom.randint(0, 4) + sS[:oRandom.randrange(len(sS))]
         if check_conjugacy_shape(sS, sW) is None or not is_prefix_of_power(sW, sS):
            return False, f"S={sS!r} W={sW!r}: expected a solution"
      nChecked = 0
      while nChecked < CONJUGACY_INSTANCES:
         sS = "".join(oRandom.choice("ab") for _ in range(oRandom.randint(1, 5)))
         sW = "".join(oRandom.choice("ab") for _ in range(oRandom.randint(1, 12)))
         if is_prefix_of_power(sW, sS):
            continue
         nChecked += 1
         if check_conjugacy_shape(sS, sW) is not None:
            return False, f"S={sS!r} W={sW!r}: unexpected solution"
      return True, f"{CONJUGACY_INSTANCES} prefix and {CONJUGACY_INSTANCES} non-prefix instances"

   def checks(self):
      return [
         (1, "sturmian complexity", self.check_sturmian_complexity),
         (2, "balance equivalence", self.check_balance_equivalence),
         (3, "minimal growth", self.check_minimal_growth),
         (4, "growth classes", self.check_growth_classes),
         (5, "good words", self.check_good_words),
         (6, "duality", self.check_duality),
         (7, "decomposition", self.check_decomposition),
         (8, "rauzy dichotomy", self.check_rauzy_dichotomy),
         (9, "conjugacy shape", self.check_conjugacy_shape),
      ]

   def run(self, listItems=None):
      """
Run the checks (all, or the given item numbers).

**Returns:**

   / *Type*: list of CSelfTestResult /
      """
      listResults = []
      for nItem, sName, fCheck in self.checks():
         if listItems and nItem not in listItems:
            continue
         Logger.log(f"selftest item {nItem}: {sName} ...")
         try:
            bSuccess, sResult = fCheck()
         except CGrowthLabError as reason:
            bSuccess, sResult = False, f"{type(reason).__name__}: {reason}"
         listResults.append(CSelfTestResult(nItem, sName, bSuccess, sResult))
         if not bSuccess:
            Logger.log_error(f"selftest item {nItem} failed: {sResult}")
      return listResults

# eof class CSelfTest()

def results_to_text(listResults):
   listLines = []
   for oResult in listResults:
      listLines.append(f"{oResult.item:>2}  {oResult.name:<22} {'PASS' if oResult.ok else 'FAIL'}  {oResult.detail}")
   nPassed = sum(1 for o in listResults if o.ok)
   listLines.append(f"{nPassed}/{len(listResults)} passed")
   return "\n".join(listLines) + "\n"
