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
# test_CMonomialAlgebra.py
#
# 14.09.2026
#
# --------------------------------------------------------------------------------------------------------------

import random
import pytest
from fractions import Fraction

from GrowthLab.errors import CInputError, CDataError
from GrowthLab.CWords import CAlphabet, CFactorSet, factors, window, CBiInfiniteSpec
from GrowthLab.CRotation import sturmian
from GrowthLab.CMonomialAlgebra import CPresentation, parse_presentation, build_automaton, automaton_graph, \
                                       normal_words, brute_force_normal_words, growth_profiles, classify_growth, \
                                       good_word_profile, slow_growth_criterion, antidictionary, verify_duality, \
                                       algebra_report, CLASS_FINITE_DIM, CLASS_SLOW, CLASS_BOUNDARY, \
                                       CLASS_SUPERLINEAR, CLASS_EXPONENTIAL

def presentation(sLetters, listForbidden):
   return CPresentation(CAlphabet(tuple(sLetters)), listForbidden)

# --------------------------------------------------------------------------------------------------------------

class Test_CMonomialAlgebra:
   """Presentations, automata, growth classes and duality"""

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sText,tSymbols,tForbidden",
      [("Single letters", "ab\nba\n", ("a", "b"), ("ba",)),
       ("Comments and blank lines", "# algebra\n\na b\n\nbb\n# end\n", ("a", "b"), ("bb",)),
       ("Multi-character symbols", "x1 x2\nx2 x1\n", ("x1", "x2"), ("x2 x1",)),]
   )
   def test_parse_presentation(self, Description, sText, tSymbols, tForbidden):
      """pytest 'CMonomialAlgebra'"""
      oPresentation = parse_presentation(sText)
      assert oPresentation.alphabet.symbols == tSymbols
      assert tuple(oPresentation.to_json()["forbidden"]) == tForbidden

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sText,sExpected",
      [("Unknown letter", "ab\nac\n", "Presentation line 2"),
       ("No alphabet", "\n# only a comment\n", "alphabet line is missing"),]
   )
   def test_parse_errors(self, Description, sText, sExpected):
      """pytest 'CMonomialAlgebra'"""
      with pytest.raises(CInputError) as oError:
         parse_presentation(sText)
      assert sExpected in str(oError.value)

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["Forbidden words containing others are dropped",]
   )
   def test_antichain_reduction(self, Description):
      """pytest 'CMonomialAlgebra'"""
      oPresentation = presentation("ab", ["a", "ab", "bab", "bb"])
      assert oPresentation.forbidden == ("a", "bb")
      assert oPresentation.removed == ("ab", "bab")
      assert oPresentation == presentation("ab", ["bb", "a"])
      with pytest.raises(CInputError):
         presentation("ab", [""])

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sLetters,listForbidden,nLive",
      [("Boundary example", "ab", ["ba"], 2),
       ("Fibonacci algebra", "ab", ["bb"], 2),
       ("Two forbidden words", "ab", ["aab", "bab"], 5),]
   )
   def test_automaton(self, Description, sLetters, listForbidden, nLive):
      """pytest 'CMonomialAlgebra'"""
      oPresentation = presentation(sLetters, listForbidden)
      oAutomaton = build_automaton(oPresentation)
      assert oAutomaton.n_live == nLive
      assert oAutomaton.n_live + 1 <= 1 + sum(len(f) for f in listForbidden)
      oGraph = automaton_graph(oAutomaton)
      assert set(oGraph.nodes) == set(oAutomaton.states)
      for sWord in brute_force_normal_words(oPresentation, 6):
         assert oAutomaton.accepts(sWord)
      for sForbidden in listForbidden:
         assert not oAutomaton.accepts("a" + sForbidden)

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sLetters,listForbidden,listT",
      [("a^i b^j", "ab", ["ba"], [1, 2, 3, 4, 5, 6, 7]),
       ("Fibonacci numbers", "ab", ["bb"], [1, 2, 3, 5, 8, 13, 21]),
       ("Two constant words", "ab", ["ab", "ba"], [1, 2, 2, 2, 2, 2, 2]),
       ("Unary, finite", "a", ["aa"], [1, 1, 0, 0, 0, 0, 0]),
       ("Unary, free", "a", [], [1, 1, 1, 1, 1, 1, 1]),]
   )
   def test_growth_profiles(self, Description, sLetters, listForbidden, listT):
      """pytest 'CMonomialAlgebra'"""
      oT, oV = growth_profiles(presentation(sLetters, listForbidden), 6)
      assert list(oT.values) == listT
      assert oV.values[0] == 1
      assert list(oV.values) == [sum(listT[:n + 1]) for n in range(7)]

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,nSeed", [("Random presentations", 17),]
   )
   def test_dp_matches_enumeration(self, Description, nSeed):
      """pytest 'CMonomialAlgebra'"""
      oRandom = random.Random(nSeed)
      for _ in range(40):
         sLetters = oRandom.choice(["ab", "abc"])
         listForbidden = ["".join(oRandom.choice(sLetters) for _ in range(oRandom.randint(1, 4)))
                          for _ in range(oRandom.randint(0, 3))]
         oPresentation = presentation(sLetters, listForbidden)
         oT, _ = growth_profiles(oPresentation, 8)
         for n in range(9):
            listBrute = brute_force_normal_words(oPresentation, n)
            assert oT.values[n] == len(listBrute)
            assert normal_words(oPresentation, n) == sorted(listBrute, key=oPresentation.alphabet.sort_key)

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sLetters,listForbidden,sTag,sText",
      [("Boundary", "ab", ["ba"], CLASS_BOUNDARY, "Boundary(1)"),
       ("Exponential", "ab", ["bb"], CLASS_EXPONENTIAL, "Exponential"),
       ("Slow", "ab", ["ab", "ba"], CLASS_SLOW, "Slow"),
       ("Finite dimension", "a", ["aa"], CLASS_FINITE_DIM, "FiniteDim"),
       ("Unary free algebra", "a", [], CLASS_SLOW, "Slow"),
       ("Three chained cycles", "abc", ["ba", "ca", "cb"], CLASS_SUPERLINEAR, "SuperlinearPoly(3)"),
       ("Linear growth with slope 2", "abc", ["ba", "ca", "bb", "cc"], CLASS_SUPERLINEAR, "SuperlinearPoly(2)"),]
   )
   def test_classify_growth(self, Description, sLetters, listForbidden, sTag, sText):
      """pytest 'CMonomialAlgebra'"""
      oClass = classify_growth(presentation(sLetters, listForbidden))
      assert oClass.tag == sTag
      assert str(oClass) == sText
      assert oClass.empirical is False

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["Finite dimension certificate",]
   )
   def test_finite_dimension_certificate(self, Description):
      """pytest 'CMonomialAlgebra'"""
      oClass = classify_growth(presentation("ab", ["aa", "bb", "aba", "bab"]))
      assert oClass.tag == CLASS_FINITE_DIM
      # ε, a, b, ab, ba
      assert oClass.certificate["dimension"] == 5
      assert oClass.certificate["longest_word"] == 2

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["Certification window above the cap",]
   )
   def test_empirical_class(self, Description, monkeypatch):
      """pytest 'CMonomialAlgebra'"""
      monkeypatch.setenv("GROWTHLAB_CYCLE_CAP", "3")
      oClass = classify_growth(presentation("ab", ["ba"]))
      assert oClass.tag == CLASS_BOUNDARY
      assert oClass.empirical is True
      monkeypatch.delenv("GROWTHLAB_CYCLE_CAP")
      assert classify_growth(presentation("ab", ["ba"])).empirical is False

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sLetters,listForbidden,listTRL,nWitness",
      [("Boundary", "ab", ["ba"], [1, 2, 3, 4, 5], None),
       ("Slow", "ab", ["ab", "ba"], [1, 2, 2, 2, 2], 1),
       ("Finite dimension", "a", ["aa"], [0, 0, 0, 0, 0], 0),
       ("Exponential", "ab", ["bb"], [1, 2, 3, 5, 8], None),]
   )
   def test_good_words(self, Description, sLetters, listForbidden, listTRL, nWitness):
      """pytest 'CMonomialAlgebra'"""
      oPresentation = presentation(sLetters, listForbidden)
      oProfile = good_word_profile(oPresentation, 4)
      assert list(oProfile.values) == listTRL
      oT, _ = growth_profiles(oPresentation, 4)
      assert all(r <= t for r, t in zip(oProfile.values, oT.values))
      assert slow_growth_criterion(oPresentation, 8) == nWitness

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sWord,nM,listAnti",
      [("(ab)^inf", "ab" * 30, 6, ["aa", "bb"]),
       ("Fibonacci word", sturmian(Fraction(610, 987), Fraction(233, 987), 900), 6, ["bb", "aaa", "babab"]),
       ("a^inf b a^inf window", "a" * 20 + "b" + "a" * 20, 4, ["bb", "bab", "baab"]),]
   )
   def test_antidictionary(self, Description, sWord, nM, listAnti):
      """pytest 'CMonomialAlgebra'"""
      listData = [factors(sWord, n) for n in range(1, nM + 1)]
      oAnti = antidictionary(listData)
      assert oAnti.sorted_words() == listAnti
      oReport = verify_duality(listData)
      assert oReport.ok is True
      assert list(oReport.counts) == [1] + [len(oFactors) for oFactors in listData]

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,listData",
      [("Not closed under factors", [CFactorSet(1, frozenset(["a"])), CFactorSet(2, frozenset(["ab"]))]),
       ("Missing length", [CFactorSet(2, frozenset(["ab"]))]),
       ("Mixed lengths", [{"a", "ab"}]),]
   )
   def test_antidictionary_invalid(self, Description, listData):
      """pytest 'CMonomialAlgebra'"""
      with pytest.raises(CDataError):
         antidictionary(listData)

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["Two-ray word rebuilt from its antidictionary",]
   )
   def test_duality_two_ray(self, Description):
      """pytest 'CMonomialAlgebra'"""
      oSpec = CBiInfiniteSpec.two_ray("ab", "", "b")
      sWindow = window(oSpec, -30, 60)
      oReport = verify_duality([factors(sWindow, n) for n in range(1, 9)])
      assert oReport.antidictionary.sorted_words() == ["aa", "bba"]
      assert classify_growth(oReport.presentation).tag == CLASS_BOUNDARY

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["Report of the boundary example",]
   )
   def test_algebra_report(self, Description):
      """pytest 'CMonomialAlgebra'"""
      dReport = algebra_report(presentation("ab", ["ba"]), 10)
      assert dReport["class_text"] == "Boundary(1)"
      assert dReport["T"]["values"] == list(range(1, 12))
      assert dReport["automaton"]["live_states"] == 2
      assert dReport["slow_growth_witness"] is None

# eof class Test_CMonomialAlgebra

# --------------------------------------------------------------------------------------------------------------
