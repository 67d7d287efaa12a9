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
# test_CStructure.py
#
# 21.09.2026
#
# --------------------------------------------------------------------------------------------------------------

import random
import pytest
from fractions import Fraction

from GrowthLab.errors import CInputError, CClassError, CNotCase2Error
from GrowthLab.CWords import CAlphabet
from GrowthLab.CRotation import sturmian_spec
from GrowthLab.CMonomialAlgebra import CPresentation
from GrowthLab.CStructure import decompose, coverage_check, excess_profile, description_to_json, \
                                 description_to_text, witness_case2, witness_to_json, FAMILY_TWO_RAY

ALPHA = Fraction(610, 987)

def presentation(sLetters, listForbidden):
   return CPresentation(CAlphabet(tuple(sLetters)), listForbidden)

# --------------------------------------------------------------------------------------------------------------

class Test_CStructure:
   """Normal basis decomposition and rotation witnesses"""

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["a^i b^j is one two-ray family",]
   )
   def test_decompose_boundary(self, Description):
      """pytest 'CStructure'"""
      oDescription = decompose(presentation("ab", ["ba"]))
      assert oDescription.two_ray == ("a", "", "b")
      assert oDescription.finite == ()
      assert oDescription.left_rays == ()
      assert oDescription.right_rays == ()
      assert oDescription.families() == [(FAMILY_TWO_RAY, ("a", "", "b"))]
      assert "(a)^inf/2 . '' . (b)^inf/2" in description_to_text(oDescription)

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sLetters,listForbidden,tLeftRays,tFinite",
      [("Two constant words", "ab", ["ab", "ba"], (("a", ""), ("b", "")), ()),
       ("Finite dimension", "a", ["aa"], (), ("", "a")),]
   )
   def test_decompose_slow(self, Description, sLetters, listForbidden, tLeftRays, tFinite):
      """pytest 'CStructure'"""
      oDescription = decompose(presentation(sLetters, listForbidden))
      assert oDescription.left_rays == tLeftRays
      assert oDescription.finite == tFinite
      assert oDescription.two_ray is None

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["Rays of the same periodic word",]
   )
   def test_subsumed_rays(self, Description):
      """pytest 'CStructure'"""
      oDescription = decompose(presentation("ab", ["aa", "bb"]))
      assert len(oDescription.left_rays) == 1
      assert oDescription.left_rays[0][0] == "ab"
      assert len(oDescription.notes) == 1

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sLetters,listForbidden",
      [("Exponential growth", "ab", ["bb"]),
       ("Quadratic growth", "abc", ["ba", "ca", "cb"]),]
   )
   def test_decompose_wrong_class(self, Description, sLetters, listForbidden):
      """pytest 'CStructure'"""
      with pytest.raises(CClassError):
         decompose(presentation(sLetters, listForbidden))

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,sLetters,listForbidden",
      [("Boundary", "ab", ["ba"]),
       ("Slow", "ab", ["ab", "ba"]),
       ("Two-ray with connector", "abc", ["ab", "ba", "ca", "cc", "bc"]),]
   )
   def test_coverage_and_mutants(self, Description, sLetters, listForbidden):
      """pytest 'CStructure'"""
      oPresentation = presentation(sLetters, listForbidden)
      oDescription = decompose(oPresentation)
      assert coverage_check(oDescription, oPresentation, 12).ok
      for sKind, tFamily in oDescription.families():
         oReport = coverage_check(oDescription.without(sKind, tFamily), oPresentation, oDescription.separation_length)
         assert oReport.ok is False
         assert "uncovered" in oReport.text()

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["Normal words outside the two-ray family",]
   )
   def test_excess_profile(self, Description):
      """pytest 'CStructure'"""
      oPresentation = presentation("ab", ["ba"])
      oDescription = decompose(oPresentation)
      assert excess_profile(oDescription, oPresentation, 8) == [0] * 9
      oSlow = presentation("ab", ["ab", "ba"])
      with pytest.raises(CInputError):
         excess_profile(decompose(oSlow), oSlow, 4)

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["JSON form of a description",]
   )
   def test_description_json(self, Description):
      """pytest 'CStructure'"""
      dJson = description_to_json(decompose(presentation("ab", ["ba"])))
      assert set(dJson) == {"finite", "left_rays", "right_rays", "pump", "two_ray", "bridge",
                            "bridge_bound", "separation_length", "notes"}
      assert dJson["two_ray"] == {"u": "a", "c": "", "v": "b"}
      assert dJson["separation_length"] >= 12

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description", ["Sturmian coding",]
   )
   def test_witness_case2(self, Description):
      """pytest 'CStructure'"""
      oWitness = witness_case2(sturmian_spec(ALPHA, Fraction(1, 1000)), 2000, 8, random.Random(4))
      assert oWitness.K == 1
      assert oWitness.N == 1
      assert oWitness.exact_horizon > 12
      assert oWitness.duality_ok
      assert oWitness.inconclusive is False
      assert len(oWitness.uniform_recurrence_table) == 8
      assert all(nBound is not None and nBound >= len(sFactor) for sFactor, nBound in oWitness.uniform_recurrence_table)
      assert "bb" in oWitness.antidictionary_sample
      dJson = witness_to_json(oWitness)
      assert dJson["duality"]["ok"] is True
      assert dJson["source"]["alpha"] == "610/987"

   # --------------------------------------------------------------------------------------------------------------
   #TM***
   @pytest.mark.parametrize(
      "Description,alpha,x0,nHorizon,oError",
      [("Periodic coding has slope 0", Fraction(1, 2), Fraction(1, 4), 100, CNotCase2Error),
       ("Horizon too short", ALPHA, Fraction(1, 1000), 3, CInputError),]
   )
   def test_witness_rejected(self, Description, alpha, x0, nHorizon, oError):
      """pytest 'CStructure'"""
      with pytest.raises(oError):
         witness_case2(sturmian_spec(alpha, x0), nHorizon)

# eof class Test_CStructure

# --------------------------------------------------------------------------------------------------------------
