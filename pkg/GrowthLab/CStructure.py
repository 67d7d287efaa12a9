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
# File: CStructure.py
#
# Normal basis structure of boundary languages.
#
# - decompose: splits the normal words of a finitely presented algebra of
#   finite dimension, slow or boundary growth into a finite part, rays,
#   pump series e R^k f, one two-ray word and bridge series, by walking the
#   paths of the factor automaton
# - coverage_check: compares a description with the normal words
# - witness_case2: finite-horizon evidence that a rotation coding is a
#   uniformly recurrent aperiodic word of complexity n + K
#
# History:
#
# 2026-09-14:
#  - initial version
#
# 2026-10-02:
#  - subsumption of families, bridge count bound
#
# 2026-10-09:
#  - case 2 witness
#
# ******************************************************************************

import random
from dataclasses import dataclass, replace

from GrowthLab.errors import CInputError, CClassError, CConsistencyError, CNotCase2Error, CResonanceError
from GrowthLab.logger import Logger
from GrowthLab.CGrowthConfig import get_config
from GrowthLab.CWords import CBiInfiniteSpec, factors, spec_factors, primitive_root, least_rotation, \
                             is_prefix_of_power, is_degenerate_two_ray
from GrowthLab.CComplexity import complexity_profile, detect_affine_tail, fitted_slope, \
                                  uniform_recurrence_bound, tail_to_json
from GrowthLab.CRotation import CCodingSpec, nonresonance_check, mechanical_word, exact_factor_horizon, \
                                coding_to_json, format_fraction
from GrowthLab.CMonomialAlgebra import build_automaton, classify_growth, normal_words, antidictionary, \
                                       verify_duality, CLASS_FINITE_DIM, CLASS_SLOW, CLASS_BOUNDARY

FAMILY_LEFT_RAY  = "left_rays"
FAMILY_RIGHT_RAY = "right_rays"
FAMILY_PUMP      = "pump"
FAMILY_TWO_RAY   = "two_ray"
FAMILY_BRIDGE    = "bridge"

# removal order when families cover each other
LFAMILY_ORDER = [FAMILY_BRIDGE, FAMILY_PUMP, FAMILY_RIGHT_RAY, FAMILY_LEFT_RAY, FAMILY_TWO_RAY]

PUMP_INDEX_SET = "full"

@dataclass(frozen=True)
class CNormalBasisDescription():
   """
Normal words of a presentation as the factors of:

* ``finite``: the finite part, words not covered by any infinite family
* ``left_rays``: (u, c) for u^∞/2 c
* ``right_rays``: (d, v) for d v^∞/2
* ``pumps``: (e, R, f) for e R^k f, k ≥ 0
* ``two_ray``: (u, c, v) for u^∞/2 c v^∞/2, or None
* ``bridges``: (E, u, c, v, F) for E u^n c v^m F, n, m ≥ 0

Words are in internal letters of ``alphabet``. Every infinite family has a
factor of length ``separation_length`` that no other family has.
   """
   alphabet: object
   finite: tuple = ()
   left_rays: tuple = ()
   right_rays: tuple = ()
   pumps: tuple = ()
   two_ray: tuple = None
   bridges: tuple = ()
   bridge_bound: int = 0
   separation_length: int = 0
   notes: tuple = ()

   def families(self):
      """
All infinite families as (kind, parameters) pairs.
      """
      listFamilies = [(FAMILY_LEFT_RAY, t) for t in self.left_rays]
      listFamilies += [(FAMILY_RIGHT_RAY, t) for t in self.right_rays]
      listFamilies += [(FAMILY_PUMP, t) for t in self.pumps]
      if self.two_ray is not None:
         listFamilies.append((FAMILY_TWO_RAY, self.two_ray))
      listFamilies += [(FAMILY_BRIDGE, t) for t in self.bridges]
      return listFamilies

   def without(self, sKind, tFamily):
      """
Copy with one family dropped.
      """
      dFields = {
         FAMILY_LEFT_RAY:  ("left_rays", tuple(t for t in self.left_rays if t != tFamily)),
         FAMILY_RIGHT_RAY: ("right_rays", tuple(t for t in self.right_rays if t != tFamily)),
         FAMILY_PUMP:      ("pumps", tuple(t for t in self.pumps if t != tFamily)),
         FAMILY_TWO_RAY:   ("two_ray", None),
         FAMILY_BRIDGE:    ("bridges", tuple(t for t in self.bridges if t != tFamily)),
      }
      sField, value = dFields[sKind]
      return replace(self, **{sField: value})

# eof class CNormalBasisDescription()

def family_factors(sKind, tFamily, n):
   """
Length-n factors of one infinite family.

Pump and bridge series are unfolded with loop counts up to n//|R| + 2, which
covers every length-n factor of every member.
   """
   if sKind == FAMILY_LEFT_RAY:
      return spec_factors(CBiInfiniteSpec.left_ray(*tFamily), n).words
   if sKind == FAMILY_RIGHT_RAY:
      return spec_factors(CBiInfiniteSpec.right_ray(*tFamily), n).words
   if sKind == FAMILY_TWO_RAY:
      return spec_factors(CBiInfiniteSpec.two_ray(*tFamily), n).words
   setWords = set()
   if sKind == FAMILY_PUMP:
      sE, sR, sF = tFamily
      for k in range(n // len(sR) + 3):
         setWords |= factors(sE + sR * k + sF, n).words
      return frozenset(setWords)
   if sKind == FAMILY_BRIDGE:
      sE, sU, sC, sV, sF = tFamily
      for i in range(n // len(sU) + 3):
         for j in range(n // len(sV) + 3):
            setWords |= factors(sE + sU * i + sC + sV * j + sF, n).words
      return frozenset(setWords)
   raise CInputError(f"Invalid family kind '{sKind}'")

def description_factors(oDescription, n):
   """
Length-n factors of everything a description lists.
   """
   setWords = set()
   for sKind, tFamily in oDescription.families():
      setWords |= family_factors(sKind, tFamily, n)
   for sWord in oDescription.finite:
      setWords |= factors(sWord, n).words
   return setWords

#
#  Canonical forms
#
########################################################################
def _is_power_suffix(sWord, sPeriod):
   return is_prefix_of_power(sWord[::-1], sPeriod[::-1])

def _canonical_left_ray(sU, sC):
   """
u^∞/2 c with u the least rotation of its primitive root and c not starting
with a full period.
   """
   sU = primitive_root(sU)
   sRho, nOffset = least_rotation(sU)
   sC = sU[nOffset:] + sC
   while sC.startswith(sRho):
      sC = sC[len(sRho):]
   return sRho, sC

def _canonical_right_ray(sD, sV):
   sV = primitive_root(sV)
   sRho, nOffset = least_rotation(sV)
   sD = sD + sV[:nOffset]
   while sD.endswith(sRho):
      sD = sD[:-len(sRho)]
   return sD, sRho

def _canonical_two_ray(sU, sC, sV):
   sRhoU, sC = _canonical_left_ray(sU, sC)
   sC, sRhoV = _canonical_right_ray(sC, sV)
   bChanged = True
   while bChanged:
      bChanged = False
      if sC.startswith(sRhoU):
         sC = sC[len(sRhoU):]
         bChanged = True
      if sC.endswith(sRhoV):
         sC = sC[:-len(sRhoV)]
         bChanged = True
   return sRhoU, sC, sRhoV

#
#  Path patterns
#
########################################################################
def _path_patterns(oAutomaton):
   """
Maximal path shapes of the live automaton as (segments, cycles) with
len(segments) == len(cycles) + 1. The words of a shape are
segments[0] cycles[0]^k0 segments[1] cycles[1]^k1 ... segments[-1].

A cycle is read from the state where the path enters it; a path may leave
the cycle after any prefix R[:i] of its word, which then starts the next
segment.
   """
   def explore(nState, tSegments, tCycles):
      nScc = oAutomaton.scc_of[nState]
      if oAutomaton.multiplicity[nScc] == 1:
         sCycle, listCycleStates = oAutomaton.cycle_word(nState)
         tCycles = tCycles + (sCycle,)
         bExit = False
         for i, nCycleState in enumerate(listCycleStates):
            for sLetter, nNext in oAutomaton.successors(nCycleState):
               if oAutomaton.scc_of[nNext] == nScc:
                  continue
               bExit = True
               yield from explore(nNext, tSegments + (sCycle[:i] + sLetter,), tCycles)
         if not bExit:
            yield tSegments + ("",), tCycles
         return
      listSuccessors = oAutomaton.successors(nState)
      if not listSuccessors:
         yield tSegments, tCycles
      for sLetter, nNext in listSuccessors:
         yield from explore(nNext, tSegments[:-1] + (tSegments[-1] + sLetter,), tCycles)

   return list(explore(0, ("",), ()))

def _sort_key(oAlphabet):
   def key(tFamily):
      return tuple(oAlphabet.sort_key(s) for s in tFamily)
   return key

def decompose(oPresentation, nWindow=None):
   """
Decompose the normal words of a presentation into families.

**Arguments:**

*  ``oPresentation``

   / *Condition*: required / *Type*: CPresentation /

   Must be of finite dimension, slow or boundary growth.

*  ``nWindow``

   / *Condition*: optional / *Type*: int / *Default*: CLASSIFY_WINDOW /

   Window passed on to the growth classification.

**Returns:**

*  ``oDescription``

   / *Type*: CNormalBasisDescription /

   Checked against the normal words up to COVERAGE_LENGTH; a failing check
   raises CConsistencyError.
   """
   oAlphabet = oPresentation.alphabet
   oAutomaton = build_automaton(oPresentation)
   oClass = classify_growth(oPresentation, nWindow, oAutomaton)
   if oClass.tag not in (CLASS_FINITE_DIM, CLASS_SLOW, CLASS_BOUNDARY):
      raise CClassError(f"Cannot decompose {oPresentation!r}. Reason: growth class is {oClass}, expected FiniteDim, Slow or Boundary")

   setLeft, setRight, setPumps, setTwoRays, setBridges = set(), set(), set(), set(), set()
   listCandidates = []
   listNotes = []
   for tSegments, tCycles in _path_patterns(oAutomaton):
      if len(tCycles) == 0:
         listCandidates.append(tSegments[0])
      elif len(tCycles) == 1:
         sE, sR, sF = tSegments[0], tCycles[0], tSegments[1]
         if _is_power_suffix(sE, sR):
            setLeft.add(_canonical_left_ray(sR, sF))
         elif is_prefix_of_power(sF, sR):
            setRight.add(_canonical_right_ray(sE, sR))
         else:
            sRho, nOffset = least_rotation(sR)
            setPumps.add((sE + sR[:nOffset], sRho, sR[nOffset:] + sF))
            listCandidates.append(sE + sF)
      elif len(tCycles) == 2:
         sE, sU, sC, sV, sF = tSegments[0], tCycles[0], tSegments[1], tCycles[1], tSegments[2]
         if _is_power_suffix(sE, sU) and is_prefix_of_power(sF, sV):
            tTwoRay = _canonical_two_ray(sU, sC, sV)
            if is_degenerate_two_ray(CBiInfiniteSpec.two_ray(*tTwoRay)):
               listNotes.append(f"two-ray word {tTwoRay} is periodic, kept as ray")
               setLeft.add(_canonical_left_ray(tTwoRay[0], ""))
            else:
               setTwoRays.add(tTwoRay)
         else:
            setBridges.add((sE, sU, sC, sV, sF))
      else:
         # three chained cycles make T(n) - n unbounded
         raise CConsistencyError(f"Path through {len(tCycles)} cycles {list(tCycles)} in {oPresentation!r}. Reason: impossible below superlinear growth")

   fKey = _sort_key(oAlphabet)
   dFamilies = {
      FAMILY_BRIDGE: sorted(setBridges, key=fKey),
      FAMILY_PUMP: sorted(setPumps, key=fKey),
      FAMILY_RIGHT_RAY: sorted(setRight, key=fKey),
      FAMILY_LEFT_RAY: sorted(setLeft, key=fKey),
      FAMILY_TWO_RAY: sorted(setTwoRays, key=fKey),
   }
   listFamilies = [(sKind, t) for sKind in LFAMILY_ORDER for t in dFamilies[sKind]]
   nSeparation = max(get_config("COVERAGE_LENGTH"), oAutomaton.n_live) \
                 + 2 * max((sum(len(s) for s in t) for _, t in listFamilies), default=0)
   listFamilies = _remove_subsumed(listFamilies, nSeparation, listNotes)

   listTwoRays = [t for sKind, t in listFamilies if sKind == FAMILY_TWO_RAY]
   if len(listTwoRays) > 1:
      raise CConsistencyError(f"Several two-ray families {listTwoRays} in {oPresentation!r}. Reason: boundary growth allows one")

   setFinite = set()
   dCovered = {}
   for sCandidate in listCandidates:
      for n in range(len(sCandidate) + 1):
         if n not in dCovered:
            dCovered[n] = set()
            for sKind, tFamily in listFamilies:
               dCovered[n] |= family_factors(sKind, tFamily, n)
         setFinite |= factors(sCandidate, n).words - dCovered[n]

   listBridges = [t for sKind, t in listFamilies if sKind == FAMILY_BRIDGE]
   oDescription = CNormalBasisDescription(
      alphabet=oAlphabet,
      finite=tuple(sorted(setFinite, key=oAlphabet.sort_key)),
      left_rays=tuple(t for sKind, t in listFamilies if sKind == FAMILY_LEFT_RAY),
      right_rays=tuple(t for sKind, t in listFamilies if sKind == FAMILY_RIGHT_RAY),
      pumps=tuple(t for sKind, t in listFamilies if sKind == FAMILY_PUMP),
      two_ray=listTwoRays[0] if listTwoRays else None,
      bridges=tuple(listBridges),
      bridge_bound=_bridge_bound(listBridges, get_config("COVERAGE_LENGTH")),
      separation_length=nSeparation,
      notes=tuple(listNotes),
   )
   oReport = coverage_check(oDescription, oPresentation, get_config("COVERAGE_LENGTH"))
   if not oReport.ok:
      raise CConsistencyError(f"Decomposition of {oPresentation!r} fails coverage. Reason: {oReport.text()}")
   return oDescription

def _remove_subsumed(listFamilies, nLength, listNotes):
   """
Drop families whose factors all belong to other families, compared at
length ``nLength``.
   """
   dFactors = {i: family_factors(sKind, t, nLength) for i, (sKind, t) in enumerate(listFamilies)}
   listKeep = list(range(len(listFamilies)))
   bChanged = True
   while bChanged:
      bChanged = False
      for i in listKeep:
         setOthers = set()
         for j in listKeep:
            if j != i:
               setOthers |= dFactors[j]
         if dFactors[i] <= setOthers:
            listKeep.remove(i)
            listNotes.append(f"{listFamilies[i][0]} {listFamilies[i][1]} covered by other families")
            Logger.log_debug(f"decompose: {listFamilies[i]} subsumed")
            bChanged = True
            break
   return [listFamilies[i] for i in listKeep]

def _bridge_bound(listBridges, nMax):
   """
Largest number of bridge series words of one length k ≤ nMax.
   """
   nBound = 0
   for k in range(nMax + 1):
      setWords = set()
      for sE, sU, sC, sV, sF in listBridges:
         nRest = k - len(sE) - len(sC) - len(sF)
         for i in range(max(0, nRest) // len(sU) + 1):
            nRight = nRest - i * len(sU)
            if nRight >= 0 and nRight % len(sV) == 0:
               setWords.add(sE + sU * i + sC + sV * (nRight // len(sV)) + sF)
      nBound = max(nBound, len(setWords))
   return nBound

#
#  Coverage
#
########################################################################
@dataclass(frozen=True)
class CCoverageReport():
   ok: bool
   n_max: int
   first_discrepancy: tuple = None

   def text(self):
      if self.ok:
         return f"coverage ok up to n={self.n_max}"
      n, sWord, sWhat = self.first_discrepancy
      return f"length {n}: word {sWord!r} {sWhat}"

def coverage_check(oDescription, oPresentation, nMax):
   """
Compare normal words and description factors for every length ≤ nMax.

**Returns:**

*  ``oReport``

   / *Type*: CCoverageReport /

   ``first_discrepancy`` is (n, word, "uncovered" | "overgenerated") for the
   smallest n and, within n, the smallest word.
   """
   oAlphabet = oPresentation.alphabet
   oAutomaton = build_automaton(oPresentation)
   for n in range(nMax + 1):
      setNormal = set(normal_words(oPresentation, n, oAutomaton))
      setDescribed = description_factors(oDescription, n)
      listBad = [(s, "uncovered") for s in setNormal - setDescribed]
      listBad += [(s, "overgenerated") for s in setDescribed - setNormal]
      if listBad:
         sWord, sWhat = min(listBad, key=lambda t: oAlphabet.sort_key(t[0]))
         return CCoverageReport(False, nMax, (n, oAlphabet.decode_word(sWord), sWhat))
   return CCoverageReport(True, nMax)

def excess_profile(oDescription, oPresentation, nMax):
   """
Per length, the number of normal words that are not factors of the two-ray
family. Bounded for boundary growth.
   """
   if oDescription.two_ray is None:
      raise CInputError("Invalid description. Reason: it has no two-ray family")
   oSpec = CBiInfiniteSpec.two_ray(*oDescription.two_ray)
   oAutomaton = build_automaton(oPresentation)
   return [len(set(normal_words(oPresentation, n, oAutomaton)) - spec_factors(oSpec, n).words)
           for n in range(nMax + 1)]

def description_to_json(oDescription):
   fDecode = oDescription.alphabet.decode_word
   return {
      "finite": [fDecode(s) for s in oDescription.finite],
      "left_rays": [{"u": fDecode(u), "c": fDecode(c)} for u, c in oDescription.left_rays],
      "right_rays": [{"d": fDecode(d), "v": fDecode(v)} for d, v in oDescription.right_rays],
      "pump": [{"e": fDecode(e), "R": fDecode(r), "f": fDecode(f), "K": PUMP_INDEX_SET} for e, r, f in oDescription.pumps],
      "two_ray": None if oDescription.two_ray is None else dict(zip(("u", "c", "v"), map(fDecode, oDescription.two_ray))),
      "bridge": [dict(zip(("E", "u", "c", "v", "F"), map(fDecode, t))) for t in oDescription.bridges],
      "bridge_bound": oDescription.bridge_bound,
      "separation_length": oDescription.separation_length,
      "notes": list(oDescription.notes),
   }

def description_to_text(oDescription):
   fDecode = oDescription.alphabet.decode_word
   listLines = ["normal basis = factors of:"]
   listLines.append(f"  finite part: {', '.join(repr(fDecode(s)) for s in oDescription.finite) or '-'}")
   for u, c in oDescription.left_rays:
      listLines.append(f"  left ray   ({fDecode(u)})^inf/2 . {fDecode(c)!r}")
   for d, v in oDescription.right_rays:
      listLines.append(f"  right ray  {fDecode(d)!r} . ({fDecode(v)})^inf/2")
   for e, r, f in oDescription.pumps:
      listLines.append(f"  pump       {fDecode(e)!r} . ({fDecode(r)})^k . {fDecode(f)!r}, k in N")
   if oDescription.two_ray is not None:
      u, c, v = map(fDecode, oDescription.two_ray)
      listLines.append(f"  two-ray    ({u})^inf/2 . {c!r} . ({v})^inf/2")
   for t in oDescription.bridges:
      e, u, c, v, f = map(fDecode, t)
      listLines.append(f"  bridge     {e!r} ({u})^n {c!r} ({v})^m {f!r}")
   if oDescription.bridges:
      listLines.append(f"  bridge words per length <= {oDescription.bridge_bound}")
   for sNote in oDescription.notes:
      listLines.append(f"  note: {sNote}")
   return "\n".join(listLines) + "\n"

#
#  Case 2 witness
#
########################################################################
@dataclass(frozen=True)
class CCase2Witness():
   source: CCodingSpec
   horizon: int
   exact_horizon: int
   K: int
   N: int
   uniform_recurrence_table: tuple
   inconclusive: bool
   antidictionary_sample: tuple
   duality_bound: int
   duality_ok: bool

def witness_case2(oSpec, nHorizon, nSamples=None, oRandom=None, bWaive=False):
   """
Finite-horizon evidence that a rotation coding is a uniformly recurrent
aperiodic word with complexity n + K.

**Arguments:**

*  ``oSpec``

   / *Condition*: required / *Type*: CCodingSpec or rotation CBiInfiniteSpec /

*  ``nHorizon``

   / *Condition*: required / *Type*: int /

   Length of the generated prefix.

*  ``nSamples``

   / *Condition*: optional / *Type*: int / *Default*: RECURRENCE_SAMPLES /

   Number of random factors whose recurrence bound is measured.

*  ``oRandom``

   / *Condition*: optional / *Type*: random.Random / *Default*: seeded with DEFAULT_SEED /

*  ``bWaive``

   / *Condition*: optional / *Type*: bool / *Default*: False /

   Accept resonant orbits.

**Returns:**

*  ``oWitness``

   / *Type*: CCase2Witness /
   """
   if isinstance(oSpec, CBiInfiniteSpec):
      oSpec = oSpec.coding
   if nSamples is None:
      nSamples = get_config("RECURRENCE_SAMPLES")
   if oRandom is None:
      oRandom = random.Random(get_config("DEFAULT_SEED"))
   if nHorizon < 4:
      raise CInputError(f"Invalid horizon {nHorizon}. Reason: at least 4 symbols are needed")
   oCertificate = nonresonance_check(oSpec, nHorizon)
   if not oCertificate.ok and not bWaive:
      raise CResonanceError(f"Orbit point {oCertificate.first_violation} lies on an arc endpoint. Reason: case 2 witness needs a nonresonant orbit", oCertificate.first_violation)
   sWord = mechanical_word(oSpec, nHorizon, bWaive=True)

   nExact = exact_factor_horizon(oSpec, nHorizon, min(get_config("AFFINE_PROBE_LENGTH"), nHorizon // 2))
   oProfile = complexity_profile(sWord, nExact, nExactUpTo=nExact)
   oTail = detect_affine_tail(oProfile)
   if oTail is None or oTail.slope != 1:
      sFound = f"tail {tail_to_json(oTail)}" if oTail is not None else f"no affine tail, fitted slope {fitted_slope(oProfile)}"
      raise CNotCase2Error(f"Not a case 2 witness (alpha={format_fraction(oSpec.alpha)}). Reason: {sFound}, expected slope 1")

   listTable = []
   bInconclusive = False
   nMaxLength = max(1, min(10, nExact))
   for _ in range(nSamples):
      nLength = oRandom.randint(1, nMaxLength)
      nStart = oRandom.randrange(0, max(1, nHorizon // 2 - nLength))
      sFactor = sWord[nStart:nStart + nLength]
      nBound = uniform_recurrence_bound(sWord, sFactor)
      if nBound is None:
         bInconclusive = True
      listTable.append((sFactor, nBound))
   if bInconclusive:
      Logger.log_warning("case 2 witness: some sampled factor has no recurrence bound within the prefix")

   nM = min(get_config("DUALITY_LENGTH"), nExact)
   listData = [factors(sWord, n) for n in range(1, nM + 1)]
   oAnti = antidictionary(listData)
   oDuality = verify_duality(listData)
   return CCase2Witness(source=oSpec,
                        horizon=nHorizon,
                        exact_horizon=nExact,
                        K=oTail.K,
                        N=oTail.N,
                        uniform_recurrence_table=tuple(listTable),
                        inconclusive=bInconclusive,
                        antidictionary_sample=tuple(oAnti.sorted_words()),
                        duality_bound=nM,
                        duality_ok=oDuality.ok)

def witness_to_json(oWitness):
   return {
      "source": coding_to_json(oWitness.source),
      "horizon": oWitness.horizon,
      "exact_horizon": oWitness.exact_horizon,
      "K": oWitness.K,
      "N": oWitness.N,
      "uniform_recurrence_table": [{"v": v, "N": n} for v, n in oWitness.uniform_recurrence_table],
      "inconclusive": oWitness.inconclusive,
      "antidictionary_sample": list(oWitness.antidictionary_sample),
      "duality": {"m": oWitness.duality_bound, "ok": oWitness.duality_ok},
   }
