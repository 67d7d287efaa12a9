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
# File: CMonomialAlgebra.py
#
# Finitely presented monomial algebras, given by an alphabet and a finite set
# of forbidden words (zero monomials):
#
# - factor-avoidance automaton (Aho-Corasick prefix states + dead state)
# - normal words and the growth profiles T(n), V(n)
# - growth classification (finite dimension, slow, boundary, polynomial,
#   exponential) from the cycle structure of the automaton
# - good words T_RL(n) and the slow growth criterion
# - antidictionaries of factor languages and the language/algebra duality
#
# History:
#
# 2026-09-10:
#  - initial version
#
# 2026-09-27:
#  - certification window for boundary growth
#  - good word profile by subset counting
#
# ******************************************************************************

import math
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from GrowthLab.errors import CInputError, CDataError, CConsistencyError
from GrowthLab.logger import Logger
from GrowthLab.CGrowthConfig import get_config
from GrowthLab.CWords import CAlphabet, CFactorSet
from GrowthLab.CComplexity import CGrowthProfile, KIND_T_ALGEBRA, KIND_V_ALGEBRA, KIND_T_RL, \
                                  detect_affine_tail, tail_to_json, profile_to_json

DEAD_STATE = -1

CLASS_FINITE_DIM  = "FiniteDim"
CLASS_SLOW        = "Slow"
CLASS_BOUNDARY    = "Boundary"
CLASS_SUPERLINEAR = "SuperlinearPoly"
CLASS_EXPONENTIAL = "Exponential"

#
#  Presentation
#
########################################################################
class CPresentation():
   """
Monomial algebra presentation: alphabet plus forbidden words.

Forbidden words containing another forbidden word as a factor are removed
(antichain reduction); the removed words are kept in ``removed``.
   """

   def __init__(self, oAlphabet, listForbidden):
      """
**Arguments:**

*  ``oAlphabet``

   / *Condition*: required / *Type*: CAlphabet /

*  ``listForbidden``

   / *Condition*: required / *Type*: list of str /

   Forbidden words in internal letters.
      """
      if not isinstance(oAlphabet, CAlphabet):
         oAlphabet = CAlphabet(tuple(oAlphabet))
      self.alphabet = oAlphabet
      setWords = set()
      for sWord in listForbidden:
         if sWord == "":
            raise CInputError("Invalid forbidden word. Reason: the empty word would make the algebra zero")
         setWords.add(oAlphabet.check_word(sWord))
      listKept = []
      listRemoved = []
      for sWord in sorted(setWords, key=oAlphabet.sort_key):
         if any(sOther != sWord and sOther in sWord for sOther in setWords):
            listRemoved.append(sWord)
         else:
            listKept.append(sWord)
      if listRemoved:
         Logger.log_warning(f"Antichain reduction removed {', '.join(repr(oAlphabet.decode_word(s)) for s in listRemoved)}")
      self.forbidden = tuple(listKept)
      self.removed = tuple(listRemoved)

   def __repr__(self):
      return f"CPresentation(alphabet={list(self.alphabet.symbols)}, forbidden={list(self.forbidden)})"

   def __eq__(self, other):
      return isinstance(other, CPresentation) and self.alphabet == other.alphabet and set(self.forbidden) == set(other.forbidden)

   def __hash__(self):
      return hash((self.alphabet, frozenset(self.forbidden)))

   def to_json(self):
      return {
         "alphabet": list(self.alphabet.symbols),
         "forbidden": [self.alphabet.decode_word(s) for s in self.forbidden],
         "removed": [self.alphabet.decode_word(s) for s in self.removed],
      }

# eof class CPresentation()

def parse_presentation(sText, sSeparator=None):
   """
Parse the presentation file format.

The first significant line lists the alphabet, every further line one
forbidden word. Blank lines and lines starting with ``#`` are skipped.

**Arguments:**

*  ``sText``

   / *Condition*: required / *Type*: str /

*  ``sSeparator``

   / *Condition*: optional / *Type*: str / *Default*: None /

   Symbol separator for multi-character alphabets (whitespace otherwise).

**Returns:**

*  ``oPresentation``

   / *Type*: CPresentation /
   """
   oAlphabet = None
   listForbidden = []
   for nLine, sLine in enumerate(sText.splitlines(), start=1):
      sLine = sLine.strip()
      if sLine == "" or sLine.startswith("#"):
         continue
      try:
         if oAlphabet is None:
            oAlphabet = CAlphabet.from_string(sLine, sSeparator)
         else:
            listForbidden.append(oAlphabet.encode_word(sLine))
      except CInputError as reason:
         raise CInputError(f"Presentation line {nLine}: {reason}")
   if oAlphabet is None:
      raise CInputError("Invalid presentation. Reason: alphabet line is missing")
   return CPresentation(oAlphabet, listForbidden)

#
#  Factor automaton
#
########################################################################
class CFactorAutomaton():
   """
Deterministic complete recognizer of the normal words of a presentation.

Live state ``i`` stands for the word ``states[i]``: the longest suffix of the
input read so far that is a proper prefix of a forbidden word. State 0 is the
initial state (empty word). Reading a forbidden word leads to ``DEAD_STATE``.
   """

   def __init__(self, oPresentation):
      self.presentation = oPresentation
      self.alphabet = oPresentation.alphabet
      setForbidden = set(oPresentation.forbidden)
      setPrefixes = set(sWord[:i] for sWord in setForbidden for i in range(len(sWord)))
      setPrefixes.add("")

      listStates = [""]
      dIndex = {"": 0}
      self.transitions = {}
      queueStates = deque([""])
      while queueStates:
         sState = queueStates.popleft()
         nState = dIndex[sState]
         for sLetter in self.alphabet.letters:
            sNext = sState + sLetter
            if any(sNext[j:] in setForbidden for j in range(len(sNext))):
               self.transitions[(nState, sLetter)] = DEAD_STATE
               continue
            sTarget = ""
            for j in range(len(sNext)):
               if sNext[j:] in setPrefixes:
                  sTarget = sNext[j:]
                  break
            if sTarget not in dIndex:
               dIndex[sTarget] = len(listStates)
               listStates.append(sTarget)
               queueStates.append(sTarget)
            self.transitions[(nState, sLetter)] = dIndex[sTarget]
      self.states = tuple(listStates)

      self.graph = nx.MultiDiGraph()
      self.graph.add_nodes_from(range(len(self.states)))
      for (nState, sLetter), nTarget in sorted(self.transitions.items()):
         if nTarget != DEAD_STATE:
            self.graph.add_edge(nState, nTarget, key=sLetter, letter=sLetter)

      oCondensation = nx.condensation(nx.DiGraph(self.graph))
      listOrder = list(nx.lexicographical_topological_sort(oCondensation,
                                                          key=lambda c: min(oCondensation.nodes[c]["members"])))
      dRenumber = {c: i for i, c in enumerate(listOrder)}
      self.sccs = [frozenset(oCondensation.nodes[c]["members"]) for c in listOrder]
      self.scc_of = {nState: dRenumber[c] for nState, c in oCondensation.graph["mapping"].items()}
      self.condensation = nx.relabel_nodes(oCondensation, dRenumber)
      self.multiplicity = [self._cycle_multiplicity(setScc) for setScc in self.sccs]

   def _cycle_multiplicity(self, setScc):
      """
0 for an SCC without cycle, 1 for a single simple cycle, 2 for two or more.
      """
      nInternal = sum(1 for nState in setScc for sLetter in self.alphabet.letters
                      if self.transitions[(nState, sLetter)] in setScc)
      if nInternal == 0:
         return 0
      if nInternal == len(setScc):
         return 1
      return 2

   @property
   def n_live(self):
      return len(self.states)

   def step(self, nState, sLetter):
      if nState == DEAD_STATE:
         return DEAD_STATE
      return self.transitions[(nState, sLetter)]

   def run(self, sWord, nState=0):
      for sLetter in sWord:
         nState = self.step(nState, sLetter)
         if nState == DEAD_STATE:
            break
      return nState

   def accepts(self, sWord):
      return self.run(sWord) != DEAD_STATE

   def successors(self, nState):
      """
Live successors as (letter, state) pairs in alphabet order.
      """
      return [(sLetter, self.transitions[(nState, sLetter)]) for sLetter in self.alphabet.letters
              if self.transitions[(nState, sLetter)] != DEAD_STATE]

   def cyclic_sccs(self):
      return [i for i, nMult in enumerate(self.multiplicity) if nMult > 0]

   def cycle_states(self):
      return set().union(*[self.sccs[i] for i in self.cyclic_sccs()]) if self.cyclic_sccs() else set()

   def cycle_word(self, nEntry):
      """
Word of the simple cycle through ``nEntry``, read from ``nEntry``, and the
states visited (starting with ``nEntry``). Only defined for SCCs with cycle
multiplicity 1.
      """
      nScc = self.scc_of[nEntry]
      if self.multiplicity[nScc] != 1:
         raise CConsistencyError(f"State {nEntry} is not on a single simple cycle")
      setScc = self.sccs[nScc]
      listLetters, listStates = [], [nEntry]
      nState = nEntry
      while True:
         sLetter, nNext = next((a, q) for a, q in self.successors(nState) if q in setScc)
         listLetters.append(sLetter)
         nState = nNext
         if nState == nEntry:
            break
         listStates.append(nState)
      return "".join(listLetters), listStates

   def chain_depth(self):
      """
Largest number of cyclic SCCs on one path of the condensation.
      """
      dDepth = {}
      for c in nx.topological_sort(self.condensation):
         nOwn = 1 if self.multiplicity[c] > 0 else 0
         dDepth[c] = nOwn + max((dDepth[p] for p in self.condensation.predecessors(c)), default=0)
      return max(dDepth.values(), default=0)

# eof class CFactorAutomaton()

def build_automaton(oPresentation):
   """
Factor-avoidance automaton of a presentation.

**Arguments:**

*  ``oPresentation``

   / *Condition*: required / *Type*: CPresentation /

**Returns:**

*  ``oAutomaton``

   / *Type*: CFactorAutomaton /

   At most 1 + Σ|f| states, the dead state included.
   """
   return CFactorAutomaton(oPresentation)

def automaton_graph(oAutomaton):
   """
Copy of the live part of the automaton as ``networkx.MultiDiGraph``; nodes are
the prefix words, one edge per letter (edge key and attribute ``letter``).
   """
   oGraph = nx.MultiDiGraph()
   for nState, sWord in enumerate(oAutomaton.states):
      oGraph.add_node(sWord, scc=oAutomaton.scc_of[nState])
   for u, v, sLetter in oAutomaton.graph.edges(keys=True):
      oGraph.add_edge(oAutomaton.states[u], oAutomaton.states[v], key=sLetter, letter=sLetter)
   return oGraph

#
#  Normal words and growth
#
########################################################################
def normal_words(oPresentation, n, oAutomaton=None):
   """
All normal words of length exactly ``n`` in length-lex order.
   """
   if n < 0:
      raise CInputError(f"Invalid length {n}. Reason: must not be negative")
   if oAutomaton is None:
      oAutomaton = build_automaton(oPresentation)
   listResult = []
   listStack = [("", 0)]
   while listStack:
      sWord, nState = listStack.pop()
      if len(sWord) == n:
         listResult.append(sWord)
         continue
      # reversed so that the smallest letter is expanded first
      for sLetter, nNext in reversed(oAutomaton.successors(nState)):
         listStack.append((sWord + sLetter, nNext))
   return listResult

def brute_force_normal_words(oPresentation, n):
   """
Normal words of length ``n`` by extending the shorter ones letter by letter and
testing every forbidden word as a substring. Independent of the automaton.
   """
   listWords = [""]
   for _ in range(n):
      listWords = [sWord + sLetter for sWord in listWords for sLetter in oPresentation.alphabet.letters
                   if not any(f in sWord + sLetter for f in oPresentation.forbidden)]
   return listWords

def count_normal_words(oAutomaton, nMax):
   """
T(0..nMax) by counting runs per state (big integers).
   """
   listT = [1]
   dCounts = {0: 1}
   for _ in range(nMax):
      dNext = {}
      for nState, nCount in dCounts.items():
         for _, nTarget in oAutomaton.successors(nState):
            dNext[nTarget] = dNext.get(nTarget, 0) + nCount
      dCounts = dNext
      listT.append(sum(dCounts.values()))
   return listT

def growth_profiles(oPresentation, nMax, oAutomaton=None):
   """
Profiles T(n) (normal words of length n) and V(n) = Σ_{k≤n} T(k), V(0) = 1.

**Returns:**

*  ``(oT, oV)``

   / *Type*: tuple of CGrowthProfile /
   """
   if nMax < 0:
      raise CInputError(f"Invalid horizon {nMax}. Reason: must not be negative")
   if oAutomaton is None:
      oAutomaton = build_automaton(oPresentation)
   listT = count_normal_words(oAutomaton, nMax)
   listV = []
   nSum = 0
   for nValue in listT:
      nSum += nValue
      listV.append(nSum)
   return (CGrowthProfile.from_values(KIND_T_ALGEBRA, listT),
           CGrowthProfile.from_values(KIND_V_ALGEBRA, listV))

@dataclass(frozen=True)
class CGrowthClass():
   tag: str
   K: int = None
   degree: int = None
   certificate: dict = field(default_factory=dict, compare=False)
   empirical: bool = False

   def __str__(self):
      if self.tag == CLASS_BOUNDARY:
         return f"{self.tag}({self.K})"
      if self.tag == CLASS_SUPERLINEAR:
         return f"{self.tag}({self.degree})"
      return self.tag

   def to_json(self):
      return {
         "tag": self.tag,
         "K": self.K,
         "degree": self.degree,
         "empirical": self.empirical,
         "certificate": self.certificate,
      }

def classify_growth(oPresentation, nWindow=None, oAutomaton=None):
   """
Growth class of a finitely presented monomial algebra.

The structure of the automaton decides the regime:

* no live cycle: finite dimension
* an SCC with two or more cycles: exponential growth
* otherwise polynomial, with d = largest number of cycles on one path:
  d = 1 is slow growth (T bounded), d ≥ 2 is boundary growth when T(n) = n + K
  is certified, else polynomial growth of degree d on V.

T satisfies a linear recurrence of order S (live states) and is
quasi-polynomial from n = S on with period lcm(cycle lengths). The line
n + K is certified when S + 2 consecutive values lie on it; a window of
2S + lcm values guarantees that. Windows above CERTIFICATION_CAP are not
computed, the class is then marked empirical.

**Arguments:**

*  ``oPresentation``

   / *Condition*: required / *Type*: CPresentation /

*  ``nWindow``

   / *Condition*: optional / *Type*: int / *Default*: CLASSIFY_WINDOW /

   Requested length of the numeric profile, enlarged to the certification
   window when needed.

**Returns:**

*  ``oClass``

   / *Type*: CGrowthClass /
   """
   if nWindow is None:
      nWindow = get_config("CLASSIFY_WINDOW")
   if nWindow < 1:
      raise CInputError(f"Invalid window {nWindow}. Reason: must be positive")
   if oAutomaton is None:
      oAutomaton = build_automaton(oPresentation)
   nStates = oAutomaton.n_live
   listCyclic = oAutomaton.cyclic_sccs()
   dCertificate = {
      "live_states": nStates,
      "cyclic_sccs": len(listCyclic),
      "cycle_multiplicities": [oAutomaton.multiplicity[c] for c in listCyclic],
   }

   if not listCyclic:
      nLongest = nx.dag_longest_path_length(nx.DiGraph(oAutomaton.graph))
      listT = count_normal_words(oAutomaton, nLongest + 1)
      dCertificate.update({"structure": "acyclic", "longest_word": nLongest, "dimension": sum(listT), "T": listT})
      return CGrowthClass(CLASS_FINITE_DIM, certificate=dCertificate)

   listMulti = [c for c in listCyclic if oAutomaton.multiplicity[c] >= 2]
   if listMulti:
      listStates = sorted(oAutomaton.states[q] for q in oAutomaton.sccs[listMulti[0]])
      dCertificate.update({"structure": "scc with two or more cycles",
                           "scc_states": [oAutomaton.alphabet.decode_word(s) for s in listStates],
                           "T": count_normal_words(oAutomaton, min(nWindow, 16))})
      return CGrowthClass(CLASS_EXPONENTIAL, certificate=dCertificate)

   nDepth = oAutomaton.chain_depth()
   listLengths = [len(oAutomaton.sccs[c]) for c in listCyclic]
   nLcm = math.lcm(*listLengths)
   nRequired = 2 * nStates + nLcm
   nCap = get_config("CERTIFICATION_CAP")
   bEmpirical = nRequired > nCap
   if bEmpirical:
      nUse = min(nWindow, nCap)
      Logger.log_warning(f"Certification window {nRequired} exceeds cap {nCap}, class is empirical")
   else:
      nUse = max(nWindow, nRequired)
   Logger.log_debug(f"classify: S={nStates} lcm={nLcm} depth={nDepth} window={nUse}")
   listT = count_normal_words(oAutomaton, nUse)
   oProfile = CGrowthProfile.from_values(KIND_T_ALGEBRA, listT)
   oTail = detect_affine_tail(oProfile)
   dCertificate.update({
      "structure": "single cycles",
      "chain_depth": nDepth,
      "cycle_lengths": listLengths,
      "lcm": nLcm,
      "required_window": nRequired,
      "window": nUse,
      "tail": tail_to_json(oTail),
      "T_last": listT[-1],
   })

   if nDepth == 1:
      dCertificate["max_T"] = max(listT)
      return CGrowthClass(CLASS_SLOW, certificate=dCertificate, empirical=bEmpirical)
   if nDepth == 2 and oTail is not None and oTail.slope == 1:
      bCertified = oTail.support >= nStates + 2
      dCertificate["certified"] = bCertified
      if bCertified or bEmpirical:
         return CGrowthClass(CLASS_BOUNDARY, K=oTail.K, certificate=dCertificate, empirical=not bCertified)
   return CGrowthClass(CLASS_SUPERLINEAR, degree=nDepth, certificate=dCertificate, empirical=bEmpirical)

#
#  Good words
#
########################################################################
def good_states(oAutomaton):
   """
(states reachable from a live cycle, states from which a live cycle is reachable)
   """
   setCycle = oAutomaton.cycle_states()
   setFrom = set(setCycle)
   setTo = set(setCycle)
   for nState in setCycle:
      setFrom |= nx.descendants(oAutomaton.graph, nState)
      setTo |= nx.ancestors(oAutomaton.graph, nState)
   return setFrom, setTo

def good_word_profile(oPresentation, nMax, oAutomaton=None):
   """
T_RL(n): number of words v of length n such that w1·v·w2 is normal for
arbitrarily long w1 and w2.

v is good iff some run of v starts in a state reachable from a live cycle
and ends in a state from which a live cycle is reachable. Words are counted
by the set of such end states, which the states keep determining letter by
letter.
   """
   if oAutomaton is None:
      oAutomaton = build_automaton(oPresentation)
   setFrom, setTo = good_states(oAutomaton)
   setStart = frozenset(setFrom & setTo)
   dCounts = {setStart: 1} if setStart else {}
   listValues = [sum(dCounts.values())]
   for _ in range(nMax):
      dNext = {}
      for setStates, nCount in dCounts.items():
         for sLetter in oAutomaton.alphabet.letters:
            setTarget = frozenset(q for q in (oAutomaton.step(p, sLetter) for p in setStates)
                                  if q != DEAD_STATE and q in setTo)
            if setTarget:
               dNext[setTarget] = dNext.get(setTarget, 0) + nCount
      dCounts = dNext
      listValues.append(sum(dCounts.values()))
   return CGrowthProfile.from_values(KIND_T_RL, listValues)

def slow_growth_criterion(oPresentation, nWindow=None, oAutomaton=None):
   """
Least n with T_RL(n) = T_RL(n+1) inside the window, None if there is none.

A witness implies slow growth or finite dimension; a different class raises
CConsistencyError.
   """
   if nWindow is None:
      nWindow = get_config("CLASSIFY_WINDOW")
   if oAutomaton is None:
      oAutomaton = build_automaton(oPresentation)
   oProfile = good_word_profile(oPresentation, nWindow + 1, oAutomaton)
   Logger.log_debug(f"T_RL = {list(oProfile.values)}")
   for n in range(nWindow + 1):
      if oProfile.values[n] == oProfile.values[n + 1]:
         oClass = classify_growth(oPresentation, nWindow, oAutomaton)
         if oClass.tag not in (CLASS_SLOW, CLASS_FINITE_DIM):
            raise CConsistencyError(f"Slow growth criterion failed for {oPresentation!r}. Reason: T_RL({n}) = T_RL({n+1}) but class is {oClass}")
         return n
   return None

#
#  Antidictionary and duality
#
########################################################################
@dataclass(frozen=True)
class CAntidictionary():
   words: frozenset
   bound: int
   alphabet: CAlphabet = None

   def sorted_words(self):
      if self.alphabet is None:
         return sorted(self.words, key=lambda s: (len(s), s))
      return sorted(self.words, key=self.alphabet.sort_key)

def _factor_data_by_length(listFactorData):
   dData = {0: frozenset([""])}
   for oFactors in listFactorData:
      if isinstance(oFactors, CFactorSet):
         dData[oFactors.n] = frozenset(oFactors.words)
      else:
         setWords = frozenset(oFactors)
         nLengths = set(len(s) for s in setWords)
         if len(nLengths) > 1:
            raise CDataError(f"Invalid factor data. Reason: mixed word lengths {sorted(nLengths)}")
         if setWords:
            dData[nLengths.pop()] = setWords
   nBound = max(dData)
   for n in range(nBound + 1):
      if n not in dData:
         raise CDataError(f"Invalid factor data. Reason: length {n} is missing")
   return dData, nBound

def antidictionary(listFactorData, oAlphabet=None):
   """
Minimal absent words up to the largest length of the factor data.

**Arguments:**

*  ``listFactorData``

   / *Condition*: required / *Type*: list of CFactorSet /

   Factor sets for n = 1..m (n = 0 optional). Must be downward closed.

*  ``oAlphabet``

   / *Condition*: optional / *Type*: CAlphabet / *Default*: letters of the data /

   Letters missing from the data are minimal absent words of length 1.

**Returns:**

*  ``oAntidictionary``

   / *Type*: CAntidictionary /
   """
   dData, nBound = _factor_data_by_length(listFactorData)
   for n in range(2, nBound + 1):
      for sWord in sorted(dData[n]):
         for sPart in (sWord[:-1], sWord[1:]):
            if sPart not in dData[n - 1]:
               raise CDataError(f"Factor data not downward closed. Reason: {sWord!r} is listed but its factor {sPart!r} is not")
   if oAlphabet is None:
      listLetters = sorted(set(dData.get(1, frozenset())))
      if not listLetters:
         return CAntidictionary(frozenset(), nBound)
      oAlphabet = CAlphabet(tuple(listLetters))
   setWords = set()
   if nBound >= 1:
      for sLetter in oAlphabet.letters:
         if sLetter not in dData[1]:
            setWords.add(sLetter)
   for n in range(2, nBound + 1):
      for sMiddle in dData[n - 2]:
         for a in oAlphabet.letters:
            if a + sMiddle not in dData[n - 1]:
               continue
            for b in oAlphabet.letters:
               if sMiddle + b in dData[n - 1] and a + sMiddle + b not in dData[n]:
                  setWords.add(a + sMiddle + b)
   return CAntidictionary(frozenset(setWords), nBound, oAlphabet)

@dataclass(frozen=True)
class CDualityReport():
   bound: int
   ok: bool
   antidictionary: CAntidictionary
   presentation: CPresentation
   counts: tuple

   def to_json(self):
      oAlphabet = self.antidictionary.alphabet
      fDecode = oAlphabet.decode_word if oAlphabet is not None else (lambda s: s)
      return {
         "m": self.bound,
         "ok": self.ok,
         "antidictionary": [fDecode(s) for s in self.antidictionary.sorted_words()],
         "counts": list(self.counts),
      }

def verify_duality(listFactorData, oAlphabet=None):
   """
Rebuild the language from its truncated antidictionary and compare.

The normal words of the presentation {alphabet, antidictionary} must equal
the factor data at every length ≤ m.

**Returns:**

*  ``oReport``

   / *Type*: CDualityReport /

   Raises CConsistencyError naming the first mismatch.
   """
   dData, nBound = _factor_data_by_length(listFactorData)
   oAnti = antidictionary(listFactorData, oAlphabet)
   listCounts = [len(dData[n]) for n in range(nBound + 1)]
   if oAnti.alphabet is None:
      # nothing but the empty word
      return CDualityReport(nBound, True, oAnti, None, tuple(listCounts))
   oPresentation = CPresentation(oAnti.alphabet, sorted(oAnti.words))
   oAutomaton = build_automaton(oPresentation)
   for n in range(nBound + 1):
      setNormal = set(normal_words(oPresentation, n, oAutomaton))
      if setNormal != dData[n]:
         listExtra = sorted(setNormal - dData[n])
         listMissing = sorted(dData[n] - setNormal)
         raise CConsistencyError(f"Duality mismatch at length {n}. Reason: extra {listExtra[:3]}, missing {listMissing[:3]}")
   return CDualityReport(nBound, True, oAnti, oPresentation, tuple(listCounts))

def algebra_report(oPresentation, nWindow=None):
   """
Profiles, class, good words and criterion witness of a presentation as one
JSON-ready dictionary.
   """
   if nWindow is None:
      nWindow = get_config("CLASSIFY_WINDOW")
   oAutomaton = build_automaton(oPresentation)
   oT, oV = growth_profiles(oPresentation, nWindow, oAutomaton)
   oClass = classify_growth(oPresentation, nWindow, oAutomaton)
   return {
      "presentation": oPresentation.to_json(),
      "automaton": {"live_states": oAutomaton.n_live, "sccs": len(oAutomaton.sccs)},
      "T": profile_to_json(oT),
      "V": profile_to_json(oV),
      "class": oClass.to_json(),
      "class_text": str(oClass),
      "T_RL": profile_to_json(good_word_profile(oPresentation, nWindow, oAutomaton)),
      "slow_growth_witness": slow_growth_criterion(oPresentation, nWindow, oAutomaton),
   }
