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
# File: CRotation.py
#
# Exact circle rotations x -> x + alpha (mod 1) and their symbolic codings:
# Sturmian words, mechanical words over arc unions and the minimal growth
# systems whose arcs are cut by points n_j*alpha.
#
# All decisions are taken on exact rationals. Irrational rotation numbers are
# represented by continued fraction convergents whose denominator exceeds the
# horizon of interest.
#
# History:
#
# 2026-09-05:
#  - initial version
#
# 2026-09-22:
#  - exactness horizon of generated prefixes
#  - integer scaling of orbit computations
#
# ******************************************************************************

import bisect
import math
from dataclasses import dataclass, replace
from fractions import Fraction

from GrowthLab.errors import CInputError, CResonanceError, CDegeneratePartitionError
from GrowthLab.logger import Logger

ARC_CONVENTION = "half-open [l, r)"

def parse_angle(value, bAllowOne=False):
   """
Convert ``"p/q"``, an integer or a Fraction into an exact angle.

**Arguments:**

*  ``value``

   / *Condition*: required / *Type*: str, int, Fraction /

*  ``bAllowOne``

   / *Condition*: optional / *Type*: bool / *Default*: False /

   Accept the value 1 (right end of an arc).

**Returns:**

*  ``fAngle``

   / *Type*: Fraction /

   Value in [0,1), or [0,1] with ``bAllowOne``.
   """
   if isinstance(value, float):
      raise CInputError(f"Invalid angle {value!r}. Reason: floating point values are not accepted, use 'p/q'")
   try:
      fAngle = Fraction(value)
   except (ValueError, TypeError, ZeroDivisionError) as reason:
      raise CInputError(f"Invalid angle {value!r}. Reason: {reason}")
   if fAngle < 0 or fAngle > 1 or (fAngle == 1 and not bAllowOne):
      raise CInputError(f"Invalid angle {value!r}. Reason: expected a value in [0,1{']' if bAllowOne else ')'}")
   return fAngle

def format_fraction(fValue):
   if fValue.denominator == 1:
      return str(fValue.numerator)
   return f"{fValue.numerator}/{fValue.denominator}"

#
#  Arcs and partitions
#
########################################################################
@dataclass(frozen=True)
class CArc():
   """
Half-open arc [l, r) on the circle [0,1).

``l > r`` wraps through 0, ``l == r`` is the full circle, ``r`` may be 1.
   """
   l: Fraction
   r: Fraction

   def __post_init__(self):
      object.__setattr__(self, 'l', parse_angle(self.l))
      object.__setattr__(self, 'r', parse_angle(self.r, bAllowOne=True))

   @property
   def measure(self):
      if self.l < self.r:
         return self.r - self.l
      return 1 - self.l + self.r

   def contains(self, x):
      if self.l < self.r:
         return self.l <= x < self.r
      return x >= self.l or x < self.r

   def pieces(self):
      """
Non-wrapping intervals [a, b) with a < b covering the arc.
      """
      if self.l < self.r:
         return [(self.l, self.r)]
      return [(a, b) for (a, b) in ((self.l, Fraction(1)), (Fraction(0), self.r)) if a < b]

   def endpoints(self):
      return {self.l % 1, self.r % 1}

# eof class CArc()

@dataclass(frozen=True)
class CArcUnion():
   """
Finite union of pairwise disjoint arcs.
   """
   arcs: tuple

   def __post_init__(self):
      object.__setattr__(self, 'arcs', tuple(self.arcs))
      _check_disjoint([oArc for oArc in self.arcs], "arc union")
      if self.measure > 1:
         raise CDegeneratePartitionError(f"Invalid arc union. Reason: total measure {self.measure} exceeds 1")

   @property
   def measure(self):
      return sum((oArc.measure for oArc in self.arcs), Fraction(0))

   def contains(self, x):
      return any(oArc.contains(x) for oArc in self.arcs)

   def endpoints(self):
      setEndpoints = set()
      for oArc in self.arcs:
         setEndpoints |= oArc.endpoints()
      return setEndpoints

# eof class CArcUnion()

def _check_disjoint(listArcs, sWhat):
   listPieces = sorted(p for oArc in listArcs for p in oArc.pieces())
   for (a0, b0), (a1, b1) in zip(listPieces, listPieces[1:]):
      if a1 < b0:
         raise CDegeneratePartitionError(f"Invalid {sWhat}. Reason: arcs [{format_fraction(a0)}, {format_fraction(b0)}) and [{format_fraction(a1)}, {format_fraction(b1)}) overlap")

@dataclass(frozen=True)
class CCodingSpec():
   """
Rotation by ``alpha`` started at ``x0``, coded by a partition of the circle.

``partition`` is a tuple of (symbol, CArcUnion) pairs in symbol order.
   """
   alpha: Fraction
   x0: Fraction
   partition: tuple

   def __post_init__(self):
      object.__setattr__(self, 'alpha', parse_angle(self.alpha))
      object.__setattr__(self, 'x0', parse_angle(self.x0))
      object.__setattr__(self, 'partition', tuple(self.partition))
      if len(self.partition) == 0:
         raise CDegeneratePartitionError("Invalid partition. Reason: no symbols")
      listSymbols = [sSymbol for sSymbol, _ in self.partition]
      if len(set(listSymbols)) != len(listSymbols):
         raise CDegeneratePartitionError(f"Invalid partition. Reason: duplicate symbols {listSymbols}")
      _check_disjoint([oArc for _, oUnion in self.partition for oArc in oUnion.arcs], "partition")
      fMeasure = sum((oUnion.measure for _, oUnion in self.partition), Fraction(0))
      if fMeasure != 1:
         raise CDegeneratePartitionError(f"Invalid partition. Reason: arcs cover measure {format_fraction(fMeasure)} instead of 1")

   @property
   def symbols(self):
      return [sSymbol for sSymbol, _ in self.partition]

   def endpoints(self):
      setEndpoints = set()
      for _, oUnion in self.partition:
         setEndpoints |= oUnion.endpoints()
      return sorted(setEndpoints)

   def symbol_of(self, x):
      for sSymbol, oUnion in self.partition:
         if oUnion.contains(x):
            return sSymbol
      raise CDegeneratePartitionError(f"Point {format_fraction(x)} is not covered by the partition")

   def with_x0(self, x0):
      return replace(self, x0=x0)

# eof class CCodingSpec()

@dataclass(frozen=True)
class CNonresonanceCertificate():
   horizon: int
   ok: bool
   first_violation: int = None

#
#  Integer scaled orbit
#
########################################################################
class CScaledCoding():
   """
A coding spec rescaled to integers modulo the common denominator ``D``, so
orbit and membership computations avoid Fraction arithmetic.
   """

   def __init__(self, oSpec):
      listValues = [oSpec.alpha, oSpec.x0] + oSpec.endpoints()
      self.nD = 1
      for fValue in listValues:
         self.nD = self.nD * fValue.denominator // math.gcd(self.nD, fValue.denominator)
      self.nAlpha = int(oSpec.alpha * self.nD)
      self.nX0 = int(oSpec.x0 * self.nD)
      self.setEndpoints = {int(e * self.nD) for e in oSpec.endpoints()}
      # sorted boundaries with the symbol valid from each boundary on
      listCuts = sorted(self.setEndpoints | {0})
      self.listCuts = listCuts
      self.listCutSymbols = [oSpec.symbol_of(Fraction(nCut, self.nD)) for nCut in listCuts]

   def point(self, n):
      return (self.nX0 + n * self.nAlpha) % self.nD

   def symbol(self, nPoint):
      return self.listCutSymbols[bisect.bisect_right(self.listCuts, nPoint) - 1]

# eof class CScaledCoding()

def orbit_point(alpha, x0, n):
   """
Exact fractional part of x0 + n·alpha.

**Arguments:**

*  ``alpha``, ``x0``

   / *Condition*: required / *Type*: Fraction /

*  ``n``

   / *Condition*: required / *Type*: int /

   Step, ``n ≥ 0``.

**Returns:**

   / *Type*: Fraction /
   """
   if n < 0:
      raise CInputError(f"Invalid orbit step {n}. Reason: must not be negative")
   return (parse_angle(x0) + n * parse_angle(alpha)) % 1

def nonresonance_check(oSpec, nHorizon):
   """
Check that the forward orbit x_n, 1 ≤ n < horizon, never hits an arc endpoint.

The starting point x_0 is placed by the caller and the half-open convention
assigns it an arc without ambiguity, so it is not checked.

**Returns:**

*  ``oCertificate``

   / *Type*: CNonresonanceCertificate /
   """
   if nHorizon < 0:
      raise CInputError(f"Invalid horizon {nHorizon}. Reason: must not be negative")
   oScaled = CScaledCoding(oSpec)
   for n in range(1, nHorizon):
      if oScaled.point(n) in oScaled.setEndpoints:
         return CNonresonanceCertificate(nHorizon, False, n)
   return CNonresonanceCertificate(nHorizon, True)

def mechanical_word(oSpec, nLength, bWaive=False):
   """
Coding of the orbit of x0: symbol n is the symbol whose arc union contains
x0 + n·alpha.

**Arguments:**

*  ``oSpec``

   / *Condition*: required / *Type*: CCodingSpec /

*  ``nLength``

   / *Condition*: required / *Type*: int /

*  ``bWaive``

   / *Condition*: optional / *Type*: bool / *Default*: False /

   Generate the word even if the orbit hits an arc endpoint.

**Returns:**

   / *Type*: str /
   """
   if nLength < 0:
      raise CInputError(f"Invalid word length {nLength}. Reason: must not be negative")
   if not bWaive:
      oCertificate = nonresonance_check(oSpec, nLength)
      if not oCertificate.ok:
         raise CResonanceError(f"Orbit point {oCertificate.first_violation} lies on an arc endpoint. Reason: alpha={format_fraction(oSpec.alpha)}, x0={format_fraction(oSpec.x0)} is resonant at this horizon", oCertificate.first_violation)
   oScaled = CScaledCoding(oSpec)
   return "".join(oScaled.symbol(oScaled.point(n)) for n in range(nLength))

def coding_window(oSpec, nOrigin, nLength, bWaive=False):
   """
Factor of the two-sided orbit coding starting at integer position ``nOrigin``.
   """
   return mechanical_word(oSpec.with_x0((oSpec.x0 + nOrigin * oSpec.alpha) % 1), nLength, bWaive)

def sturmian_spec(alpha, x0):
   alpha = parse_angle(alpha)
   if alpha == 0:
      raise CInputError("Invalid Sturmian rotation. Reason: alpha must be in (0,1)")
   return CCodingSpec(alpha, x0, (("a", CArcUnion((CArc(0, alpha),))),
                                  ("b", CArcUnion((CArc(alpha, 1),)))))

def sturmian(alpha, x0, nLength, bWaive=False):
   """
Binary coding with U_a = [0, alpha) and U_b = [alpha, 1).
   """
   return mechanical_word(sturmian_spec(alpha, x0), nLength, bWaive)

def min_growth_system(alpha, listBreakpoints, dAssignment=None, x0=None):
   """
Partition of the circle by the points n_j·alpha (mod 1).

The arcs between consecutive points are numbered 0, 1, ... in increasing order
of their left end; arc i is given the symbol ``dAssignment[i]``.

**Arguments:**

*  ``alpha``

   / *Condition*: required / *Type*: Fraction /

*  ``listBreakpoints``

   / *Condition*: required / *Type*: list /

   Distinct integers n_1 .. n_m.

*  ``dAssignment``

   / *Condition*: optional / *Type*: dict / *Default*: arc i -> i-th letter /

   Arc index to symbol. Several arcs may share a symbol.

*  ``x0``

   / *Condition*: optional / *Type*: Fraction / *Default*: DEFAULT_X0 from the configuration /

**Returns:**

*  ``oSpec``

   / *Type*: CCodingSpec /
   """
   alpha = parse_angle(alpha)
   if x0 is None:
      from GrowthLab.CGrowthConfig import get_config
      x0 = parse_angle(get_config("DEFAULT_X0"))
   if len(listBreakpoints) == 0:
      raise CDegeneratePartitionError("Invalid breakpoints. Reason: at least one breakpoint is required")
   if len(set(listBreakpoints)) != len(listBreakpoints):
      raise CDegeneratePartitionError(f"Invalid breakpoints {list(listBreakpoints)}. Reason: breakpoints must be distinct")
   dPoints = {}
   for nBreak in listBreakpoints:
      fPoint = (nBreak * alpha) % 1
      if fPoint in dPoints:
         raise CDegeneratePartitionError(f"Invalid breakpoints {list(listBreakpoints)}. Reason: {dPoints[fPoint]}*alpha and {nBreak}*alpha coincide modulo 1")
      dPoints[fPoint] = nBreak
   listPoints = sorted(dPoints)
   nArcs = len(listPoints)
   if dAssignment is None:
      dAssignment = {i: chr(ord('a') + i) for i in range(nArcs)}
   dArcs = {}
   for i in range(nArcs):
      if i not in dAssignment:
         raise CDegeneratePartitionError(f"Invalid symbol assignment. Reason: arc {i} has no symbol")
      oArc = CArc(listPoints[i], listPoints[(i + 1) % nArcs])
      dArcs.setdefault(dAssignment[i], []).append(oArc)
   tPartition = tuple((sSymbol, CArcUnion(tuple(dArcs[sSymbol]))) for sSymbol in sorted(dArcs))
   return CCodingSpec(alpha, x0, tPartition)

def exact_factor_horizon(oSpec, nLength, nMax=None):
   """
Largest n for which the coding prefix of length ``nLength`` contains every
length-n factor of the coding.

Length-n factors correspond to the intervals cut out of the circle by the
points e − k·alpha (e an arc endpoint, 0 ≤ k < n). The prefix realizes all of
them iff every such interval contains one of the orbit points x_0..x_{L−n}.
   """
   oScaled = CScaledCoding(oSpec)
   if nMax is None:
      nMax = nLength
   listOrbit = sorted((oScaled.point(j), j) for j in range(nLength))
   nExact = 0
   for n in range(1, min(nMax, nLength) + 1):
      listPoints = [nPoint for nPoint, j in listOrbit if j <= nLength - n]
      setCuts = set()
      for nEndpoint in oScaled.setEndpoints:
         for k in range(n):
            setCuts.add((nEndpoint - k * oScaled.nAlpha) % oScaled.nD)
      listCuts = sorted(setCuts)
      if not _all_intervals_hit(listCuts, listPoints):
         break
      nExact = n
   Logger.log_debug(f"coding prefix of length {nLength} is exact up to n={nExact}")
   return nExact

def _all_intervals_hit(listCuts, listPoints):
   if len(listPoints) == 0:
      return False
   for nLeft, nRight in zip(listCuts, listCuts[1:]):
      i = bisect.bisect_left(listPoints, nLeft)
      if i == len(listPoints) or listPoints[i] >= nRight:
         return False
   # wrapping interval [last cut, first cut)
   return listPoints[-1] >= listCuts[-1] or listPoints[0] < listCuts[0]

#
#  Continued fractions
#
########################################################################
def convergent(listQuotients):
   """
Value of the continued fraction 1/(a1 + 1/(a2 + ...)).
   """
   if len(listQuotients) == 0 or any(a < 1 for a in listQuotients):
      raise CInputError(f"Invalid partial quotients {list(listQuotients)}. Reason: need at least one, all ≥ 1")
   nNum, nDen = 0, 1
   for a in reversed(listQuotients):
      nNum, nDen = nDen, nNum + a * nDen
   return Fraction(nNum, nDen)

def golden_convergent(nMinDenominator):
   """
First ratio F_k/F_{k+1} of Fibonacci numbers with F_{k+1} ≥ nMinDenominator.
   """
   listQuotients = [1]
   while convergent(listQuotients).denominator < nMinDenominator:
      listQuotients.append(1)
   return convergent(listQuotients)

def random_convergent(oRandom, nMinDenominator, tQuotients=(1, 2)):
   """
Convergent with random partial quotients drawn from ``tQuotients`` and
denominator at least ``nMinDenominator``.
   """
   listQuotients = [oRandom.choice(tQuotients)]
   while convergent(listQuotients).denominator < nMinDenominator:
      listQuotients.append(oRandom.choice(tQuotients))
   return convergent(listQuotients)

def generic_x0(oRandom, alpha):
   """
Random start point (2r+1)/(2q) strictly between grid points of 1/q, so the
orbit never reaches an endpoint of the form k/q.
   """
   nQ = alpha.denominator
   return Fraction(2 * oRandom.randrange(nQ) + 1, 2 * nQ)

#
#  JSON
#
########################################################################
def coding_to_json(oSpec):
   """
``{"alpha":"610/987","x0":"1/7","partition":{"a":[["0","610/987"]], ...}}``
   """
   return {
      "alpha": format_fraction(oSpec.alpha),
      "x0": format_fraction(oSpec.x0),
      "partition": {sSymbol: [[format_fraction(oArc.l), format_fraction(oArc.r)] for oArc in oUnion.arcs]
                    for sSymbol, oUnion in oSpec.partition},
      "arc_convention": ARC_CONVENTION,
   }

def coding_from_json(dSpec):
   if not isinstance(dSpec, dict):
      raise CInputError("Invalid coding spec. Reason: expected a JSON object")
   for sKey in ("alpha", "x0", "partition"):
      if sKey not in dSpec:
         raise CInputError(f"Invalid coding spec. Reason: field '{sKey}' is missing")
   try:
      tPartition = tuple((sSymbol, CArcUnion(tuple(CArc(Fraction(l), Fraction(r)) for l, r in listArcs)))
                         for sSymbol, listArcs in sorted(dSpec["partition"].items()))
   except (ValueError, TypeError, ZeroDivisionError) as reason:
      raise CInputError(f"Invalid coding partition. Reason: {reason}")
   return CCodingSpec(parse_angle(dSpec["alpha"]), parse_angle(dSpec["x0"]), tPartition)
