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
# File: CWords.py
#
# Alphabets, finite words, symbolic infinite words (periodic, rays, two-ray
# words, rotation codings) and the basic word combinatorics used everywhere
# else: factor sets, windows, prefixes of powers and the SW=WT shape check.
#
# Finite words are plain Python strings, one character per symbol. Alphabets
# with multi-character symbols are mapped onto private use code points by
# CAlphabet and restored on output.
#
# History:
#
# 2026-09-04:
#  - initial version
#
# 2026-09-18:
#  - canonicalizer for degenerate two-ray words
#
# ******************************************************************************

import itertools
import json
from dataclasses import dataclass, field

from GrowthLab.errors import CInputError, CConsistencyError
from GrowthLab.logger import Logger

PRIVATE_USE_BASE = 0xE000

KIND_PERIODIC  = "periodic"
KIND_RIGHT_RAY = "right_ray"
KIND_LEFT_RAY  = "left_ray"
KIND_TWO_RAY   = "two_ray"
KIND_ROTATION  = "rotation"

LKINDS = [KIND_PERIODIC, KIND_RIGHT_RAY, KIND_LEFT_RAY, KIND_TWO_RAY, KIND_ROTATION]

#
#  Alphabet
#
########################################################################
@dataclass(frozen=True)
class CAlphabet():
   """
Ordered set of distinct symbols.

Internally every symbol is represented by one character (``letters``). For
single-character symbols the letter is the symbol itself.
   """
   symbols: tuple
   separator: str = None
   letters: tuple = field(init=False, repr=False, compare=False)

   def __post_init__(self):
      if len(self.symbols) == 0:
         raise CInputError("Invalid alphabet. Reason: alphabet is empty")
      if len(set(self.symbols)) != len(self.symbols):
         raise CInputError(f"Invalid alphabet {list(self.symbols)}. Reason: duplicate symbols")
      for sSymbol in self.symbols:
         if not isinstance(sSymbol, str) or sSymbol == "":
            raise CInputError(f"Invalid alphabet symbol {sSymbol!r}. Reason: symbols are nonempty strings")
      if all(len(sSymbol) == 1 for sSymbol in self.symbols):
         tLetters = tuple(self.symbols)
      else:
         tLetters = tuple(chr(PRIVATE_USE_BASE + i) for i in range(len(self.symbols)))
      object.__setattr__(self, 'letters', tLetters)

   @classmethod
   def from_string(cls, sText, sSeparator=None):
      """
Create an alphabet from its textual form.

**Arguments:**

*  ``sText``

   / *Condition*: required / *Type*: str /

   Either a run of single-character symbols (``"ab"``) or symbols separated by
   whitespace or by ``sSeparator`` (``"a b"``, ``"x1,x2"``).

*  ``sSeparator``

   / *Condition*: optional / *Type*: str / *Default*: None /

   Separator between symbols. Also used when decoding words.

**Returns:**

*  ``oAlphabet``

   / *Type*: CAlphabet /
      """
      sText = sText.strip()
      if sSeparator is not None:
         listSymbols = [s.strip() for s in sText.split(sSeparator) if s.strip() != ""]
      elif len(sText.split()) > 1:
         listSymbols = sText.split()
      else:
         listSymbols = list(sText)
      return cls(tuple(listSymbols), sSeparator)

   @classmethod
   def from_word(cls, sWord):
      """
Alphabet of the letters occurring in a word, in order of first occurrence.
      """
      return cls(tuple(dict.fromkeys(sWord)))

   @property
   def size(self):
      return len(self.symbols)

   def index(self, sLetter):
      try:
         return self.letters.index(sLetter)
      except ValueError:
         raise CInputError(f"Symbol {sLetter!r} does not belong to alphabet {list(self.symbols)}")

   def sort_key(self, sWord):
      """
Length-lex key with respect to the alphabet order.
      """
      return (len(sWord), tuple(self.letters.index(c) for c in sWord))

   def check_word(self, sWord):
      for sLetter in sWord:
         self.index(sLetter)
      return sWord

   def encode_word(self, sText):
      """
External text -> internal word. Symbols are separated by the alphabet's
separator (or whitespace) when the alphabet has multi-character symbols.
      """
      if self.letters == self.symbols and self.separator is None:
         return self.check_word(sText.strip())
      if self.separator is not None:
         listTokens = [s.strip() for s in sText.split(self.separator) if s.strip() != ""]
      else:
         listTokens = sText.split()
      dLetter = dict(zip(self.symbols, self.letters))
      listLetters = []
      for sToken in listTokens:
         if sToken not in dLetter:
            raise CInputError(f"Symbol {sToken!r} does not belong to alphabet {list(self.symbols)}")
         listLetters.append(dLetter[sToken])
      return "".join(listLetters)

   def decode_word(self, sWord):
      """
Internal word -> external text.
      """
      if self.letters == self.symbols and self.separator is None:
         return sWord
      dSymbol = dict(zip(self.letters, self.symbols))
      sJoin = self.separator if self.separator is not None else " "
      return sJoin.join(dSymbol[c] for c in sWord)

# eof class CAlphabet()

def enumerate_words(oAlphabet, nMax):
   """
Generate all words of length 0..nMax in length-lex order.
   """
   for n in range(nMax + 1):
      for tLetters in itertools.product(oAlphabet.letters, repeat=n):
         yield "".join(tLetters)

def count_words_up_to(nSize, n):
   """
Number of words of length ≤ n over an alphabet with nSize symbols.
   """
   if nSize == 1:
      return n + 1
   return (nSize**(n + 1) - 1) // (nSize - 1)

#
#  Factor sets
#
########################################################################
@dataclass(frozen=True)
class CFactorSet():
   """
All factors of one length ``n`` of a word or language.

``horizon_exceeded`` is set when the source was shorter than ``n``.
   """
   n: int
   words: frozenset
   horizon_exceeded: bool = False

   def __post_init__(self):
      for sWord in self.words:
         if len(sWord) != self.n:
            raise CInputError(f"Invalid factor set of length {self.n}. Reason: word {sWord!r} has length {len(sWord)}")

   def __len__(self):
      return len(self.words)

   def __contains__(self, sWord):
      return sWord in self.words

   def sorted_words(self):
      return sorted(self.words)

# eof class CFactorSet()

def factors(sWord, n):
   """
Distinct contiguous factors of given length.

**Arguments:**

*  ``sWord``

   / *Condition*: required / *Type*: str /

*  ``n``

   / *Condition*: required / *Type*: int /

   Factor length, ``n ≥ 0``.

**Returns:**

*  ``oFactors``

   / *Type*: CFactorSet /

   For ``n > len(sWord)`` the set is empty and ``horizon_exceeded`` is set.
   """
   if n < 0:
      raise CInputError(f"Invalid factor length {n}. Reason: must not be negative")
   if n > len(sWord):
      return CFactorSet(n, frozenset(), True)
   return CFactorSet(n, frozenset(sWord[i:i+n] for i in range(len(sWord) - n + 1)))

def primitive_root(sWord):
   """
Shortest p with sWord = p^k.
   """
   if sWord == "":
      return sWord
   nPeriod = (sWord + sWord).find(sWord, 1)
   return sWord[:nPeriod]

def least_rotation(sWord):
   """
Lexicographically least cyclic rotation and the offset it starts at.

**Returns:**

*  ``(sRotation, nOffset)``

   / *Type*: tuple /

   ``sRotation == sWord[nOffset:] + sWord[:nOffset]``
   """
   if sWord == "":
      return sWord, 0
   nOffset = min(range(len(sWord)), key=lambda i: sWord[i:] + sWord[:i])
   return sWord[nOffset:] + sWord[:nOffset], nOffset

def is_prefix_of_power(sW, sS):
   """
Test whether W = s^k s_1 with s_1 a prefix of s, i.e. W is a prefix of s^∞.

**Arguments:**

*  ``sW``

   / *Condition*: required / *Type*: str /

*  ``sS``

   / *Condition*: required / *Type*: str /

   Nonempty period word.

**Returns:**

   / *Type*: bool /
   """
   if sS == "":
      raise CInputError("Invalid period word. Reason: s must not be empty")
   nCopies = len(sW) // len(sS) + 1
   return (sS * nCopies)[:len(sW)] == sW

def check_conjugacy_shape(sS, sW):
   """
Solve S·W = W·T for T.

**Arguments:**

*  ``sS``

   / *Condition*: required / *Type*: str /

   Nonempty word S.

*  ``sW``

   / *Condition*: required / *Type*: str /

**Returns:**

*  ``sT``

   / *Type*: str or None /

   The word T with ``|T| = |S|`` and ``S+W == W+T``, None if there is none.
   Whenever T exists, W is a prefix of S^∞.
   """
   if sS == "":
      raise CInputError("Invalid word S. Reason: S must not be empty")
   sSW = sS + sW
   if not sSW.startswith(sW):
      return None
   sT = sSW[len(sW):]
   if not is_prefix_of_power(sW, sS):
      raise CConsistencyError(f"Shape check failed for S={sS!r}, W={sW!r}. Reason: T={sT!r} exists but W is no prefix of S^inf")
   return sT

#
#  Symbolic infinite words
#
########################################################################
@dataclass(frozen=True)
class CBiInfiniteSpec():
   """
Symbolic description of a one- or two-sided infinite word.

Position 0 is the first symbol of ``c`` (rays, two-ray words) or of ``u``
(periodic words); negative positions run into ``u^∞/2``. Use the class
methods to construct specs.
   """
   kind: str
   u: str = ""
   c: str = ""
   v: str = ""
   coding: object = None

   def __post_init__(self):
      if self.kind not in LKINDS:
         raise CInputError(f"Invalid word kind '{self.kind}'. Reason: expected one of {LKINDS}")
      if self.kind in (KIND_PERIODIC, KIND_LEFT_RAY, KIND_TWO_RAY) and self.u == "":
         raise CInputError(f"Invalid {self.kind} word. Reason: u must not be empty")
      if self.kind in (KIND_RIGHT_RAY, KIND_TWO_RAY) and self.v == "":
         raise CInputError(f"Invalid {self.kind} word. Reason: v must not be empty")
      if self.kind == KIND_ROTATION and self.coding is None:
         raise CInputError("Invalid rotation word. Reason: coding is missing")

   @classmethod
   def periodic(cls, sU):
      return cls(KIND_PERIODIC, u=sU)

   @classmethod
   def right_ray(cls, sC, sV):
      return cls(KIND_RIGHT_RAY, c=sC, v=sV)

   @classmethod
   def left_ray(cls, sU, sC):
      return cls(KIND_LEFT_RAY, u=sU, c=sC)

   @classmethod
   def two_ray(cls, sU, sC, sV):
      return cls(KIND_TWO_RAY, u=sU, c=sC, v=sV)

   @classmethod
   def rotation(cls, oCoding):
      return cls(KIND_ROTATION, coding=oCoding)

   def symbol_at(self, nPos):
      """
Symbol at integer position ``nPos`` (rotation codings excluded).
      """
      if self.kind == KIND_PERIODIC:
         return self.u[nPos % len(self.u)]
      if nPos < 0:
         if self.kind == KIND_RIGHT_RAY:
            raise CInputError(f"Invalid position {nPos}. Reason: right ray c·v^inf starts at position 0")
         return self.u[nPos % len(self.u)]
      if nPos < len(self.c):
         return self.c[nPos]
      if self.kind == KIND_LEFT_RAY:
         raise CInputError(f"Invalid position {nPos}. Reason: left ray u^inf·c ends at position {len(self.c) - 1}")
      return self.v[(nPos - len(self.c)) % len(self.v)]

# eof class CBiInfiniteSpec()

def window(oSpec, nOrigin, nLength):
   """
Materialize a finite factor of a symbolic word.

**Arguments:**

*  ``oSpec``

   / *Condition*: required / *Type*: CBiInfiniteSpec /

*  ``nOrigin``

   / *Condition*: required / *Type*: int /

   Position of the first symbol.

*  ``nLength``

   / *Condition*: required / *Type*: int /

**Returns:**

   / *Type*: str /

   The symbols at positions ``nOrigin .. nOrigin+nLength-1``.
   """
   if nLength < 0:
      raise CInputError(f"Invalid window length {nLength}. Reason: must not be negative")
   if oSpec.kind == KIND_ROTATION:
      from GrowthLab.CRotation import coding_window
      return coding_window(oSpec.coding, nOrigin, nLength)
   if nLength == 0:
      return ""
   # check both ends first so that the error names the offending side
   oSpec.symbol_at(nOrigin)
   oSpec.symbol_at(nOrigin + nLength - 1)
   return "".join(oSpec.symbol_at(i) for i in range(nOrigin, nOrigin + nLength))

def spec_factors(oSpec, n):
   """
Exact set of length-``n`` factors of a periodic, ray or two-ray word.

The window materialized covers one full period on every periodic side, so
every factor of the infinite word occurs in it.
   """
   if n == 0 and oSpec.kind != KIND_ROTATION:
      return CFactorSet(0, frozenset([""]))
   return factors(spec_window(oSpec, n), n)

def spec_window(oSpec, n):
   """
Finite factor of a symbolic word containing every factor of length ≤ n.
   """
   if oSpec.kind == KIND_ROTATION:
      raise CInputError("Invalid word kind 'rotation'. Reason: rotation codings need a generated prefix and its exactness horizon")
   n = max(n, 1)
   if oSpec.kind == KIND_PERIODIC:
      nOrigin, nEnd = 0, len(oSpec.u) + n - 1
   elif oSpec.kind == KIND_RIGHT_RAY:
      nOrigin, nEnd = 0, len(oSpec.c) + len(oSpec.v) + n - 1
   elif oSpec.kind == KIND_LEFT_RAY:
      nOrigin, nEnd = -(n + len(oSpec.u) - 1), len(oSpec.c)
   else:
      nOrigin, nEnd = -(n + len(oSpec.u) - 1), len(oSpec.c) + len(oSpec.v) + n - 1
   return window(oSpec, nOrigin, nEnd - nOrigin)

def is_degenerate_two_ray(oSpec):
   """
True for a two-ray word u^∞/2 c v^∞/2 that equals u^∞.

The right side c·v^∞ is compared with u^∞ on |c|+|u|+|v| symbols, after
which both are periodic and agree forever.
   """
   if oSpec.kind != KIND_TWO_RAY:
      return False
   nLength = len(oSpec.c) + len(oSpec.u) + len(oSpec.v)
   return window(oSpec, 0, nLength) == window(CBiInfiniteSpec.periodic(oSpec.u), 0, nLength)

def canonicalize(oSpec):
   """
Canonical form of a symbolic word.

Periodic and ray words are reduced to primitive roots. A two-ray word equal
to u^∞ is reported and replaced by the periodic word.

**Returns:**

*  ``(oCanonical, listNotes)``

   / *Type*: tuple /
   """
   listNotes = []
   if oSpec.kind == KIND_ROTATION:
      return oSpec, listNotes
   sU, sV = primitive_root(oSpec.u), primitive_root(oSpec.v)
   if sU != oSpec.u or sV != oSpec.v:
      listNotes.append(f"periodic parts reduced to primitive roots u={sU!r} v={sV!r}")
   if is_degenerate_two_ray(oSpec):
      sNote = f"two-ray word u={oSpec.u!r} c={oSpec.c!r} v={oSpec.v!r} equals u^inf, represented as periodic word"
      Logger.log_warning(sNote)
      listNotes.append(sNote)
      return CBiInfiniteSpec.periodic(sU), listNotes
   return CBiInfiniteSpec(oSpec.kind, u=sU, c=oSpec.c, v=sV), listNotes

def spec_to_json(oSpec):
   """
Tagged dictionary form, e.g. ``{"kind":"two_ray","u":"ab","c":"c","v":"ba"}``.
   """
   if oSpec.kind == KIND_PERIODIC:
      return {"kind": oSpec.kind, "u": oSpec.u}
   if oSpec.kind == KIND_RIGHT_RAY:
      return {"kind": oSpec.kind, "c": oSpec.c, "v": oSpec.v}
   if oSpec.kind == KIND_LEFT_RAY:
      return {"kind": oSpec.kind, "u": oSpec.u, "c": oSpec.c}
   if oSpec.kind == KIND_TWO_RAY:
      return {"kind": oSpec.kind, "u": oSpec.u, "c": oSpec.c, "v": oSpec.v}
   from GrowthLab.CRotation import coding_to_json
   return {"kind": oSpec.kind, "coding": coding_to_json(oSpec.coding)}

def spec_from_json(dSpec):
   """
Inverse of ``spec_to_json``. Accepts a dict or a JSON string.
   """
   if isinstance(dSpec, str):
      try:
         dSpec = json.loads(dSpec)
      except ValueError as reason:
         raise CInputError(f"Invalid word spec JSON. Reason: {reason}")
   if not isinstance(dSpec, dict) or "kind" not in dSpec:
      raise CInputError("Invalid word spec. Reason: expected an object with a 'kind' field")
   sKind = dSpec["kind"]
   if sKind == KIND_ROTATION:
      from GrowthLab.CRotation import coding_from_json
      return CBiInfiniteSpec.rotation(coding_from_json(dSpec.get("coding")))
   return CBiInfiniteSpec(sKind, u=dSpec.get("u", ""), c=dSpec.get("c", ""), v=dSpec.get("v", ""))
