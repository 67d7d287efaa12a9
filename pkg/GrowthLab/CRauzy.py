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
# File: CRauzy.py
#
# Rauzy k-graphs (vertices = length-k factors, edges = length-(k+1) factors),
# their statistics and the evolution over k.
#
# History:
#
# 2026-09-08:
#  - initial version
#
# 2026-09-24:
#  - DOT export
#
# ******************************************************************************

import itertools
from dataclasses import dataclass

import networkx as nx

from GrowthLab.errors import CDataError, CInputError
from GrowthLab.logger import Logger
from GrowthLab.CGrowthConfig import get_config
from GrowthLab.CComplexity import source_factor_sets

VERDICT_LOSES      = "loses strong connectivity"
VERDICT_CONNECTED  = "strongly connected throughout"
VERDICT_INCONCLUSIVE = "inconclusive"

#
#  Rauzy graph
#
########################################################################
class CRauzyGraph():
   """
Rauzy graph of order ``k``.

The graph is kept as a ``networkx.DiGraph``; vertex names are the length-k
factors and every edge carries its length-(k+1) factor as ``label``. For
k = 0 the only vertex is the empty word and every letter is a loop, which
needs parallel edges, so a ``MultiDiGraph`` is used throughout.
   """

   def __init__(self, k, oFactorsK, oFactorsK1):
      """
**Arguments:**

*  ``k``

   / *Condition*: required / *Type*: int /

*  ``oFactorsK``

   / *Condition*: required / *Type*: CFactorSet /

   Factors of length k (vertices).

*  ``oFactorsK1``

   / *Condition*: required / *Type*: CFactorSet /

   Factors of length k+1 (edges). Prefix and suffix of every edge word must
   be a vertex.
      """
      if oFactorsK.n != k or oFactorsK1.n != k + 1:
         raise CInputError(f"Invalid factor sets for k={k}. Reason: got lengths {oFactorsK.n} and {oFactorsK1.n}")
      self.k = k
      self.graph = nx.MultiDiGraph(name=f"rauzy_k{k}")
      self.graph.add_nodes_from(oFactorsK.sorted_words())
      for sWord in oFactorsK1.sorted_words():
         sSource, sTarget = sWord[:k], sWord[1:]
         for sEnd in (sSource, sTarget):
            if sEnd not in oFactorsK:
               raise CDataError(f"Inconsistent factor data at k={k}. Reason: {sEnd!r} of edge word {sWord!r} is no vertex")
         self.graph.add_edge(sSource, sTarget, key=sWord, label=sWord)

   @property
   def vertices(self):
      return sorted(self.graph.nodes)

   @property
   def edges(self):
      return sorted((u, v, sLabel) for u, v, sLabel in self.graph.edges(data="label"))

   def __repr__(self):
      return f"CRauzyGraph(k={self.k}, vertices={self.graph.number_of_nodes()}, edges={self.graph.number_of_edges()})"

# eof class CRauzyGraph()

def rauzy_graph(oFactorsK, oFactorsK1):
   """
Rauzy graph built from the factor sets of two consecutive lengths.
   """
   return CRauzyGraph(oFactorsK.n, oFactorsK, oFactorsK1)

@dataclass(frozen=True)
class CGraphStats():
   k: int
   n_vertices: int
   n_edges: int
   strongly_connected: bool
   right_forks: tuple
   left_forks: tuple
   n_sccs: int
   n_simple_cycles_bounded: int
   simple_cycles_capped: bool
   exact: bool = True

def graph_stats(oGraph, nCycleCap=None, bExact=True):
   """
Connectivity, fork and cycle statistics of a Rauzy graph.

**Arguments:**

*  ``oGraph``

   / *Condition*: required / *Type*: CRauzyGraph /

*  ``nCycleCap``

   / *Condition*: optional / *Type*: int / *Default*: SIMPLE_CYCLE_CAP /

   Simple cycles are counted up to this number only.

*  ``bExact``

   / *Condition*: optional / *Type*: bool / *Default*: True /

   Exactness of the factor sets the graph was built from, passed through.

**Returns:**

*  ``oStats``

   / *Type*: CGraphStats /
   """
   if nCycleCap is None:
      nCycleCap = get_config("SIMPLE_CYCLE_CAP")
   oDiGraph = oGraph.graph
   nVertices = oDiGraph.number_of_nodes()
   if nVertices == 0:
      return CGraphStats(oGraph.k, 0, 0, False, (), (), 0, 0, False, bExact)
   nSccs = nx.number_strongly_connected_components(oDiGraph)
   listRightForks = sorted(v for v in oDiGraph.nodes if oDiGraph.out_degree(v) >= 2)
   listLeftForks = sorted(v for v in oDiGraph.nodes if oDiGraph.in_degree(v) >= 2)
   # parallel edges only exist for k=0, simple_cycles counts them per edge
   nCycles = sum(1 for _ in itertools.islice(nx.simple_cycles(nx.DiGraph(oDiGraph)), nCycleCap + 1))
   bCapped = nCycles > nCycleCap
   return CGraphStats(k=oGraph.k,
                      n_vertices=nVertices,
                      n_edges=oDiGraph.number_of_edges(),
                      strongly_connected=(nSccs == 1),
                      right_forks=tuple(listRightForks),
                      left_forks=tuple(listLeftForks),
                      n_sccs=nSccs,
                      n_simple_cycles_bounded=min(nCycles, nCycleCap),
                      simple_cycles_capped=bCapped,
                      exact=bExact)

@dataclass(frozen=True)
class CEvolution():
   stats: tuple
   verdict: str
   k_lost: int = None
   k_uncertain: int = None
   exact_up_to: int = None

   def verdict_text(self):
      if self.verdict == VERDICT_LOSES:
         return f"{VERDICT_LOSES} at k={self.k_lost}"
      if self.verdict == VERDICT_INCONCLUSIVE:
         return f"{VERDICT_INCONCLUSIVE} (first uncertain k={self.k_uncertain})"
      return self.verdict

def evolution_graphs(oSource, nKMax):
   """
Rauzy graphs k = 1..nKMax of a word source and the exactness horizon of the
underlying factor sets.
   """
   if nKMax < 1:
      raise CInputError(f"Invalid k_max {nKMax}. Reason: must be at least 1")
   listSets, nExactUpTo = source_factor_sets(oSource, nKMax + 1)
   listGraphs = [rauzy_graph(listSets[k], listSets[k + 1]) for k in range(1, nKMax + 1)]
   return listGraphs, nExactUpTo

def evolution(oSource, nKMax):
   """
Statistics of the Rauzy graphs k = 1..nKMax and the connectivity verdict.

A graph of order k is trustworthy when the factor sets of lengths k and k+1
are exact. Loss of strong connectivity is reported at the first exact k where
it happens; if it does not happen on the exact range but the range ends
before nKMax, the verdict is inconclusive.

**Arguments:**

*  ``oSource``

   / *Condition*: required / *Type*: CBiInfiniteSpec or str /

*  ``nKMax``

   / *Condition*: required / *Type*: int /

**Returns:**

*  ``oEvolution``

   / *Type*: CEvolution /
   """
   listGraphs, nExactUpTo = evolution_graphs(oSource, nKMax)
   listStats = [graph_stats(oGraph, bExact=(oGraph.k + 1 <= nExactUpTo)) for oGraph in listGraphs]
   for oStats in listStats:
      if not oStats.exact:
         Logger.log_warning(f"Rauzy evolution: factor sets not exact from k={oStats.k} on")
         return CEvolution(tuple(listStats), VERDICT_INCONCLUSIVE, k_uncertain=oStats.k, exact_up_to=nExactUpTo)
      if not oStats.strongly_connected:
         return CEvolution(tuple(listStats), VERDICT_LOSES, k_lost=oStats.k, exact_up_to=nExactUpTo)
   return CEvolution(tuple(listStats), VERDICT_CONNECTED, exact_up_to=nExactUpTo)

def stats_to_json(oStats):
   return {
      "k": oStats.k,
      "n_vertices": oStats.n_vertices,
      "n_edges": oStats.n_edges,
      "strongly_connected": oStats.strongly_connected,
      "right_forks": list(oStats.right_forks),
      "left_forks": list(oStats.left_forks),
      "n_sccs": oStats.n_sccs,
      "n_simple_cycles_bounded": oStats.n_simple_cycles_bounded,
      "simple_cycles_capped": oStats.simple_cycles_capped,
      "exact": oStats.exact,
   }

def evolution_to_json(oEvolution):
   return {
      "stats": [stats_to_json(oStats) for oStats in oEvolution.stats],
      "verdict": oEvolution.verdict_text(),
      "k_lost": oEvolution.k_lost,
      "k_uncertain": oEvolution.k_uncertain,
      "exact_up_to": oEvolution.exact_up_to,
   }

def _dot_id(sText):
   # DOT quoted strings end at '"', backslash escapes
   return '"' + sText.replace('\\', '\\\\').replace('"', '\\"') + '"'

def _dot_body(oGraph, sIndent):
   listLines = []
   for sVertex in oGraph.vertices:
      listLines.append(f'{sIndent}{_dot_id(sVertex)};')
   for sSource, sTarget, sLabel in oGraph.edges:
      listLines.append(f'{sIndent}{_dot_id(sSource)} -> {_dot_id(sTarget)} [label={_dot_id(sLabel)}];')
   return listLines

def to_dot(oGraph):
   """
DOT text of one Rauzy graph.
   """
   listLines = [f'digraph "rauzy_k{oGraph.k}" {{']
   listLines.extend(_dot_body(oGraph, "   "))
   listLines.append("}")
   return "\n".join(listLines) + "\n"

def evolution_to_dot(listGraphs, sName="rauzy"):
   """
One DOT file holding every graph of an evolution as a cluster.
   """
   listLines = [f'digraph "{sName}" {{']
   for oGraph in listGraphs:
      listLines.append(f'   subgraph "cluster_k{oGraph.k}" {{')
      listLines.append(f'      label="k={oGraph.k}";')
      # vertex names repeat across k, prefix them to keep clusters apart
      oPrefixed = _CPrefixedGraph(oGraph, f"k{oGraph.k}:")
      listLines.extend(_dot_body(oPrefixed, "      "))
      listLines.append("   }")
   listLines.append("}")
   return "\n".join(listLines) + "\n"

class _CPrefixedGraph():
   def __init__(self, oGraph, sPrefix):
      self.vertices = [sPrefix + v for v in oGraph.vertices]
      self.edges = [(sPrefix + u, sPrefix + v, sLabel) for u, v, sLabel in oGraph.edges]
