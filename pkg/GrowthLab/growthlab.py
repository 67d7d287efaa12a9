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
# File: growthlab.py
#
# Command line front end: generates words, analyzes their complexity, exports
# Rauzy graphs, classifies monomial algebras, checks antidictionary duality and
# runs the self test.
#
# Reports go to stdout (or --output), log messages to stderr.
#
# History:
#
# 2026-09-10:
#  - initial version
#
# 2026-10-05:
#  - selftest subcommand
#
# 2026-10-12:
#  - witness subcommand, per-k DOT files
#
# ******************************************************************************

import argparse
import json
import os
import random
import sys

from GrowthLab.version import VERSION, VERSION_DATE
from GrowthLab.errors import CGrowthLabError, CInputError, EXIT_SUCCESS, EXIT_CONSISTENCY, EXIT_UNEXPECTED
from GrowthLab.logger import Logger
from GrowthLab.CGrowthConfig import CGrowthConfig, get_config
from GrowthLab.CWords import CBiInfiniteSpec, KIND_ROTATION, KIND_LEFT_RAY, canonicalize, window, spec_window, spec_to_json, \
                             spec_from_json, factors
from GrowthLab.CRotation import parse_angle, sturmian_spec, min_growth_system, mechanical_word, \
                                coding_to_json, coding_from_json, exact_factor_horizon
from GrowthLab.CComplexity import CGrowthProfile, KIND_T_ALGEBRA, complexity_profile, detect_affine_tail, \
                                  fitted_slope, low_complexity_witness, \
                                  balance_check, recurrence_profile, profile_to_json, profile_to_tsv, \
                                  tail_to_json, balance_to_json
from GrowthLab.CRauzy import evolution, evolution_graphs, evolution_to_json, to_dot, evolution_to_dot
from GrowthLab.CMonomialAlgebra import parse_presentation, algebra_report, verify_duality, \
                                       CLASS_FINITE_DIM, CLASS_SLOW, CLASS_BOUNDARY
from GrowthLab.CStructure import decompose, coverage_check, description_to_json, description_to_text, \
                                 witness_case2, witness_to_json
from GrowthLab.CSelfTest import CSelfTest, results_to_text

LGENERATE_KINDS = ["sturmian", "mechanical", "periodic", "right_ray", "left_ray", "two_ray"]
LFORMATS        = ["json", "tsv", "dot", "text"]

def __process_commandline(args=None):
   """
Process provided argument(s) from command line.

Avalable arguments in command line:
   - `-v`, `--version` : tool version information.
   - `--seed` : seed of randomized runs (default: DEFAULT_SEED).
   - `--format` : output format json, tsv, dot or text (default depends on the subcommand).
   - `--output` : output file (default: stdout).
   - `--logfile` : mirror log messages into this file.
   - `--verbose` : write debug messages.
   - `--quiet` : no log messages on the console.
   - subcommands `generate`, `analyze`, `rauzy`, `algebra`, `duality`,
     `witness`, `selftest` and `config`.

**Arguments:**

*  ``args``

   / *Condition*: optional / *Type*: list / *Default*: sys.argv[1:] /

**Returns:**

   / *Type*: `Namespace` object /

   Parsed arguments.
   """
   PROG_NAME = "growthlab (low complexity words and monomial algebras)"
   PROG_DESC = "growthlab generates Sturmian, mechanical and eventually periodic words, "+\
               "measures their subword complexity, follows their Rauzy graphs and "+\
               "classifies the growth of finitely presented monomial algebras."

   # subcommand flags like --v must not be read as prefixes of global options
   cmdParser=argparse.ArgumentParser(prog=PROG_NAME, description=PROG_DESC, allow_abbrev=False)

   cmdParser.add_argument('-v', '--version', action='version',
                          version=f'v{VERSION} ({VERSION_DATE})',
                          help='Version of growthlab.')
   cmdParser.add_argument('--seed', type=int, default=None,
                          help='seed of randomized runs (default: DEFAULT_SEED of the configuration).')
   cmdParser.add_argument('--format', choices=LFORMATS, default=None,
                          help='output format, the default depends on the subcommand.')
   cmdParser.add_argument('--output', type=str, default=None,
                          help='path to the output file, stdout when not set.')
   cmdParser.add_argument('--logfile', type=str, default=None,
                          help='path to a log file receiving all log messages.')
   cmdParser.add_argument('--verbose', action="store_true",
                          help='if set, debug messages are written.')
   cmdParser.add_argument('--quiet', action="store_true",
                          help='if set, no log messages are written to the console.')

   subParsers = cmdParser.add_subparsers(dest='command', metavar='command')
   subParsers.required = True

   # words are read from a file or generated from a spec file
   def add_source(oParser):
      oGroup = oParser.add_mutually_exclusive_group(required=True)
      oGroup.add_argument('--word', type=str, help='path to a file holding a (prefix of a) word.')
      oGroup.add_argument('--spec', type=str, help='path to a JSON word spec or rotation coding.')

   oGenerate = subParsers.add_parser('generate', help='write a word.', allow_abbrev=False)
   oGenerate.add_argument('kind', choices=LGENERATE_KINDS, help='kind of word.')
   oGenerate.add_argument('--len', type=int, required=True, dest='length', help='number of symbols.')
   oGenerate.add_argument('--alpha', type=str, default=None, help='rotation angle p/q (default: DEFAULT_ALPHA).')
   oGenerate.add_argument('--x0', type=str, default=None, help='starting point p/q (default: DEFAULT_X0).')
   oGenerate.add_argument('--breakpoints', type=str, default=None,
                          help='comma separated integers n_j, the circle is cut at n_j*alpha.')
   oGenerate.add_argument('--spec', type=str, default=None, help='path to a JSON rotation coding.')
   oGenerate.add_argument('--u', type=str, default="", help='left periodic part (or period).')
   oGenerate.add_argument('--c', type=str, default="", help='connector.')
   oGenerate.add_argument('--v', type=str, default="", help='right periodic part.')
   oGenerate.add_argument('--origin', type=int, default=0, help='position of the first symbol.')
   oGenerate.add_argument('--waive', action="store_true",
                          help='if set, orbit points on arc endpoints are accepted.')

   oAnalyze = subParsers.add_parser('analyze', help='complexity, balance and Rauzy report of a word.', allow_abbrev=False)
   add_source(oAnalyze)
   oAnalyze.add_argument('--n-max', type=int, default=40, dest='n_max', help='largest factor length.')
   oAnalyze.add_argument('--k-max', type=int, default=None, dest='k_max', help='largest Rauzy graph order.')

   oRauzy = subParsers.add_parser('rauzy', help='Rauzy graph evolution and DOT export.', allow_abbrev=False)
   add_source(oRauzy)
   oRauzy.add_argument('--k-max', type=int, default=None, dest='k_max', help='largest Rauzy graph order.')
   oRauzy.add_argument('--output-dir', type=str, default=None, dest='output_dir',
                       help='write one DOT file per k into this directory.')

   oAlgebra = subParsers.add_parser('algebra', help='growth report of a monomial algebra.', allow_abbrev=False)
   oAlgebra.add_argument('presentation', type=str, help='path to the presentation file.')
   oAlgebra.add_argument('--window', type=int, default=None, help='verification window (default: CLASSIFY_WINDOW).')
   oAlgebra.add_argument('--separator', type=str, default=None, help='separator of multi-character symbols.')

   oDuality = subParsers.add_parser('duality', help='antidictionary of a word and its duality check.', allow_abbrev=False)
   add_source(oDuality)
   oDuality.add_argument('--m', type=int, default=None, help='largest length (default: DUALITY_LENGTH).')

   oWitness = subParsers.add_parser('witness', help='evidence that a rotation coding has complexity n+K.', allow_abbrev=False)
   oWitness.add_argument('--alpha', type=str, default=None, help='rotation angle p/q (default: DEFAULT_ALPHA).')
   oWitness.add_argument('--x0', type=str, default=None, help='starting point p/q (default: DEFAULT_X0).')
   oWitness.add_argument('--breakpoints', type=str, default="0,1",
                         help='comma separated integers n_j (default: 0,1, a Sturmian coding).')
   oWitness.add_argument('--horizon', type=int, default=2000, help='length of the generated prefix.')
   oWitness.add_argument('--waive', action="store_true",
                         help='if set, orbit points on arc endpoints are accepted.')

   oSelfTest = subParsers.add_parser('selftest', help='run the acceptance suite.', allow_abbrev=False)
   oSelfTest.add_argument('--items', type=str, default=None, help='comma separated item numbers (default: all).')

   subParsers.add_parser('config', help='print the runtime configuration.', allow_abbrev=False)

   return cmdParser.parse_args(args)

def _parse_int_list(sText, sWhat):
   try:
      return [int(s) for s in sText.split(",") if s.strip() != ""]
   except ValueError:
      raise CInputError(f"Invalid {sWhat} '{sText}'. Reason: expected comma separated integers")

def _read_file(sPath):
   if not os.path.isfile(sPath):
      raise CInputError(f"Given file is not existing: '{sPath}'.")
   with open(sPath, encoding='utf-8') as f:
      return f.read()

def _read_spec(sPath):
   """
Word spec (``{"kind": ...}``) or bare rotation coding from a JSON file.
   """
   try:
      dSpec = json.loads(_read_file(sPath))
   except ValueError as reason:
      raise CInputError(f"Invalid JSON in '{sPath}'. Reason: {reason}")
   if isinstance(dSpec, dict) and "kind" in dSpec:
      oSpec, listNotes = canonicalize(spec_from_json(dSpec))
      for sNote in listNotes:
         Logger.log(f"spec: {sNote}", indent=2)
      return oSpec
   return CBiInfiniteSpec.rotation(coding_from_json(dSpec))

def _read_word(sPath):
   sWord = "".join(_read_file(sPath).split())
   if sWord == "":
      raise CInputError(f"Invalid word file '{sPath}'. Reason: word is empty")
   return sWord

def _load_source(args, nMax):
   """
Word source of analyze/rauzy/duality: (source, materialized word, exact horizon).

A word file is a prefix of an infinite word; its factor sets count as exact
while 2n does not exceed its length.
   """
   if args.word is not None:
      sWord = _read_word(args.word)
      return sWord, sWord, None
   oSpec = _read_spec(args.spec)
   if oSpec.kind == KIND_ROTATION:
      nLength = max(get_config("EVOLUTION_PREFIX_LENGTH"), 4 * nMax)
      sWord = mechanical_word(oSpec.coding, nLength)
      return oSpec, sWord, exact_factor_horizon(oSpec.coding, nLength, nMax)
   return oSpec, spec_window(oSpec, nMax), nMax

def _coding_from_args(args):
   alpha = parse_angle(args.alpha if args.alpha is not None else get_config("DEFAULT_ALPHA"))
   x0 = parse_angle(args.x0 if args.x0 is not None else get_config("DEFAULT_X0"))
   if args.breakpoints is None:
      return sturmian_spec(alpha, x0)
   return min_growth_system(alpha, _parse_int_list(args.breakpoints, "breakpoints"), x0=x0)

def _dump_json(dReport):
   dReport = dict(dReport)
   dReport["schema"] = get_config("SCHEMA")
   return json.dumps(dReport, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

def _write_output(sText, sOutput):
   if sOutput is None:
      sys.stdout.write(sText)
      sys.stdout.flush()
   else:
      with open(sOutput, 'w', encoding='utf-8', newline='\n') as f:
         f.write(sText)
      Logger.log(f"Output written to '{sOutput}'.")

def _check_format(sFormat, listAllowed, sCommand):
   if sFormat is None:
      return listAllowed[0]
   if sFormat not in listAllowed:
      raise CInputError(f"Invalid format '{sFormat}' for '{sCommand}'. Reason: expected one of {listAllowed}")
   return sFormat

#
#  Subcommands
#
########################################################################
def cmd_generate(args):
   """
Write the requested word and log the spec it was produced from.
   """
   if args.length < 0:
      raise CInputError(f"Invalid length {args.length}. Reason: must not be negative")
   if args.kind in ("sturmian", "mechanical"):
      if args.spec is not None:
         oCoding = _read_spec(args.spec)
         if oCoding.kind != KIND_ROTATION:
            raise CInputError(f"Invalid spec '{args.spec}'. Reason: '{args.kind}' needs a rotation coding")
         oCoding = oCoding.coding
      elif args.kind == "sturmian":
         args.breakpoints = None
         oCoding = _coding_from_args(args)
      else:
         if args.breakpoints is None:
            raise CInputError("Invalid mechanical word. Reason: --breakpoints or --spec is required")
         oCoding = _coding_from_args(args)
      sWord = mechanical_word(oCoding, args.length, bWaive=args.waive)
      dSpec = {"kind": KIND_ROTATION, "coding": coding_to_json(oCoding)}
   else:
      if args.kind == "periodic":
         oSpec = CBiInfiniteSpec.periodic(args.u)
      elif args.kind == "right_ray":
         oSpec = CBiInfiniteSpec.right_ray(args.c, args.v)
      elif args.kind == "left_ray":
         oSpec = CBiInfiniteSpec.left_ray(args.u, args.c)
      else:
         oSpec = CBiInfiniteSpec.two_ray(args.u, args.c, args.v)
      oSpec, listNotes = canonicalize(oSpec)
      for sNote in listNotes:
         Logger.log(f"spec: {sNote}", indent=2)
      nOrigin = args.origin
      if oSpec.kind == KIND_LEFT_RAY and args.origin == 0:
         # left rays end at |c|-1, the default window is the last len symbols
         nOrigin = len(oSpec.c) - args.length
      sWord = window(oSpec, nOrigin, args.length)
      dSpec = spec_to_json(oSpec)
   Logger.log(f"spec: {json.dumps(dSpec, sort_keys=True)}")
   _write_output(sWord + "\n", args.output)
   return EXIT_SUCCESS

def cmd_analyze(args):
   """
Complexity profile, affine tail, balance, recurrence and Rauzy verdict of one
word in a single report.
   """
   if args.n_max < 1:
      raise CInputError(f"Invalid horizon {args.n_max}. Reason: must be positive")
   nKMax = args.k_max if args.k_max is not None else get_config("RAUZY_K_MAX")
   oSource, sWord, nExact = _load_source(args, max(args.n_max, nKMax + 1))
   sFormat = _check_format(args.format, ["json", "tsv", "text"], "analyze")

   oProfile = complexity_profile(sWord, args.n_max, nExactUpTo=nExact)
   if not all(oProfile.exact):
      Logger.log_warning(f"T(n) is prefix-limited beyond n={sum(oProfile.exact) - 1}")
   oTail = detect_affine_tail(oProfile)
   oBalance = balance_check(sWord, args.n_max)
   oEvolution = evolution(oSource, nKMax)
   dReport = {
      "source": spec_to_json(oSource) if isinstance(oSource, CBiInfiniteSpec) else {"kind": "word", "length": len(sWord)},
      "complexity": profile_to_json(oProfile),
      "affine_tail": tail_to_json(oTail),
      "fitted_slope": None if oTail is not None or fitted_slope(oProfile) is None else str(fitted_slope(oProfile)),
      "low_complexity_witness": low_complexity_witness(oProfile),
      "balance": balance_to_json(oBalance),
      "recurrence": [{"n": n, "recurrent": b} for n, b in recurrence_profile(sWord, min(args.n_max, 10))],
      "rauzy": evolution_to_json(oEvolution),
   }
   if sFormat == "json":
      _write_output(_dump_json(dReport), args.output)
   elif sFormat == "tsv":
      _write_output(profile_to_tsv(oProfile), args.output)
   else:
      listLines = [f"T(n), n=0..{oProfile.horizon}: {list(oProfile.values)}"]
      if oTail is not None:
         listLines.append(f"affine tail: T(n) = {oTail.slope}*n + {oTail.K} for n >= {oTail.N}")
      else:
         listLines.append(f"affine tail: none (fitted slope {dReport['fitted_slope']})")
      listLines.append(f"balance: {oBalance.max_discrepancy}")
      listLines.append(f"rauzy: {oEvolution.verdict_text()}")
      _write_output("\n".join(listLines) + "\n", args.output)
   return EXIT_SUCCESS

def cmd_rauzy(args):
   """
Rauzy graphs k = 1..k_max as DOT (one combined file or one file per k) or
their statistics as JSON.
   """
   nKMax = args.k_max if args.k_max is not None else get_config("RAUZY_K_MAX")
   sFormat = _check_format(args.format, ["dot", "json"], "rauzy")
   if args.word is not None:
      oSource = _read_word(args.word)
   else:
      oSource = _read_spec(args.spec)
   if sFormat == "json":
      _write_output(_dump_json(evolution_to_json(evolution(oSource, nKMax))), args.output)
      return EXIT_SUCCESS
   listGraphs, nExact = evolution_graphs(oSource, nKMax)
   if nExact < nKMax + 1:
      Logger.log_warning(f"factor sets are exact only up to length {nExact}, graphs k>={nExact} may be incomplete")
   if args.output_dir is not None:
      os.makedirs(args.output_dir, exist_ok=True)
      for oGraph in listGraphs:
         sPath = os.path.join(args.output_dir, f"rauzy_k{oGraph.k}.dot")
         with open(sPath, 'w', encoding='utf-8', newline='\n') as f:
            f.write(to_dot(oGraph))
         Logger.log(sPath, indent=2)
   else:
      _write_output(evolution_to_dot(listGraphs), args.output)
   return EXIT_SUCCESS

def cmd_algebra(args):
   """
Growth report of a presentation. The normal basis decomposition is added for
finite-dimensional, slow and boundary algebras.
   """
   sFormat = _check_format(args.format, ["json", "text", "tsv"], "algebra")
   oPresentation = parse_presentation(_read_file(args.presentation), args.separator)
   nWindow = args.window if args.window is not None else get_config("CLASSIFY_WINDOW")
   if nWindow < 1:
      raise CInputError(f"Invalid window {nWindow}. Reason: must be positive")
   dReport = algebra_report(oPresentation, nWindow)
   oDescription = None
   if dReport["class"]["tag"] in (CLASS_FINITE_DIM, CLASS_SLOW, CLASS_BOUNDARY):
      oDescription = decompose(oPresentation, nWindow)
      oCoverage = coverage_check(oDescription, oPresentation, get_config("COVERAGE_LENGTH"))
      dReport["decomposition"] = description_to_json(oDescription)
      dReport["coverage"] = {"ok": oCoverage.ok, "n_max": oCoverage.n_max}
   else:
      Logger.log(f"class {dReport['class_text']}: no normal basis decomposition")
   if sFormat == "json":
      _write_output(_dump_json(dReport), args.output)
   elif sFormat == "tsv":
      _write_output(profile_to_tsv(CGrowthProfile(KIND_T_ALGEBRA, dReport["T"]["values"], dReport["T"]["exact"])), args.output)
   else:
      listLines = [f"class: {dReport['class_text']}",
                   f"T(n), n=0..{nWindow}: {dReport['T']['values']}",
                   f"slow growth witness: {dReport['slow_growth_witness']}"]
      sText = "\n".join(listLines) + "\n"
      if oDescription is not None:
         sText += description_to_text(oDescription)
      _write_output(sText, args.output)
   return EXIT_SUCCESS

def cmd_duality(args):
   """
Antidictionary of the factors up to length m and the rebuilt language check.
   """
   nM = args.m if args.m is not None else get_config("DUALITY_LENGTH")
   if nM < 1:
      raise CInputError(f"Invalid length m={nM}. Reason: must be positive")
   _check_format(args.format, ["json"], "duality")
   _, sWord, nExact = _load_source(args, nM)
   if nExact is None:
      if len(sWord) < 2 * nM:
         raise CInputError(f"Word too short for m={nM}. Reason: a prefix of length {len(sWord)} < 2m does not determine all factors of length m")
   elif nExact < nM:
      raise CInputError(f"Spec too short for m={nM}. Reason: factor sets are exact only up to length {nExact}")
   oReport = verify_duality([factors(sWord, n) for n in range(1, nM + 1)])
   _write_output(_dump_json(oReport.to_json()), args.output)
   return EXIT_SUCCESS

def cmd_witness(args):
   """
Complexity n+K, uniform recurrence table and duality check of a rotation coding.
   """
   _check_format(args.format, ["json"], "witness")
   oCoding = _coding_from_args(args)
   oWitness = witness_case2(oCoding, args.horizon, oRandom=random.Random(args.seed), bWaive=args.waive)
   _write_output(_dump_json(witness_to_json(oWitness)), args.output)
   return EXIT_SUCCESS

def cmd_selftest(args):
   """
Run the acceptance suite; exit code 3 when an item fails.
   """
   sFormat = _check_format(args.format, ["text", "json"], "selftest")
   listItems = _parse_int_list(args.items, "items") if args.items else None
   listResults = CSelfTest(args.seed).run(listItems)
   bSuccess = all(o.ok for o in listResults)
   if sFormat == "json":
      _write_output(_dump_json({"seed": args.seed, "ok": bSuccess,
                                "items": [o.to_json() for o in listResults]}), args.output)
   else:
      _write_output(results_to_text(listResults), args.output)
   return EXIT_SUCCESS if bSuccess else EXIT_CONSISTENCY

def cmd_config(args):
   CGrowthConfig.instance().PrintConfig()
   return EXIT_SUCCESS

DCOMMANDS = {
   "generate" : cmd_generate,
   "analyze"  : cmd_analyze,
   "rauzy"    : cmd_rauzy,
   "algebra"  : cmd_algebra,
   "duality"  : cmd_duality,
   "witness"  : cmd_witness,
   "selftest" : cmd_selftest,
   "config"   : cmd_config,
}

def GrowthLab(args=None):
   """
Entry point of the growthlab command line tool.

Flow:

1. Process provided arguments from command line
2. Configure logger and seed
3. Run the subcommand
4. Exit with the subcommand's exit code

**Arguments:**

*  ``args``

   / *Condition*: optional / *Type*: list / *Default*: sys.argv[1:] /

**Returns:**

(*no returns*)

   Terminates with exit code 0 (success), 2 (input error), 3 (consistency
   failure) or 1 (unexpected error).
   """

   # 1. process provided arguments from command line
   args = __process_commandline(args)

   # 2. configure logger and seed
   Logger.config(output_console=not args.quiet, output_logfile=args.logfile, verbose=args.verbose)
   if args.seed is None:
      args.seed = get_config("DEFAULT_SEED")

   # 3. run the subcommand
   try:
      nExitCode = DCOMMANDS[args.command](args)
   except CGrowthLabError as reason:
      Logger.log_error(str(reason))
      sys.exit(reason.nExitCode)
   except Exception as reason:
      Logger.log_error(f"Unexpected error in '{args.command}'. Reason: {type(reason).__name__}: {reason}", fatal_error=True)
      sys.exit(EXIT_UNEXPECTED)

   # 4. exit
   sys.exit(nExitCode)

if __name__=="__main__":
   GrowthLab()
