"""svlight command line.

Exit status: 0 on success, 1 on usage errors, 2 on unreadable or
malformed data files.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import cooc, evaluation, lexicon, standardize
from .corpus import CorpusFormatError, read_tagged_corpus
from .extract import ExtractionConfig, count_corpus
from .lemma import LemmaRulesError, load_lemma_rules
from .models import GLOBAL, MODELS, choice_ratio, iterate_global, rank

EXIT_USAGE = 1
EXIT_DATA = 2

FORMATS_HELP = """\
file formats:
  tagged corpus   surface<TAB>POS per line, blank line ends a sentence, # comments
  counts          verb<TAB>noun<TAB>count, sorted, # header lines
  lexicon         noun<TAB>stem_verb<TAB>builtin|generated|manual
  decisions       noun<TAB>accept|reject
  test set        source_text<TAB>full_verb<TAB>nominal<TAB>gold_sv[|alt_sv...]
  population      label<TAB>exposure<TAB>events
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _existing(path):
    if not os.path.isfile(path):
        raise argparse.ArgumentTypeError(f"no such file: {path}")
    return path


def build_parser():
    parser = _Parser(prog="svlight", description="Support verb identification from tagged corpora.",
                     epilog=FORMATS_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("count", help="tally verb/direct-object pairs in tagged corpora")
    p.add_argument("--corpus", type=_existing, action="append", required=True,
                   help="tagged corpus file (repeatable)")
    p.add_argument("--out", required=True, help="counts TSV to write ('-' for stdout)")
    p.add_argument("--nouns", type=_existing, help="lexicon file; count only its nouns")
    p.add_argument("--np-span", type=int, default=6, help="noun-phrase window (default 6)")
    p.add_argument("--include-passive", action="store_true",
                   help="also count participles after a form of 'be'")
    p.add_argument("--lemma-rules", type=_existing, help="replacement lemma rules file")

    p = sub.add_parser("rank", help="rank candidate support verbs for one noun")
    p.add_argument("--counts", type=_existing, required=True)
    p.add_argument("--noun", required=True)
    p.add_argument("--model", choices=MODELS, default=GLOBAL)
    p.add_argument("--iterate", type=int, default=0, metavar="N",
                   help="re-estimate global weights N times (global model only)")

    p = sub.add_parser("eval", help="score a model against a test set")
    p.add_argument("--counts", type=_existing, required=True)
    p.add_argument("--tests", type=_existing, help="test-set file (default: shipped set)")
    p.add_argument("--model", choices=MODELS, default=GLOBAL)
    p.add_argument("--compare", choices=MODELS, help="second model to test against")
    p.add_argument("--format", choices=("table", "tsv"), default="table")
    p.add_argument("--fisher", action="store_true",
                   help="also report a one-sided Fisher exact test")

    p = sub.add_parser("standardize", help="crude rate, SMR and ISDR of a target population")
    p.add_argument("--target", type=_existing, required=True)
    p.add_argument("--standard", type=_existing, required=True)

    p = sub.add_parser("lexicon", help="build the nominalization lexicon")
    lsub = p.add_subparsers(dest="action", metavar="ACTION", parser_class=_Parser)
    lsub.required = True
    g = lsub.add_parser("generate", help="match nouns to stem verbs by suffix rules")
    g.add_argument("--nouns", type=_existing, required=True, help="noun lemmas, one per line")
    g.add_argument("--verbs", type=_existing, help="verb lemmas, one per line (default: shipped)")
    g.add_argument("--rules", type=_existing, help="suffix rules: suffix<TAB>rep[,rep]")
    g.add_argument("--out", default="-")
    f = lsub.add_parser("filter", help="apply accept/reject decisions to candidates")
    f.add_argument("--candidates", type=_existing, required=True)
    f.add_argument("--decisions", type=_existing, required=True)
    f.add_argument("--out", default="-")
    f.add_argument("--pending", help="write undecided candidates here")
    m = lsub.add_parser("merge", help="combine builtin, generated and manual lexicons")
    m.add_argument("--builtin", type=_existing, help="default: shipped builtin lexicon")
    m.add_argument("--generated", type=_existing)
    m.add_argument("--manual", type=_existing)
    m.add_argument("--out", default="-")
    return parser


def _write(path, text, stdout):
    if path == "-":
        stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _read_words(path):
    with open(path, encoding="utf-8") as fh:
        return {w.strip() for w in fh if w.strip() and not w.startswith("#")}


def cmd_count(args, stdout):
    if args.np_span < 1:
        raise UsageError("--np-span must be at least 1")
    nouns = None
    if args.nouns:
        nouns = frozenset(e.noun for e in lexicon.load_lexicon(args.nouns))
    config = ExtractionConfig(noun_filter=nouns, max_np_span=args.np_span,
                              exclude_passive=not args.include_passive)
    rules = load_lemma_rules(args.lemma_rules)
    parts = [count_corpus(read_tagged_corpus(path), config, rules) for path in args.corpus]
    matrix = cooc.merge_all(parts)
    provenance = {
        "corpus": ",".join(os.path.basename(p) for p in args.corpus),
        "config": config.fingerprint(),
    }
    _write(args.out, cooc.dumps(matrix, provenance), stdout)


def format_ranking(r) -> str:
    if r.no_data:
        return f"{r.noun}: N/A (no data)\n"
    total_score = sum(c.score for c in r.candidates)
    lines = [f"# noun: {r.noun}  model: {r.model}",
             "verb\traw\tscore\tnormalized"]
    for c in r.candidates:
        norm = float(c.score / total_score) if total_score else 0.0
        score = c.score if isinstance(c.score, int) else f"{float(c.score):.6g}"
        lines.append(f"{c.verb}\t{c.raw_count}\t{score}\t{norm:.4f}")
    ratio = choice_ratio(r)
    lines.append(f"# C1/C2 ratio: {evaluation._cell(ratio)}")
    return "\n".join(lines) + "\n"


def _weights(args, matrix):
    if args.iterate < 0:
        raise UsageError("--iterate must be non-negative")
    if not args.iterate:
        return None
    if args.model != GLOBAL:
        raise UsageError("--iterate applies to the global model only")
    if matrix.total == 0:
        return None
    return iterate_global(matrix, args.iterate)


def cmd_rank(args, stdout):
    matrix = cooc.load(args.counts)
    r = rank(matrix, args.noun, args.model, _weights(args, matrix))
    stdout.write(format_ranking(r))


def cmd_eval(args, stdout):
    matrix = cooc.load(args.counts)
    cases = evaluation.load_test_set(args.tests)
    reports = [evaluation.evaluate(matrix, cases, args.model)]
    if args.compare:
        reports.append(evaluation.evaluate(matrix, cases, args.compare))
    for rep in reports:
        stdout.write(f"== model: {rep.model}\n")
        stdout.write(evaluation.render_report(rep, args.format))
        stdout.write(f"accuracy: {rep.successes}/{rep.evaluable} = {rep.accuracy:.3f}"
                     f" ({len(rep.rows) - rep.evaluable} no-data)\n")
    if args.compare:
        a, b = reports
        if a.evaluable and b.evaluable:
            z = evaluation.significance(a.successes, a.evaluable, b.successes, b.evaluable)
            stdout.write(f"one-sided pooled z-test, {a.model} > {b.model}: p = {z:.4f}\n")
            if args.fisher:
                fp = evaluation.fisher_significance(a.successes, a.evaluable,
                                                    b.successes, b.evaluable)
                stdout.write(f"one-sided Fisher exact test, {a.model} > {b.model}: p = {fp:.4f}\n")
                for level in (0.05, 0.10):
                    if (z <= level) != (fp <= level):
                        stdout.write(f"note: the tests disagree at the {level:.0%} level\n")
        else:
            stdout.write("significance: not computed (a model has no evaluable cases)\n")


def cmd_standardize(args, stdout):
    target = standardize.load_population(args.target)
    standard = standardize.load_population(args.standard)
    try:
        expected = standardize.expected_events(standardize.category_rates(standard), target)
    except KeyError as e:
        raise standardize.PopulationFormatError(f"{args.standard}: {e.args[0]}") from None
    try:
        smr = f"{standardize.smr(target, standard):.6f}"
        isdr = f"{standardize.isdr(target, standard):.6f}"
    except ValueError:
        smr = isdr = "N/A"
    stdout.write(
        f"CDR(target)\t{standardize.crude_rate(target):.6f}\n"
        f"CDR(standard)\t{standardize.crude_rate(standard):.6f}\n"
        f"expected events\t{expected:.6f}\n"
        f"actual events\t{target.total_events:g}\n"
        f"SMR\t{smr}\n"
        f"ISDR\t{isdr}\n")


def cmd_lexicon(args, stdout, stderr):
    if args.action == "generate":
        verbs = _read_words(args.verbs) if args.verbs else lexicon.stem_verbs()
        rules = lexicon.DEFAULT_RULES
        if args.rules:
            with open(args.rules, encoding="utf-8") as fh:
                rules = lexicon.parse_rules(fh, args.rules)
        entries = lexicon.generate_candidates(_read_words(args.nouns), verbs, rules)
        _write(args.out, lexicon.dumps_lexicon(entries), stdout)
    elif args.action == "filter":
        cands = lexicon.load_lexicon(args.candidates)
        with open(args.decisions, encoding="utf-8") as fh:
            decisions = lexicon.parse_decisions(fh, args.decisions)
        result = lexicon.apply_manual_filter(cands, decisions)
        _write(args.out, lexicon.dumps_lexicon(result.lexicon), stdout)
        if args.pending:
            _write(args.pending, lexicon.dumps_lexicon(result.pending), stdout)
        if result.pending:
            stderr.write(f"{len(result.pending)} candidate(s) pending a decision\n")
    elif args.action == "merge":
        builtin = lexicon.load_lexicon(args.builtin) if args.builtin else lexicon.builtin_lexicon()
        generated = lexicon.load_lexicon(args.generated) if args.generated else []
        manual = lexicon.load_lexicon(args.manual) if args.manual else []
        merged = lexicon.merge_lexicons(builtin, generated, manual)
        _write(args.out, lexicon.dumps_lexicon(merged), stdout)


DATA_ERRORS = (CorpusFormatError, cooc.CountsFormatError, LemmaRulesError,
               lexicon.LexiconError, evaluation.TestSetError,
               standardize.PopulationFormatError, OSError, UnicodeDecodeError)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    old_err = sys.stderr
    sys.stderr = stderr
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    finally:
        sys.stderr = old_err
    try:
        if args.command == "count":
            cmd_count(args, stdout)
        elif args.command == "rank":
            cmd_rank(args, stdout)
        elif args.command == "eval":
            cmd_eval(args, stdout)
        elif args.command == "standardize":
            cmd_standardize(args, stdout)
        elif args.command == "lexicon":
            import warnings

            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", lexicon.LexiconWarning)
                cmd_lexicon(args, stdout, stderr)
            for w in caught:
                stderr.write(f"warning: {w.message}\n")
    except UsageError as e:
        stderr.write(f"svlight: error: {e}\n")
        return EXIT_USAGE
    except DATA_ERRORS as e:
        stderr.write(f"svlight: {e}\n")
        return EXIT_DATA
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
