"""Command line front end.

Exit codes: 0 success, 1 domain failures (diagnostics, unanalyzable
tokens, rejected generation), 2 usage and configuration errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .analyzer import AnalysisError, AnalysisSet, MorphAnalyzer, analyze_corpus
from .generator import explain as gen_explain
from .lexicon import (
    LexiconParseError,
    LexiconValidationError,
    Lexicon,
    load_lexicon,
    packaged_data_dir,
    parse_suffixes,
    validate_lexicon,
)
from .morphotactics import MorphotacticTable, UnknownTagError
from .reclassifier import render_report, render_rows, run_reclassification

ENV_DATA_DIR = "MAPUMORPH_DATA"


class ConfigError(Exception):
    pass


def _data_file(explicit: str | None, name: str) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_DATA_DIR)
    if env:
        return Path(env) / name
    return packaged_data_dir() / name


def _load(args) -> tuple[Lexicon, MorphotacticTable]:
    roots = _data_file(args.lexicon, "roots.tsv")
    suffixes = _data_file(args.suffixes, "suffixes.tsv")
    for path in (roots, suffixes):
        if not path.is_file():
            raise ConfigError(f"no such data file: {path}")
    try:
        lexicon = load_lexicon(roots, suffixes, validate=False)
    except LexiconParseError as exc:
        raise ConfigError(str(exc)) from exc
    overrides = None
    if args.overrides:
        opath = Path(args.overrides)
        if not opath.is_file():
            raise ConfigError(f"no such data file: {opath}")
        try:
            with opath.open(encoding="utf-8") as fh:
                overrides = parse_suffixes(fh, origin=str(opath))
        except LexiconParseError as exc:
            raise ConfigError(str(exc)) from exc
    table = MorphotacticTable.from_suffixes(lexicon.suffixes, overrides)
    return lexicon, table


def _open_out(path: str | None):
    if path is None:
        return sys.stdout, None
    out = Path(path)
    return out.open("w", encoding="utf-8"), out


# ---------------------------------------------------------------------------
# analyze

def _analysis_lines(result, fmt: str):
    if fmt == "plain":
        if result.ambiguity:
            yield f"{result.surface}\t" + " | ".join(result.glosses())
        else:
            yield f"{result.surface}\tUNANALYZABLE"
    elif fmt == "records":
        record = {
            "input": result.surface,
            "ambiguity": result.ambiguity,
            "analyses": [
                {
                    "gloss": a.gloss,
                    "root": a.entry.lemma,
                    "category": a.entry.category,
                    "tags": list(a.tags),
                    "finite": a.finite,
                }
                for a in result.analyses
            ],
        }
        yield json.dumps(record, ensure_ascii=False)
    else:  # tsv
        if not result.ambiguity:
            yield f"{result.surface}\t0\t\t"
        for i, a in enumerate(result.analyses, start=1):
            yield f"{result.surface}\t{i}\t{a.gloss}\t{'finite' if a.finite else 'nonfinite'}"


def cmd_analyze(args) -> int:
    lexicon, table = _load(args)
    analyzer = MorphAnalyzer(lexicon, table)
    results = []
    if args.words:
        for word in args.words:
            try:
                results.append(analyzer.analyze(word))
            except AnalysisError as exc:
                if exc.code == "empty-form":
                    raise ConfigError("empty input form") from exc
                results.append(AnalysisSet(word, ()))
    else:
        stream = sys.stdin
        if args.corpus:
            stream = Path(args.corpus).open(encoding="utf-8")
        try:
            token_results, summary = analyze_corpus(
                lexicon, table, stream, source=args.corpus or "<stdin>"
            )
        finally:
            if args.corpus:
                stream.close()
        results = [tr.result for tr in token_results]
        if args.ambiguity_report:
            hist = ", ".join(
                f"{k}:{v}" for k, v in sorted(summary.ambiguity_histogram.items())
            )
            print(
                f"tokens {summary.tokens}  analyzable {summary.analyzable}  "
                f"unanalyzable {summary.unanalyzable}  "
                f"mean ambiguity {summary.mean_ambiguity:.2f}  [{hist}]",
                file=sys.stderr,
            )
    fh, _ = _open_out(args.out)
    try:
        if args.format == "tsv":
            print("token\tanalysis\tgloss\tfiniteness", file=fh)
        for result in results:
            for line in _analysis_lines(result, args.format):
                print(line, file=fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 1 if any(r.ambiguity == 0 for r in results) else 0


# ---------------------------------------------------------------------------
# generate

def cmd_generate(args) -> int:
    lexicon, table = _load(args)
    # request grammar: lemma[:CATEGORY][+reading]
    root = args.root
    reading = args.reading
    category = None
    if "+" in root:
        root, inline = root.split("+", 1)
        if inline not in ("iv", "tv"):
            print(f"error: unknown reading: {inline!r}", file=sys.stderr)
            return 2
        reading = reading or inline
    if ":" in root:
        root, category = root.split(":", 1)
    tags = [t for t in args.tags.split(",") if t.strip()] if args.tags else []
    try:
        result = gen_explain(lexicon, table, root, tags, reading=reading, category=category)
    except (KeyError, ValueError, UnknownTagError) as exc:
        # unknown root, ambiguous root, unknown tag: caller error
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not result.ok:
        for v in result.violations:
            print(f"rejected: {v}", file=sys.stderr)
        return 1
    if args.format == "records":
        print(
            json.dumps(
                {
                    "root": root,
                    "tags": tags,
                    "gloss": result.gloss,
                    "reading": result.reading,
                    "surfaces": list(result.surfaces),
                },
                ensure_ascii=False,
            )
        )
    else:
        for surface in result.surfaces:
            print(surface)
    return 0


# ---------------------------------------------------------------------------
# validate

def cmd_validate(args) -> int:
    lexicon, table = _load(args)
    # validate the effective inventory so bad --overrides rows surface too
    problems = validate_lexicon(Lexicon(lexicon.entries, table.suffixes))
    for p in problems:
        print(f"{p.code}\t{p.subject}\t{p.detail}", file=sys.stderr)
    failures = len(problems)
    # generation self-test against the recorded causative surfaces; skipped
    # for a custom --lexicon unless fixtures are named explicitly
    selftest = None
    if args.selftest:
        selftest = Path(args.selftest)
    elif args.lexicon is None:
        selftest = _data_file(None, "causative_um.tsv")
    if selftest is not None and selftest.is_file():
        with selftest.open(encoding="utf-8") as fh:
            for no, line in enumerate(fh, start=1):
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                cells = [c.strip() for c in line.split("\t")]
                if len(cells) != 2:
                    raise ConfigError(f"{selftest}:{no}: expected 2 columns")
                lemma, expected = cells[0], [s.strip() for s in cells[1].split(",")]
                try:
                    got = list(gen_explain(lexicon, table, lemma, ["CA-m"]).surfaces)
                except (KeyError, ValueError) as exc:
                    got = [f"<{exc}>"]
                if got != expected:
                    failures += 1
                    print(
                        f"causative-selftest\t{lemma}\texpected {expected}, got {got}",
                        file=sys.stderr,
                    )
    if failures:
        print(f"validate: {failures} problem(s)", file=sys.stderr)
        return 1
    print(f"validate: ok ({len(lexicon.entries)} roots, {len(lexicon.suffixes)} suffixes)")
    return 0


# ---------------------------------------------------------------------------
# reclassify

def cmd_reclassify(args) -> int:
    lexicon, table = _load(args)
    lemmas = None
    if args.roots:
        lemmas = [r.strip() for r in args.roots.split(",") if r.strip()]
    with Path(args.corpus).open(encoding="utf-8") as fh:
        results = run_reclassification(
            lexicon,
            table,
            fh,
            lemmas=lemmas,
            threshold=args.threshold,
            use_hints=args.hints,
            source=args.corpus,
        )
    rows = render_rows(results, only_changes=args.only_changes)
    document = render_report(results, fmt=args.format, only_changes=args.only_changes)
    fh, out_path = _open_out(args.out)
    try:
        fh.write(document)
    finally:
        if fh is not sys.stdout:
            fh.close()
    if out_path is not None and rows:
        from .figures import save_evidence_chart

        figure = out_path.with_suffix(".png")
        save_evidence_chart(rows, figure)
        print(f"wrote {out_path} and {figure}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# stats

def cmd_stats(args) -> int:
    lexicon, table = _load(args)
    with Path(args.corpus).open(encoding="utf-8") as fh:
        token_results, summary = analyze_corpus(lexicon, table, fh, source=args.corpus)
    fh, out_path = _open_out(args.out)
    try:
        print("position\ttoken\tambiguity\tbest_gloss", file=fh)
        for tr in token_results:
            best = tr.result.analyses[0].gloss if tr.result.ambiguity else ""
            print(
                f"{tr.token.position}\t{tr.token.form}\t{tr.result.ambiguity}\t{best}",
                file=fh,
            )
    finally:
        if fh is not sys.stdout:
            fh.close()
    print(
        f"tokens {summary.tokens}  analyzable {summary.analyzable}  "
        f"unanalyzable {summary.unanalyzable}  mean ambiguity {summary.mean_ambiguity:.2f}",
        file=sys.stderr,
    )
    if out_path is not None:
        from .figures import save_ambiguity_histogram

        figure = out_path.with_suffix(".png")
        save_ambiguity_histogram(summary.ambiguity_histogram, figure)
        print(f"wrote {out_path} and {figure}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapumorph",
        description="Morphological analyzer and generator for Mapudüngun verb forms.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", metavar="TSV", help="root lexicon (default: packaged)")
    common.add_argument("--suffixes", metavar="TSV", help="suffix table (default: packaged)")
    common.add_argument("--overrides", metavar="TSV", help="suffix rows replacing same-tag entries")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="analyze word forms")
    p.add_argument("words", nargs="*", help="word forms; omit to read a corpus")
    p.add_argument("--corpus", metavar="FILE", help="text file to tokenize (default: stdin)")
    p.add_argument("--format", choices=("plain", "records", "tsv"), default="plain")
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    p.add_argument(
        "--ambiguity-report", action="store_true", help="print corpus summary to stderr"
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", parents=[common], help="generate surfaces from root + tags")
    p.add_argument("root", help="lemma[:CATEGORY][+reading], e.g. la:Aj or monge+tv")
    p.add_argument("tags", help="comma-separated suffix tags (empty for the bare root)")
    p.add_argument("--reading", choices=("iv", "tv"), help="valency reading for labile roots")
    p.add_argument("--format", choices=("plain", "records"), default="plain")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", parents=[common], help="check lexicon and suffix data")
    p.add_argument(
        "--selftest", metavar="TSV", help="causative surface fixtures (default: packaged)"
    )
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reclassify", parents=[common], help="propose category changes from a corpus")
    p.add_argument("corpus", help="text corpus to scan")
    p.add_argument("--roots", metavar="LIST", help="comma-separated candidate lemmas")
    p.add_argument(
        "--threshold",
        type=int,
        default=1,
        help="isolated attestations needed to propose a non-verbal category (default 1)",
    )
    p.add_argument("--hints", action="store_true", help="guess the target category from neighbours")
    p.add_argument("--only-changes", action="store_true", help="drop rows whose action is keep")
    p.add_argument("--format", choices=("tsv", "table"), default="tsv")
    p.add_argument("--out", metavar="TSV", help="write the report here, plus a chart alongside")
    p.set_defaults(func=cmd_reclassify)

    p = sub.add_parser("stats", parents=[common], help="per-token corpus report")
    p.add_argument("corpus", help="text corpus to tokenize and analyze")
    p.add_argument("--out", metavar="TSV", help="write the report here, plus a chart alongside")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LexiconValidationError as exc:
        for p in exc.diagnostics:
            print(f"{p.code}\t{p.subject}\t{p.detail}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
