"""Corpus-driven root reclassification.

Two distributional signals bear on a root's lexical category:

* isolated use: the bare lemma (or a variant spelling) standing alone as
  a token is nominal or adjectival behaviour, not verbal;
* causative formations: any analyzable token built on root + causative
  points at an intransitive verbal base.

A candidate showing only the first signal is proposed for reclassification
to a non-verbal category, only the second to intransitive verb, and both
at once is flagged as a conflict for a human to settle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .analyzer import AnalysisError, MorphAnalyzer
from .lexicon import INTRANSITIVE, LexEntry, Lexicon
from .morphotactics import MorphotacticTable
from .orthography import Token, normalize, tokenize

# isolated-use neighbours that hint at the replacement category
_DEGREE_WORDS = frozenset({"müna", "rume"})
_NOMINAL_NEIGHBOURS = frozenset(
    {"ti", "chi", "pu", "kiñe", "epu", "küla", "meli", "kechu",
     "kayu", "regle", "pura", "aylla", "mari"}
)


@dataclass
class CorpusIndex:
    tokens: list[Token] = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)

    @property
    def size(self) -> int:
        return len(self.tokens)

    def context(self, position: int, width: int = 5) -> str:
        lo = max(0, position - width)
        hi = min(len(self.tokens), position + width + 1)
        return " ".join(t.form for t in self.tokens[lo:hi])


def index_corpus(lines: Iterable[str], source: str = "<corpus>") -> CorpusIndex:
    index = CorpusIndex()
    for token in tokenize(lines, source):
        index.tokens.append(token)
        index.counts[token.form] += 1
    return index


@dataclass(frozen=True)
class EvidenceReport:
    lemma: str
    initial_category: str
    in_lexicon: bool
    isolated_count: int
    isolated_contexts: tuple[str, ...]
    causative_forms: tuple[tuple[str, int], ...]

    @property
    def causative_count(self) -> int:
        return sum(n for _, n in self.causative_forms)


@dataclass(frozen=True)
class Proposal:
    lemma: str
    initial_category: str
    final_category: str
    action: str  # keep | to_nonverbal | to_intransitive | conflict
    note: str = ""

    @property
    def changed(self) -> bool:
        return self.action in ("to_nonverbal", "to_intransitive") and (
            self.final_category != self.initial_category
        )


def _provisional(lemma: str) -> LexEntry:
    return LexEntry(
        lemma=lemma,
        category="VI",
        valency=INTRANSITIVE,
        gloss_iv="(provisional)",
    )


def _lexicon_entry(lexicon: Lexicon, lemma: str) -> LexEntry | None:
    for entry in lexicon.lookup_root(lemma):
        if entry.lemma == lemma:
            return entry
    return None


def gather_evidence(
    lexicon: Lexicon,
    table: MorphotacticTable,
    index: CorpusIndex,
    lemmas: Sequence[str],
) -> list[EvidenceReport]:
    """Count both signals for every candidate over one shared analysis pass.

    Candidates absent from the lexicon are analyzed under a provisional
    intransitive entry, since only a verbal hypothesis lets causative
    formations on them be found at all.
    """
    lemmas = [normalize(l) for l in lemmas]
    known = {l: _lexicon_entry(lexicon, l) for l in lemmas}
    extras = [_provisional(l) for l, e in known.items() if e is None]
    scratch = Lexicon(tuple(lexicon.entries) + tuple(extras), lexicon.suffixes) if extras else lexicon
    analyzer = MorphAnalyzer(scratch, table)

    causative_tags = {s.tag for s in table.suffixes if s.valency_effect == "transitivizes"}
    wanted = set(lemmas)
    # lemma -> {form: count} for causatively suffixed analyses
    causative: dict[str, Counter] = {l: Counter() for l in lemmas}
    for form, n in index.counts.items():
        try:
            result = analyzer.analyze(form)
        except AnalysisError:
            continue
        hit_roots = {
            a.entry.lemma
            for a in result.analyses
            if a.entry.lemma in wanted and any(m.tag in causative_tags for m in a.morphemes)
        }
        for root in hit_roots:
            causative[root][form] += n

    reports = []
    for lemma in lemmas:
        entry = known[lemma]
        bare_forms = {lemma} | (set(entry.variants) if entry else set())
        isolated = [t for t in index.tokens if t.form in bare_forms]
        contexts = tuple(index.context(t.position) for t in isolated[:3])
        reports.append(
            EvidenceReport(
                lemma=lemma,
                initial_category=entry.category if entry else "VI",
                in_lexicon=entry is not None,
                isolated_count=len(isolated),
                isolated_contexts=contexts,
                causative_forms=tuple(sorted(causative[lemma].items())),
            )
        )
    return reports


def guess_category(index: CorpusIndex, lemma: str) -> str | None:
    """Weak neighbour heuristic for the non-verbal target category."""
    lemma = normalize(lemma)
    for i, token in enumerate(index.tokens):
        if token.form != lemma or i == 0:
            continue
        left = index.tokens[i - 1].form
        if left in _DEGREE_WORDS:
            return "Aj"
        if left in _NOMINAL_NEIGHBOURS:
            return "N"
    return None


def propose(
    report: EvidenceReport,
    threshold: int = 1,
    category_hint: str | None = None,
) -> Proposal:
    """Map the evidence to an action; pure in its inputs."""
    isolated = report.isolated_count >= threshold
    causative = report.causative_count >= 1
    if isolated and causative:
        return Proposal(
            report.lemma,
            report.initial_category,
            report.initial_category,
            "conflict",
            f"isolated x{report.isolated_count} vs causative x{report.causative_count}",
        )
    if isolated:
        final = category_hint or "N"
        return Proposal(
            report.lemma,
            report.initial_category,
            final,
            "to_nonverbal",
            f"isolated x{report.isolated_count}",
        )
    if causative:
        forms = ", ".join(f for f, _ in report.causative_forms)
        return Proposal(
            report.lemma,
            report.initial_category,
            "VI",
            "to_intransitive",
            f"causative: {forms}",
        )
    return Proposal(report.lemma, report.initial_category, report.initial_category, "keep")


def run_reclassification(
    lexicon: Lexicon,
    table: MorphotacticTable,
    lines: Iterable[str],
    lemmas: Sequence[str] | None = None,
    threshold: int = 1,
    use_hints: bool = False,
    source: str = "<corpus>",
) -> list[tuple[EvidenceReport, Proposal]]:
    index = index_corpus(lines, source)
    if lemmas is None:
        lemmas = [e.lemma for e in lexicon.entries]
    reports = gather_evidence(lexicon, table, index, lemmas)
    out = []
    for report in reports:
        hint = guess_category(index, report.lemma) if use_hints else None
        out.append((report, propose(report, threshold, hint)))
    return out


REPORT_COLUMNS = ("root", "initial", "final", "action", "isolated", "causative", "note")


def render_rows(
    results: Sequence[tuple[EvidenceReport, Proposal]], only_changes: bool = False
) -> list[dict]:
    """Flatten to report rows; the delimited writer and figures share these."""
    rows = []
    for report, proposal in results:
        if only_changes and proposal.action == "keep":
            continue
        rows.append(
            {
                "root": report.lemma,
                "initial": report.initial_category,
                "final": proposal.final_category,
                "action": proposal.action,
                "isolated": report.isolated_count,
                "causative": report.causative_count,
                "note": proposal.note,
            }
        )
    return rows


def render_report(
    results: Sequence[tuple[EvidenceReport, Proposal]],
    fmt: str = "tsv",
    only_changes: bool = False,
) -> str:
    """Report document, header included: "tsv" or an aligned "table"."""
    rows = render_rows(results, only_changes)
    cells = [list(REPORT_COLUMNS)] + [
        [str(row[c]) for c in REPORT_COLUMNS] for row in rows
    ]
    if fmt == "tsv":
        return "\n".join("\t".join(line) for line in cells) + "\n"
    if fmt == "table":
        widths = [max(len(line[i]) for line in cells) for i in range(len(REPORT_COLUMNS))]
        return (
            "\n".join(
                "  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
                for line in cells
            )
            + "\n"
        )
    raise ValueError(f"unknown report format: {fmt!r}")
