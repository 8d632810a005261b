"""Surface analysis: right-to-left suffix stripping over a reversed trie.

Suffix allomorph realizations are stripped from the word end inward,
pruned by strict slot monotonicity and exclusion classes.  Whenever the
remaining prefix is a known lemma, variant, or conditioned stem, root
readings are assembled and filtered through the morphotactic checks.
Null morphemes are inserted only where licensed: the slot-3 person of a
plain mood and the slot-36 verbalizer of a non-verbal root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import morphotactics as mt
from .lexicon import LexEntry, Lexicon, SuffixEntry, trigger_matches
from .morphotactics import Morpheme, MorphemeSeq, MorphotacticTable
from .orthography import Token, alphabet_ok, normalize, tokenize
from .phonology import stem_fits, suffix_realizations


class AnalysisError(ValueError):
    """Input rejected before analysis; `code` is empty-form or bad-alphabet."""

    def __init__(self, code: str, detail: str = ""):
        self.code = code
        super().__init__(f"{code}: {detail}" if detail else code)


@dataclass(frozen=True)
class Analysis:
    entry: LexEntry
    reading: str | None  # "iv" | "tv" | None for non-verbal roots
    verbalized: bool
    root_surface: str  # stem as it appears in the word (post-alternation)
    morphemes: MorphemeSeq
    gloss: str
    finite: bool

    def reconstruct(self) -> str:
        return self.root_surface + "".join(m.surface for m in self.morphemes)

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(m.tag for m in self.morphemes)


@dataclass(frozen=True)
class AnalysisSet:
    surface: str
    analyses: tuple[Analysis, ...]

    @property
    def ambiguity(self) -> int:
        return len(self.analyses)

    def glosses(self) -> tuple[str, ...]:
        return tuple(a.gloss for a in self.analyses)


def render_gloss(analysis: Analysis) -> str:
    """Documented gloss format: "-CAT.lemma" then "+TAG" per morpheme,
    null morphemes rendered "+TAG.ø"."""
    return analysis.gloss


class _Node:
    __slots__ = ("children", "hits")

    def __init__(self):
        self.children: dict[str, _Node] = {}
        self.hits: list[tuple[SuffixEntry, str, str]] = []  # (suffix, surface, stem_final)


class MorphAnalyzer:
    """Analyzer bound to one lexicon and slot table; reusable across calls."""

    def __init__(self, lexicon: Lexicon, table: MorphotacticTable | None = None):
        self.lexicon = lexicon
        self.table = table or MorphotacticTable(lexicon.suffixes)
        self._root = _Node()
        for suffix in self.table.suffixes:
            for real in suffix_realizations(suffix):
                if not real.surface:
                    continue
                node = self._root
                for ch in reversed(real.surface):
                    node = node.children.setdefault(ch, _Node())
                node.hits.append((suffix, real.surface, real.stem_final))
        self._verbalizer = next(
            (s for s in self.table.suffixes if s.excl_class == "vrb" and s.has_null), None
        )

    # ------------------------------------------------------------------
    def analyze(self, surface: str) -> AnalysisSet:
        if not surface or not surface.strip():
            raise AnalysisError("empty-form")
        form = normalize(surface.strip())
        if not alphabet_ok(form):
            bad = "".join(sorted({ch for ch in form if not alphabet_ok(ch)}))
            raise AnalysisError("bad-alphabet", f"{form!r} contains {bad!r}")
        found: list[Analysis] = []
        self._walk(form, 0, [], set(), found)
        unique: dict[tuple, Analysis] = {}
        for a in found:
            key = (a.entry, a.reading, a.verbalized, a.root_surface, a.morphemes)
            unique.setdefault(key, a)
        ordered = sorted(unique.values(), key=lambda a: (len(a.morphemes), a.gloss))
        return AnalysisSet(form, tuple(ordered))

    # ------------------------------------------------------------------
    def _walk(
        self,
        remaining: str,
        min_slot: int,
        stripped: list[tuple[SuffixEntry, str]],
        seen_classes: set[str],
        found: list[Analysis],
    ) -> None:
        self._try_roots(remaining, stripped, found)
        node = self._root
        k = len(remaining)
        while k > 1:
            k -= 1
            node = node.children.get(remaining[k])
            if node is None:
                return
            for suffix, real_surface, stem_final in node.hits:
                if suffix.slot <= min_slot:
                    continue
                if suffix.excl_class in seen_classes:
                    continue
                stem = remaining[:k]
                if not stem_fits(stem, stem_final):
                    continue
                stripped.append((suffix, real_surface))
                seen_classes.add(suffix.excl_class)
                self._walk(stem, suffix.slot, stripped, seen_classes, found)
                seen_classes.discard(suffix.excl_class)
                stripped.pop()

    def _try_roots(
        self,
        stem: str,
        stripped: list[tuple[SuffixEntry, str]],
        found: list[Analysis],
    ) -> None:
        next_tag = stripped[-1][0].tag if stripped else None
        for entry in self.lexicon.lookup_root(stem):
            if next_tag is not None:
                alt = entry.alternant_for(next_tag)
                # A replacing alternant means join() never leaves the
                # plain stem before its trigger, so skip that reading.
                if alt is not None and not alt.keep_base and stem not in alt.stems:
                    continue
            self._assemble(entry, stem, stripped, found)
        if next_tag is not None:
            for entry, alt in self.lexicon.alternant_candidates(stem):
                if trigger_matches(alt.trigger, next_tag):
                    self._assemble(entry, stem, stripped, found)

    # ------------------------------------------------------------------
    def _assemble(
        self,
        entry: LexEntry,
        stem: str,
        stripped: list[tuple[SuffixEntry, str]],
        found: list[Analysis],
    ) -> None:
        overt = tuple(
            Morpheme(suffix.tag, surface, suffix.slot)
            for suffix, surface in reversed(stripped)
        )
        if entry.is_verbal:
            if not overt:
                return  # a bare verbal root does not stand as a word
            for reading in entry.readings():
                self._finish(entry, reading, False, stem, overt, found)
            return
        claims = mt.claims_finite(self.table, overt)
        has_valency = any(
            self.table.require(m.tag).valency_effect != "none" for m in overt
        )
        if not claims and not has_valency:
            self._finish(entry, None, False, stem, overt, found)
        if overt and self._verbalizer is not None:
            self._finish(entry, None, True, stem, overt, found)

    def _finish(
        self,
        entry: LexEntry,
        reading: str | None,
        verbalized: bool,
        stem: str,
        overt: MorphemeSeq,
        found: list[Analysis],
    ) -> None:
        moods = [m for m in overt if m.tag in self.table.mood_tags]
        persons = [m for m in overt if m.tag in self.table.person_tags]
        variants: list[list[Morpheme]] = []
        if len(moods) == 1 and moods[0].tag not in self.table.fused_moods and not persons:
            for tag in mt.null_person_candidates(self.table, overt):
                seq = list(overt)
                slot = self.table.require(tag).slot
                at = next((i for i, m in enumerate(seq) if m.slot < slot), len(seq))
                seq.insert(at, Morpheme(tag, "", slot))
                variants.append(seq)
        else:
            variants.append(list(overt))
        for seq in variants:
            if verbalized:
                seq = [Morpheme(self._verbalizer.tag, "", self._verbalizer.slot)] + seq
            full = tuple(seq)
            if mt.check_sequence(self.table, full):
                continue
            finite = False
            if mt.claims_finite(self.table, full):
                if mt.check_finite(self.table, full):
                    continue
                finite = True
            if mt.check_causative(self.table, entry, full, reading=reading, verbalized=verbalized):
                continue
            found.append(
                Analysis(
                    entry=entry,
                    reading=reading,
                    verbalized=verbalized,
                    root_surface=stem,
                    morphemes=full,
                    gloss=mt.gloss_string(entry, reading, full),
                    finite=finite,
                )
            )


def analyze(lexicon: Lexicon, table: MorphotacticTable, surface: str) -> AnalysisSet:
    """One-shot convenience wrapper around MorphAnalyzer."""
    return MorphAnalyzer(lexicon, table).analyze(surface)


# ---------------------------------------------------------------------------
# corpus runs

class CorpusReadError(RuntimeError):
    pass


@dataclass
class CorpusSummary:
    tokens: int = 0
    analyzable: int = 0
    unanalyzable: int = 0
    ambiguity_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def mean_ambiguity(self) -> float:
        if not self.tokens:
            return 0.0
        total = sum(k * v for k, v in self.ambiguity_histogram.items())
        return total / self.tokens


@dataclass(frozen=True)
class TokenAnalysis:
    token: Token
    result: AnalysisSet


def analyze_corpus(
    lexicon: Lexicon,
    table: MorphotacticTable,
    stream: Iterable[str],
    source: str = "<stream>",
) -> tuple[list[TokenAnalysis], CorpusSummary]:
    """Analyze a token stream in order; unanalyzable tokens get empty sets."""
    analyzer = MorphAnalyzer(lexicon, table)
    cache: dict[str, AnalysisSet] = {}
    results: list[TokenAnalysis] = []
    summary = CorpusSummary()
    tokens = tokenize(stream, source)
    while True:
        try:
            token = next(tokens)
        except StopIteration:
            break
        except (OSError, UnicodeError) as exc:
            raise CorpusReadError(
                f"{source}: read failure after token {summary.tokens}: {exc}"
            ) from exc
        if token.form not in cache:
            try:
                cache[token.form] = analyzer.analyze(token.form)
            except AnalysisError:
                cache[token.form] = AnalysisSet(token.form, ())
        result = cache[token.form]
        results.append(TokenAnalysis(token, result))
        summary.tokens += 1
        n = result.ambiguity
        summary.ambiguity_histogram[n] = summary.ambiguity_histogram.get(n, 0) + 1
        if n:
            summary.analyzable += 1
        else:
            summary.unanalyzable += 1
    return results, summary
