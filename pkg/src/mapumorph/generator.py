"""Surface generation from a root entry and a suffix tag sequence.

Tags are canonicalized to slot order, the verbalizer and a licensed null
person are supplied where the sequence demands them, and the same
well-formedness checks that gate analysis decide whether anything is
produced.  Where allomorphy licenses several junctions every surface is
returned, canonical spelling first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import morphotactics as mt
from .lexicon import LexEntry, Lexicon, SuffixEntry
from .morphotactics import (
    Morpheme,
    MorphemeSeq,
    MorphotacticTable,
    Violation,
)
from .orthography import normalize
from .phonology import realize, stems_under, suffix_realizations


def resolve_tag(table: MorphotacticTable, raw: str) -> SuffixEntry:
    """Accept a tag with optional leading "+" or explicit ".ø" marking."""
    tag = raw.strip().lstrip("+")
    if tag.endswith(".ø"):
        tag = tag[:-2]
    return table.require(tag)


def resolve_root(
    lexicon: Lexicon, root: str | LexEntry, category: str | None = None
) -> LexEntry:
    """Find the entry to generate from; ambiguity must be narrowed by category."""
    if isinstance(root, LexEntry):
        return root
    hits = lexicon.lookup_root(normalize(root))
    if category is not None:
        hits = [e for e in hits if e.category == category]
    if not hits:
        raise KeyError(f"unknown root: {root!r}")
    exact = [e for e in hits if e.lemma == normalize(root)]
    pool = exact or hits
    if len(pool) > 1:
        options = ", ".join(f"{e.lemma}:{e.category}" for e in pool)
        raise ValueError(f"ambiguous root {root!r}; candidates: {options}")
    return pool[0]


def _always_null(suffix: SuffixEntry) -> bool:
    return all(r.surface == "" for r in suffix_realizations(suffix))


@dataclass(frozen=True)
class GenResult:
    surfaces: tuple[str, ...]
    violations: tuple[Violation, ...]
    morphemes: MorphemeSeq  # canonical realization; empty when rejected
    gloss: str
    reading: str | None

    @property
    def ok(self) -> bool:
        return not self.violations


def _fold(
    entry: LexEntry, resolved: Sequence[SuffixEntry]
) -> tuple[tuple[str, ...], MorphemeSeq]:
    first_overt = next((s for s in resolved if not _always_null(s)), None)
    alt = entry.alternant_for(first_overt.tag) if first_overt else None
    paths: list[tuple[str, list[Morpheme]]] = [
        (stem, []) for stem in stems_under(entry.lemma, alt)
    ]
    for suffix in resolved:
        grown: list[tuple[str, list[Morpheme]]] = []
        for surface, morphemes in paths:
            for joined, piece in realize(surface, suffix):
                grown.append((joined, morphemes + [Morpheme(suffix.tag, piece, suffix.slot)]))
        paths = grown
    if not paths:
        return (), ()
    seen: list[str] = []
    for surface, _ in paths:
        if surface not in seen:
            seen.append(surface)
    return tuple(seen), tuple(paths[0][1])


def explain(
    lexicon: Lexicon,
    table: MorphotacticTable,
    root: str | LexEntry,
    tags: Iterable[str],
    reading: str | None = None,
    category: str | None = None,
) -> GenResult:
    """Like generate(), but keeps the violations that blocked a form."""
    entry = resolve_root(lexicon, root, category)
    resolved = sorted(
        (resolve_tag(table, t) for t in tags), key=lambda s: -s.slot
    )
    structural: list[Violation] = []
    verbalizer = next(
        (s for s in table.suffixes if s.excl_class == "vrb" and s.has_null), None
    )
    vrb_present = any(s.excl_class == "vrb" for s in resolved)
    if vrb_present and entry.is_verbal:
        structural.append(Violation("verbalizer-on-verbal", entry.lemma))
    if entry.is_verbal and not resolved:
        structural.append(Violation("bare-verbal-root", entry.lemma))

    def as_morphemes(suffixes: Sequence[SuffixEntry]) -> MorphemeSeq:
        return tuple(Morpheme(s.tag, "" if _always_null(s) else "?", s.slot) for s in suffixes)

    # the verbalizer comes for free when a non-verbal root needs it
    if not entry.is_verbal and not vrb_present and verbalizer is not None:
        claims = mt.claims_finite(table, as_morphemes(resolved))
        if claims or any(s.valency_effect != "none" for s in resolved):
            resolved = sorted(resolved + [verbalizer], key=lambda s: -s.slot)
            vrb_present = True
    verbalized = vrb_present and not entry.is_verbal
    if vrb_present and all(_always_null(s) for s in resolved):
        structural.append(Violation("verbalizer-without-suffix", entry.lemma))

    # a plain mood without an explicit person takes the licensed null one
    moods = [s for s in resolved if s.tag in table.mood_tags]
    if len(moods) == 1 and moods[0].tag not in table.fused_moods:
        if not any(s.excl_class == "pers" for s in resolved):
            cands = mt.null_person_candidates(table, as_morphemes(resolved))
            if cands:
                resolved = sorted(
                    resolved + [table.require(cands[0])], key=lambda s: -s.slot
                )

    surfaces, morphemes = _fold(entry, resolved)
    if resolved and not surfaces:
        structural.append(Violation("no-realization", "+".join(s.tag for s in resolved)))

    if entry.is_verbal:
        if reading is not None and reading not in entry.readings():
            structural.append(Violation("reading-unavailable", f"{reading} on {entry.lemma}"))
            candidates: list[str | None] = []
        else:
            candidates = [reading] if reading else list(entry.readings())
    else:
        if reading is not None:
            structural.append(Violation("reading-on-nonverbal", entry.lemma))
        candidates = [None]

    first_failure: list[Violation] | None = None
    for cand in candidates:
        found = structural + mt.check_sequence(table, morphemes)
        if mt.claims_finite(table, morphemes):
            found += mt.check_finite(table, morphemes)
        found += mt.check_causative(
            table, entry, morphemes, reading=cand, verbalized=verbalized
        )
        if not found:
            return GenResult(
                surfaces=surfaces,
                violations=(),
                morphemes=morphemes,
                gloss=mt.gloss_string(entry, cand, morphemes),
                reading=cand,
            )
        if first_failure is None:
            first_failure = found
    if first_failure is None:
        first_failure = structural + mt.check_sequence(table, morphemes)
    return GenResult(
        surfaces=(),
        violations=tuple(first_failure),
        morphemes=(),
        gloss="",
        reading=None,
    )


def generate(
    lexicon: Lexicon,
    table: MorphotacticTable,
    root: str | LexEntry,
    tags: Iterable[str],
    reading: str | None = None,
    category: str | None = None,
) -> list[str]:
    """All well-formed surfaces for root + tags; [] when checks reject."""
    return list(explain(lexicon, table, root, tags, reading, category).surfaces)


def roundtrip_check(
    lexicon: Lexicon,
    table: MorphotacticTable,
    root: str | LexEntry,
    tags: Iterable[str],
    reading: str | None = None,
    category: str | None = None,
) -> str | None:
    """Generate, re-analyze each surface, and confirm the reading survives.

    Returns None when the round trip closes and a short failure detail
    otherwise.  A request that generates nothing is itself a failure
    ("nothing-generated"), never a vacuous pass.
    """
    from .analyzer import MorphAnalyzer

    entry = resolve_root(lexicon, root, category)
    result = explain(lexicon, table, entry, tags, reading=reading)
    if not result.ok:
        codes = ", ".join(v.code for v in result.violations)
        return f"nothing-generated: {codes}"
    analyzer = MorphAnalyzer(lexicon, table)
    want = tuple(m.tag for m in result.morphemes)
    for surface in result.surfaces:
        hit = any(
            a.entry.lemma == entry.lemma
            and a.entry.category == entry.category
            and a.reading == result.reading
            and tuple(m.tag for m in a.morphemes) == want
            for a in analyzer.analyze(surface).analyses
        )
        if not hit:
            return f"missing-analysis: {surface} lacks {result.gloss}"
    return None


def roundtrip(
    lexicon: Lexicon, table: MorphotacticTable, analysis
) -> bool:
    """True when regenerating from the analysis reproduces its surface.

    Analyses read off a variant spelling regenerate the lemma spelling
    instead, so only lemma- and alternant-stem analyses round-trip.
    """
    result = explain(
        lexicon,
        table,
        analysis.entry,
        [m.tag for m in analysis.morphemes],
        reading=analysis.reading,
    )
    return analysis.reconstruct() in result.surfaces
