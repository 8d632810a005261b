"""Brute-force reference analyzer used to cross-check the trie walk.

No trie, no slot pruning: every split of the word into stem + suffix
realization pieces is enumerated left to right, and the shared
well-formedness checks filter the candidates afterwards.  Reading
assembly and null insertion mirror the production policy on purpose;
what this oracle exercises independently is the search.
"""

from __future__ import annotations

from mapumorph import morphotactics as mt
from mapumorph.lexicon import Lexicon, trigger_matches
from mapumorph.morphotactics import Morpheme, MorphotacticTable
from mapumorph.orthography import normalize
from mapumorph.phonology import stem_fits, suffix_realizations


def _covers(rest: str, suffixes):
    """Every ordered list of overt realization pieces concatenating to rest."""
    if not rest:
        yield []
        return
    for suffix in suffixes:
        for real in suffix_realizations(suffix):
            piece = real.surface
            if piece and rest.startswith(piece):
                for tail in _covers(rest[len(piece):], suffixes):
                    yield [(suffix, piece, real.stem_final)] + tail


def _root_entries(lexicon: Lexicon, stem: str, first_tag: str | None):
    for entry in lexicon.entries:
        if stem == entry.lemma or stem in entry.variants:
            if first_tag is not None:
                alt = entry.alternant_for(first_tag)
                if alt is not None and not alt.keep_base and stem not in alt.stems:
                    continue  # a replacing alternant shadows the plain stem
            yield entry
        else:
            for alt in entry.alternants:
                if (
                    stem in alt.stems
                    and first_tag is not None
                    and trigger_matches(alt.trigger, first_tag)
                ):
                    yield entry
                    break


def _readings(table, entry, overt, verbalizer):
    out = []
    if entry.is_verbal:
        if overt:
            for r in entry.readings():
                out.append((r, False))
        return out
    claims = mt.claims_finite(table, overt)
    has_valency = any(table.require(m.tag).valency_effect != "none" for m in overt)
    if not claims and not has_valency:
        out.append((None, False))
    if overt and verbalizer is not None:
        out.append((None, True))
    return out


def _with_nulls(table, overt, verbalized, verbalizer):
    moods = [m for m in overt if m.tag in table.mood_tags]
    persons = [m for m in overt if m.tag in table.person_tags]
    bases = []
    if len(moods) == 1 and moods[0].tag not in table.fused_moods and not persons:
        for tag in mt.null_person_candidates(table, overt):
            seq = list(overt)
            slot = table.require(tag).slot
            at = next((k for k, m in enumerate(seq) if m.slot < slot), len(seq))
            seq.insert(at, Morpheme(tag, "", slot))
            bases.append(seq)
    else:
        bases.append(list(overt))
    out = []
    for seq in bases:
        if verbalized:
            seq = [Morpheme(verbalizer.tag, "", verbalizer.slot)] + seq
        out.append(tuple(seq))
    return out


def brute_analyses(lexicon: Lexicon, table: MorphotacticTable, word: str) -> set:
    """Canonical tuples of every admissible analysis of `word`."""
    word = normalize(word)
    verbalizer = next(
        (s for s in table.suffixes if s.excl_class == "vrb" and s.has_null), None
    )
    found = set()
    for i in range(1, len(word) + 1):
        stem, rest = word[:i], word[i:]
        for cover in _covers(rest, table.suffixes):
            running = stem
            ok = True
            for _, piece, cond in cover:
                if not stem_fits(running, cond):
                    ok = False
                    break
                running += piece
            if not ok:
                continue
            first_tag = cover[0][0].tag if cover else None
            overt = tuple(Morpheme(s.tag, piece, s.slot) for s, piece, _ in cover)
            for entry in _root_entries(lexicon, stem, first_tag):
                for reading, verbalized in _readings(table, entry, overt, verbalizer):
                    for seq in _with_nulls(table, overt, verbalized, verbalizer):
                        if mt.check_sequence(table, seq):
                            continue
                        if mt.claims_finite(table, seq) and mt.check_finite(table, seq):
                            continue
                        if mt.check_causative(
                            table, entry, seq, reading=reading, verbalized=verbalized
                        ):
                            continue
                        found.add(
                            (
                                entry.lemma,
                                entry.category,
                                reading,
                                verbalized,
                                stem,
                                tuple((m.tag, m.surface) for m in seq),
                            )
                        )
    return found


def analysis_tuples(result) -> set:
    """Project an AnalysisSet onto the oracle's canonical tuples."""
    return {
        (
            a.entry.lemma,
            a.entry.category,
            a.reading,
            a.verbalized,
            a.root_surface,
            tuple((m.tag, m.surface) for m in a.morphemes),
        )
        for a in result.analyses
    }
