"""Stem-suffix junction phonology.

Epenthesis is declared per allomorph with the parenthesized-vowel
notation used in the suffix data: "(ü)m" realizes as "üm" after a
consonant-final stem and as "m" after a vowel-final stem.  Allomorphs
written without the notation (pu, tu, nge, mu, ...) join directly
regardless of the stem-final segment.

Lexically conditioned stem alternants apply before the general rules:
la + CA gives lang-, lüf + CA gives lüp- (the f to p radical change),
and an additive alternant keeps the plain stem next to the conditioned
one (nel + CA gives both nelüm and nelküm).
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Sequence

from .lexicon import NULL, Alternant, SuffixEntry, trigger_matches
from .orthography import is_vowel


class Realization(NamedTuple):
    surface: str
    stem_final: str  # "any" | "vowel" | "consonant"


def realizations(allomorph: str) -> tuple[Realization, ...]:
    """Expand one allomorph cell into its surface realizations."""
    if allomorph == NULL:
        return (Realization("", "any"),)
    if allomorph.startswith("(") and ")" in allomorph:
        closing = allomorph.index(")")
        eps = allomorph[1:closing]
        base = allomorph[closing + 1 :]
        # Epenthetic variant first so longest-match splitting sees it.
        return (
            Realization(eps + base, "consonant"),
            Realization(base, "vowel"),
        )
    return (Realization(allomorph, "any"),)


def suffix_realizations(suffix: SuffixEntry) -> tuple[Realization, ...]:
    out: list[Realization] = []
    for a in suffix.allomorphs:
        out.extend(realizations(a))
    return tuple(out)


def stem_fits(stem: str, stem_final: str) -> bool:
    if stem_final == "any":
        return True
    if not stem:
        return False
    if stem_final == "vowel":
        return is_vowel(stem[-1])
    return not is_vowel(stem[-1])


def _coerce_alternants(alternants, suffix_tag: str) -> Alternant | None:
    """Accept entry alternant tuples or a plain {trigger: stem} mapping."""
    if alternants is None:
        return None
    if isinstance(alternants, Mapping):
        for trigger, spec in alternants.items():
            if not trigger_matches(trigger, suffix_tag):
                continue
            if isinstance(spec, str):
                keep = spec.startswith("~")
                stems = tuple((spec[1:] if keep else spec).split("|"))
                return Alternant(trigger, stems, keep)
            return Alternant(trigger, tuple(spec), False)
        return None
    for alt in alternants:
        if trigger_matches(alt.trigger, suffix_tag):
            return alt
    return None


def stems_under(stem: str, alternant: Alternant | None) -> tuple[str, ...]:
    """Stems usable before the trigger suffix.  Idempotent: a stem that
    already is a conditioned replacement passes through unchanged."""
    if alternant is None or stem in alternant.stems:
        return (stem,)
    if alternant.keep_base:
        return (stem,) + alternant.stems
    return alternant.stems


def realize(stem: str, suffix: SuffixEntry) -> list[tuple[str, str]]:
    """All (joined surface, suffix realization) pairs for one boundary."""
    out = []
    for r in suffix_realizations(suffix):
        if stem_fits(stem, r.stem_final):
            pair = (stem + r.surface, r.surface)
            if pair not in out:
                out.append(pair)
    return out


def join(stem: str, suffix: SuffixEntry, alternants=None) -> list[str]:
    """Well-formed junctions of stem + suffix.

    `alternants` may be the entry's alternant tuple or a plain mapping
    {trigger: stem} ("~" prefix keeps the base stem, "|" separates
    alternative stems).  Where two variants are licensed, both appear,
    base stem first.
    """
    alt = _coerce_alternants(alternants, suffix.tag)
    out: list[str] = []
    for s in stems_under(stem, alt):
        for surface, _ in realize(s, suffix):
            if surface not in out:
                out.append(surface)
    return out


def split(surface: str, suffix: SuffixEntry, alternants: Mapping[str, str] | None = None) -> list[str]:
    """Invert `join`: every stem that could have produced `surface`.

    Over-generates by design; the caller filters candidates against the
    lexicon.  `alternants` maps replacement stems back to their source
    stems (for triggers matching this suffix), so conditioned stems are
    also reversed: splitting "langüm" on CA-m yields lang, then la.
    """
    direct: list[str] = []
    for r in sorted(suffix_realizations(suffix), key=lambda r: -len(r.surface)):
        if r.surface and surface.endswith(r.surface):
            stem = surface[: -len(r.surface)]
            if stem and stem_fits(stem, r.stem_final) and stem not in direct:
                direct.append(stem)
        elif not r.surface and surface and surface not in direct:
            direct.append(surface)
    out = list(direct)
    if alternants:
        for stem in direct:
            source = alternants.get(stem)
            if source and source not in out:
                out.append(source)
    return out
