"""Slot template and well-formedness checks for suffix sequences.

Slots are numbered right to left: slot 1 ends the word, slot 36 sits
next to the root.  A finite form carries exactly one mood morpheme in
slot 4 and one person morpheme (possibly null) in slot 3; the fused
moods (IND1SG, IMP2SG) saturate the person requirement themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lexicon import (
    GLOSS_LABELS,
    INTRANSITIVE,
    LABILE,
    TRANSITIVE,
    LexEntry,
    SuffixEntry,
)

MOOD_SLOT = 4
PERSON_SLOT = 3
NUMBER_SLOT = 2


class UnknownTagError(ValueError):
    def __init__(self, tag: str):
        self.tag = tag
        super().__init__(f"unknown suffix tag: {tag!r}")


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}" if self.detail else self.code


@dataclass(frozen=True)
class Morpheme:
    tag: str
    surface: str  # realized allomorph, "" for a null morpheme
    slot: int

    @property
    def null(self) -> bool:
        return self.surface == ""


# A sequence runs root side to word end, so slot indices strictly decrease.
MorphemeSeq = tuple[Morpheme, ...]


class MorphotacticTable:
    """Suffix inventory indexed by tag, with slot and exclusion data."""

    # The first-person null morpheme is attested only directly before a
    # number morpheme; the plural iñ is attested only with first person.
    PERSON_NEEDS_NUMBER = frozenset({"1"})
    NUMBER_ALLOWED_PERSONS = {"PL": frozenset({"1"})}

    def __init__(self, suffixes: Iterable[SuffixEntry]):
        self.suffixes: tuple[SuffixEntry, ...] = tuple(suffixes)
        self._by_tag: dict[str, SuffixEntry] = {}
        for s in self.suffixes:
            self._by_tag[s.tag] = s
        self.mood_tags = frozenset(
            s.tag for s in self.suffixes if s.excl_class in ("mood", "moodp")
        )
        self.fused_moods = frozenset(s.tag for s in self.suffixes if s.excl_class == "moodp")
        self.person_tags = frozenset(s.tag for s in self.suffixes if s.excl_class == "pers")
        self.verbalizer_tags = frozenset(s.tag for s in self.suffixes if s.excl_class == "vrb")

    @classmethod
    def from_suffixes(
        cls,
        suffixes: Iterable[SuffixEntry],
        overrides: Iterable[SuffixEntry] | None = None,
    ) -> "MorphotacticTable":
        """Build the table, letting override rows replace same-tag rows."""
        base = {s.tag: s for s in suffixes}
        if overrides:
            for s in overrides:
                base[s.tag] = s
        return cls(base.values())

    def suffix(self, tag: str) -> SuffixEntry | None:
        return self._by_tag.get(tag)

    def require(self, tag: str) -> SuffixEntry:
        entry = self._by_tag.get(tag)
        if entry is None:
            raise UnknownTagError(tag)
        return entry

    def slot_of(self, tag: str) -> int:
        return self.require(tag).slot


def _known(table: MorphotacticTable, seq: Sequence[Morpheme]) -> None:
    for m in seq:
        table.require(m.tag)


def check_sequence(table: MorphotacticTable, seq: Sequence[Morpheme]) -> list[Violation]:
    """Slot order, exclusion classes, and the one-mood bound."""
    _known(table, seq)
    out: list[Violation] = []
    for left, right in zip(seq, seq[1:]):
        if left.slot <= right.slot:
            out.append(
                Violation("slot-order", f"{left.tag}({left.slot}) !> {right.tag}({right.slot})")
            )
    seen: dict[str, str] = {}
    for m in seq:
        cls = table.require(m.tag).excl_class
        if cls in seen:
            out.append(Violation("excl-repeat", f"{m.tag} vs {seen[cls]} in class {cls}"))
        else:
            seen[cls] = m.tag
    moods = [m.tag for m in seq if m.tag in table.mood_tags]
    if len(moods) > 1:
        out.append(Violation("multiple-moods", "+".join(moods)))
    return out


def claims_finite(table: MorphotacticTable, seq: Sequence[Morpheme]) -> bool:
    """A sequence claims finiteness once mood or agreement material appears.

    The slot-4 nominalizers do not claim finiteness; anything in the
    agreement zone (slots 3..1) does.
    """
    return any(m.tag in table.mood_tags or m.slot <= PERSON_SLOT for m in seq)


def check_finite(table: MorphotacticTable, seq: Sequence[Morpheme]) -> list[Violation]:
    """Exactly one mood and a saturated person slot."""
    _known(table, seq)
    out: list[Violation] = []
    moods = [m for m in seq if m.tag in table.mood_tags]
    persons = [m for m in seq if m.tag in table.person_tags]
    if not moods:
        out.append(Violation("non-finite", "no slot-4 mood morpheme"))
    elif len(moods) > 1:
        out.append(Violation("multiple-moods", "+".join(m.tag for m in moods)))
    else:
        mood = moods[0]
        if mood.tag in table.fused_moods:
            if persons:
                out.append(Violation("person-with-fused-mood", persons[0].tag))
        elif not persons:
            out.append(Violation("missing-person", f"mood {mood.tag} without slot-3 person"))
        elif len(persons) > 1:
            out.append(Violation("multiple-persons", "+".join(m.tag for m in persons)))
    numbers = [m for m in seq if m.slot == NUMBER_SLOT]
    person_tags = {m.tag for m in persons}
    for p in persons:
        if p.tag in table.PERSON_NEEDS_NUMBER and not numbers:
            out.append(Violation("person-number-pairing", f"{p.tag} requires a number morpheme"))
    for n in numbers:
        allowed = table.NUMBER_ALLOWED_PERSONS.get(n.tag)
        if allowed is not None and not (person_tags & allowed):
            out.append(Violation("person-number-pairing", f"{n.tag} requires person {'/'.join(sorted(allowed))}"))
    return out


def null_person_candidates(table: MorphotacticTable, seq: Sequence[Morpheme]) -> list[str]:
    """Null person tags licensed next to the number material already in seq."""
    numbers = [m for m in seq if m.slot == NUMBER_SLOT]
    out = []
    for tag in sorted(t for t in table.person_tags if table.require(t).has_null):
        if tag in table.PERSON_NEEDS_NUMBER and not numbers:
            continue
        if all(tag in table.NUMBER_ALLOWED_PERSONS.get(n.tag, frozenset({tag})) for n in numbers):
            out.append(tag)
    return out


def gloss_string(entry: LexEntry, reading: str | None, morphemes: Sequence[Morpheme]) -> str:
    """Root as "-CAT.lemma", each suffix as "+TAG", nulls as "+TAG.ø"."""
    if entry.is_verbal:
        label = "IV" if reading == "iv" else "TV"
    else:
        label = GLOSS_LABELS[entry.category]
    parts = [f"-{label}.{entry.lemma}"]
    for m in morphemes:
        piece = "+" + m.tag.split("-", 1)[0]
        if m.null:
            piece += ".ø"
        parts.append(piece)
    return " ".join(parts)


def effective_valency(entry: LexEntry, reading: str | None, verbalized: bool) -> str | None:
    """Valency of the theme before any suffix applies: "iv", "tv", or None."""
    if verbalized:
        return "iv"
    if entry.valency == INTRANSITIVE:
        return "iv"
    if entry.valency == TRANSITIVE:
        return "tv"
    if entry.valency == LABILE:
        return reading or "iv"
    return None


def check_causative(
    table: MorphotacticTable,
    entry: LexEntry,
    seq: Sequence[Morpheme],
    reading: str | None = None,
    verbalized: bool = False,
) -> list[Violation]:
    """Causatives attach only to an intransitive theme.

    The theme valency is tracked left to right: a causative turns an
    intransitive theme transitive, so a second causative (or one on a
    transitive or unverbalized non-verbal base) is rejected.  A labile
    root read transitively is likewise rejected under a causative.
    """
    _known(table, seq)
    out: list[Violation] = []
    effective = effective_valency(entry, reading, verbalized)
    for m in seq:
        effect = table.require(m.tag).valency_effect
        if effect == "transitivizes":
            if effective == "tv":
                out.append(Violation("causative-on-transitive", f"{m.tag} on {entry.lemma}"))
            elif effective is None:
                out.append(Violation("causative-on-nonverbal", f"{m.tag} on bare {entry.category} {entry.lemma}"))
            effective = "tv"
        elif effect == "detransitivizes":
            effective = "iv"
        elif effect == "requires_intransitive_base" and effective != "iv":
            out.append(Violation("requires-intransitive-base", m.tag))
    return out
