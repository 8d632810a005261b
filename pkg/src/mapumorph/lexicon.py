"""Root and suffix lexicon: TSV parsing, indexing, validation, serialization.

Data files are UTF-8 TSV.  Lines starting with "#" and blank lines are
skipped.  A lone "-" marks an absent field.

roots.tsv columns:
    lemma  category  valency  gloss_iv  gloss_tv  variants  alternants  sources  [extracted_suffixes]

The category cell for labile roots is written "VI/VT".  The alternants
cell holds comma-separated "trigger:stem" pairs; a stem prefixed with
"~" is additive (the plain stem remains usable next to it), otherwise
the alternant replaces the stem whenever the trigger suffix follows.

suffixes.tsv columns:
    tag  allomorphs  slot  excl_class  valency_effect

Allomorphs are comma-separated; "∅" is the null allomorph.  A leading
parenthesized vowel, as in "(ü)m", marks the epenthetic variant used
after consonant-final stems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .orthography import ALPHABET, alphabet_ok, normalize

NULL = "∅"

CATEGORIES = ("N", "Aj", "Av", "Dem", "Int", "NU", "SP", "Conj", "VI", "VT")
VERBAL = ("VI", "VT")

# Category tag -> gloss label used in rendered analyses.
GLOSS_LABELS = {
    "N": "NN",
    "Aj": "AJ",
    "Av": "AV",
    "Dem": "DP",
    "Int": "IP",
    "NU": "NU",
    "SP": "SP",
    "Conj": "CJ",
    "VI": "IV",
    "VT": "TV",
}

INTRANSITIVE = "intransitive"
TRANSITIVE = "transitive"
LABILE = "labile"
VALENCIES = (INTRANSITIVE, TRANSITIVE, LABILE)

VALENCY_EFFECTS = ("none", "requires_intransitive_base", "transitivizes", "detransitivizes")

SOURCES = ("K", "S", "G")


class LexiconParseError(ValueError):
    """Malformed TSV input; message carries file and line number."""


class LexiconValidationError(ValueError):
    def __init__(self, diagnostics: Sequence["Diagnostic"]):
        self.diagnostics = tuple(diagnostics)
        lines = "; ".join(str(d) for d in diagnostics)
        super().__init__(f"{len(diagnostics)} lexicon problem(s): {lines}")


@dataclass(frozen=True)
class Diagnostic:
    code: str
    subject: str
    detail: str = ""

    def __str__(self) -> str:
        if self.detail:
            return f"{self.code}({self.subject}): {self.detail}"
        return f"{self.code}({self.subject})"


@dataclass(frozen=True)
class Alternant:
    """Lexically conditioned stem replacement, keyed by a trigger suffix."""

    trigger: str
    stems: tuple[str, ...]
    keep_base: bool = False


@dataclass(frozen=True)
class LexEntry:
    lemma: str
    category: str
    valency: str | None = None
    gloss_iv: str | None = None
    gloss_tv: str | None = None
    variants: tuple[str, ...] = ()
    alternants: tuple[Alternant, ...] = ()
    sources: tuple[str, ...] = ()
    extracted_suffixes: tuple[str, ...] = ()

    @property
    def is_verbal(self) -> bool:
        return self.category in VERBAL

    def readings(self) -> tuple[str, ...]:
        """Admissible valency readings: "iv", "tv", or both for labile."""
        if self.valency == LABILE:
            return ("iv", "tv")
        if self.valency == TRANSITIVE:
            return ("tv",)
        if self.valency == INTRANSITIVE:
            return ("iv",)
        return ()

    def alternant_for(self, suffix_tag: str) -> Alternant | None:
        for alt in self.alternants:
            if trigger_matches(alt.trigger, suffix_tag):
                return alt
        return None


def trigger_matches(trigger: str, suffix_tag: str) -> bool:
    # "CA" in the data fires for both CA-m and CA-l.
    return trigger == suffix_tag or trigger == suffix_tag.split("-", 1)[0]


@dataclass(frozen=True)
class SuffixEntry:
    tag: str
    allomorphs: tuple[str, ...]
    slot: int
    excl_class: str
    valency_effect: str = "none"

    @property
    def gloss_label(self) -> str:
        return self.tag.split("-", 1)[0]

    @property
    def has_null(self) -> bool:
        return NULL in self.allomorphs


class Lexicon:
    """Immutable container over root entries and the suffix inventory."""

    def __init__(self, entries: Iterable[LexEntry], suffixes: Iterable[SuffixEntry]):
        self.entries: tuple[LexEntry, ...] = tuple(entries)
        self.suffixes: tuple[SuffixEntry, ...] = tuple(suffixes)
        self._by_lemma: dict[str, list[LexEntry]] = {}
        self._by_variant: dict[str, list[LexEntry]] = {}
        self._by_alternant: dict[str, list[tuple[LexEntry, Alternant]]] = {}
        for entry in self.entries:
            self._by_lemma.setdefault(entry.lemma, []).append(entry)
            for v in entry.variants:
                self._by_variant.setdefault(v, []).append(entry)
            for alt in entry.alternants:
                for stem in alt.stems:
                    self._by_alternant.setdefault(stem, []).append((entry, alt))
        self._suffix_by_tag: dict[str, SuffixEntry] = {}
        for suf in self.suffixes:
            self._suffix_by_tag.setdefault(suf.tag, suf)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Lexicon)
            and self.entries == other.entries
            and self.suffixes == other.suffixes
        )

    def lookup_root(self, form: str) -> tuple[LexEntry, ...]:
        """Entries whose lemma or variant equals the NFC-normalized form.

        Canonical lemma matches come first, then variant matches, each
        group ordered lexicographically by (lemma, category).
        """
        form = normalize(form)
        order = lambda e: (e.lemma, e.category, e.valency or "")
        hits = sorted(self._by_lemma.get(form, ()), key=order)
        via_variant = [e for e in sorted(self._by_variant.get(form, ()), key=order) if e not in hits]
        return tuple(hits) + tuple(via_variant)

    def alternant_candidates(self, stem: str) -> tuple[tuple[LexEntry, Alternant], ...]:
        """Entries for which `stem` is a conditioned replacement stem."""
        return tuple(self._by_alternant.get(stem, ()))

    def suffix(self, tag: str) -> SuffixEntry | None:
        return self._suffix_by_tag.get(tag)


# ---------------------------------------------------------------------------
# parsing

def _fields(line: str) -> list[str]:
    return [f.strip() for f in line.rstrip("\n").split("\t")]


def _opt(cell: str) -> str | None:
    return None if cell == "-" or cell == "" else cell


def _list_cell(cell: str) -> tuple[str, ...]:
    if cell == "-" or cell == "":
        return ()
    return tuple(part.strip() for part in cell.split(",") if part.strip())


def _parse_alternants(cell: str, where: str) -> tuple[Alternant, ...]:
    if cell == "-" or cell == "":
        return ()
    per_trigger: dict[str, tuple[list[str], bool]] = {}
    for pair in cell.split(","):
        pair = pair.strip()
        if ":" not in pair:
            raise LexiconParseError(f"{where}: alternant must be trigger:stem, got {pair!r}")
        trigger, stem = pair.split(":", 1)
        trigger, stem = trigger.strip(), stem.strip()
        keep = stem.startswith("~")
        if keep:
            stem = stem[1:]
        if not trigger or not stem:
            raise LexiconParseError(f"{where}: empty alternant trigger or stem in {pair!r}")
        stems, had_keep = per_trigger.setdefault(trigger, ([], False))
        stems.append(stem)
        per_trigger[trigger] = (stems, had_keep or keep)
    return tuple(
        Alternant(trigger, tuple(stems), keep)
        for trigger, (stems, keep) in per_trigger.items()
    )


def parse_roots(lines: Iterable[str], origin: str = "roots.tsv") -> list[LexEntry]:
    entries = []
    for no, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        where = f"{origin}:{no}"
        cells = _fields(line)
        if len(cells) not in (8, 9):
            raise LexiconParseError(f"{where}: expected 8 or 9 columns, got {len(cells)}")
        lemma, cat_cell, val_cell = cells[0], cells[1], cells[2]
        if cat_cell == "VI/VT":
            category = "VI"
        else:
            category = cat_cell
        valency = _opt(val_cell)
        if cat_cell == "VI/VT" and valency != LABILE:
            raise LexiconParseError(f"{where}: category VI/VT requires valency 'labile'")
        extracted = _list_cell(cells[8]) if len(cells) == 9 else ()
        entries.append(
            LexEntry(
                lemma=normalize(lemma),
                category=category,
                valency=valency,
                gloss_iv=_opt(cells[3]),
                gloss_tv=_opt(cells[4]),
                variants=tuple(normalize(v) for v in _list_cell(cells[5])),
                alternants=_parse_alternants(cells[6], where),
                sources=_list_cell(cells[7]),
                extracted_suffixes=extracted,
            )
        )
    return entries


def parse_suffixes(lines: Iterable[str], origin: str = "suffixes.tsv") -> list[SuffixEntry]:
    suffixes = []
    for no, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        where = f"{origin}:{no}"
        cells = _fields(line)
        if len(cells) != 5:
            raise LexiconParseError(f"{where}: expected 5 columns, got {len(cells)}")
        tag, allo_cell, slot_cell, excl, effect = cells
        try:
            slot = int(slot_cell)
        except ValueError:
            raise LexiconParseError(f"{where}: slot must be an integer, got {slot_cell!r}") from None
        allomorphs = _list_cell(allo_cell)
        if not allomorphs:
            raise LexiconParseError(f"{where}: suffix {tag!r} has no allomorphs")
        suffixes.append(SuffixEntry(tag, allomorphs, slot, excl, effect))
    return suffixes


# ---------------------------------------------------------------------------
# validation

def _check_form(code_prefix: str, subject: str, form: str, out: list[Diagnostic]) -> None:
    if not form:
        out.append(Diagnostic(f"{code_prefix}-empty", subject))
    elif not alphabet_ok(form):
        bad = "".join(sorted(set(ch for ch in form if ch not in ALPHABET)))
        out.append(Diagnostic(f"{code_prefix}-alphabet", subject, f"characters {bad!r}"))


def validate_lexicon(lexicon: Lexicon) -> list[Diagnostic]:
    """Structural diagnostics over entries and suffixes; empty means valid."""
    out: list[Diagnostic] = []
    seen: set[tuple[str, str, str | None]] = set()
    for e in lexicon.entries:
        subject = e.lemma or "<empty>"
        _check_form("lemma", subject, e.lemma, out)
        if e.category not in CATEGORIES:
            out.append(Diagnostic("bad-category", subject, e.category))
        if e.is_verbal:
            if e.valency not in VALENCIES:
                out.append(Diagnostic("missing-valency", subject, str(e.valency)))
            elif e.valency == LABILE:
                if not e.gloss_iv:
                    out.append(Diagnostic("labile-missing-intransitive-gloss", subject))
                if not e.gloss_tv:
                    out.append(Diagnostic("labile-missing-transitive-gloss", subject))
            elif e.valency == INTRANSITIVE and not e.gloss_iv:
                out.append(Diagnostic("missing-gloss", subject, "intransitive entry without gloss_iv"))
            elif e.valency == TRANSITIVE and not e.gloss_tv:
                out.append(Diagnostic("missing-gloss", subject, "transitive entry without gloss_tv"))
        else:
            if e.valency is not None:
                out.append(Diagnostic("valency-on-nonverbal", subject, str(e.valency)))
        key = (e.lemma, e.category, e.valency)
        if key in seen:
            out.append(Diagnostic("duplicate-entry", subject, f"{e.category}/{e.valency}"))
        seen.add(key)
        for v in e.variants:
            _check_form("variant", subject, v, out)
            if v == e.lemma:
                out.append(Diagnostic("variant-equals-lemma", subject, v))
        for alt in e.alternants:
            for stem in alt.stems:
                _check_form("alternant", subject, stem, out)
                if stem == e.lemma:
                    out.append(Diagnostic("alternant-equals-lemma", subject, stem))
        for s in e.sources:
            if s not in SOURCES:
                out.append(Diagnostic("bad-source", subject, s))

    seen_tags: set[str] = set()
    for suf in lexicon.suffixes:
        subject = suf.tag or "<empty>"
        if not suf.tag:
            out.append(Diagnostic("suffix-empty-tag", subject))
        if suf.tag in seen_tags:
            out.append(Diagnostic("duplicate-suffix", subject))
        seen_tags.add(suf.tag)
        if not 1 <= suf.slot <= 36:
            out.append(Diagnostic("slot-out-of-range", subject, str(suf.slot)))
        if suf.valency_effect not in VALENCY_EFFECTS:
            out.append(Diagnostic("bad-valency-effect", subject, suf.valency_effect))
        for a in suf.allomorphs:
            if a == NULL:
                # Null allomorphs are licensed only where attested: the
                # slot-3 person morphemes and the slot-36 verbalizer.
                if suf.excl_class not in ("pers", "vrb"):
                    out.append(Diagnostic("null-allomorph-not-licensed", subject, suf.excl_class))
                continue
            base = a[3:] if a.startswith("(ü)") else a
            _check_form("allomorph", subject, base, out)
        # Mood, nominalizer, and person classes sit at fixed slots.
        if suf.excl_class in ("mood", "moodp", "nmlz") and suf.slot != 4:
            out.append(Diagnostic("mood-slot", subject, f"slot {suf.slot}, expected 4"))
        if suf.excl_class == "pers" and suf.slot != 3:
            out.append(Diagnostic("person-slot", subject, f"slot {suf.slot}, expected 3"))
        if suf.excl_class == "vrb" and suf.slot != 36:
            out.append(Diagnostic("verbalizer-slot", subject, f"slot {suf.slot}, expected 36"))
    return out


# ---------------------------------------------------------------------------
# loading and serialization

def packaged_data_dir() -> Path:
    return Path(str(resources.files("mapumorph").joinpath("data")))


def load_lexicon(roots_path: str | Path, suffixes_path: str | Path, validate: bool = True) -> Lexicon:
    roots_path, suffixes_path = Path(roots_path), Path(suffixes_path)
    with roots_path.open(encoding="utf-8") as fh:
        entries = parse_roots(fh, origin=str(roots_path))
    with suffixes_path.open(encoding="utf-8") as fh:
        suffixes = parse_suffixes(fh, origin=str(suffixes_path))
    lexicon = Lexicon(entries, suffixes)
    if validate:
        problems = validate_lexicon(lexicon)
        if problems:
            raise LexiconValidationError(problems)
    return lexicon


def load_default_lexicon() -> Lexicon:
    data = packaged_data_dir()
    return load_lexicon(data / "roots.tsv", data / "suffixes.tsv")


def _join_cell(items: Sequence[str]) -> str:
    return ",".join(items) if items else "-"


def dump_roots(entries: Iterable[LexEntry]) -> str:
    lines = []
    for e in entries:
        if e.valency == LABILE:
            cat = "VI/VT"
        else:
            cat = e.category
        alts = []
        for alt in e.alternants:
            mark = "~" if alt.keep_base else ""
            for stem in alt.stems:
                alts.append(f"{alt.trigger}:{mark}{stem}")
        cells = [
            e.lemma,
            cat,
            e.valency or "-",
            e.gloss_iv or "-",
            e.gloss_tv or "-",
            _join_cell(e.variants),
            ",".join(alts) if alts else "-",
            _join_cell(e.sources),
            _join_cell(e.extracted_suffixes),
        ]
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def dump_suffixes(suffixes: Iterable[SuffixEntry]) -> str:
    lines = []
    for s in suffixes:
        lines.append(
            "\t".join([s.tag, ",".join(s.allomorphs), str(s.slot), s.excl_class, s.valency_effect])
        )
    return "\n".join(lines) + "\n"
