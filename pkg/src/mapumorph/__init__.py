"""Morphological analyzer and generator for Mapudüngun verb forms.

The verb is built on a root followed by a fixed template of suffix
slots, numbered right to left (slot 1 ends the word, slot 36 abuts the
root).  This package ships the suffix inventory and a root lexicon as
TSV data, analyzes surface forms into glossed morpheme sequences,
generates surfaces from a root plus suffix tags, and scans corpora for
evidence that a root is better listed under another lexical category.
"""

__version__ = "0.1.0"

from .analyzer import (
    Analysis,
    AnalysisError,
    AnalysisSet,
    MorphAnalyzer,
    analyze,
    analyze_corpus,
    render_gloss,
)
from .generator import (
    GenResult,
    explain,
    generate,
    resolve_root,
    roundtrip,
    roundtrip_check,
)
from .lexicon import (
    Alternant,
    Diagnostic,
    LexEntry,
    Lexicon,
    LexiconParseError,
    LexiconValidationError,
    SuffixEntry,
    load_default_lexicon,
    load_lexicon,
    packaged_data_dir,
    validate_lexicon,
)
from .morphotactics import (
    Morpheme,
    MorphotacticTable,
    UnknownTagError,
    Violation,
    check_causative,
    check_finite,
    check_sequence,
    claims_finite,
    gloss_string,
)
from .orthography import ALPHABET, Token, normalize, tokenize
from .reclassifier import (
    EvidenceReport,
    Proposal,
    gather_evidence,
    index_corpus,
    propose,
    render_report,
    render_rows,
    run_reclassification,
)

__all__ = [
    "ALPHABET",
    "Alternant",
    "Analysis",
    "AnalysisError",
    "AnalysisSet",
    "Diagnostic",
    "EvidenceReport",
    "GenResult",
    "LexEntry",
    "Lexicon",
    "LexiconParseError",
    "LexiconValidationError",
    "MorphAnalyzer",
    "Morpheme",
    "MorphotacticTable",
    "Proposal",
    "SuffixEntry",
    "Token",
    "UnknownTagError",
    "Violation",
    "analyze",
    "analyze_corpus",
    "check_causative",
    "check_finite",
    "check_sequence",
    "claims_finite",
    "explain",
    "gather_evidence",
    "generate",
    "gloss_string",
    "index_corpus",
    "load_default_lexicon",
    "load_lexicon",
    "normalize",
    "packaged_data_dir",
    "propose",
    "render_gloss",
    "render_report",
    "render_rows",
    "resolve_root",
    "roundtrip",
    "roundtrip_check",
    "run_reclassification",
    "tokenize",
    "validate_lexicon",
]
