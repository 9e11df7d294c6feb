"""Parsers and validated in-memory types for every external resource.

All parsers are pure functions from text to values; they never touch the
filesystem themselves (callers read bytes and pass strings), so they are
safe to run concurrently. Word material is Unicode-lowercased on load so
that downstream lookups (lexicons, n-gram search, vocabulary overlap)
operate on one casing convention.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import FormatError, ResourceError

logger = logging.getLogger(__name__)

# The 17-tag universal POS inventory.
UPOS_TAGS = frozenset({
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
})

DISTANCE_FACETS = ("geo", "gen", "inv", "syn", "phon", "feat")


def normalize_lang(code: str) -> str:
    """Normalize a language identifier: stripped, lowercased, non-empty."""
    code = code.strip().lower()
    if not code:
        raise ResourceError("empty language identifier")
    return code


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass
class TaggedCorpus:
    """POS-tagged sentences; each token is a (surface, upos) pair."""

    sentences: list[list[tuple[str, str]]]
    language: str | None = None

    def tokens(self):
        for sentence in self.sentences:
            yield from sentence

    @property
    def n_tokens(self) -> int:
        return sum(len(s) for s in self.sentences)


@dataclass
class RawCorpus:
    """Whitespace-tokenized sentences, lowercased, no annotations."""

    sentences: list[list[str]]
    language: str | None = None

    @property
    def n_tokens(self) -> int:
        return sum(len(s) for s in self.sentences)


@dataclass
class BilingualLexicon:
    """Word translations in one direction (source -> target)."""

    source: str
    target: str
    entries: dict[str, frozenset[str]]

    def translations(self, word: str) -> frozenset[str]:
        return self.entries.get(word, frozenset())


@dataclass
class ParallelCorpus:
    """Sentence-aligned corpus; pairs of token lists (side_a, side_b)."""

    lang_a: str
    lang_b: str
    pairs: list[tuple[list[str], list[str]]]


@dataclass
class EmbeddingSet:
    """Word vectors for one language, unit-L2-normalized on load."""

    language: str
    dim: int
    vectors: dict[str, np.ndarray]
    duplicate_words: int = 0

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    def get(self, word: str):
        return self.vectors.get(word)


@dataclass
class EmotionLexicon:
    """Emotion concept names and their word realizations per language."""

    concepts: list[str]
    words: dict[str, dict[str, list[str]]]  # language -> concept -> words

    def concept_words(self, language: str, concept: str) -> list[str]:
        return self.words.get(language, {}).get(concept, [])

    def all_words(self, language: str) -> frozenset[str]:
        per_concept = self.words.get(language, {})
        return frozenset(w for words in per_concept.values() for w in words)


@dataclass
class DistanceTable:
    """Pairwise language distances in [0, 1] for one facet."""

    facet: str
    values: dict[tuple[str, str], float]

    def get(self, a: str, b: str):
        """Symmetric lookup; None when the pair is absent."""
        if a == b:
            return self.values.get((a, b), 0.0)
        if (a, b) in self.values:
            return self.values[(a, b)]
        return self.values.get((b, a))


@dataclass
class ZeroShotTable:
    """Zero-shot transfer scores z[(transfer, target)] for one task."""

    task: str
    scores: dict[tuple[str, str], float]

    def get(self, transfer: str, target: str):
        return self.scores.get((transfer, target))


@dataclass
class LanguageVectorSet:
    """Dense per-language vectors (e.g. NMT-derived, 512-dim when released)."""

    dim: int
    vectors: dict[str, np.ndarray]


@dataclass
class CulturalAreaMap:
    """Language -> cultural area label."""

    areas: dict[str, str]


@dataclass
class WikiSizeTable:
    """Language -> article count of its Wikipedia."""

    counts: dict[str, int]


# ---------------------------------------------------------------------------
# CoNLL-U
# ---------------------------------------------------------------------------

def _is_id_field(text: str) -> bool:
    return bool(text) and all(c.isdigit() or c in ".-" for c in text) and text[0].isdigit()


def parse_conllu(text: str, language: str | None = None,
                 source: str = "<conllu>") -> TaggedCorpus:
    """Parse a CoNLL-U document into a TaggedCorpus.

    Only FORM (column 2) and UPOS (column 4) are kept. Comment lines,
    multiword-token ranges (IDs with "-") and empty nodes (IDs with ".")
    are skipped. Any malformed token line is an error, never silently
    dropped.
    """
    sentences: list[list[tuple[str, str]]] = []
    current: list[tuple[str, str]] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.startswith("#"):
            continue
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        fields = line.split("\t")
        ident = fields[0]
        if not _is_id_field(ident):
            raise FormatError(f"token line does not start with a valid ID: {ident!r}",
                              source=source, line=lineno)
        if len(fields) != 10:
            raise FormatError(f"expected 10 tab-separated columns, found {len(fields)}",
                              source=source, line=lineno)
        if "-" in ident or "." in ident:
            continue  # multiword range / empty node
        surface, upos = fields[1], fields[3]
        if not surface:
            raise FormatError("empty FORM field", source=source, line=lineno)
        if upos not in UPOS_TAGS:
            raise FormatError(f"UPOS {upos!r} is not one of the 17 universal tags",
                              source=source, line=lineno)
        current.append((surface, upos))
    if current:
        sentences.append(current)
    return TaggedCorpus(sentences=sentences, language=language)


def serialize_conllu(corpus: TaggedCorpus) -> str:
    """Write a TaggedCorpus back to the CoNLL-U subset we read."""
    lines = []
    for sentence in corpus.sentences:
        for i, (surface, upos) in enumerate(sentence, start=1):
            cols = [str(i), surface, "_", upos, "_", "_", "_", "_", "_", "_"]
            lines.append("\t".join(cols))
        lines.append("")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Raw text corpora
# ---------------------------------------------------------------------------

def parse_raw_corpus(text: str, language: str | None = None) -> RawCorpus:
    """One sentence per line, whitespace-tokenized, lowercased."""
    sentences = []
    for line in text.split("\n"):
        tokens = [t.lower() for t in line.split() if t]
        if tokens:
            sentences.append(tokens)
    return RawCorpus(sentences=sentences, language=language)


def serialize_raw_corpus(corpus: RawCorpus) -> str:
    return "\n".join(" ".join(s) for s in corpus.sentences) + "\n"


# ---------------------------------------------------------------------------
# Embeddings
# ---------------------------------------------------------------------------

def parse_embeddings(text: str, language: str = "und",
                     source: str = "<embeddings>") -> EmbeddingSet:
    """Parse "N D" header + "word f1 .. fD" rows; unit-normalize rows.

    Duplicate words keep the first occurrence; the number dropped is kept
    on the result and logged. A zero vector cannot be normalized and is an
    error.
    """
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise FormatError("missing header line", source=source, line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"header must be 'vocab_size dim', got {lines[0]!r}",
                          source=source, line=1)
    try:
        declared_n, dim = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError(f"non-integer header fields: {lines[0]!r}",
                          source=source, line=1) from None
    if dim <= 0:
        raise FormatError("dimension must be positive", source=source, line=1)

    vectors: dict[str, np.ndarray] = {}
    duplicates = 0
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        word = parts[0].lower()
        if len(parts) - 1 != dim:
            raise FormatError(
                f"vector for {word!r} has {len(parts) - 1} components, expected {dim}",
                source=source, line=lineno)
        if word in vectors:
            duplicates += 1
            continue
        vec = np.array([float(x) for x in parts[1:]], dtype=np.float64)
        norm = float(np.linalg.norm(vec))
        if norm == 0.0 or not math.isfinite(norm):
            raise FormatError(f"cannot unit-normalize vector for {word!r}",
                              source=source, line=lineno)
        # skip the division for vectors already unit to a few ulps, so
        # serialize -> parse is an exact fixpoint
        if abs(norm - 1.0) > 4 * np.finfo(np.float64).eps:
            vec = vec / norm
        vectors[word] = vec
    if duplicates:
        logger.warning("%s: dropped %d duplicate word(s), kept first occurrences",
                       source, duplicates)
    if declared_n != len(vectors) + duplicates:
        logger.warning("%s: header declares %d rows, found %d",
                       source, declared_n, len(vectors) + duplicates)
    return EmbeddingSet(language=language, dim=dim, vectors=vectors,
                        duplicate_words=duplicates)


def serialize_embeddings(embeddings: EmbeddingSet) -> str:
    lines = [f"{len(embeddings.vectors)} {embeddings.dim}"]
    for word, vec in embeddings.vectors.items():
        lines.append(word + " " + " ".join(repr(float(x)) for x in vec))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Tab-separated resources
# ---------------------------------------------------------------------------

def _split_rows(text: str, sep: str, n_cols: int, source: str):
    """Yield (lineno, fields) for non-empty lines, enforcing column count."""
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        fields = line.rstrip("\n").split(sep)
        if len(fields) != n_cols:
            raise FormatError(f"expected {n_cols} columns, found {len(fields)}",
                              source=source, line=lineno)
        yield lineno, fields


def parse_lexicon(text: str, source_lang: str, target_lang: str,
                  source: str = "<lexicon>") -> BilingualLexicon:
    """Parse "src_word<TAB>tgt_word" rows into a multimap."""
    entries: dict[str, set[str]] = {}
    for _, (src, tgt) in _split_rows(text, "\t", 2, source):
        src, tgt = src.strip().lower(), tgt.strip().lower()
        if not src or not tgt:
            raise FormatError("empty word in lexicon row", source=source)
        entries.setdefault(src, set()).add(tgt)
    return BilingualLexicon(
        source=normalize_lang(source_lang),
        target=normalize_lang(target_lang),
        entries={w: frozenset(t) for w, t in entries.items()},
    )


def serialize_lexicon(lexicon: BilingualLexicon) -> str:
    lines = []
    for word in sorted(lexicon.entries):
        for translation in sorted(lexicon.entries[word]):
            lines.append(f"{word}\t{translation}")
    return "\n".join(lines) + "\n"


def parse_parallel(text_a: str, text_b: str, lang_a: str, lang_b: str,
                   source: str = "<parallel>") -> ParallelCorpus:
    """Two one-sentence-per-line files with equal line counts."""
    rows_a = text_a.split("\n")
    rows_b = text_b.split("\n")
    while rows_a and not rows_a[-1].strip():
        rows_a.pop()
    while rows_b and not rows_b[-1].strip():
        rows_b.pop()
    if len(rows_a) != len(rows_b):
        raise FormatError(
            f"sides have {len(rows_a)} vs {len(rows_b)} sentences", source=source)
    pairs = []
    for lineno, (a, b) in enumerate(zip(rows_a, rows_b), start=1):
        toks_a = [t.lower() for t in a.split() if t]
        toks_b = [t.lower() for t in b.split() if t]
        if not toks_a or not toks_b:
            raise FormatError("empty sentence on one side", source=source, line=lineno)
        pairs.append((toks_a, toks_b))
    return ParallelCorpus(lang_a=normalize_lang(lang_a),
                          lang_b=normalize_lang(lang_b), pairs=pairs)


def serialize_parallel(corpus: ParallelCorpus) -> tuple[str, str]:
    text_a = "\n".join(" ".join(a) for a, _ in corpus.pairs) + "\n"
    text_b = "\n".join(" ".join(b) for _, b in corpus.pairs) + "\n"
    return text_a, text_b


def parse_zeroshot(text: str, task: str = "task",
                   source: str = "<zeroshot>") -> ZeroShotTable:
    """Parse "transfer,target,score" CSV with header row."""
    scores: dict[tuple[str, str], float] = {}
    rows = iter(_split_rows(text, ",", 3, source))
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise FormatError("missing header", source=source, line=1) from None
    if [h.strip().lower() for h in header] != ["transfer", "target", "score"]:
        raise FormatError(f"expected header 'transfer,target,score', got {header}",
                          source=source, line=lineno)
    for lineno, (tf, tg, value) in rows:
        pair = (normalize_lang(tf), normalize_lang(tg))
        if pair in scores:
            raise FormatError(f"duplicate entry for pair {pair}", source=source,
                              line=lineno)
        try:
            score = float(value)
        except ValueError:
            raise FormatError(f"non-numeric score {value!r}", source=source,
                              line=lineno) from None
        if not math.isfinite(score):
            raise FormatError(f"non-finite score {value!r}", source=source, line=lineno)
        scores[pair] = score
    return ZeroShotTable(task=task, scores=scores)


def serialize_zeroshot(table: ZeroShotTable) -> str:
    lines = ["transfer,target,score"]
    for (tf, tg) in sorted(table.scores):
        lines.append(f"{tf},{tg},{repr(table.scores[(tf, tg)])}")
    return "\n".join(lines) + "\n"


def parse_distances(text: str, source: str = "<distances>") -> dict[str, DistanceTable]:
    """Parse "facet,lang1,lang2,value" CSV into one table per facet."""
    tables: dict[str, dict[tuple[str, str], float]] = {}
    rows = iter(_split_rows(text, ",", 4, source))
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise FormatError("missing header", source=source, line=1) from None
    if [h.strip().lower() for h in header] != ["facet", "lang1", "lang2", "value"]:
        raise FormatError(f"expected header 'facet,lang1,lang2,value', got {header}",
                          source=source, line=lineno)
    for lineno, (facet, a, b, value) in rows:
        facet = facet.strip().lower()
        if facet not in DISTANCE_FACETS:
            raise FormatError(f"unknown facet {facet!r}", source=source, line=lineno)
        try:
            dist = float(value)
        except ValueError:
            raise FormatError(f"non-numeric distance {value!r}", source=source,
                              line=lineno) from None
        if not 0.0 <= dist <= 1.0:
            raise FormatError(f"distance {dist} outside [0,1] for facet {facet!r}",
                              source=source, line=lineno)
        a, b = normalize_lang(a), normalize_lang(b)
        if a == b and dist != 0.0:
            raise FormatError(f"nonzero self-distance for {a!r}", source=source,
                              line=lineno)
        table = tables.setdefault(facet, {})
        mirrored = table.get((b, a))
        if mirrored is not None and mirrored != dist:
            raise FormatError(f"asymmetric values for pair ({a}, {b})",
                              source=source, line=lineno)
        if (a, b) in table and table[(a, b)] != dist:
            raise FormatError(f"conflicting duplicate for pair ({a}, {b})",
                              source=source, line=lineno)
        table[(a, b)] = dist
    return {facet: DistanceTable(facet=facet, values=values)
            for facet, values in tables.items()}


def serialize_distances(tables: dict[str, DistanceTable]) -> str:
    lines = ["facet,lang1,lang2,value"]
    for facet in sorted(tables):
        for (a, b) in sorted(tables[facet].values):
            lines.append(f"{facet},{a},{b},{repr(tables[facet].values[(a, b)])}")
    return "\n".join(lines) + "\n"


def parse_emotion_lexicon(text: str, source: str = "<emotions>") -> EmotionLexicon:
    """Parse "concept<TAB>language<TAB>word" rows."""
    concepts: list[str] = []
    words: dict[str, dict[str, list[str]]] = {}
    for lineno, (concept, language, word) in _split_rows(text, "\t", 3, source):
        concept = concept.strip().lower()
        language = normalize_lang(language)
        word = word.strip().lower()
        if not concept or not word:
            raise FormatError("empty concept or word", source=source, line=lineno)
        if concept not in concepts:
            concepts.append(concept)
        per_lang = words.setdefault(language, {})
        per_concept = per_lang.setdefault(concept, [])
        if word not in per_concept:
            per_concept.append(word)
    return EmotionLexicon(concepts=concepts, words=words)


def serialize_emotion_lexicon(lexicon: EmotionLexicon) -> str:
    lines = []
    for language in sorted(lexicon.words):
        for concept in lexicon.concepts:
            for word in lexicon.words[language].get(concept, []):
                lines.append(f"{concept}\t{language}\t{word}")
    return "\n".join(lines) + "\n"


def parse_area_map(text: str, source: str = "<areas>") -> CulturalAreaMap:
    """Parse "language<TAB>area" rows."""
    areas: dict[str, str] = {}
    for lineno, (language, area) in _split_rows(text, "\t", 2, source):
        language = normalize_lang(language)
        area = area.strip()
        if not area:
            raise FormatError("empty area label", source=source, line=lineno)
        if language in areas and areas[language] != area:
            raise FormatError(f"conflicting areas for {language!r}", source=source,
                              line=lineno)
        areas[language] = area
    return CulturalAreaMap(areas=areas)


def serialize_area_map(area_map: CulturalAreaMap) -> str:
    lines = [f"{lang}\t{area}" for lang, area in sorted(area_map.areas.items())]
    return "\n".join(lines) + "\n"


def parse_language_vectors(text: str, source: str = "<langvec>") -> LanguageVectorSet:
    """Parse "language<TAB>f1 f2 ... fD" rows; all rows share one D."""
    vectors: dict[str, np.ndarray] = {}
    dim = None
    for lineno, (language, payload) in _split_rows(text, "\t", 2, source):
        language = normalize_lang(language)
        try:
            vec = np.array([float(x) for x in payload.split()], dtype=np.float64)
        except ValueError:
            raise FormatError("non-numeric vector component", source=source,
                              line=lineno) from None
        if vec.size == 0:
            raise FormatError("empty vector", source=source, line=lineno)
        if dim is None:
            dim = int(vec.size)
        elif vec.size != dim:
            raise FormatError(f"vector for {language!r} has {vec.size} dims, "
                              f"expected {dim}", source=source, line=lineno)
        if language in vectors:
            raise FormatError(f"duplicate language {language!r}", source=source,
                              line=lineno)
        vectors[language] = vec
    if dim is None:
        raise FormatError("no vectors found", source=source)
    return LanguageVectorSet(dim=dim, vectors=vectors)


def serialize_language_vectors(vectors: LanguageVectorSet) -> str:
    lines = []
    for language in sorted(vectors.vectors):
        payload = " ".join(repr(float(x)) for x in vectors.vectors[language])
        lines.append(f"{language}\t{payload}")
    return "\n".join(lines) + "\n"


def parse_wiki_sizes(text: str, source: str = "<wiki>") -> WikiSizeTable:
    """Parse "language<TAB>article_count" rows."""
    counts: dict[str, int] = {}
    for lineno, (language, value) in _split_rows(text, "\t", 2, source):
        language = normalize_lang(language)
        try:
            count = int(value)
        except ValueError:
            raise FormatError(f"non-integer article count {value!r}", source=source,
                              line=lineno) from None
        if count <= 0:
            raise FormatError("article count must be positive", source=source,
                              line=lineno)
        counts[language] = count
    return WikiSizeTable(counts=counts)


def serialize_wiki_sizes(table: WikiSizeTable) -> str:
    lines = [f"{lang}\t{count}" for lang, count in sorted(table.counts.items())]
    return "\n".join(lines) + "\n"


def parse_gold_phrases(text: str) -> set[tuple[str, ...]]:
    """One gold multiword phrase per line, whitespace-tokenized, lowercased."""
    phrases = set()
    for line in text.split("\n"):
        tokens = tuple(t.lower() for t in line.split() if t)
        if len(tokens) >= 2:
            phrases.add(tokens)
    return phrases


def serialize_gold_phrases(phrases: set[tuple[str, ...]]) -> str:
    return "\n".join(" ".join(p) for p in sorted(phrases)) + "\n"


_TABULAR_PARSERS = {
    "lexicon": parse_lexicon,
    "parallel": parse_parallel,
    "zeroshot": parse_zeroshot,
    "distances": parse_distances,
    "emotions": parse_emotion_lexicon,
    "areas": parse_area_map,
    "language_vectors": parse_language_vectors,
    "wiki_sizes": parse_wiki_sizes,
}


def parse_tabular_resources(text: str, kind: str, **kwargs):
    """Dispatch to the typed parser for `kind`.

    Kinds: lexicon, parallel, zeroshot, distances, emotions, areas,
    language_vectors, wiki_sizes. Extra keyword arguments are passed to the
    underlying parser (e.g. direction languages for lexicons, the second
    text for parallel corpora).
    """
    try:
        parser = _TABULAR_PARSERS[kind]
    except KeyError:
        raise ResourceError(f"unknown resource kind {kind!r}") from None
    return parser(text, **kwargs)
