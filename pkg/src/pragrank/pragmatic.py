"""The three pragmatic language-similarity features.

* context-level ratios (lcr) from pronoun/verb token rates,
* literal translation quality (ltq) over PMI^3-mined multiword expressions,
* emotion semantics distance (esd) over orthogonally aligned embeddings.

Everything here is a pure function; feature values for different language
pairs can be computed fully in parallel. Missing values are represented as
None, never imputed.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import ResourceError
from .ingest import (
    BilingualLexicon,
    EmbeddingSet,
    EmotionLexicon,
    ParallelCorpus,
    RawCorpus,
    TaggedCorpus,
)

logger = logging.getLogger(__name__)

# Raw type-token ratio depends on corpus size; capping the token window
# keeps values comparable across languages.
TTR_CAP = 100_000

# The 24 emotion concepts the bundled emotion lexicon realizes per language.
EMOTION_CONCEPTS = (
    "anger", "anxiety", "bad", "disgust", "fear", "grief", "hate",
    "jealousy", "regret", "sad", "shame", "worry", "good", "happy",
    "hope", "joy", "like", "love", "lust", "merry", "pity", "pride",
    "surprise", "want",
)

# N-grams rarer than this per corpus are too unstable for PMI scoring.
DEFAULT_MIN_COUNT = 5

# Number of expressions retained per n-gram order.
DEFAULT_TOP_K = 500

# Pre-intersection candidate cut: each corpus contributes its top
# (CANDIDATE_FACTOR * k) n-grams per order.
CANDIDATE_FACTOR = 5

NGram = tuple[str, ...]


# ---------------------------------------------------------------------------
# Corpus statistics and context-level ratio
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusStats:
    """Token-level counts and ratios for one tagged corpus."""

    language: str | None
    tokens: int
    pron_tokens: int
    verb_tokens: int
    types: int
    ptr: float
    vtr: float
    ttr: float


def corpus_stats(corpus: TaggedCorpus, ttr_cap: int = TTR_CAP) -> CorpusStats:
    """Pronoun/verb token rates and capped type-token ratio.

    Pronouns are exact UPOS == PRON matches; verbs are UPOS == VERB with
    AUX excluded. Types are counted over lowercased forms within the first
    `ttr_cap` tokens.
    """
    total = pron = verb = 0
    types: set[str] = set()
    for surface, upos in corpus.tokens():
        total += 1
        if upos == "PRON":
            pron += 1
        elif upos == "VERB":
            verb += 1
        if total <= ttr_cap:
            types.add(surface.lower())
    if total == 0:
        raise ResourceError("corpus is empty; token ratios are undefined")
    return CorpusStats(
        language=corpus.language,
        tokens=total,
        pron_tokens=pron,
        verb_tokens=verb,
        types=len(types),
        ptr=pron / total,
        vtr=verb / total,
        ttr=len(types) / min(total, ttr_cap),
    )


def lcr(stats_tf: CorpusStats, stats_tg: CorpusStats):
    """Context-level ratios (pronoun, verb) of target over transfer rates.

    A zero transfer-side rate leaves that component missing (None).
    """
    lcr_pron = stats_tg.ptr / stats_tf.ptr if stats_tf.ptr > 0 else None
    lcr_verb = stats_tg.vtr / stats_tf.vtr if stats_tf.vtr > 0 else None
    return lcr_pron, lcr_verb


# ---------------------------------------------------------------------------
# PMI^3 n-gram scoring
# ---------------------------------------------------------------------------

@dataclass
class NGramTable:
    """Counts of n-grams of one order, gathered within sentences."""

    order: int
    counts: dict[NGram, int]
    total: int


def ngram_tables(corpus: RawCorpus, orders=(1, 2, 3)) -> dict[int, NGramTable]:
    """Count n-grams per order; n-grams never cross sentence boundaries."""
    tables = {}
    for order in orders:
        counts: dict[NGram, int] = {}
        total = 0
        for sentence in corpus.sentences:
            for i in range(len(sentence) - order + 1):
                gram = tuple(sentence[i:i + order])
                counts[gram] = counts.get(gram, 0) + 1
                total += 1
        tables[order] = NGramTable(order=order, counts=counts, total=total)
    return tables


def pmi3_score(unigrams: NGramTable, ngrams: NGramTable, ngram: NGram) -> float:
    """PMI^3(w1..wn) = ln( p(w1..wn)^3 / prod_i p(w_i) ).

    The cubed numerator damps the low-frequency bias of plain PMI. Natural
    log; p(.) are maximum-likelihood estimates from the count tables.
    """
    count = ngrams.counts.get(ngram)
    if not count:
        raise ResourceError(f"n-gram {ngram!r} not present in the table")
    p_gram = count / ngrams.total
    denom = 1.0
    for word in ngram:
        unigram_count = unigrams.counts.get((word,))
        if not unigram_count:
            raise ResourceError(f"component word {word!r} missing from unigram table")
        denom *= unigram_count / unigrams.total
    return math.log(p_gram ** 3 / denom)


def pmi3_ranked(tables: dict[int, NGramTable], order: int,
                min_count: int = DEFAULT_MIN_COUNT) -> list[tuple[NGram, float]]:
    """All order-n n-grams with count >= min_count, scored and ranked.

    Descending score; ties broken lexicographically by n-gram.
    """
    unigrams = tables[1]
    ngrams = tables[order]
    scored = [
        (gram, pmi3_score(unigrams, ngrams, gram))
        for gram, count in ngrams.counts.items()
        if count >= min_count
    ]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored


# ---------------------------------------------------------------------------
# MWE extraction
# ---------------------------------------------------------------------------

@dataclass
class MweList:
    """Top-ranked multiword expressions per order (2 and 3)."""

    language: str | None
    by_order: dict[int, list[tuple[NGram, float]]]

    def all_ngrams(self) -> list[NGram]:
        out: list[NGram] = []
        for order in sorted(self.by_order):
            out.extend(gram for gram, _ in self.by_order[order])
        return out


def extract_mwes(corpus_a: RawCorpus, corpus_b: RawCorpus,
                 k: int = DEFAULT_TOP_K,
                 min_count: int = DEFAULT_MIN_COUNT,
                 orders=(2, 3)) -> MweList:
    """Intersect per-corpus top PMI^3 n-grams to filter domain noise.

    Each corpus (ideally from a different domain) contributes its top
    `CANDIDATE_FACTOR * k` candidates per order; the intersection is ranked
    by the corpus_a score and cut to the top k per order.
    """
    needed = tuple(sorted({1, *orders}))
    tables_a = ngram_tables(corpus_a, orders=needed)
    tables_b = ngram_tables(corpus_b, orders=needed)
    by_order: dict[int, list[tuple[NGram, float]]] = {}
    for order in orders:
        ranked_a = pmi3_ranked(tables_a, order, min_count)[:CANDIDATE_FACTOR * k]
        ranked_b = pmi3_ranked(tables_b, order, min_count)[:CANDIDATE_FACTOR * k]
        candidates_b = {gram for gram, _ in ranked_b}
        kept = [(gram, score) for gram, score in ranked_a if gram in candidates_b]
        if not kept:
            logger.warning("no shared order-%d n-grams between the two corpora", order)
        by_order[order] = kept[:k]
    return MweList(language=corpus_a.language, by_order=by_order)


# ---------------------------------------------------------------------------
# Literal translation quality
# ---------------------------------------------------------------------------

@dataclass
class HitStats:
    """Per-n-gram counts of literally translatable words in parallel text."""

    counts: dict[NGram, tuple[int, int]]  # ngram -> (hit, miss)

    def hit_ratio(self, ngram: NGram) -> float:
        hit, miss = self.counts[ngram]
        return hit / (hit + miss)


def ltq_raw(mwes_tg: MweList, lexicon: BilingualLexicon,
            parallel: ParallelCorpus):
    """Mean hit ratio of word-by-word translations of the target's MWEs.

    For each MWE found contiguously in a target-side parallel sentence,
    every MWE word counts a hit when any of its dictionary translations
    occurs in the transfer-side sentence, else a miss. Counts aggregate
    over all matching sentence pairs. Returns (raw, HitStats); raw is None
    when no MWE occurs in the parallel corpus.
    """
    if mwes_tg.language is not None and lexicon.source != mwes_tg.language:
        raise ResourceError(
            f"lexicon direction {lexicon.source}->{lexicon.target} does not start "
            f"from the MWE language {mwes_tg.language}")
    sides = {parallel.lang_a, parallel.lang_b}
    if {lexicon.source, lexicon.target} != sides:
        raise ResourceError(
            f"parallel corpus covers {sorted(sides)}, lexicon needs "
            f"{sorted({lexicon.source, lexicon.target})}")
    tg_first = parallel.lang_a == lexicon.source

    ngrams = mwes_tg.all_ngrams()
    wanted: dict[int, set[NGram]] = {}
    for gram in ngrams:
        wanted.setdefault(len(gram), set()).add(gram)

    counts: dict[NGram, tuple[int, int]] = {}
    for pair in parallel.pairs:
        tg_sent, tf_sent = pair if tg_first else (pair[1], pair[0])
        tf_tokens = set(tf_sent)
        for order, targets in wanted.items():
            # enumerate this sentence's own n-grams instead of scanning
            # the whole MWE list per sentence
            present = {tuple(tg_sent[i:i + order])
                       for i in range(len(tg_sent) - order + 1)}
            for ngram in present & targets:
                hit, miss = counts.get(ngram, (0, 0))
                for word in ngram:
                    if lexicon.translations(word) & tf_tokens:
                        hit += 1
                    else:
                        miss += 1
                counts[ngram] = (hit, miss)
    if not counts:
        return None, HitStats(counts={})
    stats = HitStats(counts=counts)
    found = [gram for gram in ngrams if gram in counts]
    raw = sum(stats.hit_ratio(gram) for gram in found) / len(found)
    return raw, stats


def ltq_normalize(raws: dict[str, float | None]) -> dict[str, float | None]:
    """Z-normalize raw LTQ values over the transfer-language candidates.

    Population standard deviation; missing values stay missing; a constant
    input maps to all zeros.
    """
    present = [(lang, value) for lang, value in raws.items() if value is not None]
    if len(present) < 2:
        raise ResourceError(
            f"z-normalization needs >= 2 non-missing values, got {len(present)}")
    values = np.array([value for _, value in present], dtype=np.float64)
    mean = float(values.mean())
    # exactly constant inputs define sigma as 0 (np.std of a constant
    # array can return float noise)
    sigma = 0.0 if values.max() == values.min() else float(values.std())
    out: dict[str, float | None] = {}
    for lang, value in raws.items():
        if value is None:
            out[lang] = None
        elif sigma == 0.0:
            out[lang] = 0.0
        else:
            out[lang] = (value - mean) / sigma
    return out


# ---------------------------------------------------------------------------
# Orthogonal alignment and emotion semantics distance
# ---------------------------------------------------------------------------

@dataclass
class AlignmentMatrix:
    """Orthogonal map W taking source embeddings into the target space."""

    matrix: np.ndarray
    source: str
    target: str


def procrustes_align(src: EmbeddingSet, tgt: EmbeddingSet,
                     seed_pairs: list[tuple[str, str]]) -> AlignmentMatrix:
    """Least-squares orthogonal map from seed translation pairs.

    W = argmin over orthogonal matrices of ||W X - Y||_F, obtained as
    W = U V^T from the SVD U S V^T of Y X^T, with X/Y holding the seed
    pairs' unit vectors as columns.
    """
    if src.dim != tgt.dim:
        raise ResourceError(f"dimension mismatch: {src.dim} vs {tgt.dim}")
    usable = [(s, t) for s, t in seed_pairs if s in src.vectors and t in tgt.vectors]
    if len(usable) < src.dim:
        raise ResourceError(
            f"only {len(usable)} usable seed pairs, need at least dim={src.dim}")
    X = np.stack([src.vectors[s] for s, _ in usable], axis=1)
    Y = np.stack([tgt.vectors[t] for _, t in usable], axis=1)
    if np.linalg.matrix_rank(X) < src.dim:
        raise ResourceError("seed matrix is rank-deficient; alignment is degenerate")
    u, _, vt = np.linalg.svd(Y @ X.T)
    return AlignmentMatrix(matrix=u @ vt, source=src.language, target=tgt.language)


def emotion_concept_vector(embeddings: EmbeddingSet, words: list[str]):
    """Unit-renormalized mean vector of a concept's in-vocabulary words."""
    vecs = [embeddings.vectors[w] for w in words if w in embeddings.vectors]
    if not vecs:
        return None
    mean = np.mean(vecs, axis=0)
    norm = float(np.linalg.norm(mean))
    if norm == 0.0:
        return None
    return mean / norm


def strip_emotion_pairs(lexicon: BilingualLexicon, emotions: EmotionLexicon,
                        src_lang: str, tgt_lang: str) -> list[tuple[str, str]]:
    """Seed pairs with any emotion word on either side removed.

    Keeping emotion words out of the supervision leaves the alignment free
    to reveal how differently the two languages place them.
    """
    src_emotion = emotions.all_words(src_lang)
    tgt_emotion = emotions.all_words(tgt_lang)
    pairs = []
    for word in sorted(lexicon.entries):
        if word in src_emotion:
            continue
        for translation in sorted(lexicon.entries[word]):
            if translation in tgt_emotion:
                continue
            pairs.append((word, translation))
    return pairs


def esd(emb_tf: EmbeddingSet, emb_tg: EmbeddingSet, emotions: EmotionLexicon,
        seed_lexicon: BilingualLexicon, min_concepts: int = 8,
        alignment: AlignmentMatrix | None = None) -> float:
    """Mean cosine distance between aligned per-concept emotion vectors.

    The transfer space is mapped into the target space with an orthogonal
    alignment trained on emotion-free seed pairs; each available concept
    contributes 1 - cos(W v_tf, v_tg). Concepts missing on either side are
    skipped; fewer than `min_concepts` available concepts is an error. A
    precomputed alignment (e.g. from a cache) skips the Procrustes step.
    """
    if seed_lexicon.source != emb_tf.language or seed_lexicon.target != emb_tg.language:
        raise ResourceError(
            f"seed lexicon direction {seed_lexicon.source}->{seed_lexicon.target} "
            f"does not match embeddings {emb_tf.language}->{emb_tg.language}")
    if alignment is None:
        pairs = strip_emotion_pairs(seed_lexicon, emotions,
                                    emb_tf.language, emb_tg.language)
        alignment = procrustes_align(emb_tf, emb_tg, pairs)

    distances = []
    for concept in emotions.concepts:
        v_tf = emotion_concept_vector(
            emb_tf, emotions.concept_words(emb_tf.language, concept))
        v_tg = emotion_concept_vector(
            emb_tg, emotions.concept_words(emb_tg.language, concept))
        if v_tf is None or v_tg is None:
            continue
        # clamp float noise so the distance stays in [0, 2]
        cosine = min(1.0, max(-1.0, float((alignment.matrix @ v_tf) @ v_tg)))
        distances.append(1.0 - cosine)
    if len(distances) < min_concepts:
        raise ResourceError(
            f"only {len(distances)} emotion concepts available on both sides, "
            f"need at least {min_concepts}")
    return sum(distances) / len(distances)
