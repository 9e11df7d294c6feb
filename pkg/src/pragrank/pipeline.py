"""Manifest-driven resource loading, feature computation, and caching.

A run manifest is a TOML file naming every resource per language and per
language pair, plus the global tables. The featurize step computes active
feature slots for every ordered pair, writing a four-column CSV; the
expensive intermediates (mined expression lists, embedding alignments)
are cached under a content-hash key, so re-runs and leave-one-out
evaluation reuse them.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import ResourceError, ValidationError
from . import ingest
from .baseline import FeatureConfig, FeatureResources, PairFeatures, assemble_features
from .pragmatic import (
    AlignmentMatrix,
    DEFAULT_MIN_COUNT,
    DEFAULT_TOP_K,
    MweList,
    corpus_stats,
    esd,
    extract_mwes,
    lcr,
    ltq_normalize,
    ltq_raw,
    procrustes_align,
    strip_emotion_pairs,
)
from .ranker import MTVEC_SLOT_PREFIX, mtvec_slot_names

logger = logging.getLogger(__name__)

CACHE_ENV_VAR = "PRAGRANK_CACHE"


# ---------------------------------------------------------------------------
# Manifest
# ---------------------------------------------------------------------------

@dataclass
class LanguageEntry:
    tagged: Path
    raw_a: Path
    raw_b: Path
    embeddings: Path
    gold_mwes: Path | None = None


@dataclass
class PairEntry:
    """Resources for one directed pair; the lexicon maps source -> target."""

    lexicon: Path
    parallel_a: Path | None = None  # source-side sentences
    parallel_b: Path | None = None  # target-side sentences


@dataclass
class RunManifest:
    root: Path
    languages: list[str]
    entries: dict[str, LanguageEntry]
    pairs: dict[tuple[str, str], PairEntry]
    tasks: dict[str, Path]
    distances: Path | None = None
    emotions: Path | None = None
    areas: Path | None = None
    language_vectors: Path | None = None
    wiki_sizes: Path | None = None
    seed: int = 0
    out: Path = Path("out")
    mwe_top_k: int = DEFAULT_TOP_K
    mwe_min_count: int = DEFAULT_MIN_COUNT

    def validate(self) -> list[str]:
        """Machine-readable list of problems; empty when usable."""
        problems = []
        if len(set(self.languages)) != len(self.languages):
            problems.append("duplicate language ids in manifest")
        for lang in self.languages:
            if lang not in self.entries:
                problems.append(f"language {lang}: no resource entry")
        for lang, entry in self.entries.items():
            for name in ("tagged", "raw_a", "raw_b", "embeddings"):
                path = getattr(entry, name)
                if not path.is_file():
                    problems.append(f"language {lang}: missing {name} file {path}")
            if entry.gold_mwes is not None and not entry.gold_mwes.is_file():
                problems.append(f"language {lang}: missing gold_mwes file "
                                f"{entry.gold_mwes}")
        for (src, tgt), entry in self.pairs.items():
            if not entry.lexicon.is_file():
                problems.append(f"pair {src}-{tgt}: missing lexicon {entry.lexicon}")
            for name in ("parallel_a", "parallel_b"):
                path = getattr(entry, name)
                if path is not None and not path.is_file():
                    problems.append(f"pair {src}-{tgt}: missing {name} file {path}")
        for task, path in self.tasks.items():
            if not path.is_file():
                problems.append(f"task {task}: missing zero-shot table {path}")
        for name in ("distances", "emotions", "areas", "language_vectors",
                     "wiki_sizes"):
            path = getattr(self, name)
            if path is not None and not path.is_file():
                problems.append(f"missing {name} file {path}")
        return problems


def load_manifest(path) -> RunManifest:
    path = Path(path)
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    root = path.parent

    def resolve(value):
        return (root / value).resolve() if value is not None else None

    run = data.get("run", {})
    global_section = data.get("global", {})
    languages = sorted(ingest.normalize_lang(l) for l in data.get("languages", {}))
    entries = {}
    for lang, section in data.get("languages", {}).items():
        lang = ingest.normalize_lang(lang)
        try:
            entries[lang] = LanguageEntry(
                tagged=resolve(section["tagged"]),
                raw_a=resolve(section["raw_a"]),
                raw_b=resolve(section["raw_b"]),
                embeddings=resolve(section["embeddings"]),
                gold_mwes=resolve(section.get("gold_mwes")),
            )
        except KeyError as err:
            raise ValidationError(
                [f"language {lang}: missing manifest key {err.args[0]!r}"]) from None
    pairs = {}
    for key, section in data.get("pairs", {}).items():
        if "-" not in key:
            raise ValidationError([f"pair key {key!r} must look like 'src-tgt'"])
        src, tgt = (ingest.normalize_lang(part) for part in key.split("-", 1))
        if "lexicon" not in section:
            raise ValidationError([f"pair {key}: missing manifest key 'lexicon'"])
        pairs[(src, tgt)] = PairEntry(
            lexicon=resolve(section["lexicon"]),
            parallel_a=resolve(section.get("parallel_a")),
            parallel_b=resolve(section.get("parallel_b")),
        )
    tasks = {name: resolve(p) for name, p in data.get("tasks", {}).items()}
    out = run.get("out", "out")
    out_path = Path(out) if os.path.isabs(out) else root / out
    return RunManifest(
        root=root,
        languages=languages,
        entries=entries,
        pairs=pairs,
        tasks=tasks,
        distances=resolve(global_section.get("distances")),
        emotions=resolve(global_section.get("emotions")),
        areas=resolve(global_section.get("areas")),
        language_vectors=resolve(global_section.get("language_vectors")),
        wiki_sizes=resolve(global_section.get("wiki_sizes")),
        seed=int(run.get("seed", 0)),
        out=out_path,
        mwe_top_k=int(run.get("mwe_top_k", DEFAULT_TOP_K)),
        mwe_min_count=int(run.get("mwe_min_count", DEFAULT_MIN_COUNT)),
    )


# ---------------------------------------------------------------------------
# Content-hash cache
# ---------------------------------------------------------------------------

class ArtifactCache:
    """JSON artifacts keyed by a content hash of their inputs."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(kind: str, files: list[Path], params: dict) -> str:
        digest = hashlib.sha256()
        digest.update(kind.encode())
        for path in files:
            digest.update(b"\x00")
            digest.update(Path(path).read_bytes())
        digest.update(json.dumps(params, sort_keys=True).encode())
        return f"{kind}-{digest.hexdigest()[:32]}"

    def load(self, key: str):
        path = self.root / f"{key}.json"
        if not path.is_file():
            self.misses += 1
            return None
        self.hits += 1
        return json.loads(path.read_text(encoding="utf-8"))

    def store(self, key: str, payload) -> None:
        path = self.root / f"{key}.json"
        path.write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")


def cache_location(manifest: RunManifest) -> Path:
    override = os.environ.get(CACHE_ENV_VAR)
    if override:
        return Path(override)
    return manifest.out / "cache"


def _mwes_to_payload(mwes: MweList) -> dict:
    return {
        "language": mwes.language,
        "orders": {str(order): [[list(gram), score] for gram, score in items]
                   for order, items in mwes.by_order.items()},
    }


def _mwes_from_payload(payload: dict) -> MweList:
    return MweList(
        language=payload["language"],
        by_order={int(order): [(tuple(gram), float(score))
                               for gram, score in items]
                  for order, items in payload["orders"].items()},
    )


# ---------------------------------------------------------------------------
# Loaded run
# ---------------------------------------------------------------------------

@dataclass
class LoadedRun:
    """All parsed resources for one manifest."""

    manifest: RunManifest
    tagged: dict[str, ingest.TaggedCorpus]
    raw_a: dict[str, ingest.RawCorpus]
    raw_b: dict[str, ingest.RawCorpus]
    embeddings: dict[str, ingest.EmbeddingSet]
    lexicons: dict[tuple[str, str], ingest.BilingualLexicon]
    parallels: dict[tuple[str, str], ingest.ParallelCorpus]
    distances: dict[str, ingest.DistanceTable] = field(default_factory=dict)
    emotions: ingest.EmotionLexicon | None = None
    areas: ingest.CulturalAreaMap | None = None
    language_vectors: ingest.LanguageVectorSet | None = None
    wiki_sizes: ingest.WikiSizeTable | None = None
    gold_mwes: dict[str, set[tuple[str, ...]]] = field(default_factory=dict)
    zeroshot: dict[str, ingest.ZeroShotTable] = field(default_factory=dict)


def load_run(manifest: RunManifest) -> LoadedRun:
    problems = manifest.validate()
    if problems:
        raise ValidationError(problems)

    def read(path: Path) -> str:
        return Path(path).read_text(encoding="utf-8")

    tagged, raw_a, raw_b, embeddings, gold = {}, {}, {}, {}, {}
    for lang in manifest.languages:
        entry = manifest.entries[lang]
        tagged[lang] = ingest.parse_conllu(read(entry.tagged), language=lang,
                                           source=str(entry.tagged))
        raw_a[lang] = ingest.parse_raw_corpus(read(entry.raw_a), language=lang)
        raw_b[lang] = ingest.parse_raw_corpus(read(entry.raw_b), language=lang)
        embeddings[lang] = ingest.parse_embeddings(
            read(entry.embeddings), language=lang, source=str(entry.embeddings))
        if entry.gold_mwes is not None:
            gold[lang] = ingest.parse_gold_phrases(read(entry.gold_mwes))

    lexicons, parallels = {}, {}
    for (src, tgt), entry in manifest.pairs.items():
        lexicons[(src, tgt)] = ingest.parse_lexicon(
            read(entry.lexicon), src, tgt, source=str(entry.lexicon))
        if entry.parallel_a is not None and entry.parallel_b is not None:
            parallels[(src, tgt)] = ingest.parse_parallel(
                read(entry.parallel_a), read(entry.parallel_b), src, tgt,
                source=f"{entry.parallel_a}|{entry.parallel_b}")

    return LoadedRun(
        manifest=manifest,
        tagged=tagged, raw_a=raw_a, raw_b=raw_b, embeddings=embeddings,
        lexicons=lexicons, parallels=parallels,
        distances=(ingest.parse_distances(read(manifest.distances),
                                          source=str(manifest.distances))
                   if manifest.distances else {}),
        emotions=(ingest.parse_emotion_lexicon(read(manifest.emotions),
                                               source=str(manifest.emotions))
                  if manifest.emotions else None),
        areas=(ingest.parse_area_map(read(manifest.areas),
                                     source=str(manifest.areas))
               if manifest.areas else None),
        language_vectors=(ingest.parse_language_vectors(
            read(manifest.language_vectors), source=str(manifest.language_vectors))
            if manifest.language_vectors else None),
        wiki_sizes=(ingest.parse_wiki_sizes(read(manifest.wiki_sizes),
                                            source=str(manifest.wiki_sizes))
                    if manifest.wiki_sizes else None),
        gold_mwes=gold,
        zeroshot={task: ingest.parse_zeroshot(read(path), task=task,
                                              source=str(path))
                  for task, path in manifest.tasks.items()},
    )


def _find_parallel(run: LoadedRun, a: str, b: str):
    """A parallel corpus covering {a, b}, whichever direction was listed."""
    if (a, b) in run.parallels:
        return run.parallels[(a, b)]
    return run.parallels.get((b, a))


def language_mwes(run: LoadedRun, lang: str,
                  cache: ArtifactCache | None = None) -> MweList:
    """Mined expression list for one language, cached by corpus content."""
    manifest = run.manifest
    params = {"k": manifest.mwe_top_k, "min_count": manifest.mwe_min_count}
    if cache is not None:
        entry = manifest.entries[lang]
        key = ArtifactCache.key("mwes", [entry.raw_a, entry.raw_b], params)
        payload = cache.load(key)
        if payload is not None:
            return _mwes_from_payload(payload)
    mwes = extract_mwes(run.raw_a[lang], run.raw_b[lang],
                        k=manifest.mwe_top_k, min_count=manifest.mwe_min_count)
    if cache is not None:
        cache.store(key, _mwes_to_payload(mwes))
    return mwes


def pair_alignment(run: LoadedRun, transfer: str, target: str,
                   cache: ArtifactCache | None = None):
    """Orthogonal alignment transfer -> target on emotion-free seed pairs."""
    lexicon = run.lexicons.get((transfer, target))
    if lexicon is None or run.emotions is None:
        return None
    if cache is not None:
        manifest = run.manifest
        files = [manifest.entries[transfer].embeddings,
                 manifest.entries[target].embeddings,
                 manifest.pairs[(transfer, target)].lexicon]
        if manifest.emotions:
            files.append(manifest.emotions)
        key = ArtifactCache.key("alignment", files, {})
        payload = cache.load(key)
        if payload is not None:
            return AlignmentMatrix(
                matrix=np.array(payload["matrix"], dtype=np.float64),
                source=transfer, target=target)
    pairs = strip_emotion_pairs(lexicon, run.emotions, transfer, target)
    alignment = procrustes_align(run.embeddings[transfer],
                                 run.embeddings[target], pairs)
    if cache is not None:
        cache.store(key, {"matrix": alignment.matrix.tolist()})
    return alignment


# ---------------------------------------------------------------------------
# Featurize
# ---------------------------------------------------------------------------

def build_resources(run: LoadedRun, config: FeatureConfig,
                    cache: ArtifactCache | None = None,
                    jobs: int = 1) -> tuple[FeatureResources, list[str]]:
    """FeatureResources with every active slot's backing values computed.

    Returns (resources, warnings). Missing inputs leave the corresponding
    per-pair values absent (feature stays missing) and add a warning.
    """
    languages = run.manifest.languages
    active = set(config.slots())
    warnings: list[str] = []

    stats = {lang: corpus_stats(run.tagged[lang]) for lang in languages}
    sizes = {lang: float(len(run.tagged[lang].sentences)) for lang in languages}
    vocabs = {lang: {surface.lower() for surface, _ in run.tagged[lang].tokens()}
              for lang in languages}

    resources = FeatureResources(
        sizes=sizes, stats=stats, vocabs=vocabs,
        distances=run.distances, wiki_sizes=run.wiki_sizes,
        mtvec=run.language_vectors,
    )
    ordered_pairs = [(tf, tg) for tf in languages for tg in languages if tf != tg]

    if active & {"lcr_pron", "lcr_verb"}:
        for tf, tg in ordered_pairs:
            resources.lcr_values[(tf, tg)] = lcr(stats[tf], stats[tg])

    if "ltq" in active:
        mwes = {lang: language_mwes(run, lang, cache) for lang in languages}
        raw_by_target: dict[str, dict[str, float | None]] = {
            tg: {} for tg in languages}
        for tf, tg in ordered_pairs:
            lexicon = run.lexicons.get((tg, tf))
            parallel = _find_parallel(run, tf, tg)
            if lexicon is None or parallel is None:
                warnings.append(f"ltq({tf},{tg}): missing lexicon or parallel "
                                "corpus; value is NA")
                raw_by_target[tg][tf] = None
                continue
            raw, _ = ltq_raw(mwes[tg], lexicon, parallel)
            if raw is None:
                warnings.append(f"ltq({tf},{tg}): no mined expression found in "
                                "the parallel corpus; value is NA")
            raw_by_target[tg][tf] = raw
        for tg, raws in raw_by_target.items():
            present = sum(1 for v in raws.values() if v is not None)
            if present >= 2:
                normalized = ltq_normalize(raws)
            else:
                if present:
                    warnings.append(f"ltq(target={tg}): fewer than 2 candidates "
                                    "with values; all NA")
                normalized = {tf: None for tf in raws}
            for tf, value in normalized.items():
                resources.ltq_values[(tf, tg)] = value

    if "esd" in active:
        if run.emotions is None:
            warnings.append("esd: no emotion lexicon in manifest; values are NA")
        else:
            def esd_for(pair):
                tf, tg = pair
                lexicon = run.lexicons.get((tf, tg))
                if lexicon is None:
                    return pair, None, f"esd({tf},{tg}): missing lexicon; value is NA"
                try:
                    alignment = pair_alignment(run, tf, tg, cache)
                    value = esd(run.embeddings[tf], run.embeddings[tg],
                                run.emotions, lexicon, alignment=alignment)
                    return pair, value, None
                except ResourceError as err:
                    return pair, None, f"esd({tf},{tg}): {err}; value is NA"

            if jobs > 1:
                with ThreadPoolExecutor(max_workers=jobs) as pool:
                    results = list(pool.map(esd_for, ordered_pairs))
            else:
                results = [esd_for(pair) for pair in ordered_pairs]
            for pair, value, warning in sorted(results, key=lambda r: r[0]):
                resources.esd_values[pair] = value
                if warning:
                    warnings.append(warning)

    for warning in warnings:
        logger.warning("%s", warning)
    return resources, warnings


def featurize(run: LoadedRun, config: FeatureConfig,
              cache: ArtifactCache | None = None,
              jobs: int = 1):
    """PairFeatures for every ordered pair under the config.

    Returns (pair_features, resources, warnings).
    """
    resources, warnings = build_resources(run, config, cache=cache, jobs=jobs)
    languages = run.manifest.languages
    pair_features = {}
    for tf in languages:
        for tg in languages:
            if tf != tg:
                pair_features[(tf, tg)] = assemble_features((tf, tg), resources,
                                                            config)
    return pair_features, resources, warnings


# ---------------------------------------------------------------------------
# Feature CSV
# ---------------------------------------------------------------------------

def features_to_csv(pair_features: dict[tuple[str, str], PairFeatures]) -> str:
    """Four-column CSV; values are decimal literals or NA; sorted rows."""
    lines = ["transfer,target,feature,value"]
    for (tf, tg) in sorted(pair_features):
        pf = pair_features[(tf, tg)]
        rows = []
        for slot, value in pf.values.items():
            rows.append((slot, value))
        if pf.mtvec is not None:
            for name, value in zip(mtvec_slot_names(len(pf.mtvec)), pf.mtvec):
                rows.append((name, float(value)))
        for slot, value in sorted(rows):
            rendered = "NA" if value is None else repr(float(value))
            lines.append(f"{tf},{tg},{slot},{rendered}")
    return "\n".join(lines) + "\n"


def features_from_csv(text: str,
                      source: str = "<features>") -> dict[tuple[str, str], PairFeatures]:
    from .errors import FormatError

    records: dict[tuple[str, str], dict[str, float | None]] = {}
    lines = text.split("\n")
    if not lines or lines[0].strip() != "transfer,target,feature,value":
        raise FormatError("expected header 'transfer,target,feature,value'",
                          source=source, line=1)
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 4:
            raise FormatError(f"expected 4 columns, found {len(parts)}",
                              source=source, line=lineno)
        tf, tg, slot, rendered = parts
        value = None if rendered == "NA" else float(rendered)
        records.setdefault((tf, tg), {})[slot] = value

    out = {}
    for (tf, tg), values in records.items():
        mtvec_items = sorted((k, v) for k, v in values.items()
                             if k.startswith(MTVEC_SLOT_PREFIX))
        scalar = {k: v for k, v in values.items()
                  if not k.startswith(MTVEC_SLOT_PREFIX)}
        mtvec = None
        if mtvec_items:
            mtvec = np.array([v for _, v in mtvec_items], dtype=np.float64)
        out[(tf, tg)] = PairFeatures(transfer=tf, target=tg, values=scalar,
                                     mtvec=mtvec)
    return out
