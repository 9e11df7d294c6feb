"""Deterministic synthetic fixtures at desk scale.

Three in-memory fixture families (separable ranking queries, a 16-language
leave-one-out problem, a cultural-tie scenario) plus a writer that lays a
complete synthetic resource tree on disk for the command-line pipeline.
Everything is a pure function of its seed.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .baseline import PairFeatures
from .ingest import ZeroShotTable
from .pragmatic import EMOTION_CONCEPTS
from .ranker import Candidate, RankingQuery, ground_truth_ranking, relevance_grades


def separable_queries(n_queries: int = 30, n_candidates: int = 10,
                      n_features: int = 8, seed: int = 11,
                      levels: int = 3) -> list[RankingQuery]:
    """Queries whose utility is a noiseless linear function of 3 features.

    The three informative slots f0..f2 take `levels` grid values; their
    utility weights (levels^2, levels, 1) make the utility a positional
    code, so candidates in one query (drawn as distinct grid cells) never
    tie. The remaining slots are uninformative noise. Ideal rankings are
    known by construction, which makes these queries an oracle for
    learning tests.
    """
    rng = np.random.default_rng(seed)
    n_cells = levels ** 3
    if n_candidates > n_cells:
        raise ValueError(f"cannot draw {n_candidates} distinct cells from {n_cells}")
    queries = []
    for qi in range(n_queries):
        cells = rng.choice(n_cells, size=n_candidates, replace=False)
        digits = np.stack([(cells // levels ** 2) % levels,
                           (cells // levels) % levels,
                           cells % levels], axis=1)
        informative = digits / (levels - 1)
        noise = rng.uniform(0.0, 1.0, size=(n_candidates, n_features - 3))
        X = np.concatenate([informative, noise], axis=1)
        utility = digits @ np.array([levels ** 2, levels, 1], dtype=np.float64)
        order = sorted(range(n_candidates), key=lambda i: (-utility[i], i))
        rank0 = {i: position for position, i in enumerate(order)}
        candidates = []
        for i in range(n_candidates):
            features = PairFeatures(
                transfer=f"c{i:02d}", target=f"q{qi:02d}",
                values={f"f{j}": float(X[i, j]) for j in range(n_features)})
            candidates.append(Candidate(
                language=f"c{i:02d}", features=features,
                zero_shot=float(utility[i]),
                relevance=max(0, 10 - rank0[i])))
        queries.append(RankingQuery(target=f"q{qi:02d}", candidates=candidates))
    return queries


def ranking_fixture(n_langs: int = 16, seed: int = 5, levels: int = 3):
    """A leave-one-out ranking problem whose features encode the scores.

    Returns (languages, pair_features, zero-shot table). Three slots (geo,
    syn, feat) take grid values forming a positional code; the zero-shot
    score is the code's value, so every query's ground truth is strict and
    fully determined by the features. Slots gen and phon carry noise.
    """
    rng = np.random.default_rng(seed)
    languages = [f"l{i:02d}" for i in range(1, n_langs + 1)]
    n_cells = levels ** 3
    if n_langs - 1 > n_cells:
        raise ValueError(f"{n_langs - 1} partners need distinct cells, "
                         f"only {n_cells} available")

    pair_features: dict[tuple[str, str], PairFeatures] = {}
    scores: dict[tuple[str, str], float] = {}
    weights = np.array([levels ** 2, levels, 1], dtype=np.float64)
    for target in languages:
        partners = [lang for lang in languages if lang != target]
        cells = rng.choice(n_cells, size=len(partners), replace=False)
        for transfer, cell in zip(partners, cells):
            digits = np.array([(cell // levels ** 2) % levels,
                               (cell // levels) % levels,
                               cell % levels], dtype=np.float64)
            grid = digits / (levels - 1)
            values = {
                "geo": 1.0 - float(grid[0]),
                "syn": 1.0 - float(grid[1]),
                "feat": 1.0 - float(grid[2]),
                "gen": float(rng.uniform(0.0, 1.0)),
                "phon": float(rng.uniform(0.0, 1.0)),
            }
            pair_features[(transfer, target)] = PairFeatures(
                transfer=transfer, target=target, values=values)
            scores[(transfer, target)] = float(digits @ weights)
    return languages, pair_features, ZeroShotTable(task="sa", scores=scores)


# Latent (typology, culture) coordinates for the cultural-tie scenario.
# Japanese and Korean sit typologically next to Turkish; Arabic is the
# cultural neighbor, and the zero-shot scores reward culture more.
_TIE_COORDS = {
    "tr": (0.50, 0.20),
    "ja": (0.52, 0.90),
    "ko": (0.55, 0.75),
    "ar": (0.90, 0.25),
    "m1": (0.10, 0.10),
    "m2": (0.25, 0.85),
    "m3": (0.35, 0.45),
    "m4": (0.60, 0.60),
    "m5": (0.70, 0.05),
    "m6": (0.80, 0.95),
    "m7": (0.15, 0.55),
    "m8": (0.95, 0.70),
}

_TIE_CONSTANT_SLOTS = {
    "tf_size": 1000.0, "tg_size": 1000.0, "ratio_size": 1.0,
    "ttr_tf": 0.5, "ttr_tg": 0.5, "ttr_dist": 0.0,
    "word_overlap": 0.2, "gen": 0.5, "inv": 0.5, "phon": 0.5, "feat": 0.5,
}


def cultural_tie_fixture():
    """Pool where typology favors ja/ko for tr but culture favors ar.

    Returns (languages, pair_features, table). Zero-shot scores follow
    0.35 * typological similarity + 0.65 * cultural similarity; only the
    pragmatic slots expose the cultural coordinate, so a ranker trained
    without them has no way to see Arabic's advantage for Turkish.
    """
    languages = sorted(_TIE_COORDS)
    pair_features = {}
    scores = {}
    for a in languages:
        for b in languages:
            if a == b:
                continue
            typo = abs(_TIE_COORDS[a][0] - _TIE_COORDS[b][0])
            cult = abs(_TIE_COORDS[a][1] - _TIE_COORDS[b][1])
            values = dict(_TIE_CONSTANT_SLOTS)
            values["geo"] = typo
            values["syn"] = typo
            values["esd"] = cult
            values["ltq"] = -cult
            values["lcr_pron"] = 1.0 + (_TIE_COORDS[b][1] - _TIE_COORDS[a][1])
            values["lcr_verb"] = 1.0 + 0.5 * (_TIE_COORDS[b][1] - _TIE_COORDS[a][1])
            pair_features[(a, b)] = PairFeatures(transfer=a, target=b,
                                                 values=values)
            scores[(a, b)] = 0.35 * (1.0 - typo) + 0.65 * (1.0 - cult)
    return languages, pair_features, ZeroShotTable(task="sa", scores=scores)


def restrict_features(features: PairFeatures, slots) -> PairFeatures:
    """Copy of a feature record keeping only the named scalar slots."""
    return PairFeatures(
        transfer=features.transfer, target=features.target,
        values={s: features.values[s] for s in slots if s in features.values},
        mtvec=features.mtvec)


def queries_from_pairs(languages, pair_features, table: ZeroShotTable,
                       exclude=()) -> list[RankingQuery]:
    """One query per target language, excluding the named languages."""
    pool = [lang for lang in languages if lang not in set(exclude)]
    queries = []
    for target in pool:
        candidates = []
        for lang in pool:
            if lang == target:
                continue
            truth = table.get(lang, target)
            candidates.append((lang, truth))
        ranking = ground_truth_ranking(table, target,
                                       [lang for lang, _ in candidates])
        grades = relevance_grades(ranking)
        query = RankingQuery(target=target, candidates=[
            Candidate(language=lang, features=pair_features[(lang, target)],
                      zero_shot=truth, relevance=grades[lang])
            for lang, truth in candidates
        ])
        queries.append(query)
    return queries


# ---------------------------------------------------------------------------
# On-disk synthetic resource suite
# ---------------------------------------------------------------------------

_LANG_CODES = ("aa", "bb", "cc", "dd", "ee", "ff", "gg", "hh",
               "ii", "jj", "kk", "ll")

_N_CONCEPTS = 150           # shared concept inventory
_N_EMOTION = len(EMOTION_CONCEPTS)
_IDIOM_RANGE = (24, 70)     # concept ids idioms draw their words from
_CULTURE_REACH = 0.38       # a language realizes idioms within this distance
_EMBED_DIM = 16


def _word(lang: str, concept: int) -> str:
    return f"{lang}{concept:03d}"


class _SuiteSpec:
    """Latent structure everything in the synthetic suite derives from."""

    def __init__(self, n_langs: int, seed: int):
        if n_langs > len(_LANG_CODES):
            raise ValueError(f"at most {len(_LANG_CODES)} synthetic languages")
        self.rng = np.random.default_rng(seed)
        self.languages = list(_LANG_CODES[:n_langs])
        self.culture = {lang: float(self.rng.uniform(0, 1))
                        for lang in self.languages}
        self.typology = {lang: float(self.rng.uniform(0, 1))
                         for lang in self.languages}

        lo, hi = _IDIOM_RANGE
        ids = np.arange(lo, hi)
        self.idioms = []
        for _ in range(15):
            pair = self.rng.choice(ids, size=2, replace=False)
            self.idioms.append(tuple(int(x) for x in pair))
        for _ in range(8):
            triple = self.rng.choice(ids, size=3, replace=False)
            self.idioms.append(tuple(int(x) for x in triple))
        self.idiom_culture = [float(self.rng.uniform(0, 1))
                              for _ in self.idioms]

    def idioms_of(self, lang: str) -> list[tuple[int, ...]]:
        c = self.culture[lang]
        return [idiom for idiom, home in zip(self.idioms, self.idiom_culture)
                if abs(c - home) < _CULTURE_REACH]

    def area_of(self, lang: str) -> str:
        c = self.culture[lang]
        if c < 1 / 3:
            return "west"
        if c < 2 / 3:
            return "central"
        return "east"


def _zipf_concepts(rng, size, permutation):
    ranks = rng.zipf(1.6, size=size)
    ranks = np.clip(ranks, 1, len(permutation)) - 1
    return [int(permutation[r]) for r in ranks]


def _sentence_concepts(spec, rng, lang, permutation, idiom_rate):
    """One sentence as a concept-id list, possibly embedding an idiom."""
    length = int(rng.integers(5, 10))
    concepts = _zipf_concepts(rng, length, permutation)
    idioms = spec.idioms_of(lang)
    if idioms and rng.uniform() < idiom_rate:
        idiom = idioms[int(rng.integers(0, len(idioms)))]
        pos = int(rng.integers(0, len(concepts) - len(idiom) + 1)) \
            if len(concepts) > len(idiom) else 0
        concepts[pos:pos + len(idiom)] = list(idiom)
    return concepts


def _raw_corpus_text(spec, rng, lang, domain_shift: int) -> str:
    """A monolingual corpus; domain_shift permutes the base distribution."""
    permutation = np.arange(70, _N_CONCEPTS)
    rng_perm = np.random.default_rng(domain_shift * 7919 + 17)
    rng_perm.shuffle(permutation)
    lines = []
    for _ in range(700):
        concepts = _sentence_concepts(spec, rng, lang, permutation,
                                      idiom_rate=0.45)
        lines.append(" ".join(_word(lang, c) for c in concepts))
    return "\n".join(lines) + "\n"


def _tagged_corpus_text(spec, rng, lang) -> str:
    ptr = 0.04 + 0.20 * (1.0 - spec.culture[lang])
    vtr = 0.12 + 0.10 * spec.typology[lang]
    lines = []
    for _ in range(400):
        length = int(rng.integers(4, 12))
        idx = 0
        for _tok in range(length):
            draw = rng.uniform()
            if draw < ptr:
                concept, upos = 140 + int(rng.integers(0, 4)), "PRON"
            elif draw < ptr + vtr:
                concept, upos = 120 + int(rng.integers(0, 10)), "VERB"
            elif draw < ptr + vtr + 0.05:
                concept, upos = 130 + int(rng.integers(0, 4)), "AUX"
            else:
                concept, upos = 70 + int(rng.integers(0, 50)), "NOUN"
            idx += 1
            cols = [str(idx), _word(lang, concept), "_", upos,
                    "_", "_", "_", "_", "_", "_"]
            lines.append("\t".join(cols))
        lines.append("")
    return "\n".join(lines) + "\n"


def _embeddings_text(spec, rng, lang, base, rotations, drift) -> str:
    area_index = {"west": 0, "central": 1, "east": 2}[spec.area_of(lang)]
    rows = [f"{_N_CONCEPTS} {_EMBED_DIM}"]
    rotation = rotations[lang]
    for concept in range(_N_CONCEPTS):
        vec = base[concept].copy()
        if concept < _N_EMOTION:
            vec = vec + drift[concept, area_index]
        vec = vec / np.linalg.norm(vec)
        vec = rotation @ vec
        rows.append(_word(lang, concept) + " "
                    + " ".join(repr(float(x)) for x in vec))
    return "\n".join(rows) + "\n"


def _parallel_texts(spec, rng, a, b):
    """Sentence pairs for {a, b}: word-by-word except unshared idioms.

    Half the sentences originate in each language; an idiom the other side
    does not share is paraphrased (mapped to different concept ids), which
    breaks literal translatability exactly for culturally distant pairs.
    """
    idioms_a = set(spec.idioms_of(a))
    idioms_b = set(spec.idioms_of(b))
    permutation = np.arange(70, _N_CONCEPTS)
    lines_a, lines_b = [], []

    def translate(concepts, source_idioms, target_idioms):
        out = list(concepts)
        for idiom in source_idioms:
            if idiom in target_idioms:
                continue
            n = len(idiom)
            for i in range(len(out) - n + 1):
                if tuple(out[i:i + n]) == idiom:
                    # paraphrase: shift into a disjoint concept range
                    out[i:i + n] = [100 + (c % 40) for c in idiom]
        return out

    for origin, other in ((a, b), (b, a)):
        for _ in range(140):
            concepts = _sentence_concepts(spec, rng, origin, permutation,
                                          idiom_rate=0.5)
            translated = translate(concepts, spec.idioms_of(origin),
                                   idioms_b if origin == a else idioms_a)
            src_line = " ".join(_word(origin, c) for c in concepts)
            tgt_line = " ".join(_word(other, c) for c in translated)
            if origin == a:
                lines_a.append(src_line)
                lines_b.append(tgt_line)
            else:
                lines_a.append(tgt_line)
                lines_b.append(src_line)
    return "\n".join(lines_a) + "\n", "\n".join(lines_b) + "\n"


def _zeroshot_text(spec, task: str) -> str:
    culture_weight = 0.65 if task == "sa" else 0.2
    lines = ["transfer,target,score"]
    for i, tf in enumerate(spec.languages):
        for j, tg in enumerate(spec.languages):
            if tf == tg:
                continue
            culture = 1.0 - abs(spec.culture[tf] - spec.culture[tg])
            typo = 1.0 - abs(spec.typology[tf] - spec.typology[tg])
            jitter = ((i * 31 + j * 17) % 13) * 1e-4
            score = (culture_weight * culture
                     + (1.0 - culture_weight) * typo + jitter)
            lines.append(f"{tf},{tg},{repr(round(score, 6))}")
    return "\n".join(lines) + "\n"


def _distances_text(spec, rng) -> str:
    lines = ["facet,lang1,lang2,value"]
    langs = spec.languages
    for i, a in enumerate(langs):
        for b in langs[i + 1:]:
            culture = abs(spec.culture[a] - spec.culture[b])
            typo = abs(spec.typology[a] - spec.typology[b])
            facets = {
                "geo": 0.7 * culture + 0.3 * typo,
                "syn": typo,
                "feat": 0.5 * typo + 0.5 * float(rng.uniform(0, 1)),
                "inv": float(rng.uniform(0, 1)),
                "phon": 0.5 * culture + 0.5 * float(rng.uniform(0, 1)),
                "gen": float(rng.uniform(0, 1)),
            }
            for facet in sorted(facets):
                value = min(max(facets[facet], 0.0), 1.0)
                lines.append(f"{facet},{a},{b},{repr(round(value, 6))}")
    return "\n".join(lines) + "\n"


def _gold_mwes_text(spec, lang) -> str:
    """Gold phrases: the language's idioms, some padded with an extra word."""
    lines = []
    for n, idiom in enumerate(spec.idioms_of(lang)):
        words = [_word(lang, c) for c in idiom]
        if n % 2 == 0:
            words.append(_word(lang, 71))
        lines.append(" ".join(words))
    lines.append(" ".join(_word(lang, c) for c in (99, 98)))
    return "\n".join(lines) + "\n"


def write_resource_suite(out_dir, n_langs: int = 8, seed: int = 0) -> Path:
    """Write a complete synthetic resource tree plus manifest; returns the
    manifest path. Deterministic in (n_langs, seed)."""
    out = Path(out_dir)
    spec = _SuiteSpec(n_langs, seed)
    rng = spec.rng
    langs = spec.languages

    for sub in ("corpora", "embeddings", "lexicons", "parallel", "tables", "gold"):
        (out / sub).mkdir(parents=True, exist_ok=True)

    base = rng.normal(size=(_N_CONCEPTS, _EMBED_DIM))
    base /= np.linalg.norm(base, axis=1, keepdims=True)
    drift = rng.normal(scale=0.75, size=(_N_EMOTION, 3, _EMBED_DIM))
    rotations = {}
    for lang in langs:
        q, r = np.linalg.qr(rng.normal(size=(_EMBED_DIM, _EMBED_DIM)))
        rotations[lang] = q * np.sign(np.diag(r))

    manifest_lines = ["[run]", f"seed = {seed}", 'out = "out"',
                      "mwe_top_k = 60", "mwe_min_count = 4", ""]

    for lang in langs:
        (out / "corpora" / f"{lang}.conllu").write_text(
            _tagged_corpus_text(spec, rng, lang), encoding="utf-8")
        (out / "corpora" / f"{lang}_news.txt").write_text(
            _raw_corpus_text(spec, rng, lang, domain_shift=1), encoding="utf-8")
        (out / "corpora" / f"{lang}_web.txt").write_text(
            _raw_corpus_text(spec, rng, lang, domain_shift=2), encoding="utf-8")
        (out / "embeddings" / f"{lang}.vec").write_text(
            _embeddings_text(spec, rng, lang, base, rotations, drift),
            encoding="utf-8")

    for a in langs:
        for b in langs:
            if a == b:
                continue
            rows = [f"{_word(a, c)}\t{_word(b, c)}" for c in range(_N_CONCEPTS)]
            (out / "lexicons" / f"{a}-{b}.tsv").write_text(
                "\n".join(rows) + "\n", encoding="utf-8")

    for i, a in enumerate(langs):
        for b in langs[i + 1:]:
            text_a, text_b = _parallel_texts(spec, rng, a, b)
            (out / "parallel" / f"{a}-{b}.{a}").write_text(text_a,
                                                           encoding="utf-8")
            (out / "parallel" / f"{a}-{b}.{b}").write_text(text_b,
                                                           encoding="utf-8")

    (out / "tables" / "zeroshot_sa.csv").write_text(_zeroshot_text(spec, "sa"),
                                                    encoding="utf-8")
    (out / "tables" / "zeroshot_dep.csv").write_text(_zeroshot_text(spec, "dep"),
                                                     encoding="utf-8")
    (out / "tables" / "distances.csv").write_text(_distances_text(spec, rng),
                                                  encoding="utf-8")

    emotion_rows = []
    for k, concept in enumerate(EMOTION_CONCEPTS):
        for lang in langs:
            emotion_rows.append(f"{concept}\t{lang}\t{_word(lang, k)}")
    (out / "tables" / "emotions.tsv").write_text(
        "\n".join(emotion_rows) + "\n", encoding="utf-8")

    (out / "tables" / "areas.tsv").write_text(
        "\n".join(f"{lang}\t{spec.area_of(lang)}" for lang in langs) + "\n",
        encoding="utf-8")

    wiki_rows = [f"{lang}\t{int(10 ** (3 + 2 * spec.culture[lang]))}"
                 for lang in langs]
    (out / "tables" / "wiki_sizes.tsv").write_text(
        "\n".join(wiki_rows) + "\n", encoding="utf-8")

    mtvec_rows = []
    for lang in langs:
        vec = [spec.typology[lang], spec.culture[lang]] + \
            [float(rng.uniform(-1, 1)) for _ in range(6)]
        mtvec_rows.append(lang + "\t" + " ".join(repr(round(x, 6)) for x in vec))
    (out / "tables" / "mtvec.tsv").write_text(
        "\n".join(mtvec_rows) + "\n", encoding="utf-8")

    for lang in langs[:2]:
        (out / "gold" / f"{lang}.txt").write_text(_gold_mwes_text(spec, lang),
                                                  encoding="utf-8")

    manifest_lines += [
        "[global]",
        'distances = "tables/distances.csv"',
        'emotions = "tables/emotions.tsv"',
        'areas = "tables/areas.tsv"',
        'language_vectors = "tables/mtvec.tsv"',
        'wiki_sizes = "tables/wiki_sizes.tsv"',
        "",
        "[tasks]",
        'sa = "tables/zeroshot_sa.csv"',
        'dep = "tables/zeroshot_dep.csv"',
        "",
    ]
    for lang in langs:
        manifest_lines.append(f"[languages.{lang}]")
        manifest_lines.append(f'tagged = "corpora/{lang}.conllu"')
        manifest_lines.append(f'raw_a = "corpora/{lang}_news.txt"')
        manifest_lines.append(f'raw_b = "corpora/{lang}_web.txt"')
        manifest_lines.append(f'embeddings = "embeddings/{lang}.vec"')
        if lang in langs[:2]:
            manifest_lines.append(f'gold_mwes = "gold/{lang}.txt"')
        manifest_lines.append("")
    for a in langs:
        for b in langs:
            if a == b:
                continue
            manifest_lines.append(f"[pairs.{a}-{b}]")
            manifest_lines.append(f'lexicon = "lexicons/{a}-{b}.tsv"')
            lo, hi = sorted((a, b))
            manifest_lines.append(f'parallel_a = "parallel/{lo}-{hi}.{a}"')
            manifest_lines.append(f'parallel_b = "parallel/{lo}-{hi}.{b}"')
            manifest_lines.append("")

    manifest_path = out / "manifest.toml"
    manifest_path.write_text("\n".join(manifest_lines), encoding="utf-8")
    return manifest_path
