"""Acceptance gate: nine numbered criteria with pinned tolerances.

Each test prints one `[acceptance] criterion N (...): PASS|FAIL` line.
Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
"""

import math
import time
from collections import Counter
from pathlib import Path

import numpy as np
import pytest

from pragrank import ingest, pragmatic
from pragrank.analysis import knn_network, pearson, within_area_fraction
from pragrank.baseline import LANGRANK_SLOTS
from pragrank.cli import main
from pragrank.evaluation import loo_evaluate, map_at_k, ndcg_at_p
from pragrank.ingest import CulturalAreaMap, EmbeddingSet, RawCorpus, ZeroShotTable
from pragrank.ranker import (
    Hyperparameters,
    Ranking,
    build_query,
    ensemble_to_json,
    ground_truth_ranking,
    load_ensemble,
    predict_scores,
    relevance_grades,
    save_ensemble,
    train_lambdarank,
)
from pragrank.synth import (
    cultural_tie_fixture,
    queries_from_pairs,
    ranking_fixture,
    restrict_features,
    separable_queries,
    write_resource_suite,
)

from conftest import random_rotation


def _report(criterion: int, name: str, passed: bool) -> None:
    verdict = "PASS" if passed else "FAIL"
    print(f"[acceptance] criterion {criterion} ({name}): {verdict}")
    assert passed, f"criterion {criterion} ({name}) failed"


def test_criterion_1_pmi3_oracle_equivalence(rng):
    words = [f"w{i}" for i in range(40)]
    sentences = []
    tokens = 0
    while tokens < 9_000:
        length = int(rng.integers(4, 12))
        sentences.append([words[rng.integers(0, len(words))]
                          for _ in range(length)])
        tokens += length
    corpus = RawCorpus(sentences=sentences)

    start = time.perf_counter()
    tables = pragmatic.ngram_tables(corpus)
    emitted = {order: pragmatic.pmi3_ranked(tables, order, min_count=2)
               for order in (2, 3)}
    elapsed = time.perf_counter() - start

    # independent count-and-formula oracle straight from the sentences
    unigram_counts = Counter(tok for sent in sentences for tok in sent)
    total_unigrams = sum(unigram_counts.values())
    ok = True
    for order, scored in emitted.items():
        gram_counts = Counter()
        for sent in sentences:
            for i in range(len(sent) - order + 1):
                gram_counts[tuple(sent[i:i + order])] += 1
        total = sum(gram_counts.values())
        for gram, score in scored:
            p_gram = gram_counts[gram] / total
            denom = 1.0
            for word in gram:
                denom *= unigram_counts[word] / total_unigrams
            oracle = math.log(p_gram ** 3 / denom)
            if abs(score - oracle) > 1e-12:
                ok = False
    n_scored = sum(len(v) for v in emitted.values())
    _report(1, "PMI3 oracle equivalence",
            ok and n_scored > 100 and elapsed < 1.0)


def test_criterion_2_procrustes_recovery_and_esd_self(rng):
    start = time.perf_counter()
    dim, n_pairs = 50, 200
    words = [f"w{i}" for i in range(n_pairs)]
    base = rng.normal(size=(n_pairs, dim))
    base /= np.linalg.norm(base, axis=1, keepdims=True)
    rotation = random_rotation(dim, rng)
    src = EmbeddingSet("aa", dim, {w: base[i] for i, w in enumerate(words)})
    tgt = EmbeddingSet("bb", dim, {w: rotation @ base[i]
                                   for i, w in enumerate(words)})
    alignment = pragmatic.procrustes_align(src, tgt, [(w, w) for w in words])
    recovery = float(np.max(np.abs(alignment.matrix - rotation)))

    # self-ESD with perfect resources: identical spaces, identity lexicon
    concepts = list(pragmatic.EMOTION_CONCEPTS)
    emo_rows = []
    for k, concept in enumerate(concepts):
        emo_rows.append(f"{concept}\taa\tw{k}")
        emo_rows.append(f"{concept}\tbb\tw{k}")
    emotions = ingest.parse_emotion_lexicon("\n".join(emo_rows) + "\n")
    lexicon = ingest.BilingualLexicon(source="aa", target="bb", entries={
        w: frozenset({w}) for w in words})
    self_tgt = EmbeddingSet("bb", dim, dict(src.vectors))
    esd_self = pragmatic.esd(src, self_tgt, emotions, lexicon)
    elapsed = time.perf_counter() - start
    _report(2, "Procrustes recovery",
            recovery <= 1e-6 and abs(esd_self) <= 1e-9 and elapsed < 5.0)


def test_criterion_3_metric_identities():
    table = ZeroShotTable(task="sa", scores={
        ("a", "x"): 0.9, ("b", "x"): 0.7, ("c", "x"): 0.5,
        ("d", "x"): 0.3, ("e", "x"): 0.1})
    truth = ground_truth_ranking(table, "x", ["a", "b", "c", "d", "e"])
    grades = relevance_grades(truth)
    identity_ok = (map_at_k(truth, truth, k=3) == 1.0
                   and ndcg_at_p(truth, grades, p=3) == 1.0)

    map_case = map_at_k(Ranking(order=["a", "d", "b", "c", "e"], scores={}),
                        truth, k=3)
    ndcg_case = ndcg_at_p(Ranking(order=["b", "a", "c", "d"], scores={}),
                          {"a": 3, "b": 2, "c": 1, "d": 0}, p=3)
    _report(3, "metric identities",
            identity_ok
            and abs(map_case - 0.805556) <= 1e-5
            and abs(ndcg_case - 0.842833) <= 1e-5)


def test_criterion_4_lambdarank_learning():
    train = separable_queries(n_queries=30, n_candidates=10, seed=11)
    held = separable_queries(n_queries=10, n_candidates=10, seed=99)
    start = time.perf_counter()
    model = train_lambdarank(train, Hyperparameters(), seed=1)
    train_time = time.perf_counter() - start
    hp = model.hyperparameters
    values = []
    for query in held:
        pred = predict_scores(model, [c.features for c in query.candidates])
        grades = {c.language: c.relevance for c in query.candidates}
        values.append(ndcg_at_p(pred, grades, p=3))
    held_ndcg = sum(values) / len(values)
    _report(4, "LambdaRank learning",
            (hp.num_trees, hp.max_leaves, hp.shrinkage) == (100, 16, 0.1)
            and held_ndcg >= 0.95 and train_time <= 10.0)


def test_criterion_5_loo_structure_and_fixture_bars():
    languages, pair_features, table = ranking_fixture(n_langs=16, seed=5)
    structure_ok = True
    for test_lang in languages:
        rest = [lang for lang in languages if lang != test_lang]
        queries = []
        for target in rest:
            candidates = {c: pair_features[(c, target)]
                          for c in rest if c != target}
            queries.append(build_query(target, candidates, table))
        if len(queries) != 15 or any(len(q.candidates) != 14 for q in queries):
            structure_ok = False
        if any(q.target == test_lang for q in queries):
            structure_ok = False
        if any(c.language == test_lang for q in queries for c in q.candidates):
            structure_ok = False

    start = time.perf_counter()
    report = loo_evaluate(languages, pair_features, table, label="fixture")
    elapsed = time.perf_counter() - start
    _report(5, "LOO harness",
            structure_ok
            and len(report.per_language) == 16
            and report.mean_ndcg >= 0.95
            and report.mean_map >= 0.90
            and elapsed <= 60.0)


def test_criterion_6_z_normalization(rng):
    ok = True
    for _ in range(50):
        raws = {f"l{i:02d}": float(v)
                for i, v in enumerate(rng.uniform(0, 1, size=int(rng.integers(3, 16))))}
        out = pragmatic.ltq_normalize(raws)
        values = np.array(list(out.values()), dtype=np.float64)
        if np.max(values) == np.min(values):
            continue
        if abs(values.mean()) > 1e-9 or abs(values.std() - 1.0) > 1e-9:
            ok = False
    constant = pragmatic.ltq_normalize({"a": 0.3, "b": 0.3, "c": 0.3})
    ok = ok and all(v == 0.0 for v in constant.values())
    _report(6, "z-normalization", ok)


def test_criterion_7_network_cohesion_and_pearson():
    langs, area_of, distances = [], {}, {}
    for a in range(4):
        for i in range(4):
            lang = f"a{a}x{i}"
            langs.append(lang)
            area_of[lang] = f"area{a}"
    for i, x in enumerate(langs):
        for y in langs[i + 1:]:
            base = 0.1 if area_of[x] == area_of[y] else 0.9
            jitter = 0.001 * (sum(ord(c) for c in x + y) % 7)
            distances[(x, y)] = base + jitter
    network = knn_network(distances, k=2)
    fraction = within_area_fraction(network, CulturalAreaMap(areas=area_of))

    r_up = pearson([1.0, 2.0, 3.0, 4.0], [2.0, 4.0, 6.0, 8.0])
    r_down = pearson([1.0, 2.0, 3.0, 4.0], [8.0, 6.0, 4.0, 2.0])
    _report(7, "network cohesion",
            fraction == 1.0
            and abs(r_up - 1.0) <= 1e-12
            and abs(r_down + 1.0) <= 1e-12)


def test_criterion_8_cultural_tie_replay():
    languages, pair_features, table = cultural_tie_fixture()
    truth = ground_truth_ranking(table, "tr", ["ar", "ko", "ja"])
    ok = truth.order == ["ar", "ko", "ja"]

    queries_all = queries_from_pairs(languages, pair_features, table,
                                     exclude=("tr",))
    queries_base = []
    for query in queries_all:
        stripped = [type(c)(language=c.language,
                            features=restrict_features(c.features,
                                                       LANGRANK_SLOTS),
                            zero_shot=c.zero_shot, relevance=c.relevance)
                    for c in query.candidates]
        queries_base.append(type(query)(target=query.target,
                                        candidates=stripped))
    candidates = ["ar", "ko", "ja"]
    for seed in (1, 2, 3):
        model_all = train_lambdarank(queries_all, Hyperparameters(), seed=seed)
        model_base = train_lambdarank(queries_base, Hyperparameters(), seed=seed)
        pred_all = predict_scores(
            model_all, [pair_features[(c, "tr")] for c in candidates])
        pred_base = predict_scores(
            model_base, [restrict_features(pair_features[(c, "tr")],
                                           LANGRANK_SLOTS)
                         for c in candidates])
        ok = ok and pred_all.order[0] == "ar" and pred_base.order[0] != "ar"
    _report(8, "cultural-tie scenario replay", ok)


def test_criterion_9_cli_determinism(tmp_path):
    root = tmp_path / "suite"
    manifest = write_resource_suite(root, n_langs=4, seed=0)
    out = root / "out"

    def run_all():
        assert main(["featurize", "--manifest", str(manifest)]) == 0
        assert main(["train", "--manifest", str(manifest), "--task", "sa"]) == 0
        assert main(["rank", "--model", str(out / "model_sa.json"),
                     "--features", str(out / "features.csv"),
                     "--target", "aa", "--out", str(out)]) == 0
        assert main(["evaluate", "--manifest", str(manifest),
                     "--task", "sa"]) == 0
        assert main(["ablate", "--manifest", str(manifest),
                     "--task", "sa"]) == 0
        assert main(["analyze", "--manifest", str(manifest)]) == 0
        snapshot = {}
        for path in sorted(out.rglob("*")):
            if path.is_file() and "cache" not in path.parts:
                snapshot[str(path.relative_to(out))] = path.read_bytes()
        return snapshot

    first = run_all()
    second = run_all()
    deterministic = first == second and len(first) >= 8

    model = load_ensemble(out / "model_sa.json")
    clone_path = tmp_path / "clone.json"
    save_ensemble(model, clone_path)
    clone = load_ensemble(clone_path)
    from pragrank.pipeline import features_from_csv
    pair_features = features_from_csv((out / "features.csv").read_text())
    candidates = sorted(tf for tf, tg in pair_features if tg == "aa")
    feats = [pair_features[(c, "aa")] for c in candidates]
    round_trip = (predict_scores(model, feats).scores
                  == predict_scores(clone, feats).scores
                  and ensemble_to_json(model) == ensemble_to_json(clone))
    _report(9, "CLI determinism", deterministic and round_trip)
