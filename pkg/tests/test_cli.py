"""End-to-end command-line tests on the synthetic resource suite."""

import json
from pathlib import Path

import pytest

from pragrank.cli import main
from pragrank.pipeline import features_from_csv, features_to_csv, load_manifest
from pragrank.ranker import (
    Hyperparameters,
    load_ensemble,
    predict_scores,
    save_ensemble,
    train_lambdarank,
)
from pragrank.synth import (
    cultural_tie_fixture,
    queries_from_pairs,
    write_resource_suite,
)


@pytest.fixture(scope="module")
def suite(tmp_path_factory):
    root = tmp_path_factory.mktemp("suite")
    manifest = write_resource_suite(root, n_langs=5, seed=0)
    return root, manifest


@pytest.fixture(scope="module")
def featurized(suite):
    root, manifest = suite
    assert main(["featurize", "--manifest", str(manifest)]) == 0
    return root, manifest, root / "out" / "features.csv"


class TestFeaturize:
    def test_pair_row_count(self, featurized):
        _, _, features = featurized
        pair_features = features_from_csv(features.read_text())
        assert len(pair_features) == 5 * 4
        slots_per_pair = {len(pf.values) for pf in pair_features.values()}
        assert slots_per_pair == {17}  # 13 baseline + 4 pragmatic

    def test_rerun_is_byte_identical(self, featurized):
        _, manifest, features = featurized
        before = features.read_bytes()
        assert main(["featurize", "--manifest", str(manifest)]) == 0
        assert features.read_bytes() == before

    def test_round_trip_csv(self, featurized):
        _, _, features = featurized
        text = features.read_text()
        again = features_to_csv(features_from_csv(text))
        assert again == text

    def test_cache_env_override(self, suite, tmp_path, monkeypatch):
        root, manifest = suite
        cache_dir = tmp_path / "elsewhere"
        monkeypatch.setenv("PRAGRANK_CACHE", str(cache_dir))
        assert main(["featurize", "--manifest", str(manifest)]) == 0
        assert cache_dir.is_dir()
        assert list(cache_dir.glob("*.json"))

    def test_missing_parallel_yields_na_and_warning(self, suite, tmp_path, capsys):
        root, manifest = suite
        # a manifest variant whose aa-bb pairs lost their parallel corpora;
        # it lives next to the original so relative paths keep resolving
        text = manifest.read_text()
        lines = []
        skip_parallel_for = ("[pairs.aa-bb]", "[pairs.bb-aa]")
        current = None
        for line in text.split("\n"):
            if line.startswith("["):
                current = line.strip()
            if line.startswith("parallel_") and current in skip_parallel_for:
                continue
            lines.append(line)
        variant = root / "manifest_missing_parallel.toml"
        variant.write_text("\n".join(lines).replace(
            'out = "out"', f'out = "{tmp_path / "out"}"'), encoding="utf-8")
        assert main(["featurize", "--manifest", str(variant)]) == 0
        err = capsys.readouterr().err
        assert "ltq(aa,bb)" in err or "ltq(bb,aa)" in err
        pair_features = features_from_csv(
            (tmp_path / "out" / "features.csv").read_text())
        assert pair_features[("aa", "bb")].values["ltq"] is None
        assert pair_features[("bb", "aa")].values["ltq"] is None

    def test_broken_manifest_exits_2_with_error_list(self, tmp_path, capsys):
        bad = tmp_path / "bad.toml"
        bad.write_text("\n".join([
            "[run]", "seed = 1", 'out = "out"', "",
            "[languages.xx]",
            'tagged = "nope.conllu"', 'raw_a = "nope.txt"',
            'raw_b = "nope.txt"', 'embeddings = "nope.vec"',
        ]), encoding="utf-8")
        assert main(["featurize", "--manifest", str(bad)]) == 2
        payload = json.loads(capsys.readouterr().err.strip().split("\n")[-1])
        assert payload["errors"]
        assert any("missing" in e for e in payload["errors"])


class TestTrainRank:
    def test_train_writes_model(self, featurized):
        root, manifest, _ = featurized
        assert main(["train", "--manifest", str(manifest), "--task", "sa"]) == 0
        assert (root / "out" / "model_sa.json").is_file()

    def test_train_is_deterministic(self, featurized):
        root, manifest, _ = featurized
        model_path = root / "out" / "model_sa.json"
        assert main(["train", "--manifest", str(manifest), "--task", "sa"]) == 0
        first = model_path.read_bytes()
        assert main(["train", "--manifest", str(manifest), "--task", "sa"]) == 0
        assert model_path.read_bytes() == first

    def test_rank_round_trips_model_scores(self, featurized, capsys):
        root, manifest, features = featurized
        model_path = root / "out" / "model_sa.json"
        assert main(["train", "--manifest", str(manifest), "--task", "sa"]) == 0
        assert main(["rank", "--model", str(model_path),
                     "--features", str(features), "--target", "aa",
                     "--out", str(root / "out")]) == 0
        stdout = capsys.readouterr().out
        assert stdout.startswith("rank,language,score")
        csv_path = root / "out" / "ranking_aa.csv"
        rows = csv_path.read_text().strip().split("\n")[1:]
        scores_cli = {row.split(",")[1]: float(row.split(",")[2]) for row in rows}

        model = load_ensemble(model_path)
        pair_features = features_from_csv(features.read_text())
        candidates = sorted(lang for lang in ("bb", "cc", "dd", "ee"))
        ranking = predict_scores(model, [pair_features[(c, "aa")]
                                         for c in candidates])
        assert scores_cli == pytest.approx(ranking.scores)

    def test_rank_candidate_subset(self, featurized, capsys):
        root, manifest, features = featurized
        model_path = root / "out" / "model_sa.json"
        assert main(["train", "--manifest", str(manifest), "--task", "sa"]) == 0
        assert main(["rank", "--model", str(model_path),
                     "--features", str(features), "--target", "aa",
                     "--candidates", "bb,cc", "--out", str(root / "out")]) == 0
        rows = capsys.readouterr().out.strip().split("\n")[1:]
        assert sorted(row.split(",")[1] for row in rows) == ["bb", "cc"]

    def test_rank_missing_model_exits_2(self, featurized, capsys):
        root, _, features = featurized
        assert main(["rank", "--model", str(root / "nope.json"),
                     "--features", str(features), "--target", "aa"]) == 2
        payload = json.loads(capsys.readouterr().err.strip().split("\n")[-1])
        assert "missing upstream artifact" in payload["errors"][0]


class TestEvaluateAblateAnalyze:
    def test_evaluate_outputs(self, featurized, capsys):
        root, manifest, _ = featurized
        assert main(["evaluate", "--manifest", str(manifest),
                     "--task", "sa"]) == 0
        out = capsys.readouterr().out
        assert "MAP" in out and "NDCG@3" in out
        report = json.loads((root / "out" / "eval_sa.json").read_text())
        assert len(report["per_language"]) == 5
        csv_lines = (root / "out" / "eval_sa.csv").read_text().strip().split("\n")
        assert csv_lines[0] == "language,map,ndcg"
        assert csv_lines[-1].startswith("mean,")

    def test_evaluate_deterministic(self, featurized):
        root, manifest, _ = featurized
        assert main(["evaluate", "--manifest", str(manifest), "--task", "sa"]) == 0
        first = (root / "out" / "eval_sa.json").read_bytes()
        assert main(["evaluate", "--manifest", str(manifest), "--task", "sa"]) == 0
        assert (root / "out" / "eval_sa.json").read_bytes() == first

    def test_unknown_task_exits_2(self, featurized, capsys):
        _, manifest, _ = featurized
        assert main(["evaluate", "--manifest", str(manifest),
                     "--task", "mystery"]) == 2
        payload = json.loads(capsys.readouterr().err.strip().split("\n")[-1])
        assert "mystery" in payload["errors"][0]

    def test_ablate_outputs_five_rows(self, featurized, capsys):
        root, manifest, _ = featurized
        assert main(["ablate", "--manifest", str(manifest), "--task", "sa"]) == 0
        lines = (root / "out" / "ablation_sa.csv").read_text().strip().split("\n")
        labels = [line.split(",")[0] for line in lines[1:]]
        assert labels == ["LangRank", "LangRank+All", "LangRank+All -LCR",
                          "LangRank+All -LTQ", "LangRank+All -ESD"]
        payload = json.loads((root / "out" / "ablation_sa.json").read_text())
        assert len(payload) == 5
        assert payload[0]["reference"] == [71.3, 86.5]

    def test_analyze_artifacts(self, featurized):
        root, manifest, _ = featurized
        assert main(["analyze", "--manifest", str(manifest)]) == 0
        analysis = root / "out" / "analysis"
        for name in ("ptr_vtr.csv", "esd_network.dot", "syn_network.dot",
                     "cohesion.csv", "geo_correlation.csv", "mwe_gold.csv"):
            assert (analysis / name).is_file(), name
        corr = (analysis / "geo_correlation.csv").read_text().strip().split("\n")
        assert corr[0] == "feature,pearson_r,n_pairs"
        assert len(corr) == 5


class TestScenarioReplay:
    def test_rank_command_reproduces_cultural_tie(self, tmp_path, capsys):
        languages, pair_features, table = cultural_tie_fixture()
        queries = queries_from_pairs(languages, pair_features, table,
                                     exclude=("tr",))
        model = train_lambdarank(queries, Hyperparameters(), seed=1)
        model_path = tmp_path / "model.json"
        save_ensemble(model, model_path)
        features_path = tmp_path / "features.csv"
        features_path.write_text(features_to_csv(pair_features),
                                 encoding="utf-8")
        assert main(["rank", "--model", str(model_path),
                     "--features", str(features_path), "--target", "tr",
                     "--candidates", "ar,ko,ja", "--out", str(tmp_path)]) == 0
        rows = capsys.readouterr().out.strip().split("\n")[1:]
        assert rows[0].split(",")[1] == "ar"
