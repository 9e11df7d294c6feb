"""Manifest loading, caching, and feature-CSV round-trip tests."""

import numpy as np
import pytest

from pragrank.errors import FormatError, ValidationError
from pragrank.baseline import FeatureConfig, PairFeatures
from pragrank.pipeline import (
    ArtifactCache,
    build_resources,
    cache_location,
    featurize,
    features_from_csv,
    features_to_csv,
    language_mwes,
    load_manifest,
    load_run,
)
from pragrank.synth import write_resource_suite


@pytest.fixture(scope="module")
def suite(tmp_path_factory):
    root = tmp_path_factory.mktemp("pipeline_suite")
    manifest_path = write_resource_suite(root, n_langs=4, seed=1)
    return root, load_manifest(manifest_path)


class TestManifest:
    def test_loaded_fields(self, suite):
        root, manifest = suite
        assert manifest.languages == ["aa", "bb", "cc", "dd"]
        assert manifest.seed == 1
        assert set(manifest.tasks) == {"sa", "dep"}
        assert manifest.entries["aa"].tagged.is_file()
        assert ("aa", "bb") in manifest.pairs

    def test_validate_clean(self, suite):
        _, manifest = suite
        assert manifest.validate() == []

    def test_validate_reports_missing_files(self, suite, tmp_path):
        _, manifest = suite
        import copy
        broken = copy.deepcopy(manifest)
        broken.entries["aa"].tagged = tmp_path / "gone.conllu"
        problems = broken.validate()
        assert any("gone.conllu" in p for p in problems)

    def test_load_run_raises_validation_error(self, suite, tmp_path):
        _, manifest = suite
        import copy
        broken = copy.deepcopy(manifest)
        broken.entries["aa"].embeddings = tmp_path / "gone.vec"
        with pytest.raises(ValidationError):
            load_run(broken)

    def test_cache_location_env(self, suite, monkeypatch, tmp_path):
        _, manifest = suite
        monkeypatch.delenv("PRAGRANK_CACHE", raising=False)
        assert cache_location(manifest) == manifest.out / "cache"
        monkeypatch.setenv("PRAGRANK_CACHE", str(tmp_path / "c"))
        assert cache_location(manifest) == tmp_path / "c"


class TestCache:
    def test_key_sensitivity(self, suite, tmp_path):
        _, manifest = suite
        file_a = manifest.entries["aa"].raw_a
        file_b = manifest.entries["aa"].raw_b
        k1 = ArtifactCache.key("mwes", [file_a, file_b], {"k": 10})
        k2 = ArtifactCache.key("mwes", [file_a, file_b], {"k": 20})
        k3 = ArtifactCache.key("mwes", [file_b, file_a], {"k": 10})
        assert len({k1, k2, k3}) == 3

    def test_mwes_cache_round_trip(self, suite, tmp_path):
        _, manifest = suite
        run = load_run(manifest)
        cache = ArtifactCache(tmp_path / "cache")
        fresh = language_mwes(run, "aa", cache)
        assert cache.misses == 1
        cached = language_mwes(run, "aa", cache)
        assert cache.hits == 1
        assert cached.by_order == fresh.by_order
        assert cached.language == fresh.language


class TestBuildResources:
    def test_pragmatic_values_computed(self, suite, tmp_path):
        _, manifest = suite
        run = load_run(manifest)
        config = FeatureConfig(base="group:Pragmatic")
        resources, warnings = build_resources(run, config)
        pairs = [(a, b) for a in manifest.languages
                 for b in manifest.languages if a != b]
        assert set(resources.lcr_values) == set(pairs)
        assert set(resources.esd_values) == set(pairs)
        # z-normalized ltq: per target, population moments hold
        for tg in manifest.languages:
            values = [resources.ltq_values[(tf, tg)]
                      for tf in manifest.languages if tf != tg]
            present = np.array([v for v in values if v is not None])
            if present.size >= 2 and present.max() != present.min():
                assert abs(present.mean()) <= 1e-9
                assert abs(present.std() - 1.0) <= 1e-9

    def test_jobs_do_not_change_results(self, suite):
        _, manifest = suite
        run = load_run(manifest)
        config = FeatureConfig(base="group:Pragmatic")
        serial, _ = build_resources(run, config, jobs=1)
        threaded, _ = build_resources(run, config, jobs=4)
        assert serial.esd_values == threaded.esd_values

    def test_featurize_full_config(self, suite):
        _, manifest = suite
        run = load_run(manifest)
        config = FeatureConfig(base="langrank",
                               add=("lcr_pron", "lcr_verb", "ltq", "esd"))
        pair_features, _, _ = featurize(run, config)
        assert len(pair_features) == 4 * 3
        for pf in pair_features.values():
            assert len(pf.values) == 17

    def test_mtvec_config(self, suite):
        _, manifest = suite
        run = load_run(manifest)
        pair_features, _, _ = featurize(run, FeatureConfig(base="mtvec"))
        pf = pair_features[("aa", "bb")]
        assert pf.values == {}
        assert pf.mtvec is not None and pf.mtvec.shape == (16,)


class TestFeatureCsv:
    def test_round_trip_with_mtvec_and_na(self):
        pair_features = {
            ("aa", "bb"): PairFeatures("aa", "bb",
                                       values={"geo": 0.25, "ltq": None},
                                       mtvec=np.array([0.5, -1.5])),
            ("bb", "aa"): PairFeatures("bb", "aa",
                                       values={"geo": 0.75, "ltq": 1.25},
                                       mtvec=np.array([1.0, 2.0])),
        }
        text = features_to_csv(pair_features)
        again = features_from_csv(text)
        assert again[("aa", "bb")].values == {"geo": 0.25, "ltq": None}
        assert np.array_equal(again[("aa", "bb")].mtvec, [0.5, -1.5])
        assert features_to_csv(again) == text

    def test_bad_header_rejected(self):
        with pytest.raises(FormatError):
            features_from_csv("nope,nope\n")

    def test_na_rendering(self):
        text = features_to_csv({("a", "b"): PairFeatures(
            "a", "b", values={"ltq": None})})
        assert "a,b,ltq,NA" in text
