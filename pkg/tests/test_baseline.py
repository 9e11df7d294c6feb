"""Feature slot registry, configs, and assembly tests."""

import numpy as np
import pytest

from pragrank.errors import ResourceError
from pragrank import baseline
from pragrank.baseline import (
    FeatureConfig,
    FeatureResources,
    GROUP_SLOTS,
    LANGRANK_SLOTS,
    assemble_features,
    mtvec_pair,
    parse_feature_config,
    serialize_feature_config,
    ttr_distance,
    word_overlap,
)
from pragrank.ingest import DistanceTable, LanguageVectorSet, WikiSizeTable
from pragrank.pragmatic import CorpusStats


class TestWordOverlap:
    def test_basic_set_arithmetic(self):
        assert word_overlap({"a", "b", "c"}, {"b", "c", "d"}) == pytest.approx(2 / 6)

    def test_identical_vocabularies(self):
        vocab = {f"w{i}" for i in range(17)}
        assert word_overlap(vocab, set(vocab)) == 0.5

    def test_disjoint(self):
        assert word_overlap({"a"}, {"b"}) == 0.0

    def test_empty_is_missing(self):
        assert word_overlap(set(), {"a"}) is None

    def test_symmetric_and_bounded(self, rng):
        for _ in range(30):
            a = {f"w{i}" for i in rng.integers(0, 50, size=rng.integers(1, 30))}
            b = {f"w{i}" for i in rng.integers(0, 50, size=rng.integers(1, 30))}
            v = word_overlap(a, b)
            assert v == word_overlap(b, a)
            assert 0.0 <= v <= 0.5


class TestTtrDistance:
    def test_equal_is_zero(self):
        assert ttr_distance(0.37, 0.37) == 0.0

    def test_hand_value(self):
        assert ttr_distance(0.2, 0.4) == pytest.approx(0.25)

    def test_nonnegative(self, rng):
        for _ in range(50):
            assert ttr_distance(float(rng.uniform(0.01, 1)),
                                float(rng.uniform(0.01, 1))) >= 0.0

    def test_zero_target_missing(self):
        assert ttr_distance(0.5, 0.0) is None


class TestMtvecPair:
    def test_concatenation(self):
        vectors = LanguageVectorSet(dim=2, vectors={
            "aa": np.array([1.0, 0.0]), "bb": np.array([0.0, 1.0])})
        assert mtvec_pair(vectors, "aa", "bb").tolist() == [1.0, 0.0, 0.0, 1.0]

    def test_same_language_halves_equal(self):
        vectors = LanguageVectorSet(dim=3, vectors={"aa": np.array([1.0, 2.0, 3.0])})
        out = mtvec_pair(vectors, "aa", "aa")
        assert np.array_equal(out[:3], out[3:])

    def test_512_dim_gives_1024(self, rng):
        vectors = LanguageVectorSet(dim=512, vectors={
            "aa": rng.normal(size=512), "bb": rng.normal(size=512)})
        assert mtvec_pair(vectors, "aa", "bb").shape == (1024,)

    def test_missing_language_named(self):
        vectors = LanguageVectorSet(dim=2, vectors={"aa": np.zeros(2)})
        with pytest.raises(ResourceError, match="bb"):
            mtvec_pair(vectors, "aa", "bb")


class TestFeatureConfig:
    def test_langrank_has_13_slots(self):
        config = parse_feature_config("base=langrank\n")
        assert len(config.slots()) == 13
        assert set(config.slots()) == set(LANGRANK_SLOTS)

    def test_plus_all_minus_esd(self):
        config = parse_feature_config("base=langrank\nadd=All\nremove=ESD\n")
        slots = config.slots()
        assert len(slots) == 13 + 3
        assert {"lcr_pron", "lcr_verb", "ltq"} <= set(slots)
        assert "esd" not in slots

    def test_pragmatic_group(self):
        config = parse_feature_config("base=group:Pragmatic\n")
        assert set(config.slots()) == {"ttr_tf", "ttr_tg", "ttr_dist",
                                       "lcr_pron", "lcr_verb", "ltq", "esd"}

    def test_ablation_differs_by_named_slots_only(self):
        base = FeatureConfig(base="langrank", add=("lcr_pron", "lcr_verb",
                                                   "ltq", "esd"))
        ablated = base.with_toggles(remove=["LCR"])
        assert set(base.slots()) - set(ablated.slots()) == {"lcr_pron", "lcr_verb"}

    def test_unknown_slot_rejected(self):
        with pytest.raises(ResourceError):
            parse_feature_config("base=langrank\nadd=volume\n")

    def test_unknown_group_rejected(self):
        with pytest.raises(ResourceError):
            parse_feature_config("base=group:Sociology\n")

    def test_round_trip(self):
        config = parse_feature_config("base=mtvec\nadd=ltq\n")
        again = parse_feature_config(serialize_feature_config(config))
        assert again == config

    def test_labels(self):
        assert FeatureConfig(base="langrank").label() == "LangRank"
        assert FeatureConfig(base="langrank",
                             add=baseline.PRAGMATIC_ADDON_SLOTS).label() == \
            "LangRank+All"
        assert FeatureConfig(base="group:Pragmatic").label() == "Pragmatic"

    def test_group_registry_matches_tags(self):
        # every slot's canonical tag points back to a group that owns it,
        # except gen (no group); geo is additionally used by Typology
        for slot, tag in baseline.SLOT_GROUP_TAG.items():
            if tag is None:
                assert slot == "gen"
            else:
                assert slot in GROUP_SLOTS[tag]
        assert "geo" in GROUP_SLOTS["Typology"]


def stats(language, ttr):
    return CorpusStats(language=language, tokens=100, pron_tokens=10,
                       verb_tokens=20, types=int(ttr * 100),
                       ptr=0.1, vtr=0.2, ttr=ttr)


def toy_resources():
    return FeatureResources(
        sizes={"aa": 200.0, "bb": 100.0},
        stats={"aa": stats("aa", 0.2), "bb": stats("bb", 0.4)},
        vocabs={"aa": {"x", "y", "z"}, "bb": {"y", "z", "w"}},
        distances={"geo": DistanceTable("geo", {("aa", "bb"): 0.3}),
                   "syn": DistanceTable("syn", {("aa", "bb"): 0.6})},
        lcr_values={("aa", "bb"): (0.5, 1.5)},
        ltq_values={("aa", "bb"): 0.7},
        esd_values={("aa", "bb"): 0.2},
        wiki_sizes=WikiSizeTable(counts={"aa": 1000}),
    )


class TestAssembly:
    def test_full_pair(self):
        config = FeatureConfig(base="langrank",
                               add=baseline.PRAGMATIC_ADDON_SLOTS)
        pf = assemble_features(("aa", "bb"), toy_resources(), config)
        assert pf.values["tf_size"] == 200.0
        assert pf.values["ratio_size"] == 2.0
        assert pf.values["ttr_dist"] == pytest.approx(0.25)
        assert pf.values["word_overlap"] == pytest.approx(2 / 6)
        assert pf.values["geo"] == 0.3
        assert pf.values["lcr_pron"] == 0.5
        assert pf.values["ltq"] == 0.7
        assert pf.values["esd"] == 0.2

    def test_missing_resource_stays_missing(self):
        resources = toy_resources()
        resources.distances = {}
        config = FeatureConfig(base="langrank")
        pf = assemble_features(("aa", "bb"), resources, config)
        assert pf.values["geo"] is None
        assert "geo" in pf.values  # slot active, value missing

    def test_inactive_slots_absent(self):
        config = FeatureConfig(base="group:Geography")
        pf = assemble_features(("aa", "bb"), toy_resources(), config)
        assert set(pf.values) == {"geo"}

    def test_wiki_size_is_log10(self):
        config = FeatureConfig(base="group:Pretrain-specific")
        pf = assemble_features(("aa", "bb"), toy_resources(), config)
        assert pf.values["wiki_size_tf"] == pytest.approx(3.0)

    def test_assembly_is_pure(self):
        config = FeatureConfig(base="langrank",
                               add=baseline.PRAGMATIC_ADDON_SLOTS)
        a = assemble_features(("aa", "bb"), toy_resources(), config)
        b = assemble_features(("aa", "bb"), toy_resources(), config)
        assert a.values == b.values
        assert repr(a.values) == repr(b.values)
