"""Network, correlation, and gold-MWE analysis tests."""

import pytest

from pragrank.errors import ResourceError
from pragrank.analysis import (
    knn_network,
    ltq_gold_correlation,
    mwe_gold_overlap,
    network_to_dot,
    pearson,
    within_area_fraction,
)
from pragrank.ingest import CulturalAreaMap
from pragrank.pragmatic import MweList


def block_distances(n_areas=4, per_area=4, within=0.1, across=0.9):
    """Block-structured distances: tight within areas, far across."""
    langs, area_of = [], {}
    for a in range(n_areas):
        for i in range(per_area):
            lang = f"a{a}x{i}"
            langs.append(lang)
            area_of[lang] = f"area{a}"
    distances = {}
    for i, x in enumerate(langs):
        for y in langs[i + 1:]:
            base = within if area_of[x] == area_of[y] else across
            # small deterministic jitter keeps neighbor choices unique
            jitter = 0.001 * ((hash_pair(x, y)) % 7)
            distances[(x, y)] = base + jitter
    return langs, distances, CulturalAreaMap(areas=area_of)


def hash_pair(x, y):
    return sum(ord(c) for c in x + y)


class TestKnnNetwork:
    def test_edge_count_bounds(self, rng):
        langs = [f"l{i:02d}" for i in range(16)]
        distances = {}
        for i, a in enumerate(langs):
            for b in langs[i + 1:]:
                distances[(a, b)] = float(rng.uniform(0.05, 1.0))
        network = knn_network(distances, k=2)
        assert 16 <= len(network.edges) <= 32

    def test_block_structure_stays_within_areas(self):
        _, distances, areas = block_distances()
        network = knn_network(distances, k=2)
        assert within_area_fraction(network, areas) == 1.0

    def test_mutual_neighbors_single_edge(self):
        distances = {("a", "b"): 0.1, ("a", "c"): 0.9, ("b", "c"): 0.9}
        network = knn_network(distances, k=1)
        assert ("a", "b") in network.edges
        assert len([e for e in network.edges if set(e) == {"a", "b"}]) == 1

    def test_k_too_large(self):
        distances = {("a", "b"): 0.5}
        with pytest.raises(ResourceError):
            knn_network(distances, k=2)

    def test_iteration_order_independence(self):
        _, distances, _ = block_distances(n_areas=2, per_area=3)
        reversed_distances = dict(reversed(list(distances.items())))
        assert knn_network(distances, k=2).edges == \
            knn_network(reversed_distances, k=2).edges


class TestWithinAreaFraction:
    def test_all_cross_area_is_zero(self):
        from pragrank.analysis import LanguageNetwork
        network = LanguageNetwork(nodes=["a", "b", "c", "d"],
                                  edges={("a", "b"), ("c", "d")})
        areas = CulturalAreaMap(areas={"a": "x", "b": "y", "c": "x", "d": "y"})
        assert within_area_fraction(network, areas) == 0.0

    def test_missing_area_error(self):
        from pragrank.analysis import LanguageNetwork
        network = LanguageNetwork(nodes=["a", "b"], edges={("a", "b")})
        with pytest.raises(ResourceError):
            within_area_fraction(network, CulturalAreaMap(areas={"a": "x"}))

    def test_relabeling_invariance(self):
        _, distances, areas = block_distances()
        network = knn_network(distances, k=2)
        relabeled = CulturalAreaMap(areas={
            lang: "zone-" + area for lang, area in areas.areas.items()})
        assert within_area_fraction(network, areas) == \
            within_area_fraction(network, relabeled)

    def test_dot_rendering_mentions_nodes_and_areas(self):
        _, distances, areas = block_distances(n_areas=2, per_area=3)
        network = knn_network(distances, k=2)
        dot = network_to_dot(network, areas)
        assert dot.startswith("graph")
        assert '"a0x0"' in dot and "--" in dot and "fillcolor" in dot


class TestPearson:
    def test_perfect_linear(self):
        assert pearson([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0, abs=1e-12)

    def test_perfect_anti_linear(self):
        assert pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0, abs=1e-12)

    def test_affine_invariance(self, rng):
        x = [float(v) for v in rng.normal(size=40)]
        up = [3.5 * v + 2.0 for v in x]
        down = [-0.25 * v + 1.0 for v in x]
        assert pearson(x, up) == pytest.approx(1.0, abs=1e-12)
        assert pearson(x, down) == pytest.approx(-1.0, abs=1e-12)

    def test_zero_variance_undefined(self):
        assert pearson([1, 1, 1], [1, 2, 3]) is None

    def test_length_guard(self):
        with pytest.raises(ResourceError):
            pearson([1, 2], [1, 2])


def mwes(bigrams=(), trigrams=()):
    return MweList(language="en", by_order={
        2: [(tuple(g), 0.0) for g in bigrams],
        3: [(tuple(g), 0.0) for g in trigrams],
    })


class TestMweGoldOverlap:
    def test_subsequence_of_longer_gold_phrase(self):
        gold = {("keep", "an", "eye", "peeled")}
        lists = mwes(trigrams=[("keep", "an", "eye")])
        bigram_pct, trigram_pct = mwe_gold_overlap(lists, gold)
        assert trigram_pct == 100.0

    def test_exact_match(self):
        gold = {("take", "into", "account")}
        lists = mwes(trigrams=[("take", "into", "account")])
        assert mwe_gold_overlap(lists, gold)[1] == 100.0

    def test_empty_intersection(self):
        gold = {("other", "things")}
        lists = mwes(bigrams=[("some", "words")], trigrams=[("a", "b", "c")])
        assert mwe_gold_overlap(lists, gold) == (0.0, 0.0)

    def test_percentage_arithmetic(self):
        gold = {("g1", "g2"), ("g3", "g4"), ("g5", "g6")}
        bigrams = [("g1", "g2"), ("g3", "g4"), ("g5", "g6")] + \
            [(f"n{i}", f"m{i}") for i in range(7)]
        assert mwe_gold_overlap(mwes(bigrams=bigrams), gold)[0] == 30.0

    def test_monotone_in_gold(self):
        lists = mwes(bigrams=[("a", "b"), ("c", "d")],
                     trigrams=[("a", "b", "c")])
        small = {("a", "b")}
        large = small | {("x", "c", "d", "y")}
        small_pct = mwe_gold_overlap(lists, small)
        large_pct = mwe_gold_overlap(lists, large)
        assert large_pct[0] >= small_pct[0]
        assert large_pct[1] >= small_pct[1]

    def test_case_insensitive(self):
        gold = {("Keep", "An", "Eye")}
        lists = mwes(bigrams=[("keep", "an")])
        assert mwe_gold_overlap(lists, gold)[0] == 100.0

    def test_empty_gold_error(self):
        with pytest.raises(ResourceError):
            mwe_gold_overlap(mwes(bigrams=[("a", "b")]), set())


class TestLtqGoldCorrelation:
    def test_identical_maps(self):
        scores = {"fr": 0.2, "de": 0.5, "es": 0.9}
        assert ltq_gold_correlation(scores, dict(scores)) == \
            pytest.approx(1.0, abs=1e-12)

    def test_anti_correlated(self):
        pmi = {"fr": 0.1, "de": 0.5, "es": 0.9}
        gold = {"fr": 0.9, "de": 0.5, "es": 0.1}
        assert ltq_gold_correlation(pmi, gold) == pytest.approx(-1.0, abs=1e-12)

    def test_key_mismatch(self):
        with pytest.raises(ResourceError):
            ltq_gold_correlation({"fr": 0.1}, {"de": 0.1})
