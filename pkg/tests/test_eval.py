"""Metric identities, LOO harness structure, ablation/group suites."""

import json

import pytest

from pragrank.errors import ResourceError
from pragrank.baseline import FeatureConfig, FeatureResources, PairFeatures
from pragrank.ingest import DistanceTable, WikiSizeTable, ZeroShotTable
from pragrank.ranker import Hyperparameters, Ranking
from pragrank.evaluation import (
    EvalReport,
    ablation_suite,
    group_suite,
    loo_evaluate,
    map_at_k,
    ndcg_at_p,
    report_to_json,
    reports_to_csv,
)
from pragrank.synth import ranking_fixture


def ranking(*order):
    return Ranking(order=list(order), scores={})


class TestMapAtK:
    def test_perfect_ranking(self):
        truth = ranking("a", "b", "c", "d", "e")
        assert map_at_k(truth, truth, k=3) == 1.0

    def test_hand_case_interleaved(self):
        truth = ranking("A", "B", "C", "D", "E")
        predicted = ranking("A", "D", "B", "C", "E")
        expected = (1 / 1 + 2 / 3 + 3 / 4) / 3
        assert map_at_k(predicted, truth, k=3) == pytest.approx(expected, abs=1e-5)
        assert round(expected, 6) == 0.805556

    def test_hand_case_relevant_last(self):
        truth = ranking("A", "B", "C", "D", "E")
        predicted = ranking("D", "E", "A", "B", "C")
        expected = (1 / 3 + 2 / 4 + 3 / 5) / 3
        assert map_at_k(predicted, truth, k=3) == pytest.approx(expected, abs=1e-5)
        assert round(expected, 6) == 0.477778

    def test_all_relevant_any_permutation(self):
        truth = ranking("a", "b", "c")
        assert map_at_k(ranking("c", "a", "b"), truth, k=3) == 1.0

    def test_candidate_mismatch(self):
        with pytest.raises(ResourceError):
            map_at_k(ranking("a", "b"), ranking("a", "c"), k=2)

    def test_label_renaming_invariance(self):
        truth = ranking("a", "b", "c", "d")
        predicted = ranking("b", "a", "d", "c")
        renamed_truth = ranking("x1", "x2", "x3", "x4")
        renamed_pred = ranking("x2", "x1", "x4", "x3")
        assert map_at_k(predicted, truth, 3) == map_at_k(renamed_pred,
                                                         renamed_truth, 3)


class TestNdcgAtP:
    def test_ideal_order_is_one(self):
        grades = {"a": 3, "b": 2, "c": 1, "d": 0}
        assert ndcg_at_p(ranking("a", "b", "c", "d"), grades, p=3) == 1.0

    def test_hand_case(self):
        grades = {"a": 3, "b": 2, "c": 1, "d": 0}
        # top-3 grade sequence [2, 3, 1]
        value = ndcg_at_p(ranking("b", "a", "c", "d"), grades, p=3)
        assert value == pytest.approx(0.842833, abs=1e-5)

    def test_all_zero_grades(self):
        grades = {"a": 0, "b": 0, "c": 0}
        assert ndcg_at_p(ranking("a", "b", "c"), grades, p=3) == 1.0

    def test_p_below_one(self):
        with pytest.raises(ResourceError):
            ndcg_at_p(ranking("a", "b"), {"a": 1, "b": 0}, p=0)

    def test_grades_must_cover_candidates(self):
        with pytest.raises(ResourceError):
            ndcg_at_p(ranking("a", "b"), {"a": 1}, p=2)

    def test_adjacent_swap_low_high_not_better(self):
        grades = {"a": 3, "b": 1, "c": 0, "d": 2}
        kept = ndcg_at_p(ranking("a", "b", "d", "c"), grades, p=3)    # (low, high)
        swapped = ndcg_at_p(ranking("a", "d", "b", "c"), grades, p=3)  # (high, low)
        assert swapped >= kept


def tiny_problem(n_langs=5, seed=9):
    return ranking_fixture(n_langs=n_langs, seed=seed)


FAST_HP = Hyperparameters(num_trees=15)


class TestLooEvaluate:
    def test_fold_structure_16_languages(self):
        langs, pf, table = ranking_fixture(16, seed=5)
        report = loo_evaluate(langs, pf, table, hp=FAST_HP, label="structure")
        assert len(report.per_language) == 16
        assert sorted(report.per_language) == sorted(langs)

    def test_fixture_metrics_reach_bars(self):
        langs, pf, table = ranking_fixture(16, seed=5)
        report = loo_evaluate(langs, pf, table, label="fixture")
        assert report.mean_ndcg >= 0.95
        assert report.mean_map >= 0.90

    def test_aggregate_is_exact_mean(self):
        langs, pf, table = tiny_problem()
        report = loo_evaluate(langs, pf, table, hp=FAST_HP)
        values = report.per_language.values()
        assert abs(report.mean_map - sum(v["map"] for v in values) / len(values)) \
            <= 1e-12
        assert abs(report.mean_ndcg - sum(v["ndcg"] for v in values) / len(values)) \
            <= 1e-12

    def test_deterministic_reports(self):
        langs, pf, table = tiny_problem()
        r1 = loo_evaluate(langs, pf, table, hp=FAST_HP, seed=4)
        r2 = loo_evaluate(langs, pf, table, hp=FAST_HP, seed=4)
        assert report_to_json(r1) == report_to_json(r2)

    def test_missing_pairs_listed(self):
        langs, pf, table = tiny_problem()
        del table.scores[(langs[0], langs[1])]
        with pytest.raises(ResourceError, match="missing pairs"):
            loo_evaluate(langs, pf, table, hp=FAST_HP)

    def test_needs_three_languages(self):
        langs, pf, table = tiny_problem()
        with pytest.raises(ResourceError):
            loo_evaluate(langs[:2], pf, table, hp=FAST_HP)

    def test_metrics_in_unit_interval(self):
        langs, pf, table = tiny_problem()
        report = loo_evaluate(langs, pf, table, hp=FAST_HP)
        for metrics in report.per_language.values():
            assert 0.0 <= metrics["map"] <= 1.0
            assert 0.0 <= metrics["ndcg"] <= 1.0


def suite_resources(languages):
    """Distance-backed resources so every config has something to chew on."""
    geo, syn = {}, {}
    lcr_values, ltq_values, esd_values = {}, {}, {}
    scores = {}
    sizes = {}
    for i, a in enumerate(languages):
        sizes[a] = 100.0 + 10 * i
        for j, b in enumerate(languages):
            if a == b:
                continue
            d = abs(i - j) / len(languages)
            geo[(a, b)] = d
            syn[(a, b)] = 1.0 - d
            lcr_values[(a, b)] = (1.0 + d, 1.0 - d)
            ltq_values[(a, b)] = -d
            esd_values[(a, b)] = d
            scores[(a, b)] = 1.0 - d
    resources = FeatureResources(
        sizes=sizes,
        vocabs={lang: {f"{lang}{k}" for k in range(5)} | {"shared"}
                for lang in languages},
        distances={"geo": DistanceTable("geo", geo),
                   "syn": DistanceTable("syn", syn)},
        lcr_values=lcr_values, ltq_values=ltq_values, esd_values=esd_values,
    )
    return resources, ZeroShotTable(task="sa", scores=scores)


class TestSuites:
    def test_ablation_enumeration(self):
        languages = [f"l{i}" for i in range(5)]
        resources, table = suite_resources(languages)
        reports = ablation_suite(FeatureConfig(base="langrank"),
                                 ["LCR", "LTQ", "ESD"], languages, resources,
                                 table, hp=FAST_HP)
        assert [r.label for r in reports] == [
            "LangRank", "LangRank+All", "LangRank+All -LCR",
            "LangRank+All -LTQ", "LangRank+All -ESD"]

    def test_ablation_csv_marks_best(self):
        languages = [f"l{i}" for i in range(5)]
        resources, table = suite_resources(languages)
        reports = ablation_suite(FeatureConfig(base="langrank"), ["ESD"],
                                 languages, resources, table, hp=FAST_HP)
        csv_text = reports_to_csv(reports)
        lines = csv_text.strip().split("\n")
        assert lines[0].startswith("config,map,ndcg,is_best_map,is_best_ndcg")
        assert any(",true," in line for line in lines[1:])
        assert sum(r.is_best["map"] for r in reports) >= 1

    def test_reference_attached_for_known_labels(self):
        languages = [f"l{i}" for i in range(5)]
        resources, table = suite_resources(languages)
        reports = ablation_suite(FeatureConfig(base="langrank"), ["ESD"],
                                 languages, resources, table, hp=FAST_HP)
        by_label = {r.label: r for r in reports}
        assert by_label["LangRank"].reference == (71.3, 86.5)
        assert by_label["LangRank+All"].reference == (76.0, 90.9)

    def test_group_suite_runs_available_groups(self):
        languages = [f"l{i}" for i in range(5)]
        resources, table = suite_resources(languages)
        groups = ["Data-specific", "Typology", "Geography", "Orthography",
                  "Pragmatic"]
        reports = group_suite(groups, languages, resources, table, hp=FAST_HP)
        assert [r.label for r in reports] == groups

    def test_group_suite_skips_unavailable(self):
        languages = [f"l{i}" for i in range(5)]
        resources, table = suite_resources(languages)
        assert resources.wiki_sizes is None
        reports = group_suite(["Pretrain-specific", "Geography"], languages,
                              resources, table, hp=FAST_HP)
        assert [r.label for r in reports] == ["Geography"]

    def test_group_suite_unknown_group(self):
        languages = [f"l{i}" for i in range(5)]
        resources, table = suite_resources(languages)
        with pytest.raises(ResourceError):
            group_suite(["Sociology"], languages, resources, table, hp=FAST_HP)


class TestReportRendering:
    def test_json_has_percent_fields(self):
        langs, pf, table = tiny_problem()
        report = loo_evaluate(langs, pf, table, hp=FAST_HP, label="probe")
        data = json.loads(report_to_json(report))
        assert data["label"] == "probe"
        assert data["mean_map_pct"] == f"{data['mean_map'] * 100:.1f}"
        assert 0.0 <= data["mean_map"] <= 1.0
