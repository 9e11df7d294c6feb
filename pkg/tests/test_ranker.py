"""Ranker tests: ground truth, gradients, boosting, serialization."""

import numpy as np
import pytest

from pragrank.errors import ResourceError
from pragrank.baseline import PairFeatures
from pragrank.ingest import ZeroShotTable
from pragrank import ranker
from pragrank.ranker import (
    Candidate,
    Hyperparameters,
    RankingQuery,
    build_query,
    ensemble_from_json,
    ensemble_to_json,
    feature_matrix,
    ground_truth_ranking,
    predict_scores,
    relevance_grades,
    train_lambdarank,
)
from pragrank.synth import separable_queries
from pragrank.evaluation import ndcg_at_p


def table(scores, task="sa"):
    return ZeroShotTable(task=task, scores=scores)


class TestGroundTruth:
    def test_sorting_by_score(self):
        t = table({("ar", "tr"): 0.61, ("ko", "tr"): 0.58, ("ja", "tr"): 0.55})
        ranking = ground_truth_ranking(t, "tr", ["ja", "ar", "ko"])
        assert ranking.order == ["ar", "ko", "ja"]

    def test_tie_break_ascending_id(self):
        t = table({("a", "x"): 1.0, ("b", "x"): 1.0, ("c", "x"): 1.0})
        ranking = ground_truth_ranking(t, "x", ["c", "a", "b"])
        assert ranking.order == ["a", "b", "c"]

    def test_single_candidate(self):
        t = table({("a", "x"): 0.5})
        assert ground_truth_ranking(t, "x", ["a"]).order == ["a"]

    def test_missing_score_names_pair(self):
        t = table({("a", "x"): 0.5})
        with pytest.raises(ResourceError, match=r"\(b, x\)"):
            ground_truth_ranking(t, "x", ["a", "b"])


class TestRelevanceGrades:
    def test_three_candidates(self):
        ranking = ranker.Ranking(order=["a", "b", "c"], scores={})
        assert relevance_grades(ranking) == {"a": 10, "b": 9, "c": 8}

    def test_clamp_beyond_eleventh(self):
        ranking = ranker.Ranking(order=[f"l{i:02d}" for i in range(15)], scores={})
        grades = relevance_grades(ranking)
        assert [grades[f"l{i:02d}"] for i in range(15)] == \
            [10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 0, 0, 0, 0]

    def test_strictly_decreasing_until_clamp(self):
        ranking = ranker.Ranking(order=[f"l{i:02d}" for i in range(12)], scores={})
        grades = [relevance_grades(ranking)[f"l{i:02d}"] for i in range(12)]
        positive = [g for g in grades if g > 0]
        assert positive == sorted(positive, reverse=True)
        assert len(set(positive)) == len(positive)


class TestQueryValidation:
    def feats(self, lang):
        return PairFeatures(transfer=lang, target="t", values={"f0": 0.0})

    def test_needs_two_candidates(self):
        with pytest.raises(ResourceError):
            RankingQuery(target="t", candidates=[
                Candidate("a", self.feats("a"))])

    def test_target_not_candidate(self):
        with pytest.raises(ResourceError):
            RankingQuery(target="a", candidates=[
                Candidate("a", self.feats("a")), Candidate("b", self.feats("b"))])

    def test_build_query_grades_follow_zero_shot(self):
        t = table({("a", "x"): 0.3, ("b", "x"): 0.9, ("c", "x"): 0.5})
        feats = {lang: self.feats(lang) for lang in ("a", "b", "c")}
        query = build_query("x", feats, t)
        grade = {c.language: c.relevance for c in query.candidates}
        assert grade == {"b": 10, "c": 9, "a": 8}


class TestLambdaGradients:
    def test_swap_negates_pairwise_contribution_sign(self):
        scores = np.array([0.2, -0.1])
        lam1, hess1 = ranker._query_lambdas(scores, np.array([1, 0]), 1.0, 3)
        lam2, hess2 = ranker._query_lambdas(scores, np.array([0, 1]), 1.0, 3)
        assert lam1[0] > 0 and lam1[1] < 0
        assert lam2[0] < 0 and lam2[1] > 0
        assert np.all(hess1 >= 0) and np.all(hess2 >= 0)

    def test_swap_at_equal_scores_is_exact_negation(self):
        scores = np.array([0.4, 0.4])
        lam1, _ = ranker._query_lambdas(scores, np.array([2, 1]), 1.0, 3)
        lam2, _ = ranker._query_lambdas(scores, np.array([1, 2]), 1.0, 3)
        assert lam1[0] == -lam2[0] and lam1[1] == -lam2[1]

    def test_uniform_grades_give_zero(self):
        lam, hess = ranker._query_lambdas(
            np.array([0.5, 0.1, -0.3]), np.array([2, 2, 2]), 1.0, 3)
        assert np.all(lam == 0) and np.all(hess == 0)


class TestTraining:
    def test_default_hyperparameters(self):
        hp = Hyperparameters()
        assert hp.num_trees == 100
        assert hp.max_leaves == 16
        assert hp.shrinkage == 0.1

    def test_learns_synthetic_separable_ranking(self):
        train = separable_queries(n_queries=30, seed=11)
        held = separable_queries(n_queries=10, seed=99)
        model = train_lambdarank(train, Hyperparameters(), seed=1)
        values = []
        for query in held:
            pred = predict_scores(model, [c.features for c in query.candidates])
            grades = {c.language: c.relevance for c in query.candidates}
            values.append(ndcg_at_p(pred, grades, p=3))
        assert sum(values) / len(values) >= 0.95

    def test_training_ndcg_non_decreasing(self):
        train = separable_queries(n_queries=10, seed=11)
        model = train_lambdarank(train, Hyperparameters(num_trees=60), seed=1)

        def mean_train_ndcg(n_trees):
            partial = ranker.TreeEnsemble(
                trees=model.trees[:n_trees], shrinkage=model.shrinkage,
                feature_slots=model.feature_slots,
                hyperparameters=model.hyperparameters)
            values = []
            for query in train:
                pred = predict_scores(partial, [c.features for c in query.candidates])
                grades = {c.language: c.relevance for c in query.candidates}
                values.append(ndcg_at_p(pred, grades, p=3))
            return sum(values) / len(values)

        curve = [mean_train_ndcg(t) for t in range(0, 61, 5)]
        assert all(b >= a - 1e-12 for a, b in zip(curve, curve[1:]))
        assert curve[-1] > curve[0]

    def test_bit_identical_reruns(self):
        train = separable_queries(n_queries=8, seed=3)
        m1 = train_lambdarank(train, Hyperparameters(num_trees=20), seed=7)
        m2 = train_lambdarank(train, Hyperparameters(num_trees=20), seed=7)
        assert ensemble_to_json(m1) == ensemble_to_json(m2)

    def test_degenerate_labels_error(self):
        feats = {lang: PairFeatures(transfer=lang, target="t",
                                    values={"f0": float(i)})
                 for i, lang in enumerate(("a", "b"))}
        query = RankingQuery(target="t", candidates=[
            Candidate("a", feats["a"], relevance=5),
            Candidate("b", feats["b"], relevance=5)])
        with pytest.raises(ResourceError, match="degenerate"):
            train_lambdarank([query], Hyperparameters(num_trees=2))

    def test_inconsistent_slots_error(self):
        q1 = RankingQuery(target="t", candidates=[
            Candidate("a", PairFeatures("a", "t", {"f0": 0.1}), relevance=1),
            Candidate("b", PairFeatures("b", "t", {"f0": 0.2}), relevance=0)])
        q2 = RankingQuery(target="u", candidates=[
            Candidate("a", PairFeatures("a", "u", {"f1": 0.1}), relevance=1),
            Candidate("b", PairFeatures("b", "u", {"f1": 0.2}), relevance=0)])
        with pytest.raises(ResourceError, match="inconsistent"):
            train_lambdarank([q1, q2], Hyperparameters(num_trees=2))


def stump(feature, threshold, left_value, right_value, missing_left=True):
    return ranker.RegressionTree(
        feature=np.array([feature, -1, -1], dtype=np.int32),
        threshold=np.array([threshold, 0.0, 0.0]),
        missing_left=np.array([missing_left, False, False]),
        left=np.array([1, -1, -1], dtype=np.int32),
        right=np.array([2, -1, -1], dtype=np.int32),
        value=np.array([0.0, left_value, right_value]),
    )


def pair(lang, **values):
    return PairFeatures(transfer=lang, target="t", values=values)


class TestPrediction:
    def test_empty_ensemble_is_tie_break_order(self):
        ensemble = ranker.TreeEnsemble(trees=[], shrinkage=0.1,
                                       feature_slots=["ltq"],
                                       hyperparameters=Hyperparameters())
        ranking = predict_scores(ensemble, [pair("b", ltq=1.0), pair("a", ltq=2.0)])
        assert ranking.order == ["a", "b"]
        assert all(s == 0.0 for s in ranking.scores.values())

    def test_single_stump_semantics(self):
        ensemble = ranker.TreeEnsemble(
            trees=[stump(0, 0.0, -1.0, 1.0)], shrinkage=0.1,
            feature_slots=["ltq"], hyperparameters=Hyperparameters())
        ranking = predict_scores(ensemble, [
            pair("neg", ltq=-0.5), pair("pos", ltq=0.5), pair("zero", ltq=0.0)])
        assert ranking.order[0] == "pos"
        assert ranking.scores["pos"] == pytest.approx(0.1)
        assert ranking.scores["neg"] == pytest.approx(-0.1)
        assert ranking.scores["zero"] == pytest.approx(-0.1)  # x <= 0 goes left

    def test_unused_feature_invariance(self):
        ensemble = ranker.TreeEnsemble(
            trees=[stump(0, 0.5, -1.0, 1.0)], shrinkage=0.1,
            feature_slots=["ltq", "esd"], hyperparameters=Hyperparameters())
        base = predict_scores(ensemble, [
            pair("a", ltq=0.2, esd=0.3), pair("b", ltq=0.9, esd=0.8)])
        transformed = predict_scores(ensemble, [
            pair("a", ltq=0.2, esd=np.exp(0.3)), pair("b", ltq=0.9, esd=np.exp(0.8))])
        assert base.order == transformed.order
        assert base.scores == transformed.scores

    def test_candidate_order_invariance(self):
        ensemble = ranker.TreeEnsemble(
            trees=[stump(0, 0.5, -1.0, 1.0)], shrinkage=0.1,
            feature_slots=["ltq"], hyperparameters=Hyperparameters())
        forward = predict_scores(ensemble, [pair("a", ltq=0.1), pair("b", ltq=0.9)])
        backward = predict_scores(ensemble, [pair("b", ltq=0.9), pair("a", ltq=0.1)])
        assert forward.order == backward.order
        assert forward.scores == backward.scores

    def test_missing_value_takes_default_direction(self):
        left = ranker.TreeEnsemble(
            trees=[stump(0, 0.0, -1.0, 1.0, missing_left=True)], shrinkage=1.0,
            feature_slots=["ltq"], hyperparameters=Hyperparameters())
        right = ranker.TreeEnsemble(
            trees=[stump(0, 0.0, -1.0, 1.0, missing_left=False)], shrinkage=1.0,
            feature_slots=["ltq"], hyperparameters=Hyperparameters())
        missing = [pair("m", ltq=None), pair("x", ltq=1.0)]
        assert predict_scores(left, missing).scores["m"] == -1.0
        assert predict_scores(right, missing).scores["m"] == 1.0

    def test_unknown_slot_in_ensemble_errors(self):
        ensemble = ranker.TreeEnsemble(
            trees=[], shrinkage=0.1, feature_slots=["mystery"],
            hyperparameters=Hyperparameters())
        with pytest.raises(ResourceError, match="mystery"):
            predict_scores(ensemble, [pair("a", ltq=0.1), pair("b", ltq=0.2)])

    def test_prediction_is_permutation(self):
        train = separable_queries(n_queries=6, seed=2)
        model = train_lambdarank(train, Hyperparameters(num_trees=10))
        query = separable_queries(n_queries=1, seed=77)[0]
        ranking = predict_scores(model, [c.features for c in query.candidates])
        assert sorted(ranking.order) == sorted(c.language for c in query.candidates)


class TestFeatureMatrix:
    def test_missing_becomes_nan(self):
        X = feature_matrix([pair("a", ltq=None, esd=0.5)], ["ltq", "esd"])
        assert np.isnan(X[0, 0]) and X[0, 1] == 0.5

    def test_mtvec_expansion(self):
        pf = PairFeatures(transfer="a", target="t", values={},
                          mtvec=np.array([1.0, 2.0]))
        X = feature_matrix([pf], ["mtvec_0000", "mtvec_0001"])
        assert X.tolist() == [[1.0, 2.0]]


class TestSerialization:
    def test_round_trip_identical_predictions(self):
        train = separable_queries(n_queries=8, seed=3)
        model = train_lambdarank(train, Hyperparameters(num_trees=15), seed=9)
        text = ensemble_to_json(model)
        loaded = ensemble_from_json(text)
        query = separable_queries(n_queries=1, seed=55)[0]
        feats = [c.features for c in query.candidates]
        assert predict_scores(model, feats).scores == \
            predict_scores(loaded, feats).scores
        assert ensemble_to_json(loaded) == text

    def test_rejects_wrong_format(self):
        with pytest.raises(ResourceError):
            ensemble_from_json('{"format": "other", "version": 1}')

    def test_save_load_file(self, tmp_path):
        train = separable_queries(n_queries=6, seed=4)
        model = train_lambdarank(train, Hyperparameters(num_trees=5), seed=2)
        path = tmp_path / "model.json"
        ranker.save_ensemble(model, path)
        loaded = ranker.load_ensemble(path)
        assert ensemble_to_json(loaded) == ensemble_to_json(model)
