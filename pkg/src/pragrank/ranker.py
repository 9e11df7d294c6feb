"""Transfer-language ranking: ground truth, gradients, boosted trees.

The ranker is a gradient-boosted ensemble of binary regression trees
trained with a pairwise objective whose gradients are weighted by the
NDCG change of swapping the pair (truncated at the evaluation cutoff).
Splits are found by exact greedy search over sorted unique feature
values; missing values take a per-node learned default direction; leaf
values are Newton steps (sum of gradients over sum of hessians).

Training is deterministic: no subsampling, stable sorts, fixed reduction
orders. The seed is recorded in the model metadata for provenance only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict

import numpy as np

from .errors import ResourceError
from .baseline import CANONICAL_SLOTS, PairFeatures
from .ingest import ZeroShotTable

MTVEC_SLOT_PREFIX = "mtvec_"


def mtvec_slot_names(dim: int) -> list[str]:
    return [f"{MTVEC_SLOT_PREFIX}{i:04d}" for i in range(dim)]


# ---------------------------------------------------------------------------
# Queries and rankings
# ---------------------------------------------------------------------------

@dataclass
class Candidate:
    """One transfer-language candidate within a ranking query."""

    language: str
    features: PairFeatures
    zero_shot: float | None = None
    relevance: int = 0


@dataclass
class RankingQuery:
    """A target language with its candidate transfer languages."""

    target: str
    candidates: list[Candidate]

    def __post_init__(self):
        if len(self.candidates) < 2:
            raise ResourceError(
                f"query for {self.target!r} needs >= 2 candidates")
        languages = [c.language for c in self.candidates]
        if self.target in languages:
            raise ResourceError(
                f"target {self.target!r} cannot be its own candidate")
        if len(set(languages)) != len(languages):
            raise ResourceError(f"duplicate candidates in query for {self.target!r}")


@dataclass
class Ranking:
    """Candidates ordered best-first with their scores."""

    order: list[str]
    scores: dict[str, float]


def ground_truth_ranking(table: ZeroShotTable, target: str,
                         candidates: list[str]) -> Ranking:
    """Sort candidates by descending zero-shot score.

    Ties break by ascending language id. Every candidate must have a score
    for the target.
    """
    scores = {}
    for candidate in candidates:
        score = table.get(candidate, target)
        if score is None:
            raise ResourceError(
                f"no zero-shot score for pair ({candidate}, {target})")
        scores[candidate] = score
    order = sorted(candidates, key=lambda lang: (-scores[lang], lang))
    return Ranking(order=order, scores=scores)


def relevance_grades(ranking: Ranking) -> dict[str, int]:
    """Graded relevance from ground-truth position: 10 for the best,
    decreasing by one per rank, clamped at 0 from the 11th on."""
    return {lang: max(0, 10 - position)
            for position, lang in enumerate(ranking.order)}


def build_query(target: str, candidate_features: dict[str, PairFeatures],
                table: ZeroShotTable) -> RankingQuery:
    """Assemble a training query: features + zero-shot-derived grades."""
    languages = sorted(candidate_features)
    truth = ground_truth_ranking(table, target, languages)
    grades = relevance_grades(truth)
    candidates = [
        Candidate(language=lang, features=candidate_features[lang],
                  zero_shot=truth.scores[lang], relevance=grades[lang])
        for lang in languages
    ]
    return RankingQuery(target=target, candidates=candidates)


# ---------------------------------------------------------------------------
# Feature matrices
# ---------------------------------------------------------------------------

def feature_slots_of(features: PairFeatures) -> list[str]:
    """Ordered slot names one PairFeatures record exposes.

    Canonical slots come first in canonical order; any additional named
    slots (synthetic fixtures, experiments) follow in sorted order.
    """
    slots = [s for s in CANONICAL_SLOTS if s in features.values]
    slots.extend(sorted(k for k in features.values if k not in CANONICAL_SLOTS))
    if features.mtvec is not None:
        slots.extend(mtvec_slot_names(len(features.mtvec)))
    return slots


def feature_matrix(features: list[PairFeatures], slots: list[str]) -> np.ndarray:
    """Dense float64 matrix in slot order; missing values become NaN.

    A slot the features do not carry at all (absent key, wrong mtvec
    width) is a contract violation, not a missing measurement.
    """
    n, d = len(features), len(slots)
    X = np.full((n, d), np.nan, dtype=np.float64)
    for i, pf in enumerate(features):
        mtvec_dim = 0 if pf.mtvec is None else len(pf.mtvec)
        for j, slot in enumerate(slots):
            if slot.startswith(MTVEC_SLOT_PREFIX):
                index = int(slot[len(MTVEC_SLOT_PREFIX):])
                if index >= mtvec_dim:
                    raise ResourceError(
                        f"features for ({pf.transfer}, {pf.target}) lack slot {slot!r}")
                X[i, j] = pf.mtvec[index]
            else:
                if slot not in pf.values:
                    raise ResourceError(
                        f"features for ({pf.transfer}, {pf.target}) lack slot {slot!r}")
                value = pf.values[slot]
                if value is not None:
                    X[i, j] = value
    return X


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------

@dataclass
class RegressionTree:
    """Binary regression tree stored as parallel node arrays.

    feature[i] == -1 marks a leaf; missing split values follow
    missing_left[i]. Split rule: x <= threshold goes left.
    """

    feature: np.ndarray
    threshold: np.ndarray
    missing_left: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray

    @property
    def n_leaves(self) -> int:
        return int(np.sum(self.feature < 0))

    def predict(self, X: np.ndarray) -> np.ndarray:
        out = np.empty(X.shape[0], dtype=np.float64)
        for i in range(X.shape[0]):
            node = 0
            while self.feature[node] >= 0:
                x = X[i, self.feature[node]]
                if np.isnan(x):
                    go_left = self.missing_left[node]
                else:
                    go_left = x <= self.threshold[node]
                node = self.left[node] if go_left else self.right[node]
            out[i] = self.value[node]
        return out


@dataclass(frozen=True)
class Hyperparameters:
    """Boosting hyperparameters; defaults are the production settings."""

    num_trees: int = 100
    max_leaves: int = 16
    shrinkage: float = 0.1
    sigma: float = 1.0
    lambda_reg: float = 0.0
    min_samples_leaf: int = 3
    ndcg_truncation: int = 3


@dataclass
class TreeEnsemble:
    """A trained boosted-tree ranking model plus its metadata."""

    trees: list[RegressionTree]
    shrinkage: float
    feature_slots: list[str]
    hyperparameters: Hyperparameters
    seed: int = 0

    def raw_scores(self, X: np.ndarray) -> np.ndarray:
        scores = np.zeros(X.shape[0], dtype=np.float64)
        for tree in self.trees:
            scores += self.shrinkage * tree.predict(X)
        return scores


# ---------------------------------------------------------------------------
# Lambda gradients
# ---------------------------------------------------------------------------

def _gains(relevance: np.ndarray) -> np.ndarray:
    return np.exp2(relevance.astype(np.float64)) - 1.0


def _ideal_dcg(relevance: np.ndarray, truncation: int) -> float:
    top = np.sort(relevance)[::-1][:truncation]
    discounts = 1.0 / np.log2(np.arange(2, top.size + 2, dtype=np.float64))
    return float(np.sum(_gains(top) * discounts))


def _query_lambdas(scores, relevance, sigma, truncation):
    """Per-candidate gradient/hessian pairs for one query.

    For each pair with rel_i > rel_j the winner is pushed up and the loser
    down by sigma * rho * |dNDCG|, where rho = 1/(1 + exp(sigma (s_i -
    s_j))) and |dNDCG| is the truncated-NDCG change of swapping the two in
    the current ranking. Hessians are sigma^2 rho (1 - rho) |dNDCG| on
    both endpoints.
    """
    m = scores.size
    ideal = _ideal_dcg(relevance, truncation)
    if ideal == 0.0:
        return np.zeros(m), np.zeros(m)
    order = np.argsort(-scores, kind="stable")
    positions = np.empty(m, dtype=np.int64)
    positions[order] = np.arange(1, m + 1)
    discounts = np.where(positions <= truncation,
                         1.0 / np.log2(positions + 1.0), 0.0)
    gains = _gains(relevance)

    winner = (relevance[:, None] - relevance[None, :]) > 0
    delta = (np.abs(gains[:, None] - gains[None, :])
             * np.abs(discounts[:, None] - discounts[None, :]) / ideal)
    with np.errstate(over="ignore"):
        rho = 1.0 / (1.0 + np.exp(sigma * (scores[:, None] - scores[None, :])))
    lam_pair = np.where(winner, sigma * rho * delta, 0.0)
    hess_pair = np.where(winner, sigma * sigma * rho * (1.0 - rho) * delta, 0.0)
    lam = lam_pair.sum(axis=1) - lam_pair.sum(axis=0)
    hess = hess_pair.sum(axis=1) + hess_pair.sum(axis=0)
    return lam, hess


# ---------------------------------------------------------------------------
# Exact greedy tree fitting
# ---------------------------------------------------------------------------

def _leaf_score(grad_sum: float, hess_sum: float, reg: float) -> float:
    denom = hess_sum + reg
    if denom <= 0.0:
        return 0.0
    return grad_sum * grad_sum / denom


def _leaf_value(grad_sum: float, hess_sum: float, reg: float) -> float:
    denom = hess_sum + reg
    if denom <= 0.0:
        return 0.0
    return grad_sum / denom


class _Presort:
    """Per-feature global stable orderings, shared across all nodes."""

    def __init__(self, X: np.ndarray):
        self.n, self.d = X.shape
        self.sorted_rows = []
        self.missing_rows = []
        for f in range(self.d):
            column = X[:, f]
            missing = np.isnan(column)
            known = np.flatnonzero(~missing)
            self.sorted_rows.append(known[np.argsort(column[known], kind="stable")])
            self.missing_rows.append(np.flatnonzero(missing))


def _best_split(X, lam, hess, rows, presort, hp):
    """Best (gain, feature, threshold, missing_left) for one node, or None.

    Tie-break: highest gain, then lowest feature index, lowest threshold,
    missing routed left before right.
    """
    in_node = np.zeros(presort.n, dtype=bool)
    in_node[rows] = True
    lam_total = float(lam[rows].sum())
    hess_total = float(hess[rows].sum())
    parent = _leaf_score(lam_total, hess_total, hp.lambda_reg)
    min_leaf = hp.min_samples_leaf

    best = None  # (gain, feature, threshold, missing_right_flag)
    for f in range(presort.d):
        known = presort.sorted_rows[f]
        known = known[in_node[known]]
        if known.size < 2:
            continue
        miss = presort.missing_rows[f]
        miss = miss[in_node[miss]]
        values = X[known, f]
        lam_cum = np.cumsum(lam[known])
        hess_cum = np.cumsum(hess[known])
        lam_miss = float(lam[miss].sum()) if miss.size else 0.0
        hess_miss = float(hess[miss].sum()) if miss.size else 0.0
        n_miss = int(miss.size)

        boundaries = np.flatnonzero(values[:-1] != values[1:])
        for b in boundaries:
            n_left = int(b) + 1
            n_right = known.size - n_left
            lam_left, hess_left = float(lam_cum[b]), float(hess_cum[b])
            lam_right = float(lam_cum[-1]) - lam_left
            hess_right = float(hess_cum[-1]) - hess_left
            threshold = float(values[b])
            for missing_left in (True, False):
                size_left = n_left + (n_miss if missing_left else 0)
                size_right = n_right + (0 if missing_left else n_miss)
                if size_left < min_leaf or size_right < min_leaf:
                    continue
                gl = lam_left + (lam_miss if missing_left else 0.0)
                hl = hess_left + (hess_miss if missing_left else 0.0)
                gr = lam_right + (0.0 if missing_left else lam_miss)
                hr = hess_right + (0.0 if missing_left else hess_miss)
                gain = (_leaf_score(gl, hl, hp.lambda_reg)
                        + _leaf_score(gr, hr, hp.lambda_reg) - parent)
                if gain <= 0.0:
                    continue
                key = (-gain, f, threshold, not missing_left)
                if best is None or key < best[0]:
                    best = (key, gain, f, threshold, missing_left)
    if best is None:
        return None
    _, gain, f, threshold, missing_left = best
    return gain, f, threshold, missing_left


def _partition(X, rows, feature, threshold, missing_left):
    values = X[rows, feature]
    missing = np.isnan(values)
    go_left = np.where(missing, missing_left, values <= threshold)
    return rows[go_left], rows[~go_left]


def _fit_tree(X, lam, hess, presort, hp) -> RegressionTree:
    """Grow one tree leaf-wise (best gain first) up to max_leaves."""
    nodes = [{"rows": np.arange(X.shape[0]), "feature": -1, "threshold": 0.0,
              "missing_left": True, "left": -1, "right": -1}]
    candidates = {0: _best_split(X, lam, hess, nodes[0]["rows"], presort, hp)}
    n_leaves = 1
    while n_leaves < hp.max_leaves:
        # lowest node id wins gain ties: deterministic leaf-wise growth
        split_id, split = None, None
        for node_id in sorted(candidates):
            cand = candidates[node_id]
            if cand is None:
                continue
            if split is None or cand[0] > split[0]:
                split_id, split = node_id, cand
        if split is None:
            break
        _, feature, threshold, missing_left = split
        rows = nodes[split_id]["rows"]
        left_rows, right_rows = _partition(X, rows, feature, threshold, missing_left)
        left_id, right_id = len(nodes), len(nodes) + 1
        nodes[split_id].update(feature=feature, threshold=threshold,
                               missing_left=missing_left,
                               left=left_id, right=right_id)
        nodes.append({"rows": left_rows, "feature": -1, "threshold": 0.0,
                      "missing_left": True, "left": -1, "right": -1})
        nodes.append({"rows": right_rows, "feature": -1, "threshold": 0.0,
                      "missing_left": True, "left": -1, "right": -1})
        del candidates[split_id]
        candidates[left_id] = _best_split(X, lam, hess, left_rows, presort, hp)
        candidates[right_id] = _best_split(X, lam, hess, right_rows, presort, hp)
        n_leaves += 1

    n = len(nodes)
    tree = RegressionTree(
        feature=np.full(n, -1, dtype=np.int32),
        threshold=np.zeros(n, dtype=np.float64),
        missing_left=np.zeros(n, dtype=bool),
        left=np.full(n, -1, dtype=np.int32),
        right=np.full(n, -1, dtype=np.int32),
        value=np.zeros(n, dtype=np.float64),
    )
    for i, node in enumerate(nodes):
        if node["left"] >= 0:
            tree.feature[i] = node["feature"]
            tree.threshold[i] = node["threshold"]
            tree.missing_left[i] = node["missing_left"]
            tree.left[i] = node["left"]
            tree.right[i] = node["right"]
        else:
            rows = node["rows"]
            tree.value[i] = _leaf_value(float(lam[rows].sum()),
                                        float(hess[rows].sum()), hp.lambda_reg)
    return tree


# ---------------------------------------------------------------------------
# Training and prediction
# ---------------------------------------------------------------------------

def train_lambdarank(queries: list[RankingQuery],
                     hp: Hyperparameters | None = None,
                     seed: int = 0) -> TreeEnsemble:
    """Boost `hp.num_trees` regression trees on pairwise rank gradients.

    Deterministic for fixed inputs; the seed is metadata only (there is no
    subsampling). Raises on degenerate labels (no query contains two
    candidates with different relevance grades).
    """
    if hp is None:
        hp = Hyperparameters()
    if not queries:
        raise ResourceError("no training queries")
    slots = feature_slots_of(queries[0].candidates[0].features)
    for query in queries:
        for candidate in query.candidates:
            if feature_slots_of(candidate.features) != slots:
                raise ResourceError(
                    f"inconsistent feature slots in query for {query.target!r}")

    all_features = [c.features for q in queries for c in q.candidates]
    X = feature_matrix(all_features, slots)
    relevance = np.array([c.relevance for q in queries for c in q.candidates],
                         dtype=np.int64)
    bounds = np.cumsum([0] + [len(q.candidates) for q in queries])
    if not any(len({c.relevance for c in q.candidates}) > 1 for q in queries):
        raise ResourceError("degenerate labels: every query has uniform relevance")

    presort = _Presort(X)
    scores = np.zeros(X.shape[0], dtype=np.float64)
    lam = np.zeros_like(scores)
    hess = np.zeros_like(scores)
    trees: list[RegressionTree] = []
    for _ in range(hp.num_trees):
        for qi in range(len(queries)):
            a, b = bounds[qi], bounds[qi + 1]
            lam[a:b], hess[a:b] = _query_lambdas(
                scores[a:b], relevance[a:b], hp.sigma, hp.ndcg_truncation)
        tree = _fit_tree(X, lam, hess, presort, hp)
        scores += hp.shrinkage * tree.predict(X)
        trees.append(tree)
    return TreeEnsemble(trees=trees, shrinkage=hp.shrinkage,
                        feature_slots=list(slots), hyperparameters=hp, seed=seed)


def predict_scores(ensemble: TreeEnsemble,
                   features: list[PairFeatures]) -> Ranking:
    """Score candidates with the ensemble and rank them best-first.

    Candidates are identified by their transfer language; equal scores
    break by ascending language id.
    """
    languages = [pf.transfer for pf in features]
    if len(set(languages)) != len(languages):
        raise ResourceError("duplicate candidate languages in prediction input")
    X = feature_matrix(features, ensemble.feature_slots)
    raw = ensemble.raw_scores(X)
    scores = {lang: float(s) for lang, s in zip(languages, raw)}
    order = sorted(languages, key=lambda lang: (-scores[lang], lang))
    return Ranking(order=order, scores=scores)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

MODEL_FORMAT = "pragrank-ranker"
MODEL_VERSION = 1


def _tree_to_dict(tree: RegressionTree) -> dict:
    leaves = tree.feature < 0
    return {
        "feature": tree.feature.tolist(),
        "threshold": [None if leaf else float(t)
                      for leaf, t in zip(leaves, tree.threshold)],
        "missing_left": tree.missing_left.tolist(),
        "left": tree.left.tolist(),
        "right": tree.right.tolist(),
        "value": [float(v) if leaf else None
                  for leaf, v in zip(leaves, tree.value)],
    }


def _tree_from_dict(data: dict) -> RegressionTree:
    return RegressionTree(
        feature=np.array(data["feature"], dtype=np.int32),
        threshold=np.array([0.0 if t is None else t for t in data["threshold"]],
                           dtype=np.float64),
        missing_left=np.array(data["missing_left"], dtype=bool),
        left=np.array(data["left"], dtype=np.int32),
        right=np.array(data["right"], dtype=np.int32),
        value=np.array([0.0 if v is None else v for v in data["value"]],
                       dtype=np.float64),
    )


def ensemble_to_json(ensemble: TreeEnsemble) -> str:
    payload = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "hyperparameters": asdict(ensemble.hyperparameters),
        "feature_slots": ensemble.feature_slots,
        "shrinkage": ensemble.shrinkage,
        "seed": ensemble.seed,
        "trees": [_tree_to_dict(t) for t in ensemble.trees],
    }
    return json.dumps(payload, sort_keys=True, indent=None,
                      separators=(",", ":"))


def ensemble_from_json(text: str) -> TreeEnsemble:
    payload = json.loads(text)
    if payload.get("format") != MODEL_FORMAT:
        raise ResourceError(f"not a {MODEL_FORMAT} model file")
    if payload.get("version") != MODEL_VERSION:
        raise ResourceError(f"unsupported model version {payload.get('version')!r}")
    hp = Hyperparameters(**payload["hyperparameters"])
    return TreeEnsemble(
        trees=[_tree_from_dict(t) for t in payload["trees"]],
        shrinkage=payload["shrinkage"],
        feature_slots=list(payload["feature_slots"]),
        hyperparameters=hp,
        seed=payload.get("seed", 0),
    )


def save_ensemble(ensemble: TreeEnsemble, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(ensemble_to_json(ensemble) + "\n")


def load_ensemble(path) -> TreeEnsemble:
    with open(path, encoding="utf-8") as fh:
        return ensemble_from_json(fh.read())
