"""Training the ranker and ordering transfer candidates for a target.

Featurizes the synthetic suite, trains the boosted-tree ranker on
queries derived from the zero-shot table, and compares the predicted
ranking for one held-back target with the ground truth.
"""

from pathlib import Path

from pragrank.baseline import FeatureConfig
from pragrank.pipeline import featurize, load_manifest, load_run
from pragrank.ranker import (
    Hyperparameters,
    build_query,
    ground_truth_ranking,
    predict_scores,
    train_lambdarank,
)
from pragrank.synth import write_resource_suite

workspace = Path(__file__).parent / "_workspace" / "suite"
manifest_path = workspace / "manifest.toml"
if not manifest_path.is_file():
    write_resource_suite(workspace, n_langs=8, seed=0)
run = load_run(load_manifest(manifest_path))
langs = run.manifest.languages
table = run.zeroshot["sa"]

config = FeatureConfig(base="langrank", add=("lcr_pron", "lcr_verb", "ltq", "esd"))
pair_features, _, _ = featurize(run, config)
print(f"featurized {len(pair_features)} ordered pairs, "
      f"{len(next(iter(pair_features.values())).values)} slots each")

held_out = langs[0]
training = [lang for lang in langs if lang != held_out]
queries = []
for target in training:
    candidates = {c: pair_features[(c, target)] for c in training if c != target}
    queries.append(build_query(target, candidates, table))
model = train_lambdarank(queries, Hyperparameters(), seed=7)
print(f"trained {len(model.trees)} trees on {len(queries)} queries")

predicted = predict_scores(model, [pair_features[(c, held_out)]
                                   for c in training])
truth = ground_truth_ranking(table, held_out, training)
print(f"\ntarget {held_out}:")
print(f"  predicted: {predicted.order}")
print(f"  truth:     {truth.order}")
