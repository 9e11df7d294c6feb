"""Intrinsic analyses: neighbor networks, cohesion, geo correlations.

Connects every language to its two nearest neighbors under (a) the
emotion-semantics distance and (b) the syntactic distance table, then
measures how many edges stay inside a cultural area. Also reports the
Pearson correlation of each pragmatic feature with geographic distance
and validates mined expressions against the bundled gold phrase lists.
"""

from pathlib import Path

from pragrank.analysis import (
    knn_network,
    mwe_gold_overlap,
    network_to_dot,
    pearson,
    within_area_fraction,
)
from pragrank.baseline import FeatureConfig
from pragrank.pipeline import build_resources, language_mwes, load_manifest, load_run
from pragrank.synth import write_resource_suite

workspace = Path(__file__).parent / "_workspace" / "suite"
manifest_path = workspace / "manifest.toml"
if not manifest_path.is_file():
    write_resource_suite(workspace, n_langs=8, seed=0)
run = load_run(load_manifest(manifest_path))
langs = run.manifest.languages

resources, _ = build_resources(run, FeatureConfig(base="group:Pragmatic"))

esd_distances = {(a, b): v for (a, b), v in resources.esd_values.items() if a < b}
esd_net = knn_network(esd_distances, k=2)
syn_table = run.distances["syn"]
syn_distances = {(a, b): syn_table.get(a, b)
                 for i, a in enumerate(langs) for b in langs[i + 1:]}
syn_net = knn_network(syn_distances, k=2)

print("within-area edge fraction:")
print(f"  esd network: {within_area_fraction(esd_net, run.areas):.2f}")
print(f"  syn network: {within_area_fraction(syn_net, run.areas):.2f}")

dot_path = Path(__file__).parent / "_workspace" / "esd_network.dot"
dot_path.write_text(network_to_dot(esd_net, run.areas, name="esd"))
print(f"\nDOT rendering written to {dot_path}")

print("\ncorrelation with geographic distance:")
geo = run.distances["geo"]
feature_maps = {
    "lcr_pron": {p: v[0] for p, v in resources.lcr_values.items()},
    "lcr_verb": {p: v[1] for p, v in resources.lcr_values.items()},
    "ltq": resources.ltq_values,
    "esd": resources.esd_values,
}
for name, values in sorted(feature_maps.items()):
    xs, ys = [], []
    for (tf, tg), value in sorted(values.items()):
        if value is None:
            continue
        xs.append(value)
        ys.append(geo.get(tf, tg))
    print(f"  {name:9s} r = {pearson(xs, ys):+.3f} over {len(xs)} pairs")

print("\nmined expressions found in the gold phrase lists:")
for lang in sorted(run.gold_mwes):
    mwes = language_mwes(run, lang)
    bigram_pct, trigram_pct = mwe_gold_overlap(mwes, run.gold_mwes[lang])
    print(f"  {lang}: {bigram_pct:.1f}% of bigrams, {trigram_pct:.1f}% of trigrams")
