"""Mining multiword expressions and scoring literal translatability.

PMI^3 ranks collocations in two same-language corpora from different
domains; intersecting the two candidate lists strips domain-specific
noise. The surviving expressions are then searched in a parallel corpus
and checked word-by-word against a bilingual dictionary: the hit ratio
feeds the literal-translation-quality feature.
"""

from pathlib import Path

from pragrank.pipeline import load_manifest, load_run
from pragrank.pragmatic import extract_mwes, ltq_normalize, ltq_raw
from pragrank.synth import write_resource_suite

workspace = Path(__file__).parent / "_workspace" / "suite"
manifest_path = workspace / "manifest.toml"
if not manifest_path.is_file():
    write_resource_suite(workspace, n_langs=8, seed=0)
run = load_run(load_manifest(manifest_path))
langs = run.manifest.languages

target = langs[0]
mwes = extract_mwes(run.raw_a[target], run.raw_b[target], k=60, min_count=4)
print(f"top expressions mined for {target}:")
for order in (2, 3):
    for gram, score in mwes.by_order[order][:5]:
        print(f"  order {order}: {' '.join(gram)}  (pmi3 {score:.3f})")

# hit ratios against every other language as transfer side
print(f"\nliteral translatability of {target}'s expressions:")
raws = {}
for tf in langs:
    if tf == target:
        continue
    lexicon = run.lexicons[(target, tf)]
    parallel = run.parallels.get((tf, target)) or run.parallels.get((target, tf))
    raw, hit_stats = ltq_raw(mwes, lexicon, parallel)
    raws[tf] = raw
    found = len(hit_stats.counts)
    print(f"  {tf}: raw hit ratio {raw:.3f} over {found} found expressions")

normalized = ltq_normalize(raws)
print("\nz-normalized over the candidate transfer languages:")
for tf in sorted(normalized, key=lambda l: -normalized[l]):
    print(f"  ltq({tf} -> {target}) = {normalized[tf]:+.3f}")
