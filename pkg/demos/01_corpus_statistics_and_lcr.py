"""Context-level ratios from tagged corpora.

Builds the synthetic 8-language resource suite, computes pronoun/verb
token rates per language, and compares pairs of languages through the
context-level ratio feature. Languages generated with a low "culture"
coordinate use pronouns often (explicit, low-context style); high values
drop them.
"""

from pathlib import Path

from pragrank.pipeline import load_manifest, load_run
from pragrank.pragmatic import corpus_stats, lcr
from pragrank.synth import write_resource_suite

workspace = Path(__file__).parent / "_workspace" / "suite"
manifest_path = workspace / "manifest.toml"
if not manifest_path.is_file():
    write_resource_suite(workspace, n_langs=8, seed=0)
run = load_run(load_manifest(manifest_path))

print("language   tokens    ptr     vtr     ttr")
stats = {}
for lang in run.manifest.languages:
    s = corpus_stats(run.tagged[lang])
    stats[lang] = s
    print(f"{lang:8s} {s.tokens:8d}  {s.ptr:.4f}  {s.vtr:.4f}  {s.ttr:.4f}")

# a pair with similar pronoun habits scores near 1.0 on lcr_pron;
# dropping-pronoun targets against explicit transfers score below 1
print("\ntransfer target  lcr_pron  lcr_verb")
langs = run.manifest.languages
for tf, tg in [(langs[0], langs[1]), (langs[0], langs[-1]),
               (langs[2], langs[3])]:
    ratio_pron, ratio_verb = lcr(stats[tf], stats[tg])
    print(f"{tf:8s} {tg:6s}  {ratio_pron:8.4f}  {ratio_verb:8.4f}")
