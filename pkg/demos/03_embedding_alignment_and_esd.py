"""Orthogonal alignment and emotion semantics distance.

First a sanity check: when the target embedding space is an exact
rotation of the source, the Procrustes solution recovers the rotation to
machine precision. Then the emotion-semantics distance over the synthetic
suite: languages from the same cultural bucket place emotion words
similarly, so their distance stays small.
"""

from pathlib import Path

import numpy as np

from pragrank.ingest import EmbeddingSet
from pragrank.pipeline import load_manifest, load_run
from pragrank.pragmatic import esd, procrustes_align
from pragrank.synth import write_resource_suite

rng = np.random.default_rng(42)

# --- rotation recovery ---------------------------------------------------
dim, n = 50, 200
base = rng.normal(size=(n, dim))
base /= np.linalg.norm(base, axis=1, keepdims=True)
q, r = np.linalg.qr(rng.normal(size=(dim, dim)))
rotation = q * np.sign(np.diag(r))
words = [f"w{i}" for i in range(n)]
src = EmbeddingSet("src", dim, {w: base[i] for i, w in enumerate(words)})
tgt = EmbeddingSet("tgt", dim, {w: rotation @ base[i] for i, w in enumerate(words)})
W = procrustes_align(src, tgt, [(w, w) for w in words]).matrix
print(f"rotation recovery: max|W - R| = {np.max(np.abs(W - rotation)):.2e}")
print(f"orthogonality:     max|W'W - I| = "
      f"{np.max(np.abs(W.T @ W - np.eye(dim))):.2e}")

# --- emotion semantics distance over the suite ----------------------------
workspace = Path(__file__).parent / "_workspace" / "suite"
manifest_path = workspace / "manifest.toml"
if not manifest_path.is_file():
    write_resource_suite(workspace, n_langs=8, seed=0)
run = load_run(load_manifest(manifest_path))
langs = run.manifest.languages

print("\nesd matrix (rows: transfer, cols: target), lower = closer")
print("      " + "  ".join(f"{lang:>5s}" for lang in langs))
for tf in langs:
    row = []
    for tg in langs:
        if tf == tg:
            row.append("    -")
            continue
        value = esd(run.embeddings[tf], run.embeddings[tg], run.emotions,
                    run.lexicons[(tf, tg)])
        row.append(f"{value:5.2f}")
    print(f"{tf:4s}  " + "  ".join(row))
print("\nareas:", {lang: run.areas.areas[lang] for lang in langs})
