"""Command-line orchestration of the full pipeline.

Subcommands: featurize, train, rank, evaluate, ablate, analyze. Every
command is idempotent: identical inputs and seed produce byte-identical
outputs. Validation failures exit with status 2 and a machine-readable
error list on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import PragrankError, ValidationError
from .analysis import (
    knn_network,
    ltq_gold_correlation,
    mwe_gold_overlap,
    network_to_dot,
    pearson,
    within_area_fraction,
)
from .baseline import FeatureConfig, parse_feature_config
from .evaluation import (
    ablation_suite,
    group_suite,
    loo_evaluate,
    report_to_json,
    reports_to_csv,
)
from .pipeline import (
    ArtifactCache,
    cache_location,
    build_resources,
    featurize,
    features_from_csv,
    features_to_csv,
    language_mwes,
    load_manifest,
    load_run,
)
from .pragmatic import corpus_stats, ltq_raw
from .ranker import (
    Hyperparameters,
    build_query,
    load_ensemble,
    predict_scores,
    save_ensemble,
    train_lambdarank,
)

logger = logging.getLogger("pragrank")

DEFAULT_CONFIG = FeatureConfig(base="langrank",
                               add=("lcr_pron", "lcr_verb", "ltq", "esd"))


def _percent(value: float) -> str:
    return f"{value * 100:.1f}"


def _load_config(path) -> FeatureConfig:
    if path is None:
        return DEFAULT_CONFIG
    return parse_feature_config(Path(path).read_text(encoding="utf-8"))


def _prepare(args):
    manifest = load_manifest(args.manifest)
    if getattr(args, "seed", None) is not None:
        manifest.seed = args.seed
    if getattr(args, "out", None) is not None:
        manifest.out = Path(args.out)
    manifest.out.mkdir(parents=True, exist_ok=True)
    return manifest


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)


def _features_path(manifest, args) -> Path:
    if getattr(args, "features", None):
        return Path(args.features)
    return manifest.out / "features.csv"


def _read_features(path: Path):
    if not path.is_file():
        raise ValidationError([f"missing upstream artifact: {path}"])
    return features_from_csv(path.read_text(encoding="utf-8"), source=str(path))


def cmd_featurize(args) -> int:
    manifest = _prepare(args)
    config = _load_config(args.config)
    run = load_run(manifest)
    cache = ArtifactCache(cache_location(manifest))
    pair_features, _, warnings = featurize(run, config, cache=cache,
                                           jobs=args.jobs)
    _write(manifest.out / "features.csv", features_to_csv(pair_features))
    logger.info("cache: %d hits, %d misses", cache.hits, cache.misses)
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return 0


def _task_table(run, task: str):
    if task not in run.zeroshot:
        raise ValidationError(
            [f"task {task!r} not in manifest (known: {sorted(run.zeroshot)})"])
    return run.zeroshot[task]


def cmd_train(args) -> int:
    manifest = _prepare(args)
    run = load_run(manifest)
    table = _task_table(run, args.task)
    pair_features = _read_features(_features_path(manifest, args))
    queries = []
    for target in manifest.languages:
        candidates = {lang: pair_features[(lang, target)]
                      for lang in manifest.languages if lang != target}
        queries.append(build_query(target, candidates, table))
    model = train_lambdarank(queries, Hyperparameters(), seed=manifest.seed)
    save_ensemble(model, manifest.out / f"model_{args.task}.json")
    logger.info("wrote %s", manifest.out / f"model_{args.task}.json")
    return 0


def cmd_rank(args) -> int:
    model_path = Path(args.model)
    if not model_path.is_file():
        raise ValidationError([f"missing upstream artifact: {model_path}"])
    model = load_ensemble(model_path)
    pair_features = _read_features(Path(args.features))
    target = args.target.lower()
    if args.candidates:
        candidates = [c.strip().lower() for c in args.candidates.split(",")]
    else:
        candidates = sorted({tf for tf, tg in pair_features if tg == target})
    if not candidates:
        raise ValidationError([f"no feature rows with target {target!r}"])
    missing = [c for c in candidates if (c, target) not in pair_features]
    if missing:
        raise ValidationError(
            [f"no features for pair ({c}, {target})" for c in missing])
    ranking = predict_scores(model, [pair_features[(c, target)]
                                     for c in candidates])
    lines = ["rank,language,score"]
    for position, lang in enumerate(ranking.order, start=1):
        lines.append(f"{position},{lang},{repr(ranking.scores[lang])}")
    text = "\n".join(lines) + "\n"
    out = Path(args.out) if args.out else model_path.parent
    out.mkdir(parents=True, exist_ok=True)
    _write(out / f"ranking_{target}.csv", text)
    print(text, end="")
    return 0


def cmd_evaluate(args) -> int:
    manifest = _prepare(args)
    run = load_run(manifest)
    table = _task_table(run, args.task)
    pair_features = _read_features(_features_path(manifest, args))
    report = loo_evaluate(manifest.languages, pair_features, table,
                          hp=Hyperparameters(), seed=manifest.seed,
                          label=args.label)
    _write(manifest.out / f"eval_{args.task}.json", report_to_json(report) + "\n")
    lines = ["language,map,ndcg"]
    for lang in sorted(report.per_language):
        metrics = report.per_language[lang]
        lines.append(f"{lang},{_percent(metrics['map'])},"
                     f"{_percent(metrics['ndcg'])}")
    lines.append(f"mean,{_percent(report.mean_map)},{_percent(report.mean_ndcg)}")
    _write(manifest.out / f"eval_{args.task}.csv", "\n".join(lines) + "\n")
    print(f"{args.task} MAP {_percent(report.mean_map)} "
          f"NDCG@3 {_percent(report.mean_ndcg)}")
    return 0


def cmd_ablate(args) -> int:
    manifest = _prepare(args)
    run = load_run(manifest)
    table = _task_table(run, args.task)
    cache = ArtifactCache(cache_location(manifest))
    base = _load_config(args.config) if args.config else \
        FeatureConfig(base="langrank")
    full = base.with_toggles(add=["All"])
    resources, _ = build_resources(run, full, cache=cache, jobs=args.jobs)
    toggles = [t.strip() for t in args.toggles.split(",") if t.strip()]
    reports = ablation_suite(base, toggles, manifest.languages, resources,
                             table, hp=Hyperparameters(), seed=manifest.seed)
    if args.groups:
        groups = [g.strip() for g in args.groups.split(",") if g.strip()]
        reports.extend(group_suite(groups, manifest.languages, resources,
                                   table, hp=Hyperparameters(),
                                   seed=manifest.seed))
    payload = json.dumps([r.to_dict() for r in reports], sort_keys=True,
                         indent=2)
    _write(manifest.out / f"ablation_{args.task}.json", payload + "\n")
    csv_text = reports_to_csv(reports)
    _write(manifest.out / f"ablation_{args.task}.csv", csv_text)
    print(csv_text, end="")
    return 0


def cmd_analyze(args) -> int:
    manifest = _prepare(args)
    run = load_run(manifest)
    cache = ArtifactCache(cache_location(manifest))
    out = manifest.out / "analysis"
    config = FeatureConfig(base="group:Pragmatic")
    resources, _ = build_resources(run, config, cache=cache, jobs=args.jobs)
    languages = manifest.languages

    # context-level scatter data
    lines = ["language,ptr,vtr"]
    for lang in languages:
        stats = resources.stats[lang]
        lines.append(f"{lang},{repr(stats.ptr)},{repr(stats.vtr)}")
    _write(out / "ptr_vtr.csv", "\n".join(lines) + "\n")

    # nearest-neighbor networks: esd-based vs syntactic-distance-based
    cohesion_rows = ["network,within_area_fraction"]
    esd_distances = {(a, b): v for (a, b), v in resources.esd_values.items()
                     if v is not None and a < b}
    networks = {}
    if len(esd_distances) == len(languages) * (len(languages) - 1) // 2:
        networks["esd"] = knn_network(esd_distances, k=2)
    syn_table = run.distances.get("syn")
    if syn_table is not None:
        syn_distances = {}
        complete = True
        for i, a in enumerate(languages):
            for b in languages[i + 1:]:
                value = syn_table.get(a, b)
                if value is None:
                    complete = False
                else:
                    syn_distances[(a, b)] = value
        if complete:
            networks["syn"] = knn_network(syn_distances, k=2)
    for name, network in sorted(networks.items()):
        _write(out / f"{name}_network.dot", network_to_dot(network, run.areas,
                                                           name=name))
        if run.areas is not None:
            fraction = within_area_fraction(network, run.areas)
            cohesion_rows.append(f"{name},{repr(fraction)}")
    _write(out / "cohesion.csv", "\n".join(cohesion_rows) + "\n")

    # correlation of each pragmatic feature with geographic distance
    geo_table = run.distances.get("geo")
    corr_rows = ["feature,pearson_r,n_pairs"]
    if geo_table is not None:
        feature_maps = {
            "lcr_pron": {p: v[0] for p, v in resources.lcr_values.items()},
            "lcr_verb": {p: v[1] for p, v in resources.lcr_values.items()},
            "ltq": resources.ltq_values,
            "esd": resources.esd_values,
        }
        for name in sorted(feature_maps):
            xs, ys = [], []
            for (tf, tg), value in sorted(feature_maps[name].items()):
                geo = geo_table.get(tf, tg)
                if value is None or geo is None:
                    continue
                xs.append(value)
                ys.append(geo)
            r = pearson(xs, ys) if len(xs) >= 3 else None
            rendered = "undefined" if r is None else repr(r)
            corr_rows.append(f"{name},{rendered},{len(xs)}")
    _write(out / "geo_correlation.csv", "\n".join(corr_rows) + "\n")

    # gold-MWE validation where gold lists exist
    gold_rows = ["language,bigram_pct,trigram_pct"]
    for lang in sorted(run.gold_mwes):
        mwes = language_mwes(run, lang, cache)
        bigram_pct, trigram_pct = mwe_gold_overlap(mwes, run.gold_mwes[lang])
        gold_rows.append(f"{lang},{bigram_pct:.1f},{trigram_pct:.1f}")
    _write(out / "mwe_gold.csv", "\n".join(gold_rows) + "\n")
    print(f"analysis artifacts under {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pragrank",
        description="pragmatic language features and transfer-language ranking")
    parser.add_argument("--verbose", action="store_true",
                        help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, manifest=True):
        if manifest:
            p.add_argument("--manifest", required=True,
                           help="path to the run manifest (TOML)")
        p.add_argument("--seed", type=int, default=None,
                       help="override the manifest seed")
        p.add_argument("--out", default=None, help="output directory override")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker threads for per-pair feature jobs")

    p = sub.add_parser("featurize", help="compute the feature CSV")
    common(p)
    p.add_argument("--config", default=None,
                   help="feature config file (default: langrank plus the "
                        "three pragmatic features)")
    p.set_defaults(func=cmd_featurize)

    p = sub.add_parser("train", help="train the ranking model for a task")
    common(p)
    p.add_argument("--task", required=True)
    p.add_argument("--features", default=None,
                   help="feature CSV (default: <out>/features.csv)")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("rank", help="rank transfer candidates for a target")
    p.add_argument("--model", required=True)
    p.add_argument("--features", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--candidates", default=None,
                   help="comma-separated candidate languages (default: all "
                        "transfer languages present for the target)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("evaluate", help="leave-one-out evaluation")
    common(p)
    p.add_argument("--task", required=True)
    p.add_argument("--features", default=None)
    p.add_argument("--label", default="run")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("ablate", help="feature addition/ablation suite")
    common(p)
    p.add_argument("--task", required=True)
    p.add_argument("--config", default=None,
                   help="base feature config (default: langrank)")
    p.add_argument("--toggles", default="LCR,LTQ,ESD")
    p.add_argument("--groups", default=None,
                   help="comma-separated feature groups to evaluate as well")
    p.set_defaults(func=cmd_ablate)

    p = sub.add_parser("analyze", help="intrinsic feature analyses")
    common(p)
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValidationError as err:
        print(json.dumps({"errors": err.errors}), file=sys.stderr)
        return 2
    except PragrankError as err:
        print(json.dumps({"errors": [str(err)]}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
