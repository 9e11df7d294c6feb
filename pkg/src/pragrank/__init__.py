"""pragrank: pragmatic language-similarity features and transfer ranking.

The package computes three pragmatic features between languages (context
-level ratios, literal translation quality over mined multiword
expressions, emotion semantics distance over aligned embeddings), joins
them with classic typological/data features, and trains a boosted-tree
ranker that orders candidate transfer languages for a target language.
"""

from .errors import FormatError, PragrankError, ResourceError, ValidationError
from .ingest import (
    BilingualLexicon,
    CulturalAreaMap,
    DistanceTable,
    EmbeddingSet,
    EmotionLexicon,
    LanguageVectorSet,
    ParallelCorpus,
    RawCorpus,
    TaggedCorpus,
    WikiSizeTable,
    ZeroShotTable,
    parse_conllu,
    parse_embeddings,
    parse_raw_corpus,
    parse_tabular_resources,
)
from .pragmatic import (
    AlignmentMatrix,
    CorpusStats,
    EMOTION_CONCEPTS,
    HitStats,
    MweList,
    NGramTable,
    corpus_stats,
    esd,
    extract_mwes,
    lcr,
    ltq_normalize,
    ltq_raw,
    pmi3_score,
    procrustes_align,
)
from .baseline import (
    FeatureConfig,
    FeatureResources,
    PairFeatures,
    assemble_features,
    mtvec_pair,
    parse_feature_config,
    ttr_distance,
    word_overlap,
)
from .ranker import (
    Candidate,
    Hyperparameters,
    Ranking,
    RankingQuery,
    TreeEnsemble,
    build_query,
    ground_truth_ranking,
    load_ensemble,
    predict_scores,
    relevance_grades,
    save_ensemble,
    train_lambdarank,
)
from .evaluation import (
    EvalReport,
    ablation_suite,
    group_suite,
    loo_evaluate,
    map_at_k,
    ndcg_at_p,
)
from .analysis import (
    LanguageNetwork,
    knn_network,
    ltq_gold_correlation,
    mwe_gold_overlap,
    network_to_dot,
    pearson,
    within_area_fraction,
)

__version__ = "0.1.0"
