"""Baseline ranking features and per-pair feature assembly.

The scalar slots follow the classic transfer-ranking feature set (dataset
sizes, type-token ratios, word overlap, six typological distance facets)
plus the three pragmatic features, a pretraining-corpus size, and an
optional dense language-vector pair representation.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ResourceError
from .ingest import DistanceTable, LanguageVectorSet, WikiSizeTable
from .pragmatic import CorpusStats

logger = logging.getLogger(__name__)

# Canonical slot order; every serialized feature vector follows it.
CANONICAL_SLOTS = (
    "tf_size", "tg_size", "ratio_size",
    "ttr_tf", "ttr_tg", "ttr_dist",
    "word_overlap",
    "geo", "gen", "inv", "syn", "phon", "feat",
    "lcr_pron", "lcr_verb", "ltq", "esd",
    "wiki_size_tf",
)

# The 13 baseline slots: the type-token ratio expands into per-side values
# plus a distance, alongside sizes, overlap, and six facet distances.
LANGRANK_SLOTS = (
    "tf_size", "tg_size", "ratio_size",
    "ttr_tf", "ttr_tg", "ttr_dist",
    "word_overlap",
    "geo", "gen", "inv", "syn", "phon", "feat",
)

PRAGMATIC_ADDON_SLOTS = ("lcr_pron", "lcr_verb", "ltq", "esd")

# Feature groups for group-wise runs. geo participates in both the
# Typology selection and the Geography selection; gen belongs to no group.
GROUP_SLOTS = {
    "Pretrain-specific": ("wiki_size_tf",),
    "Data-specific": ("tf_size", "tg_size", "ratio_size"),
    "Typology": ("geo", "syn", "feat", "phon", "inv"),
    "Geography": ("geo",),
    "Orthography": ("word_overlap",),
    "Pragmatic": ("ttr_tf", "ttr_tg", "ttr_dist",
                  "lcr_pron", "lcr_verb", "ltq", "esd"),
}

# Canonical group tag per slot (geo's tag is Geography even though the
# Typology selection also uses it; gen carries no tag).
SLOT_GROUP_TAG = {
    "tf_size": "Data-specific", "tg_size": "Data-specific",
    "ratio_size": "Data-specific",
    "ttr_tf": "Pragmatic", "ttr_tg": "Pragmatic", "ttr_dist": "Pragmatic",
    "word_overlap": "Orthography",
    "geo": "Geography", "gen": None, "inv": "Typology", "syn": "Typology",
    "phon": "Typology", "feat": "Typology",
    "lcr_pron": "Pragmatic", "lcr_verb": "Pragmatic",
    "ltq": "Pragmatic", "esd": "Pragmatic",
    "wiki_size_tf": "Pretrain-specific",
}

# Aliases accepted in config add/remove lists and ablation toggles.
SLOT_ALIASES = {
    "lcr": ("lcr_pron", "lcr_verb"),
    "ltq": ("ltq",),
    "esd": ("esd",),
    "all": PRAGMATIC_ADDON_SLOTS,
    "prag": PRAGMATIC_ADDON_SLOTS,
}


def resolve_group(name: str) -> str:
    """Case-insensitive lookup of a feature group's canonical name."""
    for group in GROUP_SLOTS:
        if group.lower() == name.strip().lower():
            return group
    raise ResourceError(f"unknown feature group {name!r}")


def expand_slot_names(names) -> list[str]:
    """Resolve slot names and aliases (LCR, LTQ, ESD, All) to real slots."""
    out: list[str] = []
    for name in names:
        key = name.strip()
        if not key:
            continue
        lowered = key.lower()
        if lowered in SLOT_ALIASES and key.lower() not in CANONICAL_SLOTS:
            slots = SLOT_ALIASES[lowered]
        elif lowered in CANONICAL_SLOTS:
            slots = (lowered,)
        else:
            raise ResourceError(f"unknown feature slot or alias {name!r}")
        for slot in slots:
            if slot not in out:
                out.append(slot)
    return out


@dataclass(frozen=True)
class FeatureConfig:
    """Which feature slots are active, plus the dense-vector switch."""

    base: str                      # "langrank", "mtvec", or "group:<name>"
    add: tuple[str, ...] = ()
    remove: tuple[str, ...] = ()

    def label(self) -> str:
        label = {"langrank": "LangRank", "mtvec": "MTVec"}.get(self.base)
        if label is None:
            label = (resolve_group(self.base.split(":", 1)[1])
                     if self.base.startswith("group:") else self.base)
        if set(self.add) >= set(PRAGMATIC_ADDON_SLOTS):
            label += "+All"
            extra = [s for s in self.add if s not in PRAGMATIC_ADDON_SLOTS]
        else:
            extra = list(self.add)
        for slot in extra:
            label += f"+{slot}"
        for slot in self.remove:
            label += f" -{slot}"
        return label

    @property
    def use_mtvec(self) -> bool:
        return self.base == "mtvec"

    def slots(self) -> tuple[str, ...]:
        if self.base == "langrank":
            base_slots = list(LANGRANK_SLOTS)
        elif self.base == "mtvec":
            base_slots = []
        elif self.base.startswith("group:"):
            base_slots = list(GROUP_SLOTS[resolve_group(self.base.split(":", 1)[1])])
        else:
            raise ResourceError(f"unknown config base {self.base!r}")
        for slot in self.add:
            if slot not in base_slots:
                base_slots.append(slot)
        removed = set(self.remove)
        kept = tuple(s for s in base_slots if s not in removed)
        return tuple(s for s in CANONICAL_SLOTS if s in kept)

    def with_toggles(self, add=(), remove=()) -> "FeatureConfig":
        return FeatureConfig(
            base=self.base,
            add=tuple(dict.fromkeys([*self.add, *expand_slot_names(add)])),
            remove=tuple(dict.fromkeys([*self.remove, *expand_slot_names(remove)])),
        )


def parse_feature_config(text: str) -> FeatureConfig:
    """Parse the key=value config format (keys: base, add, remove)."""
    base = "langrank"
    add: list[str] = []
    remove: list[str] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ResourceError(f"config line {lineno}: expected key=value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "base":
            base = value.lower()
        elif key == "add":
            add.extend(expand_slot_names(value.split(",")))
        elif key == "remove":
            remove.extend(expand_slot_names(value.split(",")))
        else:
            raise ResourceError(f"config line {lineno}: unknown key {key!r}")
    config = FeatureConfig(base=base, add=tuple(add), remove=tuple(remove))
    config.slots()  # validate base/group names eagerly
    return config


def serialize_feature_config(config: FeatureConfig) -> str:
    lines = [f"base={config.base}"]
    if config.add:
        lines.append("add=" + ",".join(config.add))
    if config.remove:
        lines.append("remove=" + ",".join(config.remove))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Individual feature computations
# ---------------------------------------------------------------------------

def word_overlap(vocab_a: set[str], vocab_b: set[str]):
    """|A & B| / (|A| + |B|); None when either vocabulary is empty."""
    if not vocab_a or not vocab_b:
        return None
    return len(vocab_a & vocab_b) / (len(vocab_a) + len(vocab_b))


def ttr_distance(ttr_tf: float, ttr_tg: float):
    """(1 - ttr_tf/ttr_tg)^2; None when the target ratio is zero."""
    if ttr_tg == 0:
        return None
    return (1.0 - ttr_tf / ttr_tg) ** 2


def mtvec_pair(vectors: LanguageVectorSet, transfer: str, target: str) -> np.ndarray:
    """Concatenated [v_tf ; v_tg] pair representation (length 2 * dim)."""
    for lang in (transfer, target):
        if lang not in vectors.vectors:
            raise ResourceError(f"no language vector for {lang!r}")
    return np.concatenate([vectors.vectors[transfer], vectors.vectors[target]])


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------

@dataclass
class PairFeatures:
    """Named feature values for one (transfer, target) pair.

    `values` holds only the active slots; a present key with value None is
    an explicitly missing measurement. `mtvec` is the optional dense pair
    representation.
    """

    transfer: str
    target: str
    values: dict[str, float | None] = field(default_factory=dict)
    mtvec: np.ndarray | None = None

    def group_of(self, slot: str):
        return SLOT_GROUP_TAG.get(slot)


@dataclass
class FeatureResources:
    """Everything assemble_features may draw on; all fields optional.

    Pragmatic per-pair values (lcr/ltq/esd) arrive precomputed because
    they depend on heavyweight intermediates the pipeline caches.
    """

    sizes: dict[str, float] = field(default_factory=dict)
    stats: dict[str, CorpusStats] = field(default_factory=dict)
    vocabs: dict[str, set[str]] = field(default_factory=dict)
    distances: dict[str, DistanceTable] = field(default_factory=dict)
    lcr_values: dict[tuple[str, str], tuple[float | None, float | None]] = \
        field(default_factory=dict)
    ltq_values: dict[tuple[str, str], float | None] = field(default_factory=dict)
    esd_values: dict[tuple[str, str], float | None] = field(default_factory=dict)
    wiki_sizes: WikiSizeTable | None = None
    mtvec: LanguageVectorSet | None = None


def _slot_value(slot: str, transfer: str, target: str,
                res: FeatureResources):
    """Value of one slot for one ordered pair; None when unavailable."""
    pair = (transfer, target)
    if slot == "tf_size":
        return res.sizes.get(transfer)
    if slot == "tg_size":
        return res.sizes.get(target)
    if slot == "ratio_size":
        tf_size, tg_size = res.sizes.get(transfer), res.sizes.get(target)
        if tf_size is None or tg_size is None or tg_size == 0:
            return None
        return tf_size / tg_size
    if slot == "ttr_tf":
        stats = res.stats.get(transfer)
        return stats.ttr if stats else None
    if slot == "ttr_tg":
        stats = res.stats.get(target)
        return stats.ttr if stats else None
    if slot == "ttr_dist":
        stats_tf, stats_tg = res.stats.get(transfer), res.stats.get(target)
        if stats_tf is None or stats_tg is None:
            return None
        return ttr_distance(stats_tf.ttr, stats_tg.ttr)
    if slot == "word_overlap":
        vocab_a, vocab_b = res.vocabs.get(transfer), res.vocabs.get(target)
        if vocab_a is None or vocab_b is None:
            return None
        return word_overlap(vocab_a, vocab_b)
    if slot in ("geo", "gen", "inv", "syn", "phon", "feat"):
        table = res.distances.get(slot)
        return table.get(transfer, target) if table else None
    if slot == "lcr_pron":
        value = res.lcr_values.get(pair)
        return value[0] if value else None
    if slot == "lcr_verb":
        value = res.lcr_values.get(pair)
        return value[1] if value else None
    if slot == "ltq":
        return res.ltq_values.get(pair)
    if slot == "esd":
        return res.esd_values.get(pair)
    if slot == "wiki_size_tf":
        if res.wiki_sizes is None or transfer not in res.wiki_sizes.counts:
            return None
        return math.log10(res.wiki_sizes.counts[transfer])
    raise ResourceError(f"unknown feature slot {slot!r}")


def assemble_features(pair: tuple[str, str], resources: FeatureResources,
                      config: FeatureConfig) -> PairFeatures:
    """Deterministic PairFeatures for one ordered pair under a config.

    A selected slot whose backing resource is absent stays missing (with a
    warning) rather than failing the run.
    """
    transfer, target = pair
    values: dict[str, float | None] = {}
    for slot in config.slots():
        value = _slot_value(slot, transfer, target, resources)
        if value is None:
            logger.warning("feature %s missing for pair (%s, %s)",
                           slot, transfer, target)
        values[slot] = value
    mtvec = None
    if config.use_mtvec:
        if resources.mtvec is None:
            raise ResourceError("config requires language vectors, none loaded")
        mtvec = mtvec_pair(resources.mtvec, transfer, target)
    return PairFeatures(transfer=transfer, target=target, values=values,
                        mtvec=mtvec)
