"""Intrinsic feature analyses: language networks, correlations, gold MWEs."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ResourceError
from .ingest import CulturalAreaMap
from .pragmatic import MweList, NGram


@dataclass
class LanguageNetwork:
    """Undirected nearest-neighbor graph over languages."""

    nodes: list[str]
    edges: set[tuple[str, str]]  # each edge stored as a sorted pair


def knn_network(distances: dict[tuple[str, str], float], k: int = 2) -> LanguageNetwork:
    """Connect every language to its k nearest others.

    Mutual nearest neighbors yield a single undirected edge. Distance ties
    break by ascending language id, so the graph is independent of input
    iteration order.
    """
    nodes = sorted({lang for pair in distances for lang in pair})
    if k >= len(nodes):
        raise ResourceError(f"k={k} must be smaller than the node count {len(nodes)}")

    def distance(a: str, b: str) -> float:
        if (a, b) in distances:
            return distances[(a, b)]
        if (b, a) in distances:
            return distances[(b, a)]
        raise ResourceError(f"no distance for pair ({a}, {b})")

    edges: set[tuple[str, str]] = set()
    for node in nodes:
        others = sorted((lang for lang in nodes if lang != node),
                        key=lambda lang: (distance(node, lang), lang))
        for neighbor in others[:k]:
            edges.add(tuple(sorted((node, neighbor))))
    return LanguageNetwork(nodes=nodes, edges=edges)


def within_area_fraction(network: LanguageNetwork, areas: CulturalAreaMap) -> float:
    """Fraction of edges whose endpoints share a cultural area."""
    for node in network.nodes:
        if node not in areas.areas:
            raise ResourceError(f"no cultural area for language {node!r}")
    if not network.edges:
        return 0.0
    within = sum(1 for a, b in network.edges
                 if areas.areas[a] == areas.areas[b])
    return within / len(network.edges)


def network_to_dot(network: LanguageNetwork, areas: CulturalAreaMap | None = None,
                   name: str = "languages") -> str:
    """Graphviz DOT rendering; nodes colored by area when areas are given."""
    palette = ["#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854",
               "#ffd92f", "#e5c494", "#b3b3b3"]
    lines = [f"graph {name} {{", "  node [style=filled];"]
    area_colors: dict[str, str] = {}
    if areas is not None:
        labels = sorted({areas.areas[n] for n in network.nodes if n in areas.areas})
        area_colors = {label: palette[i % len(palette)]
                       for i, label in enumerate(labels)}
    for node in network.nodes:
        attrs = ""
        if areas is not None and node in areas.areas:
            area = areas.areas[node]
            attrs = f' [fillcolor="{area_colors[area]}", comment="{area}"]'
        lines.append(f'  "{node}"{attrs};')
    for a, b in sorted(network.edges):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def pearson(x: list[float], y: list[float]):
    """Product-moment correlation; None when either side has no variance."""
    if len(x) != len(y):
        raise ResourceError("input lists must have equal length")
    n = len(x)
    if n < 3:
        raise ResourceError(f"need at least 3 points, got {n}")
    mean_x = sum(x) / n
    mean_y = sum(y) / n
    dx = [xi - mean_x for xi in x]
    dy = [yi - mean_y for yi in y]
    var_x = sum(d * d for d in dx)
    var_y = sum(d * d for d in dy)
    if var_x == 0.0 or var_y == 0.0:
        return None
    cov = sum(a * b for a, b in zip(dx, dy))
    return cov / math.sqrt(var_x * var_y)


def mwe_gold_overlap(pmi_mwes: MweList, gold: set[tuple[str, ...]]):
    """Percent of mined bigrams/trigrams covered by a gold phrase list.

    A mined n-gram counts as in-gold when it equals a gold phrase or is a
    contiguous sub-sequence of one (lowercased token match).
    """
    if not gold:
        raise ResourceError("gold phrase list is empty")
    subsequences: set[NGram] = set()
    for phrase in gold:
        tokens = tuple(t.lower() for t in phrase)
        for order in (2, 3):
            for i in range(len(tokens) - order + 1):
                subsequences.add(tokens[i:i + order])

    def percent(order: int) -> float:
        mined = pmi_mwes.by_order.get(order, [])
        if not mined:
            return 0.0
        covered = sum(1 for gram, _ in mined if gram in subsequences)
        return 100.0 * covered / len(mined)

    return percent(2), percent(3)


def ltq_gold_correlation(ltq_pmi: dict[str, float], ltq_gold: dict[str, float]):
    """Pearson correlation between PMI-based and gold-based scores."""
    if set(ltq_pmi) != set(ltq_gold):
        raise ResourceError("the two score maps cover different candidates")
    keys = sorted(ltq_pmi)
    return pearson([ltq_pmi[k] for k in keys], [ltq_gold[k] for k in keys])
