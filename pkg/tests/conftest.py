from __future__ import annotations

import random

from coxhom.graph import CoxeterGraph, build_graph
from coxhom.oracles import RandomGraphSpec, random_coxeter_graph


def corpus_graphs(count: int, max_vertices: int = 8, base_seed: int = 0) -> list[CoxeterGraph]:
    """Deterministic corpus: seeds base_seed..base_seed+count-1, sizes cycling 1..max_vertices."""
    graphs = []
    for i in range(count):
        spec = RandomGraphSpec(seed=base_seed + i, vertex_count=(i % max_vertices) + 1)
        graphs.append(random_coxeter_graph(spec))
    return graphs


def permuted_copy(g: CoxeterGraph, rng: random.Random) -> CoxeterGraph:
    """Isomorphic graph with the vertex sequence shuffled (names kept)."""
    order = list(range(len(g.vertices)))
    rng.shuffle(order)
    names = [g.vertices[i] for i in order]
    edges = [(g.vertices[i], g.vertices[j], m) for (i, j), m in g.labels.items()]
    return build_graph(names, edges)
