"""Pair-class combinatorics and homology-rank invariants of a Coxeter graph.

The commuting pairs P = {{s,t} : m(s,t) = 2} carry an equivalence: two pairs
sharing exactly one vertex are identified when their unshared vertices have a
finite odd label.  Counting torsion and non-torsion classes, even labels >= 4,
and independent cycles of the odd subgraph yields the ranks of the second
homology of the Coxeter group, the associated Artin group mod 2, and the
hyperplane-complement orbit space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import EmptyGraph, InvalidParameter
from .graph import (
    CoxeterGraph,
    connected_components,
    extend_family,
    is_even,
    is_finite,
    is_odd,
    odd_subgraph,
    underlying_graph,
)

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairPartition:
    """The commuting pairs of a graph, partitioned into equivalence classes.

    Blocks are ordered by their lexicographically smallest member pair and
    each block is internally sorted; ``torsion_flags[k]`` records whether some
    pair in block k has a common neighbor with both labels exactly 3.
    """

    pairs: tuple[Pair, ...]
    classes: tuple[tuple[Pair, ...], ...]
    torsion_flags: tuple[bool, ...]


@dataclass(frozen=True)
class InvariantProfile:
    p: int
    q1: int
    q2: int
    q3: int
    q: int
    n1: int
    n2: int
    n3: int
    n4: int
    h1_artin_free_rank: int

    @property
    def howlett_identity(self) -> bool:
        return -self.n1 + self.n2 + self.n3 + self.n4 == self.p + self.q

    @property
    def mod2_rank(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class AbelianDescriptor:
    """Finitely generated abelian group of shape Z^free_rank + Z2^torsion2_rank."""

    free_rank: int
    torsion2_rank: int


@dataclass(frozen=True)
class CorollaryConditions:
    all_torsion: bool
    odd_equals_gamma: bool
    tree: bool

    @property
    def applies(self) -> bool:
        return self.all_torsion and self.odd_equals_gamma and self.tree


@dataclass(frozen=True)
class HomologySummary:
    h2_orbit: AbelianDescriptor
    h2_coxeter: AbelianDescriptor
    h2_artin_mod2_rank: int
    corollary: CorollaryConditions
    h2_artin_integral: Optional[AbelianDescriptor]


class _UnionFind:
    """Disjoint sets with path compression and union by size."""

    def __init__(self, elements):
        self.parent = {x: x for x in elements}
        self.size = {x: 1 for x in elements}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]


def commuting_pairs(g: CoxeterGraph) -> tuple[Pair, ...]:
    """All unordered index pairs with label exactly 2, lexicographic."""
    n = len(g.vertices)
    return tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if g.label_ix(i, j) == 2
    )


def pair_classes(g: CoxeterGraph) -> PairPartition:
    """Partition of the commuting pairs under the odd-label relation.

    Pairs {a,x} and {a,y} merge whenever {x,y} is a finite-odd-labeled pair;
    every direct relation of the defining equivalence has this form.
    """
    pairs = commuting_pairs(g)
    pair_set = set(pairs)
    uf = _UnionFind(pairs)
    odd_pairs = [pair for pair, m in sorted(g.labels.items()) if is_odd(m)]
    for a in range(len(g.vertices)):
        for x, y in odd_pairs:
            first = (min(a, x), max(a, x))
            second = (min(a, y), max(a, y))
            if first in pair_set and second in pair_set:
                uf.union(first, second)
    blocks: dict[Pair, list[Pair]] = {}
    for pair in pairs:
        blocks.setdefault(uf.find(pair), []).append(pair)
    classes = tuple(sorted(tuple(sorted(block)) for block in blocks.values()))
    flags = tuple(_has_torsion_witness(g, block) for block in classes)
    return PairPartition(pairs, classes, flags)


def _has_torsion_witness(g: CoxeterGraph, block) -> bool:
    for s, t in block:
        for v in range(len(g.vertices)):
            if g.label_ix(s, v) == 3 and g.label_ix(t, v) == 3:
                return True
    return False


def invariant_profile(g: CoxeterGraph) -> InvariantProfile:
    partition = pair_classes(g)
    p = sum(partition.torsion_flags)
    q1 = len(partition.classes) - p
    q2 = sum(1 for m in g.labels.values() if is_even(m) and m >= 4)
    pg = odd_subgraph(g)
    components = len(connected_components(pg))
    q3 = len(pg.edges) - len(pg.vertices) + components
    n2 = sum(1 for m in g.labels.values() if is_finite(m))
    return InvariantProfile(
        p=p,
        q1=q1,
        q2=q2,
        q3=q3,
        q=q1 + q2 + q3,
        n1=len(g.vertices),
        n2=n2,
        n3=len(partition.classes),
        n4=components,
        h1_artin_free_rank=components,
    )


def homology_summary(g: CoxeterGraph) -> HomologySummary:
    """Rank descriptors for H2 of the orbit space, the Coxeter group, and the
    Artin group (mod 2 always; integrally only when the corollary conditions
    hold: every class torsion, every label odd, underlying graph acyclic)."""
    profile = invariant_profile(g)
    partition = pair_classes(g)
    whole = underlying_graph(g)
    acyclic = len(whole.edges) == len(whole.vertices) - len(connected_components(whole))
    conditions = CorollaryConditions(
        all_torsion=all(partition.torsion_flags),
        odd_equals_gamma=all(is_odd(m) for m in g.labels.values()),
        tree=acyclic,
    )
    integral = AbelianDescriptor(0, profile.p) if conditions.applies else None
    return HomologySummary(
        h2_orbit=AbelianDescriptor(profile.q, profile.p),
        h2_coxeter=AbelianDescriptor(0, profile.p + profile.q),
        h2_artin_mod2_rank=profile.p + profile.q,
        corollary=conditions,
        h2_artin_integral=integral,
    )


@dataclass(frozen=True)
class StabilityReport:
    """Mod-2 rank trajectory along the vertex-appending family."""

    trajectory: tuple[tuple[int, int], ...]
    stable: bool


def stability_scan(seed: CoxeterGraph, n_max: int) -> StabilityReport:
    """Ranks p+q of the family seed = G1, G2, ... up to ``n_max`` steps.

    ``stable`` is true when the rank is constant from step 3 on, the dimension
    consequence of the stability isomorphisms.
    """
    if not seed.vertices:
        raise EmptyGraph("stability scan needs a nonempty seed")
    if n_max < 4:
        raise InvalidParameter(f"n_max must be >= 4, got {n_max}")
    trajectory = []
    g = seed
    for step in range(1, n_max + 1):
        if step > 1:
            g = extend_family(g)
        trajectory.append((step, invariant_profile(g).mod2_rank))
    tail = [rank for step, rank in trajectory if step >= 3]
    return StabilityReport(tuple(trajectory), all(r == tail[0] for r in tail))
