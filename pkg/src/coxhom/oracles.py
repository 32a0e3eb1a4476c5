"""Brute-force oracles and generators backing the test suite and `check`.

Each oracle reimplements a quantity by a structurally different route: pair
classes by fixed-point closure instead of union-find, cycle rank by exact
fraction elimination instead of component counting, the dihedral reference
straight from the classified homology of dihedral groups.  Agreement between
routes is evidence, not tautology.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chains import boundary_matrix
from .errors import InvalidSpec
from .graph import INFINITY, CoxeterGraph, Label, PlainGraph, build_graph, is_odd
from .invariants import PairPartition, Pair, _has_torsion_witness

LABEL_SUPPORT: tuple[Label, ...] = (2, 3, 4, 5, 6, INFINITY)


def naive_pair_closure(g: CoxeterGraph) -> PairPartition:
    """Transitive closure of the direct pair relation by repeated merging."""
    n = len(g.vertices)
    pairs = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if g.label_ix(i, j) == 2
    )
    blocks = [{pair} for pair in pairs]
    changed = True
    while changed:
        changed = False
        for a in range(len(blocks)):
            for b in range(a + 1, len(blocks)):
                if any(
                    _directly_related(g, x, y) for x in blocks[a] for y in blocks[b]
                ):
                    blocks[a] |= blocks[b]
                    del blocks[b]
                    changed = True
                    break
            if changed:
                break
    classes = tuple(sorted(tuple(sorted(block)) for block in blocks))
    flags = tuple(_has_torsion_witness(g, block) for block in classes)
    return PairPartition(pairs, classes, flags)


def _directly_related(g: CoxeterGraph, a: Pair, b: Pair) -> bool:
    # All matchings of the ordered rule: equal first letters, odd label on the
    # unshared letters.  m(x, x) = 1 only arises when the pairs coincide.
    for s, t in (a, (a[1], a[0])):
        for s2, t2 in (b, (b[1], b[0])):
            if s == s2 and (t == t2 or is_odd(g.label_ix(t, t2))):
                return True
    return False


def rational_cycle_rank(pg: PlainGraph) -> int:
    """#edges minus the rank of the boundary matrix over the rationals."""
    matrix = [[Fraction(x) for x in row] for row in boundary_matrix(pg)]
    return len(pg.edges) - _fraction_rank(matrix)


def _fraction_rank(matrix: list[list[Fraction]]) -> int:
    if not matrix:
        return 0
    rank = 0
    cols = len(matrix[0])
    for col in range(cols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = 1 / matrix[rank][col]
        matrix[rank] = [x * inv for x in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


def dihedral_h2_reference(m: Label) -> int:
    """Z2-rank of the second integral homology of the dihedral group of order 2m.

    Even m gives rank 1, odd m rank 0; the infinite label gives rank 0 (no
    finite edge, no commuting pair, no odd cycle).
    """
    if m == INFINITY:
        return 0
    if m < 2:
        raise InvalidSpec(f"dihedral parameter must be >= 2 or INFINITY, got {m}")
    return 1 if m % 2 == 0 else 0


DEFAULT_WEIGHTS: tuple[float, ...] = (3.0, 3.0, 1.0, 1.0, 1.0, 1.0)


@dataclass(frozen=True)
class RandomGraphSpec:
    """Seeded recipe for a random Coxeter graph; equal specs give equal graphs."""

    seed: int
    vertex_count: int
    weights: tuple[float, ...] = DEFAULT_WEIGHTS


def random_coxeter_graph(spec: RandomGraphSpec) -> CoxeterGraph:
    if not 1 <= spec.vertex_count <= 10:
        raise InvalidSpec(f"vertex_count must be in 1..10, got {spec.vertex_count}")
    if len(spec.weights) != len(LABEL_SUPPORT):
        raise InvalidSpec(f"need {len(LABEL_SUPPORT)} weights, one per label in {LABEL_SUPPORT}")
    if min(spec.weights) < 0 or sum(spec.weights) <= 0:
        raise InvalidSpec("weights must be nonnegative with positive sum")
    rng = random.Random(spec.seed)
    names = [f"v{i}" for i in range(1, spec.vertex_count + 1)]
    edges = []
    for i in range(spec.vertex_count):
        for j in range(i + 1, spec.vertex_count):
            m = rng.choices(LABEL_SUPPORT, weights=spec.weights)[0]
            if m != 2:
                edges.append((names[i], names[j], m))
    return build_graph(names, edges)


def catalog_sample() -> tuple[str, ...]:
    """A concrete slice of every catalog family, used by corpus-style checks."""
    names = [f"A{n}" for n in range(1, 9)]
    names += [f"B{n}" for n in range(2, 9)]
    names += [f"D{n}" for n in range(4, 9)]
    names += ["E6", "E7", "E8", "F4", "H3", "H4"]
    names += [f"I2({m})" for m in range(3, 9)] + ["I2(inf)"]
    names += [f"~A{n}" for n in range(2, 8)]
    names += [f"~B{n}" for n in range(3, 8)]
    names += [f"~C{n}" for n in range(2, 8)]
    names += [f"~D{n}" for n in range(4, 9)]
    names += ["~E6", "~E7", "~E8"]
    return tuple(names)


def consistency_report(g: CoxeterGraph) -> list[tuple[str, bool, str]]:
    """Every internal identity on one graph, as (name, passed, detail) rows."""
    from .chains import fundamental_cycle_basis, gf2_rank, mod2_reduce, boundary
    from .graph import odd_subgraph
    from .invariants import invariant_profile, pair_classes
    from .words import abelianize, in_commutator_subgroup, omega_sets, project_word

    profile = invariant_profile(g)
    pg = odd_subgraph(g)
    basis = fundamental_cycle_basis(pg)
    reduced = mod2_reduce(basis)
    rows: list[tuple[str, bool, str]] = []

    rows.append((
        "howlett_identity",
        profile.howlett_identity,
        f"-n1+n2+n3+n4 = {-profile.n1 + profile.n2 + profile.n3 + profile.n4}, p+q = {profile.p + profile.q}",
    ))
    rows.append((
        "howlett_term_identities",
        profile.n3 == profile.p + profile.q1
        and profile.n1 == len(pg.vertices)
        and profile.n2 == profile.q2 + len(pg.edges)
        and profile.n4 == profile.h1_artin_free_rank,
        f"n1..n4 = {profile.n1},{profile.n2},{profile.n3},{profile.n4}",
    ))
    agree = pair_classes(g) == naive_pair_closure(g)
    rows.append(("pair_classes_vs_naive_closure", agree, f"{profile.n3} classes"))
    rational = rational_cycle_rank(pg)
    gf2_dim = len(pg.edges) - gf2_rank(boundary_matrix(pg))
    rows.append((
        "cycle_rank_oracles",
        profile.q3 == rational == gf2_dim == len(basis.basis),
        f"q3 = {profile.q3}, rational = {rational}, gf2 = {gf2_dim}",
    ))
    rows.append((
        "fundamental_cycles_bound",
        all(not any(boundary(chain).coefficients) for chain in basis.basis)
        and gf2_rank([c.bits for c in reduced]) == profile.q3,
        f"{len(basis.basis)} cycles",
    ))
    for flavor in ("artin", "coxeter"):
        omegas = omega_sets(g, flavor)
        rows.append((
            f"omega_counts_{flavor}",
            len(omegas.omega1) == profile.p + profile.q1
            and len(omegas.omega2) == profile.q2
            and len(omegas.omega3) == profile.q3
            and omegas.total == profile.p + profile.q,
            f"|1|,|2|,|3| = {len(omegas.omega1)},{len(omegas.omega2)},{len(omegas.omega3)}",
        ))
        rows.append((
            f"omega_abelianization_{flavor}",
            all(
                in_commutator_subgroup(w)
                and not any(abelianize(w, len(g.vertices)))
                for w in omegas.omega1 + omegas.omega2 + omegas.omega3
            ),
            f"{omegas.total} words",
        ))
    artin = omega_sets(g, "artin")
    coxeter = omega_sets(g, "coxeter")
    rows.append((
        "omega_projection",
        tuple(project_word(w) for w in artin.omega1) == coxeter.omega1
        and tuple(project_word(w) for w in artin.omega2) == coxeter.omega2
        and len(artin.omega3) == len(coxeter.omega3),
        "projection maps omega sets onto omega sets",
    ))
    return rows
