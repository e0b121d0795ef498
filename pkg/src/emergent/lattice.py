"""Commutants and the lattice of self-bicommutant subgroups.

The commutant of a subgroup is its centralizer in the global group.  A
subgroup equal to its own double commutant is the basic carrier of
subsystem structure; the set of all such subgroups forms a complete
lattice under inclusion, with meet given by intersection and join by the
double commutant of the union.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import (
    ElementNotInGroup,
    NotNested,
    NotOrthogonal,
    NotSelfBicommutant,
    ResourceLimit,
)
from .perms import (
    GlobalTheory,
    Perm,
    Subgroup,
    centralizer,
    require_subgroup,
    subgroup_closure,
)

DEFAULT_MAX_NODES = 4096


@lru_cache(maxsize=None)
def commutant(theory: GlobalTheory, sub: Subgroup) -> Subgroup:
    """Centralizer of ``sub`` inside the global group."""
    require_subgroup(theory, sub)
    return centralizer(theory.group, sub.members)


def bicommutant(theory: GlobalTheory, sub: Subgroup) -> Subgroup:
    return commutant(theory, commutant(theory, sub))


def is_self_bicommutant(theory: GlobalTheory, sub: Subgroup) -> bool:
    return bicommutant(theory, sub) == sub


def require_self_bicommutant(theory: GlobalTheory, sub: Subgroup) -> None:
    if not is_self_bicommutant(theory, sub):
        raise NotSelfBicommutant(
            f"subgroup of order {sub.order} is not its own double commutant"
        )


@lru_cache(maxsize=None)
def enumerate_self_bicommutant(
    theory: GlobalTheory, max_nodes: int = DEFAULT_MAX_NODES
) -> "SbcLattice":
    """All self-bicommutant subgroups of the global group.

    Every commutant is self-bicommutant, and every self-bicommutant
    subgroup is an intersection of single-element centralizers, so closing
    {centralizer(g)} under pairwise intersection enumerates the lattice
    exactly.  The full group and the trivial subgroup appear automatically
    as centralizer(identity) and the centre.
    """
    group = theory.group
    seeds = set()
    for g in group.elements:
        seeds.add(centralizer(group, (g,)))
    nodes = set(seeds)
    frontier = set(seeds)
    while frontier:
        new = set()
        for a in frontier:
            for b in seeds:
                c = Subgroup(group, tuple(sorted(a.member_set & b.member_set)))
                if c not in nodes:
                    nodes.add(c)
                    new.add(c)
                    if len(nodes) > max_nodes:
                        raise ResourceLimit(
                            f"lattice exceeds cap of {max_nodes} subgroups"
                        )
        frontier = new
    ordered = tuple(sorted(nodes, key=lambda s: (s.order, s.members)))
    return SbcLattice(theory, ordered)


@dataclass(frozen=True)
class SbcLattice:
    """The complete lattice of self-bicommutant subgroups, sorted by order."""

    theory: GlobalTheory
    nodes: tuple[Subgroup, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.theory, self.nodes)))

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.nodes)

    @cached_property
    def node_index(self) -> dict[Subgroup, int]:
        return {node: i for i, node in enumerate(self.nodes)}

    @cached_property
    def commutant_index(self) -> tuple[int, ...]:
        return tuple(
            self.node_index[commutant(self.theory, node)] for node in self.nodes
        )

    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(
            tuple(a.member_set <= b.member_set for b in self.nodes)
            for a in self.nodes
        )

    @cached_property
    def hasse_edges(self) -> tuple[tuple[int, int], ...]:
        """Covering pairs (i, j) with node i immediately below node j."""
        n = len(self.nodes)
        leq = self.leq
        edges = []
        for i in range(n):
            for j in range(n):
                if i == j or not leq[i][j]:
                    continue
                if any(
                    leq[i][k] and leq[k][j]
                    for k in range(n)
                    if k != i and k != j
                ):
                    continue
                edges.append((i, j))
        return tuple(edges)

    @property
    def bottom(self) -> Subgroup:
        return self.nodes[0]

    @property
    def top(self) -> Subgroup:
        return self.nodes[-1]


def intersection(theory: GlobalTheory, a: Subgroup, b: Subgroup) -> Subgroup:
    """Set intersection of two subgroups, with no lattice preconditions."""
    require_subgroup(theory, a)
    require_subgroup(theory, b)
    return Subgroup(theory.group, tuple(sorted(a.member_set & b.member_set)))


def meet(theory: GlobalTheory, a: Subgroup, b: Subgroup) -> Subgroup:
    """Intersection of two lattice nodes, again a node."""
    require_self_bicommutant(theory, a)
    require_self_bicommutant(theory, b)
    return intersection(theory, a, b)


def join(theory: GlobalTheory, a: Subgroup, b: Subgroup) -> Subgroup:
    """Smallest self-bicommutant subgroup containing both inputs.

    Computed as the commutant of the intersection of commutants, which
    also realises the De Morgan dual of the meet.
    """
    require_self_bicommutant(theory, a)
    require_self_bicommutant(theory, b)
    return commutant(
        theory, intersection(theory, commutant(theory, a), commutant(theory, b))
    )


def is_orthogonal(theory: GlobalTheory, a: Subgroup, b: Subgroup) -> bool:
    """Whether every element of ``a`` commutes with every element of ``b``."""
    forward = b.is_subset_of(commutant(theory, a))
    backward = a.is_subset_of(commutant(theory, b))
    assert forward == backward
    return forward


def is_orthocomplemented(theory: GlobalTheory, sub: Subgroup) -> bool:
    """Whether the subgroup meets its commutant only in the identity."""
    return meet(theory, sub, commutant(theory, sub)).is_trivial


def is_orthocomplementary(theory: GlobalTheory, a: Subgroup, b: Subgroup) -> bool:
    """Whether each input is the other's complement inside their join."""
    if not is_orthogonal(theory, a, b):
        return False
    j = join(theory, a, b)
    if meet(theory, commutant(theory, a), j) != b:
        return False
    return meet(theory, commutant(theory, b), j) == a


def check_orthomodular(theory: GlobalTheory, a: Subgroup, b: Subgroup) -> bool:
    """Test the orthomodular identity a v (a' ^ b) == b for nested a <= b."""
    require_self_bicommutant(theory, a)
    require_self_bicommutant(theory, b)
    if not a.is_subset_of(b):
        raise NotNested("orthomodularity is only tested for nested subgroups")
    return join(theory, a, meet(theory, commutant(theory, a), b)) == b


def relative_commutant(theory: GlobalTheory, a: Subgroup, b: Subgroup) -> Subgroup:
    """Commutant of ``a`` intersected with ``b``, for a inside b."""
    if not a.is_subset_of(b):
        raise NotNested("relative commutant requires the first subgroup inside the second")
    return meet(theory, commutant(theory, a), b)


@lru_cache(maxsize=None)
def product_set(theory: GlobalTheory, a: Subgroup, b: Subgroup) -> Subgroup:
    """The set {h k : h in a, k in b}, a subgroup when the inputs commute."""
    if not is_orthogonal(theory, a, b):
        raise NotOrthogonal("the product set is only formed for commuting subgroups")
    members = sorted({h * k for h in a.members for k in b.members})
    result = Subgroup(theory.group, tuple(members))
    assert result == subgroup_closure(theory.group, members)
    return result


def tensor_element(
    theory: GlobalTheory, a: Subgroup, b: Subgroup, h: Perm, k: Perm
) -> Perm:
    """The joint transformation h k of commuting local transformations."""
    if not is_orthogonal(theory, a, b):
        raise NotOrthogonal("joint transformations require commuting subgroups")
    if h not in a.member_set:
        raise ElementNotInGroup(f"{h!r} is not in the first subgroup")
    if k not in b.member_set:
        raise ElementNotInGroup(f"{k!r} is not in the second subgroup")
    return h * k
