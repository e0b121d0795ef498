"""Finite permutation groups acting on {0, ..., n-1}.

Permutations are image tuples: ``p[i]`` is where ``p`` sends point ``i``.
Composition acts left-to-right on states, ``(g * h)(p) = g(h(p))``, so the
product tuple is ``g`` applied to every entry of ``h``.

Groups store their full element list in a canonical sorted order; all
derived structures (subgroup lattices, orbits, state sets) inherit
determinism from that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DegreeMismatch,
    ElementNotInGroup,
    InvalidTheory,
    NotCentreless,
    NotFaithful,
    NotTransitive,
    PointOutOfRange,
    ResourceLimit,
    SubgroupNotInTheory,
)

DEFAULT_MAX_ORDER = 250_000


class Perm(tuple):
    """A permutation of {0, ..., n-1}, stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]) -> "Perm":
        self = tuple.__new__(cls, images)
        n = len(self)
        seen = [False] * n
        for x in self:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise DegreeMismatch(f"not a permutation of 0..{n - 1}: {tuple(self)}")
            seen[x] = True
        return self

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Perm") -> "Perm":
        # Apply other first, then self; entries of a valid product need no
        # re-validation, so bypass __new__.
        if len(self) != len(other):
            raise DegreeMismatch("cannot compose permutations of different degrees")
        return tuple.__new__(Perm, map(self.__getitem__, other))

    def __call__(self, point: int) -> int:
        return self[point]

    def inverse(self) -> "Perm":
        images = [0] * len(self)
        for i, x in enumerate(self):
            images[x] = i
        return tuple.__new__(Perm, images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return tuple.__new__(Perm, range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Perm":
        images = list(range(degree))
        for cycle in cycles:
            for pos, point in enumerate(cycle):
                if not 0 <= point < degree:
                    raise PointOutOfRange(f"cycle point {point} outside 0..{degree - 1}")
                images[point] = cycle[(pos + 1) % len(cycle)]
        return cls(images)

    def __repr__(self) -> str:
        return f"Perm{tuple(self)}"


def generate_group(
    degree: int,
    generators: Iterable[Sequence[int]],
    max_order: int = DEFAULT_MAX_ORDER,
) -> "FiniteGroup":
    """Close a generating set under composition (breadth-first)."""
    gens = []
    for g in generators:
        p = g if isinstance(g, Perm) else Perm(g)
        if p.degree != degree:
            raise DegreeMismatch(f"generator degree {p.degree} != {degree}")
        gens.append(p)
    identity = Perm.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                p = g * h
                if p not in elements:
                    elements.add(p)
                    new.append(p)
                    if len(elements) > max_order:
                        raise ResourceLimit(
                            f"group order exceeds cap of {max_order} elements"
                        )
        frontier = new
    return FiniteGroup(degree, tuple(sorted(elements)))


@dataclass(frozen=True)
class FiniteGroup:
    """A finite permutation group with a canonical sorted element list."""

    degree: int
    elements: tuple[Perm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.degree, self.elements)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def __contains__(self, p: object) -> bool:
        return p in self.element_set

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def subgroup(self, members: Iterable[Perm]) -> "Subgroup":
        mems = tuple(sorted(set(members)))
        for m in mems:
            if m not in self.element_set:
                raise ElementNotInGroup(f"{m!r} is not in the parent group")
        return Subgroup(self, mems)

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.elements)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a fixed parent group, as a sorted member tuple."""

    parent: FiniteGroup
    members: tuple[Perm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.parent, self.members)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent == other.parent and self.members == other.members

    @cached_property
    def member_set(self) -> frozenset[Perm]:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def __contains__(self, p: object) -> bool:
        return p in self.member_set

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def is_subset_of(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set


def subgroup_closure(parent: FiniteGroup, seed: Iterable[Perm]) -> Subgroup:
    """Smallest subgroup of ``parent`` containing every element of ``seed``."""
    gens = list(seed)
    for g in gens:
        if g not in parent.element_set:
            raise ElementNotInGroup(f"{g!r} is not in the parent group")
    elements = {parent.identity}
    frontier = [parent.identity]
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                p = g * h
                if p not in elements:
                    elements.add(p)
                    new.append(p)
        frontier = new
    return Subgroup(parent, tuple(sorted(elements)))


def _reduce_generators(members: Sequence[Perm], degree: int) -> list[Perm]:
    # Greedy generating subset: centralizing a few generators is equivalent
    # to centralizing the whole subgroup and far cheaper to test.
    gens: list[Perm] = []
    span = {Perm.identity(degree)}
    for m in members:
        if m in span:
            continue
        gens.append(m)
        frontier = list(span)
        while frontier:
            new = []
            for h in frontier:
                for g in gens:
                    p = g * h
                    if p not in span:
                        span.add(p)
                        new.append(p)
            frontier = new
        if len(span) == len(members):
            break
    return gens


def centralizer(group: FiniteGroup, subset: Iterable[Perm]) -> Subgroup:
    """All elements of ``group`` commuting with every element of ``subset``."""
    items = list(subset)
    gens = _reduce_generators(sorted(set(items)), group.degree) if items else []
    if not gens:
        return group.full_subgroup()
    members = tuple(
        g for g in group.elements if all(g * s == s * g for s in gens)
    )
    return Subgroup(group, members)


def centre(group: FiniteGroup) -> Subgroup:
    return centralizer(group, group.elements)


def orbit(elements: Iterable[Perm], point: int) -> frozenset[int]:
    """Orbit of ``point`` under a set of permutations closed under product."""
    return frozenset(p[point] for p in elements)


@dataclass(frozen=True)
class GlobalTheory:
    """A centreless group acting transitively and faithfully on points.

    The point set is {0, ..., degree-1}; the group is the full set of
    reversible global transformations and its points are the global states.
    """

    group: FiniteGroup

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash(self.group))

    def __hash__(self) -> int:
        return self._hash

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def points(self) -> range:
        return range(self.group.degree)


def theory_violations(group: FiniteGroup) -> tuple[str, ...]:
    """Human-readable reasons why ``group`` fails the global-theory conditions."""
    violations = []
    n = group.degree
    identity = group.identity
    if n < 1:
        violations.append("the point set is empty")
    for g in group.elements:
        if g != identity and all(g[i] == i for i in range(n)):
            violations.append(f"non-identity element {g!r} acts trivially")
            break
    if n >= 1 and len(orbit(group.elements, 0)) != n:
        violations.append("the action is not transitive on the point set")
    z = centre(group)
    if not z.is_trivial:
        violations.append(
            f"the group has a non-trivial centre of order {z.order}"
        )
    return tuple(violations)


def validate_global_theory(group: FiniteGroup, degree: int | None = None) -> GlobalTheory:
    """Check the global-theory conditions, raising a typed error on failure."""
    if degree is not None and degree != group.degree:
        raise DegreeMismatch(f"expected degree {degree}, group acts on {group.degree}")
    violations = theory_violations(group)
    if violations:
        if any("transitive" in v for v in violations):
            raise NotTransitive(violations)
        if any("centre" in v for v in violations):
            raise NotCentreless(violations)
        if any("trivially" in v for v in violations):
            raise NotFaithful(violations)
        raise InvalidTheory(violations)
    return GlobalTheory(group)


def require_subgroup(theory: GlobalTheory, sub: Subgroup) -> None:
    if sub.parent != theory.group:
        raise SubgroupNotInTheory("subgroup belongs to a different global group")


def require_point(theory: GlobalTheory, point: int) -> None:
    if not isinstance(point, int) or not 0 <= point < theory.degree:
        raise PointOutOfRange(f"point {point} outside 0..{theory.degree - 1}")


def stabilizer(theory: GlobalTheory, sub: Subgroup, point: int) -> Subgroup:
    """Members of ``sub`` fixing ``point``."""
    require_subgroup(theory, sub)
    require_point(theory, point)
    return Subgroup(
        sub.parent, tuple(g for g in sub.members if g[point] == point)
    )


def direct_product_action(
    groups: Sequence[FiniteGroup], max_order: int = DEFAULT_MAX_ORDER
) -> FiniteGroup:
    """Product group acting on the product of point sets, mixed-radix order.

    The point ``(x_0, ..., x_k)`` is encoded as ``x_0*n_1*...*n_k + ...``,
    with the last factor varying fastest.
    """
    degrees = [g.degree for g in groups]
    total = 1
    for n in degrees:
        total *= n
    order = 1
    for g in groups:
        order *= g.order
        if order > max_order:
            raise ResourceLimit(f"product order exceeds cap of {max_order}")
    strides = [1] * len(groups)
    for i in range(len(groups) - 2, -1, -1):
        strides[i] = strides[i + 1] * degrees[i + 1]
    elements = []
    for combo in itertools.product(*(g.elements for g in groups)):
        images = [0] * total
        for point in range(total):
            rest = point
            value = 0
            for i, stride in enumerate(strides):
                digit = rest // stride
                rest %= stride
                value += combo[i][digit] * stride
            images[point] = value
        elements.append(tuple.__new__(Perm, images))
    return FiniteGroup(total, tuple(sorted(elements)))
