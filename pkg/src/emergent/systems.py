"""Emergent systems and their partial tensor product.

A system packages a self-bicommutant subgroup with its full set of pure
local states.  Two systems compose exactly when they are mutual
complements inside their join and some global state restricts to a pure
state of each factor; the trivial system composes with everything and
acts as a strict unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import IncompatibleSystems, NotProductState, StateNotInSystem
from .lattice import (
    enumerate_self_bicommutant,
    is_orthocomplementary,
    join,
    require_self_bicommutant,
)
from .perms import GlobalTheory, Subgroup
from .states import (
    LocalState,
    factorizes,
    is_product_state,
    pure_local_states,
    restrict,
    state_key,
)


@dataclass(frozen=True)
class System:
    """A subsystem: local transformations plus all of its pure states."""

    transf: Subgroup
    pure_orbit: tuple[LocalState, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.transf, self.pure_orbit)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_trivial(self) -> bool:
        return self.transf.is_trivial

    @property
    def state_count(self) -> int:
        return len(self.pure_orbit)


def system_key(system: System) -> tuple:
    """Deterministic sort key for systems of a common theory."""
    return (system.transf.order, system.transf.members)


@lru_cache(maxsize=None)
def make_system(theory: GlobalTheory, sub: Subgroup, point: int | None = None) -> System:
    """Build the system on ``sub``; requires at least one product state.

    When ``point`` is given it must itself be a product state for ``sub``
    and serves as an explicit witness.
    """
    require_self_bicommutant(theory, sub)
    if point is not None and not is_product_state(theory, sub, point).pure:
        raise NotProductState(
            f"point {point} does not split over the subgroup and its commutant"
        )
    orbit = pure_local_states(theory, sub)
    if not orbit:
        raise NotProductState(
            f"subgroup of order {sub.order} admits no product state"
        )
    return System(sub, orbit)


@lru_cache(maxsize=None)
def trivial_system(theory: GlobalTheory) -> System:
    """The unit system: no transformations, one completely mixed state."""
    return make_system(theory, theory.group.trivial_subgroup())


@lru_cache(maxsize=None)
def enumerate_systems(theory: GlobalTheory) -> tuple[System, ...]:
    """All systems of the theory, one per lattice node with a product state."""
    lattice = enumerate_self_bicommutant(theory)
    found = []
    for node in lattice.nodes:
        if pure_local_states(theory, node):
            found.append(make_system(theory, node))
    return tuple(sorted(found, key=system_key))


@lru_cache(maxsize=None)
def are_compatible(theory: GlobalTheory, a: System, b: System) -> int | None:
    """Witness global state if the two systems compose, else None.

    The trivial system is compatible with everything.  Otherwise the two
    transformation subgroups must be mutual complements inside their join
    and some global state must restrict to a pure state of each factor
    while splitting over the pair and over the join.
    """
    if a.is_trivial:
        return b.pure_orbit[0].representative
    if b.is_trivial:
        return a.pure_orbit[0].representative
    if not is_orthocomplementary(theory, a.transf, b.transf):
        return None
    j = join(theory, a.transf, b.transf)
    orbit_a = set(a.pure_orbit)
    orbit_b = set(b.pure_orbit)
    for point in theory.points:
        if restrict(theory, a.transf, point) not in orbit_a:
            continue
        if restrict(theory, b.transf, point) not in orbit_b:
            continue
        if not is_product_state(theory, j, point).pure:
            continue
        if factorizes(theory, a.transf, b.transf, point):
            return point
    return None


@lru_cache(maxsize=None)
def tensor_systems(theory: GlobalTheory, a: System, b: System) -> System:
    """The composite system of a compatible pair; unit factors vanish."""
    if a.is_trivial:
        return b
    if b.is_trivial:
        return a
    witness = are_compatible(theory, a, b)
    if witness is None:
        raise IncompatibleSystems(
            "the systems are not mutual complements with a joint product state"
        )
    return make_system(theory, join(theory, a.transf, b.transf), witness)


def tensor_state_candidates(
    theory: GlobalTheory, a: System, b: System, rho: LocalState, sigma: LocalState
) -> tuple[int, ...]:
    """Global states realizing the given pair of pure local states."""
    if rho not in set(a.pure_orbit):
        raise StateNotInSystem("first state does not belong to the first system")
    if sigma not in set(b.pure_orbit):
        raise StateNotInSystem("second state does not belong to the second system")
    if are_compatible(theory, a, b) is None:
        raise IncompatibleSystems("cannot tensor states of incompatible systems")
    if a.is_trivial or b.is_trivial:
        return tuple(sorted(rho.points & sigma.points))
    j = join(theory, a.transf, b.transf)
    found = []
    for point in sorted(rho.points & sigma.points):
        if not is_product_state(theory, j, point).pure:
            continue
        if factorizes(theory, a.transf, b.transf, point):
            found.append(point)
    return tuple(found)


@lru_cache(maxsize=None)
def tensor_pure_states(
    theory: GlobalTheory, a: System, b: System, rho: LocalState, sigma: LocalState
) -> LocalState:
    """The unique composite pure state restricting to the given factors."""
    candidates = tensor_state_candidates(theory, a, b, rho, sigma)
    if a.is_trivial:
        return sigma
    if b.is_trivial:
        return rho
    if not candidates:
        raise IncompatibleSystems(
            "no joint global state realizes the given pair of pure states"
        )
    composite = tensor_systems(theory, a, b)
    results = {restrict(theory, composite.transf, p) for p in candidates}
    assert len(results) == 1
    return next(iter(results))


@dataclass(frozen=True)
class AssociativityReport:
    """Both bracketings of a triple tensor, when they exist."""

    left: System | None
    right: System | None

    @property
    def holds(self) -> bool:
        return self.left == self.right


def check_associativity_triple(
    theory: GlobalTheory, a: System, b: System, c: System
) -> AssociativityReport:
    """Compare ((a x b) x c) with (a x (b x c)), tracking definedness."""
    try:
        left = tensor_systems(theory, tensor_systems(theory, a, b), c)
    except IncompatibleSystems:
        left = None
    try:
        right = tensor_systems(theory, a, tensor_systems(theory, b, c))
    except IncompatibleSystems:
        right = None
    return AssociativityReport(left=left, right=right)
