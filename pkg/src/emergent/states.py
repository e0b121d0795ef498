"""Local states of a subsystem and the product-state test.

The local state a subgroup H can see at a global state p is the orbit of
p under the commutant of H: two global states related by a transformation
H commutes with are indistinguishable to H.  A global state is a product
state for H when its joint stabilizer over H and the commutant splits as
a direct product of the marginal stabilizers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import ElementNotInOwner, NotNested, NotOrthogonal, NotPure
from .lattice import commutant, is_orthogonal, require_self_bicommutant
from .perms import GlobalTheory, Perm, Subgroup, require_point, require_subgroup


@dataclass(frozen=True)
class LocalState:
    """A state of the subsystem with transformations ``owner``.

    ``points`` is the set of global states the owner cannot tell apart;
    it is always a single orbit of the owner's commutant.
    """

    owner: Subgroup
    points: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.owner, self.points)))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def sorted_points(self) -> tuple[int, ...]:
        return tuple(sorted(self.points))

    @property
    def representative(self) -> int:
        return min(self.points)


def state_key(state: LocalState) -> tuple[int, ...]:
    """Deterministic sort key for local states of a common owner."""
    return state.sorted_points


@lru_cache(maxsize=None)
def restrict(theory: GlobalTheory, sub: Subgroup, point: int) -> LocalState:
    """The local state ``sub`` sees at the global state ``point``."""
    require_subgroup(theory, sub)
    require_point(theory, point)
    comm = commutant(theory, sub)
    return LocalState(sub, frozenset(k[point] for k in comm.members))


def act_local(theory: GlobalTheory, h: Perm, state: LocalState) -> LocalState:
    """Apply a transformation of the owner to a local state.

    Well defined because the owner commutes with the commutant orbit that
    defines the state.
    """
    if h not in state.owner.member_set:
        raise ElementNotInOwner(f"{h!r} does not belong to the state's owner")
    return LocalState(state.owner, frozenset(h[p] for p in state.points))


def local_orbit(theory: GlobalTheory, state: LocalState) -> tuple[LocalState, ...]:
    """All local states reachable from ``state`` by owner transformations."""
    seen = {act_local(theory, h, state) for h in state.owner.members}
    return tuple(sorted(seen, key=state_key))


def iterated_restrict(theory: GlobalTheory, sub: Subgroup, state: LocalState) -> LocalState:
    """Restrict a local state further, to a subgroup of its owner.

    Restricting via any global representative gives the same answer, so
    the minimum point of the state is used.
    """
    require_subgroup(theory, sub)
    if not sub.is_subset_of(state.owner):
        raise NotNested("can only restrict a state to a subgroup of its owner")
    return restrict(theory, sub, state.representative)


def _joint_split(
    theory: GlobalTheory, a: Subgroup, b: Subgroup, point: int
) -> tuple[int, Subgroup, Subgroup, bool]:
    """Joint-stabilizer census of ``point`` over a commuting pair.

    Returns the size of {(h, k) : h k fixes point}, the two marginal local
    state stabilizers, and whether the pointwise stabilizer of the product
    subgroup splits as the product of the pointwise marginal stabilizers.
    """
    orbit_a = frozenset(h[point] for h in a.members)
    orbit_b = frozenset(k[point] for k in b.members)
    stab_a = [h for h in a.members if h[point] in orbit_b]
    stab_b = [k for k in b.members if k[point] in orbit_a]
    joint = 0
    for h in a.members:
        target = h.inverse()[point]
        for k in b.members:
            if k[point] == target:
                joint += 1
    fix_a = {h for h in a.members if h[point] == point}
    fix_b = {k for k in b.members if k[point] == point}
    product_fix = {h * k for h in fix_a for k in fix_b}
    joint_fix = {
        h * k for h in a.members for k in b.members if h[k[point]] == point
    }
    split_holds = product_fix == joint_fix
    return (
        joint,
        Subgroup(a.parent, tuple(sorted(stab_a))),
        Subgroup(b.parent, tuple(sorted(stab_b))),
        split_holds,
    )


@dataclass(frozen=True)
class PurityVerdict:
    """Outcome of the product-state test at one global state."""

    state: LocalState
    pure: bool
    witness_stabilizers: tuple[Subgroup, Subgroup]
    stabilizer_product_holds: bool


@lru_cache(maxsize=None)
def is_product_state(theory: GlobalTheory, sub: Subgroup, point: int) -> PurityVerdict:
    """Test whether a global state splits over ``sub`` and its commutant.

    The joint stabilizer {(h, k) : h k fixes the point} always projects
    onto the two marginal local-state stabilizers; the state is a product
    state exactly when it is their full direct product.
    """
    require_subgroup(theory, sub)
    require_point(theory, point)
    require_self_bicommutant(theory, sub)
    comm = commutant(theory, sub)
    joint, stab_a, stab_b, split_holds = _joint_split(theory, sub, comm, point)
    pure = joint == stab_a.order * stab_b.order
    return PurityVerdict(
        state=restrict(theory, sub, point),
        pure=pure,
        witness_stabilizers=(stab_a, stab_b),
        stabilizer_product_holds=split_holds,
    )


@lru_cache(maxsize=None)
def factorizes(theory: GlobalTheory, a: Subgroup, b: Subgroup, point: int) -> bool:
    """Product-state test for an arbitrary commuting pair of subgroups."""
    if not is_orthogonal(theory, a, b):
        raise NotOrthogonal("the factorization test requires commuting subgroups")
    require_point(theory, point)
    joint, stab_a, stab_b, _ = _joint_split(theory, a, b, point)
    return joint == stab_a.order * stab_b.order


@lru_cache(maxsize=None)
def pure_local_states(theory: GlobalTheory, sub: Subgroup) -> tuple[LocalState, ...]:
    """All distinct local states of ``sub`` arising from product states."""
    require_subgroup(theory, sub)
    states = {
        restrict(theory, sub, p)
        for p in theory.points
        if is_product_state(theory, sub, p).pure
    }
    return tuple(sorted(states, key=state_key))


def pure_stabilizer(
    theory: GlobalTheory, state: LocalState
) -> tuple[Subgroup, Subgroup]:
    """Two routes to the stabilizer of a pure local state in its owner.

    The first entry fixes the state under the local action; the second is
    the pointwise stabilizer of a global representative.  For pure states
    the two agree, so the stabilizer can be read off either way.
    """
    point = state.representative
    if not is_product_state(theory, state.owner, point).pure:
        raise NotPure("the stabilizer shortcut only applies to pure local states")
    local = tuple(
        h for h in state.owner.members if h[point] in state.points
    )
    fixed = tuple(h for h in state.owner.members if h[point] == point)
    return (
        Subgroup(state.owner.parent, local),
        Subgroup(state.owner.parent, fixed),
    )
