"""Pure and full processes between emergent systems.

A pure process from one system to a composite is an ancilla preparation
followed by a reversible transformation of the composite.  A full
process additionally re-factorizes the composite into an output system
and a discarded system; its action on states is restriction after the
reversible dynamics.  States of a typed pair (system, environment) are
restrictions of pure states of the composite, carried together with one
purification so that dynamics can always be computed upstairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    ElementNotInGroup,
    IncompatibleSystems,
    ResourceLimit,
    StateNotInPair,
    StateNotInSystem,
    TypeMismatch,
)
from .lattice import enumerate_self_bicommutant, is_orthocomplemented
from .perms import GlobalTheory, Perm
from .states import LocalState, act_local, iterated_restrict, pure_local_states, state_key
from .systems import (
    System,
    are_compatible,
    enumerate_systems,
    make_system,
    system_key,
    tensor_pure_states,
    tensor_systems,
    trivial_system,
)

DEFAULT_OBJECT_CAP = 64


# ---------------------------------------------------------------------------
# Pure processes


@dataclass(frozen=True)
class PureProcess:
    """An ancilla preparation followed by a reversible joint transformation."""

    domain: System
    ancilla: System
    prep: LocalState
    transform: Perm


def make_pure_process(
    theory: GlobalTheory,
    domain: System,
    ancilla: System,
    prep: LocalState,
    transform: Perm,
) -> PureProcess:
    if prep not in set(ancilla.pure_orbit):
        raise StateNotInSystem("the preparation is not a pure state of the ancilla")
    total = tensor_systems(theory, domain, ancilla)
    if transform not in total.transf.member_set:
        raise ElementNotInGroup(
            "the transformation does not belong to the composite of domain and ancilla"
        )
    return PureProcess(domain, ancilla, prep, transform)


def pure_codomain(theory: GlobalTheory, proc: PureProcess) -> System:
    return tensor_systems(theory, proc.domain, proc.ancilla)


def apply_pure(theory: GlobalTheory, proc: PureProcess, state: LocalState) -> LocalState:
    if state not in set(proc.domain.pure_orbit):
        raise StateNotInSystem("the input is not a pure state of the domain")
    joint = tensor_pure_states(theory, proc.domain, proc.ancilla, state, proc.prep)
    return act_local(theory, proc.transform, joint)


def pure_state_map(
    theory: GlobalTheory, proc: PureProcess
) -> tuple[tuple[LocalState, LocalState], ...]:
    return tuple(
        (state, apply_pure(theory, proc, state)) for state in proc.domain.pure_orbit
    )


def compose_pure(theory: GlobalTheory, after: PureProcess, before: PureProcess) -> PureProcess:
    """Sequential composition; ancillas accumulate, transformations multiply."""
    if pure_codomain(theory, before) != after.domain:
        raise TypeMismatch("codomain of the first process is not the domain of the second")
    ancilla = tensor_systems(theory, before.ancilla, after.ancilla)
    prep = tensor_pure_states(
        theory, before.ancilla, after.ancilla, before.prep, after.prep
    )
    return make_pure_process(
        theory, before.domain, ancilla, prep, after.transform * before.transform
    )


def tensor_pure_processes(
    theory: GlobalTheory, left: PureProcess, right: PureProcess
) -> PureProcess:
    """Parallel composition of processes on compatible domains."""
    domain = tensor_systems(theory, left.domain, right.domain)
    ancilla = tensor_systems(theory, left.ancilla, right.ancilla)
    prep = tensor_pure_states(
        theory, left.ancilla, right.ancilla, left.prep, right.prep
    )
    transform = left.transform * right.transform
    assert transform == right.transform * left.transform
    return make_pure_process(theory, domain, ancilla, prep, transform)


def identity_pure(theory: GlobalTheory, system: System) -> PureProcess:
    unit = trivial_system(theory)
    return make_pure_process(
        theory, system, unit, unit.pure_orbit[0], theory.group.identity
    )


def pure_preparation(theory: GlobalTheory, system: System, state: LocalState) -> PureProcess:
    """The process preparing ``state`` from the trivial system."""
    return make_pure_process(
        theory, trivial_system(theory), system, state, theory.group.identity
    )


# ---------------------------------------------------------------------------
# Typed pairs and their states


@dataclass(frozen=True)
class SystemEnvironmentPair:
    """A system together with the environment it may later interact with."""

    system: System
    environment: System


@lru_cache(maxsize=None)
def make_pair(
    theory: GlobalTheory, system: System, environment: System
) -> SystemEnvironmentPair:
    if are_compatible(theory, system, environment) is None:
        raise IncompatibleSystems("system and environment do not compose")
    return SystemEnvironmentPair(system, environment)


def pair_composite(theory: GlobalTheory, pair: SystemEnvironmentPair) -> System:
    return tensor_systems(theory, pair.system, pair.environment)


@dataclass(frozen=True)
class PairState:
    """A state of a typed pair: a system state with one chosen purification.

    Equality ignores the purification; two pair states are the same
    exactly when the system sees the same local state.
    """

    pair: SystemEnvironmentPair
    value: LocalState
    purification: LocalState = field(compare=False)


def make_pair_state(
    theory: GlobalTheory, pair: SystemEnvironmentPair, purification: LocalState
) -> PairState:
    composite = pair_composite(theory, pair)
    if purification not in set(composite.pure_orbit):
        raise StateNotInPair("the purification is not a pure state of the composite")
    value = iterated_restrict(theory, pair.system.transf, purification)
    return PairState(pair, value, purification)


@lru_cache(maxsize=None)
def pair_states(
    theory: GlobalTheory, pair: SystemEnvironmentPair
) -> tuple[PairState, ...]:
    """All states of the pair, each with the least pure state purifying it."""
    composite = pair_composite(theory, pair)
    seen: dict[LocalState, PairState] = {}
    for phi in composite.pure_orbit:
        value = iterated_restrict(theory, pair.system.transf, phi)
        if value not in seen:
            seen[value] = PairState(pair, value, phi)
    return tuple(sorted(seen.values(), key=lambda s: state_key(s.value)))


# ---------------------------------------------------------------------------
# Full processes


@dataclass(frozen=True)
class Process:
    """Ancilla preparation, joint reversible dynamics, then discarding.

    The composite of domain system and ancilla must re-factorize as the
    codomain system with the discarded system; the environment is
    untouched and simply absorbs what was discarded.
    """

    domain: SystemEnvironmentPair
    ancilla: System
    prep: LocalState
    transform: Perm
    codomain_system: System
    discarded: System


def make_process(
    theory: GlobalTheory,
    domain: SystemEnvironmentPair,
    ancilla: System,
    prep: LocalState,
    transform: Perm,
    codomain_system: System,
    discarded: System,
) -> Process:
    if prep not in set(ancilla.pure_orbit):
        raise StateNotInSystem("the preparation is not a pure state of the ancilla")
    total = tensor_systems(theory, domain.system, ancilla)
    if transform not in total.transf.member_set:
        raise ElementNotInGroup(
            "the transformation does not belong to the composite of domain and ancilla"
        )
    if tensor_systems(theory, codomain_system, discarded) != total:
        raise TypeMismatch(
            "codomain and discarded systems do not re-factorize the composite"
        )
    # The environment must also compose with everything the dynamics touches.
    tensor_systems(theory, pair_composite(theory, domain), ancilla)
    proc = Process(domain, ancilla, prep, transform, codomain_system, discarded)
    process_codomain(theory, proc)
    return proc


def process_codomain(theory: GlobalTheory, proc: Process) -> SystemEnvironmentPair:
    """The output pair: codomain system facing environment plus discards."""
    env_out = tensor_systems(theory, proc.domain.environment, proc.discarded)
    return make_pair(theory, proc.codomain_system, env_out)


def apply_process(theory: GlobalTheory, proc: Process, state: PairState) -> PairState:
    """Purify, adjoin the ancilla, act, and restrict to the codomain."""
    if state.pair != proc.domain:
        raise StateNotInPair("the state has a different type than the process domain")
    composite = pair_composite(theory, proc.domain)
    joint = tensor_pure_states(
        theory, composite, proc.ancilla, state.purification, proc.prep
    )
    acted = act_local(theory, proc.transform, joint)
    value = iterated_restrict(theory, proc.codomain_system.transf, acted)
    return PairState(process_codomain(theory, proc), value, acted)


@lru_cache(maxsize=None)
def process_state_map(
    theory: GlobalTheory, proc: Process
) -> tuple[tuple[PairState, PairState], ...]:
    return tuple(
        (state, apply_process(theory, proc, state))
        for state in pair_states(theory, proc.domain)
    )


def process_table(theory: GlobalTheory, proc: Process) -> tuple:
    """The state map of a process keyed by underlying point sets."""
    return tuple(
        (state_key(src.value), state_key(dst.value))
        for src, dst in process_state_map(theory, proc)
    )


def compose_process(theory: GlobalTheory, after: Process, before: Process) -> Process:
    if process_codomain(theory, before) != after.domain:
        raise TypeMismatch("codomain of the first process is not the domain of the second")
    ancilla = tensor_systems(theory, before.ancilla, after.ancilla)
    prep = tensor_pure_states(
        theory, before.ancilla, after.ancilla, before.prep, after.prep
    )
    discarded = tensor_systems(theory, before.discarded, after.discarded)
    return make_process(
        theory,
        before.domain,
        ancilla,
        prep,
        after.transform * before.transform,
        after.codomain_system,
        discarded,
    )


def tensor_processes(theory: GlobalTheory, left: Process, right: Process) -> Process:
    domain = make_pair(
        theory,
        tensor_systems(theory, left.domain.system, right.domain.system),
        tensor_systems(theory, left.domain.environment, right.domain.environment),
    )
    ancilla = tensor_systems(theory, left.ancilla, right.ancilla)
    prep = tensor_pure_states(
        theory, left.ancilla, right.ancilla, left.prep, right.prep
    )
    transform = left.transform * right.transform
    assert transform == right.transform * left.transform
    return make_process(
        theory,
        domain,
        ancilla,
        prep,
        transform,
        tensor_systems(theory, left.codomain_system, right.codomain_system),
        tensor_systems(theory, left.discarded, right.discarded),
    )


def identity_process(theory: GlobalTheory, pair: SystemEnvironmentPair) -> Process:
    unit = trivial_system(theory)
    return make_process(
        theory,
        pair,
        unit,
        unit.pure_orbit[0],
        theory.group.identity,
        pair.system,
        unit,
    )


def discard_process(theory: GlobalTheory, pair: SystemEnvironmentPair) -> Process:
    """Throw the whole system to the environment, keeping the trivial system."""
    unit = trivial_system(theory)
    return make_process(
        theory,
        pair,
        unit,
        unit.pure_orbit[0],
        theory.group.identity,
        unit,
        pair.system,
    )


def enumerate_generalised_effects(
    theory: GlobalTheory,
    pair: SystemEnvironmentPair,
    ancillas: tuple[System, ...] | None = None,
) -> tuple[Process, ...]:
    """Processes from the pair to the trivial system, up to equal state maps.

    Different ancillas and dynamics all collapse to the same state map,
    so the result is the discarding effect alone.
    """
    if ancillas is None:
        ancillas = enumerate_systems(theory)
    unit = trivial_system(theory)
    composite = pair_composite(theory, pair)
    found: dict[tuple, Process] = {}
    for anc in sorted(ancillas, key=system_key):
        try:
            total = tensor_systems(theory, pair.system, anc)
            tensor_systems(theory, composite, anc)
        except IncompatibleSystems:
            continue
        for prep in anc.pure_orbit:
            for u in total.transf.members:
                try:
                    proc = make_process(theory, pair, anc, prep, u, unit, total)
                except (IncompatibleSystems, TypeMismatch):
                    continue
                table = process_table(theory, proc)
                if table not in found:
                    found[table] = proc
    return tuple(found.values())


# ---------------------------------------------------------------------------
# The category of processes over a finite object universe


@dataclass(frozen=True)
class MorphismClass:
    """Processes identified by domain, codomain, and state map."""

    dom: int
    cod: int
    table: tuple
    representative: Process = field(compare=False)


@dataclass
class ProcessCategory:
    """A finite, tensor-closed fragment of the full process theory."""

    theory: GlobalTheory
    universe: tuple[System, ...]
    objects: tuple[SystemEnvironmentPair, ...]
    classes: tuple[MorphismClass, ...]
    identity: tuple[int, ...]
    compose: dict[tuple[int, int], int]
    tensor_obj: dict[tuple[int, int], int]
    tensor_mor: dict[tuple[int, int], int]
    unit: int

    @property
    def object_index(self) -> dict[SystemEnvironmentPair, int]:
        return {obj: i for i, obj in enumerate(self.objects)}


def default_system_seeds(theory: GlobalTheory) -> tuple[System, ...]:
    """Systems on orthocomplemented lattice nodes that admit product states."""
    lattice = enumerate_self_bicommutant(theory)
    seeds = []
    for node in lattice.nodes:
        if is_orthocomplemented(theory, node) and pure_local_states(theory, node):
            seeds.append(make_system(theory, node))
    return tuple(sorted(seeds, key=system_key))


def system_universe(
    theory: GlobalTheory, seeds: tuple[System, ...]
) -> tuple[System, ...]:
    """Close a set of systems under the partial tensor product."""
    universe = set(seeds)
    universe.add(trivial_system(theory))
    frontier = set(universe)
    while frontier:
        new = set()
        for a in frontier:
            for b in universe:
                for pair in ((a, b), (b, a)):
                    if are_compatible(theory, *pair) is None:
                        continue
                    composite = tensor_systems(theory, *pair)
                    if composite not in universe and composite not in new:
                        new.add(composite)
        universe |= new
        frontier = new
    return tuple(sorted(universe, key=system_key))


def _decompositions(
    theory: GlobalTheory, universe: tuple[System, ...], total: System
) -> dict[System, list[System]]:
    """For each candidate output, the discards re-factorizing ``total``."""
    options: dict[System, list[System]] = {}
    for k in universe:
        for m in universe:
            if are_compatible(theory, k, m) is None:
                continue
            if tensor_systems(theory, k, m) == total:
                options.setdefault(k, []).append(m)
    return options


def build_process_category(
    theory: GlobalTheory,
    systems: tuple[System, ...] | None = None,
    object_cap: int = DEFAULT_OBJECT_CAP,
) -> ProcessCategory:
    """Enumerate objects and morphism classes over a closed system universe."""
    if object_cap == 0:
        return ProcessCategory(theory, (), (), (), (), {}, {}, {}, -1)
    seeds = default_system_seeds(theory) if systems is None else tuple(systems)
    universe = system_universe(theory, seeds)
    objects = []
    for a in universe:
        for b in universe:
            if are_compatible(theory, a, b) is not None:
                objects.append(make_pair(theory, a, b))
    objects.sort(key=lambda p: (system_key(p.system), system_key(p.environment)))
    objects = tuple(objects)
    if len(objects) > object_cap:
        raise ResourceLimit(
            f"category would have {len(objects)} objects, above the cap of {object_cap}"
        )
    object_index = {obj: i for i, obj in enumerate(objects)}

    classes: list[MorphismClass] = []
    class_index: dict[tuple, int] = {}
    decomp_cache: dict[System, dict[System, list[System]]] = {}
    for oi, obj in enumerate(objects):
        inputs = pair_states(theory, obj)
        in_keys = tuple(state_key(s.value) for s in inputs)
        composite = pair_composite(theory, obj)
        for anc in universe:
            try:
                total = tensor_systems(theory, obj.system, anc)
                tensor_systems(theory, composite, anc)
            except IncompatibleSystems:
                continue
            if total not in decomp_cache:
                decomp_cache[total] = _decompositions(theory, universe, total)
            decomps = decomp_cache[total]
            for prep in anc.pure_orbit:
                joints = [
                    tensor_pure_states(theory, composite, anc, s.purification, prep)
                    for s in inputs
                ]
                for u in total.transf.members:
                    acted = [act_local(theory, u, joint) for joint in joints]
                    for out_sys, discards in decomps.items():
                        values = tuple(
                            state_key(iterated_restrict(theory, out_sys.transf, a))
                            for a in acted
                        )
                        table = tuple(zip(in_keys, values))
                        for disc in discards:
                            try:
                                env_out = tensor_systems(
                                    theory, obj.environment, disc
                                )
                                cod_pair = make_pair(theory, out_sys, env_out)
                            except IncompatibleSystems:
                                continue
                            cod = object_index[cod_pair]
                            key = (oi, cod, table)
                            if key not in class_index:
                                rep = make_process(
                                    theory, obj, anc, prep, u, out_sys, disc
                                )
                                class_index[key] = len(classes)
                                classes.append(MorphismClass(oi, cod, table, rep))

    identity = []
    for oi, obj in enumerate(objects):
        table = tuple(
            (state_key(s.value), state_key(s.value))
            for s in pair_states(theory, obj)
        )
        identity.append(class_index[(oi, oi, table)])
    identity = tuple(identity)

    compose: dict[tuple[int, int], int] = {}
    for fi, f in enumerate(classes):
        for gi, g in enumerate(classes):
            if f.cod != g.dom:
                continue
            g_map = dict(g.table)
            chained = tuple((src, g_map[mid]) for src, mid in f.table)
            compose[(gi, fi)] = class_index[(f.dom, g.cod, chained)]

    tensor_obj: dict[tuple[int, int], int] = {}
    for i, a in enumerate(objects):
        for j, b in enumerate(objects):
            try:
                sys_t = tensor_systems(theory, a.system, b.system)
                env_t = tensor_systems(theory, a.environment, b.environment)
                pair = make_pair(theory, sys_t, env_t)
            except IncompatibleSystems:
                continue
            tensor_obj[(i, j)] = object_index[pair]

    tensor_mor: dict[tuple[int, int], int] = {}
    for ci, c in enumerate(classes):
        for cj, d in enumerate(classes):
            if (c.dom, d.dom) not in tensor_obj or (c.cod, d.cod) not in tensor_obj:
                continue
            prod = tensor_processes(theory, c.representative, d.representative)
            key = (
                tensor_obj[(c.dom, d.dom)],
                tensor_obj[(c.cod, d.cod)],
                process_table(theory, prod),
            )
            tensor_mor[(ci, cj)] = class_index[key]

    unit_pair = make_pair(theory, trivial_system(theory), trivial_system(theory))
    return ProcessCategory(
        theory,
        universe,
        objects,
        tuple(classes),
        identity,
        compose,
        tensor_obj,
        tensor_mor,
        object_index[unit_pair],
    )


# ---------------------------------------------------------------------------
# Generation of the full theory from its pure fragment


@dataclass(frozen=True)
class GenerationReport:
    """Whether transformations, preparations, and discards generate everything."""

    pure_total: int
    pure_generated: int
    full_total: int
    full_generated: int
    transformation_generators: int
    preparation_generators: int
    discard_generators: int

    @property
    def pure_ok(self) -> bool:
        return self.pure_generated == self.pure_total

    @property
    def full_ok(self) -> bool:
        return self.full_generated == self.full_total


def _closure(cat: ProcessCategory, start: set[int]) -> set[int]:
    span = set(start)
    changed = True
    while changed:
        changed = False
        for (gi, fi), out in cat.compose.items():
            if gi in span and fi in span and out not in span:
                span.add(out)
                changed = True
        for (ci, cj), out in cat.tensor_mor.items():
            if ci in span and cj in span and out not in span:
                span.add(out)
                changed = True
    return span


def verify_generation(theory: GlobalTheory, cat: ProcessCategory) -> GenerationReport:
    """Check that reversible dynamics, preparations, and discards span the theory."""
    class_index = {
        (c.dom, c.cod, c.table): i for i, c in enumerate(cat.classes)
    }
    env_trivial = {
        i for i, obj in enumerate(cat.objects) if obj.environment.is_trivial
    }
    pure_ids = {
        i
        for i, c in enumerate(cat.classes)
        if c.dom in env_trivial and c.cod in env_trivial
    }

    transf_gens: set[int] = set(cat.identity)
    prep_gens: set[int] = set()
    for oi in env_trivial:
        obj = cat.objects[oi]
        states = pair_states(theory, obj)
        for u in obj.system.transf.members:
            table = tuple(
                (
                    state_key(s.value),
                    state_key(act_local(theory, u, s.value)),
                )
                for s in states
            )
            transf_gens.add(class_index[(oi, oi, table)])
        if not obj.system.is_trivial:
            unit_obj = cat.unit
            theta = pair_states(theory, cat.objects[unit_obj])[0]
            for target in states:
                table = ((state_key(theta.value), state_key(target.value)),)
                prep_gens.add(class_index[(unit_obj, oi, table)])

    discard_gens: set[int] = set()
    for oi, obj in enumerate(cat.objects):
        proc = discard_process(theory, obj)
        cod = cat.object_index[process_codomain(theory, proc)]
        discard_gens.add(class_index[(oi, cod, process_table(theory, proc))])

    pure_span = _closure(cat, transf_gens | prep_gens) & pure_ids
    full_span = _closure(cat, transf_gens | prep_gens | discard_gens)
    return GenerationReport(
        pure_total=len(pure_ids),
        pure_generated=len(pure_span),
        full_total=len(cat.classes),
        full_generated=len(full_span),
        transformation_generators=len(transf_gens),
        preparation_generators=len(prep_gens),
        discard_generators=len(discard_gens),
    )
