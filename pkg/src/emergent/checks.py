"""Verification suites: guarantee checks with violations and notices.

Violations are failures of properties the engine guarantees; a valid
theory should never produce one.  Notices report structural facts that
are allowed to vary between theories (orthomodularity, distributivity,
criterion divergences) and are informational only.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import IncompatibleSystems
from .lattice import (
    check_orthomodular,
    commutant,
    enumerate_self_bicommutant,
    intersection,
    is_orthocomplemented,
    is_orthogonal,
    is_self_bicommutant,
    join,
    meet,
    product_set,
)
from .perms import GlobalTheory
from .processes import (
    build_process_category,
    compose_process,
    enumerate_generalised_effects,
    process_table,
    tensor_processes,
    verify_generation,
)
from .states import (
    act_local,
    is_product_state,
    iterated_restrict,
    pure_local_states,
    pure_stabilizer,
    restrict,
)
from .systems import (
    are_compatible,
    check_associativity_triple,
    enumerate_systems,
    tensor_pure_states,
    tensor_systems,
    trivial_system,
)

SAMPLE_SEED = 20240801
QUADRUPLE_LIMIT = 1_000_000
QUADRUPLE_SAMPLE = 10_000
PAIR_LIMIT = 250_000
PAIR_SAMPLE = 10_000
TRIPLE_LIMIT = 300_000
TRIPLE_SAMPLE = 10_000
COMPOSE_SAMPLE = 2_000


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    violations: tuple[str, ...]
    notices: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "violations": list(self.violations),
            "notices": list(self.notices),
        }


def lattice_suite(theory: GlobalTheory) -> SuiteResult:
    """Lattice structure: closure, duality, bounds, and product subgroups."""
    violations: list[str] = []
    notices: list[str] = []
    lattice = enumerate_self_bicommutant(theory)
    nodes = lattice.nodes
    node_set = set(nodes)

    if not lattice.bottom.is_trivial:
        violations.append("lattice: the least node is not the trivial subgroup")
    if lattice.top.member_set != theory.group.element_set:
        violations.append("lattice: the greatest node is not the full group")

    for i, a in enumerate(nodes):
        if not is_self_bicommutant(theory, a):
            violations.append(f"lattice: node {i} is not its own double commutant")
        ca = commutant(theory, a)
        if ca not in node_set:
            violations.append(f"lattice: commutant of node {i} is not a node")
        if is_orthocomplemented(theory, a) and join(theory, a, ca) != lattice.top:
            violations.append(
                f"lattice: node {i} and its commutant do not join to the top"
            )

    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if j < i:
                continue
            m = meet(theory, a, b)
            jn = join(theory, a, b)
            if m not in node_set:
                violations.append(f"lattice: meet of nodes {i}, {j} is not a node")
            if jn not in node_set:
                violations.append(f"lattice: join of nodes {i}, {j} is not a node")
            if meet(theory, a, jn) != a or meet(theory, b, jn) != b:
                violations.append(
                    f"lattice: meet does not absorb the join on nodes {i}, {j}"
                )
            if join(theory, a, m) != a or join(theory, b, m) != b:
                violations.append(
                    f"lattice: join does not absorb the meet on nodes {i}, {j}"
                )
            if a.is_subset_of(b) and not commutant(theory, b).is_subset_of(commutant(theory, a)):
                violations.append(
                    f"lattice: taking commutants does not reverse the "
                    f"inclusion of nodes {i}, {j}"
                )
            if b.is_subset_of(a) and not commutant(theory, a).is_subset_of(commutant(theory, b)):
                violations.append(
                    f"lattice: taking commutants does not reverse the "
                    f"inclusion of nodes {j}, {i}"
                )
            if commutant(theory, jn) != meet(
                theory, commutant(theory, a), commutant(theory, b)
            ):
                violations.append(
                    f"lattice: commutant of join breaks duality on nodes {i}, {j}"
                )
            if commutant(theory, m) != join(
                theory, commutant(theory, a), commutant(theory, b)
            ):
                violations.append(
                    f"lattice: commutant of meet breaks duality on nodes {i}, {j}"
                )

    rng = random.Random(SAMPLE_SEED)
    centre_meet_gaps = 0
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if j < i or not is_orthogonal(theory, a, b):
                continue
            product = product_set(theory, a, b)
            if product not in node_set:
                notices.append(
                    f"lattice: product of commuting nodes {i}, {j} is not a node"
                )
            centre_a = intersection(theory, a, commutant(theory, a))
            centre_b = intersection(theory, b, commutant(theory, b))
            centre_product = intersection(theory, product, commutant(theory, product))
            if centre_product != product_set(theory, centre_a, centre_b):
                violations.append(
                    f"lattice: the centre of the product of nodes {i}, {j} "
                    "is not the product of their centres"
                )
            if centre_product != meet(theory, a, b):
                centre_meet_gaps += 1
            if (
                is_orthocomplemented(theory, a)
                or is_orthocomplemented(theory, b)
            ) and product.order != a.order * b.order:
                violations.append(
                    f"lattice: factorisation over nodes {i}, {j} is not unique"
                )
            pair_count = a.order * b.order
            if pair_count <= PAIR_LIMIT:
                pairs = itertools.product(a.members, b.members)
            else:
                pairs = (
                    (rng.choice(a.members), rng.choice(b.members))
                    for _ in range(PAIR_SAMPLE)
                )
            for h, k in pairs:
                if h * k != k * h:
                    violations.append(
                        f"lattice: swapping the factors of nodes {i}, {j} "
                        "changes the joint transformation"
                    )
                    break
            if pair_count**2 <= QUADRUPLE_LIMIT:
                quads = itertools.product(a.members, b.members, a.members, b.members)
            else:
                quads = (
                    (
                        rng.choice(a.members),
                        rng.choice(b.members),
                        rng.choice(a.members),
                        rng.choice(b.members),
                    )
                    for _ in range(QUADRUPLE_SAMPLE)
                )
            for h1, k1, h2, k2 in quads:
                if (h1 * k1) * (h2 * k2) != (h1 * h2) * (k1 * k2):
                    violations.append(
                        f"lattice: joint transformations of nodes {i}, {j} "
                        "do not multiply factorwise"
                    )
                    break

    if centre_meet_gaps:
        notices.append(
            "lattice: the centre of the product differs from the meet for "
            f"{centre_meet_gaps} commuting pairs"
        )

    failures = 0
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i == j or not a.is_subset_of(b):
                continue
            if not check_orthomodular(theory, a, b):
                failures += 1
    if failures:
        notices.append(f"lattice: orthomodular identity fails for {failures} nested pairs")

    n = len(nodes)
    triples = (
        itertools.product(range(n), repeat=3)
        if n**3 <= TRIPLE_LIMIT
        else (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(TRIPLE_SAMPLE)
        )
    )
    distributive_failures = 0
    for i, j, k in triples:
        lhs = meet(theory, nodes[i], join(theory, nodes[j], nodes[k]))
        rhs = join(
            theory,
            meet(theory, nodes[i], nodes[j]),
            meet(theory, nodes[i], nodes[k]),
        )
        if lhs != rhs:
            distributive_failures += 1
    if distributive_failures:
        notices.append(
            f"lattice: distributivity fails for {distributive_failures} node triples"
        )
    notices.append(f"lattice: {n} nodes")
    return SuiteResult("lattice", tuple(violations), tuple(notices))


def states_suite(theory: GlobalTheory) -> SuiteResult:
    """Restriction, local dynamics, and the product-state criterion."""
    violations: list[str] = []
    notices: list[str] = []
    lattice = enumerate_self_bicommutant(theory)
    nodes = lattice.nodes
    divergences = 0

    for i, sub in enumerate(nodes):
        comm = commutant(theory, sub)
        centre_local = meet(theory, sub, comm)
        for point in theory.points:
            state = restrict(theory, sub, point)
            for k in comm.members:
                if restrict(theory, sub, k[point]) != state:
                    violations.append(
                        f"states: restriction to node {i} distinguishes "
                        f"states related by its commutant at point {point}"
                    )
                    break
            for h in sub.members:
                if act_local(theory, h, state) != restrict(theory, sub, h[point]):
                    violations.append(
                        f"states: local action on node {i} disagrees with "
                        f"global action at point {point}"
                    )
                    break
            for z in centre_local.members:
                if act_local(theory, z, state) != state:
                    violations.append(
                        f"states: a central transformation of node {i} moves "
                        f"the local state at point {point}"
                    )
                    break
            verdict = is_product_state(theory, sub, point)
            if verdict.pure != is_product_state(theory, comm, point).pure:
                violations.append(
                    f"states: the product-state test on node {i} is not "
                    f"symmetric in the pair at point {point}"
                )
            for k in comm.members:
                if is_product_state(theory, sub, k[point]).pure != verdict.pure:
                    violations.append(
                        f"states: purity at node {i} is not constant on the "
                        f"commutant orbit of point {point}"
                    )
                    break
            if verdict.pure != verdict.stabilizer_product_holds:
                divergences += 1
            if verdict.pure:
                local_stab, fixed_stab = pure_stabilizer(theory, state)
                if local_stab != fixed_stab:
                    violations.append(
                        f"states: the stabilizer of a pure state of node {i} "
                        f"differs from the pointwise stabilizer at point {point}"
                    )

    for i, small in enumerate(nodes):
        for j, big in enumerate(nodes):
            if not small.is_subset_of(big):
                continue
            for point in theory.points:
                nested = iterated_restrict(
                    theory, small, restrict(theory, big, point)
                )
                if nested != restrict(theory, small, point):
                    violations.append(
                        f"states: restricting through node {j} to node {i} "
                        f"changes the answer at point {point}"
                    )
                    break

    if divergences:
        notices.append(
            "states: the splitting of pointwise stabilizers disagrees with "
            f"the product-state test in {divergences} cases"
        )
    pure_counts = sum(len(pure_local_states(theory, sub)) for sub in nodes)
    notices.append(f"states: {pure_counts} pure local states across all nodes")
    return SuiteResult("states", tuple(violations), tuple(notices))


def systems_suite(theory: GlobalTheory) -> SuiteResult:
    """System composition: units, symmetry, state tensors, associativity."""
    violations: list[str] = []
    notices: list[str] = []
    systems = enumerate_systems(theory)
    unit = trivial_system(theory)
    index = {s: i for i, s in enumerate(systems)}

    for i, system in enumerate(systems):
        orbit = set(system.pure_orbit)
        for state in system.pure_orbit:
            if not is_product_state(
                theory, system.transf, state.representative
            ).pure:
                violations.append(f"systems: a listed state of system {i} is not pure")
            for h in system.transf.members:
                if act_local(theory, h, state) not in orbit:
                    violations.append(
                        f"systems: the pure states of system {i} are not "
                        "closed under its transformations"
                    )
                    break
        if tensor_systems(theory, system, unit) != system:
            violations.append(f"systems: tensoring system {i} with the unit changes it")
        if tensor_systems(theory, unit, system) != system:
            violations.append(f"systems: tensoring the unit with system {i} changes it")

    compatible_pairs = []
    for i, a in enumerate(systems):
        for j, b in enumerate(systems):
            forward = are_compatible(theory, a, b)
            backward = are_compatible(theory, b, a)
            if (forward is None) != (backward is None):
                violations.append(f"systems: compatibility of {i}, {j} is not symmetric")
            if forward is not None:
                compatible_pairs.append((i, j))
                if tensor_systems(theory, a, b) != tensor_systems(theory, b, a):
                    violations.append(
                        f"systems: the composite of {i}, {j} depends on the order"
                    )

    for i, j in compatible_pairs:
        a, b = systems[i], systems[j]
        composite = tensor_systems(theory, a, b)
        composite_orbit = set(composite.pure_orbit)
        for rho in a.pure_orbit:
            for sigma in b.pure_orbit:
                try:
                    tau = tensor_pure_states(theory, a, b, rho, sigma)
                except IncompatibleSystems:
                    violations.append(
                        f"systems: no composite state for a state pair of {i}, {j}"
                    )
                    continue
                if tau not in composite_orbit:
                    violations.append(
                        f"systems: a composite state of {i}, {j} is not pure"
                    )
                if iterated_restrict(theory, a.transf, tau) != rho:
                    violations.append(
                        f"systems: the composite state of {i}, {j} does not "
                        "restrict back to its first factor"
                    )
                if iterated_restrict(theory, b.transf, tau) != sigma:
                    violations.append(
                        f"systems: the composite state of {i}, {j} does not "
                        "restrict back to its second factor"
                    )
        for h in a.transf.members:
            for k in b.transf.members:
                rho, sigma = a.pure_orbit[0], b.pure_orbit[0]
                moved = tensor_pure_states(
                    theory,
                    a,
                    b,
                    act_local(theory, h, rho),
                    act_local(theory, k, sigma),
                )
                joint = act_local(
                    theory, h * k, tensor_pure_states(theory, a, b, rho, sigma)
                )
                if moved != joint:
                    violations.append(
                        f"systems: moving the factors of {i}, {j} disagrees "
                        "with moving the composite"
                    )
                    break

    n = len(systems)
    rng = random.Random(SAMPLE_SEED)
    triples = (
        itertools.product(range(n), repeat=3)
        if n**3 <= TRIPLE_LIMIT
        else (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(TRIPLE_SAMPLE)
        )
    )
    associativity_gaps = 0
    for i, j, k in triples:
        report = check_associativity_triple(
            theory, systems[i], systems[j], systems[k]
        )
        if (report.left is None) != (report.right is None):
            associativity_gaps += 1
        elif not report.holds:
            violations.append(
                f"systems: the two bracketings of systems {i}, {j}, {k} differ"
            )
    if associativity_gaps:
        notices.append(
            "systems: one-sided definedness of triple composites in "
            f"{associativity_gaps} cases"
        )
    notices.append(
        f"systems: {n} systems, {len(compatible_pairs)} ordered compatible pairs"
    )
    if index.get(unit) is None:
        violations.append("systems: the trivial system is missing")
    return SuiteResult("systems", tuple(violations), tuple(notices))


def processes_suite(theory: GlobalTheory, systems=None) -> SuiteResult:
    """Process category: composition semantics, generation, unique effect."""
    violations: list[str] = []
    notices: list[str] = []
    cat = build_process_category(theory, systems=systems)

    for oi in range(len(cat.objects)):
        ident = cat.classes[cat.identity[oi]]
        for ci, cls in enumerate(cat.classes):
            if cls.dom == oi and cat.compose[(ci, cat.identity[oi])] != ci:
                violations.append(
                    f"processes: pre-composing class {ci} with an identity changes it"
                )
            if cls.cod == oi and cat.compose[(cat.identity[oi], ci)] != ci:
                violations.append(
                    f"processes: post-composing class {ci} with an identity changes it"
                )
        if ident.dom != oi or ident.cod != oi:
            violations.append(f"processes: identity of object {oi} has wrong endpoints")

    composable = [
        (gi, fi)
        for fi, f in enumerate(cat.classes)
        for gi, g in enumerate(cat.classes)
        if f.cod == g.dom
    ]
    rng = random.Random(SAMPLE_SEED)
    if len(composable) > COMPOSE_SAMPLE:
        composable = rng.sample(composable, COMPOSE_SAMPLE)
    for gi, fi in composable:
        f, g = cat.classes[fi], cat.classes[gi]
        composite = compose_process(theory, g.representative, f.representative)
        expected = cat.classes[cat.compose[(gi, fi)]]
        if process_table(theory, composite) != expected.table:
            violations.append(
                f"processes: composing representatives of {fi}, {gi} "
                "disagrees with the composite class"
            )

    tensorable = list(cat.tensor_mor.items())
    if len(tensorable) > COMPOSE_SAMPLE:
        tensorable = rng.sample(tensorable, COMPOSE_SAMPLE)
    for (ci, cj), out in tensorable:
        c, d = cat.classes[ci], cat.classes[cj]
        prod = tensor_processes(theory, c.representative, d.representative)
        if process_table(theory, prod) != cat.classes[out].table:
            violations.append(
                f"processes: tensoring representatives of {ci}, {cj} "
                "disagrees with the registered class"
            )

    report = verify_generation(theory, cat)
    if not report.pure_ok:
        violations.append(
            "processes: reversible dynamics and preparations generate only "
            f"{report.pure_generated} of {report.pure_total} pure classes"
        )
    if not report.full_ok:
        violations.append(
            "processes: adding discards generates only "
            f"{report.full_generated} of {report.full_total} classes"
        )

    for oi, obj in enumerate(cat.objects):
        effects = enumerate_generalised_effects(theory, obj, ancillas=cat.universe)
        if len(effects) != 1:
            violations.append(
                f"processes: object {oi} has {len(effects)} distinct effects "
                "instead of exactly one"
            )

    notices.append(
        f"processes: {len(cat.objects)} objects, {len(cat.classes)} morphism classes"
    )
    notices.append(
        f"processes: generators {report.transformation_generators} reversible, "
        f"{report.preparation_generators} preparations, "
        f"{report.discard_generators} discards"
    )
    return SuiteResult("processes", tuple(violations), tuple(notices))


def pmcat_suite(theory: GlobalTheory, systems=None) -> SuiteResult:
    """Partially-monoidal category axioms on the extracted instance."""
    from .pmcat import check_partially_monoidal, extract_instance

    inst = extract_instance(theory, systems=systems)
    found = check_partially_monoidal(inst)
    violations = tuple(
        f"{v.kind}: {v.message} (witness {v.witness})" for v in found
    )
    notices = (
        f"pmcat: {len(inst.objects)} objects, {len(inst.morphisms)} morphisms",
    )
    return SuiteResult("pmcat", violations, notices)


SUITES = {
    "lattice": lattice_suite,
    "states": states_suite,
    "systems": systems_suite,
    "processes": processes_suite,
    "pmcat": pmcat_suite,
}


def run_suites(theory: GlobalTheory, names: tuple[str, ...]) -> tuple[SuiteResult, ...]:
    results = []
    for name in names:
        results.append(SUITES[name](theory))
    return tuple(results)
