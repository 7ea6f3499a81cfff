"""The invariant suite behind the CLI ``verify`` subcommand.

Each check returns quietly or raises :class:`VerificationFailure` with the
first counterexample.  Checks are exhaustive over all reorientations,
bases and subsets, so they are meant for desk-scale inputs; the heaviest
ones (filtration uniqueness) are skipped above a size threshold.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from . import activities, bijection, core, tutte


class VerificationFailure(AssertionError):
    pass


def _fail(name: str, detail: str):
    raise VerificationFailure(f"{name}: {detail}")


def _all_subsets(n: int):
    return activities.subsets_by_rank(n)


def check_structure(m):
    core.om_from_lists(m.n, m.circuits, m.cocircuits)
    if core.dual(core.dual(m)) != m:
        _fail("structure", "dual is not an involution")
    if core.reorient(core.reorient(m, m.ground_set), m.ground_set) != m:
        _fail("structure", "reorientation is not an involution")


def check_pivot_property(m):
    for b in core.bases(m):
        for elt in b:
            d = core.fundamental_cocircuit(m, b, elt)
            for e in m.ground_set - b:
                c = core.fundamental_circuit(m, b, e)
                if (e in d.support) != (elt in c.support):
                    _fail("pivot", f"B={sorted(b)}, b={elt}, e={e}")


def check_compose_full_support(m):
    zero = core.SignedSubset(frozenset(), frozenset())
    loops = frozenset(
        e for c in m.circuits if len(c.support) == 1 for e in c.support
    )
    isthmuses = frozenset(
        e for d in m.cocircuits if len(d.support) == 1 for e in d.support
    )
    for b in core.bases(m):
        cov = zero
        for elt in sorted(b):
            cov = core.compose(cov, core.fundamental_cocircuit(m, b, elt))
        if cov.support != m.ground_set - loops:
            _fail("compose", f"covector support wrong for B={sorted(b)}")
        vec = zero
        for e in sorted(m.ground_set - b):
            vec = core.compose(vec, core.fundamental_circuit(m, b, e))
        if vec.support != m.ground_set - isthmuses:
            _fail("compose", f"vector support wrong for B={sorted(b)}")


def check_activity_duality(m):
    md = core.dual(m)
    for b in core.bases(m):
        internal, external = activities.basis_activities(m, b)
        co_internal, co_external = activities.basis_activities(md, m.ground_set - b)
        if internal != co_external or external != co_internal:
            _fail("activity-duality", f"B={sorted(b)}")
    for a in _all_subsets(m.n):
        ostar, o = activities.orientation_activities(core.reorient(m, a))
        dstar, do = activities.orientation_activities(core.reorient(md, a))
        if ostar != do or o != dstar:
            _fail("activity-duality", f"A={sorted(a)}")


def check_filtration_duality(m):
    md = core.dual(m)
    ground = m.ground_set
    for a in _all_subsets(m.n):
        f = activities.active_filtration_orientation(core.reorient(m, a))
        fd = activities.active_filtration_orientation(core.reorient(md, a))
        complemented = tuple(ground - s for s in reversed(f.chain))
        if fd.chain != complemented or fd.cyclic_index != len(f.chain) - 1 - f.cyclic_index:
            _fail("filtration-duality", f"A={sorted(a)}")


def check_bounded_minors(m):
    for a in _all_subsets(m.n):
        r = core.reorient(m, a)
        f = activities.active_filtration_orientation(r)
        if not activities.is_connected_filtration(m, f):
            _fail("bounded-minors", f"A={sorted(a)}: filtration not connected")
        for i, minor in enumerate(activities.active_minors(r, f)):
            if f.part_is_cyclic(i):
                ok = core.is_dual_bounded(minor, 1)
            else:
                ok = core.is_bounded(minor, 1)
            if not ok:
                _fail("bounded-minors", f"A={sorted(a)}, part {i}")


def check_class_invariance(m):
    for a in _all_subsets(m.n):
        f = activities.active_filtration_orientation(core.reorient(m, a))
        ostar, o = activities.orientation_activities(core.reorient(m, a))
        for member in activities.activity_class(m, a):
            fm = activities.active_filtration_orientation(core.reorient(m, member))
            om_star, om_o = activities.orientation_activities(core.reorient(m, member))
            if fm != f or om_star != ostar or om_o != o:
                _fail("class-invariance", f"A={sorted(a)}, member={sorted(member)}")


def check_fixed_representative(m):
    for a in _all_subsets(m.n):
        fixed = [
            member
            for member in activities.activity_class(m, a)
            if not (member & frozenset().union(*activities.orientation_activities(core.reorient(m, member))))
        ]
        if len(fixed) != 1:
            _fail("fixed-representative", f"A={sorted(a)}: {len(fixed)} fixed members")


def check_bijection(m):
    preimages = defaultdict(set)
    for a in _all_subsets(m.n):
        preimages[bijection.active_basis(core.reorient(m, a))].add(a)
    all_bases = set(core.bases(m))
    if set(preimages) != all_bases:
        _fail("bijection", "active basis map is not onto the bases")
    for b, pre in preimages.items():
        internal, external = activities.basis_activities(m, b)
        if len(pre) != 1 << (len(internal) + len(external)):
            _fail("bijection", f"B={sorted(b)} has {len(pre)} preimages")
        klass = bijection.alpha_inverse_class(m, b)
        if set(klass.class_members) != pre:
            _fail("bijection", f"B={sorted(b)}: inverse class mismatch")


def check_activity_preservation(m):
    for a in _all_subsets(m.n):
        r = core.reorient(m, a)
        b = bijection.active_basis(r)
        internal, external = activities.basis_activities(m, b)
        ostar, o = activities.orientation_activities(r)
        if internal != ostar or external != o:
            _fail("activity-preservation", f"A={sorted(a)}")
        if activities.active_filtration_basis(m, b) != activities.active_filtration_orientation(r):
            _fail("activity-preservation", f"A={sorted(a)}: filtrations differ")


def check_refined_bijection(m):
    ground = m.ground_set
    seen = set()
    for a in _all_subsets(m.n):
        x = bijection.refined_alpha(m, a)
        seen.add(x)
        if bijection.refined_alpha_inverse(m, x) != a:
            _fail("refined-bijection", f"A={sorted(a)}")
        ts, tsb, th, thb = activities.reorientation_params(m, a)
        internal, p, external, q = activities.subset_params(m, x)
        if (internal, p, external, q) != (ts, tsb, th, thb):
            _fail("refined-bijection", f"A={sorted(a)}: parameter transport")
    if len(seen) != 1 << m.n:
        _fail("refined-bijection", "not a permutation of the power set")
    # activity classes map onto basis intervals
    processed: set[frozenset[int]] = set()
    for a in _all_subsets(m.n):
        if a in processed:
            continue
        members = activities.activity_class(m, a)
        processed.update(members)
        b = bijection.active_basis(core.reorient(m, a))
        lo, hi = activities.interval_of_basis(m, b)
        image = {bijection.refined_alpha(m, member) for member in members}
        expected = {
            lo | frozenset(extra)
            for k in range(len(hi - lo) + 1)
            for extra in itertools.combinations(sorted(hi - lo), k)
        }
        if image != expected:
            _fail("refined-bijection", f"A={sorted(a)}: class does not fill the interval")


def check_full_optimality_uniqueness(m):
    if m.n == 0:
        return
    for a in _all_subsets(m.n):
        r = core.reorient(m, a)
        bounded = core.is_bounded(r, 1)
        dual_bounded = core.is_dual_bounded(r, 1)
        if not bounded and not dual_bounded:
            continue
        hits = [b for b in core.bases(r) if bijection.is_fully_optimal(r, b, 1)]
        if len(hits) != 1:
            _fail("full-optimality", f"A={sorted(a)}: {len(hits)} optimal bases")


def check_duality_of_alpha(m):
    md = core.dual(m)
    ground = m.ground_set
    for a in _all_subsets(m.n):
        lhs = bijection.active_basis(core.reorient(md, a))
        rhs = ground - bijection.active_basis(core.reorient(m, a))
        if lhs != rhs:
            _fail("alpha-duality", f"A={sorted(a)}")


def check_active_duality_bounded(m):
    if m.n <= 1:
        return
    for a in _all_subsets(m.n):
        r = core.reorient(m, a)
        if core.is_bounded(r, 1) and not bijection.check_active_duality(r):
            _fail("active-duality", f"A={sorted(a)}")


def check_recursive_definitions(m):
    for a in _all_subsets(m.n):
        r = core.reorient(m, a)
        b = bijection.active_basis(r)
        if bijection.active_basis_recursive(r) != b:
            _fail("recursive-alpha", f"A={sorted(a)}: cocircuit induction")
        if bijection.active_basis_recursive(r, circuit_induction=True) != b:
            _fail("recursive-alpha", f"A={sorted(a)}: circuit induction")


def check_tutte_routes(m):
    by_bases = tutte.tutte_from_bases(m)
    if tutte.tutte_from_orientations(m) != by_bases:
        _fail("tutte", "orientation route disagrees with basis route")
    if tutte.tutte_delcon_oracle(m) != by_bases:
        _fail("tutte", "deletion/contraction oracle disagrees")
    for x, u, y, v in itertools.product(range(3), repeat=4):
        want = by_bases.evaluate(x + u, y + v)
        if tutte.four_var_subset_sum(m, x, u, y, v) != want:
            _fail("tutte", f"subset sum at {(x, u, y, v)}")
        if tutte.four_var_reorientation_sum(m, x, u, y, v) != want:
            _fail("tutte", f"reorientation sum at {(x, u, y, v)}")
    if by_bases.evaluate(1, 1) != len(core.bases(m)):
        _fail("tutte", "t(1,1) is not the number of bases")
    if by_bases.evaluate(2, 2) != 1 << m.n:
        _fail("tutte", "t(2,2) is not 2^n")
    if m.n > 0 and by_bases.coefficient(0, 0) != 0:
        _fail("tutte", "b_00 nonzero for a nonempty ground set")


def check_class_counts(m):
    t = tutte.tutte_from_bases(m)
    reps = acyclic_reps = cyclic_reps = active_fixed = dual_fixed = 0
    for a in _all_subsets(m.n):
        r = core.reorient(m, a)
        ostar, o = activities.orientation_activities(r)
        if not (a & o):
            active_fixed += 1
        if not (a & ostar):
            dual_fixed += 1
        if not (a & (o | ostar)):
            reps += 1
            if not o:
                acyclic_reps += 1
            if not ostar:
                cyclic_reps += 1
    expected = [
        (reps, t.evaluate(1, 1), "class representatives"),
        (acyclic_reps, t.evaluate(1, 0), "acyclic classes"),
        (cyclic_reps, t.evaluate(0, 1), "totally cyclic classes"),
        (active_fixed, t.evaluate(2, 1), "active-fixed reorientations"),
        (dual_fixed, t.evaluate(1, 2), "dual-active-fixed reorientations"),
    ]
    for got, want, label in expected:
        if got != want:
            _fail("class-counts", f"{label}: {got} != {want}")


def check_interval_unions(m):
    independents = set()
    spanning = set()
    supports = m.circuit_supports()
    for a in _all_subsets(m.n):
        if not any(s <= a for s in supports):
            independents.add(a)
        if core.subset_rank(m, a) == m.rank:
            spanning.add(a)
    lower_union = set()
    upper_union = set()
    for b in core.bases(m):
        internal, external = activities.basis_activities(m, b)
        for k in range(len(internal) + 1):
            for drop in itertools.combinations(sorted(internal), k):
                lower_union.add(b - frozenset(drop))
        for k in range(len(external) + 1):
            for add in itertools.combinations(sorted(external), k):
                upper_union.add(b | frozenset(add))
    if lower_union != independents:
        _fail("interval-unions", "lower intervals are not the independent sets")
    if upper_union != spanning:
        _fail("interval-unions", "upper intervals are not the spanning sets")


def check_filtration_uniqueness(m, *, cap: int = 7):
    if m.n > cap:
        return
    filtrations = activities.all_connected_filtrations(m)
    for a in _all_subsets(m.n):
        r = core.reorient(m, a)
        valid = []
        for f in filtrations:
            ok = True
            for i, minor in enumerate(activities.active_minors(r, f)):
                want_dual = f.part_is_cyclic(i)
                if want_dual and not core.is_dual_bounded(minor, 1):
                    ok = False
                    break
                if not want_dual and not core.is_bounded(minor, 1):
                    ok = False
                    break
            if ok:
                valid.append(f)
        if len(valid) != 1 or valid[0] != activities.active_filtration_orientation(r):
            _fail("filtration-uniqueness", f"A={sorted(a)}: {len(valid)} decompositions")


ALL_CHECKS = [
    ("structure", check_structure),
    ("pivot-property", check_pivot_property),
    ("compose-support", check_compose_full_support),
    ("activity-duality", check_activity_duality),
    ("filtration-duality", check_filtration_duality),
    ("bounded-minors", check_bounded_minors),
    ("class-invariance", check_class_invariance),
    ("fixed-representative", check_fixed_representative),
    ("bijection", check_bijection),
    ("activity-preservation", check_activity_preservation),
    ("refined-bijection", check_refined_bijection),
    ("full-optimality-uniqueness", check_full_optimality_uniqueness),
    ("alpha-duality", check_duality_of_alpha),
    ("active-duality", check_active_duality_bounded),
    ("recursive-definitions", check_recursive_definitions),
    ("tutte-routes", check_tutte_routes),
    ("class-counts", check_class_counts),
    ("interval-unions", check_interval_unions),
    ("filtration-uniqueness", check_filtration_uniqueness),
]


def run_all(m, report=print) -> bool:
    """Run the whole suite; report one line per check.  Returns success."""
    core.check_enumeration_cap(m.n)
    for name, check in ALL_CHECKS:
        try:
            check(m)
        except VerificationFailure as exc:
            report(f"FAIL {exc}")
            return False
        report(f"ok {name}")
    return True
