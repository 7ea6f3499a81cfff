"""Activities and active filtrations of bases and of oriented matroids.

A filtration of the ordered ground set E is a nested chain

    ∅ = F'_ε ⊂ … ⊂ F'_0 = F_c = F_0 ⊂ … ⊂ F_ι = E

with the cyclic flat F_c marked, such that the minima of the successive
differences increase away from F_c on both sides.  The differences are
the *parts*; parts below F_c are cyclic ("external"), parts above are
acyclic ("internal").
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    OrientedMatroid,
    bases,
    fundamental_circuit,
    fundamental_cocircuit,
    is_connected_matroid,
    positive_circuits,
    positive_cocircuits,
    reorient,
    restrict_contract,
)


@dataclass(frozen=True)
class Filtration:
    """A nested subset chain with the position of the cyclic flat marked.

    Two filtrations are equal iff their chains and cyclic-flat indices
    are equal; the partition alone does not determine the placement of
    the cyclic flat.
    """

    chain: tuple[frozenset[int], ...]
    cyclic_index: int

    def __post_init__(self) -> None:
        chain = self.chain
        if not chain or chain[0]:
            raise ValueError("chain must start at the empty set")
        if not 0 <= self.cyclic_index < len(chain):
            raise ValueError("cyclic flat index out of range")
        for small, large in zip(chain, chain[1:]):
            if not small < large:
                raise ValueError("chain must be strictly nested")
        lows = [min(large - small) for small, large in zip(chain, chain[1:])]
        upper = lows[self.cyclic_index:]
        lower = lows[: self.cyclic_index]
        if any(a >= b for a, b in zip(upper, upper[1:])):
            raise ValueError("part minima above the cyclic flat must increase")
        if any(a <= b for a, b in zip(lower, lower[1:])):
            raise ValueError("part minima below the cyclic flat must decrease toward it")

    @property
    def ground_set(self) -> frozenset[int]:
        return self.chain[-1]

    @property
    def cyclic_flat(self) -> frozenset[int]:
        return self.chain[self.cyclic_index]

    @property
    def epsilon(self) -> int:
        return self.cyclic_index

    @property
    def iota(self) -> int:
        return len(self.chain) - 1 - self.cyclic_index

    @property
    def parts(self) -> tuple[frozenset[int], ...]:
        """Successive differences, in chain order; they partition E."""
        return tuple(b - a for a, b in zip(self.chain, self.chain[1:]))

    def part_is_cyclic(self, i: int) -> bool:
        """Whether the i-th part (chain order) lies inside the cyclic flat."""
        return i < self.cyclic_index

    @classmethod
    def from_parts(cls, cyclic_parts, acyclic_parts) -> Filtration:
        """Assemble the chain: cyclic parts by decreasing minimum from ∅,
        then acyclic parts by increasing minimum."""
        chain = [frozenset()]
        for p in sorted(cyclic_parts, key=min, reverse=True):
            chain.append(chain[-1] | p)
        cyclic_index = len(chain) - 1
        for p in sorted(acyclic_parts, key=min):
            chain.append(chain[-1] | p)
        return cls(tuple(chain), cyclic_index)


def basis_activities(m: OrientedMatroid, b: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    """(Int(B), Ext(B)): elements that are the minimum of their own
    fundamental cocircuit, resp. circuit.  Depends only on supports."""
    internal = frozenset(
        e for e in b if e == min(fundamental_cocircuit(m, b, e).support)
    )
    external = frozenset(
        e
        for e in m.ground_set - b
        if e == min(fundamental_circuit(m, b, e).support)
    )
    return internal, external


def orientation_activities(m: OrientedMatroid) -> tuple[frozenset[int], frozenset[int]]:
    """(O*(M), O(M)): minima of positive cocircuits, resp. circuits."""
    ostar = frozenset(min(d.support) for d in positive_cocircuits(m))
    o = frozenset(min(c.support) for c in positive_circuits(m))
    return ostar, o


def active_filtration_orientation(m: OrientedMatroid) -> Filtration:
    """The active filtration of an oriented matroid.

    F_c is the union of the positive circuits (equivalently, the
    complement of the union of the positive cocircuits), the lower chain
    collects positive circuits by decreasing threshold on their minima,
    and the upper chain dually removes positive cocircuits.
    """
    pos_c = [c.support for c in positive_circuits(m)]
    pos_d = [d.support for d in positive_cocircuits(m)]
    active = sorted({min(s) for s in pos_c})
    dual_active = sorted({min(s) for s in pos_d})
    ground = m.ground_set
    chain: list[frozenset[int]] = [frozenset()]
    for a in reversed(active):
        chain.append(frozenset().union(*(s for s in pos_c if min(s) >= a)))
    cyclic_index = len(chain) - 1
    for a in dual_active[1:]:
        chain.append(ground - frozenset().union(*(s for s in pos_d if min(s) >= a)))
    if dual_active:
        chain.append(ground)
    if chain[-1] != ground:
        raise AssertionError("active filtration does not reach the ground set")
    return Filtration(tuple(chain), cyclic_index)


def active_minors(m: OrientedMatroid, f: Filtration) -> list[OrientedMatroid]:
    """The minors M(G)/F for consecutive chain subsets F ⊂ G, in chain order.

    Each minor is re-indexed on 1..|part|; original identities are
    sorted(part).  For the active filtration these are bounded (upper),
    resp. dual-bounded (lower), w.r.t. their smallest element.
    """
    return [
        restrict_contract(m, large, small)
        for small, large in zip(f.chain, f.chain[1:])
    ]


def is_connected_filtration(m: OrientedMatroid, f: Filtration) -> bool:
    """Every minor above the cyclic flat is connected and not a loop;
    every minor below is connected and not an isthmus."""
    for i, minor in enumerate(active_minors(m, f)):
        if not is_connected_matroid(minor):
            return False
        if minor.n == 1:
            is_loop = len(minor.circuits) == 1
            if f.part_is_cyclic(i) != is_loop:
                return False
    return True


def basis_pass(
    m: OrientedMatroid,
    b: frozenset[int],
    flip_active: frozenset[int] = frozenset(),
):
    """Single pass over E computing the active partition of a basis and one
    preimage reorientation, from the fundamental circuits/cocircuits only.

    Every element is assigned a part label (the smallest element of its
    part) and an internal/external nature; at each active element the
    arbitrary sign choice is "flip iff the element is in flip_active",
    every other element's sign is forced by the smallest element of its
    part within its fundamental circuit/cocircuit.

    Returns (part, external, flipped): the label map, the nature map and
    the reorientation.
    """
    part: dict[int, int] = {}
    external: dict[int, bool] = {}
    flipped: set[int] = set()
    for e in range(1, m.n + 1):
        in_basis = e in b
        fund = (
            fundamental_cocircuit(m, b, e)
            if in_basis
            else fundamental_circuit(m, b, e)
        )
        support = fund.support
        if min(support) == e:
            part[e] = e
            external[e] = not in_basis
            if e in flip_active:
                flipped.add(e)
            continue
        earlier = [c for c in support if c < e]
        cross = [c for c in earlier if external[c] == in_basis]
        if cross:
            external[e] = in_basis
            part[e] = max(part[c] for c in cross)
        else:
            external[e] = not in_basis
            part[e] = min(part[c] for c in earlier)
        anchor = min(c for c in earlier if part[c] == part[e])
        sign = fund.sign(e) * fund.sign(anchor)
        if anchor in flipped:
            sign = -sign
        if sign > 0:
            flipped.add(e)
    return part, external, frozenset(flipped)


def _parts_of(part: dict[int, int]) -> dict[int, frozenset[int]]:
    groups: dict[int, set[int]] = {}
    for e, label in part.items():
        groups.setdefault(label, set()).add(e)
    return {label: frozenset(group) for label, group in groups.items()}


def active_filtration_basis(m: OrientedMatroid, b: frozenset[int]) -> Filtration:
    """The unique connected filtration attached to a basis, by the
    single-pass part mapping; the part minima are Int(B) ∪ Ext(B) and the
    cyclic flat is the union of the external parts."""
    part, external, _ = basis_pass(m, b)
    groups = _parts_of(part)
    cyclic = [g for label, g in groups.items() if external[label]]
    acyclic = [g for label, g in groups.items() if not external[label]]
    return Filtration.from_parts(cyclic, acyclic)


def activity_class(m_ref: OrientedMatroid, a) -> list[frozenset[int]]:
    """All 2^(ι+ε) reorientations obtained from A by flipping unions of
    parts of the active partition of -_A M, ordered by subset rank over
    the parts sorted by their minima."""
    a = frozenset(a)
    f = active_filtration_orientation(reorient(m_ref, a))
    parts = sorted(f.parts, key=min)
    members = []
    for selector in range(1 << len(parts)):
        flip = frozenset().union(
            *(parts[i] for i in range(len(parts)) if selector >> i & 1)
        )
        members.append(a ^ flip)
    return members


@lru_cache(maxsize=2048)
def _interval_table(m: OrientedMatroid):
    table = []
    for b in bases(m):
        internal, external_ = basis_activities(m, b)
        table.append((b, internal, external_, b - internal, b | external_))
    return tuple(table)


def basis_of_subset(m: OrientedMatroid, a) -> frozenset[int]:
    """The unique basis whose interval [B∖Int(B), B∪Ext(B)] contains A."""
    a = frozenset(a)
    for b, _, _, lo, hi in _interval_table(m):
        if lo <= a <= hi:
            return b
    raise AssertionError(f"interval partition of 2^E misses {sorted(a)}")


def interval_of_basis(m: OrientedMatroid, b: frozenset[int]):
    """(B∖Int(B), B∪Ext(B)); over all bases these intervals partition 2^E."""
    internal, external = basis_activities(m, b)
    return b - internal, b | external


def subset_params(m: OrientedMatroid, a):
    """(Int(A), P(A), Ext(A), Q(A)) for the owning basis B of A:
    Int(B)∩A, Int(B)∖A, Ext(B)∖A, Ext(B)∩A."""
    a = frozenset(a)
    for b, internal, external, lo, hi in _interval_table(m):
        if lo <= a <= hi:
            return internal & a, internal - a, external - a, external & a
    raise AssertionError(f"interval partition of 2^E misses {sorted(a)}")


def reorientation_params(m_ref: OrientedMatroid, a):
    """(Θ*, Θ̄*, Θ, Θ̄) of the reorientation A w.r.t. the reference:
    the dual-active and active sets of -_A M split by membership in A."""
    a = frozenset(a)
    ostar, o = orientation_activities(reorient(m_ref, a))
    return ostar - a, ostar & a, o - a, o & a


@dataclass(frozen=True)
class ActivityReport:
    """All activity data of one reorientation A of a reference OM:
    orientation activities of -_A M, the four reorientation parameters,
    and the subset parameters of the refined image of A."""

    o: frozenset[int]
    ostar: frozenset[int]
    internal: frozenset[int]
    external: frozenset[int]
    theta: frozenset[int]
    theta_bar: frozenset[int]
    theta_star: frozenset[int]
    theta_star_bar: frozenset[int]
    p: frozenset[int]
    q: frozenset[int]


def subsets_by_rank(n: int):
    """All subsets of 1..n ordered by bitmask rank (element i = bit i-1)."""
    for mask in range(1 << n):
        yield frozenset(i for i in range(1, n + 1) if mask >> (i - 1) & 1)


@lru_cache(maxsize=300000)
def _minor_step_ok(m: OrientedMatroid, small: frozenset[int], large: frozenset[int], cyclic: bool) -> bool:
    minor = restrict_contract(m, large, small)
    if not is_connected_matroid(minor):
        return False
    if minor.n == 1:
        return (len(minor.circuits) == 1) == cyclic
    return True


def all_connected_filtrations(m: OrientedMatroid) -> list[Filtration]:
    """Exhaustive enumeration of the connected filtrations of M.

    Test/verification oracle: a filtration is a set partition of E with a
    subset of blocks marked cyclic (the chain is recovered from the block
    minima), so walk all partitions and all markings, filtering by minor
    connectivity.  Exponential; desk scale only.
    """
    ground = sorted(m.ground_set)
    if not ground:
        return [Filtration((frozenset(),), 0)]

    def set_partitions(elements: list[int]):
        if not elements:
            yield []
            return
        first, rest = elements[0], elements[1:]
        for blocks in set_partitions(rest):
            for i in range(len(blocks)):
                yield blocks[:i] + [blocks[i] | {first}] + blocks[i + 1:]
            yield [*blocks, frozenset({first})]

    results = []
    for blocks in set_partitions(ground):
        for marking in range(1 << len(blocks)):
            cyclic = [blocks[i] for i in range(len(blocks)) if marking >> i & 1]
            acyclic = [blocks[i] for i in range(len(blocks)) if not marking >> i & 1]
            f = Filtration.from_parts(cyclic, acyclic)
            if all(
                _minor_step_ok(m, small, large, f.part_is_cyclic(i))
                for i, (small, large) in enumerate(zip(f.chain, f.chain[1:]))
            ):
                results.append(f)
    return results
