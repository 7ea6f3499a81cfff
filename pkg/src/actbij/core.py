"""Signed sets and oriented matroids on a linearly ordered ground set.

Elements are the integers 1..n and the linear order is numeric order.
An oriented matroid is stored by its full lists of signed circuits and
signed cocircuits, one canonical representative per opposite pair (the
smallest element of the support is positive).  Minors are re-indexed on
1..m; the i-th new element is the i-th smallest kept original element,
so the original identities are always recoverable via ``sorted(kept)``.

All values are immutable; every operation is a pure function of its
inputs and safe for unrestricted concurrent use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

# Exhaustive operations are meant for desk-scale instances (soft cap
# n <= 16); 2^n enumeration entry points refuse anything above this.
ENUMERATION_CAP = 24


class InvalidOrientedMatroid(ValueError):
    """Raised when circuit/cocircuit data violates a checked invariant."""


class GroundSetTooLarge(ValueError):
    """Raised by 2^n enumeration entry points when n exceeds the cap."""


def check_enumeration_cap(n: int) -> None:
    if n > ENUMERATION_CAP:
        raise GroundSetTooLarge(
            f"refusing 2^{n} enumeration: ground set size {n} exceeds cap {ENUMERATION_CAP}"
        )


@dataclass(frozen=True)
class SignedSubset:
    """A pair of disjoint element sets (positive part, negative part)."""

    positive: frozenset[int]
    negative: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))
        if self.positive & self.negative:
            raise ValueError("positive and negative parts must be disjoint")

    @property
    def support(self) -> frozenset[int]:
        return self.positive | self.negative

    def sign(self, e: int) -> int:
        """+1, -1 or 0."""
        if e in self.positive:
            return 1
        if e in self.negative:
            return -1
        return 0

    def negated(self) -> SignedSubset:
        return SignedSubset(self.negative, self.positive)

    def canonical(self) -> SignedSubset:
        """The representative of {X, -X} whose smallest support element is positive."""
        if not self.support:
            return self
        return self if min(self.support) in self.positive else self.negated()

    def reoriented(self, flipped: frozenset[int]) -> SignedSubset:
        """Swap the sign of every element of ``flipped``."""
        pos = (self.positive - flipped) | (self.negative & flipped)
        neg = (self.negative - flipped) | (self.positive & flipped)
        return SignedSubset(pos, neg)

    def restricted(self, kept: frozenset[int]) -> SignedSubset:
        return SignedSubset(self.positive & kept, self.negative & kept)

    def relabeled(self, mapping: dict[int, int]) -> SignedSubset:
        return SignedSubset(
            frozenset(mapping[e] for e in self.positive),
            frozenset(mapping[e] for e in self.negative),
        )

    def is_positive_pair(self) -> bool:
        """True when either representative of {X, -X} is all-positive."""
        return bool(self.support) and (not self.negative or not self.positive)

    @classmethod
    def from_string(cls, s: str) -> SignedSubset:
        """Build from a sign string over ``+ - 0``; position i is element i (1-based)."""
        pos, neg = set(), set()
        for i, c in enumerate(s, start=1):
            if c == "+":
                pos.add(i)
            elif c == "-":
                neg.add(i)
            elif c != "0":
                raise ValueError(f"invalid sign character {c!r}")
        return cls(frozenset(pos), frozenset(neg))

    def to_string(self, n: int) -> str:
        return "".join(
            "+" if i in self.positive else "-" if i in self.negative else "0"
            for i in range(1, n + 1)
        )

    def __repr__(self) -> str:
        def fmt(x: frozenset[int], mark: str) -> list[str]:
            return [f"{mark}{e}" for e in sorted(x)]

        body = ",".join(
            sorted(fmt(self.positive, "+") + fmt(self.negative, "-"), key=lambda t: int(t[1:]))
        )
        return f"SignedSubset({body})"


def compose(x: SignedSubset, y: SignedSubset) -> SignedSubset:
    """Composition x∘y: the sign of e is its sign in x if nonzero, else in y."""
    pos = x.positive | (y.positive - x.support)
    neg = x.negative | (y.negative - x.support)
    return SignedSubset(pos, neg)


def _mask(elements) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def _canonical_list(signed_sets) -> tuple[SignedSubset, ...]:
    out = {}
    for x in signed_sets:
        c = x.canonical()
        key = tuple(sorted(c.support))
        if key in out and out[key] != c:
            raise InvalidOrientedMatroid(
                f"conflicting signatures on support {set(key)}"
            )
        out[key] = c
    return tuple(out[k] for k in sorted(out))


def _check_antichain(sets: tuple[SignedSubset, ...], kind: str) -> None:
    supports = [x.support for x in sets]
    for a, b in itertools.combinations(supports, 2):
        if a <= b or b <= a:
            raise InvalidOrientedMatroid(
                f"{kind} supports are not an antichain: {set(a)} vs {set(b)}"
            )


def _check_orthogonality(circuits, cocircuits) -> None:
    for c in circuits:
        for d in cocircuits:
            common = c.support & d.support
            if not common:
                continue
            prods = {c.sign(e) * d.sign(e) for e in common}
            if prods != {1, -1}:
                raise InvalidOrientedMatroid(
                    f"orthogonality fails for circuit {c!r} and cocircuit {d!r}"
                )


def _greedy_rank(n: int, circuit_supports) -> int:
    """Size of the lexicographically smallest maximal support-free subset."""
    independent: set[int] = set()
    for e in range(1, n + 1):
        trial = independent | {e}
        if not any(s <= trial for s in circuit_supports):
            independent.add(e)
    return len(independent)


@dataclass(frozen=True)
class OrientedMatroid:
    """An oriented matroid on 1..n given by all signed circuits and cocircuits."""

    n: int
    circuits: tuple[SignedSubset, ...]
    cocircuits: tuple[SignedSubset, ...]
    rank: int

    @property
    def ground_set(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    def circuit_supports(self) -> tuple[frozenset[int], ...]:
        return tuple(c.support for c in self.circuits)

    def __repr__(self) -> str:
        return (
            f"OrientedMatroid(n={self.n}, rank={self.rank}, "
            f"{len(self.circuits)} circuits, {len(self.cocircuits)} cocircuits)"
        )


def om_from_lists(n: int, circuits, cocircuits, *, validate: bool = True) -> OrientedMatroid:
    """Canonicalize, deduplicate and validate circuit/cocircuit data.

    Validation checks the stored invariants: nonempty supports, antichain
    supports, circuit/cocircuit orthogonality, and agreement of the rank
    computed greedily from the circuits with n minus the rank computed
    from the cocircuits read as circuits of the dual.
    """
    if n < 0:
        raise ValueError("ground set size must be nonnegative")
    for x in itertools.chain(circuits, cocircuits):
        if not x.support:
            raise InvalidOrientedMatroid("signed sets must have nonempty support")
        if max(x.support) > n or min(x.support) < 1:
            raise InvalidOrientedMatroid(f"element out of range 1..{n} in {x!r}")
    ctuple = _canonical_list(circuits)
    dtuple = _canonical_list(cocircuits)
    rank = _greedy_rank(n, [c.support for c in ctuple])
    if validate:
        _check_antichain(ctuple, "circuit")
        _check_antichain(dtuple, "cocircuit")
        _check_orthogonality(ctuple, dtuple)
        dual_rank = _greedy_rank(n, [d.support for d in dtuple])
        if rank + dual_rank != n:
            raise InvalidOrientedMatroid(
                f"rank mismatch: circuits give rank {rank}, "
                f"cocircuits give dual rank {dual_rank}, n = {n}"
            )
    return OrientedMatroid(n, ctuple, dtuple, rank)


def dual(m: OrientedMatroid) -> OrientedMatroid:
    """Swap circuits and cocircuits; rank becomes n - rank."""
    return OrientedMatroid(m.n, m.cocircuits, m.circuits, m.n - m.rank)


def reorient(m: OrientedMatroid, flipped) -> OrientedMatroid:
    """Flip all signs on the element set ``flipped``, re-canonicalized."""
    a = frozenset(flipped)
    if not a:
        return m
    return OrientedMatroid(
        m.n,
        _canonical_list(c.reoriented(a) for c in m.circuits),
        _canonical_list(d.reoriented(a) for d in m.cocircuits),
        m.rank,
    )


def _minimal_restrictions(signed_sets, removed: frozenset[int]) -> list[SignedSubset]:
    restricted = [x.restricted(frozenset(x.support) - removed) for x in signed_sets]
    restricted = [x for x in restricted if x.support]
    keep = []
    for x in restricted:
        if not any(y.support < x.support for y in restricted):
            keep.append(x)
    return keep


def _reindexed(n: int, circuits, cocircuits, deleted: frozenset[int]) -> OrientedMatroid:
    kept = sorted(set(range(1, n + 1)) - deleted)
    mapping = {e: i for i, e in enumerate(kept, start=1)}
    cs = [c.relabeled(mapping) for c in circuits]
    ds = [d.relabeled(mapping) for d in cocircuits]
    m = len(kept)
    return OrientedMatroid(
        m,
        _canonical_list(cs),
        _canonical_list(ds),
        _greedy_rank(m, [c.support for c in cs]),
    )


def delete(m: OrientedMatroid, removed) -> OrientedMatroid:
    """Delete the element set: keep circuits avoiding it, restrict cocircuits.

    The result lives on 1..(n-|removed|); new element i is the i-th
    smallest kept original element.
    """
    a = frozenset(removed)
    circuits = [c for c in m.circuits if not (c.support & a)]
    cocircuits = _minimal_restrictions(m.cocircuits, a)
    return _reindexed(m.n, circuits, cocircuits, a)


def contract(m: OrientedMatroid, removed) -> OrientedMatroid:
    """Contract the element set; dual rules to :func:`delete`."""
    a = frozenset(removed)
    circuits = _minimal_restrictions(m.circuits, a)
    cocircuits = [d for d in m.cocircuits if not (d.support & a)]
    return _reindexed(m.n, circuits, cocircuits, a)


def restrict_contract(m: OrientedMatroid, keep, contracted) -> OrientedMatroid:
    """The minor M(keep)/contracted, re-indexed on sorted(keep - contracted)."""
    keep = frozenset(keep)
    contracted = frozenset(contracted)
    inner = delete(m, m.ground_set - keep)
    kept = sorted(keep)
    mapping = {e: i for i, e in enumerate(kept, start=1)}
    return contract(inner, frozenset(mapping[e] for e in contracted))


def positive_circuits(m: OrientedMatroid) -> list[SignedSubset]:
    """Stored circuits whose pair {X, -X} contains an all-positive member."""
    return [c for c in m.circuits if c.is_positive_pair()]


def positive_cocircuits(m: OrientedMatroid) -> list[SignedSubset]:
    return [d for d in m.cocircuits if d.is_positive_pair()]


def is_acyclic(m: OrientedMatroid) -> bool:
    return not positive_circuits(m)


def is_totally_cyclic(m: OrientedMatroid) -> bool:
    return not positive_cocircuits(m)


def is_bounded(m: OrientedMatroid, p: int) -> bool:
    """Acyclic and every positive cocircuit contains p (single isthmus counts)."""
    if not 1 <= p <= m.n:
        raise ValueError(f"element {p} not in the ground set")
    return is_acyclic(m) and all(p in d.support for d in positive_cocircuits(m))


def is_dual_bounded(m: OrientedMatroid, p: int) -> bool:
    """Totally cyclic and every positive circuit contains p (single loop counts)."""
    if not 1 <= p <= m.n:
        raise ValueError(f"element {p} not in the ground set")
    return is_totally_cyclic(m) and all(p in c.support for c in positive_circuits(m))


@lru_cache(maxsize=4096)
def bases(m: OrientedMatroid) -> tuple[frozenset[int], ...]:
    """All maximal circuit-support-free subsets, in lexicographic order."""
    check_enumeration_cap(m.n)
    supports = m.circuit_supports()
    found = []
    for combo in itertools.combinations(range(1, m.n + 1), m.rank):
        b = frozenset(combo)
        if not any(s <= b for s in supports):
            found.append(b)
    return tuple(found)


def is_basis(m: OrientedMatroid, b: frozenset[int]) -> bool:
    return len(b) == m.rank and not any(s <= b for s in m.circuit_supports())


def fundamental_circuit(m: OrientedMatroid, b: frozenset[int], e: int) -> SignedSubset:
    """The unique circuit inside B ∪ {e}, sign-normalized so that e is positive."""
    if e in b:
        raise ValueError(f"element {e} lies in the basis")
    allowed = b | {e}
    hits = [c for c in m.circuits if c.support <= allowed]
    if len(hits) != 1:
        raise InvalidOrientedMatroid(
            f"expected exactly one circuit inside {sorted(allowed)}, found {len(hits)}"
        )
    c = hits[0]
    return c if e in c.positive else c.negated()


def fundamental_cocircuit(m: OrientedMatroid, b: frozenset[int], elt: int) -> SignedSubset:
    """The unique cocircuit inside (E∖B) ∪ {b}, sign-normalized so that b is positive."""
    if elt not in b:
        raise ValueError(f"element {elt} is not in the basis")
    allowed = (m.ground_set - b) | {elt}
    hits = [d for d in m.cocircuits if d.support <= allowed]
    if len(hits) != 1:
        raise InvalidOrientedMatroid(
            f"expected exactly one cocircuit inside {sorted(allowed)}, found {len(hits)}"
        )
    d = hits[0]
    return d if elt in d.positive else d.negated()


def subset_rank(m: OrientedMatroid, subset) -> int:
    """Rank of a subset: greedy independence within it over circuit supports."""
    subset = frozenset(subset)
    independent: set[int] = set()
    supports = m.circuit_supports()
    for e in sorted(subset):
        trial = independent | {e}
        if not any(s <= trial for s in supports):
            independent.add(e)
    return len(independent)


def is_connected_matroid(m: OrientedMatroid) -> bool:
    """Connected: every pair of elements lies in a common circuit (n <= 1 counts)."""
    if m.n <= 1:
        return True
    supports = m.circuit_supports()
    for e, f in itertools.combinations(range(1, m.n + 1), 2):
        if not any(e in s and f in s for s in supports):
            return False
    return True
