"""Tutte polynomial by several mutually checking routes.

Routes: basis activities, reorientation activities (2^n sweep with exact
division of the class sizes), and two four-variable expansions (subset
parameters and reorientation parameters).  An independent
deletion/contraction recursion on unsigned circuit supports serves as an
oracle.  All coefficients and evaluations are exact integers.

The memoized sweeps cache per oriented matroid behind ``lru_cache``,
whose internal lock makes concurrent readers safe in CPython.
"""

from __future__ import annotations

from functools import lru_cache

from .activities import _interval_table, basis_activities
from .core import (
    OrientedMatroid,
    bases,
    check_enumeration_cap,
)


class TuttePolynomial:
    """Map from (internal degree, external degree) to a nonnegative count."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        items = {(i, j): c for (i, j), c in dict(coeffs).items() if c}
        self._coeffs = tuple(sorted(items.items()))

    def coefficient(self, i: int, j: int) -> int:
        return dict(self._coeffs).get((i, j), 0)

    def items(self):
        return list(self._coeffs)

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self._coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, TuttePolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for (i, j), c in sorted(self._coeffs, key=lambda t: (-t[0][0], t[0][1])):
            body = ""
            if i:
                body += "x" if i == 1 else f"x^{i}"
            if j:
                body += "y" if j == 1 else f"y^{j}"
            if not body:
                terms.append(str(c))
            else:
                terms.append(body if c == 1 else f"{c}{body}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"TuttePolynomial({self})"


@lru_cache(maxsize=4096)
def tutte_from_bases(m: OrientedMatroid) -> TuttePolynomial:
    """Count bases by (internal activity, external activity)."""
    counts: dict[tuple[int, int], int] = {}
    for b in bases(m):
        internal, external = basis_activities(m, b)
        key = (len(internal), len(external))
        counts[key] = counts.get(key, 0) + 1
    return TuttePolynomial(counts)


def _orientation_signatures(m: OrientedMatroid):
    def sig(signed_sets):
        out = []
        for x in signed_sets:
            supp = 0
            plus = 0
            for e in x.support:
                supp |= 1 << (e - 1)
            for e in x.positive:
                plus |= 1 << (e - 1)
            out.append((supp, plus, 1 << (min(x.support) - 1)))
        return tuple(out)

    return sig(m.circuits), sig(m.cocircuits)


@lru_cache(maxsize=512)
def _reorientation_histogram(m: OrientedMatroid):
    """Counts of (|Θ*|, |Θ̄*|, |Θ|, |Θ̄|) over all 2^n reorientations."""
    check_enumeration_cap(m.n)
    circuit_sigs, cocircuit_sigs = _orientation_signatures(m)
    counts: dict[tuple[int, int, int, int], int] = {}
    bit_count = int.bit_count
    for a in range(1 << m.n):
        underline_o = 0
        for supp, plus, min_bit in circuit_sigs:
            flipped = plus ^ (a & supp)
            if flipped == 0 or flipped == supp:
                underline_o |= min_bit
        underline_ostar = 0
        for supp, plus, min_bit in cocircuit_sigs:
            flipped = plus ^ (a & supp)
            if flipped == 0 or flipped == supp:
                underline_ostar |= min_bit
        key = (
            bit_count(underline_ostar & ~a),
            bit_count(underline_ostar & a),
            bit_count(underline_o & ~a),
            bit_count(underline_o & a),
        )
        counts[key] = counts.get(key, 0) + 1
    return counts


def tutte_from_orientations(m: OrientedMatroid) -> TuttePolynomial:
    """Count reorientations by (dual-activity, activity) and divide each
    o_{ι,ε} by 2^(ι+ε); an inexact division signals corrupt input."""
    counts: dict[tuple[int, int], int] = {}
    for (ts, tsb, th, thb), c in _reorientation_histogram(m).items():
        key = (ts + tsb, th + thb)
        counts[key] = counts.get(key, 0) + c
    coeffs = {}
    for (iota, epsilon), o in counts.items():
        q, r = divmod(o, 1 << (iota + epsilon))
        if r:
            raise AssertionError(
                f"o_({iota},{epsilon}) = {o} is not divisible by 2^{iota + epsilon}"
            )
        coeffs[(iota, epsilon)] = q
    return TuttePolynomial(coeffs)


@lru_cache(maxsize=None)
def _delcon(ground: frozenset[int], supports: frozenset[frozenset[int]]) -> TuttePolynomial:
    if not ground:
        return TuttePolynomial({(0, 0): 1})
    e = min(ground)
    rest = ground - {e}
    deleted = frozenset(s for s in supports if e not in s)
    if frozenset({e}) in supports:
        sub = _delcon(rest, deleted)
        return TuttePolynomial({(i, j + 1): c for (i, j), c in sub.items()})
    if all(e not in s for s in supports):
        sub = _delcon(rest, deleted)
        return TuttePolynomial({(i + 1, j): c for (i, j), c in sub.items()})
    shrunk = [s - {e} for s in supports]
    contracted = frozenset(
        s for s in shrunk if s and not any(t < s for t in shrunk if t)
    )
    left = _delcon(rest, deleted)
    right = _delcon(rest, contracted)
    coeffs: dict[tuple[int, int], int] = {}
    for poly in (left, right):
        for key, c in poly.items():
            coeffs[key] = coeffs.get(key, 0) + c
    return TuttePolynomial(coeffs)


def tutte_delcon_oracle(m: OrientedMatroid) -> TuttePolynomial:
    """Independent loop/isthmus/deletion-contraction recursion over the
    unsigned circuit supports; memoized."""
    return _delcon(m.ground_set, frozenset(m.circuit_supports()))


def beta(m: OrientedMatroid) -> int:
    """b_{1,0}: 1 for an isthmus, 0 for a loop, else the connectivity count."""
    return tutte_from_bases(m).coefficient(1, 0)


def beta_star(m: OrientedMatroid) -> int:
    """b_{0,1}: 0 for an isthmus, 1 for a loop; equals beta when |E| > 1."""
    return tutte_from_bases(m).coefficient(0, 1)


@lru_cache(maxsize=512)
def _subset_histogram(m: OrientedMatroid):
    """Counts of (|Int(A)|, |P(A)|, |Ext(A)|, |Q(A)|) over all A ⊆ E,
    each subset routed through its owning basis interval."""
    check_enumeration_cap(m.n)
    counts: dict[tuple[int, int, int, int], int] = {}
    table = []
    for _, internal, external, lo, hi in _interval_table(m):
        imask = sum(1 << (e - 1) for e in internal)
        emask = sum(1 << (e - 1) for e in external)
        lomask = sum(1 << (e - 1) for e in lo)
        himask = sum(1 << (e - 1) for e in hi)
        table.append((imask, emask, lomask, himask))
    bit_count = int.bit_count
    for a in range(1 << m.n):
        for imask, emask, lomask, himask in table:
            if a & lomask == lomask and a | himask == himask:
                key = (
                    bit_count(imask & a),
                    bit_count(imask & ~a),
                    bit_count(emask & ~a),
                    bit_count(emask & a),
                )
                counts[key] = counts.get(key, 0) + 1
                break
        else:
            raise AssertionError(f"subset {a:b} not covered by any basis interval")
    return counts


def four_var_subset_sum(m: OrientedMatroid, x: int, u: int, y: int, v: int) -> int:
    """Σ_A x^|Int(A)| u^|P(A)| y^|Ext(A)| v^|Q(A)| over all subsets;
    equals t(x+u, y+v)."""
    return sum(
        c * x**i * u**p * y**e * v**q
        for (i, p, e, q), c in _subset_histogram(m).items()
    )


def four_var_reorientation_sum(m_ref: OrientedMatroid, x: int, u: int, y: int, v: int) -> int:
    """Σ_A x^|Θ*(A)| u^|Θ̄*(A)| y^|Θ(A)| v^|Θ̄(A)| over all reorientations;
    equals t(x+u, y+v) for any reference orientation."""
    return sum(
        c * x**ts * u**tsb * y**th * v**thb
        for (ts, tsb, th, thb), c in _reorientation_histogram(m_ref).items()
    )


__all__ = [
    "TuttePolynomial",
    "beta",
    "beta_star",
    "four_var_reorientation_sum",
    "four_var_subset_sum",
    "tutte_delcon_oracle",
    "tutte_from_bases",
    "tutte_from_orientations",
]
