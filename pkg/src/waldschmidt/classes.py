"""Candidate negative classes, roots, exceptional classes, Weyl reflections.

Every prime divisor of negative self-intersection on a blowup of the
plane at 2 <= r <= 8 points lies in an explicit finite list of lattice
classes.  This module enumerates those lists, the root and exceptional
classes of the lattice, and orbit closures under the Weyl group
generated by the simple reflections.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from .errors import InvalidRootError, OrbitTooLargeError, UnsupportedRankError
from .lattice import DivisorClass, canonical_class, pairing

ORBIT_CAP = 10**6

FAMILY_TAGS = ("B", "V", "L", "Q", "C", "M8")


@dataclass(frozen=True)
class CandidateFamily:
    """One of the families B, V, L, Q, C, M8 of candidate negative classes."""

    tag: str
    members: tuple[DivisorClass, ...]


def _vec(r: int, entries: dict[int, int], a0: int = 0) -> DivisorClass:
    acc = [0] * (r + 1)
    acc[0] = a0
    for i, a in entries.items():
        acc[i] = a
    return DivisorClass(tuple(acc))


def candidate_sets(r: int) -> list[CandidateFamily]:
    """The families whose union contains NEG(X) for every blowup at r points.

    B: the e_i.  V: e_{i1} - e_{i2} - ... - e_{is} with increasing indices.
    L: e0 - sum of >= 2 distinct e_i.  Q: 2*e0 - sum of >= 5 distinct e_i.
    C: 3*e0 - 2*e_{i1} - e_{i2} - ... - e_{is} with s >= 7 distinct indices.
    M8 (r = 8 only): -k + e0 - e_i - e_j - e_l, -k + 2*e0 - six e's, and
    -2*k - e_i.  Members are deduplicated and sorted lexicographically.
    """
    if not 2 <= r <= 8:
        raise UnsupportedRankError(f"candidate sets require 2 <= r <= 8, got {r}")
    fams: list[CandidateFamily] = []

    def finish(tag: str, members: list[DivisorClass]) -> None:
        unique = sorted(set(members), key=lambda c: c.coeffs)
        if unique:
            fams.append(CandidateFamily(tag, tuple(unique)))

    finish("B", [_vec(r, {i: 1}) for i in range(1, r + 1)])

    members = []
    for s in range(2, r + 1):
        for idx in combinations(range(1, r + 1), s):
            entries = {idx[0]: 1}
            entries.update({i: -1 for i in idx[1:]})
            members.append(_vec(r, entries))
    finish("V", members)

    for tag, a0, smin in (("L", 1, 2), ("Q", 2, 5)):
        members = []
        for s in range(smin, r + 1):
            for idx in combinations(range(1, r + 1), s):
                members.append(_vec(r, {i: -1 for i in idx}, a0=a0))
        finish(tag, members)

    members = []
    for s in range(7, r + 1):
        for idx in combinations(range(1, r + 1), s):
            for first in idx:
                entries = {i: -1 for i in idx}
                entries[first] = -2
                members.append(_vec(r, entries, a0=3))
    finish("C", members)

    if r == 8:
        k = canonical_class(8)
        members = []
        for idx in combinations(range(1, 9), 3):
            members.append(-k + _vec(8, {i: -1 for i in idx}, a0=1))
        for idx in combinations(range(1, 9), 6):
            members.append(-k + _vec(8, {i: -1 for i in idx}, a0=2))
        for i in range(1, 9):
            members.append(-2 * k - _vec(8, {i: 1}))
        finish("M8", members)

    return fams


def candidate_members(r: int) -> frozenset[tuple[int, ...]]:
    """Coefficient tuples of all candidates at rank r, for membership tests."""
    return frozenset(
        c.coeffs for fam in candidate_sets(r) for c in fam.members
    )


def is_root(c: DivisorClass) -> bool:
    """k.c = 0 and c.c = -2."""
    k = canonical_class(c.r)
    return pairing(k, c) == 0 and pairing(c, c) == -2


def is_exceptional(c: DivisorClass) -> bool:
    """k.c = c.c = -1."""
    k = canonical_class(c.r)
    return pairing(k, c) == -1 and pairing(c, c) == -1


def _tail_vectors(r: int, target_sum: int, target_sq: int) -> list[tuple[int, ...]]:
    """All integer (a1..ar) with given sum and sum of squares.

    Depth-first with two prunes: the remaining square budget must stay
    nonnegative, and Cauchy-Schwarz bounds the achievable remaining sum.
    """
    out: list[tuple[int, ...]] = []

    def rec(slots: int, s: int, q: int, prefix: tuple[int, ...]) -> None:
        if slots == 0:
            if s == 0 and q == 0:
                out.append(prefix)
            return
        if q < 0 or s * s > slots * q:
            return
        m = isqrt(q)
        for a in range(-m, m + 1):
            rec(slots - 1, s - a, q - a * a, prefix + (a,))

    rec(r, target_sum, target_sq, ())
    return out


def enumerate_roots(r: int) -> list[DivisorClass]:
    """All classes with k.c = 0, c.c = -2, in lexicographic order.

    The two conditions read sum(ai) = -3*a0 and sum(ai^2) = a0^2 + 2, so
    9*a0^2 <= r*(a0^2 + 2) bounds |a0|; the search is exhaustive.
    """
    if not 3 <= r <= 8:
        raise UnsupportedRankError(f"roots require 3 <= r <= 8, got {r}")
    out = []
    a0 = 0
    while 9 * a0 * a0 <= r * (a0 * a0 + 2):
        for head in ((a0,) if a0 == 0 else (a0, -a0)):
            for tail in _tail_vectors(r, -3 * head, head * head + 2):
                out.append(DivisorClass((head,) + tail))
        a0 += 1
    return sorted(out, key=lambda c: c.coeffs)


def enumerate_exceptional(r: int) -> list[DivisorClass]:
    """All classes with k.c = c.c = -1 and a0 >= 0, in lexicographic order.

    a0 >= 0 is the degree against the nef line class; classes of negative
    degree are never effective, so the geometric list keeps a0 >= 0.
    """
    if not 1 <= r <= 8:
        raise UnsupportedRankError(f"exceptional classes require 1 <= r <= 8, got {r}")
    out = []
    a0 = 0
    while (1 - 3 * a0) ** 2 <= r * (a0 * a0 + 1):
        for tail in _tail_vectors(r, 1 - 3 * a0, a0 * a0 + 1):
            out.append(DivisorClass((a0,) + tail))
        a0 += 1
    return sorted(out, key=lambda c: c.coeffs)


def simple_roots(r: int) -> list[DivisorClass]:
    """[a1, ..., ar] with a1 = e0-e1-e2-e3 and ai = e_{i-1} - e_i."""
    if not 3 <= r <= 8:
        raise UnsupportedRankError(f"simple roots require 3 <= r <= 8, got {r}")
    first = DivisorClass((1, -1, -1, -1) + (0,) * (r - 3))
    out = [first]
    for i in range(2, r + 1):
        acc = [0] * (r + 1)
        acc[i - 1] = 1
        acc[i] = -1
        out.append(DivisorClass(tuple(acc)))
    return out


def reflect(v: DivisorClass, alpha: DivisorClass) -> DivisorClass:
    """Reflection v -> v + (v.alpha) * alpha in the root alpha."""
    if not is_root(alpha):
        raise InvalidRootError(f"{alpha} is not a root")
    return v + pairing(v, alpha) * alpha


def weyl_orbit(v: DivisorClass, r: int, cap: int = ORBIT_CAP) -> list[DivisorClass]:
    """Breadth-first closure of {v} under the r simple reflections.

    Deterministic (sorted) output; raises OrbitTooLargeError past `cap`
    elements, which signals an input with a huge or infinite orbit.
    """
    if v.r != r:
        raise UnsupportedRankError(f"class has rank {v.r}, expected {r}")
    gens = simple_roots(r)
    seen = {v.coeffs}
    frontier = deque([v])
    while frontier:
        u = frontier.popleft()
        for alpha in gens:
            w = u + pairing(u, alpha) * alpha
            if w.coeffs not in seen:
                if len(seen) >= cap:
                    raise OrbitTooLargeError(f"orbit exceeded cap of {cap} elements")
                seen.add(w.coeffs)
                frontier.append(w)
    return sorted((DivisorClass(t) for t in seen), key=lambda c: c.coeffs)
