"""The lattice of upward-closed sets of a finite poset, and its dual.

The family of all upsets of a finite poset is a distributive lattice; the
poset can be recovered from it as the join-irreducible members ordered by
reverse inclusion.  The lattice also carries a co-Heyting subtraction
``a / b`` = least upset c with a <= b | c, computed pointwise as the upward
closure of the set difference.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import CapacityError, NotUpsetError
from .poset import ElemSet, FinPoset

DEFAULT_UPSET_CAP = 1 << 20


@dataclass(frozen=True)
class UpsetLattice:
    """All upsets of a poset, materialized in a fixed order.

    The member order is by (size, sorted elements), so equal posets produce
    byte-identical listings.
    """

    poset: FinPoset
    upsets: tuple[ElemSet, ...]
    _index: dict[ElemSet, int] = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        self._index.update({u: i for i, u in enumerate(self.upsets)})

    def __contains__(self, subset: ElemSet) -> bool:
        return frozenset(subset) in self._index

    def __len__(self) -> int:
        return len(self.upsets)


def upsets_of(poset: FinPoset, cap: int = DEFAULT_UPSET_CAP) -> UpsetLattice:
    """Materialize every upset of ``poset``.

    Raises CapacityError as soon as more than ``cap`` upsets would be
    produced.
    """
    order = poset.linear_extension()[::-1]  # maximal elements first
    found: list[set[int]] = []
    current: set[int] = set()

    def grow(idx: int) -> None:
        if idx == len(order):
            if len(found) >= cap:
                raise CapacityError(f"more than {cap} upsets")
            found.append(set(current))
            return
        x = order[idx]
        grow(idx + 1)
        if poset.up[x] - {x} <= current:
            current.add(x)
            grow(idx + 1)
            current.remove(x)

    grow(0)
    members = sorted((frozenset(s) for s in found), key=lambda u: (len(u), sorted(u)))
    return UpsetLattice(poset, tuple(members))


def join_irreducibles(lattice: UpsetLattice) -> FinPoset:
    """The poset of join-irreducible lattice members under reverse inclusion.

    A member is join-irreducible when it is not the union of the members
    strictly below it (this excludes the empty set).  For an upset lattice
    the result is isomorphic to the underlying poset.
    """
    masks = [_mask(u) for u in lattice.upsets]
    irreducible: list[int] = []
    for i, m in enumerate(masks):
        below = 0
        for other in masks:
            if other != m and other & ~m == 0:
                below |= other
        if below != m:
            irreducible.append(i)
    members = sorted(
        (lattice.upsets[i] for i in irreducible), key=lambda u: (len(u), sorted(u))
    )
    # reverse inclusion: smaller upsets sit higher
    up = [
        frozenset(j for j, v in enumerate(members) if v <= u)
        for u in members
    ]
    return FinPoset(up)


def _mask(subset: ElemSet) -> int:
    m = 0
    for i in subset:
        m |= 1 << i
    return m


# ----- co-Heyting structure ----------------------------------------------


def ceiling(poset: FinPoset, subset: Iterable[int]) -> ElemSet:
    """Least upset containing ``subset``; distributes over unions."""
    return poset.upset_closure(subset)


def coheyting_minus(poset: FinPoset, a: Iterable[int], b: Iterable[int]) -> ElemSet:
    """Co-Heyting subtraction on upsets: least c with a <= b | c.

    Both arguments must be upsets; the value is the upward closure of the
    pointwise difference.
    """
    a = frozenset(a)
    b = frozenset(b)
    for name, s in (("left", a), ("right", b)):
        if not poset.is_upset(s):
            raise NotUpsetError(f"{name} argument {sorted(s)} is not an upset")
    return poset.upset_closure(a - b)


# ----- poset isomorphism -------------------------------------------------


def is_isomorphic(p: FinPoset, q: FinPoset) -> bool:
    """Order-isomorphism test by color refinement plus backtracking."""
    if p.n != q.n:
        return False
    sig_p, sig_q = _joint_signatures(p, q)
    if sorted(sig_p) != sorted(sig_q):
        return False
    # candidate images per element, most constrained first
    cands = [
        [j for j in range(q.n) if sig_q[j] == sig_p[i]] for i in range(p.n)
    ]
    order = sorted(range(p.n), key=lambda i: len(cands[i]))
    image: dict[int, int] = {}
    used: set[int] = set()

    def place(k: int) -> bool:
        if k == p.n:
            return True
        i = order[k]
        for j in cands[i]:
            if j in used:
                continue
            ok = all(
                (i2 in p.up[i]) == (j2 in q.up[j])
                and (i in p.up[i2]) == (j in q.up[j2])
                for i2, j2 in image.items()
            )
            if ok:
                image[i] = j
                used.add(j)
                if place(k + 1):
                    return True
                del image[i]
                used.discard(j)
        return False

    return place(0)


def _joint_signatures(p: FinPoset, q: FinPoset) -> tuple[list[int], list[int]]:
    """Stable color refinement over both posets with a shared color table.

    Classes only ever split, so the partition is stable as soon as the
    number of colors stops growing.
    """
    colors: dict = {}
    sig_p = [
        colors.setdefault((len(p.up[i]), len(p.down[i])), len(colors))
        for i in range(p.n)
    ]
    sig_q = [
        colors.setdefault((len(q.up[i]), len(q.down[i])), len(colors))
        for i in range(q.n)
    ]
    count = len(colors)
    for _ in range(p.n):
        step: dict = {}

        def refine(r: FinPoset, sig: list[int]) -> list[int]:
            return [
                step.setdefault(
                    (
                        sig[i],
                        tuple(sorted(sig[j] for j in r.up[i] - {i})),
                        tuple(sorted(sig[j] for j in r.down[i] - {i})),
                    ),
                    len(step),
                )
                for i in range(r.n)
            ]

        sig_p = refine(p, sig_p)
        sig_q = refine(q, sig_q)
        if len(step) == count:
            break
        count = len(step)
    return sig_p, sig_q
