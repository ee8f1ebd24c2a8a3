"""Finite posets on dense integer carriers, with upset-oriented set operations.

Elements are the integers ``0..n-1``.  Subsets of the carrier are plain
``frozenset[int]`` values; the poset validates membership on every operation
that takes one.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .errors import CycleError, RangeError

ElemSet = frozenset[int]

EMPTY: ElemSet = frozenset()


class FinPoset:
    """A finite partial order, stored as per-element up- and down-sets.

    ``up[i]`` is the principal upset of ``i`` (including ``i`` itself) and
    ``down[i]`` the principal downset.  Instances are immutable and hashable;
    two posets are equal when they have the same carrier size and the same
    order relation.
    """

    __slots__ = ("n", "up", "down", "_hash")

    def __init__(self, up: Sequence[frozenset[int]]):
        n = len(up)
        up = tuple(frozenset(s) for s in up)
        for i, ups in enumerate(up):
            if not all(0 <= j < n for j in ups):
                raise RangeError(f"upset of {i} leaves the carrier 0..{n - 1}")
            if i not in ups:
                raise ValueError(f"order not reflexive at {i}")
        down = tuple(frozenset(i for i in range(n) if j in up[i]) for j in range(n))
        for i in range(n):
            for j in up[i]:
                if i != j and i in up[j]:
                    raise CycleError(f"{i} and {j} are mutually comparable")
                if not up[j] <= up[i]:
                    raise ValueError(f"order not transitive at {i} <= {j}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", down)
        object.__setattr__(self, "_hash", hash((n, up)))

    def __setattr__(self, name, value):
        raise AttributeError("FinPoset is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FinPoset) and self.n == other.n and self.up == other.up
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FinPoset(n={self.n}, covers={sorted(self.covers())})"

    @classmethod
    def from_covers(cls, covers: Iterable[tuple[int, int]], n: int) -> "FinPoset":
        """Build the reflexive-transitive closure of a cover relation.

        Raises RangeError for indices outside ``0..n-1`` and CycleError when
        the covers contain a directed cycle.
        """
        if n < 0:
            raise RangeError("carrier size must be >= 0")
        succ: list[set[int]] = [set() for _ in range(n)]
        for i, j in covers:
            if not (0 <= i < n and 0 <= j < n):
                raise RangeError(f"cover ({i}, {j}) leaves the carrier 0..{n - 1}")
            if i == j:
                raise CycleError(f"cover ({i}, {i}) is a self-loop")
            succ[i].add(j)
        up: list[frozenset[int]] = [EMPTY] * n
        state = [0] * n  # 0 unvisited, 1 on stack, 2 done
        def reach(i: int) -> frozenset[int]:
            if state[i] == 1:
                raise CycleError(f"covers contain a cycle through {i}")
            if state[i] == 2:
                return up[i]
            state[i] = 1
            acc = {i}
            for j in succ[i]:
                acc |= reach(j)
            state[i] = 2
            up[i] = frozenset(acc)
            return up[i]
        for i in range(n):
            reach(i)
        return cls(up)

    # ----- order queries -------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        self._check_elem(i)
        self._check_elem(j)
        return j in self.up[i]

    def covers(self) -> list[tuple[int, int]]:
        """The Hasse relation: pairs (i, j) with i < j and nothing between."""
        out = []
        for i in range(self.n):
            strict = self.up[i] - {i}
            for j in strict:
                if not any(j in self.up[k] for k in strict if k != j):
                    out.append((i, j))
        return sorted(out)

    def linear_extension(self) -> list[int]:
        """Element order compatible with the partial order (minimal first)."""
        return sorted(range(self.n), key=lambda i: (len(self.down[i]), i))

    # ----- subset operations --------------------------------------------

    def _check_subset(self, subset: Iterable[int]) -> ElemSet:
        subset = frozenset(subset)
        if not all(0 <= i < self.n for i in subset):
            raise RangeError(f"subset {sorted(subset)} leaves the carrier 0..{self.n - 1}")
        return subset

    def upset_closure(self, subset: Iterable[int]) -> ElemSet:
        """Least upward-closed set containing ``subset``."""
        subset = self._check_subset(subset)
        acc: set[int] = set()
        for i in subset:
            acc |= self.up[i]
        return frozenset(acc)

    def downset_closure(self, subset: Iterable[int]) -> ElemSet:
        subset = self._check_subset(subset)
        acc: set[int] = set()
        for i in subset:
            acc |= self.down[i]
        return frozenset(acc)

    def is_upset(self, subset: Iterable[int]) -> bool:
        subset = self._check_subset(subset)
        return all(self.up[i] <= subset for i in subset)

    def min_elements(self, subset: Iterable[int]) -> ElemSet:
        """Minimal elements of ``subset`` in the induced order."""
        subset = self._check_subset(subset)
        return frozenset(i for i in subset if self.down[i] & subset == {i})

    def max_elements(self, subset: Iterable[int]) -> ElemSet:
        subset = self._check_subset(subset)
        return frozenset(i for i in subset if self.up[i] & subset == {i})

    def is_convex(self, subset: Iterable[int]) -> bool:
        """True when every element between two members is itself a member."""
        subset = self._check_subset(subset)
        for i in subset:
            for j in subset:
                if j in self.up[i] and not self.up[i] & self.down[j] <= subset:
                    return False
        return True

    def _check_elem(self, i: int) -> None:
        if not (0 <= i < self.n):
            raise RangeError(f"element {i} leaves the carrier 0..{self.n - 1}")


# ----- serialization -----------------------------------------------------


def poset_to_json(poset: FinPoset, labels: Sequence[str] | None = None) -> str:
    obj: dict = {"n": poset.n, "covers": [list(c) for c in poset.covers()]}
    if labels is not None:
        if len(labels) != poset.n:
            raise ValueError("label count must equal carrier size")
        obj["labels"] = list(labels)
    return json.dumps(obj, indent=2)


def poset_from_json(text: str) -> tuple[FinPoset, list[str] | None]:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "n" not in obj or "covers" not in obj:
        raise ValueError("poset JSON needs 'n' and 'covers' keys")
    n = obj["n"]
    covers = obj["covers"]
    if not isinstance(n, int) or not isinstance(covers, list):
        raise ValueError("malformed poset JSON")
    pairs = []
    for c in covers:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, int) for x in c)):
            raise ValueError(f"malformed cover pair {c!r}")
        pairs.append((c[0], c[1]))
    labels = obj.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(s, str) for s in labels)
    ):
        raise ValueError("labels must be a list of strings")
    return FinPoset.from_covers(pairs, n), labels


def poset_to_dot(poset: FinPoset, labels: Sequence[str] | None = None) -> str:
    """Hasse diagram in DOT format (cover edges only, drawn upward)."""
    name = labels if labels is not None else [str(i) for i in range(poset.n)]
    lines = ["digraph poset {", "  rankdir=BT;"]
    for i in range(poset.n):
        lines.append(f'  {i} [label="{name[i]}"];')
    for i, j in poset.covers():
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
