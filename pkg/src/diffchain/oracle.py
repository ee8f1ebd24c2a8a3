"""Independent brute-force oracles.

Everything here recomputes results of the other modules by direct
enumeration or by a structurally different construction, so the two routes
can be compared in tests.  Nothing in this module calls the chain, lattice
or closure algorithms it is used to check.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import product as iter_product
from typing import Iterable, Iterator, Sequence

from .automata import Dfa, Letter, LpHom, letter_key, transition_monoid
from .errors import AlphabetMismatchError
from .poset import ElemSet, FinPoset

# ----- word enumeration --------------------------------------------------


def words_upto(alphabet: Sequence[Letter], max_len: int) -> Iterator[tuple[Letter, ...]]:
    """All nonempty words of length at most max_len, shortest first."""
    for n in range(1, max_len + 1):
        yield from iter_product(alphabet, repeat=n)


def lang_eq_upto(
    d1: Dfa, d2: Dfa, max_len: int
) -> tuple[bool, tuple[Letter, ...] | None]:
    """Compare two automata on every nonempty word of length <= max_len.

    Returns (True, None) on agreement, else (False, first disagreeing word).
    """
    if set(d1.alphabet) != set(d2.alphabet):
        raise AlphabetMismatchError("cannot compare automata over different alphabets")
    for word in words_upto(sorted(d1.alphabet, key=letter_key), max_len):
        if d1.accepts(word) != d2.accepts(word):
            return False, word
    return True, None


# ----- closure membership by position profiles ---------------------------


def brute_pi1_closure_member(d: Dfa, k: int, word: Sequence[Letter]) -> bool:
    """Membership of a word in the k-variable universal closure of d's
    language, decided directly.

    A word belongs iff for every k-tuple of its positions some accepted word
    of the same length carries the same letters at those positions.  Each
    existence question is settled by an exact layered reachability search,
    never by sampling.
    """
    word = tuple(word)
    n = len(word)
    if n == 0:
        return False
    for positions in iter_product(range(n), repeat=k):
        pinned = frozenset((p, word[p]) for p in positions)
        if not _accepts_some_pinned(d, n, pinned):
            return False
    return True


@lru_cache(maxsize=None)
def _accepts_some_pinned(d: Dfa, n: int, pinned: frozenset) -> bool:
    """Is some length-n word accepted whose letters agree with ``pinned``
    (a set of (position, letter) pairs)?"""
    by_pos: dict[int, Letter] = {}
    for p, a in pinned:
        if p in by_pos and by_pos[p] != a:
            return False
        by_pos[p] = a
    current = {d.start}
    for p in range(n):
        nxt: set[int] = set()
        if p in by_pos:
            c = d.letter_index(by_pos[p])
            for q in current:
                nxt.add(d.delta[q][c])
        else:
            for q in current:
                nxt.update(d.delta[q])
        current = nxt
        if not current:
            return False
    return bool(current & d.accepting)


# ----- alternation degree by sequence enumeration ------------------------


def brute_degree(poset: FinPoset, members: Iterable[int], x: int) -> int:
    """Longest alternating strictly increasing sequence ending at x, found by
    enumerating every increasing sequence outright."""
    members = poset._check_subset(members)
    poset._check_elem(x)
    best = 0
    stack: list[tuple[int, ...]] = [(x,)]
    while stack:
        seq = stack.pop()
        if all((seq[i] in members) == (i % 2 == 0) for i in range(len(seq))):
            best = max(best, len(seq))
        head = seq[0]
        for y in poset.down[head] - {head}:
            stack.append((y,) + seq)
    return best


# ----- chain enumeration -------------------------------------------------


def iter_upset_chains(
    poset: FinPoset, upsets: Sequence[ElemSet], max_len: int
) -> Iterator[tuple[ElemSet, ...]]:
    """Every inclusion-decreasing sequence of the given upsets, of length
    1..max_len (components may repeat)."""
    upsets = list(upsets)

    def grow(prefix: tuple[ElemSet, ...]) -> Iterator[tuple[ElemSet, ...]]:
        yield prefix
        if len(prefix) < max_len:
            for u in upsets:
                if u <= prefix[-1]:
                    yield from grow(prefix + (u,))

    for u in upsets:
        yield from grow((u,))


def nested_difference(sets: Sequence[ElemSet]) -> ElemSet:
    value: ElemSet = frozenset()
    for s in reversed(sets):
        value = s - value
    return value


def brute_all_chains(
    poset: FinPoset, target: Iterable[int], max_len: int
) -> list[tuple[ElemSet, ...]]:
    """Every decreasing upset chain of length <= max_len evaluating to the
    target, enumerated from scratch."""
    target = poset._check_subset(target)
    order = poset.linear_extension()[::-1]
    found: list[frozenset[int]] = []
    current: set[int] = set()

    def grow(idx: int) -> None:
        if idx == len(order):
            found.append(frozenset(current))
            return
        x = order[idx]
        grow(idx + 1)
        if poset.up[x] - {x} <= current:
            current.add(x)
            grow(idx + 1)
            current.remove(x)

    grow(0)
    return [
        chain
        for chain in iter_upset_chains(poset, found, max_len)
        if nested_difference(chain) == target
    ]


# ----- poset corpus ------------------------------------------------------

_POSET_CACHE: dict[int, tuple[FinPoset, ...]] = {}


def all_posets(n: int) -> tuple[FinPoset, ...]:
    """All partial orders on 0..n-1 whose strict order respects the integer
    order.  Every isomorphism class of n-element posets appears at least
    once, because every finite poset has a linear extension."""
    if n < 0:
        raise ValueError("carrier size must be >= 0")
    if n in _POSET_CACHE:
        return _POSET_CACHE[n]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out: list[FinPoset] = []
    for bits in range(1 << len(pairs)):
        succ = [0] * n
        for idx, (i, j) in enumerate(pairs):
            if bits >> idx & 1:
                succ[i] |= 1 << j
        ok = True
        for i in range(n):
            rest = succ[i]
            while rest and ok:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if succ[j] & ~succ[i]:
                    ok = False
            if not ok:
                break
        if ok:
            up = [
                frozenset({i} | {j for j in range(n) if succ[i] >> j & 1})
                for i in range(n)
            ]
            out.append(FinPoset(up))
    _POSET_CACHE[n] = tuple(out)
    return _POSET_CACHE[n]


def all_posets_upto(n: int) -> list[FinPoset]:
    out: list[FinPoset] = []
    for size in range(1, n + 1):
        out.extend(all_posets(size))
    return out


# ----- random automata ---------------------------------------------------


def random_dfa(
    rng: random.Random, max_states: int, alphabet: Sequence[Letter]
) -> Dfa:
    """A uniformly random complete DFA with 1..max_states states."""
    alphabet = tuple(alphabet)
    n = rng.randint(1, max_states)
    delta = [
        [rng.randrange(n) for _ in alphabet] for _ in range(n)
    ]
    accepting = [q for q in range(n) if rng.random() < 0.5]
    return Dfa(alphabet, delta, 0, accepting)


# ----- forward images through the transition monoid ----------------------


def monoid_language_dfa(d: Dfa, accept_elements: Iterable[int]) -> Dfa:
    """The language recognized by d's transition monoid with the given
    accepting subset, as an automaton on the monoid elements."""
    tm = transition_monoid(d)
    images = dict(tm.letter_image)
    letters = tuple(sorted(d.alphabet, key=letter_key))
    delta = [
        [tm.monoid.op(e, images[a]) for a in letters]
        for e in range(tm.monoid.size)
    ]
    return Dfa(letters, delta, tm.monoid.identity, accept_elements)


def monoid_forward_image(
    d: Dfa, h: LpHom, accept_elements: Iterable[int] | None = None
) -> Dfa:
    """Forward image along h of the language cut out of d's transition monoid
    by ``accept_elements`` (default: the set recognizing d's own language).

    Works inside the powerset of the monoid: a target word w maps to the set
    of monoid values of its preimages, and is accepted when that set meets
    the accepting subset.  This is the reference route against which the
    subset-construction image is compared.
    """
    if set(h.source) != set(d.alphabet):
        raise AlphabetMismatchError("hom source and automaton alphabet differ")
    tm = transition_monoid(d)
    images = dict(tm.letter_image)
    accept = (
        tm.recognizing_set if accept_elements is None else frozenset(accept_elements)
    )
    letters = tuple(sorted(h.target, key=letter_key))
    gen_sets = {
        b: frozenset(images[a] for a in h.source if h.letter_image(a) == b)
        for b in letters
    }
    start = frozenset([tm.monoid.identity])
    number: dict[frozenset[int], int] = {start: 0}
    order = [start]
    delta: list[list[int]] = []
    i = 0
    while i < len(order):
        values = order[i]
        row = []
        for b in letters:
            t = frozenset(tm.monoid.op(e, g) for e in values for g in gen_sets[b])
            if t not in number:
                number[t] = len(order)
                order.append(t)
            row.append(number[t])
        delta.append(row)
        i += 1
    accepting = [number[s] for s in order if s & accept]
    return Dfa(letters, delta, 0, accepting)
