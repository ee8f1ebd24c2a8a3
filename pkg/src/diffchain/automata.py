"""Complete DFAs over plain and marked alphabets, with the operations needed
to interpret one layer of quantification.

A "marked" letter pairs a base letter with the set of position variables that
point at it; a word over the marked alphabet is a valid structure when every
variable marks exactly one position.  Projection forgets the marks, the
erasing map keeps only marked positions, and the universal/existential images
along projection are computed with standard automata constructions
(complement, relabel-then-determinize, product).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import AlphabetMismatchError, CapacityError

Letter = Hashable

DEFAULT_STATE_CAP = 100_000
DEFAULT_MONOID_CAP = 4096


# ----- letters and alphabets ---------------------------------------------


@dataclass(frozen=True)
class Marked:
    """A product-alphabet letter: a base letter plus the variables marking it.

    ``base is None`` encodes the erased letter (a position whose base letter
    has been forgotten); it only appears in alphabets built with
    ``with_erased=True``.
    """

    base: str | None
    marks: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "marks", frozenset(self.marks))

    def __str__(self):
        base = self.base if self.base is not None else "ε"
        if self.marks:
            return f"({base}|{','.join(sorted(self.marks))})"
        return f"({base})"


def letter_key(letter: Letter):
    """Total order on letters; plain strings first, then marked letters."""
    if isinstance(letter, Marked):
        return (1, letter.base is not None, letter.base or "", tuple(sorted(letter.marks)))
    return (0, str(letter))


def check_variables(variables: Sequence[str]) -> tuple[str, ...]:
    variables = tuple(variables)
    if not variables:
        raise ValueError("need at least one variable")
    if len(set(variables)) != len(variables):
        raise ValueError("variable names must be distinct")
    if not all(isinstance(v, str) and v for v in variables):
        raise ValueError("variable names must be nonempty strings")
    return variables


def variables(count: int) -> tuple[str, ...]:
    """Default variable names x1..xk."""
    if count < 1:
        raise ValueError("need at least one variable")
    return tuple(f"x{i + 1}" for i in range(count))


def mark_subsets(variables_: Sequence[str]) -> list[frozenset[str]]:
    variables_ = tuple(variables_)
    out = []
    for bits in range(1 << len(variables_)):
        out.append(frozenset(v for i, v in enumerate(variables_) if bits >> i & 1))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def marked_alphabet(
    base_letters: Sequence[str], variables_: Sequence[str], with_erased: bool = False
) -> tuple[Marked, ...]:
    """All letters (base, mark set); optionally also the erased letters."""
    base_letters = check_base_letters(base_letters)
    variables_ = check_variables(variables_)
    bases: list[str | None] = list(base_letters)
    if with_erased:
        bases.append(None)
    letters = [Marked(b, s) for b in bases for s in mark_subsets(variables_)]
    return tuple(sorted(letters, key=letter_key))


def check_base_letters(base_letters: Sequence[str]) -> tuple[str, ...]:
    base_letters = tuple(base_letters)
    if not base_letters:
        raise ValueError("alphabet must be nonempty")
    if len(set(base_letters)) != len(base_letters):
        raise ValueError("alphabet letters must be distinct")
    if any(b == "eps" for b in base_letters):
        raise ValueError("'eps' is reserved for the erased letter")
    return base_letters


# ----- the automaton -----------------------------------------------------


class Dfa:
    """A complete deterministic automaton.

    ``delta[q]`` lists the successor of state ``q`` for each letter, in
    alphabet order.  Instances are immutable; equality is structural.
    """

    __slots__ = ("alphabet", "delta", "start", "accepting", "_index", "_hash")

    def __init__(
        self,
        alphabet: Sequence[Letter],
        delta: Sequence[Sequence[int]],
        start: int,
        accepting: Iterable[int],
    ):
        alphabet = tuple(alphabet)
        delta = tuple(tuple(row) for row in delta)
        accepting = frozenset(accepting)
        if not alphabet:
            raise ValueError("alphabet must be nonempty")
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet letters must be distinct")
        n = len(delta)
        if n == 0:
            raise ValueError("need at least one state")
        for q, row in enumerate(delta):
            if len(row) != len(alphabet):
                raise ValueError(f"state {q} has {len(row)} transitions, want {len(alphabet)}")
            if not all(isinstance(t, int) and 0 <= t < n for t in row):
                raise ValueError(f"state {q} has a transition outside 0..{n - 1}")
        if not (0 <= start < n):
            raise ValueError("start state out of range")
        if not accepting <= frozenset(range(n)):
            raise ValueError("accepting states out of range")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "accepting", accepting)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(alphabet)})
        object.__setattr__(self, "_hash", hash((alphabet, delta, start, accepting)))

    def __setattr__(self, name, value):
        raise AttributeError("Dfa is immutable")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def letter_index(self, letter: Letter) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise AlphabetMismatchError(f"letter {letter!r} not in alphabet") from None

    def run(self, state: int, word: Iterable[Letter]) -> int:
        for letter in word:
            state = self.delta[state][self.letter_index(letter)]
        return state

    def accepts(self, word: Iterable[Letter]) -> bool:
        return self.run(self.start, word) in self.accepting

    def __eq__(self, other):
        return (
            isinstance(other, Dfa)
            and self.alphabet == other.alphabet
            and self.delta == other.delta
            and self.start == other.start
            and self.accepting == other.accepting
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Dfa(states={self.n_states}, letters={len(self.alphabet)})"


def dfa_all_words(alphabet: Sequence[Letter]) -> Dfa:
    alphabet = tuple(alphabet)
    return Dfa(alphabet, [[0] * len(alphabet)], 0, [0])


def dfa_no_words(alphabet: Sequence[Letter]) -> Dfa:
    alphabet = tuple(alphabet)
    return Dfa(alphabet, [[0] * len(alphabet)], 0, [])


def dfa_nonempty_words(alphabet: Sequence[Letter]) -> Dfa:
    alphabet = tuple(alphabet)
    width = len(alphabet)
    return Dfa(alphabet, [[1] * width, [1] * width], 0, [1])


# ----- boolean operations ------------------------------------------------


def complement(d: Dfa) -> Dfa:
    return Dfa(d.alphabet, d.delta, d.start, frozenset(range(d.n_states)) - d.accepting)


def _product(d1: Dfa, d2: Dfa, keep) -> Dfa:
    if set(d1.alphabet) != set(d2.alphabet):
        raise AlphabetMismatchError("operands have different alphabets")
    letters = tuple(sorted(d1.alphabet, key=letter_key))
    col1 = [d1.letter_index(a) for a in letters]
    col2 = [d2.letter_index(a) for a in letters]
    start = (d1.start, d2.start)
    number: dict[tuple[int, int], int] = {start: 0}
    order = [start]
    delta: list[list[int]] = []
    i = 0
    while i < len(order):
        q1, q2 = order[i]
        row = []
        for c1, c2 in zip(col1, col2):
            t = (d1.delta[q1][c1], d2.delta[q2][c2])
            if t not in number:
                number[t] = len(order)
                order.append(t)
            row.append(number[t])
        delta.append(row)
        i += 1
    accepting = [
        number[p] for p in order if keep(p[0] in d1.accepting, p[1] in d2.accepting)
    ]
    return Dfa(letters, delta, 0, accepting)


def intersect(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda a, b: a and b)


def union(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda a, b: a or b)


def difference(d1: Dfa, d2: Dfa) -> Dfa:
    return intersect(d1, complement(d2))


def is_empty_lang(d: Dfa) -> bool:
    seen = {d.start}
    queue = [d.start]
    while queue:
        q = queue.pop()
        if q in d.accepting:
            return False
        for t in d.delta[q]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return True


def shortest_word(d: Dfa) -> tuple[Letter, ...] | None:
    """A shortest accepted word, or None when the language is empty."""
    if d.start in d.accepting:
        return ()
    parent: dict[int, tuple[int, Letter]] = {}
    seen = {d.start}
    queue = [d.start]
    while queue:
        nxt = []
        for q in queue:
            for a, t in zip(d.alphabet, d.delta[q]):
                if t in seen:
                    continue
                seen.add(t)
                parent[t] = (q, a)
                if t in d.accepting:
                    word = []
                    s = t
                    while s != d.start:
                        s, letter = parent[s]
                        word.append(letter)
                    return tuple(reversed(word))
                nxt.append(t)
        queue = nxt
    return None


def subset_of(d1: Dfa, d2: Dfa) -> bool:
    return is_empty_lang(difference(d1, d2))


# ----- minimization and equivalence --------------------------------------


def minimize(d: Dfa) -> Dfa:
    """Canonical minimal form: Moore refinement, then breadth-first state
    numbering with letters in canonical order.  Equal languages over the same
    letters give structurally equal results."""
    letters = tuple(sorted(d.alphabet, key=letter_key))
    cols = [d.letter_index(a) for a in letters]
    # reachable part
    seen = {d.start}
    stack = [d.start]
    while stack:
        q = stack.pop()
        for c in cols:
            t = d.delta[q][c]
            if t not in seen:
                seen.add(t)
                stack.append(t)
    states = sorted(seen)
    cls = {q: (1 if q in d.accepting else 0) for q in states}
    count = len(set(cls.values()))
    while True:
        sigs = {
            q: (cls[q], tuple(cls[d.delta[q][c]] for c in cols)) for q in states
        }
        remap: dict[tuple, int] = {}
        new = {q: remap.setdefault(sigs[q], len(remap)) for q in states}
        if len(remap) == count:
            cls = new
            break
        cls = new
        count = len(remap)
    # breadth-first renumbering of the quotient
    rep: dict[int, int] = {}
    for q in states:
        rep.setdefault(cls[q], q)
    number = {cls[d.start]: 0}
    order = [cls[d.start]]
    delta: list[list[int]] = []
    i = 0
    while i < len(order):
        q = rep[order[i]]
        row = []
        for c in cols:
            t = cls[d.delta[q][c]]
            if t not in number:
                number[t] = len(order)
                order.append(t)
            row.append(number[t])
        delta.append(row)
        i += 1
    accepting = [number[c] for c in order if rep[c] in d.accepting]
    return Dfa(letters, delta, 0, accepting)


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    if set(d1.alphabet) != set(d2.alphabet):
        raise AlphabetMismatchError("cannot compare automata over different alphabets")
    return minimize(d1) == minimize(d2)


# ----- homomorphisms -----------------------------------------------------


class Hom:
    """A monoid homomorphism between free monoids, given on letters.

    Each source letter maps to a word (possibly empty) over the target
    alphabet.
    """

    __slots__ = ("source", "target", "_map")

    def __init__(
        self,
        source: Sequence[Letter],
        target: Sequence[Letter],
        letter_map: Mapping[Letter, Sequence[Letter]],
    ):
        source = tuple(source)
        target = tuple(target)
        if len(set(source)) != len(source) or len(set(target)) != len(target):
            raise ValueError("alphabet letters must be distinct")
        if set(letter_map) != set(source):
            raise AlphabetMismatchError("letter map must cover exactly the source alphabet")
        mapped = {a: tuple(letter_map[a]) for a in source}
        tset = set(target)
        for a, w in mapped.items():
            if not set(w) <= tset:
                raise AlphabetMismatchError(f"image of {a!r} uses letters outside the target")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "_map", mapped)

    def __setattr__(self, name, value):
        raise AttributeError("Hom is immutable")

    def image(self, letter: Letter) -> tuple[Letter, ...]:
        if letter not in self._map:
            raise AlphabetMismatchError(f"letter {letter!r} not in source alphabet")
        return self._map[letter]

    def word_image(self, word: Iterable[Letter]) -> tuple[Letter, ...]:
        out: list[Letter] = []
        for a in word:
            out.extend(self.image(a))
        return tuple(out)


class LpHom(Hom):
    """A length-preserving homomorphism: every letter maps to one letter."""

    def __init__(
        self,
        source: Sequence[Letter],
        target: Sequence[Letter],
        letter_map: Mapping[Letter, Letter],
    ):
        super().__init__(source, target, {a: (b,) for a, b in letter_map.items()})

    def letter_image(self, letter: Letter) -> Letter:
        return self.image(letter)[0]


def inverse_hom_image(d: Dfa, h: Hom) -> Dfa:
    """The automaton for the preimage of d's language under h.

    Keeps d's state set: each source letter acts as its image word.
    """
    if set(h.target) != set(d.alphabet):
        raise AlphabetMismatchError("hom target and automaton alphabet differ")
    delta = [
        [d.run(q, h.image(a)) for a in h.source] for q in range(d.n_states)
    ]
    return Dfa(h.source, delta, d.start, d.accepting)


def forward_lp_image(d: Dfa, h: LpHom, state_cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Image of d's language under a length-preserving homomorphism.

    Relabels d into a nondeterministic machine over the target alphabet and
    determinizes by the subset construction; raises CapacityError past
    ``state_cap`` subset states.
    """
    if set(h.source) != set(d.alphabet):
        raise AlphabetMismatchError("hom source and automaton alphabet differ")
    letters = tuple(sorted(h.target, key=letter_key))
    sources: dict[Letter, list[int]] = {b: [] for b in letters}
    for a in h.source:
        sources[h.letter_image(a)].append(d.letter_index(a))
    start = frozenset([d.start])
    number: dict[frozenset[int], int] = {start: 0}
    order = [start]
    delta: list[list[int]] = []
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for b in letters:
            t = frozenset(d.delta[q][c] for q in subset for c in sources[b])
            if t not in number:
                if len(order) >= state_cap:
                    raise CapacityError(f"subset construction passed {state_cap} states")
                number[t] = len(order)
                order.append(t)
            row.append(number[t])
        delta.append(row)
        i += 1
    accepting = [number[s] for s in order if s & d.accepting]
    return Dfa(letters, delta, 0, accepting)


# ----- structures and quantification -------------------------------------


def structures_dfa(base_letters: Sequence[str], variables_: Sequence[str]) -> Dfa:
    """Words over the marked alphabet where each variable marks exactly one
    position: the states track the set of variables seen, plus a sink for
    duplicates."""
    base_letters = check_base_letters(base_letters)
    variables_ = check_variables(variables_)
    alphabet = marked_alphabet(base_letters, variables_)
    subsets = mark_subsets(variables_)
    index = {s: i for i, s in enumerate(subsets)}
    sink = len(subsets)
    delta = []
    for seen in subsets:
        row = []
        for letter in alphabet:
            if letter.marks & seen:
                row.append(sink)
            else:
                row.append(index[seen | letter.marks])
        delta.append(row)
    delta.append([sink] * len(alphabet))
    full = frozenset(variables_)
    return Dfa(alphabet, delta, index[frozenset()], [index[full]])


def projection_hom(base_letters: Sequence[str], variables_: Sequence[str]) -> LpHom:
    """Forget the marks: (a, S) goes to a."""
    source = marked_alphabet(base_letters, variables_)
    target = tuple(sorted(check_base_letters(base_letters)))
    return LpHom(source, target, {letter: letter.base for letter in source})


def erasing_hom(base_letters: Sequence[str], variables_: Sequence[str]) -> LpHom:
    """Keep marked positions, erase the base letter elsewhere.

    Maps (a, S) to itself when S is nonempty and to the erased letter when S
    is empty; the target alphabet includes the erased letters.
    """
    source = marked_alphabet(base_letters, variables_)
    target = marked_alphabet(base_letters, variables_, with_erased=True)
    blank = Marked(None, frozenset())
    letter_map = {
        letter: (letter if letter.marks else blank) for letter in source
    }
    return LpHom(source, target, letter_map)


def tensor(d: Dfa, variables_: Sequence[str]) -> Dfa:
    """All valid structures whose base word is accepted by d."""
    base_letters = _plain_alphabet(d)
    proj = projection_hom(base_letters, variables_)
    lifted = inverse_hom_image(minimize(d), proj)
    return minimize(intersect(lifted, structures_dfa(base_letters, variables_)))


def exists_adjoint(
    d: Dfa,
    variables_: Sequence[str],
    base_letters: Sequence[str],
    state_cap: int = DEFAULT_STATE_CAP,
) -> Dfa:
    """Base words some structure of which lies in d's language."""
    _check_marked_operand(d, base_letters, variables_)
    s = structures_dfa(base_letters, variables_)
    proj = projection_hom(base_letters, variables_)
    return minimize(forward_lp_image(minimize(intersect(d, s)), proj, state_cap))


def forall_adjoint(
    d: Dfa,
    variables_: Sequence[str],
    base_letters: Sequence[str],
    state_cap: int = DEFAULT_STATE_CAP,
) -> Dfa:
    """Nonempty base words all structures of which lie in d's language.

    Computed as the complement of the projection of the failing structures,
    then restricted to nonempty words.
    """
    _check_marked_operand(d, base_letters, variables_)
    s = structures_dfa(base_letters, variables_)
    proj = projection_hom(base_letters, variables_)
    failing = minimize(intersect(complement(d), s))
    covered = forward_lp_image(failing, proj, state_cap)
    nonempty = dfa_nonempty_words(proj.target)
    return minimize(intersect(complement(covered), nonempty))


def _plain_alphabet(d: Dfa) -> tuple[str, ...]:
    if not all(isinstance(a, str) for a in d.alphabet):
        raise AlphabetMismatchError("expected an automaton over plain letters")
    return tuple(sorted(d.alphabet))


def _check_marked_operand(
    d: Dfa, base_letters: Sequence[str], variables_: Sequence[str]
) -> None:
    want = set(marked_alphabet(base_letters, variables_))
    if set(d.alphabet) != want:
        raise AlphabetMismatchError(
            "operand alphabet is not the marked alphabet of the given letters "
            "and variables"
        )


# ----- transition monoid -------------------------------------------------


@dataclass(frozen=True)
class FinMonoid:
    """A finite monoid as a multiplication table over 0..size-1.

    Associativity and the identity law are checked exhaustively on
    construction.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        n = len(self.table)
        for row in self.table:
            if len(row) != n or not all(0 <= x < n for x in row):
                raise ValueError("multiplication table must be square over 0..size-1")
        e = self.identity
        if not (0 <= e < n):
            raise ValueError("identity out of range")
        for x in range(n):
            if self.table[e][x] != x or self.table[x][e] != x:
                raise ValueError(f"identity law fails at {x}")
        for x in range(n):
            for y in range(n):
                xy = self.table[x][y]
                for z in range(n):
                    if self.table[xy][z] != self.table[x][self.table[y][z]]:
                        raise ValueError(f"associativity fails at ({x}, {y}, {z})")

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]


@dataclass(frozen=True)
class TransitionMonoid:
    """The monoid of state transformations of a DFA, with the evaluation map.

    ``transformations[e]`` lists the image of every state under element ``e``;
    ``letter_image`` sends each letter to the element it generates.  Products
    compose left to right: the element of a word uv is op(element(u),
    element(v)).
    """

    monoid: FinMonoid
    transformations: tuple[tuple[int, ...], ...]
    letter_image: tuple[tuple[Letter, int], ...]
    start: int
    accepting: frozenset[int]

    def element_of_word(self, word: Iterable[Letter]) -> int:
        images = dict(self.letter_image)
        e = self.monoid.identity
        for a in word:
            if a not in images:
                raise AlphabetMismatchError(f"letter {a!r} not in alphabet")
            e = self.monoid.op(e, images[a])
        return e

    def accepts(self, word: Iterable[Letter]) -> bool:
        return self.transformations[self.element_of_word(word)][self.start] in self.accepting

    @property
    def recognizing_set(self) -> frozenset[int]:
        """Elements whose transformation sends the start state into acceptance."""
        return frozenset(
            e
            for e, t in enumerate(self.transformations)
            if t[self.start] in self.accepting
        )


def transition_monoid(d: Dfa, cap: int = DEFAULT_MONOID_CAP) -> TransitionMonoid:
    """Close the letter actions of d under composition.

    Raises CapacityError when more than ``cap`` distinct transformations
    appear.
    """
    n = d.n_states
    identity = tuple(range(n))
    letters = tuple(sorted(d.alphabet, key=letter_key))
    gens = {
        a: tuple(d.delta[q][d.letter_index(a)] for q in range(n)) for a in letters
    }
    number: dict[tuple[int, ...], int] = {identity: 0}
    order = [identity]
    i = 0
    while i < len(order):
        t = order[i]
        for a in letters:
            g = gens[a]
            nt = tuple(g[t[q]] for q in range(n))
            if nt not in number:
                if len(order) >= cap:
                    raise CapacityError(f"transition monoid passed {cap} elements")
                number[nt] = len(order)
                order.append(nt)
        i += 1
    table = []
    for t in order:
        row = []
        for u in order:
            tu = tuple(u[t[q]] for q in range(n))
            row.append(number[tu])
        table.append(tuple(row))
    monoid = FinMonoid(tuple(table), 0)
    letter_image = tuple((a, number[gens[a]]) for a in letters)
    return TransitionMonoid(
        monoid=monoid,
        transformations=tuple(order),
        letter_image=letter_image,
        start=d.start,
        accepting=d.accepting,
    )


# ----- serialization -----------------------------------------------------


def _letter_to_json(letter: Letter):
    if isinstance(letter, Marked):
        return {
            "base": "eps" if letter.base is None else letter.base,
            "vars": sorted(letter.marks),
        }
    if isinstance(letter, str):
        return letter
    raise ValueError(f"cannot serialize letter {letter!r}")


def _letter_from_json(obj) -> Letter:
    if isinstance(obj, str):
        return obj
    if isinstance(obj, dict) and set(obj) == {"base", "vars"}:
        base = obj["base"]
        marks = obj["vars"]
        if not isinstance(base, str) or not isinstance(marks, list):
            raise ValueError(f"malformed letter {obj!r}")
        if not all(isinstance(v, str) for v in marks):
            raise ValueError(f"malformed letter {obj!r}")
        return Marked(None if base == "eps" else base, frozenset(marks))
    raise ValueError(f"malformed letter {obj!r}")


def dfa_to_json_obj(d: Dfa) -> dict:
    return {
        "alphabet": [_letter_to_json(a) for a in d.alphabet],
        "states": d.n_states,
        "start": d.start,
        "accepting": sorted(d.accepting),
        "delta": [list(row) for row in d.delta],
    }


def dfa_to_json(d: Dfa) -> str:
    return json.dumps(dfa_to_json_obj(d), indent=2)


def dfa_from_json_obj(obj) -> Dfa:
    if not isinstance(obj, dict):
        raise ValueError("automaton JSON must be an object")
    missing = {"alphabet", "states", "start", "accepting", "delta"} - set(obj)
    if missing:
        raise ValueError(f"automaton JSON misses keys {sorted(missing)}")
    alphabet = [_letter_from_json(a) for a in obj["alphabet"]]
    states = obj["states"]
    if not isinstance(states, int) or states < 1:
        raise ValueError("'states' must be a positive integer")
    delta = obj["delta"]
    if not isinstance(delta, list) or len(delta) != states:
        raise ValueError("'delta' must list one row per state")
    accepting = obj["accepting"]
    if not isinstance(accepting, list) or not all(isinstance(x, int) for x in accepting):
        raise ValueError("'accepting' must be a list of state indices")
    if not isinstance(obj["start"], int):
        raise ValueError("'start' must be a state index")
    return Dfa(alphabet, delta, obj["start"], accepting)


def dfa_from_json(text: str) -> Dfa:
    return dfa_from_json_obj(json.loads(text))


def dfa_to_dot(d: Dfa) -> str:
    lines = ["digraph dfa {", "  rankdir=LR;", '  hidden [shape=none, label=""];']
    for q in range(d.n_states):
        shape = "doublecircle" if q in d.accepting else "circle"
        lines.append(f"  {q} [shape={shape}];")
    lines.append(f"  hidden -> {d.start};")
    for q in range(d.n_states):
        by_target: dict[int, list[str]] = {}
        for a, t in zip(d.alphabet, d.delta[q]):
            by_target.setdefault(t, []).append(str(a))
        for t in sorted(by_target):
            label = ", ".join(by_target[t])
            lines.append(f'  {q} -> {t} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
