"""Shared language fixtures for the test suite.

Every builder returns a complete DFA over the two letter alphabet
('a', 'b').  All languages consist of nonempty words only.  Builders are
deliberately tiny hand-built machines; test_automata checks each one
against a plain word predicate so the rest of the suite can trust them.
"""

from __future__ import annotations

from collections.abc import Iterable

from diffchain import Dfa, minimize, union
from diffchain.oracle import words_upto

AB = ("a", "b")


def letters_plus(allowed: Iterable[str]) -> Dfa:
    """Nonempty words built only from the letters in `allowed`."""
    good = frozenset(allowed)
    # 0 start, 1 accept, 2 sink
    delta = []
    for state in (0, 1):
        delta.append([1 if letter in good else 2 for letter in AB])
    delta.append([2, 2])
    return Dfa(AB, delta, 0, [1])


def a_plus() -> Dfa:
    return letters_plus({"a"})


def b_plus() -> Dfa:
    return letters_plus({"b"})


def a_plus_or_b_plus() -> Dfa:
    return minimize(union(a_plus(), b_plus()))


def contains(letter: str) -> Dfa:
    """Words with at least one occurrence of `letter`."""
    return Dfa(AB, [[1 if x == letter else 0 for x in AB], [1, 1]], 0, [1])


def literal(word: str) -> Dfa:
    """The single word `word` (must be nonempty over ('a', 'b'))."""
    assert word and all(x in AB for x in word)
    n = len(word)
    sink = n + 1
    delta = []
    for pos in range(n):
        delta.append([pos + 1 if x == word[pos] else sink for x in AB])
    delta.append([sink, sink])  # past the word
    delta.append([sink, sink])
    return Dfa(AB, delta, 0, [n])


def ab_repeat() -> Dfa:
    """The words ab, abab, ababab, ..."""
    # 0 start, 1 saw a, 2 accept, 3 sink
    return Dfa(AB, [[1, 3], [3, 2], [1, 3], [3, 3]], 0, [2])


def a_star_b() -> Dfa:
    """Words of shape a...ab: any number of a's then a single b."""
    return Dfa(AB, [[0, 1], [2, 2], [2, 2]], 0, [1])


def assert_lang(dfa: Dfa, predicate, max_len: int = 6) -> None:
    """Check `dfa` against `predicate` on every nonempty word up to max_len."""
    for word in words_upto(dfa.alphabet, max_len):
        assert dfa.accepts(word) == predicate(word), word
