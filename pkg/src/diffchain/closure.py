"""Closure of a regular language under k-variable universal sentences, and
difference chains of such closures.

The closure keeps exactly the words that agree with some member of the
language on every k-tuple of positions (with matching length).  It is
computed by lifting the language to its structures, erasing unmarked
positions, pulling back, and taking the universal image; each step is a
standard automaton construction.  All semantics are over nonempty words: the
input language is normalized by dropping the empty word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .automata import (
    DEFAULT_STATE_CAP,
    Dfa,
    dfa_no_words,
    dfa_nonempty_words,
    dfa_to_json_obj,
    difference,
    equivalent,
    erasing_hom,
    forall_adjoint,
    forward_lp_image,
    intersect,
    inverse_hom_image,
    is_empty_lang,
    minimize,
    shortest_word,
    subset_of,
    tensor,
    union,
    variables,
    _plain_alphabet,
)
from .errors import CapacityError

DEFAULT_K_CAP = 3
DEFAULT_MAX_M = 8


def _normalize(d: Dfa) -> Dfa:
    """Canonical form of the nonempty-word part of the language."""
    base = _plain_alphabet(d)
    return minimize(intersect(d, dfa_nonempty_words(base)))


def pi1_closure(
    d: Dfa,
    k: int,
    state_cap: int = DEFAULT_STATE_CAP,
    k_cap: int = DEFAULT_K_CAP,
) -> Dfa:
    """Least language containing d's that a k-variable universal sentence
    can define, over nonempty words.

    Raises CapacityError when k exceeds ``k_cap`` (the marked alphabet grows
    as 2^k) or when an intermediate automaton passes ``state_cap`` states.
    """
    if k < 1:
        raise ValueError("need at least one variable")
    if k > k_cap:
        raise CapacityError(f"k={k} exceeds the variable cap {k_cap}")
    base = _plain_alphabet(d)
    vs = variables(k)
    lifted = tensor(_normalize(d), vs)
    erase = erasing_hom(base, vs)
    kept = minimize(forward_lp_image(lifted, erase, state_cap))
    pulled = minimize(inverse_hom_image(kept, erase))
    return forall_adjoint(pulled, vs, base, state_cap)


def is_pi1_k(d: Dfa, k: int, state_cap: int = DEFAULT_STATE_CAP) -> bool:
    """True when the (nonempty-word part of the) language is its own closure."""
    return equivalent(pi1_closure(d, k, state_cap), _normalize(d))


# ----- difference chains of closures -------------------------------------


@dataclass(frozen=True)
class ChainTrace:
    """A difference chain of k-variable closures aimed at a target language.

    ``chain`` decreases under inclusion; odd positions contribute positively.
    ``status`` is "success" when the differences reconstruct the target, in
    which case ``pair_count`` is the number of odd/even pairs; on
    "exhausted" ``pair_count`` is None and ``chain`` holds everything that
    was computed before the bounds ran out.
    """

    k: int
    target: Dfa
    chain: tuple[Dfa, ...]
    pair_count: int | None
    status: str

    @property
    def succeeded(self) -> bool:
        return self.status == "success"

    def difference_union(self) -> Dfa:
        """Union of the odd-even differences of the chain."""
        acc = dfa_no_words(self.target.alphabet)
        comps = self.chain
        for i in range(0, len(comps) - 1, 2):
            acc = union(acc, difference(comps[i], comps[i + 1]))
        if len(comps) % 2:
            acc = union(acc, comps[-1])
        return minimize(acc)

    def nested_difference(self) -> Dfa:
        """The chain read as G1 - (G2 - (G3 - ...))."""
        acc = dfa_no_words(self.target.alphabet)
        for comp in reversed(self.chain):
            acc = difference(comp, acc)
        return minimize(acc)


def closure_chain_terms(
    d: Dfa, k: int, count: int, state_cap: int = DEFAULT_STATE_CAP
) -> list[Dfa]:
    """First ``count`` terms of the canonical closure chain at k variables.

    Term 1 is the closure of the target; even terms close up what the
    previous term has outside the target, odd terms what it has inside.  No
    early stopping: the sequence is well defined at every index.
    """
    target = _normalize(d)
    terms: list[Dfa] = []
    for i in range(count):
        if i == 0:
            seed = target
        elif i % 2 == 1:
            seed = difference(terms[-1], target)
        else:
            seed = intersect(terms[-1], target)
        terms.append(pi1_closure(seed, k, state_cap))
    return terms


def chain_trace(
    d: Dfa,
    k: int,
    max_m: int = DEFAULT_MAX_M,
    state_cap: int = DEFAULT_STATE_CAP,
) -> ChainTrace:
    """Difference chain of k-variable closures aimed at d's language.

    Builds odd/even pairs until a pair's difference is empty or ``max_m``
    pairs were computed, then reports whether the union of the differences
    reconstructs the target.  An empty target succeeds with the empty chain.
    """
    target = _normalize(d)
    if is_empty_lang(target):
        return ChainTrace(k, target, (), 0, "success")
    comps: list[Dfa] = []
    reached: Dfa | None = None  # union of differences so far
    for pair in range(1, max_m + 1):
        if pair == 1:
            seed = target
        else:
            seed = intersect(comps[-1], target)
        odd = pi1_closure(seed, k, state_cap)
        even = pi1_closure(difference(odd, target), k, state_cap)
        diff = difference(odd, even)
        if is_empty_lang(diff):
            break
        comps += [odd, even]
        reached = diff if reached is None else minimize(union(reached, diff))
        if equivalent(reached, target):
            return ChainTrace(k, target, tuple(comps), pair, "success")
    return ChainTrace(k, target, tuple(comps), None, "exhausted")


def decompose_bpi1(
    d: Dfa,
    max_k: int = DEFAULT_K_CAP,
    max_m: int = DEFAULT_MAX_M,
    state_cap: int = DEFAULT_STATE_CAP,
) -> ChainTrace:
    """Search for a difference-chain decomposition, k ascending.

    Returns the first successful trace; on failure, the exhausted trace of
    the largest k tried.  Exhaustion means the bounds ran out, not that no
    decomposition exists.
    """
    if max_k < 1 or max_m < 1:
        raise ValueError("bounds must be at least 1")
    last: ChainTrace | None = None
    for k in range(1, max_k + 1):
        last = chain_trace(d, k, max_m, state_cap)
        if last.succeeded:
            return last
    assert last is not None
    return last


def family_monotonicity(
    d: Dfa,
    k_small: int,
    k_large: int,
    pairs: int = 2,
    state_cap: int = DEFAULT_STATE_CAP,
) -> tuple[bool, tuple | None]:
    """Check that more variables give smaller chain terms.

    Compares the first 2*``pairs`` chain terms at ``k_small`` and ``k_large``
    and returns (True, None) when every term at the larger k is included in
    the corresponding term at the smaller k, else (False, witness word).
    """
    if not 1 <= k_small <= k_large:
        raise ValueError("need 1 <= k_small <= k_large")
    coarse = closure_chain_terms(d, k_small, 2 * pairs, state_cap)
    fine = closure_chain_terms(d, k_large, 2 * pairs, state_cap)
    for small_term, large_term in zip(coarse, fine):
        if not subset_of(large_term, small_term):
            return False, shortest_word(difference(large_term, small_term))
    return True, None


# ----- serialization -----------------------------------------------------


def trace_to_json_obj(trace: ChainTrace) -> dict:
    obj: dict = {"k": trace.k, "status": trace.status}
    if trace.pair_count is not None:
        obj["m"] = trace.pair_count
    obj["chain"] = [dfa_to_json_obj(c) for c in trace.chain]
    diffs = []
    for i in range(0, len(trace.chain) - 1, 2):
        diffs.append(
            dfa_to_json_obj(minimize(difference(trace.chain[i], trace.chain[i + 1])))
        )
    obj["witness_diffs"] = diffs
    return obj


def trace_to_json(trace: ChainTrace) -> str:
    return json.dumps(trace_to_json_obj(trace), indent=2)
