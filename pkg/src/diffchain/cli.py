"""Command-line interface.

One binary with verb subcommands; JSON in, JSON out.  Exit codes: 0 for
success or a true verdict, 1 for a false verdict or an exhausted search, 2
for input errors.  The DIFFCHAIN_STATE_CAP environment variable overrides
the intermediate-automaton state guard.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import automata, chains, closure, oracle
from .errors import DiffChainError
from .poset import poset_from_json, poset_to_dot

DEFAULT_SEED = 271828


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (DiffChainError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffchain",
        description="Difference chains over finite posets and closures of regular languages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    poset_cmd = sub.add_parser("poset", help="poset-side operations")
    poset_sub = poset_cmd.add_subparsers(dest="subcommand", required=True)
    chain_cmd = poset_sub.add_parser(
        "chain", help="canonical difference chain of a subset"
    )
    chain_cmd.add_argument("--poset", required=True, help="poset JSON file")
    chain_cmd.add_argument(
        "--set", required=True, dest="members",
        help="comma-separated element indices (empty string for the empty set)",
    )
    chain_cmd.add_argument("--out", help="write JSON here instead of stdout")
    chain_cmd.add_argument(
        "--dot", action="store_true",
        help="also write a DOT rendering next to --out",
    )
    chain_cmd.set_defaults(handler=_cmd_poset_chain)

    lang_cmd = sub.add_parser("lang", help="language-side operations")
    lang_sub = lang_cmd.add_subparsers(dest="subcommand", required=True)

    closure_cmd = lang_sub.add_parser(
        "closure", help="closure under k-variable universal sentences"
    )
    closure_cmd.add_argument("--dfa", required=True, help="automaton JSON file")
    closure_cmd.add_argument("--k", type=int, required=True, help="number of variables")
    closure_cmd.add_argument("--out", help="write JSON here instead of stdout")
    closure_cmd.add_argument(
        "--dot", action="store_true",
        help="also write a DOT rendering next to --out",
    )
    closure_cmd.set_defaults(handler=_cmd_lang_closure)

    decompose_cmd = lang_sub.add_parser(
        "decompose", help="search for a difference chain of closures"
    )
    decompose_cmd.add_argument("--dfa", required=True, help="automaton JSON file")
    decompose_cmd.add_argument("--max-k", type=int, default=closure.DEFAULT_K_CAP)
    decompose_cmd.add_argument("--max-m", type=int, default=closure.DEFAULT_MAX_M)
    decompose_cmd.add_argument("--out", help="write JSON here instead of stdout")
    decompose_cmd.set_defaults(handler=_cmd_lang_decompose)

    eq_cmd = lang_sub.add_parser("eq", help="language equivalence of two automata")
    eq_cmd.add_argument(
        "--dfa", action="append", required=True,
        help="automaton JSON file (give exactly twice)",
    )
    eq_cmd.set_defaults(handler=_cmd_lang_eq)

    verify_cmd = sub.add_parser(
        "verify", help="cross-check the algorithms against brute-force oracles"
    )
    verify_cmd.add_argument(
        "--suite", required=True,
        choices=["poset-chains", "closure", "images", "adjunction", "all"],
    )
    verify_cmd.add_argument(
        "--max-len", type=int, default=6,
        help="word length bound (poset-chains: carrier size bound, capped at 5)",
    )
    verify_cmd.add_argument("--cases", type=int, default=10, help="random cases per suite")
    verify_cmd.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify_cmd.set_defaults(handler=_cmd_verify)

    return parser


def _state_cap() -> int:
    raw = os.environ.get("DIFFCHAIN_STATE_CAP")
    if raw is None:
        return automata.DEFAULT_STATE_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("DIFFCHAIN_STATE_CAP must be positive")
    return cap


def _emit(text: str, out: str | None, dot_text: str | None, want_dot: bool) -> None:
    if want_dot and out is None:
        raise ValueError("--dot needs --out to know where to write")
    if out is None:
        print(text)
        return
    Path(out).write_text(text + "\n", encoding="utf-8")
    if want_dot and dot_text is not None:
        Path(out).with_suffix(".dot").write_text(dot_text, encoding="utf-8")


def _parse_members(raw: str) -> list[int]:
    raw = raw.strip()
    if not raw:
        return []
    try:
        return [int(part) for part in raw.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse element list {raw!r}") from None


# ----- handlers ----------------------------------------------------------


def _cmd_poset_chain(args) -> int:
    poset, labels = poset_from_json(Path(args.poset).read_text(encoding="utf-8"))
    members = frozenset(_parse_members(args.members))
    chain = chains.canonical_chain(poset, members)
    degs = chains.degrees(poset, members)
    obj = {
        "V": sorted(members),
        "m": chain.pairs,
        "K": [sorted(component) for component in chain.sets],
        "degrees": list(degs),
    }
    dot = poset_to_dot(poset, labels) if args.dot else None
    _emit(json.dumps(obj, indent=2), args.out, dot, args.dot)
    return 0 if chains.evaluate(chain) == members else 1


def _cmd_lang_closure(args) -> int:
    dfa = automata.dfa_from_json(Path(args.dfa).read_text(encoding="utf-8"))
    closed = closure.pi1_closure(dfa, args.k, state_cap=_state_cap())
    dot = automata.dfa_to_dot(closed) if args.dot else None
    _emit(automata.dfa_to_json(closed), args.out, dot, args.dot)
    return 0


def _cmd_lang_decompose(args) -> int:
    dfa = automata.dfa_from_json(Path(args.dfa).read_text(encoding="utf-8"))
    trace = closure.decompose_bpi1(
        dfa, max_k=args.max_k, max_m=args.max_m, state_cap=_state_cap()
    )
    _emit(closure.trace_to_json(trace), args.out, None, False)
    return 0 if trace.succeeded else 1


def _cmd_lang_eq(args) -> int:
    if len(args.dfa) != 2:
        raise ValueError("give --dfa exactly twice")
    first = automata.dfa_from_json(Path(args.dfa[0]).read_text(encoding="utf-8"))
    second = automata.dfa_from_json(Path(args.dfa[1]).read_text(encoding="utf-8"))
    same = automata.equivalent(first, second)
    print("equivalent" if same else "different")
    return 0 if same else 1


def _cmd_verify(args) -> int:
    suites = (
        ["poset-chains", "closure", "images", "adjunction"]
        if args.suite == "all"
        else [args.suite]
    )
    ok = True
    for name in suites:
        good, detail = _SUITES[name](args)
        line = "ok" if good else "MISMATCH"
        print(f"suite {name}: {detail} ... {line}")
        ok = ok and good
    return 0 if ok else 1


def _suite_poset_chains(args) -> tuple[bool, str]:
    size = min(args.max_len, 5) if args.max_len else 4
    checked = 0
    for poset in oracle.all_posets_upto(size):
        for bits in range(1 << poset.n):
            members = frozenset(i for i in range(poset.n) if bits >> i & 1)
            chain = chains.canonical_chain(poset, members)
            if chains.evaluate(chain) != members:
                return False, f"reconstruction fails on n={poset.n} bits={bits}"
            degs = chains.degrees(poset, members)
            for x in range(poset.n):
                if degs[x] != oracle.brute_degree(poset, members, x):
                    return False, f"degree mismatch on n={poset.n} bits={bits} x={x}"
            checked += 1
    return True, f"{checked} poset/subset pairs, sizes 1..{size}"


def _suite_closure(args) -> tuple[bool, str]:
    rng = random.Random(args.seed)
    cap = _state_cap()
    for case in range(args.cases):
        dfa = oracle.random_dfa(rng, 3, ("a", "b"))
        for k in (1, 2):
            closed = closure.pi1_closure(dfa, k, state_cap=cap)
            for word in oracle.words_upto(("a", "b"), args.max_len):
                want = oracle.brute_pi1_closure_member(dfa, k, word)
                if closed.accepts(word) != want:
                    return False, f"case {case} k={k} word={''.join(word)}"
    return True, f"{args.cases} automata, k in {{1,2}}, words <= {args.max_len}"


def _suite_images(args) -> tuple[bool, str]:
    rng = random.Random(args.seed)
    for case in range(args.cases):
        dfa = oracle.random_dfa(rng, 3, ("a", "b", "c"))
        hom = automata.LpHom(
            ("a", "b", "c"), ("d", "e"),
            {a: rng.choice(("d", "e")) for a in ("a", "b", "c")},
        )
        left = automata.forward_lp_image(dfa, hom, _state_cap())
        right = oracle.monoid_forward_image(dfa, hom)
        same, word = oracle.lang_eq_upto(left, right, args.max_len)
        if not same:
            return False, f"case {case} word={''.join(word)}"
    return True, f"{args.cases} homomorphism images, words <= {args.max_len}"


def _suite_adjunction(args) -> tuple[bool, str]:
    rng = random.Random(args.seed)
    vs = automata.variables(1)
    marked = automata.marked_alphabet(("a", "b"), vs)
    nonempty = automata.dfa_nonempty_words(("a", "b"))
    for case in range(args.cases):
        lang = automata.minimize(
            automata.intersect(oracle.random_dfa(rng, 3, ("a", "b")), nonempty)
        )
        upper = oracle.random_dfa(rng, 3, marked)
        left = automata.subset_of(automata.tensor(lang, vs), upper)
        right = automata.subset_of(
            lang, automata.forall_adjoint(upper, vs, ("a", "b"))
        )
        if left != right:
            return False, f"case {case}: adjunction sides disagree"
    return True, f"{args.cases} language/constraint pairs"


_SUITES = {
    "poset-chains": _suite_poset_chains,
    "closure": _suite_closure,
    "images": _suite_images,
    "adjunction": _suite_adjunction,
}


if __name__ == "__main__":
    sys.exit(main())
