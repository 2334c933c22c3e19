"""Command-line front end.

Subcommands: ``eval`` (one braid word), ``batch`` (file of named words),
``selftest`` (model identities, regression corpus, Markov property suite),
``dump-rmatrix`` (the crossing tensor as a 16x16 grid).

Machine-format output on stdout is byte-identical across runs; human
metadata and timing go to stderr for the machine formats.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .braid import (
    BraidSyntaxError,
    BraidWord,
    closure_info,
    conjugate,
    free_insert,
    mirror,
    parse,
    random_braid,
    render,
    stabilize,
    writhe,
)
from .engine import (
    DEFAULT_SIZE_CAP,
    NonScalarTangleError,
    SizeCapExceeded,
    evaluate_raw,
)
from .invariant import (
    StructureError,
    is_palindromic_q,
    parity_violations,
    q_inverted,
    render_compact_text,
    render_laurent,
    render_machine,
    to_compact,
    to_invariant,
)
from .knotdata import load_corpus, run_regression, validate_entry
from .statemodel import (
    check_yang_baxter,
    lg_handles,
    lg_sigma,
    lg_sigma_inverse,
)

FORMATS = ("compact-text", "compact-machine", "laurent", "json")


@dataclass
class EvalRequest:
    word: str
    strings: int | None = None
    fmt: str = "compact-text"
    max_size: int = DEFAULT_SIZE_CAP
    verbose: bool = False
    name: str | None = None


def _evaluate_request(req: EvalRequest) -> tuple[str, list[str]]:
    """Returns (stdout record, human metadata lines)."""
    braid = parse(req.word, req.strings)
    start = time.perf_counter()
    poly = to_invariant(evaluate_raw(braid, max_size=req.max_size))
    elapsed = time.perf_counter() - start
    compact = to_compact(poly)
    info = closure_info(braid)
    meta = [
        f"strings:      {braid.n_strings}",
        f"letters:      {braid.expanded_length()}",
        f"writhe:       {writhe(braid)}",
        f"components:   {info.components}",
        f"palindromic:  {'yes' if is_palindromic_q(poly) else 'no'}",
        f"elapsed:      {elapsed:.3f}s",
    ]
    violations = parity_violations(poly)
    if violations:
        meta.append(f"parity violations: {violations}")
    if not poly:
        meta.append("note: value is 0 (the closure has a split component)")
    if req.fmt == "compact-text":
        record = render_compact_text(compact)
    elif req.fmt == "compact-machine":
        record = render_machine(compact, req.name)
    elif req.fmt == "laurent":
        record = render_laurent(poly)
    else:
        record = json.dumps(
            {
                "name": req.name,
                "word": render(braid),
                "strings": braid.n_strings,
                "letters": braid.expanded_length(),
                "writhe": writhe(braid),
                "components": info.components,
                "palindromic_q": is_palindromic_q(poly),
                "compact": [sorted(block.items()) for block in compact],
            },
            sort_keys=True,
        )
    return record, meta


def cmd_eval(args: argparse.Namespace) -> int:
    req = EvalRequest(
        word=args.word,
        strings=args.strings,
        fmt=args.format,
        max_size=args.max_size,
        verbose=args.verbose,
    )
    try:
        record, meta = _evaluate_request(req)
    except (BraidSyntaxError, SizeCapExceeded, NonScalarTangleError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, BraidSyntaxError) else 1
    print(record)
    stream = sys.stdout if req.fmt == "compact-text" else sys.stderr
    for line in meta:
        print(line, file=stream)
    return 0


def _batch_worker(task: tuple[str, str, int]) -> tuple[str, bool, str]:
    name, word, max_size = task
    try:
        braid = parse(word)
        compact = to_compact(to_invariant(evaluate_raw(braid, max_size=max_size)))
        return name, True, render_machine(compact, name)
    except (BraidSyntaxError, SizeCapExceeded, NonScalarTangleError, StructureError) as exc:
        return name, False, str(exc)


def cmd_batch(args: argparse.Namespace) -> int:
    tasks: list[tuple[str, str, int]] = []
    try:
        with open(args.file) as fh:
            for raw_line in fh:
                line = raw_line.strip()
                if not line or line.startswith("#"):
                    continue
                name, _, word = line.partition(" ")
                tasks.append((name, word.strip(), args.max_size))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_worker, tasks))
    else:
        results = [_batch_worker(t) for t in tasks]
    failed = 0
    for name, ok, payload in results:
        if ok:
            print(payload)
        else:
            failed += 1
            print(f"error: {name}: {payload}", file=sys.stderr)
    return 1 if failed else 0


@dataclass
class MarkovReport:
    braids: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_markov_suite(
    seed: int = 0,
    braids: int = 100,
    max_strings: int = 4,
    max_expanded_len: int = 8,
) -> MarkovReport:
    """Random braids through every closure-preserving move: conjugation,
    both stabilizations, free insertion, braid-relation rewriting, plus
    the mirror relation.  Every value also passes the structural checks
    (inside to_invariant) and the parity scan."""
    rng = random.Random(seed)
    report = MarkovReport()

    def check(label: str, word: str, cond: bool) -> None:
        report.checks += 1
        if not cond:
            report.failures.append(f"{label} failed on {word!r}")

    for _ in range(braids):
        b = random_braid(rng, max_strings, max_expanded_len)
        word = render(b) or f"(empty, {b.n_strings} strings)"
        report.braids += 1
        base = evaluate_raw(b)
        poly = to_invariant(base)
        check("parity", word, not parity_violations(poly))

        g = (rng.randint(1, b.n_strings - 1), rng.choice((1, -1)))
        check("conjugation", word, evaluate_raw(conjugate(b, g)) == base)
        check("stabilize+", word, evaluate_raw(stabilize(b, 1)) == base)
        check("stabilize-", word, evaluate_raw(stabilize(b, -1)) == base)
        ins = free_insert(
            b, rng.randint(0, len(b.letters)), rng.randint(1, b.n_strings - 1)
        )
        check("free insertion", word, evaluate_raw(ins) == base)

        n = max(b.n_strings, 3)
        j = rng.randint(1, n - 2)
        lhs = BraidWord(n, b.letters + ((j, 1), (j + 1, 1), (j, 1)))
        rhs = BraidWord(n, b.letters + ((j + 1, 1), (j, 1), (j + 1, 1)))
        check("braid relation", word, evaluate_raw(lhs) == evaluate_raw(rhs))

        mirrored = to_invariant(evaluate_raw(mirror(b)))
        check("mirror", word, mirrored == q_inverted(poly))
    return report


def cmd_selftest(args: argparse.Namespace) -> int:
    failures = 0

    def report(section: str, label: str, ok: bool, extra: str = "") -> None:
        nonlocal failures
        status = "pass" if ok else "FAIL"
        if not ok:
            failures += 1
        print(f"{section:<9} {label:<42} {status}{'  ' + extra if extra else ''}")

    sig, inv = lg_sigma(), lg_sigma_inverse()
    report("identity", "sigma * sigma^-1 = I", sig.compose(inv).is_identity())
    report("identity", "sigma^-1 * sigma = I", inv.compose(sig).is_identity())
    report("identity", "Yang-Baxter relation", check_yang_baxter())
    try:
        c_plus, c_minus = lg_handles()
        report(
            "identity",
            "handles: composition, trace(C+/-) = 0",
            not c_plus.trace() and not c_minus.trace(),
        )
    except AssertionError as exc:
        report("identity", "handles: composition", False, str(exc))

    entries = load_corpus()
    bad = [(e.name, p) for e in entries for p in validate_entry(e)]
    report(
        "corpus",
        f"{len(entries)} entries internally consistent",
        not bad,
        "; ".join(f"{n}: {p}" for n, p in bad[:3]),
    )
    regression = run_regression(entries)
    counts = regression.counts()
    report(
        "corpus",
        f"regression ({counts.get('pass', 0)} evaluated, "
        f"{counts.get('value-only', 0)} value-only)",
        regression.ok,
    )
    for name, _, detail in regression.failures:
        print(f"    {name}: {detail}")

    if not args.quick:
        markov = run_markov_suite(seed=args.seed, braids=args.braids)
        report(
            "markov",
            f"{markov.braids} braids, {markov.checks} checks (seed {args.seed})",
            markov.ok,
        )
        for failure in markov.failures[:5]:
            print(f"    {failure}")

    print("result: " + ("all passed" if not failures else f"{failures} FAILED"))
    return 1 if failures else 0


def cmd_dump_rmatrix(_: argparse.Namespace) -> int:
    sig = lg_sigma()
    grid = sig.as_matrix()
    cells = [[str(v) if v else "." for v in row] for row in grid]
    widths = [max(len(cells[r][c]) for r in range(16)) for c in range(16)]
    print("crossing tensor, row = (a b) outgoing pair, col = (c d) incoming pair")
    for r, row in enumerate(cells):
        label = f"[{r // 4 + 1} {r % 4 + 1}]"
        body = "  ".join(cell.rjust(w) for cell, w in zip(row, widths))
        print(f"{label} {body}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgpoly",
        description="Exact evaluation of the two-variable Links-Gould "
        "invariant of the closure of a braid word.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one braid word")
    p_eval.add_argument("word", help="braid word, e.g. '1 1 1' or '1^3'")
    p_eval.add_argument("--strings", type=int, default=None)
    p_eval.add_argument("--format", choices=FORMATS, default="compact-text")
    p_eval.add_argument("--max-size", type=int, default=DEFAULT_SIZE_CAP)
    p_eval.add_argument("-v", "--verbose", action="store_true")
    p_eval.set_defaults(func=cmd_eval)

    p_batch = sub.add_parser("batch", help="evaluate a file of named words")
    p_batch.add_argument("file", help="one 'name word...' per line")
    p_batch.add_argument("--jobs", type=int, default=1)
    p_batch.add_argument("--max-size", type=int, default=DEFAULT_SIZE_CAP)
    p_batch.add_argument("-v", "--verbose", action="store_true")
    p_batch.set_defaults(func=cmd_batch)

    p_self = sub.add_parser("selftest", help="model identities, corpus, Markov suite")
    p_self.add_argument("--quick", action="store_true", help="skip the Markov suite")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.add_argument("--braids", type=int, default=100)
    p_self.add_argument("-v", "--verbose", action="store_true")
    p_self.set_defaults(func=cmd_selftest)

    p_dump = sub.add_parser("dump-rmatrix", help="print the crossing tensor grid")
    p_dump.add_argument("-v", "--verbose", action="store_true")
    p_dump.set_defaults(func=cmd_dump_rmatrix)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
