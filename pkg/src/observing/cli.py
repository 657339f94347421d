"""Command-line front end: ``observing {enumerate,member,trace,lint}``.

Words go to stdout, diagnostics to stderr. Exit status: 0 on success,
1 when ``member`` finds nothing within the bounds, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import go, sticker
from .errors import ObservingError, ReplayError
from .formats import parse_domino, parse_system
from .grammar import RuleApplication
from .observer import lint_disjointness, render
from .search import FILTERED, FREE, Bounds


def _positive(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="observing", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bounds):
        p.add_argument("--system", required=True, metavar="PATH", help="system file")
        if bounds:
            p.add_argument("--max-steps", type=_positive, required=True, metavar="N")
            p.add_argument("--max-form-len", type=_positive, metavar="N")
            p.add_argument("--max-output-len", type=_positive, metavar="N")
            p.add_argument("--jobs", type=_positive, default=1, metavar="N")

    p = sub.add_parser("enumerate", help="list the observed words within bounds")
    common(p, True)
    p.add_argument("--mode", choices=["free", "filtered"], default="free")
    p.add_argument("--filter-bottom", action="store_true", help="same as --mode filtered")

    p = sub.add_parser("member", help="search for a witness evolution of a word")
    common(p, True)
    p.add_argument("--word", required=True, metavar="W", help="'~' for the empty word")

    p = sub.add_parser("trace", help="replay steps and print the observation table")
    common(p, False)
    p.add_argument("--replay", required=True, metavar="SCRIPT",
                   help="rule applications 'k@pos' or dominoes 'x/-' '-/x'; '@FILE' reads a file")

    p = sub.add_parser("lint", help="warn about overlapping observer cases")
    common(p, False)
    return parser


def _bounds(args):
    return Bounds(args.max_steps, args.max_form_len or None, args.max_output_len or None)


def _word(text):
    return "" if text == "~" else text


def _load(path):
    return parse_system(Path(path).read_text(encoding="utf-8"))


def _script(text):
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    return text.split()


def _grammar_apps(system, items):
    apps = []
    form = (system.grammar.start,)
    for step, item in enumerate(items, start=1):
        rule, _, pos = item.partition("@")
        try:
            rule = int(rule)
            if pos:
                pos = int(pos)
            else:
                lhs = system.grammar.rules[rule].lhs
                pos = form.index(lhs)
        except (ValueError, IndexError):
            raise ReplayError(f"cannot read rule application {item!r}", step) from None
        app = RuleApplication(rule, pos)
        form = go._grammar.apply(system.grammar, form, app, step)
        apps.append(app)
    return apps


def _sticker_steps(system, items):
    axiom = 0
    if items and items[0].startswith("@"):
        try:
            axiom = int(items[0][1:])
        except ValueError:
            raise ReplayError(f"bad axiom selector {items[0]!r}") from None
        items = items[1:]
    return axiom, [parse_domino(item, system.system.alphabet) for item in items]


def _table(header, rows, out):
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    for row in [header] + rows:
        print("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip(), file=out)


def cmd_enumerate(args, out, err):
    system = _load(args.system)
    mode = FILTERED if (args.filter_bottom or args.mode == "filtered") else FREE
    if isinstance(system, go.GOSystem):
        result = go.enumerate_language(system, _bounds(args), mode, jobs=max(args.jobs, 1))
    else:
        result = sticker.enumerate_observed(system, _bounds(args), mode, jobs=max(args.jobs, 1))
    for word in result.words:
        print(word or "~", file=out)
    stats = result.stats
    print(f"# {len(result.words)} words; exhausted={str(result.exhausted).lower()}; "
          f"forms_explored={stats['forms_explored']}; "
          f"max_nonterminals_seen={stats['max_nonterminals_seen']}", file=err)
    return 0


def cmd_member(args, out, err):
    system = _load(args.system)
    word = _word(args.word)
    if isinstance(system, go.GOSystem):
        result = go.member(system, word, _bounds(args), jobs=max(args.jobs, 1))
        if result:
            print(go.derivation_text(system, result.witness), file=out)
            print("replay: " + " ".join(map(str, result.witness)), file=out)
    else:
        result = sticker.member(system, word, _bounds(args), jobs=max(args.jobs, 1))
        if result:
            axiom, dominoes = result.witness
            molecules = sticker.replay(system.system, dominoes, axiom)
            print("=>".join(map(str, molecules)), file=out)
            print("replay: " + " ".join([f"@{axiom}"] + [str(d) for d in dominoes]), file=out)
    if not result:
        print(f"not found within bounds: {args.word}", file=err)
        return 1
    return 0


def cmd_trace(args, out, err):
    system = _load(args.system)
    items = _script(args.replay)
    if isinstance(system, go.GOSystem):
        rows = go.trace(system, _grammar_apps(system, items))
        body = [[r.step, "" if r.applied is None else
                 f"{system.grammar.rules[r.applied.rule]} @{r.applied.position}",
                 go.form_text(r.form), render(r.emitted)] for r in rows]
        _table(["Step", "Added", "Form", "Output"], body, out)
    else:
        axiom, dominoes = _sticker_steps(system, items)
        rows = sticker.trace(system, dominoes, axiom)
        body = [[r.step, "" if r.added is None else str(r.added), str(r.molecule),
                 render(r.emitted)] for r in rows]
        _table(["Step", "Added", "Molecule", "Output"], body, out)
    output = "".join(r.emitted for r in rows)
    print(f"output: {output or '~'}", file=out)
    return 0


def cmd_lint(args, out, err):
    system = _load(args.system)
    for warning in lint_disjointness(system.spec, system.observer.alphabet):
        print(f"warning: {warning}", file=out)
    return 0


COMMANDS = {"enumerate": cmd_enumerate, "member": cmd_member,
            "trace": cmd_trace, "lint": cmd_lint}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return COMMANDS[args.command](args, out, err)
    except (ObservingError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
