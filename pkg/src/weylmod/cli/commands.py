"""Subcommands of the ``weylmod`` tool.

Every subcommand takes the input (a quiver or Cartan file, or a preset name)
as its first argument and returns a ``CommandResult``: the exit code, the
text output and the equivalent pydantic model for ``--json``.

Exit codes: 0 success or true, 1 predicate false, 2 input error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, TextIO

from pydantic import BaseModel

from ..algebra import LEFTMOST_METHODS, HereditaryAlgebra
from ..arquiver import dims_table, to_dot
from ..config import Settings
from ..coxeter import element_length, element_of, format_pairs, format_word, is_reduced, rho, word_compare
from ..embedding import format_trace
from ..errors import OracleDisagreementError, ResourceLimitError, WeylModError
from ..grid import ModMultiset
from ..linoracle import cross_check
from ..subcats import (
    CofiniteSubcat,
    is_submodule_closed,
    leftmost_words,
    prefix_leftmost_check,
    restrict_to_subalgebra,
    subcat_of_word,
    verify_bijection,
)
from . import schemas
from .parser import load_cartan, parse_indices, parse_module, parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


class CommandResult(NamedTuple):
    code: int
    text: str
    model: BaseModel


Handler = Callable[[argparse.Namespace, HereditaryAlgebra], CommandResult]


def _code(value: bool) -> int:
    return EXIT_OK if value else EXIT_FALSE


def _vertices(module: ModMultiset) -> List[schemas.VertexModel]:
    return [schemas.VertexModel.of(v) for v in module.support()]


def _excluded(algebra: HereditaryAlgebra, text: str) -> CofiniteSubcat:
    module = parse_module(text)
    for vertex in module.support():
        algebra.quiver.require(vertex)
    return CofiniteSubcat.of(module.support())


def cmd_coxmat(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    rows = algebra.coxeter.rows()
    model = schemas.CoxeterResponse(
        cartan=algebra.cartan.describe(), n=algebra.cartan.n, matrix=rows, finite_type=algebra.quiver.finite_type
    )
    return CommandResult(EXIT_OK, "\n".join(" ".join(row) for row in rows), model)


def cmd_rho(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    word = algebra.word(parse_word(args.word))
    pairs = rho(word)
    model = schemas.RhoResponse(word=list(word), pairs=[schemas.VertexModel.of(p) for p in pairs])
    return CommandResult(EXIT_OK, format_pairs(pairs), model)


def cmd_cmp(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    w1, w2 = algebra.word(parse_word(args.w1)), algebra.word(parse_word(args.w2))
    result = word_compare(w1, w2).name.lower()
    return CommandResult(EXIT_OK, result, schemas.CompareResponse(w1=list(w1), w2=list(w2), result=result))


def cmd_leftmost(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    word = algebra.word(parse_word(args.word))
    leftmost = algebra.leftmost(word, args.method)
    model = schemas.LeftmostResponse(
        word=list(word), leftmost=list(leftmost), method=args.method, is_leftmost=leftmost == word
    )
    code = _code(leftmost == word) if args.check else EXIT_OK
    return CommandResult(code, format_word(leftmost), model)


def cmd_reduced(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    word = algebra.word(parse_word(args.word))
    reduced = bool(is_reduced(word, algebra.cartan))
    length = element_length(element_of(word, algebra.cartan))
    model = schemas.ReducedResponse(word=list(word), reduced=reduced, length=length)
    return CommandResult(_code(reduced), "reduced" if reduced else f"not reduced (length {length})", model)


def cmd_embed(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    module, target = parse_module(args.m), parse_module(args.u)
    outcome = algebra.engine.decide_embedding(module, target)
    lines = format_trace(outcome.trace) if args.trace else []
    lines.append(outcome.summary())
    return CommandResult(_code(outcome.embeds), "\n".join(lines), schemas.EmbedResponse.of(outcome, args.trace))


def cmd_closed(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    word = None
    if args.word is not None:
        word = algebra.word(parse_word(args.word))
        subcat = subcat_of_word(word, algebra.quiver)
    else:
        subcat = _excluded(algebra, args.excluded)
    report = is_submodule_closed(subcat, algebra.engine)
    lines = []
    if subcat.dropped:
        lines.append(f"dropped zero pairs: {format_pairs(subcat.dropped)}")
    lines.append(report.summary())
    model = schemas.ClosedResponse(
        excluded=[schemas.VertexModel.of(v) for v in subcat.sorted_excluded()],
        word=list(word) if word is not None else None,
        dropped=[schemas.VertexModel.of(v) for v in subcat.dropped],
        closed=report.closed,
        witnesses={v.token(): schemas.SummandModel.listing(u) for v, u in report.witnesses.items()},
    )
    return CommandResult(_code(report.closed), "\n".join(lines), model)


def cmd_enumerate(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    max_len = args.max_len
    if args.verify:
        report = verify_bijection(algebra.engine, max_len)
        return CommandResult(_code(report.ok), report.summary(), report)
    if max_len is None:
        if not algebra.quiver.finite_type:
            raise ValueError("--max-len is required for infinite type")
        max_len = len(algebra.quiver.all_existing_vertices())
    entries = []
    lines = []
    for word in leftmost_words(algebra.cartan, max_len):
        subcat = subcat_of_word(word, algebra.quiver)
        entries.append(
            schemas.EnumerateEntry(word=list(word), excluded=[schemas.VertexModel.of(v) for v in subcat.sorted_excluded()])
        )
        lines.append(f"{format_word(word) or 'e'} -> {subcat.describe()}")
    model = schemas.EnumerateResponse(cartan=algebra.cartan.describe(), max_len=max_len, leftmost=entries)
    return CommandResult(EXIT_OK, "\n".join(lines), model)


def cmd_ar_dot(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    dot = to_dot(algebra.quiver, args.slices)
    return CommandResult(EXIT_OK, dot.rstrip("\n"), schemas.DotResponse(slices=args.slices, dot=dot))


def cmd_dims(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    quiver = algebra.quiver
    vertices = quiver.existing_vertices(args.slices - 1) if args.slices > 0 else []
    entries = [
        schemas.DimsEntry(
            vertex=schemas.VertexModel.of(v), dims=list(quiver.dim_vector(v)) if quiver.cartan.is_quiver else []
        )
        for v in vertices
    ]
    model = schemas.DimsResponse(cartan=algebra.cartan.describe(), vertices=entries)
    return CommandResult(EXIT_OK, dims_table(quiver, args.slices).rstrip("\n"), model)


def cmd_oracle_check(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    report = cross_check(algebra.engine, algebra.oracle)
    return CommandResult(_code(report.ok), report.summary(), report)


def cmd_prefix(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    word = algebra.word(parse_word(args.word))
    result = prefix_leftmost_check(word, algebra.cartan)
    model = schemas.PrefixResponse(word=list(word), prefixes_leftmost=result)
    return CommandResult(_code(result), "true" if result else "false", model)


def cmd_restrict(args: argparse.Namespace, algebra: HereditaryAlgebra) -> CommandResult:
    subcat = _excluded(algebra, args.excluded)
    subset = parse_indices(args.subset)
    restriction = restrict_to_subalgebra(subcat, subset, algebra.quiver)
    before = is_submodule_closed(subcat, algebra.engine).closed
    restricted = HereditaryAlgebra(restriction.cartan, algebra.settings)
    after = is_submodule_closed(restriction.subcat, restricted.engine).closed
    lines = [
        f"restricted to {restriction.cartan.describe()}: C excludes {restriction.subcat.describe()}",
        f"closed: {str(before).lower()} -> {str(after).lower()}",
    ]
    model = schemas.RestrictResponse(
        subset=sorted(set(subset)),
        cartan=restriction.cartan.describe(),
        excluded=[schemas.VertexModel.of(v) for v in restriction.subcat.sorted_excluded()],
        closed_before=before,
        closed_after=after,
    )
    return CommandResult(_code(before == after), "\n".join(lines), model)


HANDLERS: Dict[str, Handler] = {
    "coxmat": cmd_coxmat,
    "rho": cmd_rho,
    "cmp": cmd_cmp,
    "leftmost": cmd_leftmost,
    "reduced": cmd_reduced,
    "embed": cmd_embed,
    "closed": cmd_closed,
    "enumerate": cmd_enumerate,
    "ar-dot": cmd_ar_dot,
    "dims": cmd_dims,
    "oracle-check": cmd_oracle_check,
    "prefix": cmd_prefix,
    "restrict": cmd_restrict,
}


def build_parser(prog: str = "weylmod") -> argparse.ArgumentParser:
    """Return the argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="Quiver or Cartan file, or a preset name")
    common.add_argument("--json", action="store_true", help="Print structured output")

    parser = argparse.ArgumentParser(
        prog=prog, description="Leftmost Weyl group words and submodule-closed subcategories"
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--log-level", default=None, help="Log level for diagnostics on stderr")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    commands.add_parser("coxmat", parents=[common], help="Print the Coxeter matrix")
    for name, help_text in (
        ("rho", "Print the ρ-sequence of a word"),
        ("reduced", "Check whether a word is reduced"),
        ("prefix", "Check whether every prefix of a word is leftmost"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--word", required=True, help="Space-separated generator indices")

    sub = commands.add_parser("cmp", parents=[common], help="Compare two words in <_l")
    sub.add_argument("--w1", required=True)
    sub.add_argument("--w2", required=True)

    sub = commands.add_parser("leftmost", parents=[common], help="Print the leftmost word of the element")
    sub.add_argument("--word", required=True)
    sub.add_argument("--method", choices=LEFTMOST_METHODS, default="bfs")
    sub.add_argument("--check", action="store_true", help="Exit 1 unless the word is leftmost")

    sub = commands.add_parser("embed", parents=[common], help="Decide whether M embeds into U")
    sub.add_argument("--m", required=True, help="Summands of M, e.g. 1:3 or 0:4^2,1:1")
    sub.add_argument("--u", required=True, help="Summands of U")
    sub.add_argument("--trace", action="store_true", help="Print every rewriting step")

    sub = commands.add_parser("closed", parents=[common], help="Decide submodule closedness")
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--word", help="Subcategory of a word")
    source.add_argument("--excluded", help="Excluded vertices")

    sub = commands.add_parser("enumerate", parents=[common], help="List leftmost words or verify the bijection")
    sub.add_argument("--max-len", type=int, default=None)
    sub.add_argument("--verify", action="store_true")

    for name, help_text in (("ar-dot", "Export the AR quiver as DOT"), ("dims", "List dimension vectors")):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--slices", type=int, default=3)

    commands.add_parser("oracle-check", parents=[common], help="Cross-check the engine against linear algebra")

    sub = commands.add_parser("restrict", parents=[common], help="Restrict a subcategory to a vertex subset")
    sub.add_argument("--excluded", required=True)
    sub.add_argument("--subset", required=True, help="Comma-separated vertex indices J")
    return parser


def dispatch(
    argv: Sequence[str],
    settings: Optional[Settings] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    parser: Optional[argparse.ArgumentParser] = None,
) -> int:
    """Run one command and return its exit code."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = parser or build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exit_:
        return int(exit_.code or 0)
    settings = settings or Settings()
    try:
        algebra = HereditaryAlgebra(load_cartan(args.input), settings)
        result = HANDLERS[args.command](args, algebra)
    except ResourceLimitError as error:
        return _fail(args, out, err, error, EXIT_RESOURCE)
    except OracleDisagreementError as error:
        return _fail(args, out, err, error, EXIT_FALSE)
    except (WeylModError, ValueError) as error:
        return _fail(args, out, err, error, EXIT_INPUT)
    if args.json:
        print(result.model.model_dump_json(indent=2), file=out)
    else:
        print(result.text, file=out)
    logger.debug(f"{args.command} finished with exit code {result.code}")
    return result.code


def _fail(args: argparse.Namespace, out: TextIO, err: TextIO, error: Exception, code: int) -> int:
    print(f"weylmod: error: {error}", file=err)
    if args.json:
        print(schemas.ErrorResponse(error=str(error), kind=type(error).__name__).model_dump_json(indent=2), file=out)
    return code
