"""Command line front end.

Subcommands read .smx files and either report on them (check, classify, eq)
or produce a new .smx file (add, sub, mul, scale, transpose, flatten, gram).
Results go to stdout unless -o names a file; output files are written via a
temp file and os.replace so a failure never leaves a partial file.

Exit codes: 0 success, 1 unreadable or unparsable input (and usage errors),
2 incompatible operands, 3 check found an improper union.
"""

import argparse
import json
import os
import sys
import tempfile

from . import textio
from .classify import union_class
from .errors import ArityMismatch, DimensionMismatch, ParseError, PartitionMismatch
from .union import (
    improper_pair,
    union_add,
    union_flatten,
    union_gram,
    union_mul,
    union_scale,
    union_strict_eq,
    union_sub,
    union_transpose,
    union_value_eq,
)

OK = 0
FAILED_READ = 1
INCOMPATIBLE = 2
IMPROPER = 3


class _Failure(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
        self.message = message


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _Failure(FAILED_READ, f"usage error: {message}")


def _load(path):
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise _Failure(FAILED_READ, f"{path}: {e.strerror or e}") from None
    try:
        return textio.parse(text)
    except ParseError as e:
        raise _Failure(FAILED_READ, f"{path}: {e}") from None


def _emit(text, path, out):
    if path is None:
        out.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    tmp = None
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".smx-")
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp, path)
    except OSError as e:
        if tmp is not None:
            try:
                os.unlink(tmp)
            except OSError:
                pass
        raise _Failure(FAILED_READ, f"{path}: {e.strerror or e}") from None


def _bool_word(flag):
    return "true" if flag else "false"


def _report_text(report):
    return (
        f"arity: {report.arity}\n"
        f"component_shapes: {', '.join(report.component_shapes)}\n"
        f"union_shape: {report.union_shape}\n"
        f"symmetry: {report.symmetry}\n"
        f"semi_super: {_bool_word(report.semi_super)}\n"
        f"proper: {_bool_word(report.proper)}\n"
    )


def _print_report(u, as_json, out):
    report = union_class(u)
    if as_json:
        out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        out.write(_report_text(report))


def _cmd_check(ns, out, err):
    u = _load(ns.file)
    _print_report(u, ns.json, out)
    pair = improper_pair(u)
    if pair is not None:
        err.write(f"improper union: identical components {pair[0]} and {pair[1]}\n")
        return IMPROPER
    return OK


def _cmd_classify(ns, out, err):
    _print_report(_load(ns.file), ns.json, out)
    return OK


def _cmd_binary(op):
    def handler(ns, out, err):
        result = op(_load(ns.left), _load(ns.right))
        _emit(textio.format(result), ns.output, out)
        return OK

    return handler


def _cmd_unary(op):
    def handler(ns, out, err):
        result = op(_load(ns.file))
        _emit(textio.format(result), ns.output, out)
        return OK

    return handler


def _cmd_scale(ns, out, err):
    try:
        k = textio.parse_scalar(ns.scalar)
    except ValueError as e:
        raise _Failure(FAILED_READ, str(e)) from None
    result = union_scale(k, _load(ns.file))
    _emit(textio.format(result), ns.output, out)
    return OK


def _cmd_gram(ns, out, err):
    result = union_gram(_load(ns.file), ns.side)
    _emit(textio.format(result), ns.output, out)
    return OK


def _cmd_eq(ns, out, err):
    same = (union_strict_eq if ns.mode == "strict" else union_value_eq)(
        _load(ns.left), _load(ns.right)
    )
    out.write(_bool_word(same) + "\n")
    return OK


def _add_output_option(p):
    p.add_argument("-o", "--output", metavar="OUT", help="write result to OUT instead of stdout")


def _build_parser():
    parser = _ArgumentParser(prog="smx", description="exact block-partitioned matrix tool")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("check", help="report on a file and flag improper unions")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("classify", help="report shapes and symmetry")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    for name, op in (("add", union_add), ("sub", union_sub), ("mul", union_mul)):
        p = sub.add_parser(name, help=f"{name} two files componentwise")
        p.add_argument("left")
        p.add_argument("right")
        _add_output_option(p)
        p.set_defaults(func=_cmd_binary(op))

    p = sub.add_parser("scale", help="multiply every entry by a rational")
    p.add_argument("scalar")
    p.add_argument("file")
    _add_output_option(p)
    p.set_defaults(func=_cmd_scale)

    for name, op in (("transpose", union_transpose), ("flatten", union_flatten)):
        p = sub.add_parser(name, help=f"{name} each component")
        p.add_argument("file")
        _add_output_option(p)
        p.set_defaults(func=_cmd_unary(op))

    p = sub.add_parser("gram", help="multiply each component with its transpose")
    p.add_argument("file")
    p.add_argument("--side", choices=("left", "right"), required=True)
    _add_output_option(p)
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("eq", help="compare two files")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--mode", choices=("strict", "value"), required=True)
    p.set_defaults(func=_cmd_eq)

    return parser


def run(argv=None, stdout=None, stderr=None):
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    if argv is None:
        argv = sys.argv[1:]
    try:
        ns = _build_parser().parse_args(argv)
        return ns.func(ns, out, err)
    except _Failure as f:
        err.write(f.message + "\n")
        return f.code
    except (DimensionMismatch, PartitionMismatch, ArityMismatch) as e:
        err.write(str(e) + "\n")
        return INCOMPATIBLE
    except SystemExit as e:
        return int(e.code or 0)


def main():
    sys.exit(run())
