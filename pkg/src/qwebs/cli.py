"""Command line surface: web scripts, hom-space queries, verification.

The script format is line oriented.  The first statement fixes the
bottom boundary, every later statement composes one more piece on top,
and ``#`` starts a comment:

    object 2,1,3
    merge@1        # (2,1,3) -> (3,3)
    split@1(2,1)

Statements are ``merge@i``, ``split@i(k,l)``, ``dot@j``, ``cross@i``,
``clasp@i``, and ``sergeev <word>``; the last three expand to
combinations of plain webs.  Scalars serialize as "p/q" or "p/q+s/t i",
matrices as [row, col, scalar] triplets against the canonical tabloid
bases.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .core import GaussianRational
from .evaluate import MorphismMatrix, eval_web
from .homspace import enumerate_Tstar, hom_basis, hom_dim_oracle
from .relcheck import verify_all
from .schurq import (
    report_failures,
    verify_schur_relations,
    verify_supercommutation,
)
from .sergeev import parse_word_text, word_multiply, word_to_text
from .web import (
    WebExpr,
    as_combination,
    compose,
    expand_clasp,
    expand_crossing,
    merge_all_layers,
    sergeev_diagram,
    split_all_layers,
    tabloid_word,
    WebLayer,
)


class WebScriptError(Exception):
    """Script problem with a 1-based line and column position."""

    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        super().__init__("line %d, column %d: %s" % (line, column, message))


# ---------------------------------------------------------------------------
# scalar and matrix serialization


def scalar_to_text(z):
    if not z.im:
        return str(z.re)
    sign = "+" if z.im > 0 else "-"
    return "%s%s%s i" % (z.re, sign, abs(z.im))


def scalar_from_text(text):
    body = text.strip()
    if not body.endswith("i"):
        return GaussianRational(Fraction(body))
    body = body[:-1].strip()
    cut = max(body.rfind("+", 1), body.rfind("-", 1))
    if cut < 0:
        raise ValueError("malformed scalar %r" % text)
    re_part = Fraction(body[:cut])
    im_part = Fraction(body[cut:].replace("+", ""))
    return GaussianRational(re_part, im_part)


def matrix_to_json(m):
    entries = []
    for col, rows in m.cols.items():
        for row, coeff in rows.items():
            entries.append([row, col, scalar_to_text(coeff)])
    entries.sort(key=lambda e: (e[0], e[1]))
    return {
        "domain": list(m.domain),
        "codomain": list(m.codomain),
        "parity": m.parity,
        "entries": entries,
    }


def matrix_from_json(data):
    cols = {}
    for row, col, text in data["entries"]:
        cols.setdefault(col, {})[row] = scalar_from_text(text)
    return MorphismMatrix(
        tuple(data["domain"]), tuple(data["codomain"]),
        data["parity"], cols)


# ---------------------------------------------------------------------------
# web scripts

_STATEMENTS = (
    ("merge", re.compile(r"merge@(\d+)$")),
    ("split", re.compile(r"split@(\d+)\((\d+),(\d+)\)$")),
    ("dot", re.compile(r"dot@(\d+)$")),
    ("cross", re.compile(r"cross@(\d+)$")),
    ("clasp", re.compile(r"clasp@(\d+)$")),
    ("sergeev", re.compile(r"sergeev\s+(.+)$")),
)


def _parse_object_line(body, lineno, column):
    items = [p.strip() for p in body.split(",")]
    if not all(p.isdigit() for p in items):
        raise WebScriptError(
            lineno, column, "object line needs comma-separated labels")
    obj = tuple(int(p) for p in items)
    if any(x <= 0 for x in obj):
        raise WebScriptError(lineno, column, "strand labels must be positive")
    return obj


def _strand_label(obj, i, lineno, column, layer_text):
    if not 1 <= i <= len(obj):
        raise WebScriptError(
            lineno, column,
            "%s does not fit boundary %r" % (layer_text, obj))
    return obj[i - 1]


def parse_webscript(text):
    """Parse a script into the web combination it denotes."""
    comb = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        code = raw.split("#", 1)[0]
        stripped = code.strip()
        if not stripped:
            continue
        column = code.index(stripped[0]) + 1
        if comb is None:
            if not stripped.startswith("object"):
                raise WebScriptError(
                    lineno, column, "script must begin with an object line")
            obj = _parse_object_line(stripped[len("object"):].strip(),
                                     lineno, column)
            comb = as_combination(WebExpr(obj))
            continue
        comb = _apply_statement(comb, stripped, lineno, column)
    if comb is None:
        raise WebScriptError(1, 1, "empty script")
    return comb


def _apply_statement(comb, stripped, lineno, column):
    obj = comb.codomain
    for kind, pattern in _STATEMENTS:
        m = pattern.match(stripped)
        if not m:
            continue
        if kind in ("merge", "split", "dot"):
            if kind == "merge":
                layer = WebLayer.merge(int(m.group(1)))
            elif kind == "split":
                layer = WebLayer.split(int(m.group(1)), int(m.group(2)),
                                       int(m.group(3)))
            else:
                layer = WebLayer.dot(int(m.group(1)))
            try:
                layer.apply_to(obj)
            except ValueError as exc:
                raise WebScriptError(
                    lineno, column,
                    "%s does not fit boundary %r (%s)"
                    % (layer.text(), obj, exc)) from None
            return compose(WebExpr(obj, (layer,)), comb)
        if kind == "cross":
            i = int(m.group(1))
            k = _strand_label(obj, i, lineno, column, stripped)
            l = _strand_label(obj, i + 1, lineno, column, stripped)
            return compose(expand_crossing(i, k, l, obj), comb)
        if kind == "clasp":
            i = int(m.group(1))
            k = _strand_label(obj, i, lineno, column, stripped)
            return compose(expand_clasp(i, k, obj), comb)
        r = len(obj)
        if obj != (1,) * r:
            raise WebScriptError(
                lineno, column,
                "sergeev statement needs a boundary of 1-strands, got %r"
                % (obj,))
        try:
            sign, word = parse_word_text(m.group(1), r)
        except ValueError as exc:
            raise WebScriptError(lineno, column, str(exc)) from None
        return compose(sergeev_diagram(word, r), comb).scale(sign)
    raise WebScriptError(lineno, column, "unrecognized statement %r" % stripped)


def render_script(expr):
    """Canonical script text of a plain web; parses back to the same web."""
    return expr.text()


def render_combination(comb):
    """Deterministic multi-line rendering of a web combination."""
    if comb.is_zero():
        return "zero web"
    lines = [
        "web %s -> %s" % (_comp_text(comb.domain), _comp_text(comb.codomain)),
        "terms %d" % len(comb.terms),
    ]
    for expr, coeff in comb.items():
        layers = " ; ".join(layer.text() for layer in expr.layers)
        lines.append("  (%s) %s" % (scalar_to_text(coeff),
                                    layers if layers else "identity"))
    return "\n".join(lines)


def theta_script(lam, mu, word):
    """Script for a routing web: explode lam, permute and dot, gather mu."""
    lines = ["object %s" % _comp_text(lam)]
    lines += [layer.text() for layer in split_all_layers(lam)]
    lines.append("sergeev %s" % word_to_text(word))
    lines += [layer.text() for layer in merge_all_layers(mu)]
    return "\n".join(lines)


def _comp_text(comp):
    return ",".join(str(x) for x in comp)


def _parse_composition(text):
    items = [p.strip() for p in text.split(",")]
    if not all(p.isdigit() for p in items):
        raise ValueError("composition %r needs comma-separated integers"
                         % text)
    return tuple(int(p) for p in items)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_dim(args):
    lam = _parse_composition(args.lam)
    mu = _parse_composition(args.mu)
    count = len(enumerate_Tstar(lam, mu))
    if args.oracle:
        even, odd = hom_dim_oracle(lam, mu)
        print("basis %d" % count)
        print("oracle (%d, %d)" % (even, odd))
    else:
        print(count)
    return 0


def _cmd_basis(args):
    lam = _parse_composition(args.lam)
    mu = _parse_composition(args.mu)
    basis = hom_basis(lam, mu)
    items = []
    for tabloid, web, matrix in basis.items:
        word = tabloid_word(tabloid, basis.lam, basis.mu)
        items.append({
            "tabloid": [list(row) for row in tabloid.rows],
            "word": word_to_text(word),
            "script": theta_script(basis.lam, basis.mu, word),
            "parity": matrix.parity,
            "matrix": matrix_to_json(matrix),
        })
    payload = {
        "lambda": list(basis.lam),
        "mu": list(basis.mu),
        "count": basis.dimension,
        "items": items,
    }
    with open(args.json, "w") as fh:
        json.dump(payload, fh, indent=1)
    print("%d items written to %s" % (basis.dimension, args.json))
    return 0


def _read_script(path):
    with open(path) as fh:
        return parse_webscript(fh.read())


def _cmd_eval(args):
    matrix = eval_web(_read_script(args.file))
    payload = matrix_to_json(matrix)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=1)
        print("web %s -> %s, parity %s, %d entries, written to %s"
              % (_comp_text(matrix.domain), _comp_text(matrix.codomain),
                 matrix.parity, len(payload["entries"]), args.json))
    else:
        json.dump(payload, sys.stdout, indent=1)
        print()
    return 0


def _cmd_render(args):
    print(render_combination(_read_script(args.file)))
    return 0


def _cmd_verify_webs(args):
    report = verify_all(args.r)
    print(report.format())
    return 0 if report.ok else 1


def _cmd_verify_schur(args):
    report = verify_schur_relations(args.n, args.r)
    report += verify_supercommutation(args.n, args.r)
    failures = report_failures(report)
    print("%d checks, %d failures" % (len(report), len(failures)))
    for label in failures:
        print("FAIL %s" % label)
    return 0 if not failures else 1


def _min_degree(text):
    degree = 1
    for tok in text.split():
        if tok == "1":
            continue
        kind, num = tok[0], tok[1:]
        if kind not in ("c", "s") or not num.isdigit():
            raise ValueError("bad token %r" % tok)
        degree = max(degree, int(num) + (1 if kind == "s" else 0))
    return degree


def _cmd_sergeev_mul(args):
    r = args.r if args.r else max(_min_degree(args.left),
                                  _min_degree(args.right))
    sign_l, left = parse_word_text(args.left, r)
    sign_r, right = parse_word_text(args.right, r)
    sign, product = word_multiply(left, right)
    total = sign * sign_l * sign_r
    print("%s %s" % ("+" if total > 0 else "-", word_to_text(product)))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qwebs",
        description="exact diagram calculus for permutation supermodules")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="basis size of a hom space")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--oracle", action="store_true",
                   help="also print the equivariant null-space dimensions")
    p.set_defaults(handler=_cmd_dim)

    p = sub.add_parser("basis", help="emit the full hom basis as JSON")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--json", required=True)
    p.set_defaults(handler=_cmd_basis)

    p = sub.add_parser("eval", help="evaluate a web script to a matrix")
    p.add_argument("file")
    p.add_argument("--json")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("render", help="textual rendering of a web script")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("verify-webs", help="run the local identity sweep")
    p.add_argument("--r", type=int, default=4)
    p.set_defaults(handler=_cmd_verify_webs)

    p = sub.add_parser("verify-schur", help="run the presentation checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(handler=_cmd_verify_schur)

    p = sub.add_parser("sergeev-mul", help="standard-basis product")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--r", type=int)
    p.set_defaults(handler=_cmd_sergeev_mul)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except WebScriptError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
