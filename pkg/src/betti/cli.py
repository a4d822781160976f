"""Command-line front end.

Diagram files are UTF-8 text: '#' starts a comment, the first payload line
is 'codim <p>', and every further line is '<i> <j> <value>' with the value
a non-zero rational in lowest terms. Output is byte-stable; rationals
print as 'n' when integral and 'n/d' otherwise.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import gcd

from .construct import (
    GorensteinData,
    codim2_pure_construction,
    gorenstein3_decompose,
    gorenstein3_diagram,
    hilbert_function,
    koszul_diagram,
)
from .decompose import check_bounds, greedy_decompose
from .diagram import BettiDiagram, ShiftBounds
from .errors import BettiError, NotInConeError, ParseError
from .order_complex import classify_boundary, facets
from .pure import (
    enumerate_poset,
    format_degrees,
    parse_degrees,
    pure_diagram,
    space_dimension,
)
from .reductions import phi

USAGE_EXIT = 64


# ----------------------------------------------------------------------
# diagram text format


def _parse_rational(token: str, lineno: int) -> Fraction:
    num_text, slash, den_text = token.partition("/")
    try:
        num = int(num_text)
        den = int(den_text) if slash else 1
    except ValueError:
        raise ParseError(lineno, f"malformed rational {token!r}") from None
    if slash and den <= 0:
        raise ParseError(lineno, f"denominator must be positive in {token!r}")
    if slash and gcd(num, den) != 1:
        raise ParseError(lineno, f"rational {token!r} is not in lowest terms")
    if num == 0:
        raise ParseError(lineno, "entries must be non-zero")
    return Fraction(num, den)


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"malformed {what} {token!r}") from None


def parse_diagram_text(text: str) -> BettiDiagram:
    codim = None
    entries: dict[tuple[int, int], Fraction] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if codim is None:
            if len(parts) != 2 or parts[0] != "codim":
                raise ParseError(lineno, "expected header 'codim <p>'")
            codim = _parse_int(parts[1], lineno, "codimension")
            if codim < 0:
                raise ParseError(lineno, "codimension must be non-negative")
            continue
        if len(parts) != 3:
            raise ParseError(lineno, "expected '<i> <j> <value>'")
        i = _parse_int(parts[0], lineno, "homological degree")
        j = _parse_int(parts[1], lineno, "internal degree")
        value = _parse_rational(parts[2], lineno)
        if not 0 <= i <= codim:
            raise ParseError(lineno, f"homological degree {i} outside 0..{codim}")
        if (i, j) in entries:
            raise ParseError(lineno, f"duplicate entry at ({i}, {j})")
        entries[i, j] = value
    if codim is None:
        raise ParseError(last_line + 1, "missing 'codim <p>' header")
    return BettiDiagram(codim, entries)


def parse_diagram_file(path: str) -> BettiDiagram:
    with open(path, encoding="utf-8") as handle:
        return parse_diagram_text(handle.read())


def render_diagram(diagram: BettiDiagram, display: str = "absolute") -> str:
    if display == "paper-rows":
        return _render_rows(diagram)
    lines = [f"codim {diagram.codim}"]
    for (i, j), value in diagram.items():
        lines.append(f"{i} {j} {value}")
    return "\n".join(lines)


def _render_rows(diagram: BettiDiagram) -> str:
    # Entry beta_{i,j} goes to column i, row j - i; '-' marks a zero cell.
    lines = [f"codim {diagram.codim}"]
    if diagram:
        offsets = [j - i for (i, j) in diagram.support()]
        cols = diagram.codim + 1
        grid = []
        for row in range(min(offsets), max(offsets) + 1):
            cells = [diagram[i, row + i] for i in range(cols)]
            grid.append([str(v) if v else "-" for v in cells])
        widths = [max(len(row[c]) for row in grid) for c in range(cols)]
        for row in grid:
            lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines)


def format_decomposition(decomposition) -> str:
    return "\n".join(
        f"{c} * pi({format_degrees(d)})" for c, d in decomposition
    )


# ----------------------------------------------------------------------
# verbs


def _cmd_validate(args) -> int:
    diagram = parse_diagram_file(args.file)
    violations = diagram.violations()
    if not violations:
        print("VALID")
        return 0
    print("INVALID")
    for m, residual in violations:
        print(f"equation m={m} violated: sum = {residual}")
    return 1


def _cmd_normalize(args) -> int:
    diagram = parse_diagram_file(args.file)
    print(render_diagram(diagram.normalize(), args.display))
    return 0


def _cmd_decompose(args) -> int:
    diagram = parse_diagram_file(args.file)
    try:
        decomposition = greedy_decompose(diagram)
    except NotInConeError as jam:
        print("NOT-IN-CONE")
        print(render_diagram(jam.remainder, args.display))
        return 2
    print(format_decomposition(decomposition))
    return 0


def _cmd_check(args) -> int:
    diagram = parse_diagram_file(args.file)
    report = check_bounds(diagram)
    print(f"lower  = {report.lower}")
    print(f"scaled = {report.scaled_multiplicity}  (p! * e / beta_0)")
    print(f"upper  = {report.upper}")
    print(f"verdict: {report.verdict.value}")
    print(f"pure: {'yes' if report.is_pure else 'no'}")
    if report.extended:
        print("note: extended (column 0 spans several degrees)")
    return 0


def _cmd_pure(args) -> int:
    print(render_diagram(pure_diagram(parse_degrees(args.degrees)), args.display))
    return 0


def _cmd_poset(args) -> int:
    bounds = ShiftBounds(parse_degrees(args.low), parse_degrees(args.high))
    view = enumerate_poset(bounds)
    print(f"elements ({len(view.elements)}):")
    for element in view.elements:
        print(format_degrees(element))
    print(f"dimension: {space_dimension(bounds)}")
    all_facets = facets(bounds)
    print(f"facets ({len(all_facets)}):")
    for face in all_facets:
        print(" < ".join(format_degrees(d) for d in face.chain))
    print("boundary classification:")
    for number, face in enumerate(all_facets):
        for index in range(len(face.chain)):
            verdict = classify_boundary(face, index, bounds)
            line = f"facet {number} remove {format_degrees(face.chain[index])}: "
            if verdict.on_boundary:
                line += f"boundary {verdict.case.value}"
            else:
                line += "interior"
            if verdict.halfspace is not None:
                line += f" halfspace ({verdict.halfspace[0]},{verdict.halfspace[1]})"
            print(line)
    return 0


def _cmd_ci(args) -> int:
    degrees = [int(part) for part in args.degrees.split(",")]
    print(render_diagram(koszul_diagram(degrees), args.display))
    return 0


def _cmd_gor3(args) -> int:
    data = GorensteinData(args.socle, tuple(int(x) for x in args.degrees.split(",")))
    print(render_diagram(gorenstein3_diagram(data), args.display))
    print("decomposition:")
    print(format_decomposition(gorenstein3_decompose(data)))
    return 0


def _cmd_hilbert(args) -> int:
    degrees = parse_degrees(args.degrees)
    spec = codim2_pure_construction(degrees)

    def monomials(gens):
        return ", ".join(f"x^{u} y^{v}" for u, v in gens)

    print(f"I = {monomials(spec.gens_i)}")
    print(f"J = {monomials(spec.gens_j)}")
    print(f"twist = {spec.twist}")
    print(f"claimed: {spec.claimed_scale} * pi({format_degrees(spec.claimed_type)})")
    target = spec.claimed_scale * pure_diagram(spec.claimed_type).h_vector()
    low = min(target.support())
    high = max(target.support()) + 2
    counts = hilbert_function(spec, low, high)
    expected = [target[t] for t in range(low, high + 1)]
    print("degree  count  expected")
    for offset, (count, want) in enumerate(zip(counts, expected)):
        print(f"{low + offset:<7} {count:<6} {want}")
    if all(count == want for count, want in zip(counts, expected)):
        print("PASS")
        return 0
    print("FAIL")
    return 1


def _cmd_reduce(args) -> int:
    diagram = parse_diagram_file(args.file)
    print(render_diagram(phi(diagram, args.column), args.display))
    return 0


# ----------------------------------------------------------------------
# argument plumbing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="betti",
        description="Exact tools for graded Betti diagrams.",
    )
    parser.add_argument(
        "--display",
        choices=("absolute", "paper-rows"),
        default="absolute",
        help="diagram rendering: absolute (i j value lines) or paper-rows grid",
    )
    commands = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, handler, help_text):
        sub = commands.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = verb("validate", _cmd_validate, "check the power-sum equations of a diagram file")
    sub.add_argument("file")
    sub = verb("normalize", _cmd_normalize, "divide a diagram by beta_0")
    sub.add_argument("file")
    sub = verb("decompose", _cmd_decompose, "greedy expansion into pure diagrams")
    sub.add_argument("file")
    sub = verb("check", _cmd_check, "multiplicity against the shift products")
    sub.add_argument("file")
    sub = verb("reduce", _cmd_reduce, "collapse a concentrated column")
    sub.add_argument("file")
    sub.add_argument("column", type=int)
    sub = verb("pure", _cmd_pure, "print the pure diagram of a type, e.g. 0,2,5")
    sub.add_argument("degrees")
    sub = verb("poset", _cmd_poset, "elements, facets and boundary table of a poset")
    sub.add_argument("low")
    sub.add_argument("high")
    sub = verb("ci", _cmd_ci, "Koszul diagram of a complete intersection, e.g. 2,3")
    sub.add_argument("degrees")
    sub = verb("gor3", _cmd_gor3, "codim-3 self-dual diagram plus its decomposition")
    sub.add_argument("degrees", help="generator degrees, e.g. 2,2,2")
    sub.add_argument("socle", type=int, help="socle degree f")
    sub = verb("hilbert", _cmd_hilbert, "certify a codim-2 pure type via monomial counts")
    sub.add_argument("degrees")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (BettiError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
