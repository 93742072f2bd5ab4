"""
Structure equations in Salamon notation, e.g. ``(e^{15},-e^{25},0,0)``.
"""

import re
from collections.abc import Mapping
from typing import Optional

from ..core.errors import ErrorCode
from ..core.exceptions import ParseException
from ..scalar import ONE, GaussianRational

StructureConstants = dict[tuple[int, int, int], GaussianRational]

_TERM = re.compile(
    r"(?P<sign>[+-])?\s*"
    r"(?:(?P<coef>\d+(?:/\d+)?|[A-Za-zα-ω]+)\s*\*?\s*)?"
    r"e\^(?:\{(?P<braced>[\d,\s]+)\}|(?P<bare>\d\d))"
)
_ZERO = re.compile(r"[+-]?\s*0(?![\d/])")


def _fail(text: str, column: int, reason: str) -> ParseException:
    return ParseException(
        ErrorCode.PRS003, text=text, column=column, context={"reason": reason}
    )


def _split_components(text: str, start: int, end: int) -> list[tuple[int, str]]:
    components = []
    depth = 0
    begin = start
    for pos in range(start, end):
        ch = text[pos]
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == "," and depth == 0:
            components.append((begin, text[begin:pos]))
            begin = pos + 1
    components.append((begin, text[begin:end]))
    return components


def _indices(group: str) -> list[int]:
    if "," in group:
        return [int(part) for part in group.split(",")]
    return [int(ch) for ch in group.replace(" ", "")]


def parse_salamon(
    text: str, bindings: Optional[Mapping[str, object]] = None
) -> StructureConstants:
    """Antisymmetrized constants ``c[(i, j, k)]`` with ``de^k = Σ_{i<j} c_{ij}^k e^i∧e^j``.

    Both ``(i, j, k)`` and ``(j, i, k)`` are stored, with opposite signs.
    Coefficient names such as ``alpha`` must be bound in ``bindings``.
    """
    bindings = {k: GaussianRational.coerce(v) for k, v in (bindings or {}).items()}
    source = text.rstrip()
    lead = len(source) - len(source.lstrip())
    if not source.strip().startswith("("):
        raise _fail(text, lead + 1, "expected '('")
    if not source.endswith(")"):
        raise _fail(text, len(source) + 1, "expected ')'")

    components = _split_components(source, lead + 1, len(source) - 1)
    dimension = len(components)
    constants: StructureConstants = {}

    for k, (offset, component) in enumerate(components, start=1):
        stripped = component.strip()
        if not stripped:
            raise _fail(text, offset + 1, f"empty entry for de^{k}")
        pos = len(component) - len(component.lstrip())
        if _ZERO.fullmatch(stripped):
            continue
        first = True
        while pos < len(component):
            if component[pos].isspace():
                pos += 1
                continue
            match = _TERM.match(component, pos)
            if match is None:
                raise _fail(text, offset + pos + 1, f"malformed term in de^{k}")
            if not first and match.group("sign") is None:
                raise _fail(text, offset + pos + 1, "terms must be joined by + or -")
            value = _coefficient(match.group("coef"), bindings, text, offset + pos)
            if match.group("sign") == "-":
                value = -value
            indices = _indices(match.group("braced") or match.group("bare"))
            if len(indices) != 2:
                raise _fail(text, offset + pos + 1, "e^{ij} needs exactly two indices")
            i, j = indices
            for index in (i, j):
                if not 1 <= index <= dimension:
                    raise ParseException(
                        ErrorCode.PRS005,
                        text=text,
                        column=offset + pos + 1,
                        context={"index": index, "bound": dimension},
                    )
            if i == j:
                raise _fail(text, offset + pos + 1, f"e^{i}∧e^{j} vanishes")
            if i > j:
                i, j, value = j, i, -value
            constants[(i, j, k)] = constants.get((i, j, k), GaussianRational()) + value
            first = False
            pos = match.end()

    result: StructureConstants = {}
    for (i, j, k), value in constants.items():
        if value:
            result[(i, j, k)] = value
            result[(j, i, k)] = -value
    return result


def _coefficient(token, bindings, text: str, column: int) -> GaussianRational:
    if token is None:
        return ONE
    if token[0].isdigit():
        return GaussianRational.coerce(token)
    name = {"α": "alpha"}.get(token, token)
    if name not in bindings:
        raise _fail(text, column + 1, f"unbound coefficient {token!r}")
    return bindings[name]


def dimension_of(constants: StructureConstants) -> int:
    return max((max(key) for key in constants), default=0)
