"""
Constructor Language.

Names spaces directly on the command line:

    circle:3                        sphere:2            interval:4
    join:discrete:2,discrete:3      op:join:discrete:2,discrete:3
    product:circle:2,circle:2       suspension:interval:2
    wedge:circle:2@y0,circle:3@y1   product:(wedge:circle:2,circle:2),circle:2

Numeric constructors take one integer, ``op`` and ``suspension`` one space,
``join`` and ``product`` two, ``wedge`` one or more, each optionally followed
by ``@<basepoint>`` (default: the first maximal point). Parentheses group an
argument; a wedge that is not the last argument must be parenthesised.
``explicit`` stands for a space given point by point; it appears in stored
kinds and parses, but cannot be built.
"""

import logging
import re
from pathlib import Path
from typing import List, Optional, Tuple

from finite_spaces.constructors import (
    circle_model,
    discrete,
    interval_model,
    nh_join,
    nh_suspension,
    opposite,
    product,
    sphere_model,
    wedge,
)
from finite_spaces.errors import ExpressionError
from finite_spaces.space import EXPLICIT, FiniteSpace, KindName, SpaceKind, maximal_points
from shared.cli_config import CONSTRUCTOR_ALIASES, CONSTRUCTOR_ARITY, NUMERIC_CONSTRUCTORS

logger = logging.getLogger(__name__)

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_INTEGER = re.compile(r"-?[0-9]+")
_LABEL = re.compile(r"[A-Za-z0-9_.:+-]+")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.position = 0

    def error(self, message: str) -> ExpressionError:
        return ExpressionError(message, self.position + 1)

    def peek(self) -> Optional[str]:
        return self.text[self.position] if self.position < len(self.text) else None

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {char!r}, found {found}")
        self.position += 1

    def match(self, pattern: re.Pattern, what: str) -> str:
        found = pattern.match(self.text, self.position)
        if not found:
            raise self.error(f"expected {what}")
        self.position = found.end()
        return found.group()

    def expression(self) -> SpaceKind:
        if self.peek() == "(":
            self.position += 1
            inner = self.expression()
            self.expect(")")
            return inner
        start = self.position
        name = self.match(_NAME, "a constructor name")
        if name == KindName.EXPLICIT.value:
            return EXPLICIT
        if name in CONSTRUCTOR_ALIASES:
            return parse_expression(CONSTRUCTOR_ALIASES[name])
        if name in NUMERIC_CONSTRUCTORS:
            self.expect(":")
            value = int(self.match(_INTEGER, f"an integer argument for {name}"))
            minimum = NUMERIC_CONSTRUCTORS[name]
            if value < minimum:
                raise ExpressionError(f"{name} needs an argument of at least {minimum}, got {value}", start + 1)
            return SpaceKind(KindName(name), (value,))
        if name not in CONSTRUCTOR_ARITY:
            raise ExpressionError(f"unknown constructor {name!r}", start + 1)
        self.expect(":")
        if name == KindName.WEDGE.value:
            return self.wedge_arguments()
        args = [self.expression()]
        for _ in range(CONSTRUCTOR_ARITY[name] - 1):
            self.expect(",")
            args.append(self.expression())
        return SpaceKind(KindName(name), tuple(args))

    def wedge_arguments(self) -> SpaceKind:
        args: List[SpaceKind] = []
        basepoints: List[Optional[str]] = []
        while True:
            args.append(self.expression())
            if self.peek() == "@":
                self.position += 1
                basepoints.append(self.match(_LABEL, "a basepoint label"))
            else:
                basepoints.append(None)
            if self.peek() != ",":
                break
            self.position += 1
        return SpaceKind(KindName.WEDGE, tuple(args), tuple(basepoints))


def parse_expression(text: str) -> SpaceKind:
    """Parse a constructor expression into its syntax tree."""
    parser = _Parser(text.strip())
    if not parser.text:
        raise ExpressionError("empty constructor expression", 1)
    kind = parser.expression()
    if parser.peek() is not None:
        raise parser.error(f"unexpected {parser.peek()!r} after a complete expression")
    return kind


def _wedge(kind: SpaceKind) -> FiniteSpace:
    spaces = [build(arg) for arg in kind.args]
    chosen: List[str] = []
    for space, basepoint in zip(spaces, kind.basepoints):
        chosen.append(basepoint if basepoint is not None else maximal_points(space).labels()[0])
    return wedge(spaces, chosen)


def build(kind: SpaceKind) -> FiniteSpace:
    """Construct the space an expression names."""
    name = kind.name
    if name is KindName.DISCRETE:
        return discrete(kind.args[0])
    if name is KindName.INTERVAL:
        return interval_model(kind.args[0])
    if name is KindName.CIRCLE:
        return circle_model(kind.args[0])
    if name is KindName.SPHERE:
        return sphere_model(kind.args[0])
    if name is KindName.OPPOSITE:
        return opposite(build(kind.args[0]))
    if name is KindName.SUSPENSION:
        return nh_suspension(build(kind.args[0]))
    if name is KindName.JOIN:
        return nh_join(build(kind.args[0]), build(kind.args[1]))
    if name is KindName.PRODUCT:
        return product(build(kind.args[0]), build(kind.args[1]))
    if name is KindName.WEDGE:
        return _wedge(kind)
    raise ExpressionError(f"{name.value} spaces cannot be built from an expression")


def space_from_expression(text: str) -> FiniteSpace:
    space = build(parse_expression(text))
    logger.debug(f"built {space.kind} with {len(space)} points")
    return space


def slug(text: str) -> str:
    """File-name friendly form of an expression, used for default report names."""
    return re.sub(r"[^A-Za-z0-9]+", "-", text).strip("-") or "space"


def split_source(text: str) -> Tuple[str, str]:
    """('file', path) for JSON paths and existing files, else ('expression', text)."""
    if text.endswith(".json") or Path(text).is_file():
        return "file", text
    return "expression", text
