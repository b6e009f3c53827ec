"""The ASCII expression grammar for splice trees.

    knot := "unknot" | "T(" int "," int ")" | NAME
          | "sum(" knot { "," knot } ")"
          | "cable(" int "," int ";" knot ")"
          | "splice(" NAME ";" knot { "," knot } ")"
          | "mirror(" knot ")" | "rev(" knot ")"

NAME resolves against the catalogue: bare names are hyperbolic knot leaves,
names in splice(...) are hyperbolic links.  mirror and rev apply the formal
involutions, so every printable tree round-trips through parse.
"""

from __future__ import annotations

from .errors import ParseError, StructuralError
from .tree import (
    Cable,
    Catalogue,
    HypLeaf,
    HypSatellite,
    Keychain,
    TorusLeaf,
    UNKNOT,
    Unknot,
    default_catalogue,
    mirror_tree,
    reverse_tree,
    slot_flip,
    torus,
)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.col)

    def _advance(self, n: int):
        for ch in self.text[self.pos : self.pos + n]:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += n

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self._advance(1)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            got = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected {ch!r}, got {got!r}")
        self._advance(1)

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        if self.pos >= len(self.text) or not (
            self.text[self.pos].isalpha() or self.text[self.pos] == "_"
        ):
            raise self.error("expected a name")
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self._advance(1)
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self._advance(1)
        if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
            raise self.error("expected an integer")
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self._advance(1)
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_expr(text: str, cat: Catalogue | None = None):
    """Parse an expression to a splice tree; errors carry line and column."""
    cat = cat or default_catalogue()
    sc = _Scanner(text)
    tree = _parse_knot(sc, cat)
    if not sc.at_end():
        raise sc.error(f"unexpected trailing input {sc.text[sc.pos:]!r}")
    return tree


def _parse_knot(sc: _Scanner, cat: Catalogue):
    sc.skip_ws()
    line, col = sc.line, sc.col
    word = sc.name()
    if word == "unknot":
        return UNKNOT
    if word == "T":
        sc.expect("(")
        p = sc.integer()
        sc.expect(",")
        q = sc.integer()
        sc.expect(")")
        if abs(p) < 2 or abs(q) < 2:
            raise ParseError(f"torus knot needs |p|, |q| >= 2: T({p},{q})", line, col)
        try:
            return torus(p, q)
        except StructuralError as exc:
            raise ParseError(str(exc), line, col)
    if word == "sum":
        sc.expect("(")
        children = [_parse_knot(sc, cat)]
        while sc.peek() == ",":
            sc.expect(",")
            children.append(_parse_knot(sc, cat))
        sc.expect(")")
        return Keychain(tuple(children))
    if word == "cable":
        sc.expect("(")
        p = sc.integer()
        sc.expect(",")
        q = sc.integer()
        sc.expect(";")
        child = _parse_knot(sc, cat)
        sc.expect(")")
        try:
            return Cable(p, q, False, child)
        except StructuralError as exc:
            raise ParseError(str(exc), line, col)
    if word == "splice":
        sc.expect("(")
        name_line, name_col = sc.line, sc.col
        name = sc.name()
        if name not in cat.links:
            raise ParseError(f"unknown hyperbolic link {name!r}", name_line, name_col)
        entry = cat.links[name]
        sc.expect(";")
        children = [_parse_knot(sc, cat)]
        while sc.peek() == ",":
            sc.expect(",")
            children.append(_parse_knot(sc, cat))
        sc.expect(")")
        if len(children) != entry.arity:
            raise ParseError(
                f"{name} takes {entry.arity} companions, got {len(children)}", line, col
            )
        return HypSatellite(name, False, tuple((1, c) for c in children))
    if word == "mirror":
        sc.expect("(")
        child = _parse_knot(sc, cat)
        sc.expect(")")
        return mirror_tree(child)
    if word == "rev":
        sc.expect("(")
        child = _parse_knot(sc, cat)
        sc.expect(")")
        return reverse_tree(child)
    if word in cat.knots:
        return HypLeaf(word)
    raise ParseError(f"unknown generator {word!r}", line, col)


def print_expr(t) -> str:
    """Render a tree in the grammar; parse(print(t)) recovers the tree.

    Slot twists have no concrete syntax, so twisted slots are rendered via
    the equivalent flipped child.
    """
    if isinstance(t, Unknot):
        return "unknot"
    if isinstance(t, TorusLeaf):
        body = f"T({t.p},{t.q})"
        return body if t.chirality == 1 else f"mirror({body})"
    if isinstance(t, HypLeaf):
        body = t.name
        if t.mirror:
            body = f"mirror({body})"
        if t.reverse:
            body = f"rev({body})"
        return body
    if isinstance(t, Keychain):
        return "sum(" + ",".join(print_expr(c) for c in t.children) + ")"
    if isinstance(t, Cable):
        if t.mirror:
            inner = Cable(t.p, t.q, False, mirror_tree(t.child))
            return f"mirror({print_expr(inner)})"
        return f"cable({t.p},{t.q};{print_expr(t.child)})"
    if isinstance(t, HypSatellite):
        if t.mirror:
            inner = HypSatellite(
                t.name, False, tuple((s, mirror_tree(c)) for s, c in t.slots)
            )
            return f"mirror({print_expr(inner)})"
        parts = [print_expr(c) if s == 1 else print_expr(slot_flip(c)) for s, c in t.slots]
        return f"splice({t.name};" + ",".join(parts) + ")"
    raise ParseError(f"not a tree node: {t!r}", 0, 0)
