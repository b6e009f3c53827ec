"""Words in a free product of formal symbols and exact affine maps.

Letters are puck, knot or group symbols (free, cancelling only against their
own inverses) or exact affine cubes (which multiply by composition instead of
concatenating).  Words model composites of re-embedding maps symbolically:
conjugation is formal, and stacks of conjugated maps can be compared letter
for letter after reduction.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Sequence

from .cubes import AffineMap, format_affine, parse_affine
from .errors import StructuralError
from .overlap import OverlapElement

PUCK = "P"
KNOT = "K"
GROUP = "G"
CUBE = "C"

_SYMBOL_RE = re.compile(r"^([PKG])\.([A-Za-z_][A-Za-z0-9_']*)(\^-1)?$")


class Letter(NamedTuple):
    kind: str
    name: str | None
    exp: int
    cube: AffineMap | None

    def inverse(self) -> "Letter":
        if self.kind == CUBE:
            return Letter(CUBE, None, 1, self.cube.inverse())
        return Letter(self.kind, self.name, -self.exp, None)


def puck(name: str, exp: int = 1) -> Letter:
    return Letter(PUCK, name, exp, None)


def knot(name: str, exp: int = 1) -> Letter:
    return Letter(KNOT, name, exp, None)


def gsym(name: str, exp: int = 1) -> Letter:
    return Letter(GROUP, name, exp, None)


def cube_letter(m: AffineMap) -> Letter:
    return Letter(CUBE, None, 1, m)


def _reduce_letters(letters) -> tuple[Letter, ...]:
    out = []
    for lt in letters:
        if lt.kind == CUBE:
            cube = lt.cube if lt.exp == 1 else lt.cube.inverse()
            if out and out[-1].kind == CUBE:
                cube = out[-1].cube.compose(cube)
                out.pop()
            if not cube.is_identity():
                out.append(Letter(CUBE, None, 1, cube))
            continue
        if out:
            top = out[-1]
            if top.kind == lt.kind and top.name == lt.name and top.exp == -lt.exp:
                out.pop()
                continue
        out.append(lt)
    return tuple(out)


class GroupWord:
    """A word of letters, read left to right as a composite (leftmost outermost)."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = tuple(letters)

    @classmethod
    def of(cls, *letters: Letter) -> "GroupWord":
        return cls(letters)

    @classmethod
    def empty(cls) -> "GroupWord":
        return cls(())

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(_reduce_letters(self.letters + other.letters))

    def inverse(self) -> "GroupWord":
        return GroupWord(lt.inverse() for lt in reversed(self.letters))

    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"GroupWord({format_word(self)!r})"


def reduce_word(w: GroupWord) -> GroupWord:
    """Normal form: no adjacent inverse symbol pairs, adjacent cubes merged."""
    return GroupWord(_reduce_letters(w.letters))


def conjugate(a: GroupWord, w: GroupWord) -> GroupWord:
    """reduce(a * w * a^-1)."""
    return GroupWord(_reduce_letters(a.letters + w.letters + a.inverse().letters))


def overlap_act(elem: OverlapElement, words: Sequence[GroupWord]) -> GroupWord:
    """Act by an overlapping-cubes element on a tuple of words.

    Each word is conjugated by the exact affine map of its cube and the
    conjugates are stacked from the top cube down, the bottom cube acting
    first; the height order is read off the element's canonical witness.
    """
    if len(words) != elem.arity:
        raise StructuralError(f"expected {elem.arity} words, got {len(words)}")
    sigma = elem.witness
    letters = []
    for pos in range(elem.arity, 0, -1):
        i = sigma(pos)
        affine = elem.cubes[i - 1].as_affine()
        cl = cube_letter(affine)
        letters.append(cl)
        letters.extend(words[i - 1].letters)
        letters.append(cl.inverse())
    return GroupWord(_reduce_letters(letters))


class FreeWordGroup:
    """Group protocol adapter so wreath elements can carry word entries."""

    identity = GroupWord.empty()

    @staticmethod
    def mul(a: GroupWord, b: GroupWord) -> GroupWord:
        return a * b

    @staticmethod
    def inv(a: GroupWord) -> GroupWord:
        return a.inverse()

    # nominal order for permutation models; free words have none
    order = 0


FREE_WORDS = FreeWordGroup()


# ---------------------------------------------------------------------------
# text form


def format_letter(lt: Letter) -> str:
    if lt.kind == CUBE:
        return "[" + format_affine(lt.cube) + "]"
    suffix = "^-1" if lt.exp == -1 else ""
    return f"{lt.kind}.{lt.name}{suffix}"


def format_word(w: GroupWord) -> str:
    if not w.letters:
        return "e"
    return " ".join(format_letter(lt) for lt in w.letters)


def parse_word(text: str) -> GroupWord:
    text = text.strip()
    if text in ("", "e"):
        return GroupWord.empty()
    letters = []
    for tok in text.split():
        if tok.startswith("["):
            if not tok.endswith("]"):
                raise StructuralError(f"unterminated cube letter: {tok!r}")
            letters.append(cube_letter(parse_affine(tok[1:-1])))
            continue
        m = _SYMBOL_RE.match(tok)
        if m is None:
            raise StructuralError(f"bad letter: {tok!r}")
        letters.append(Letter(m.group(1), m.group(2), -1 if m.group(3) else 1, None))
    return GroupWord(letters)
