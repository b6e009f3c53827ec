"""Exact algebra of permutations, block permutations, signed permutations and wreath products.

Everything is 1-indexed.  A block permutation is the map induced on
{1..j_1+...+j_k} by an outer permutation of k blocks of sizes j_1..j_k
together with an inner permutation inside each block; it is the glue in
every operad structure map of this package.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import StructuralError

_CYCLE_RE = re.compile(r"\(\s*((?:-?\d+\s*)*)\)\s*([+-]?)")


class Perm:
    """A permutation of {1..n} stored as its image tuple (p(1),...,p(n))."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise StructuralError(f"not a bijection of 1..{len(images)}: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Perm":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def sorting(cls, keys: Sequence) -> "Perm":
        """The permutation p with key[p(1)] <= key[p(2)] <= ..., ties kept in input order."""
        order = sorted(range(len(keys)), key=lambda i: keys[i])
        return cls(i + 1 for i in order)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition self(other(i))."""
        if self.degree != other.degree:
            raise StructuralError("degree mismatch in composition")
        return Perm(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Perm(inv)

    def gather(self, seq: Sequence) -> tuple:
        """Right action on tuples: result[i] = seq[p(i+1)-1]."""
        if len(seq) != self.degree:
            raise StructuralError("length mismatch in permutation action")
        return tuple(seq[i - 1] for i in self.images)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def to_cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        cycles = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                cyc.append(j)
                seen[j - 1] = True
                j = self(j)
            cycles.append(tuple(cyc))
        return cycles

    def cycle_string(self) -> str:
        if self.degree == 0:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.to_cycles())

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images!r}"


def parse_perm(text: str, degree: int | None = None) -> Perm:
    """Parse cycle notation such as "(1 3 2)(4)"."""
    entries: dict[int, int] = {}
    seen_max = 0
    rest = text.strip()
    if rest == "()":
        rest = ""
    pos = 0
    while pos < len(rest):
        m = _CYCLE_RE.match(rest, pos)
        if m is None or m.group(2):
            raise StructuralError(f"bad cycle notation: {text!r}")
        elems = [int(tok) for tok in m.group(1).split()]
        if any(e <= 0 for e in elems):
            raise StructuralError(f"cycle entries must be positive: {text!r}")
        for a, b in zip(elems, elems[1:] + elems[:1]):
            if a in entries:
                raise StructuralError(f"repeated entry {a} in {text!r}")
            entries[a] = b
        seen_max = max([seen_max] + elems)
        pos = m.end()
        while pos < len(rest) and rest[pos].isspace():
            pos += 1
    n = degree if degree is not None else seen_max
    images = [entries.get(i, i) for i in range(1, n + 1)]
    return Perm(images)


def block_perm(outer: Perm, arities: Sequence[int], inners: Sequence[Perm]) -> Perm:
    """The permutation of {1..j_1+...+j_k} induced by permuting k blocks of sizes
    j_1..j_k by ``outer`` and block a internally by ``inners[a-1]``.

    Pairs (a,b) with 1 <= a <= k, 1 <= b <= j_a are matched with
    {1..sum(j)} lexicographically; the result beta satisfies

        beta^{-1}(sum_{i<a} j_i + b) = sum_{i < outer^{-1}(a)} j_{outer(i)} + inners[a]^{-1}(b)

    i.e. beta sends height ranks back to lexicographic positions.
    """
    k = outer.degree
    if len(arities) != k or len(inners) != k:
        raise StructuralError("block_perm: outer degree, arities and inners must agree")
    if any(j < 0 for j in arities):
        raise StructuralError("block_perm: arities must be non-negative")
    for j, inner in zip(arities, inners):
        if inner.degree != j:
            raise StructuralError("block_perm: inner permutation degree mismatch")
    total = sum(arities)
    # lexicographic offset of block a and offset of the height slot occupied by block a
    lex_off = [0] * (k + 1)
    for a in range(k):
        lex_off[a + 1] = lex_off[a] + arities[a]
    height_off = [0] * (k + 1)
    for h in range(k):
        height_off[h + 1] = height_off[h] + arities[outer(h + 1) - 1]
    outer_inv = outer.inverse()
    beta_inv = [0] * total
    for a in range(1, k + 1):
        base_lex = lex_off[a - 1]
        base_h = height_off[outer_inv(a) - 1]
        inner_inv = inners[a - 1].inverse()
        for b in range(1, arities[a - 1] + 1):
            beta_inv[base_lex + b - 1] = base_h + inner_inv(b)
    return Perm(beta_inv).inverse()


@dataclass(frozen=True)
class SignedCycleType:
    """Multiset of (length, sign) pairs; the conjugacy invariant of a signed permutation."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "SignedCycleType":
        pairs = tuple(sorted(((int(l), int(s)) for l, s in pairs), key=lambda p: (-p[0], -p[1])))
        for l, s in pairs:
            if l < 1 or s not in (1, -1):
                raise StructuralError(f"bad cycle type entry {(l, s)}")
        return cls(pairs)

    @property
    def total(self) -> int:
        return sum(l for l, _ in self.pairs)

    def __str__(self):
        return " ".join(f"({l}){'+' if s == 1 else '-'}" for l, s in self.pairs)

    @classmethod
    def parse(cls, text: str) -> "SignedCycleType":
        pairs = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _CYCLE_RE.match(text, pos)
            if m is None:
                raise StructuralError(f"bad signed cycle type: {text!r}")
            elems = m.group(1).split()
            if len(elems) != 1:
                raise StructuralError(f"cycle types list lengths, one integer per cycle: {text!r}")
            sign = -1 if m.group(2) == "-" else 1
            pairs.append((int(elems[0]), sign))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        return cls.of(pairs)


class SignedPerm:
    """A signed permutation of {1..n}: a bijection w of {-n..-1,1..n} with w(-i) = -w(i).

    Stored as the signed image tuple (w(1),...,w(n)).  A signed k-cycle that
    reverses the sign an odd number of times around the cycle has order 2k.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(abs(x) for x in images) != list(range(1, len(images) + 1)) or 0 in images:
            raise StructuralError(f"not a signed permutation: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(range(1, n + 1))

    @classmethod
    def from_pair(cls, perm: Perm, target_signs: Sequence[int]) -> "SignedPerm":
        """Build w(i) = s[p(i)] * p(i) from a permutation and target-indexed signs."""
        if len(target_signs) != perm.degree:
            raise StructuralError("sign vector length mismatch")
        return cls(target_signs[perm(i) - 1] * perm(i) for i in range(1, perm.degree + 1))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def perm(self) -> Perm:
        return Perm(abs(x) for x in self.images)

    def to_pair(self) -> tuple[Perm, tuple[int, ...]]:
        signs = [0] * self.degree
        for x in self.images:
            signs[abs(x) - 1] = 1 if x > 0 else -1
        return self.perm, tuple(signs)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        if self.degree != other.degree:
            raise StructuralError("degree mismatch in composition")
        return SignedPerm(self(j) for j in other.images)

    def inverse(self) -> "SignedPerm":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[abs(img) - 1] = i if img > 0 else -i
        return SignedPerm(inv)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def signed_cycle_type(self) -> SignedCycleType:
        """(length, product of signs) over the cycles of the underlying permutation."""
        seen = [False] * self.degree
        pairs = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            length, sign = 0, 1
            j = start
            while not seen[j - 1]:
                seen[j - 1] = True
                img = self.images[j - 1]
                sign *= 1 if img > 0 else -1
                length += 1
                j = abs(img)
            pairs.append((length, sign))
        return SignedCycleType.of(pairs)

    def order(self) -> int:
        n = 1
        for length, sign in self.signed_cycle_type().pairs:
            n = math.lcm(n, length if sign == 1 else 2 * length)
        return n

    def cycle_string(self) -> str:
        """Cycles with signed entries: (a b c)s means a -> b -> c -> s*a.

        Each cycle starts at its least positive element, so the text is a
        faithful encoding, e.g. "(1 2 3)- (4)+".
        """
        if self.degree == 0:
            return "()"
        parts = []
        seen = [False] * self.degree
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            cur = self(start)
            while abs(cur) != start:
                cyc.append(cur)
                seen[abs(cur) - 1] = True
                cur = self(cur)
            sign = "+" if cur > 0 else "-"
            parts.append("(" + " ".join(map(str, cyc)) + ")" + sign)
        return " ".join(parts)

    def __eq__(self, other):
        return isinstance(other, SignedPerm) and self.images == other.images

    def __hash__(self):
        return hash(("signed", self.images))

    def __repr__(self):
        return f"SignedPerm{self.images!r}"


def parse_signed_perm(text: str, degree: int | None = None) -> SignedPerm:
    """Parse signed cycle notation such as "(1 2 3)- (4)+" or "(1 -3 -2)+".

    Entries are signed images; the suffix gives the sign on the closing step
    back to the first entry.
    """
    entries: dict[int, int] = {}

    def record(src, img):
        if src < 0:
            src, img = -src, -img
        if src in entries:
            raise StructuralError(f"repeated entry {src} in {text!r}")
        entries[src] = img

    seen_max = 0
    pos = 0
    text = text.strip()
    if text == "()":
        text = ""
    while pos < len(text):
        m = _CYCLE_RE.match(text, pos)
        if m is None:
            raise StructuralError(f"bad signed cycle notation: {text!r}")
        elems = [int(tok) for tok in m.group(1).split()]
        if not elems or elems[0] <= 0 or any(e == 0 for e in elems):
            raise StructuralError(f"bad signed cycle notation: {text!r}")
        sign = -1 if m.group(2) == "-" else 1
        for a, b in zip(elems, elems[1:]):
            record(a, b)
        record(elems[-1], sign * elems[0])
        seen_max = max([seen_max] + [abs(e) for e in elems])
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    n = degree if degree is not None else seen_max
    images = [entries.get(i, i) for i in range(1, n + 1)]
    return SignedPerm(images)


class FiniteGroup:
    """A finite group presented by its multiplication table; element 0 is the identity."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = ""):
        n = len(table)
        self.table = tuple(tuple(row) for row in table)
        self.name = name or f"table group of order {n}"
        if any(len(row) != n for row in self.table):
            raise StructuralError("multiplication table must be square")
        if any(self.table[0][a] != a or self.table[a][0] != a for a in range(n)):
            raise StructuralError("element 0 must be the identity")
        self._inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == 0:
                    self._inv[a] = b
        if any(v is None for v in self._inv):
            raise StructuralError("not every element has an inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise StructuralError("multiplication table is not associative")

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], name=f"Z{n}")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        return self.name


Z2 = FiniteGroup.cyclic(2)


@dataclass(frozen=True)
class WreathElement:
    """An element (outer; perm; inner_1..inner_k) of the wreath product with a
    distinguished 0-slot: permutations of {0..k} fixing 0, with a group element
    attached to every slot.

    ``group`` only needs ``mul``/``inv``/``identity``; finite table groups and
    the free-word group both qualify.
    """

    outer: object
    perm: Perm
    inner: tuple
    group: object

    def __post_init__(self):
        if len(self.inner) != self.perm.degree:
            raise StructuralError("wreath element: inner length must match permutation degree")

    @classmethod
    def identity(cls, k: int, group) -> "WreathElement":
        e = group.identity
        return cls(e, Perm.identity(k), (e,) * k, group)

    @property
    def degree(self) -> int:
        return self.perm.degree

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        """Product arranged so slotwise right actions compose: (x.g).h = x.(g*h)."""
        if self.group is not other.group or self.degree != other.degree:
            raise StructuralError("wreath product factors do not match")
        g = self.group
        inner = tuple(
            g.mul(self.inner[other.perm(m) - 1], other.inner[m - 1])
            for m in range(1, self.degree + 1)
        )
        return WreathElement(g.mul(self.outer, other.outer), self.perm * other.perm, inner, g)

    def inverse(self) -> "WreathElement":
        g = self.group
        perm_inv = self.perm.inverse()
        inner = tuple(g.inv(self.inner[perm_inv(m) - 1]) for m in range(1, self.degree + 1))
        return WreathElement(g.inv(self.outer), perm_inv, inner, g)

    def permutation_model(self) -> Perm:
        """Faithful permutation picture on (k+1)*|group| points: pairs (slot, v)
        with slot 0 carrying the outer element.  Slot b, element v sits at
        point b*|G| + v + 1; the element sends (b, v) to (perm(b), v * g_b^-1).
        """
        g = self.group
        n = g.order
        k = self.degree
        slot_elem = (self.outer,) + self.inner
        images = [0] * ((k + 1) * n)
        for b in range(k + 1):
            tb = self.perm(b) if b > 0 else 0
            gb_inv = g.inv(slot_elem[b])
            for v in range(n):
                images[b * n + v] = tb * n + g.mul(v, gb_inv) + 1
        return Perm(images)

    def __repr__(self):
        return f"WreathElement(outer={self.outer!r}, perm={self.perm.images!r}, inner={self.inner!r})"


def mulclose(generators: Iterable, cap: int = 10000) -> set:
    """Close a set of group elements under multiplication."""
    els = set(generators)
    frontier = list(els)
    while frontier:
        new = []
        for a in list(els):
            for b in frontier:
                c = a * b
                if c not in els:
                    els.add(c)
                    new.append(c)
                if len(els) > cap:
                    raise StructuralError("group closure exceeded cap")
        frontier = new
    return els
