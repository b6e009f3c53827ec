"""Symbolic splicing elements and their operad structure maps.

A splicing element is a base word (the long slot), one word per puck, and a
height order on the pucks: a constraint set recording which pairs of pucks
have a forced relative order, plus a witness permutation for the heights of
everything else.  Pucks are formal, so the constraint set is declared data;
composites inherit constraints blockwise.

Two elements are equal when base, pucks and constraints agree: the witness is
representative data, transported through every structure map by the induced
block permutation so that composites of composites stay aligned.  The word
engine then verifies associativity and equivariance letter for letter, which
mechanizes the usual cancellation argument.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import StructuralError
from .overlap import least_linearization
from .perm import Perm, WreathElement, block_perm
from .words import (
    FREE_WORDS,
    GroupWord,
    conjugate,
    cube_letter,
    format_word,
    parse_word,
    reduce_word,
)


class SpliceElement:
    """(base, puck_1..puck_k, order constraints, height witness)."""

    __slots__ = ("base", "pucks", "constraints", "witness")

    def __init__(self, base, pucks, constraints, witness):
        self.base = base
        self.pucks = pucks
        self.constraints = constraints
        self.witness = witness

    @property
    def arity(self) -> int:
        return len(self.pucks)

    def __eq__(self, other):
        return (
            isinstance(other, SpliceElement)
            and self.base == other.base
            and self.pucks == other.pucks
            and self.constraints == other.constraints
        )

    def __hash__(self):
        return hash((self.base, self.pucks, self.constraints))

    def __repr__(self):
        return (
            f"SpliceElement(base={format_word(self.base)!r}, "
            f"pucks={[format_word(p) for p in self.pucks]!r}, "
            f"constraints={sorted(self.constraints)!r}, "
            f"witness={self.witness.images!r})"
        )


def splice_element(
    base: GroupWord,
    pucks: Sequence[GroupWord],
    constraints=(),
    witness: Perm | None = None,
) -> SpliceElement:
    """Build an element; words are stored reduced and the witness defaults to
    the least linearization."""
    base = reduce_word(base)
    pucks = tuple(reduce_word(p) for p in pucks)
    k = len(pucks)
    cset = set()
    for low, high in constraints:
        if not (1 <= low <= k and 1 <= high <= k) or low == high:
            raise StructuralError(f"constraint {(low, high)} out of range for arity {k}")
        if (high, low) in cset:
            raise StructuralError(f"contradictory constraints on pair {(low, high)}")
        cset.add((low, high))
    if witness is None:
        witness = least_linearization(k, cset)
    else:
        if witness.degree != k:
            raise StructuralError("witness degree must match arity")
        height = witness.inverse()
        for low, high in cset:
            if height(low) >= height(high):
                raise StructuralError(f"witness violates constraint {(low, high)}")
    return SpliceElement(base, pucks, frozenset(cset), witness)


def identity_element() -> SpliceElement:
    return splice_element(GroupWord.empty(), [GroupWord.empty()])


def splice_act(elem: SpliceElement, words: Sequence[GroupWord]) -> GroupWord:
    """Conjugate word i into puck i and stack top-down onto the base word."""
    if len(words) != elem.arity:
        raise StructuralError(f"expected {elem.arity} words, got {len(words)}")
    sigma = elem.witness
    out = GroupWord.empty()
    for pos in range(elem.arity, 0, -1):
        i = sigma(pos)
        out = out * conjugate(elem.pucks[i - 1], words[i - 1])
    return out * elem.base


def _chain(outer: SpliceElement, bases, lo: int, corrupt_top: bool = False) -> GroupWord:
    """Product over heights i = k down to lo+1 of puck_{w(i)} * base_{w(i)} * puck_{w(i)}^-1."""
    w = outer.witness
    out = GroupWord.empty()
    for pos in range(outer.arity, lo, -1):
        i = w(pos)
        if corrupt_top and pos == outer.arity:
            out = out * bases[i - 1]  # test hook: one conjugator dropped
        else:
            out = out * conjugate(outer.pucks[i - 1], bases[i - 1])
    return out


def splice_compose(
    outer: SpliceElement, args: Sequence[SpliceElement], corrupt: bool = False
) -> SpliceElement:
    """Operad structure map.

    The new base is the full conjugated stack over the old base; the puck at
    pair (a, b) is the partial stack strictly above the height of slot a,
    then the outer puck a, then the inner puck (a, b).  Constraints are
    inherited blockwise; the witness is the induced block permutation.
    ``corrupt`` drops one conjugator from the base stack (a deliberate fault
    for negative controls).
    """
    k = outer.arity
    if len(args) != k:
        raise StructuralError(f"expected {k} arguments, got {len(args)}")
    arities = [a.arity for a in args]
    bases = [a.base for a in args]
    base = _chain(outer, bases, 0, corrupt_top=corrupt) * outer.base

    w_inv = outer.witness.inverse()
    pucks = []
    for a in range(1, k + 1):
        prefix = _chain(outer, bases, w_inv(a))
        stem = prefix * outer.pucks[a - 1]
        for b in range(1, arities[a - 1] + 1):
            pucks.append(stem * args[a - 1].pucks[b - 1])

    offsets = [0]
    for j in arities:
        offsets.append(offsets[-1] + j)
    constraints = set()
    for low, high in outer.constraints:
        for x in range(offsets[low - 1] + 1, offsets[low] + 1):
            for y in range(offsets[high - 1] + 1, offsets[high] + 1):
                constraints.add((x, y))
    for a in range(1, k + 1):
        for low, high in args[a - 1].constraints:
            constraints.add((offsets[a - 1] + low, offsets[a - 1] + high))
    witness = block_perm(outer.witness, arities, [a.witness for a in args])
    return splice_element(base, pucks, constraints, witness)


def act_perm(elem: SpliceElement, tau: Perm) -> SpliceElement:
    """Right symmetric-group action: pucks reindexed, order transported."""
    if tau.degree != elem.arity:
        raise StructuralError("permutation degree must match arity")
    tau_inv = tau.inverse()
    pucks = tau.gather(elem.pucks)
    constraints = {(tau_inv(i), tau_inv(k)) for i, k in elem.constraints}
    return splice_element(elem.base, pucks, constraints, tau_inv * elem.witness)


def outer_act(g: GroupWord, elem: SpliceElement) -> SpliceElement:
    """Preferred-factor action: conjugate the base by g, left-translate the pucks."""
    g_inv = g.inverse()
    return SpliceElement(
        g * elem.base * g_inv,
        tuple(g * p for p in elem.pucks),
        elem.constraints,
        elem.witness,
    )


def act_wreath(elem: SpliceElement, g: WreathElement) -> SpliceElement:
    """Right action of the wreath product with word entries.

    Sends (L_0, L_1..L_k, order) to (g0^-1 L_0 g0, g0^-1 L_{perm(1)} g_1, ...)
    with the height order transported along the permutation.
    """
    if g.degree != elem.arity:
        raise StructuralError("wreath element degree must match arity")
    if g.group is not FREE_WORDS:
        raise StructuralError("splice elements act under word-valued wreath elements")
    g0 = g.outer
    g0_inv = g0.inverse()
    tau = g.perm
    tau_inv = tau.inverse()
    base = g0_inv * elem.base * g0
    pucks = tuple(
        g0_inv * elem.pucks[tau(a) - 1] * g.inner[a - 1] for a in range(1, g.degree + 1)
    )
    constraints = {(tau_inv(i), tau_inv(k)) for i, k in elem.constraints}
    return splice_element(base, pucks, constraints, tau_inv * elem.witness)


def slotwise_action(elems: Sequence[SpliceElement], gs: Sequence[WreathElement]):
    """Act on each factor by its own starless wreath element (trivial outer entries)."""
    if any(not g.outer.is_empty() for g in gs):
        raise StructuralError("slotwise actions carry no outer factor")
    return [act_wreath(e, g) for e, g in zip(elems, gs)]


def block_diag_wreath(gs: Sequence[WreathElement]) -> WreathElement:
    """Assemble slotwise wreath elements into one on the sum of the slots."""
    arities = [g.degree for g in gs]
    perm = block_perm(Perm.identity(len(gs)), arities, [g.perm for g in gs])
    inner = tuple(x for g in gs for x in g.inner)
    return WreathElement(GroupWord.empty(), perm, inner, FREE_WORDS)


@dataclass(frozen=True)
class AssocReport:
    ok: bool
    detail: str = ""


def compare_elements(lhs: SpliceElement, rhs: SpliceElement) -> AssocReport:
    """Letter-for-letter comparison of every entry plus the order data."""
    if lhs.arity != rhs.arity:
        return AssocReport(False, f"arities differ: {lhs.arity} vs {rhs.arity}")
    if lhs.base != rhs.base:
        return AssocReport(
            False, f"base words differ: {format_word(lhs.base)} vs {format_word(rhs.base)}"
        )
    for i, (p, q) in enumerate(zip(lhs.pucks, rhs.pucks), start=1):
        if p != q:
            return AssocReport(False, f"puck {i} differs: {format_word(p)} vs {format_word(q)}")
    if lhs.constraints != rhs.constraints:
        return AssocReport(
            False,
            f"constraints differ: {sorted(lhs.constraints)} vs {sorted(rhs.constraints)}",
        )
    if lhs.witness != rhs.witness:
        return AssocReport(
            False, f"witnesses differ: {lhs.witness.images} vs {rhs.witness.images}"
        )
    return AssocReport(True)


def verify_associativity(
    outer: SpliceElement,
    mids: Sequence[SpliceElement],
    inners: Sequence[SpliceElement],
    corrupt: bool = False,
) -> AssocReport:
    """Compare both composition orders entry by entry as reduced words.

    ``inners`` is the flat tuple of innermost elements, grouped by the
    arities of ``mids``.  With ``corrupt`` set, one side is computed with a
    conjugator dropped, which must produce a located mismatch.
    """
    if len(mids) != outer.arity:
        raise StructuralError("middle layer arity mismatch")
    if len(inners) != sum(m.arity for m in mids):
        raise StructuralError("inner layer arity mismatch")
    lhs = splice_compose(splice_compose(outer, mids, corrupt=corrupt), inners)
    groups = []
    pos = 0
    for m in mids:
        groups.append(list(inners[pos : pos + m.arity]))
        pos += m.arity
    rhs = splice_compose(outer, [splice_compose(m, g) for m, g in zip(mids, groups)])
    return compare_elements(lhs, rhs)


def include_overlap(elem) -> SpliceElement:
    """View an overlapping-cubes element as a splicing element.

    Each cube becomes a one-letter puck word (its exact affine map), the base
    is trivial, and the order data transfers verbatim.  The splice action of
    the image agrees with the cube action on words; composites agree entry
    for entry, although the symbolic composite may declare order constraints
    on pairs whose geometric images no longer intersect.
    """
    pucks = [GroupWord.of(cube_letter(c.as_affine())) for c in elem.cubes]
    return splice_element(GroupWord.empty(), pucks, elem.constraints, elem.witness)


# ---------------------------------------------------------------------------
# JSON form


def splice_to_json(elem: SpliceElement) -> str:
    data = {
        "base": format_word(elem.base),
        "pucks": [format_word(p) for p in elem.pucks],
        "constraints": sorted(list(p) for p in elem.constraints),
        "witness": list(elem.witness.images),
    }
    return json.dumps(data, sort_keys=True)


def splice_from_json(text: str) -> SpliceElement:
    data = json.loads(text)
    return splice_element(
        parse_word(data["base"]),
        [parse_word(p) for p in data["pucks"]],
        [tuple(p) for p in data["constraints"]],
        Perm(data["witness"]) if "witness" in data else None,
    )
