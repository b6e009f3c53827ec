"""Seeded random instance generators and operad axiom suites.

Every suite is deterministic in its seed and reports pass counts plus the
first counterexample, so a run can be reproduced byte for byte.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .cubes import CubesElement, LittleCube, LittleInterval, cube_compose, permute_cubes
from .overlap import OverlapElement, overlap_canonical, overlap_compose, permute_overlap
from .perm import Perm, WreathElement, block_perm
from .splice import (
    SpliceElement,
    act_perm,
    act_wreath,
    block_diag_wreath,
    compare_elements,
    identity_element,
    outer_act,
    splice_compose,
    splice_element,
    verify_associativity,
)
from .words import FREE_WORDS, GroupWord, gsym, knot, puck

# ---------------------------------------------------------------------------
# random element generators


def rand_perm(rng: random.Random, n: int) -> Perm:
    return Perm(rng.sample(range(1, n + 1), n))


def rand_little_interval(rng: random.Random) -> LittleInterval:
    scale = Fraction(rng.randint(1, 2), rng.choice((2, 3, 4)))
    if scale > 1:
        scale = Fraction(1)
    room = 1 - scale
    offset = room * Fraction(rng.randint(-3, 3), 3)
    return LittleInterval(scale, offset)


def rand_cube(rng: random.Random, dim: int) -> LittleCube:
    return LittleCube(rand_little_interval(rng) for _ in range(dim))


def rand_disjoint_element(rng: random.Random, dim: int, arity: int) -> CubesElement:
    """Stack the cubes in disjoint slabs along one axis, then shuffle."""
    if arity == 0:
        return CubesElement(dim, ())
    axis = rng.randrange(dim)
    half = Fraction(1, arity)
    cubes = []
    for slab in range(arity):
        center = Fraction(2 * slab + 1, arity) - 1
        scale = half * Fraction(1, rng.randint(1, 2))
        wiggle = (half - scale) * Fraction(rng.randint(-2, 2), 2)
        factors = [rand_little_interval(rng) for _ in range(dim)]
        factors[axis] = LittleInterval(scale, center + wiggle)
        cubes.append(LittleCube(factors))
    rng.shuffle(cubes)
    return CubesElement(dim, cubes)


def rand_overlap_element(rng: random.Random, dim: int, arity: int) -> OverlapElement:
    cubes = [rand_cube(rng, dim) for _ in range(arity)]
    return overlap_canonical(cubes, rand_perm(rng, arity), dim=dim)


def anchored_interval(rng: random.Random) -> LittleInterval:
    """Right endpoint pinned at 1, so any two such intervals overlap."""
    scale = Fraction(1, rng.choice((2, 3, 4)))
    return LittleInterval(scale, 1 - scale)


def anchored_overlap_element(rng: random.Random, dim: int, arity: int) -> OverlapElement:
    cubes = [LittleCube(anchored_interval(rng) for _ in range(dim)) for _ in range(arity)]
    return overlap_canonical(cubes, rand_perm(rng, arity), dim=dim)


_WORD_POOL = ("f1", "f2", "f3", "g1", "g2")


def rand_word(rng: random.Random, max_len: int = 2, min_len: int = 0) -> GroupWord:
    n = rng.randint(min_len, max_len)
    letters = []
    for _ in range(n):
        name = rng.choice(_WORD_POOL)
        mk = knot if name.startswith("f") else gsym
        letters.append(mk(name, rng.choice((1, -1))))
    return GroupWord(letters)


def rand_constraints(rng: random.Random, arity: int, sigma: Perm) -> set:
    """A random subset of pairs, oriented consistently with sigma."""
    height = sigma.inverse()
    out = set()
    for i in range(1, arity + 1):
        for k in range(i + 1, arity + 1):
            if rng.random() < 0.5:
                out.add((i, k) if height(i) < height(k) else ((k, i)))
    return out


def rand_splice_element(rng: random.Random, arity: int, tag: str, nonempty_base=False) -> SpliceElement:
    sigma = rand_perm(rng, arity)
    pucks = [GroupWord.of(puck(f"{tag}s{i}")) for i in range(1, arity + 1)]
    base = rand_word(rng, min_len=1 if nonempty_base else 0)
    return splice_element(base, pucks, rand_constraints(rng, arity, sigma), sigma)


def rand_word_wreath(rng: random.Random, arity: int, with_outer=True) -> WreathElement:
    outer = rand_word(rng) if with_outer else GroupWord.empty()
    inner = tuple(rand_word(rng) for _ in range(arity))
    return WreathElement(outer, rand_perm(rng, arity), inner, FREE_WORDS)


# ---------------------------------------------------------------------------
# single-trial axiom checks; each returns None or a failure description


def check_cubes_instance(rng: random.Random, corrupt: bool = False) -> str | None:
    dim = rng.randint(1, 3)
    k = rng.randint(1, 3)
    outer = rand_disjoint_element(rng, dim, k)
    mids = [rand_disjoint_element(rng, dim, rng.randint(0, 3)) for _ in range(k)]
    inners = [rand_disjoint_element(rng, dim, rng.randint(0, 2)) for m in mids for _ in range(m.arity)]

    step = cube_compose(outer, mids)
    if corrupt and step.arity >= 2:
        step = permute_cubes(step, Perm.transposition(1, 2, step.arity))
    lhs = cube_compose(step, inners)
    pos, stages = 0, []
    for m in mids:
        stages.append(cube_compose(m, inners[pos : pos + m.arity]))
        pos += m.arity
    rhs = cube_compose(outer, stages)
    if lhs != rhs:
        return f"associativity failed on {outer!r} . {mids!r} . {inners!r}"

    sigma = rand_perm(rng, k)
    arities = [m.arity for m in mids]
    left = cube_compose(permute_cubes(outer, sigma), sigma.gather(mids))
    right = permute_cubes(
        cube_compose(outer, mids),
        block_perm(sigma, arities, [Perm.identity(j) for j in arities]),
    )
    if left != right:
        return f"symmetry failed on {outer!r} with sigma={sigma.images}"

    thetas = [rand_perm(rng, j) for j in arities]
    left = cube_compose(outer, [permute_cubes(m, th) for m, th in zip(mids, thetas)])
    right = permute_cubes(
        cube_compose(outer, mids), block_perm(Perm.identity(k), arities, thetas)
    )
    if left != right:
        return f"slotwise symmetry failed on {outer!r}"

    if cube_compose(outer, [CubesElement.identity(dim)] * k) != outer:
        return f"right identity failed on {outer!r}"
    if cube_compose(CubesElement.identity(dim), [outer]) != outer:
        return f"left identity failed on {outer!r}"
    return None


def check_overlap_instance(rng: random.Random, corrupt: bool = False) -> str | None:
    dim = rng.randint(1, 2)
    k = rng.randint(1, 3)
    outer = rand_overlap_element(rng, dim, k)
    mids = [rand_overlap_element(rng, dim, rng.randint(0, 3)) for _ in range(k)]
    inners = [rand_overlap_element(rng, dim, rng.randint(0, 2)) for m in mids for _ in range(m.arity)]

    step = overlap_compose(outer, mids)
    if corrupt and step.arity >= 2:
        step = permute_overlap(step, Perm.transposition(1, 2, step.arity))
    lhs = overlap_compose(step, inners)
    pos, stages = 0, []
    for m in mids:
        stages.append(overlap_compose(m, inners[pos : pos + m.arity]))
        pos += m.arity
    rhs = overlap_compose(outer, stages)
    if lhs != rhs:
        return f"associativity failed on {outer!r} . {mids!r} . {inners!r}"

    sigma = rand_perm(rng, k)
    arities = [m.arity for m in mids]
    left = overlap_compose(permute_overlap(outer, sigma), sigma.gather(mids))
    right = permute_overlap(
        overlap_compose(outer, mids),
        block_perm(sigma, arities, [Perm.identity(j) for j in arities]),
    )
    if left != right:
        return f"symmetry failed on {outer!r} with sigma={sigma.images}"

    thetas = [rand_perm(rng, j) for j in arities]
    left = overlap_compose(outer, [permute_overlap(m, th) for m, th in zip(mids, thetas)])
    right = permute_overlap(
        overlap_compose(outer, mids), block_perm(Perm.identity(k), arities, thetas)
    )
    if left != right:
        return f"slotwise symmetry failed on {outer!r}"

    if overlap_compose(outer, [OverlapElement.identity(dim)] * k) != outer:
        return f"right identity failed on {outer!r}"
    if overlap_compose(OverlapElement.identity(dim), [outer]) != outer:
        return f"left identity failed on {outer!r}"
    return None


def check_splice_instance(rng: random.Random, corrupt: bool = False) -> str | None:
    k = rng.randint(1, 3)
    outer = rand_splice_element(rng, k, "J", nonempty_base=True)
    mids = [rand_splice_element(rng, rng.randint(0, 3), f"L{a}", nonempty_base=True) for a in range(k)]
    inners = [
        rand_splice_element(rng, rng.randint(0, 2), f"M{a}{b}")
        for a, m in enumerate(mids)
        for b in range(m.arity)
    ]
    report = verify_associativity(outer, mids, inners, corrupt=corrupt)
    if not report.ok:
        return f"associativity failed: {report.detail}"

    sigma = rand_perm(rng, k)
    arities = [m.arity for m in mids]
    left = splice_compose(act_perm(outer, sigma), sigma.gather(mids))
    right = act_perm(
        splice_compose(outer, mids),
        block_perm(sigma, arities, [Perm.identity(j) for j in arities]),
    )
    cmp = compare_elements(left, right)
    if not cmp.ok:
        return f"symmetry failed with sigma={sigma.images}: {cmp.detail}"

    ident = identity_element()
    cmp = compare_elements(splice_compose(outer, [ident] * k), outer)
    if not cmp.ok:
        return f"right identity failed: {cmp.detail}"
    cmp = compare_elements(splice_compose(ident, [outer]), outer)
    if not cmp.ok:
        return f"left identity failed: {cmp.detail}"
    return None


def check_equivariance_instance(rng: random.Random) -> str | None:
    k = rng.randint(1, 3)
    outer = rand_splice_element(rng, k, "J", nonempty_base=True)
    mids = [rand_splice_element(rng, rng.randint(0, 2), f"L{a}") for a in range(k)]

    gamma = rand_word_wreath(rng, k)
    beta = gamma.perm
    beta_inv = beta.inverse()
    lhs = splice_compose(act_wreath(outer, gamma), mids)
    permuted = [
        outer_act(gamma.inner[beta_inv(a) - 1], mids[beta_inv(a) - 1]) for a in range(1, k + 1)
    ]
    rhs0 = splice_compose(outer, permuted)
    bp = block_perm(beta, [m.arity for m in permuted], [Perm.identity(m.arity) for m in permuted])
    rhs = act_perm(outer_act(gamma.outer.inverse(), rhs0), bp)
    cmp = compare_elements(lhs, rhs)
    if not cmp.ok:
        return f"inner equivariance failed: {cmp.detail}"

    slot_gs = [rand_word_wreath(rng, m.arity, with_outer=False) for m in mids]
    left = splice_compose(outer, [act_wreath(m, g) for m, g in zip(mids, slot_gs)])
    right = act_wreath(splice_compose(outer, mids), block_diag_wreath(slot_gs))
    cmp = compare_elements(left, right)
    if not cmp.ok:
        return f"outer equivariance failed: {cmp.detail}"
    return None


# ---------------------------------------------------------------------------
# suites


@dataclass
class Report:
    suite: str
    seed: int
    trials: int
    passes: int
    first_failure: str | None = None
    first_failure_trial: int | None = None

    @property
    def ok(self) -> bool:
        return self.passes == self.trials

    def text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"seed: {self.seed}",
            f"trials: {self.trials}",
            f"passes: {self.passes}",
        ]
        if self.ok:
            lines.append("result: OK")
        else:
            lines.append(f"result: FAIL at trial {self.first_failure_trial}")
            lines.append(f"counterexample: {self.first_failure}")
        return "\n".join(lines) + "\n"


_CHECKS = {
    "cubes": check_cubes_instance,
    "overlap": check_overlap_instance,
    "splice": check_splice_instance,
}


def run_axioms(operad: str, trials: int, seed: int, corrupt: bool = False) -> Report:
    """Run associativity + symmetry + identity checks on seeded random instances."""
    if operad not in _CHECKS:
        raise ValueError(f"unknown operad suite {operad!r}")
    check = _CHECKS[operad]
    passes = 0
    first = None
    first_trial = None
    for trial in range(trials):
        rng = random.Random(f"axioms:{operad}:{seed}:{trial}")
        failure = check(rng, corrupt=corrupt)
        if failure is None:
            passes += 1
        elif first is None:
            first = failure
            first_trial = trial
    return Report(f"{operad} axioms" + (" (corrupted)" if corrupt else ""), seed, trials, passes, first, first_trial)


def run_splice_associativity(trials: int, seed: int, corrupt: bool = False) -> Report:
    """The mechanized cancellation check alone, at higher volume."""
    passes = 0
    first = None
    first_trial = None
    for trial in range(trials):
        rng = random.Random(f"assoc:{seed}:{trial}")
        k = rng.randint(1, 3)
        outer = rand_splice_element(rng, k, "J", nonempty_base=True)
        mids = [
            rand_splice_element(rng, rng.randint(0, 2), f"L{a}", nonempty_base=True)
            for a in range(k)
        ]
        inners = [
            rand_splice_element(rng, rng.randint(0, 2), f"M{a}{b}")
            for a, m in enumerate(mids)
            for b in range(m.arity)
        ]
        report = verify_associativity(outer, mids, inners, corrupt=corrupt)
        if report.ok:
            passes += 1
        elif first is None:
            first = report.detail
            first_trial = trial
    return Report(
        "splice associativity" + (" (corrupted)" if corrupt else ""),
        seed,
        trials,
        passes,
        first,
        first_trial,
    )


def run_equivariance(trials: int, seed: int) -> Report:
    passes = 0
    first = None
    first_trial = None
    for trial in range(trials):
        rng = random.Random(f"equiv:{seed}:{trial}")
        failure = check_equivariance_instance(rng)
        if failure is None:
            passes += 1
        elif first is None:
            first = failure
            first_trial = trial
    return Report("wreath equivariance", seed, trials, passes, first, first_trial)


# ---------------------------------------------------------------------------
# random splice trees

from . import tree as _tree  # noqa: E402  (kept separate: tree machinery is optional here)


def rand_torus_leaf(rng: random.Random) -> _tree.TorusLeaf:
    while True:
        p = rng.randint(2, 4)
        q = rng.randint(2, 7)
        if p < q and math.gcd(p, q) == 1:
            return _tree.TorusLeaf(p, q, rng.choice((1, -1)))


def rand_cable_params(rng: random.Random) -> tuple[int, int]:
    while True:
        p = rng.randint(2, 3)
        q = rng.choice((-5, -4, -3, -2, -1, 1, 2, 3, 4, 5))
        if math.gcd(p, abs(q)) == 1 and abs(q) % p != 0:
            return p, q


def rand_prime_tree(rng: random.Random, depth: int = 2, cat=None):
    """A random canonical tree that is prime for connected sum (not a keychain)."""
    cat = cat or _tree.default_catalogue()
    kinds = ["torus", "hyp"]
    if depth > 0:
        kinds += ["cable", "satellite"]
    kind = rng.choice(kinds)
    if kind == "torus":
        return rand_torus_leaf(rng)
    if kind == "hyp":
        name = rng.choice(sorted(cat.knots))
        leaf = _tree.HypLeaf(name, rng.random() < 0.3, rng.random() < 0.3)
        return _tree.canonicalize(leaf, cat)
    if kind == "cable":
        p, q = rand_cable_params(rng)
        return _tree.canonicalize(
            _tree.Cable(p, q, rng.random() < 0.2, rand_tree(rng, depth - 1, cat, allow_unknot=False)),
            cat,
        )
    name = rng.choice(sorted(cat.links))
    arity = cat.links[name].arity
    node = _tree.HypSatellite(
        name,
        rng.random() < 0.2,
        tuple((rng.choice((1, -1)), rand_tree(rng, depth - 1, cat, allow_unknot=False)) for _ in range(arity)),
    )
    return _tree.canonicalize(node, cat)


def rand_tree(rng: random.Random, depth: int = 2, cat=None, allow_unknot: bool = True):
    """A random canonical tree (possibly a keychain or the unknot)."""
    cat = cat or _tree.default_catalogue()
    roll = rng.random()
    if allow_unknot and roll < 0.1:
        return _tree.UNKNOT
    if depth > 0 and roll < 0.35:
        k = rng.randint(2, 3)
        kids = tuple(rand_prime_tree(rng, depth - 1, cat) for _ in range(k))
        return _tree.canonicalize(_tree.Keychain(kids), cat)
    return rand_prime_tree(rng, depth, cat)
