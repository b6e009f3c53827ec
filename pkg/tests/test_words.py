"""Word engine tests.

Confluence oracle: a naive rewriter that applies one randomly chosen redex at
a time until none remain, independent of the stack-based reducer.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spliceops.cubes import AffineMap, LittleCube, LittleInterval
from spliceops.errors import StructuralError
from spliceops.harness import anchored_overlap_element, rand_overlap_element, rand_word
from spliceops.overlap import overlap_canonical, overlap_compose
from spliceops.perm import Perm
from spliceops.words import (
    GroupWord,
    conjugate,
    cube_letter,
    format_word,
    gsym,
    knot,
    overlap_act,
    parse_word,
    puck,
    reduce_word,
)


def naive_random_reduce(word: GroupWord, rnd: random.Random) -> GroupWord:
    letters = list(word.letters)
    while True:
        redexes = []
        for i in range(len(letters) - 1):
            a, b = letters[i], letters[i + 1]
            if a.kind == "C" and b.kind == "C":
                redexes.append(("merge", i))
            elif a.kind == b.kind and a.name == b.name and a.exp == -b.exp and a.kind != "C":
                redexes.append(("cancel", i))
        for i, a in enumerate(letters):
            if a.kind == "C" and a.cube.is_identity():
                redexes.append(("drop", i))
        if not redexes:
            return GroupWord(letters)
        kind, i = rnd.choice(redexes)
        if kind == "merge":
            merged = letters[i].cube.compose(letters[i + 1].cube)
            letters[i : i + 2] = [cube_letter(merged)]
        elif kind == "cancel":
            del letters[i : i + 2]
        else:
            del letters[i]


def rand_mixed_word(rnd, n):
    letters = []
    for _ in range(n):
        pick = rnd.random()
        if pick < 0.3:
            scale = Fraction(1, rnd.randint(1, 3))
            m = AffineMap([(scale, Fraction(rnd.randint(-1, 1), 4))])
            letters.append(cube_letter(m if rnd.random() < 0.7 else m.inverse()))
        else:
            mk = rnd.choice((puck, knot, gsym))
            letters.append(mk(rnd.choice("abc"), rnd.choice((1, -1))))
    return GroupWord(letters)


class TestReduce:
    def test_simple_cancellation(self):
        x = knot("x")
        assert reduce_word(GroupWord.of(x, x.inverse())).is_empty()

    def test_nested_cancellation(self):
        a, b, c = knot("a"), knot("b"), knot("c")
        w = GroupWord.of(a, b, b.inverse(), a.inverse(), c)
        assert reduce_word(w) == GroupWord.of(c)

    def test_cube_letters_merge(self):
        half = AffineMap([(Fraction(1, 2), Fraction(0))])
        third = AffineMap([(Fraction(1, 3), Fraction(1, 4))])
        w = reduce_word(GroupWord.of(cube_letter(half), cube_letter(third)))
        assert w == GroupWord.of(cube_letter(half.compose(third)))

    def test_cube_inverse_pair_vanishes(self):
        m = AffineMap([(Fraction(1, 2), Fraction(1, 4))])
        assert reduce_word(GroupWord.of(cube_letter(m), cube_letter(m.inverse()))).is_empty()

    def test_idempotent(self):
        rnd = random.Random(0)
        for _ in range(200):
            w = reduce_word(rand_mixed_word(rnd, rnd.randint(0, 8)))
            assert reduce_word(w) == w

    def test_reduction_confluent_against_random_rewriter(self):
        rnd = random.Random(1)
        for _ in range(300):
            w = rand_mixed_word(rnd, rnd.randint(0, 8))
            assert naive_random_reduce(w, rnd) == reduce_word(w)

    def test_homomorphic(self):
        rnd = random.Random(2)
        for _ in range(100):
            u = rand_mixed_word(rnd, rnd.randint(0, 6))
            v = rand_mixed_word(rnd, rnd.randint(0, 6))
            assert reduce_word(u) * reduce_word(v) == reduce_word(GroupWord(u.letters + v.letters))

    def test_cubes_never_cancel_symbols(self):
        m = cube_letter(AffineMap([(Fraction(1, 2), Fraction(0))]))
        w = reduce_word(GroupWord.of(knot("x"), m, knot("x", -1)))
        assert len(w) == 3


class TestConjugate:
    def test_empty_conjugator(self):
        w = GroupWord.of(knot("x"), knot("x", -1), knot("y"))
        assert conjugate(GroupWord.empty(), w) == GroupWord.of(knot("y"))

    def test_conjugate_of_empty(self):
        assert conjugate(GroupWord.of(knot("a")), GroupWord.empty()).is_empty()

    def test_inverse_conjugation(self):
        rnd = random.Random(3)
        for _ in range(100):
            a = rand_mixed_word(rnd, 3)
            w = rand_mixed_word(rnd, 4)
            assert conjugate(a, conjugate(a.inverse(), w)) == reduce_word(w)

    def test_distributes_over_products_exhaustive(self):
        # every triple of words of length <= 3 over a compact mixed alphabet
        import itertools

        half = cube_letter(AffineMap([(Fraction(1, 2), Fraction(0))]))
        alphabet = [knot("x"), knot("x", -1), half]
        words = [GroupWord(w) for n in range(3) for w in itertools.product(alphabet, repeat=n)]
        words += [GroupWord(w) for w in itertools.product(alphabet, repeat=3)]
        for a in words:
            for u in words:
                for v in words:
                    lhs = conjugate(a, reduce_word(u) * reduce_word(v))
                    rhs = conjugate(a, u) * conjugate(a, v)
                    assert lhs == rhs

    def test_distributes_over_products_random(self):
        rnd = random.Random(4)
        for _ in range(100):
            a = rand_mixed_word(rnd, 4)
            u = rand_mixed_word(rnd, 4)
            v = rand_mixed_word(rnd, 4)
            assert conjugate(a, reduce_word(u) * reduce_word(v)) == conjugate(a, u) * conjugate(a, v)


class TestOverlapAction:
    def test_identity_cube_acts_trivially(self):
        from spliceops.overlap import OverlapElement

        f = GroupWord.of(knot("f"))
        assert overlap_act(OverlapElement.identity(1), [f]) == f

    def test_disjoint_cubes_either_order_same_word(self):
        left = LittleCube([LittleInterval(Fraction(1, 2), Fraction(-1, 2))])
        right = LittleCube([LittleInterval(Fraction(1, 2), Fraction(1, 2))])
        words = [GroupWord.of(knot("f1")), GroupWord.of(knot("f2"))]
        outs = {
            overlap_act(overlap_canonical([left, right], sigma), words)
            for sigma in (Perm.identity(2), Perm((2, 1)))
        }
        assert len(outs) == 1

    def test_stacking_order_follows_heights(self):
        full = LittleCube([LittleInterval(Fraction(1), Fraction(0))])
        words = [GroupWord.of(knot("f1")), GroupWord.of(knot("f2"))]
        out = overlap_act(overlap_canonical([full, full], Perm.identity(2)), words)
        # cube 2 is on top: its conjugate appears first; identity cubes leave bare letters
        assert out == GroupWord.of(knot("f2"), knot("f1"))

    def test_action_axiom_on_fully_constrained_families(self):
        # with every pair of cubes overlapping, the height order of composites
        # is fully constrained and the action axiom holds letter for letter
        rnd = random.Random(5)
        for _ in range(200):
            k = rnd.randint(1, 3)
            outer = anchored_overlap_element(rnd, 1, k)
            args = [anchored_overlap_element(rnd, 1, rnd.randint(1, 2)) for _ in range(k)]
            words = [rand_word(rnd, 2) for _ in range(sum(a.arity for a in args))]
            lhs = overlap_act(overlap_compose(outer, args), words)
            pos, partial = 0, []
            for a in args:
                partial.append(overlap_act(a, words[pos : pos + a.arity]))
                pos += a.arity
            rhs = overlap_act(outer, partial)
            assert lhs == rhs

    def test_identity_axiom(self):
        rnd = random.Random(6)
        for _ in range(50):
            elem = anchored_overlap_element(rnd, 1, 1)
            w = rand_word(rnd, 3)
            single = overlap_act(
                overlap_canonical([LittleCube.identity(1)], Perm.identity(1)), [w]
            )
            assert single == reduce_word(w)
            assert overlap_act(elem, [GroupWord.empty()]).is_empty()

    def test_arity_mismatch(self):
        elem = rand_overlap_element(random.Random(7), 1, 2)
        with pytest.raises(StructuralError):
            overlap_act(elem, [GroupWord.empty()])


class TestTextForm:
    def test_round_trip(self):
        rnd = random.Random(8)
        for _ in range(200):
            w = rand_mixed_word(rnd, rnd.randint(0, 6))
            assert parse_word(format_word(w)) == w

    def test_empty_word(self):
        assert format_word(GroupWord.empty()) == "e"
        assert parse_word("e").is_empty()

    def test_kinds_survive(self):
        w = GroupWord.of(puck("J1"), knot("f2", -1), gsym("g0"))
        assert format_word(w) == "P.J1 K.f2^-1 G.g0"
        assert parse_word(format_word(w)) == w

    @given(st.text(alphabet="PKG.x^-1[] ", max_size=12))
    def test_parser_never_crashes_unexpectedly(self, text):
        try:
            parse_word(text)
        except StructuralError:
            pass


# ---------------------------------------------------------------------------
# hypothesis properties

_hyp_letters = st.one_of(
    st.tuples(st.sampled_from("ab"), st.sampled_from((1, -1))).map(lambda t: knot(t[0], t[1])),
    st.tuples(st.sampled_from("gh"), st.sampled_from((1, -1))).map(lambda t: gsym(t[0], t[1])),
    st.sampled_from(
        [
            cube_letter(AffineMap([(Fraction(1, 2), Fraction(0))])),
            cube_letter(AffineMap([(Fraction(2), Fraction(1, 3))])),
            cube_letter(AffineMap([(Fraction(1), Fraction(0))])),
        ]
    ),
)

hyp_words = st.lists(_hyp_letters, max_size=10).map(GroupWord)


@given(hyp_words)
def test_reduce_idempotent_hypothesis(w):
    r = reduce_word(w)
    assert reduce_word(r) == r


@given(hyp_words)
def test_inverse_law_hypothesis(w):
    assert (reduce_word(w) * w.inverse()).is_empty()
    assert (w.inverse() * reduce_word(w)).is_empty()


@given(hyp_words, hyp_words, hyp_words)
def test_multiplication_associative_hypothesis(u, v, w):
    assert (u * v) * w == u * (v * w)
