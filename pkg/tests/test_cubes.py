import random
from fractions import Fraction

import pytest

from spliceops.cubes import (
    AffineMap,
    CubesElement,
    LittleCube,
    LittleInterval,
    cube_compose,
    cubes_from_json,
    cubes_to_json,
    format_cube,
    interiors_intersect,
    parse_cube,
    permute_cubes,
)
from spliceops.errors import StructuralError
from spliceops.harness import rand_disjoint_element, rand_perm
from spliceops.perm import Perm


def interval(a, b):
    return LittleInterval(Fraction(a), Fraction(b))


class TestLittleInterval:
    def test_invariants(self):
        with pytest.raises(StructuralError):
            interval(0, 0)
        with pytest.raises(StructuralError):
            interval("1/2", "3/4")  # |b| + a > 1

    def test_symbolic_composition(self):
        # (x/2 - 1/2) o (x/2 + 1/2) = x/4 - 1/4, image [-1/2, 0]
        left = interval("1/2", "-1/2")
        right = interval("1/2", "1/2")
        comp = left.compose(right)
        assert comp == interval("1/4", "-1/4")
        assert comp.image() == (Fraction(-1, 2), Fraction(0))

    def test_text_round_trip(self):
        rnd = random.Random(0)
        for _ in range(50):
            scale = Fraction(1, rnd.randint(1, 5))
            offset = (1 - scale) * Fraction(rnd.randint(-2, 2), 2)
            f = LittleInterval(scale, offset)
            cube = LittleCube([f, f])
            assert parse_cube(format_cube(cube)) == cube


class TestDisjointness:
    def test_touching_boundaries_allowed(self):
        c1 = LittleCube([interval("1/2", "-1/2")])  # image [-1, 0]
        c2 = LittleCube([interval("1/2", "1/2")])  # image [0, 1]
        CubesElement(1, [c1, c2])

    def test_interior_overlap_rejected(self):
        c1 = LittleCube([interval("1/2", 0)])
        c2 = LittleCube([interval("1/2", "1/4")])
        with pytest.raises(StructuralError):
            CubesElement(1, [c1, c2])

    def test_one_axis_disjoint_suffices(self):
        c1 = LittleCube([interval("1/2", "-1/2"), interval(1, 0)])
        c2 = LittleCube([interval("1/2", "1/2"), interval(1, 0)])
        assert not interiors_intersect(c1, c2)
        CubesElement(2, [c1, c2])

    def test_empty_element(self):
        assert CubesElement(2, ()).arity == 0


class TestOperadStructure:
    def test_identity_axioms(self):
        rnd = random.Random(1)
        for _ in range(25):
            elem = rand_disjoint_element(rnd, 2, rnd.randint(0, 3))
            k = elem.arity
            assert cube_compose(elem, [CubesElement.identity(2)] * k) == elem
            assert cube_compose(CubesElement.identity(2), [elem]) == elem

    def test_composition_example(self):
        outer = CubesElement(1, [LittleCube([interval("1/2", "-1/2")])])
        arg = CubesElement(1, [LittleCube([interval("1/2", "1/2")])])
        out = cube_compose(outer, [arg])
        assert out.cubes[0].factors[0] == interval("1/4", "-1/4")

    def test_composition_preserves_disjointness(self):
        rnd = random.Random(2)
        for _ in range(50):
            outer = rand_disjoint_element(rnd, 2, rnd.randint(1, 3))
            args = [rand_disjoint_element(rnd, 2, rnd.randint(0, 3)) for _ in range(outer.arity)]
            cube_compose(outer, args)  # constructor re-checks the invariant

    def test_permutation_action_is_action(self):
        rnd = random.Random(3)
        for _ in range(50):
            elem = rand_disjoint_element(rnd, 2, 3)
            s, t = rand_perm(rnd, 3), rand_perm(rnd, 3)
            assert permute_cubes(permute_cubes(elem, s), t) == permute_cubes(elem, s * t)
            assert permute_cubes(elem, Perm.identity(3)) == elem
            sigma = rand_perm(rnd, 3)
            assert permute_cubes(permute_cubes(elem, sigma), sigma.inverse()) == elem

    def test_arity_mismatch(self):
        outer = CubesElement.identity(1)
        with pytest.raises(StructuralError):
            cube_compose(outer, [])
        with pytest.raises(StructuralError):
            cube_compose(outer, [CubesElement.identity(2)])


class TestAffineMap:
    def test_inverse(self):
        m = AffineMap([(Fraction(1, 2), Fraction(1, 4)), (Fraction(3), Fraction(-1))])
        assert m.compose(m.inverse()).is_identity()
        assert m.inverse().compose(m).is_identity()

    def test_little_cube_embedding(self):
        cube = LittleCube([interval("1/2", "1/4")])
        assert cube.as_affine() == AffineMap([(Fraction(1, 2), Fraction(1, 4))])


def test_json_round_trip():
    rnd = random.Random(4)
    for _ in range(20):
        elem = rand_disjoint_element(rnd, 2, rnd.randint(0, 3))
        assert cubes_from_json(cubes_to_json(elem)) == elem


def test_operad_axioms_randomized():
    from spliceops.harness import check_cubes_instance

    rnd = random.Random("cubes-module")
    for _ in range(100):
        assert check_cubes_instance(rnd) is None
