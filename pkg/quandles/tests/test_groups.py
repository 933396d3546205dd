import tempfile
from pathlib import Path

import numpy as np
from django.test import SimpleTestCase

from quandles.exceptions import (
    CapExceeded, InvalidGroup, NotAbelian, NotASubgroup, NotAutomorphism, ParseError, TooLarge,
)
from quandles.formats import group_from_dict, load_group, parse_indices
from quandles.groups import (
    FiniteGroup, GroupAutomorphism, PermutationGroup, automorphisms, close, conjugacy_class, cosets, cyclic_group,
    fixed_subgroup, identity_automorphism, inner_automorphism, matrix_group_sl2, power_automorphism,
    symmetric_group,
)
from quandles.permutations import cycle_type, format_cycles, inverse, parse_cycles, parse_generators


class PermutationTest(SimpleTestCase):

    def test_1_cycle_notation(self):
        perm = parse_cycles('(0 2)(1 3 4)')
        self.assertEqual(perm.tolist(), [2, 3, 0, 4, 1])
        self.assertEqual(format_cycles(perm), '(0 2)(1 3 4)')
        self.assertEqual(cycle_type(perm), (2, 3))
        self.assertEqual(inverse(perm)[perm].tolist(), [0, 1, 2, 3, 4])

    def test_2_repeated_point(self):
        '''The column of the repetition is reported'''
        with self.assertRaises(ParseError) as caught:
            parse_cycles('(0 1)(1 2)')
        self.assertEqual(caught.exception.column, 7)

    def test_3_generators_are_padded(self):
        gens = parse_generators('(0 1)\n(0 1 2 3)')
        self.assertEqual([g.tolist() for g in gens], [[1, 0, 2, 3], [1, 2, 3, 0]])

    def test_4_non_ascii_digits(self):
        '''A superscript two is not a point'''
        with self.assertRaises(ParseError) as caught:
            parse_cycles('(0 \u00b2)')
        self.assertEqual(caught.exception.column, 4)
        self.assertRaises(ParseError, parse_generators, '(0 1)\n(\u0661 2)')


class PermutationGroupTest(SimpleTestCase):

    def test_1_closure_of_s3(self):
        group = close([[1, 0, 2], [1, 2, 0]])
        self.assertEqual(group.order, 6)
        self.assertEqual(group.orbit(0), [0, 1, 2])
        self.assertTrue(group.is_transitive())
        self.assertEqual(len(group.stabilizer(0)), 2)

    def test_2_identity_generators_are_dropped(self):
        group = PermutationGroup(3, [[0, 1, 2]])
        self.assertEqual(group.generators, ())
        self.assertEqual(group.order, 1)
        self.assertEqual(group.orbits(), [[0], [1], [2]])

    def test_3_cap(self):
        '''S_5 does not fit under a cap of 10 elements'''
        group = PermutationGroup(5, [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]], cap=10)
        with self.assertRaises(CapExceeded):
            group.elements

    def test_4_bad_generator(self):
        self.assertRaises(InvalidGroup, PermutationGroup, 3, [[0, 0, 1]])

    def test_5_membership(self):
        group = close([[1, 2, 0]])
        self.assertIn(np.array([2, 0, 1]), group)
        self.assertNotIn(np.array([1, 0, 2]), group)


class FiniteGroupTest(SimpleTestCase):

    def test_1_orders(self):
        self.assertEqual(symmetric_group(3).order, 6)
        self.assertEqual(symmetric_group(4).order, 24)
        self.assertEqual(cyclic_group(8).order, 8)
        self.assertEqual(matrix_group_sl2(3).order, 24)
        self.assertEqual(matrix_group_sl2(5).order, 120)

    def test_2_abelian(self):
        self.assertTrue(cyclic_group(8).is_abelian())
        self.assertFalse(symmetric_group(3).is_abelian())
        self.assertRaises(NotAbelian, symmetric_group(3).check_abelian)

    def test_3_from_table(self):
        group = FiniteGroup.from_table([[0, 1], [1, 0]])
        self.assertEqual(group.identity, 0)
        self.assertEqual(group.inv(1), 1)

    def test_4_bad_tables(self):
        self.assertRaises(InvalidGroup, FiniteGroup.from_table, [[0, 1], [1, 1]])
        self.assertRaises(InvalidGroup, FiniteGroup.from_table, [[0, 1, 2], [1, 2, 0]])

    def test_5_permutation_backed_table(self):
        '''The Cayley table of S_3 agrees with mul'''
        group = symmetric_group(3)
        for a in range(6):
            for b in range(6):
                expected = group.permutation(a)[group.permutation(b)]
                self.assertEqual(group.permutation(group.table[a, b]).tolist(), expected.tolist())

    def test_6_conjugacy_classes(self):
        group = matrix_group_sl2(3)
        j1 = group.index_of_matrix([[1, 1], [0, 1]])
        self.assertEqual(len(conjugacy_class(group, j1)), 4)
        group = matrix_group_sl2(5)
        self.assertEqual(len(conjugacy_class(group, group.index_of_matrix([[1, 1], [0, 1]]))), 12)
        sizes = sorted(len(conjugacy_class(symmetric_group(3), g)) for g in (0, 1, 3))
        self.assertEqual(sizes, [1, 2, 3])

    def test_7_sl2_limit(self):
        self.assertRaises(TooLarge, matrix_group_sl2, 17)

    def test_8_subgroups(self):
        group = cyclic_group(4)
        group.check_subgroup([0, 2])
        self.assertRaises(NotASubgroup, group.check_subgroup, [0, 1])
        self.assertEqual(group.subgroup_closure([2]), [0, 2])


class AutomorphismTest(SimpleTestCase):

    def test_1_counts(self):
        self.assertEqual(len(automorphisms(cyclic_group(8))), 4)
        self.assertEqual(len(automorphisms(symmetric_group(3))), 6)

    def test_2_power(self):
        phi = power_automorphism(cyclic_group(8), 3)
        self.assertEqual(phi.map.tolist(), [0, 3, 6, 1, 4, 7, 2, 5])
        negation = power_automorphism(cyclic_group(5), -1)
        self.assertEqual(negation.map.tolist(), [0, 4, 3, 2, 1])

    def test_3_not_a_homomorphism(self):
        self.assertRaises(NotAutomorphism, GroupAutomorphism.checked, cyclic_group(5), [0, 1, 3, 2, 4])
        self.assertRaises(NotAutomorphism, GroupAutomorphism.checked, cyclic_group(3), [1, 0, 2])

    def test_4_fixed_subgroup(self):
        '''Fixed points of an inner automorphism form the centralizer'''
        group = symmetric_group(3)
        self.assertEqual(fixed_subgroup(group, inner_automorphism(group, 1)), (0, 1))
        self.assertEqual(fixed_subgroup(group, identity_automorphism(group)), tuple(range(6)))

    def test_5_automorphism_search_limit(self):
        self.assertRaises(TooLarge, automorphisms, cyclic_group(8), limit=4)


class CosetTest(SimpleTestCase):

    def test_1_cosets_of_a_transposition(self):
        group = symmetric_group(3)
        space = cosets(group, [0, 1])
        self.assertEqual(len(space), 3)
        self.assertEqual(space.reps[0], 0)
        self.assertEqual(sorted(len(m) for m in space.members), [2, 2, 2])
        for g in range(6):
            self.assertIn(g, space.members[space.coset(g)])

    def test_2_trivial_subgroup(self):
        space = cosets(cyclic_group(5), [0])
        self.assertEqual(space.reps, (0, 1, 2, 3, 4))
        self.assertEqual(space.label(2), '2H')

    def test_3_not_a_subgroup(self):
        self.assertRaises(NotASubgroup, cosets, cyclic_group(6), [0, 1])


class GroupFileTest(SimpleTestCase):

    def test_1_named_families(self):
        self.assertEqual(group_from_dict({'family': 'symmetric', 'n': 4}).order, 24)
        self.assertEqual(group_from_dict({'family': 'sl2', 'p': 3}).order, 24)

    def test_2_generators(self):
        group = group_from_dict({'generators': ['(0 1)', '(0 1 2 3)']})
        self.assertEqual(group.order, 24)

    def test_3_explicit_table(self):
        group = group_from_dict({'order': 3, 'mul': [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})
        self.assertTrue(group.is_abelian())

    def test_4_non_integer_tables(self):
        self.assertRaises(InvalidGroup, group_from_dict, {'order': 2, 'mul': [[0, 1.0], [1, 0]]})
        self.assertRaises(InvalidGroup, group_from_dict, {'order': 2, 'mul': [[False, True], [True, False]]})

    def test_5_indices(self):
        self.assertEqual(parse_indices('0, 2 5'), [0, 2, 5])
        with self.assertRaises(ParseError):
            parse_indices('1 \u00b2')

    def test_6_generator_text_file(self):
        '''A file of cycle-notation lines is read as the group it generates'''
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'gens.txt'
            path.write_text('(0 1)\n(0 1 2)\n')
            self.assertEqual(load_group(path).order, 6)
            path.write_text('{"family": "cyclic", "n": 5}')
            self.assertEqual(load_group(path).order, 5)

    def test_7_undecodable_file(self):
        '''A byte that is not UTF-8 is a parse error naming the file and its position'''
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'group.json'
            path.write_bytes(b'{\n  \xff}')
            with self.assertRaises(ParseError) as caught:
                load_group(path)
        self.assertIn('group.json', str(caught.exception))
        self.assertEqual((caught.exception.line, caught.exception.column), (2, 3))
