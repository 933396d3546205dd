import numpy as np
from django.test import SimpleTestCase

from quandles.constructions import conjugation, dihedral, trivial
from quandles.core import find_violations, right_translation, subquandle_closure, symmetry, validate
from quandles.exceptions import InvalidQuandle, ParameterError, RangeError
from quandles.groups import symmetric_group


class ValidateTest(SimpleTestCase):
    '''Axiom checking of operation tables'''

    def test_1_dihedral_table_is_valid(self):
        '''op[i][j] = 2i - j mod 3 passes all 27 triples'''
        table = [[(2 * i - j) % 3 for j in range(3)] for i in range(3)]
        q = validate(table)
        self.assertEqual(q.size, 3)
        self.assertTrue(np.array_equal(q.inv_op, q.op))

    def test_2_trivial_table_is_valid(self):
        for n in (1, 2, 7):
            self.assertEqual(validate([list(range(n))] * n).size, n)

    def test_3_idempotence_witness(self):
        '''op[0][0] = 1 is reported as axiom 1 at element 0'''
        with self.assertRaises(InvalidQuandle) as caught:
            validate([[1, 1], [0, 1]])
        self.assertEqual(caught.exception.violations[0].axiom, 1)
        self.assertEqual(caught.exception.violations[0].witness, (0,))

    def test_4_distributivity_witness(self):
        '''Rows that are bijections but do not distribute'''
        with self.assertRaises(InvalidQuandle) as caught:
            validate([[0, 2, 1], [2, 1, 0], [0, 1, 2]])
        self.assertTrue(any(v.axiom == 3 for v in caught.exception.violations))
        self.assertFalse(any(v.axiom in (1, 2) for v in caught.exception.violations))

    def test_5_out_of_range(self):
        with self.assertRaises(RangeError) as caught:
            validate([[0, 5], [0, 1]])
        self.assertEqual(caught.exception.positions, [(0, 1)])

    def test_6_witnesses_are_capped(self):
        '''Every row of a constant table fails; the list stops at the cap'''
        violations, inverse = find_violations(np.zeros((30, 30), dtype=int), cap=5)
        self.assertEqual(len(violations), 5)
        self.assertIsNone(inverse)

    def test_7_inverse_table_rows(self):
        q = dihedral(7)
        points = np.arange(7)
        for row in range(7):
            self.assertTrue(np.array_equal(q.inv_op[row][q.op[row]], points))
            self.assertTrue(np.array_equal(q.op[row][q.inv_op[row]], points))

    def test_8_non_integer_entries(self):
        '''Floats, whole-valued floats and bools are rejected rather than truncated'''
        for table in ([[0, 1.7], [0.2, 1]], [[0, 1.0], [0, 1]], [[False, True], [False, True]]):
            with self.assertRaises(ParameterError):
                validate(table)
        self.assertRaises(ParameterError, validate, np.array([[0.0, 1.0], [0.0, 1.0]]))
        self.assertRaises(ParameterError, validate, [[0, 1], [0, 1]], [[0, 1], [0, '1']])
        self.assertEqual(validate(np.array([[0, 1], [0, 1]], dtype=np.int32)).size, 2)


class SymmetryTest(SimpleTestCase):

    def test_1_trivial_symmetry_is_identity(self):
        self.assertEqual(symmetry(trivial(4), 2).perm.tolist(), [0, 1, 2, 3])

    def test_2_dihedral_symmetry(self):
        '''s_0 on R_3 swaps 1 and 2'''
        self.assertEqual(symmetry(dihedral(3), 0).perm.tolist(), [0, 2, 1])
        self.assertEqual(symmetry(dihedral(5), 1).perm.tolist(), [2, 1, 0, 4, 3])

    def test_3_every_symmetry_is_an_automorphism(self):
        for q in (dihedral(6), conjugation(symmetric_group(3))):
            for x in range(q.size):
                self.assertTrue(symmetry(q, x).is_automorphism_of(q))

    def test_4_index_out_of_range(self):
        self.assertRaises(IndexError, symmetry, dihedral(3), 3)


class RightTranslationTest(SimpleTestCase):

    def test_1_trivial_is_constant(self):
        self.assertEqual(right_translation(trivial(4), 2).tolist(), [2, 2, 2, 2])

    def test_2_dihedral_columns(self):
        '''t_1 on R_3 is onto, t_0 on R_4 is not'''
        self.assertEqual(sorted(right_translation(dihedral(3), 1).tolist()), [0, 1, 2])
        self.assertEqual(right_translation(dihedral(4), 0).tolist(), [0, 2, 0, 2])


class SubquandleClosureTest(SimpleTestCase):

    def test_1_whole_quandle(self):
        q = dihedral(5)
        sub, embedding = subquandle_closure(q, range(5))
        self.assertTrue(sub.same_table(q))
        self.assertEqual(embedding.tolist(), [0, 1, 2, 3, 4])

    def test_2_singleton_in_trivial(self):
        sub, embedding = subquandle_closure(trivial(4), [3])
        self.assertEqual(sub.size, 1)
        self.assertEqual(embedding.tolist(), [3])

    def test_3_even_points_of_r6(self):
        '''{0, 2} generates the even points, a copy of R_3'''
        sub, embedding = subquandle_closure(dihedral(6), [0, 2])
        self.assertEqual(embedding.tolist(), [0, 2, 4])
        self.assertTrue(sub.same_table(dihedral(3)))

    def test_4_transpositions_of_s3(self):
        '''One transposition is closed on its own; two generate all three'''
        group = symmetric_group(3)
        q = conjugation(group)
        transpositions = [g for g in range(6) if group.element_order(g) == 2]
        single, _ = subquandle_closure(q, transpositions[:1])
        self.assertEqual(single.size, 1)
        sub, embedding = subquandle_closure(q, transpositions[:2])
        self.assertEqual(embedding.tolist(), transpositions)
        self.assertEqual(validate(sub.op).size, 3)
