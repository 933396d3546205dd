from itertools import product

import numpy as np
from django.test import SimpleTestCase

from quandles.constructions import (
    alexander, build, cocycle_extension, conj_class, conjugation, dihedral, phi_space, section5_example, trivial,
    unipotent_class_quandle, vedernikov,
)
from quandles.core import validate
from quandles.exceptions import CocycleError, NotAbelian, NotFixed, ParameterError
from quandles.groups import (
    automorphisms, conjugacy_class, cyclic_group, identity_automorphism, inner_automorphism, matrix_group_sl2,
    power_automorphism, symmetric_group,
)


class FamilyTest(SimpleTestCase):

    def test_1_trivial(self):
        q = trivial(4)
        self.assertEqual(q.op.tolist(), [[0, 1, 2, 3]] * 4)
        self.assertEqual(q.provenance.family, 'trivial')
        self.assertRaises(ParameterError, trivial, 0)

    def test_2_dihedral(self):
        self.assertEqual(dihedral(5).act(1, 3), 4)
        self.assertEqual(dihedral(4).op[0].tolist(), [0, 3, 2, 1])

    def test_3_alexander_scalar(self):
        '''v▷w = v + 2(w - v) on F_5'''
        q = alexander(5, 1, 2)
        self.assertEqual(q.act(0, 1), 2)
        self.assertEqual(q.act(1, 0), 4)
        self.assertEqual(alexander(5, 1, 7).provenance.parameters['a'], 2)

    def test_4_alexander_matrix(self):
        q = alexander(3, 2, [[1, 1], [0, 1]])
        self.assertEqual(q.size, 9)
        self.assertEqual(q.labels[4], '(1,1)')

    def test_5_alexander_rejects(self):
        self.assertRaises(ParameterError, alexander, 4, 1, 3)
        self.assertRaises(ParameterError, alexander, 5, 1, 0)
        self.assertRaises(ParameterError, alexander, 5, 1, 5)
        self.assertRaises(ParameterError, alexander, 3, 2, [[1, 2], [2, 1]])

    def test_6_conjugation(self):
        '''(1 2) conjugates (0 1) into (0 2)'''
        group = symmetric_group(3)
        q = conjugation(group)
        self.assertEqual(q.act(1, 2), 5)
        self.assertEqual(q.label(5), '(0 2)')

    def test_7_conj_class(self):
        q, members = conj_class(symmetric_group(3), 2)
        self.assertEqual(members.tolist(), [1, 2, 5])
        self.assertEqual(q.size, 3)
        self.assertRaises(ParameterError, conj_class, symmetric_group(3), 6)

    def test_8_cocycle_extension(self):
        '''(x, a)▷(y, b) = (y, b + F(x, y)) over Z/2'''
        q = cocycle_extension(2, cyclic_group(2), [[0, 1], [1, 0]])
        self.assertEqual(q.size, 4)
        self.assertEqual(q.act(0, 2), 3)
        self.assertEqual(q.act(2, 0), 1)
        self.assertEqual(q.label(3), '(1,1)')

    def test_9_cocycle_errors(self):
        with self.assertRaises(CocycleError) as caught:
            cocycle_extension(2, cyclic_group(2), [[1, 0], [0, 0]])
        self.assertEqual(caught.exception.elements, [0])
        self.assertRaises(NotAbelian, cocycle_extension, 2, symmetric_group(3), [[0, 0], [0, 0]])

    def test_10_phi_space_of_negation_is_dihedral(self):
        group = cyclic_group(5)
        q, space = phi_space(group, power_automorphism(group, -1), [0])
        self.assertTrue(q.same_table(dihedral(5)))
        self.assertEqual(len(space), 5)

    def test_11_phi_space_needs_fixed_subgroup(self):
        group = symmetric_group(3)
        with self.assertRaises(NotFixed) as caught:
            phi_space(group, inner_automorphism(group, 3), [0, 1])
        self.assertEqual(caught.exception.moved, [1])

    def test_12_phi_space_on_cosets(self):
        '''φ = conjugation by (1 2) fixes H = {e, (1 2)}; three cosets'''
        group = symmetric_group(3)
        q, space = phi_space(group, inner_automorphism(group, 1), [0, 1])
        self.assertEqual(q.size, 3)
        self.assertEqual(space.subgroup, (0, 1))

    def test_13_vedernikov_identity(self):
        '''With φ = id, x▷′y = xyx⁻¹'''
        group = symmetric_group(3)
        q = vedernikov(group, identity_automorphism(group))
        self.assertEqual(q.act(1, 2), 5)

    def test_14_section5(self):
        self.assertEqual(section5_example(5, 2).size, 25)
        self.assertEqual(section5_example(3, 3).size, 27)
        self.assertRaises(ParameterError, section5_example, 2, 2)
        self.assertRaises(ParameterError, section5_example, 5, 1)

    def test_15_unipotent_class(self):
        q, group, members = unipotent_class_quandle(3)
        self.assertEqual((q.size, group.order, len(members)), (4, 24, 4))
        q, group, members = unipotent_class_quandle(5)
        self.assertEqual((q.size, group.order), (12, 120))
        self.assertEqual(q.labels[0], group.label(int(members[0])))


class AxiomSuiteTest(SimpleTestCase):
    '''Every family across its parameters passes validation'''

    def assertValid(self, quandle):
        validate(quandle.op, quandle.inv_op)

    def test_1_small_families(self):
        for n in range(1, 13):
            self.assertValid(trivial(n))
        for n in range(3, 13):
            self.assertValid(dihedral(n))
        for p, n in ((3, 2), (3, 3), (5, 2), (5, 3)):
            self.assertValid(section5_example(p, n))
        for p in (3, 5):
            self.assertValid(unipotent_class_quandle(p)[0])

    def test_2_alexander(self):
        for p in (3, 5, 7):
            for n in (1, 2):
                for a in range(1, p):
                    self.assertValid(alexander(p, n, a))

    def test_3_group_families(self):
        for group in (symmetric_group(3), symmetric_group(4), cyclic_group(8), matrix_group_sl2(3)):
            self.assertValid(conjugation(group))
            classes = {tuple(conjugacy_class(group, g)) for g in range(group.order)}
            for members in classes:
                self.assertValid(conj_class(group, members[0])[0])

    def test_4_phi_space_and_vedernikov(self):
        for n in range(3, 13):
            group = cyclic_group(n)
            self.assertValid(phi_space(group, power_automorphism(group, -1), [0])[0])
        group = symmetric_group(3)
        for phi in automorphisms(group):
            self.assertValid(vedernikov(group, phi))

    def test_5_alexander_over_all_of_gl2(self):
        '''Every invertible 2x2 matrix over F_3 and F_5 gives a quandle: 48 + 480 of them'''
        checked = 0
        for p in (3, 5):
            for a, b, c, d in product(range(p), repeat=4):
                if (a * d - b * c) % p == 0:
                    continue
                q = alexander(p, 2, [[a, b], [c, d]])
                self.assertEqual(q.size, p * p)
                self.assertValid(q)
                checked += 1
        self.assertEqual(checked, 528)


class ReplayTest(SimpleTestCase):

    def test_1_records_rebuild_the_table(self):
        group = symmetric_group(3)
        for q in (alexander(3, 2, [[1, 1], [0, 1]]), phi_space(group, inner_automorphism(group, 1), [0, 1])[0],
                  unipotent_class_quandle(3)[0], cocycle_extension(2, cyclic_group(2), [[0, 1], [1, 0]])):
            self.assertTrue(q.provenance.replay().same_table(q))

    def test_2_build_errors(self):
        self.assertRaises(ParameterError, build, 'nope', {})
        self.assertRaises(ParameterError, build, 'dihedral', {})
        self.assertTrue(np.array_equal(build('dihedral', {'n': 4}).op, dihedral(4).op))
