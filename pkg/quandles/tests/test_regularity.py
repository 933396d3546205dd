from django.test import SimpleTestCase, override_settings

from quandles.constructions import alexander, dihedral, trivial, unipotent_class_quandle
from quandles.exceptions import CapExceeded
from quandles.regularity import (
    CONDITIONS, fixed_points, image_sizes, implication_survey, isolated_connected_consequence, regularity_report,
    symmetry_centralizer_check,
)


class FlagTest(SimpleTestCase):

    def test_1_affine_quandle_is_regular(self):
        flags = regularity_report(alexander(5, 1, 2)).flags
        self.assertEqual(flags, {'I_prime': True, 'D_prime': True, 'C': True, 'Phi_prime': True})

    def test_2_trivial(self):
        report = regularity_report(trivial(3))
        self.assertEqual(report.flags, {'I_prime': False, 'D_prime': False, 'C': False, 'Phi_prime': True})
        self.assertEqual(report.non_surjective, (0, 1, 2))
        self.assertIsNone(report.centralizer)

    def test_3_unipotent_classes(self):
        '''Over F_3 every symmetry fixes only its own point; over F_5 it also fixes the inverse'''
        small = regularity_report(unipotent_class_quandle(3)[0]).flags
        self.assertTrue(small['I_prime'])
        self.assertTrue(small['C'])
        large = regularity_report(unipotent_class_quandle(5)[0])
        self.assertTrue(large.flags['C'])
        self.assertFalse(large.flags['I_prime'])
        self.assertFalse(large.flags['D_prime'])
        self.assertTrue(large.flags['Phi_prime'])
        self.assertEqual({len(f) for f in large.fixed_sets}, {2})

    def test_4_as_dict(self):
        data = regularity_report(dihedral(3)).as_dict()
        self.assertEqual(data['size'], 3)
        self.assertEqual(set(data['flags']), set(CONDITIONS))
        self.assertEqual(data['realizations'][0]['group_order'], 3)
        self.assertEqual(data['centralizer']['violations'], [])
        self.assertIn('note', data)

    def test_5_realizations_per_orbit(self):
        report = regularity_report(dihedral(4))
        self.assertEqual([r['basepoint'] for r in report.realizations], [0, 1])
        self.assertEqual([r['orbit_size'] for r in report.realizations], [2, 2])


class HelperTest(SimpleTestCase):

    def test_1_fixed_points(self):
        self.assertEqual(fixed_points(dihedral(5), 2), (2,))
        self.assertEqual(fixed_points(dihedral(4), 0), (0, 2))
        self.assertEqual(fixed_points(trivial(3), 1), (0, 1, 2))

    def test_2_image_sizes(self):
        self.assertEqual(image_sizes(trivial(3)), [1, 1, 1])
        self.assertEqual(image_sizes(dihedral(5)), [5] * 5)
        self.assertEqual(image_sizes(dihedral(4)), [2] * 4)

    def test_3_isolated_connected(self):
        for q in (alexander(7, 1, 3), trivial(1), dihedral(3)):
            consequence = isolated_connected_consequence(q)
            self.assertTrue(consequence.isolated)
            self.assertEqual(len(consequence.surjective), q.size)
            self.assertFalse(consequence.anomaly)

    def test_4_not_isolated(self):
        consequence = isolated_connected_consequence(unipotent_class_quandle(5)[0])
        self.assertFalse(consequence.isolated)
        self.assertFalse(consequence.anomaly)

    def test_5_centralizer(self):
        for q in (dihedral(5), alexander(5, 1, 2), unipotent_class_quandle(3)[0]):
            check = symmetry_centralizer_check(q)
            self.assertTrue(check.holds)
        self.assertEqual(symmetry_centralizer_check(dihedral(5)).automorphisms, 20)

    def test_6_centralizer_over_the_cap_is_skipped(self):
        '''Aut(R_5) has 20 elements; under a cap of 12 the check is skipped and the report still passes'''
        self.assertRaises(CapExceeded, symmetry_centralizer_check, dihedral(5), cap=12)
        report = regularity_report(dihedral(5), cap=12)
        self.assertIsNone(report.centralizer)
        self.assertIn('automorphism group', report.centralizer_skipped)
        self.assertTrue(all(report.flags.values()))
        self.assertIn('centralizer_skipped', report.as_dict())
        with override_settings(QUANDLE={'CLOSURE_CAP': 12}):
            self.assertIsNotNone(regularity_report(dihedral(5)).centralizer_skipped)
        self.assertNotIn('centralizer_skipped', regularity_report(dihedral(5)).as_dict())


class SurveyTest(SimpleTestCase):

    def corpus(self):
        return [
            ('alexander(5,1,2)', alexander(5, 1, 2)),
            ('trivial(3)', trivial(3)),
            ('unipotent_class(5)', unipotent_class_quandle(5)[0]),
        ]

    def test_1_empty(self):
        survey = implication_survey([])
        self.assertEqual(survey.rows, ())
        self.assertEqual(survey.implications(), [])

    def test_2_connected_without_isolation(self):
        survey = implication_survey(self.corpus())
        self.assertEqual(survey.counterexamples[('C', 'I_prime')], ('unipotent_class(5)',))
        self.assertEqual(survey.counterexamples[('C', 'D_prime')], ('unipotent_class(5)',))
        self.assertIn(('D_prime', 'I_prime'), survey.implications())
        self.assertIn('trivial(3)', survey.counterexamples[('Phi_prime', 'C')])

    def test_3_threads(self):
        single = implication_survey(self.corpus())
        pooled = implication_survey(self.corpus(), threads=3)
        self.assertEqual(single.as_dict(), pooled.as_dict())

    def test_4_as_dict(self):
        data = implication_survey(self.corpus()).as_dict()
        self.assertEqual([row['name'] for row in data['rows']], [name for name, _ in self.corpus()])
        self.assertEqual(len(data['implications']), len(CONDITIONS) * (len(CONDITIONS) - 1))


class UnipotentFixedSetTest(SimpleTestCase):

    def test_1_fixed_set_of_j1(self):
        '''J₁ is fixed by s_J₁ together with J_t for every nonzero square t'''
        for p, expected in ((3, 1), (5, 2)):
            quandle, group, members = unipotent_class_quandle(p)
            j1 = members.tolist().index(group.index_of_matrix([[1, 1], [0, 1]]))
            found = fixed_points(quandle, j1)
            self.assertEqual(list(found), [r for r in range(quandle.size) if quandle.act(j1, r) == r])
            self.assertIn(j1, found)
            self.assertEqual(len(found), expected)
