import numpy as np
from django.test import SimpleTestCase

from quandles.constructions import conj_class, conjugation, dihedral, trivial
from quandles.core import validate
from quandles.exceptions import InconsistentArcs, ParseError
from quandles.groups import symmetric_group
from quandles.knots import (
    brute_force_colorings, count_colorings, invariance_check, parse_braid, parse_pd,
)

TREFOIL = 'X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]'
FIGURE_EIGHT = 'X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]'


class ParseTest(SimpleTestCase):

    def test_1_trefoil(self):
        diagram = parse_pd(TREFOIL)
        self.assertEqual(len(diagram.crossings), 3)
        self.assertEqual(diagram.arc_count, 6)
        self.assertEqual(len(diagram.components), 1)
        self.assertEqual({c.sign for c in diagram.crossings}, {-1})

    def test_2_comments_and_whitespace(self):
        text = '# trefoil\nX[1, 4, 2, 5]\nX[3,6,4,1] ; X[5,2,6,3]  # last\n'
        self.assertEqual(parse_pd(text), parse_pd(TREFOIL))

    def test_3_errors(self):
        self.assertRaises(ParseError, parse_pd, '')
        self.assertRaises(ParseError, parse_pd, 'X[0,1,2,3]')
        with self.assertRaises(ParseError) as raised:
            parse_pd('X[1,4,2,5];\n  Y[3,6,4,1]')
        self.assertEqual((raised.exception.line, raised.exception.column), (2, 3))

    def test_4_inconsistent_arcs(self):
        with self.assertRaises(InconsistentArcs) as raised:
            parse_pd('X[1,4,2,5];X[3,6,4,1]')
        self.assertEqual(raised.exception.missing, [2, 3, 5, 6])

    def test_5_braids(self):
        self.assertEqual(len(parse_braid('s1 s1 s1', 2).components), 1)
        self.assertEqual(len(parse_braid("s1 s1'", 2).components), 2)
        self.assertEqual(len(parse_braid('', 3).components), 3)
        self.assertRaises(ParseError, parse_braid, 's2', 2)
        self.assertRaises(ParseError, parse_braid, 't1', 2)
        self.assertRaises(ParseError, parse_braid, 's1', 0)


class ColoringTest(SimpleTestCase):

    def test_1_trefoil(self):
        self.assertEqual(count_colorings(parse_pd(TREFOIL), dihedral(3)).total, 9)
        self.assertEqual(count_colorings(parse_pd(TREFOIL), dihedral(5)).total, 5)

    def test_2_figure_eight(self):
        self.assertEqual(count_colorings(parse_pd(FIGURE_EIGHT), dihedral(5)).total, 25)
        self.assertEqual(count_colorings(parse_pd(FIGURE_EIGHT), dihedral(3)).total, 3)

    def test_3_agrees_with_brute_force(self):
        for text in (TREFOIL, FIGURE_EIGHT):
            diagram = parse_pd(text)
            for q in (dihedral(3), dihedral(4), dihedral(5), conj_class(symmetric_group(3), 2)[0]):
                self.assertEqual(count_colorings(diagram, q).total, brute_force_colorings(diagram, q))

    def test_4_unknot_and_unlink(self):
        q = dihedral(5)
        self.assertEqual(count_colorings(parse_braid('', 1), q).total, 5)
        self.assertEqual(count_colorings(parse_braid('s1', 2), q).total, 5)
        self.assertEqual(count_colorings(parse_braid("s1 s1'", 2), q).total, 25)

    def test_5_trivial_quandle_counts_components(self):
        for word, strands in (('s1 s1 s1', 2), ("s1 s1'", 2), ('s1 s2', 3), ('', 3)):
            diagram = parse_braid(word, strands)
            self.assertEqual(count_colorings(diagram, trivial(4)).total, 4 ** len(diagram.components))

    def test_6_braid_and_diagram_agree(self):
        braid = parse_braid('s1 s1 s1', 2)
        for q in (dihedral(3), dihedral(5), conjugation(symmetric_group(3))):
            self.assertTrue(invariance_check(parse_pd(TREFOIL), braid, q))

    def test_7_isomorphic_quandles_count_alike(self):
        diagram = parse_pd(TREFOIL)
        self.assertEqual(count_colorings(diagram, conj_class(symmetric_group(3), 2)[0]).total, 9)

    def test_8_by_orbit(self):
        '''R_4 has no nonconstant colorings of the trefoil'''
        count = count_colorings(parse_pd(TREFOIL), dihedral(4), by_orbit=True)
        self.assertEqual(count.total, 4)
        self.assertEqual(count.by_orbit, (2, 2))
        self.assertIsNone(count_colorings(parse_pd(TREFOIL), dihedral(4)).by_orbit)

    def test_9_threads(self):
        diagram = parse_pd(FIGURE_EIGHT)
        self.assertEqual(count_colorings(diagram, dihedral(5), threads=4).total, 25)

    def test_10_relabeling_keeps_counts(self):
        '''Carrying Q along a bijection of its elements leaves every count unchanged'''
        rng = np.random.default_rng(0)
        for q in (dihedral(5), dihedral(6), conjugation(symmetric_group(3)), conj_class(symmetric_group(4), 1)[0]):
            pi = rng.permutation(q.size)
            table = np.empty_like(q.op)
            table[np.ix_(pi, pi)] = pi[q.op]
            relabeled = validate(table)
            for pd in (TREFOIL, FIGURE_EIGHT):
                diagram = parse_pd(pd)
                self.assertEqual(
                    count_colorings(diagram, relabeled).total, count_colorings(diagram, q).total)
