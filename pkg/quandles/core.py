'''Finite quandles on {0..n-1} given by their operation tables.

op[q][r] is q▷r and inv_op[q][r] is q▷⁻¹r. Both tables are always
materialised and frozen once the axioms have been checked.
'''
import logging
from dataclasses import dataclass, field

import numpy as np

from . import conf
from .exceptions import AxiomViolation, InvalidQuandle, ParameterError, RangeError
from .permutations import DTYPE, as_permutation, integer_array, inverse

logger = logging.getLogger(__name__)


def _frozen(table):
    table = np.array(table, dtype=DTYPE)
    table.setflags(write=False)
    return table


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    '''A validated quandle. Build one with validate() or a constructor, never directly'''
    op: np.ndarray
    inv_op: np.ndarray
    labels: tuple = None
    provenance: object = field(default=None, compare=False)

    @property
    def size(self):
        return len(self.op)

    def __len__(self):
        return len(self.op)

    def __repr__(self):
        family = getattr(self.provenance, 'family', None)
        return '<FiniteQuandle size={}{}>'.format(self.size, ' ' + family if family else '')

    def act(self, q, r):
        return int(self.op[q, r])

    def act_inv(self, q, r):
        return int(self.inv_op[q, r])

    def label(self, q):
        return self.labels[q] if self.labels else str(q)

    def same_table(self, other):
        return self.size == other.size and bool(np.array_equal(self.op, other.op))

    def with_provenance(self, provenance):
        return FiniteQuandle(self.op, self.inv_op, self.labels, provenance)


@dataclass(frozen=True, eq=False)
class ElementSymmetry:
    '''s_q: r ↦ q▷r'''
    base: int
    perm: np.ndarray

    @property
    def inverse(self):
        return inverse(self.perm)

    def __call__(self, r):
        return int(self.perm[r])

    def is_automorphism_of(self, quandle):
        p = self.perm
        return bool(np.array_equal(p[quandle.op], quandle.op[np.ix_(p, p)]))


def find_violations(table, inv_table=None, cap=None):
    '''Every axiom violation of `table` (up to `cap` witnesses) and the inverse table.

    The inverse table is None when some row is not a permutation.
    '''
    cap = conf.pick('WITNESS_CAP', cap)
    n = len(table)
    points = np.arange(n)
    violations = []

    def add(axiom, *witness):
        if len(violations) < cap:
            violations.append(AxiomViolation(axiom, tuple(int(w) for w in witness)))

    for q in np.flatnonzero(table[points, points] != points):
        add(1, q)

    rows_ok = True
    for q in range(n):
        counts = np.bincount(table[q], minlength=n)
        if np.any(counts != 1):
            rows_ok = False
            add(2, q, np.flatnonzero(counts == 0)[0])
    if not rows_ok:
        return violations, None

    computed = np.empty_like(table)
    computed[points[:, None], table] = points[None, :]
    if inv_table is not None:
        for q, r in np.argwhere(inv_table != computed)[:cap]:
            add(2, q, r)
    inv_table = computed

    for q in range(n):
        row = table[q]
        lhs = row[table]
        rhs = table[np.ix_(row, row)]
        for r, s in np.argwhere(lhs != rhs):
            add(3, q, r, s)
            if len(violations) >= cap:
                return violations, inv_table
    return violations, inv_table


def validate(table, inv_table=None, labels=None, provenance=None):
    '''Check the three quandle axioms and return the quandle, or raise InvalidQuandle'''
    table = integer_array(table, what='operation table')
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise ParameterError('operation table must be a nonempty n x n table, got shape {}'.format(table.shape))
    n = len(table)
    bad = np.argwhere((table < 0) | (table >= n))
    if len(bad):
        raise RangeError([tuple(int(i) for i in pos) for pos in bad], n)
    if inv_table is not None:
        inv_table = integer_array(inv_table, what='inverse table')
        if inv_table.shape != table.shape:
            raise ParameterError('inverse table shape {} differs from {}'.format(inv_table.shape, table.shape))
        bad = np.argwhere((inv_table < 0) | (inv_table >= n))
        if len(bad):
            raise RangeError([tuple(int(i) for i in pos) for pos in bad], n)
    if labels is not None and len(labels) != n:
        raise ParameterError('{} labels given for {} elements'.format(len(labels), n))

    violations, inv_table = find_violations(table, inv_table)
    if violations:
        raise InvalidQuandle(violations)
    logger.debug('validated quandle of size %d', n)
    return FiniteQuandle(_frozen(table), _frozen(inv_table), tuple(labels) if labels is not None else None, provenance)


def _check_element(quandle, q):
    if not 0 <= q < quandle.size:
        raise IndexError('element {} outside 0..{}'.format(q, quandle.size - 1))


def symmetry(quandle, q):
    _check_element(quandle, q)
    return ElementSymmetry(int(q), as_permutation(quandle.op[q]))


def right_translation(quandle, q):
    '''t_q: r ↦ r▷q, the q-th column; not necessarily a bijection'''
    _check_element(quandle, q)
    return as_permutation(quandle.op[:, q])


def closure_of(quandle, subset):
    '''Smallest superset of `subset` closed under ▷ and ▷⁻¹, as a sorted array'''
    members = np.unique(np.asarray(list(subset), dtype=DTYPE))
    while True:
        block = np.ix_(members, members)
        grown = np.union1d(members, np.union1d(quandle.op[block].ravel(), quandle.inv_op[block].ravel()))
        if len(grown) == len(members):
            return members
        members = grown


def subquandle_closure(quandle, subset):
    '''The subquandle generated by `subset`, re-indexed, with its embedding into `quandle`'''
    subset = list(subset)
    if not subset:
        raise ValueError('subquandle_closure needs a nonempty subset')
    embedding = closure_of(quandle, subset)
    position = np.full(quandle.size, -1, dtype=DTYPE)
    position[embedding] = np.arange(len(embedding))
    block = np.ix_(embedding, embedding)
    labels = tuple(quandle.label(int(q)) for q in embedding) if quandle.labels else None
    sub = FiniteQuandle(_frozen(position[quandle.op[block]]), _frozen(position[quandle.inv_op[block]]), labels)
    return sub, as_permutation(embedding)
