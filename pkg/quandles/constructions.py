'''Quandle families. Every constructor validates its table and attaches a
ConstructionRecord from which the identical table can be rebuilt.

Product carriers (X x A, F_p^n) are ordered lexicographically.
'''
import logging
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import conf
from .core import validate
from .exceptions import CocycleError, NotFixed, ParameterError, VerificationFailure
from .formats import automorphism_from_dict, group_from_dict, group_to_dict
from .groups import conjugacy_class, cosets, is_prime, matrix_group_sl2
from .permutations import DTYPE

logger = logging.getLogger(__name__)

FAMILIES = (
    'trivial', 'dihedral', 'cocycle', 'conj', 'conj_class', 'phi_space', 'vedernikov', 'alexander', 'section5',
    'unipotent_class',
)


@dataclass(frozen=True)
class ConstructionRecord:
    '''How a quandle was built: family tag, JSON-ready parameters and element labels'''
    family: str
    parameters: dict
    labeling: tuple = field(default=None, compare=False)

    def replay(self):
        return build(self.family, self.parameters)


def _finish(table, family, parameters, labels=None):
    labels = tuple(labels) if labels is not None else None
    quandle = validate(table, labels=labels)
    logger.debug('built %s quandle of size %d', family, quandle.size)
    return quandle.with_provenance(ConstructionRecord(family, parameters, labels))


def _check_positive(name, value):
    if value < 1:
        raise ParameterError('{} must be at least 1, got {}'.format(name, value))


def _check_prime(p):
    if not is_prime(p):
        raise ParameterError('{} is not prime'.format(p))


def trivial(n):
    '''q▷r = r'''
    _check_positive('n', n)
    return _finish(np.tile(np.arange(n), (n, 1)), 'trivial', {'n': n})


def dihedral(n):
    '''R_n: i▷j = 2i − j mod n'''
    _check_positive('n', n)
    points = np.arange(n)
    return _finish((2 * points[:, None] - points[None, :]) % n, 'dihedral', {'n': n})


def cocycle_extension(x_size, group, cocycle):
    '''(x, a)▷(y, b) = (y, b + F(x, y)) on X x A; element (x, a) has index x·|A| + a'''
    _check_positive('x_size', x_size)
    group.check_abelian()
    values = np.asarray(cocycle, dtype=DTYPE)
    if values.shape != (x_size, x_size):
        raise ParameterError('cocycle must be an {0} x {0} table'.format(x_size))
    if np.any((values < 0) | (values >= group.order)):
        raise ParameterError('cocycle values must be group indices 0..{}'.format(group.order - 1))
    moved = np.flatnonzero(np.diag(values) != group.identity)
    if len(moved):
        raise CocycleError(moved.tolist())
    k = group.order
    xs, parts = np.divmod(np.arange(x_size * k), k)
    shifted = group.mul_many(parts[None, :], values[xs[:, None], xs[None, :]])
    table = xs[None, :] * k + shifted
    labels = ['({},{})'.format(x, group.label(a)) for x, a in zip(xs.tolist(), parts.tolist())]
    parameters = {'x_size': x_size, 'group': group_to_dict(group), 'cocycle': values.tolist()}
    return _finish(table, 'cocycle', parameters, labels)


def conjugation(group):
    '''g▷h = g⁻¹hg on all of G'''
    xs = np.arange(group.order)
    table = group.mul_many(group.mul_many(group.inverses[:, None], xs[None, :]), xs[:, None])
    labels = [group.label(g) for g in xs]
    return _finish(table, 'conj', {'group': group_to_dict(group)}, labels)


def conj_class(group, g, family='conj_class', parameters=None):
    '''Conjugation restricted to the conjugacy class of g, in increasing index order'''
    if not 0 <= g < group.order:
        raise ParameterError('element {} outside 0..{}'.format(g, group.order - 1))
    members = np.array(conjugacy_class(group, g), dtype=DTYPE)
    position = np.full(group.order, -1, dtype=DTYPE)
    position[members] = np.arange(len(members))
    products = group.mul_many(group.mul_many(group.inverses[members][:, None], members[None, :]), members[:, None])
    labels = [group.label(int(h)) for h in members]
    if parameters is None:
        parameters = {'group': group_to_dict(group), 'element': int(g)}
    quandle = _finish(position[products], family, parameters, labels)
    return quandle, members


def _phi_product(group, automorphism, x, y):
    '''xφ(x⁻¹y), elementwise'''
    return group.mul_many(x, automorphism.map[group.mul_many(group.inverses[x], y)])


def phi_space(group, automorphism, subgroup, seed=None, family='phi_space', parameters=None):
    '''xH▷yH = xφ(x⁻¹y)H on the left cosets of H ⊆ G^φ.

    The table is computed on canonical representatives; recomputing with
    other representatives must land in the same coset, checked on every pair
    of group elements for small groups and on random pairs otherwise.
    '''
    group.check_subgroup(subgroup)
    moved = [int(h) for h in subgroup if automorphism.map[h] != h]
    if moved:
        raise NotFixed(moved)
    space = cosets(group, subgroup)
    reps = np.array(space.reps, dtype=DTYPE)
    table = space.index_of[_phi_product(group, automorphism, reps[:, None], reps[None, :])]

    k = group.order
    if k <= conf.get('EXHAUSTIVE_WELL_DEFINED'):
        xs, ys = np.meshgrid(np.arange(k), np.arange(k), indexing='ij')
        xs, ys = xs.ravel(), ys.ravel()
    else:
        rng = np.random.default_rng(conf.pick('DEFAULT_SEED', seed))
        xs, ys = rng.integers(0, k, size=(2, conf.get('RANDOM_SAMPLES')))
    got = space.index_of[_phi_product(group, automorphism, xs, ys)]
    expected = table[space.index_of[xs], space.index_of[ys]]
    bad = np.flatnonzero(got != expected)
    if len(bad):
        raise VerificationFailure('coset operation depends on representatives at (x, y) = ({}, {})'.format(
            int(xs[bad[0]]), int(ys[bad[0]])))
    logger.debug('phi_space: %d cosets, well-definedness checked on %d pairs', len(space), len(xs))

    if parameters is None:
        parameters = {
            'group': group_to_dict(group), 'automorphism': automorphism.map.tolist(),
            'subgroup': list(space.subgroup),
        }
    labels = [space.label(c) for c in range(len(space))]
    return _finish(table, family, parameters, labels), space


def vedernikov_product(group, automorphism, x, y):
    '''x▷′y = xφ(yx⁻¹), elementwise'''
    return group.mul_many(x, automorphism.map[group.mul_many(y, group.inverses[x])])


def vedernikov(group, automorphism):
    xs = np.arange(group.order)
    table = vedernikov_product(group, automorphism, xs[:, None], xs[None, :])
    parameters = {'group': group_to_dict(group), 'automorphism': automorphism.map.tolist()}
    return _finish(table, 'vedernikov', parameters, [group.label(g) for g in xs])


def _rank_mod_p(matrix, p):
    '''Rank over F_p by Gaussian elimination'''
    m = np.array(matrix, dtype=DTYPE) % p
    rank = 0
    rows, cols = m.shape
    for col in range(cols):
        pivots = np.flatnonzero(m[rank:, col]) + rank
        if not len(pivots):
            continue
        m[[rank, pivots[0]]] = m[[pivots[0], rank]]
        m[rank] = m[rank] * pow(int(m[rank, col]), -1, p) % p
        others = np.arange(rows) != rank
        m[others] = (m[others] - np.outer(m[others, col], m[rank])) % p
        rank += 1
        if rank == rows:
            break
    return rank


def vectors(p, n):
    '''F_p^n in lexicographic order, one row per vector'''
    return np.array(list(product(range(p), repeat=n)), dtype=DTYPE).reshape(p ** n, n)


def _vector_labels(rows):
    if rows.shape[1] == 1:
        return [str(v) for v in rows[:, 0].tolist()]
    return ['(' + ','.join(str(x) for x in v) + ')' for v in rows.tolist()]


def alexander(p, n, a):
    '''v▷w = v + a(w − v) on F_p^n; `a` is a scalar or an invertible n x n matrix'''
    _check_prime(p)
    _check_positive('n', n)
    if np.ndim(a) == 0:
        matrix = int(a) * np.eye(n, dtype=DTYPE)
        stored = int(a) % p
    else:
        matrix = np.asarray(a, dtype=DTYPE)
        if matrix.shape != (n, n):
            raise ParameterError('a must be a scalar or an {0} x {0} matrix'.format(n))
        stored = (matrix % p).tolist()
    if _rank_mod_p(matrix, p) < n:
        raise ParameterError('a is not invertible mod {}'.format(p))
    points = vectors(p, n)
    weights = p ** np.arange(n - 1, -1, -1, dtype=DTYPE)
    diff = points[None, :, :] - points[:, None, :]
    image = (points[:, None, :] + diff @ matrix.T) % p
    return _finish(image @ weights, 'alexander', {'p': p, 'n': n, 'a': stored}, _vector_labels(points))


def section5_example(p, n):
    '''x▷y = (y₁, y₂ + (y₁ − x₁)², ..., yₙ + (y₁ − x₁)ⁿ) mod p'''
    _check_prime(p)
    if p < 3:
        raise ParameterError('p must be an odd prime')
    if n < 2:
        raise ParameterError('n must be at least 2')
    points = vectors(p, n)
    weights = p ** np.arange(n - 1, -1, -1, dtype=DTYPE)
    delta = (points[None, :, 0] - points[:, None, 0]) % p
    shift = np.zeros((len(points), len(points), n), dtype=DTYPE)
    for k in range(2, n + 1):
        shift[:, :, k - 1] = pow_mod(delta, k, p)
    image = (points[None, :, :] + shift) % p
    return _finish(image @ weights, 'section5', {'p': p, 'n': n}, _vector_labels(points))


def pow_mod(values, exponent, p):
    result = np.ones_like(values)
    for _ in range(exponent):
        result = result * values % p
    return result


def unipotent_class_quandle(p):
    '''Conjugacy class of J₁ = [[1,1],[0,1]] in SL₂(F_p) under g▷h = g⁻¹hg.

    Returns the quandle, the group and the class members as group indices.
    '''
    group = matrix_group_sl2(p)
    j1 = group.index_of_matrix([[1, 1], [0, 1]])
    quandle, members = conj_class(group, j1, family='unipotent_class', parameters={'p': p})
    return quandle, group, members


def build(family, parameters):
    '''Rebuild a quandle from a family tag and JSON parameters'''
    if family not in FAMILIES:
        raise ParameterError('unknown family {!r}; choose from {}'.format(family, ', '.join(FAMILIES)))
    try:
        if family == 'trivial':
            return trivial(parameters['n'])
        if family == 'dihedral':
            return dihedral(parameters['n'])
        if family == 'alexander':
            return alexander(parameters['p'], parameters['n'], parameters['a'])
        if family == 'section5':
            return section5_example(parameters['p'], parameters['n'])
        if family == 'unipotent_class':
            return unipotent_class_quandle(parameters['p'])[0]
        group = group_from_dict(parameters['group'])
        if family == 'cocycle':
            return cocycle_extension(parameters['x_size'], group, parameters['cocycle'])
        if family == 'conj':
            return conjugation(group)
        if family == 'conj_class':
            return conj_class(group, parameters['element'])[0]
        automorphism = automorphism_from_dict(group, parameters['automorphism'])
        if family == 'vedernikov':
            return vedernikov(group, automorphism)
        return phi_space(group, automorphism, parameters['subgroup'])[0]
    except KeyError as error:
        raise ParameterError('{} needs parameter {}'.format(family, error))
