'''Finite groups: permutation groups closed from generators, explicit groups on
indices 0..k-1, automorphisms, fixed subgroups and coset spaces.

An explicit group keeps a Cayley table on indices while its order stays under
the TABLE_LIMIT setting; bigger permutation-backed groups multiply by
composing permutations and looking the product up.
'''
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as orderings, product

import numpy as np

from . import conf
from .exceptions import (
    CapExceeded, InvalidGroup, NotAbelian, NotASubgroup, NotAutomorphism, ParameterError, TooLarge,
)
from .permutations import DTYPE, as_permutation, format_cycles, identity, integer_array, is_permutation, key

logger = logging.getLogger(__name__)


def is_prime(p):
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


class PermutationGroup:
    '''Subgroup of Sym({0..m-1}) given by generators.

    Elements are enumerated by breadth-first closure the first time they are
    needed; orbits only use the generators. A known order (from a stabilizer
    chain) can be supplied so that order queries never force the closure.
    '''

    def __init__(self, degree, generators=(), cap=None, order=None):
        self.degree = degree
        self.cap = conf.pick('CLOSURE_CAP', cap)
        gens, seen = [], {key(identity(degree))}
        for gen in generators:
            gen = as_permutation(gen)
            if not is_permutation(gen, degree):
                raise InvalidGroup('generator {} is not a permutation of 0..{}'.format(gen.tolist(), degree - 1))
            if key(gen) not in seen:
                seen.add(key(gen))
                gens.append(gen)
        self.generators = tuple(gens)
        self._order = order
        self._elements = None
        self._index = None

    def __repr__(self):
        return '<PermutationGroup degree={} generators={}>'.format(self.degree, len(self.generators))

    def _close(self):
        start = identity(self.degree)
        elements, index = [start], {key(start): 0}
        frontier = [start]
        while frontier:
            batch = np.array(frontier, dtype=DTYPE).reshape(len(frontier), self.degree)
            frontier = []
            for gen in self.generators:
                for row in batch[:, gen]:
                    row_key = key(row)
                    if row_key in index:
                        continue
                    if len(elements) >= self.cap:
                        logger.warning('closure stopped at cap %d', self.cap)
                        raise CapExceeded(self.cap)
                    index[row_key] = len(elements)
                    row = as_permutation(row)
                    elements.append(row)
                    frontier.append(row)
        table = np.array(elements, dtype=DTYPE).reshape(len(elements), self.degree)
        table.setflags(write=False)
        self._elements, self._index = table, index
        logger.debug('closed %d generators on %d points: order %d', len(self.generators), self.degree, len(elements))

    @property
    def elements(self):
        if self._elements is None:
            self._close()
        return self._elements

    @property
    def order(self):
        if self._elements is None and self._order is not None:
            return self._order
        return len(self.elements)

    def __len__(self):
        return self.order

    def __contains__(self, perm):
        self.elements
        return key(perm) in self._index

    def index(self, perm):
        self.elements
        return self._index.get(key(perm))

    def orbit(self, point):
        '''Sorted orbit of `point`, from the generators alone'''
        seen = {int(point)}
        frontier = [int(point)]
        while frontier:
            nxt = []
            for gen in self.generators:
                for x in frontier:
                    y = int(gen[x])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def orbits(self):
        assigned = np.full(self.degree, -1, dtype=DTYPE)
        result = []
        for point in range(self.degree):
            if assigned[point] < 0:
                orbit = self.orbit(point)
                assigned[orbit] = len(result)
                result.append(orbit)
        return result

    def is_transitive(self):
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def stabilizer(self, point):
        '''Indices of the elements fixing `point`'''
        return np.flatnonzero(self.elements[:, point] == point)

    def to_finite_group(self, cap=None):
        if cap is not None and self.order > cap:
            raise CapExceeded(cap, 'explicit group')
        generators = [self.index(gen) for gen in self.generators]
        return FiniteGroup(permutations=self.elements, generators=generators)


def close(generators, degree=None, cap=None):
    '''Closure of `generators` under composition, enumerated eagerly'''
    generators = [as_permutation(g) for g in generators]
    if degree is None:
        degree = len(generators[0]) if generators else 0
    group = PermutationGroup(degree, generators, cap=cap)
    group.elements
    return group


class FiniteGroup:
    '''A group on indices 0..k-1.

    Backed either by a Cayley table (`table[a, b]` is the index of ab) or by a
    closed set of permutations, in which case ab is a∘b.
    '''

    def __init__(self, table=None, permutations=None, labels=None, generators=None, table_limit=None):
        if (table is None) == (permutations is None):
            raise ValueError('give exactly one of table or permutations')
        self.table_limit = conf.pick('TABLE_LIMIT', table_limit)
        self.labels = tuple(labels) if labels is not None else None
        self._generators = list(generators) if generators is not None else None
        self.spec = None
        self._perms = None
        self._table = None
        if table is not None:
            self._table = np.array(table, dtype=DTYPE)
            self._table.setflags(write=False)
            k = len(self._table)
            points = np.arange(k)
            rows = np.flatnonzero(np.all(self._table == points[None, :], axis=1))
            if len(rows) != 1:
                raise InvalidGroup('no unique identity element in the table')
            self.identity = int(rows[0])
            inverses = np.argmax(self._table == self.identity, axis=1)
            if not np.all(self._table[points, inverses] == self.identity):
                raise InvalidGroup('some element has no inverse')
        else:
            self._perms = np.array(permutations, dtype=DTYPE)
            self._perms.setflags(write=False)
            k, degree = self._perms.shape
            self._index = {key(row): i for i, row in enumerate(self._perms)}
            if len(self._index) != k:
                raise InvalidGroup('repeated permutations')
            rng = np.random.default_rng(0)
            self._weights = rng.integers(1, 2 ** 32, size=degree, dtype=DTYPE)
            hashes = self._perms @ self._weights
            self._hash_order = np.argsort(hashes, kind='stable')
            self._sorted_hashes = hashes[self._hash_order]
            ident = self._index.get(key(np.arange(degree)))
            if ident is None:
                raise InvalidGroup('permutation set lacks the identity')
            self.identity = ident
            inv_rows = np.argsort(self._perms, axis=1)
            inverses = self._lookup(inv_rows)
            if np.any(inverses < 0):
                raise InvalidGroup('permutation set is not closed under inversion')
        self.inverses = np.asarray(inverses, dtype=DTYPE)
        self.inverses.setflags(write=False)

    @classmethod
    def from_table(cls, table, labels=None, seed=None, samples=None):
        '''Validate a Cayley table and build the group.

        Associativity is checked on every triple for small orders and on
        random triples above the EXHAUSTIVE_ASSOCIATIVITY setting.
        '''
        table = integer_array(table, InvalidGroup, 'multiplication table')
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidGroup('multiplication table must be a nonempty k x k table')
        k = len(table)
        if np.any((table < 0) | (table >= k)):
            raise InvalidGroup('multiplication table entries must lie in 0..{}'.format(k - 1))
        if labels is not None and len(labels) != k:
            raise InvalidGroup('{} labels given for a group of order {}'.format(len(labels), k))
        points = np.arange(k)
        if np.any(np.sort(table, axis=1) != points[None, :]) or np.any(np.sort(table, axis=0) != points[:, None]):
            raise InvalidGroup('multiplication table is not a Latin square')
        group = cls(table=table, labels=labels)
        bad = group.associativity_witness(seed=seed, samples=samples)
        if bad is not None:
            raise InvalidGroup('multiplication is not associative at {}'.format(bad))
        return group

    @classmethod
    def from_permutations(cls, permutations, labels=None):
        perms = integer_array(permutations, InvalidGroup, 'permutation list')
        if labels is None:
            labels = [format_cycles(p) or '()' for p in perms]
        return cls(permutations=perms, labels=labels)

    def __repr__(self):
        return '<FiniteGroup order={}>'.format(self.order)

    @property
    def order(self):
        return len(self._table) if self._table is not None else len(self._perms)

    def __len__(self):
        return self.order

    def label(self, g):
        return self.labels[g] if self.labels else str(g)

    @property
    def is_permutation_backed(self):
        return self._perms is not None

    def permutation(self, g):
        if self._perms is None:
            raise TypeError('group is not permutation-backed')
        return self._perms[g]

    @property
    def permutations(self):
        return self._perms

    def _lookup(self, rows):
        rows = np.asarray(rows, dtype=DTYPE).reshape(-1, self._perms.shape[1])
        hashes = rows @ self._weights
        pos = np.clip(np.searchsorted(self._sorted_hashes, hashes), 0, len(self._perms) - 1)
        found = self._hash_order[pos]
        result = np.where(np.all(self._perms[found] == rows, axis=1), found, -1)
        for i in np.flatnonzero(result < 0):
            result[i] = self._index.get(key(rows[i]), -1)
        return result

    def index_of(self, perm):
        '''Index of a permutation in a permutation-backed group, or None'''
        return self._index.get(key(perm)) if self._perms is not None else None

    def lookup(self, rows):
        '''Indices of many permutations at once; -1 where a row is not in the group'''
        return self._lookup(rows)

    @property
    def has_table(self):
        return self._table is not None or self.order <= self.table_limit

    @property
    def table(self):
        if self._table is None:
            if self.order > self.table_limit:
                raise TooLarge('group of order {} is above the table limit {}'.format(self.order, self.table_limit))
            k = self.order
            built = np.empty((k, k), dtype=DTYPE)
            for a in range(k):
                built[a] = self._lookup(self._perms[a][self._perms])
            built.setflags(write=False)
            self._table = built
            logger.debug('built Cayley table for order %d', k)
        return self._table

    def mul(self, a, b):
        if self.has_table:
            return int(self.table[a, b])
        return int(self._index[key(self._perms[a][self._perms[b]])])

    def mul_many(self, a, b):
        '''Elementwise products of two broadcastable index arrays'''
        a, b = np.broadcast_arrays(np.asarray(a, dtype=DTYPE), np.asarray(b, dtype=DTYPE))
        if self.has_table:
            return self.table[a, b]
        flat_a, flat_b = a.ravel(), b.ravel()
        rows = np.take_along_axis(self._perms[flat_a], self._perms[flat_b], axis=1)
        return self._lookup(rows).reshape(a.shape)

    def inv(self, g):
        return int(self.inverses[g])

    def power(self, g, exponent):
        result, base = self.identity, g if exponent >= 0 else self.inv(g)
        for _ in range(abs(exponent)):
            result = self.mul(result, base)
        return result

    def element_order(self, g):
        x, n = g, 1
        while x != self.identity:
            x = self.mul(x, g)
            n += 1
        return n

    def associativity_witness(self, seed=None, samples=None):
        table = self.table
        k = len(table)
        if k <= conf.get('EXHAUSTIVE_ASSOCIATIVITY'):
            lhs = table[table]
            rhs = table[np.arange(k)[:, None, None], table[None, :, :]]
            bad = np.argwhere(lhs != rhs)
        else:
            rng = np.random.default_rng(conf.pick('DEFAULT_SEED', seed))
            a, b, c = rng.integers(0, k, size=(3, conf.pick('RANDOM_SAMPLES', samples)))
            mismatch = table[table[a, b], c] != table[a, table[b, c]]
            bad = np.stack([a, b, c], axis=1)[mismatch]
        return tuple(int(x) for x in bad[0]) if len(bad) else None

    def commuting_witness(self):
        '''A non-commuting pair, or None when the group is abelian'''
        for a in range(self.order):
            row = np.arange(self.order)
            mismatch = np.flatnonzero(self.mul_many(a, row) != self.mul_many(row, a))
            if len(mismatch):
                return a, int(mismatch[0])
        return None

    def is_abelian(self):
        return self.commuting_witness() is None

    def check_abelian(self):
        witness = self.commuting_witness()
        if witness is not None:
            raise NotAbelian(witness)

    def subgroup_witness(self, subset):
        '''A pair (a, b) of the subset with ab⁻¹ outside it, or None for a subgroup'''
        members = np.unique(np.asarray(list(subset), dtype=DTYPE))
        if len(members) == 0:
            return ()
        if members[0] < 0 or members[-1] >= self.order:
            raise ParameterError('subset entries must lie in 0..{}'.format(self.order - 1))
        inside = np.zeros(self.order, dtype=bool)
        inside[members] = True
        quotients = self.mul_many(members[:, None], self.inverses[members][None, :])
        bad = np.argwhere(~inside[quotients])
        if len(bad):
            i, j = bad[0]
            return int(members[i]), int(members[j])
        return None

    def check_subgroup(self, subset):
        witness = self.subgroup_witness(subset)
        if witness is not None:
            raise NotASubgroup(witness)

    def subgroup_closure(self, generators):
        '''Sorted elements of the subgroup generated by `generators`'''
        seen = {self.identity}
        frontier = [self.identity]
        generators = list(generators)
        while frontier:
            nxt = []
            for x in frontier:
                for s in generators:
                    y = self.mul(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    @cached_property
    def generating_set(self):
        if self._generators is not None:
            return list(self._generators)
        gens, members = [], {self.identity}
        for g in range(self.order):
            if g not in members:
                gens.append(g)
                members = set(self.subgroup_closure(gens))
        return gens


class MatrixGroup(FiniteGroup):
    '''A finite group of 2x2 matrices over F_p, one index per matrix'''

    def __init__(self, table, matrices, p, labels=None):
        super().__init__(table=table, labels=labels)
        self.matrices = matrices
        self.p = p
        self._codes = {tuple(int(x) for x in m.ravel()): i for i, m in enumerate(matrices)}

    def index_of_matrix(self, matrix):
        return self._codes.get(tuple(int(x) % self.p for x in np.asarray(matrix).ravel()))


def matrix_label(matrix):
    (a, b), (c, d) = matrix
    return '[[{},{}],[{},{}]]'.format(a, b, c, d)


def matrix_group_sl2(p):
    '''SL₂(F_p), matrices in lexicographic order of their entries (a, b, c, d)'''
    if not is_prime(p):
        raise ParameterError('{} is not prime'.format(p))
    if p > conf.get('SL2_MAX_PRIME'):
        raise TooLarge('SL2 is limited to p <= {}'.format(conf.get('SL2_MAX_PRIME')))
    entries = np.array(list(product(range(p), repeat=4)), dtype=DTYPE)
    entries = entries[(entries[:, 0] * entries[:, 3] - entries[:, 1] * entries[:, 2]) % p == 1]
    matrices = entries.reshape(-1, 2, 2)
    k = len(matrices)
    weights = np.array([p ** 3, p ** 2, p, 1], dtype=DTYPE)
    lookup = np.full(p ** 4, -1, dtype=DTYPE)
    lookup[entries @ weights] = np.arange(k)
    table = np.empty((k, k), dtype=DTYPE)
    for a in range(k):
        products = np.einsum('ij,bjk->bik', matrices[a], matrices) % p
        table[a] = lookup[products.reshape(k, 4) @ weights]
    logger.debug('SL2(F_%d) has order %d', p, k)
    labels = [matrix_label(m.tolist()) for m in matrices]
    group = MatrixGroup(table, matrices, p, labels=labels)
    group.spec = {'family': 'sl2', 'p': p}
    return group


def cyclic_group(n):
    if n < 1:
        raise ParameterError('cyclic group order must be positive')
    points = np.arange(n)
    group = FiniteGroup(table=(points[:, None] + points[None, :]) % n, labels=[str(i) for i in range(n)])
    group.spec = {'family': 'cyclic', 'n': n}
    return group


def symmetric_group(n):
    '''Sym({0..n-1}) with elements in lexicographic order of their images'''
    if n < 1:
        raise ParameterError('symmetric group degree must be positive')
    group = FiniteGroup.from_permutations(list(orderings(range(n))))
    group.spec = {'family': 'symmetric', 'n': n}
    return group


def conjugacy_class(group, g):
    '''Sorted {x⁻¹gx : x in G}'''
    xs = np.arange(group.order)
    return sorted(set(group.mul_many(group.mul_many(group.inverses, g), xs).tolist()))


@dataclass(frozen=True, eq=False)
class GroupAutomorphism:
    group: FiniteGroup
    map: np.ndarray

    def __call__(self, g):
        return int(self.map[g])

    @classmethod
    def checked(cls, group, mapping):
        '''Validate `mapping` as an automorphism of `group`.

        The homomorphism law is checked against a generating set, which
        covers every pair by induction on word length.
        '''
        mapping = integer_array(mapping, NotAutomorphism, 'automorphism map')
        k = group.order
        if mapping.shape != (k,) or not is_permutation(mapping, k):
            raise NotAutomorphism('map is not a bijection of 0..{}'.format(k - 1))
        if mapping[group.identity] != group.identity:
            raise NotAutomorphism('map moves the identity')
        xs = np.arange(k)
        for s in group.generating_set:
            lhs = mapping[group.mul_many(xs, s)]
            rhs = group.mul_many(mapping, mapping[s])
            bad = np.flatnonzero(lhs != rhs)
            if len(bad):
                raise NotAutomorphism('map(xy) != map(x)map(y) for (x, y) = ({}, {})'.format(int(bad[0]), s))
        mapping = mapping.copy()
        mapping.setflags(write=False)
        return cls(group, mapping)


def identity_automorphism(group):
    return GroupAutomorphism.checked(group, np.arange(group.order))


def inner_automorphism(group, g):
    '''x ↦ gxg⁻¹'''
    xs = np.arange(group.order)
    return GroupAutomorphism.checked(group, group.mul_many(group.mul_many(g, xs), group.inv(g)))


def power_automorphism(group, exponent):
    '''x ↦ x^exponent; an automorphism of abelian groups with exponent prime to the order'''
    group.check_abelian()
    return GroupAutomorphism.checked(group, [group.power(x, exponent) for x in range(group.order)])


def _extend_homomorphism(group, generators, images):
    mapping = np.full(group.order, -1, dtype=DTYPE)
    mapping[group.identity] = group.identity
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(generators, images):
                y, value = group.mul(x, s), group.mul(int(mapping[x]), t)
                if mapping[y] < 0:
                    mapping[y] = value
                    nxt.append(y)
                elif mapping[y] != value:
                    return None
        frontier = nxt
    return mapping


def automorphisms(group, limit=None):
    '''Every automorphism of a small group, by assigning generator images of matching order'''
    limit = conf.pick('SEARCH_LIMIT', limit)
    if group.order > limit:
        raise TooLarge('automorphism enumeration is limited to order {}'.format(limit))
    gens = group.generating_set
    orders = [group.element_order(g) for g in range(group.order)]
    candidates = [[x for x in range(group.order) if orders[x] == orders[s]] for s in gens]
    found = []
    for images in product(*candidates):
        mapping = _extend_homomorphism(group, gens, images)
        if mapping is not None and len(np.unique(mapping)) == group.order:
            found.append(GroupAutomorphism.checked(group, mapping))
    logger.debug('group of order %d has %d automorphisms', group.order, len(found))
    return found


def fixed_subgroup(group, automorphism):
    '''G^φ = {g : φ(g) = g}'''
    fixed = np.flatnonzero(automorphism.map == np.arange(group.order))
    group.check_subgroup(fixed)
    return tuple(int(g) for g in fixed)


@dataclass(frozen=True, eq=False)
class CosetSpace:
    '''Left cosets gH; each coset is represented by its smallest element'''
    group: FiniteGroup
    subgroup: tuple
    reps: tuple
    index_of: np.ndarray
    members: tuple

    def __len__(self):
        return len(self.reps)

    def coset(self, g):
        return int(self.index_of[g])

    def position(self, g):
        '''(coset index, position of g inside its sorted coset)'''
        c = self.coset(g)
        return c, self.members[c].index(int(g))

    def label(self, c):
        return self.group.label(self.reps[c]) + 'H'


def cosets(group, subgroup):
    group.check_subgroup(subgroup)
    members_h = np.array(sorted(set(int(h) for h in subgroup)), dtype=DTYPE)
    index_of = np.full(group.order, -1, dtype=DTYPE)
    reps, members = [], []
    for g in range(group.order):
        if index_of[g] >= 0:
            continue
        coset = np.sort(group.mul_many(g, members_h))
        index_of[coset] = len(reps)
        reps.append(g)
        members.append(tuple(int(x) for x in coset))
    index_of.setflags(write=False)
    if len(reps) * len(members_h) != group.order:
        raise InvalidGroup('coset sizes do not multiply to the group order')
    return CosetSpace(group, tuple(int(h) for h in members_h), tuple(reps), index_of, tuple(members))
