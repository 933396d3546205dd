'''Inner automorphism and transvection groups, orbits, connectedness,
automorphism and isomorphism search, and the coset realization of orbits.

Words in the symmetries are read right to left: the SignedWord
((a, 1), (b, -1)) is s_a ∘ s_b⁻¹.
'''
import logging
from dataclasses import dataclass, field

import numpy as np

from . import conf
from .constructions import phi_space, vedernikov_product
from .core import FiniteQuandle, closure_of
from .exceptions import (
    InvalidAction, NotAutomorphism, NotClosed, ParameterError, TooLarge, VerificationFailure,
)
from .groups import GroupAutomorphism, PermutationGroup, cosets
from .permutations import DTYPE, as_permutation, cycle_type, integer_array
from .workers import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedWord:
    letters: tuple = ()

    @property
    def exponent_sum(self):
        return sum(sign for _, sign in self.letters)

    def is_transvection(self):
        return self.exponent_sum == 0

    def __len__(self):
        return len(self.letters)

    def apply(self, target, point):
        forward, backward = _tables(target)
        for q, sign in reversed(self.letters):
            point = int((forward if sign > 0 else backward)[q, point])
        return point

    def permutation(self, target):
        forward, backward = _tables(target)
        perm = np.arange(forward.shape[1])
        for q, sign in reversed(self.letters):
            perm = (forward if sign > 0 else backward)[q][perm]
        return as_permutation(perm)

    def __str__(self):
        return ' '.join('s{}{}'.format(q, '' if sign > 0 else "'") for q, sign in self.letters) or 'id'


@dataclass(frozen=True, eq=False)
class QuandleAction:
    '''Q acting on {0..m-1}: act[q] is the permutation x ↦ q▷x'''
    quandle: FiniteQuandle
    set_size: int
    act: np.ndarray
    act_inv: np.ndarray


def _tables(target):
    if isinstance(target, QuandleAction):
        return target.act, target.act_inv
    return target.op, target.inv_op


def quandle_action(quandle, set_size, act):
    '''Validate bijectivity of every act[q] and act[q]∘act[r] = act[q▷r]∘act[q]'''
    act = integer_array(act, InvalidAction, 'action')
    n, m = quandle.size, set_size
    if act.shape != (n, m):
        raise InvalidAction('action needs one image list of length {} per element, {} in all'.format(m, n))
    if np.any((act < 0) | (act >= m)):
        raise InvalidAction('action images must lie in 0..{}'.format(m - 1))
    for q in range(n):
        if np.any(np.bincount(act[q], minlength=m) != 1):
            raise InvalidAction('act[{}] is not a bijection'.format(q))
    act_inv = np.empty_like(act)
    act_inv[np.arange(n)[:, None], act] = np.arange(m)[None, :]
    for q in range(n):
        lhs = act[q][act]
        rhs = act[quandle.op[q][:, None], act[q][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            r, x = bad[0]
            raise InvalidAction('q▷(r▷x) != (q▷r)▷(q▷x) at (q, r, x) = ({}, {}, {})'.format(q, int(r), int(x)))
    act.setflags(write=False)
    act_inv.setflags(write=False)
    return QuandleAction(quandle, m, act, act_inv)


def natural_action(quandle):
    return QuandleAction(quandle, quandle.size, quandle.op, quandle.inv_op)


def translation_action(quandle, set_size, shifts=None):
    '''x ↦ x + shift(q) on Z/m; every shift is 1 unless `shifts` is given'''
    shifts = np.ones(quandle.size, dtype=DTYPE) if shifts is None else integer_array(shifts, what='shifts')
    if shifts.shape != (quandle.size,):
        raise ParameterError('one shift per quandle element is required')
    act = (np.arange(set_size)[None, :] + shifts[:, None]) % set_size
    return quandle_action(quandle, set_size, act)


def inn(quandle, cap=None):
    '''Inn(Q) = ⟨s_q⟩'''
    return PermutationGroup(quandle.size, quandle.op, cap=cap)


def tr(quandle, cap=None):
    '''Tr(Q) generated by s_q ∘ s_0⁻¹'''
    return PermutationGroup(quandle.size, quandle.op[:, quandle.inv_op[0]], cap=cap)


def op_group(action, cap=None):
    return PermutationGroup(action.set_size, action.act, cap=cap)


def tr_action_group(action, cap=None):
    return PermutationGroup(action.set_size, action.act[:, action.act_inv[0]], cap=cap)


def normality_witness(quandle):
    '''A pair (inn generator q, tr generator r) with s_q t_r s_q⁻¹ outside Tr(Q), or None'''
    group = tr(quandle)
    for q in range(quandle.size):
        s, s_inv = quandle.op[q], quandle.inv_op[q]
        for r, gen in enumerate(group.generators):
            if s[gen[s_inv]] not in group:
                return q, r
    return None


def transvection_word_check(quandle, samples=None, seed=None, length=4):
    '''Random words with equal numbers of s and s⁻¹ letters; the permutations not in Tr(Q)'''
    rng = np.random.default_rng(conf.pick('DEFAULT_SEED', seed))
    group = tr(quandle)
    strays = []
    for _ in range(conf.pick('RANDOM_SAMPLES', samples)):
        signs = rng.permutation(np.repeat([1, -1], length))
        word = SignedWord(tuple(zip(rng.integers(0, quandle.size, size=2 * length).tolist(), signs.tolist())))
        if word.permutation(quandle) not in group:
            strays.append(word)
    return strays


@dataclass(frozen=True, eq=False)
class Saturation:
    '''The chain Z ⊆ QZ ⊆ Q²Z ⊆ ... up to its fixpoint'''
    chain: tuple

    @property
    def fixpoint(self):
        return self.chain[-1]

    @property
    def sizes(self):
        return [len(layer) for layer in self.chain]


def _start(subset):
    start = np.unique(np.asarray(list(subset), dtype=DTYPE))
    if not len(start):
        raise ParameterError('saturation needs a nonempty starting set')
    return start


def _saturate(step, subset):
    chain = [_start(subset)]
    while True:
        grown = np.union1d(chain[-1], step(chain[-1]))
        if len(grown) == len(chain[-1]):
            logger.debug('saturation stabilised after %d steps at %d elements', len(chain) - 1, len(grown))
            return Saturation(tuple(chain))
        chain.append(grown)


def saturate_forward(quandle, subset):
    return _saturate(lambda layer: quandle.op[:, layer].ravel(), subset)


def saturate_backward(quandle, subset):
    return _saturate(lambda layer: quandle.inv_op[:, layer].ravel(), subset)


def saturate_mixed(action, subset):
    '''Closure under every act[q] and act[q]⁻¹, i.e. the Op(Q, X)-orbit union'''
    if isinstance(action, FiniteQuandle):
        action = natural_action(action)
    return _saturate(lambda layer: np.concatenate([action.act[:, layer].ravel(), action.act_inv[:, layer].ravel()]), subset)


def transvection_layers(action, subset):
    '''Sizes of Q⁻ᵏQᵏZ for k = 0, 1, ... until the layer is the Tr(Q, X)-orbit union'''
    if isinstance(action, FiniteQuandle):
        action = natural_action(action)
    start = _start(subset)
    group = tr_action_group(action)
    target = sorted(set().union(*(group.orbit(z) for z in start.tolist())))
    sizes, forward = [], start
    while True:
        layer = forward
        for _ in sizes:
            layer = np.unique(action.act_inv[:, layer])
        sizes.append(len(layer))
        if layer.tolist() == target:
            logger.debug('transvection layers: %s', sizes)
            return sizes
        forward = np.unique(action.act[:, forward])


@dataclass(frozen=True, eq=False)
class OrbitDecomposition:
    '''Inn(Q)-orbits with a breadth-first tree per orbit.

    parent[x] is the element x was first reached from and via[x] the q with
    x = q▷parent[x]; both are -1 at the orbit bases.
    '''
    orbit_id: np.ndarray
    orbits: tuple
    parent: np.ndarray
    via: np.ndarray

    def __len__(self):
        return len(self.orbits)

    @property
    def bases(self):
        return [orbit[0] for orbit in self.orbits]

    def orbit_of(self, x):
        return self.orbits[self.orbit_id[x]]

    def word(self, x):
        '''Signed word carrying the base of x's orbit to x'''
        letters = []
        while self.parent[x] >= 0:
            letters.append((int(self.via[x]), 1))
            x = self.parent[x]
        return SignedWord(tuple(letters))


def _sweep(quandle, base):
    n = quandle.size
    seen = np.zeros(n, dtype=bool)
    seen[base] = True
    parent = np.full(n, -1, dtype=DTYPE)
    via = np.full(n, -1, dtype=DTYPE)
    frontier = np.array([base], dtype=DTYPE)
    while len(frontier):
        images = quandle.op[:, frontier].T.ravel()
        values, first = np.unique(images, return_index=True)
        fresh = ~seen[values]
        new, index = values[fresh], first[fresh]
        seen[new] = True
        parent[new] = frontier[index // n]
        via[new] = index % n
        frontier = new
    members = np.flatnonzero(seen)
    return members, parent[members], via[members]


def orbits(quandle, threads=1):
    '''Inn(Q)-orbits by forward saturation from each unseen base, smallest base first'''
    n = quandle.size
    sweeps = {}
    if threads and threads > 1:
        sweeps = dict(zip(range(n), parallel_map(lambda base: _sweep(quandle, base), range(n), threads)))
    orbit_id = np.full(n, -1, dtype=DTYPE)
    parent = np.full(n, -1, dtype=DTYPE)
    via = np.full(n, -1, dtype=DTYPE)
    found = []
    for base in range(n):
        if orbit_id[base] >= 0:
            continue
        members, parents, vias = sweeps[base] if sweeps else _sweep(quandle, base)
        orbit_id[members] = len(found)
        parent[members], via[members] = parents, vias
        found.append(tuple(int(x) for x in members))
    for array in (orbit_id, parent, via):
        array.setflags(write=False)
    logger.debug('%d orbits on %d elements', len(found), n)
    return OrbitDecomposition(orbit_id, tuple(found), parent, via)


@dataclass(frozen=True)
class Connectivity:
    '''Either witness words from 0 to every element, or two elements in different orbits'''
    connected: bool
    words: tuple = ()
    separated: tuple = None

    def __bool__(self):
        return self.connected


def is_connected(quandle, threads=1):
    decomposition = orbits(quandle, threads)
    saturated = saturate_forward(quandle, [0]).fixpoint
    if (len(saturated) == quandle.size) != (len(decomposition) == 1):
        raise VerificationFailure('forward saturation from 0 disagrees with the orbit decomposition')
    if len(decomposition) == 1:
        return Connectivity(True, words=tuple(decomposition.word(x) for x in range(quandle.size)))
    outside = next(x for x in range(quandle.size) if decomposition.orbit_id[x] != 0)
    return Connectivity(False, separated=(0, outside))


def _profiles(quandle):
    '''Isomorphism invariants per element: s_q cycle type, fixed points, orbit size, t_q image size'''
    n = quandle.size
    decomposition = orbits(quandle)
    fixed = np.sum(quandle.op == np.arange(n)[None, :], axis=1)
    return [
        (cycle_type(quandle.op[q]), int(fixed[q]), len(decomposition.orbit_of(q)), len(np.unique(quandle.op[:, q])))
        for q in range(n)
    ]


def _generating_sequence(quandle):
    sequence, covered = [], np.array([], dtype=DTYPE)
    for q in range(quandle.size):
        if len(covered) == quandle.size:
            break
        if q not in covered:
            sequence.append(q)
            covered = closure_of(quandle, sequence)
    return sequence


def _propagate(source, target, mapping, used):
    '''Extend a partial injective map along ▷ and ▷⁻¹; False on a conflict'''
    while True:
        domain = np.flatnonzero(mapping >= 0)
        image = mapping[domain]
        block, image_block = np.ix_(domain, domain), np.ix_(image, image)
        points = np.concatenate([source.op[block].ravel(), source.inv_op[block].ravel()])
        values = np.concatenate([target.op[image_block].ravel(), target.inv_op[image_block].ravel()])
        known = mapping[points]
        assigned = known >= 0
        if np.any(known[assigned] != values[assigned]):
            return False
        points, values = points[~assigned], values[~assigned]
        if not len(points):
            return True
        order = np.lexsort((values, points))
        points, values = points[order], values[order]
        first = np.r_[True, points[1:] != points[:-1]]
        if np.any(values != values[first][np.cumsum(first) - 1]):
            return False
        points, values = points[first], values[first]
        if np.any(used[values]) or len(np.unique(values)) != len(values):
            return False
        mapping[points] = values
        used[values] = True


class _Search:
    '''Backtracking over images of a generating sequence, pruned by invariants'''

    def __init__(self, source, target):
        self.source, self.target = source, target
        self.sequence = _generating_sequence(source)
        profiles = _profiles(target)
        wanted = _profiles(source)
        self.candidates = {g: [c for c in range(target.size) if profiles[c] == wanted[g]] for g in self.sequence}
        self.nodes = 0

    def start(self, fixed=()):
        mapping = np.full(self.source.size, -1, dtype=DTYPE)
        used = np.zeros(self.target.size, dtype=bool)
        for a, b in fixed:
            if mapping[a] >= 0 and mapping[a] != b or (mapping[a] < 0 and used[b]):
                return None
            if mapping[a] < 0:
                mapping[a], used[b] = b, True
        if not _propagate(self.source, self.target, mapping, used):
            return None
        return mapping, used

    def first(self, state, level=0):
        '''First completion of `state`, or None'''
        if state is None:
            return None
        mapping, used = state
        while level < len(self.sequence) and mapping[self.sequence[level]] >= 0:
            level += 1
        if level == len(self.sequence):
            return as_permutation(mapping)
        g = self.sequence[level]
        for c in self.candidates[g]:
            if used[c]:
                continue
            self.nodes += 1
            branch, branch_used = mapping.copy(), used.copy()
            branch[g], branch_used[c] = c, True
            if _propagate(self.source, self.target, branch, branch_used):
                found = self.first((branch, branch_used), level + 1)
                if found is not None:
                    return found
        return None


def _check_limit(quandle, limit):
    limit = conf.pick('SEARCH_LIMIT', limit)
    if quandle.size > limit:
        raise TooLarge('search is limited to {} elements, got {}'.format(limit, quandle.size))


def aut(quandle, limit=None):
    '''Aut(Q) with a strong generating set.

    For each point g of a generating sequence, one automorphism fixing the
    earlier points is found for every reachable image of g; the order is the
    product of the numbers of reachable images.
    '''
    _check_limit(quandle, limit)
    search = _Search(quandle, quandle)
    generators, order = [], 1
    for level, g in enumerate(search.sequence):
        prefix = [(s, s) for s in search.sequence[:level]]
        reachable = 0
        for c in search.candidates[g]:
            if c == g:
                reachable += 1
                continue
            found = search.first(search.start(prefix + [(g, c)]), level + 1)
            if found is not None:
                reachable += 1
                generators.append(found)
        order *= reachable
    logger.debug('Aut search: %d nodes, order %d', search.nodes, order)
    return PermutationGroup(quandle.size, generators, order=order)


def is_homogeneous(quandle, limit=None):
    if is_connected(quandle):
        return True
    return aut(quandle, limit).is_transitive()


def iso_search(first, second, limit=None):
    '''An isomorphism first → second as an index map, or None'''
    if first.size != second.size:
        return None
    _check_limit(first, limit)
    if sorted(_profiles(first)) != sorted(_profiles(second)):
        return None
    search = _Search(first, second)
    found = search.first(search.start())
    logger.debug('isomorphism search: %d nodes', search.nodes)
    return found


@dataclass(frozen=True)
class HomCheck:
    is_homomorphism: bool
    violations: tuple
    preserves_inverse: bool

    def __bool__(self):
        return self.is_homomorphism


def hom_check(mapping, first, second, cap=None):
    '''Check f(q▷r) = f(q)▷f(r) on every pair, and the same for ▷⁻¹'''
    f = integer_array(mapping, what='map')
    if f.shape != (first.size,) or np.any((f < 0) | (f >= second.size)):
        raise ParameterError('map must send each of the {} elements into 0..{}'.format(first.size, second.size - 1))
    block = np.ix_(f, f)
    bad = np.argwhere(f[first.op] != second.op[block])
    inverse_ok = bool(np.array_equal(f[first.inv_op], second.inv_op[block]))
    cap = conf.pick('WITNESS_CAP', cap)
    return HomCheck(len(bad) == 0, tuple((int(q), int(r)) for q, r in bad[:cap]), inverse_ok)


@dataclass(frozen=True, eq=False)
class OpenSubquandleReport:
    subset: tuple
    meets_every_orbit: bool
    connected_and_proper: bool
    differing: tuple

    @property
    def hypothesis_holds(self):
        return self.meets_every_orbit and not self.connected_and_proper

    @property
    def orbits_agree(self):
        return not self.differing


def open_subquandle_check(quandle, subset):
    '''Compare ⟨s_u : u ∈ U⟩-orbits with Inn(Q)-orbits on Q for a subquandle U'''
    members = np.unique(np.asarray(list(subset), dtype=DTYPE))
    if not len(members):
        raise ParameterError('subquandle must be nonempty')
    closed = closure_of(quandle, members)
    if len(closed) != len(members):
        raise NotClosed(np.setdiff1d(closed, members).tolist())
    decomposition = orbits(quandle)
    restricted = PermutationGroup(quandle.size, quandle.op[members])
    differing = tuple(
        z for z in range(quandle.size) if restricted.orbit(z) != list(decomposition.orbit_of(z))
    )
    met = set(decomposition.orbit_id[members].tolist())
    return OpenSubquandleReport(
        tuple(members.tolist()),
        len(met) == len(decomposition),
        len(decomposition) == 1 and len(members) < quandle.size,
        differing,
    )


def acting_group(quandle, group, cap):
    cap = conf.pick('REALIZATION_CAP', cap)
    if group == 'tr':
        return tr(quandle).to_finite_group(cap)
    if group == 'inn':
        return inn(quandle).to_finite_group(cap)
    if group == 'aut':
        return aut(quandle).to_finite_group(cap)
    raise ParameterError('group must be one of tr, inn, aut')


def _conjugation_map(group, left, right_inv):
    '''g ↦ left ∘ g ∘ right_inv as indices of `group`, or None if it leaves the group'''
    images = group.lookup(left[group.permutations[:, right_inv]])
    return None if np.any(images < 0) else images


def _stabilizer(group, point):
    return tuple(int(g) for g in np.flatnonzero(group.permutations[:, point] == point))


@dataclass(frozen=True, eq=False)
class Realization:
    '''G/G_q with xH▷yH = xφ_q(x⁻¹y)H mapped onto the orbit Gq by π_q(gH) = g(q)'''
    basepoint: int
    group: object
    automorphism: GroupAutomorphism
    stabilizer: tuple
    quotient: FiniteQuandle
    space: object
    pi: np.ndarray
    orbit: tuple
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.checks.values())


def coset_realization(quandle, q, group='tr', cap=None, acting=None):
    '''Realize the orbit of q as a coset quandle of `group` (tr, inn or aut).

    φ_q(g) = s_q g s_q⁻¹ must be an automorphism of G, the stabilizer G_q
    must be fixed by φ_q, and π_q must be a bijection onto Gq preserving ▷
    in both directions. The outcome of each check is in `checks`. An explicit
    group built by an earlier call can be passed as `acting`.
    '''
    if not 0 <= q < quandle.size:
        raise ParameterError('basepoint {} outside 0..{}'.format(q, quandle.size - 1))
    G = acting if acting is not None else acting_group(quandle, group, cap)
    s, s_inv = quandle.op[q], quandle.inv_op[q]
    images = _conjugation_map(G, s, s_inv)
    if images is None:
        raise VerificationFailure('conjugation by s_{} leaves the group'.format(q))
    try:
        phi = GroupAutomorphism.checked(G, images)
    except NotAutomorphism as error:
        raise VerificationFailure('φ_{} is not an automorphism: {}'.format(q, error))
    stabilizer = _stabilizer(G, q)
    checks = {
        'stabilizer_fixed': bool(np.all(phi.map[list(stabilizer)] == stabilizer)),
        'stabilizer_commutes': all(
            np.array_equal(G.permutation(h)[s], s[G.permutation(h)]) for h in stabilizer
        ),
    }
    orbit = tuple(PermutationGroup(quandle.size, G.permutations[G.generating_set]).orbit(q))
    if not checks['stabilizer_fixed']:
        return Realization(q, G, phi, stabilizer, None, None, None, orbit, checks)

    quotient, space = phi_space(G, phi, stabilizer)
    pi = G.permutations[list(space.reps), q]
    checks['bijective'] = sorted(pi.tolist()) == list(orbit)
    checks['homomorphism'] = bool(np.array_equal(pi[quotient.op], quandle.op[np.ix_(pi, pi)]))
    if checks['bijective']:
        position = np.full(quandle.size, -1, dtype=DTYPE)
        position[pi] = np.arange(len(pi))
        block = np.ix_(np.array(orbit), np.array(orbit))
        lhs = position[quandle.op[block]]
        rhs = quotient.op[np.ix_(position[list(orbit)], position[list(orbit)])]
        checks['inverse_homomorphism'] = bool(np.array_equal(lhs, rhs))
    else:
        checks['inverse_homomorphism'] = False
    logger.debug('realized orbit of %d: |G| = %d, |G_q| = %d, checks %s', q, G.order, len(stabilizer), checks)
    return Realization(q, G, phi, stabilizer, quotient, space, as_permutation(pi), orbit, checks)


@dataclass(frozen=True)
class InterOrbitReport:
    q: int
    r: int
    group_order: int
    compatible: bool
    well_defined: bool
    pairs_checked: int
    reduces_to_phi: bool = None


def inter_orbit_action(quandle, q, r, group='tr', cap=None, seed=None):
    '''Check gG_q ▷ hG_r := gψ(g⁻¹h)G_r with ψ(g) = s_q g s_r⁻¹ against π_r(...) = g(q)▷h(r)'''
    for x in (q, r):
        if not 0 <= x < quandle.size:
            raise ParameterError('element {} outside 0..{}'.format(x, quandle.size - 1))
    G = acting_group(quandle, group, cap)
    psi = _conjugation_map(G, quandle.op[q], quandle.inv_op[r])
    if psi is None:
        raise VerificationFailure('s_{} g s_{}⁻¹ leaves the group'.format(q, r))
    space_q, space_r = cosets(G, _stabilizer(G, q)), cosets(G, _stabilizer(G, r))
    perms = G.permutations

    def act(g, h):
        return G.mul_many(g, psi[G.mul_many(G.inverses[g], h)])

    reps_q, reps_r = np.array(space_q.reps), np.array(space_r.reps)
    table = space_r.index_of[act(reps_q[:, None], reps_r[None, :])]
    pi_q, pi_r = perms[reps_q, q], perms[reps_r, r]
    compatible = bool(np.array_equal(pi_r[table], quandle.op[pi_q[:, None], pi_r[None, :]]))

    k = G.order
    if k <= conf.get('EXHAUSTIVE_WELL_DEFINED'):
        gs, hs = np.meshgrid(np.arange(k), np.arange(k), indexing='ij')
        gs, hs = gs.ravel(), hs.ravel()
    else:
        rng = np.random.default_rng(conf.pick('DEFAULT_SEED', seed))
        gs, hs = rng.integers(0, k, size=(2, conf.get('RANDOM_SAMPLES')))
    got = space_r.index_of[act(gs, hs)]
    well_defined = bool(np.array_equal(got, table[space_q.index_of[gs], space_r.index_of[hs]]))

    reduces = None
    if q == r:
        phi = _conjugation_map(G, quandle.op[q], quandle.inv_op[q])
        reduces = bool(np.array_equal(phi, psi))
    return InterOrbitReport(q, r, k, compatible, well_defined, len(gs), reduces)


@dataclass(frozen=True, eq=False)
class SbarReport:
    '''x ↦ s_x s_q⁻¹ into (Inn(Q), x▷′y = xφ_q(yx⁻¹))'''
    basepoint: int
    map: np.ndarray
    group_order: int
    homomorphism: bool
    fibers: tuple
    fibers_match_symmetry_classes: bool

    @property
    def injective(self):
        return all(len(fiber) == 1 for fiber in self.fibers)


def symmetry_classes(quandle):
    '''Classes of elements with equal symmetries s_x, smallest element first'''
    _, labels = np.unique(quandle.op, axis=0, return_inverse=True)
    labels = np.asarray(labels).ravel()
    classes = {}
    for x, label in enumerate(labels.tolist()):
        classes.setdefault(label, []).append(x)
    return tuple(sorted(tuple(c) for c in classes.values()))


def sbar_hom(quandle, q, cap=None):
    if not 0 <= q < quandle.size:
        raise ParameterError('basepoint {} outside 0..{}'.format(q, quandle.size - 1))
    G = inn(quandle).to_finite_group(conf.pick('REALIZATION_CAP', cap))
    phi = GroupAutomorphism.checked(G, _conjugation_map(G, quandle.op[q], quandle.inv_op[q]))
    sbar = G.lookup(quandle.op[:, quandle.inv_op[q]])
    if np.any(sbar < 0):
        raise VerificationFailure('some s_x s_q⁻¹ is missing from Inn(Q)')
    homomorphism = bool(np.array_equal(
        sbar[quandle.op], vedernikov_product(G, phi, sbar[:, None], sbar[None, :])))
    fibers = {}
    for x, value in enumerate(sbar.tolist()):
        fibers.setdefault(value, []).append(x)
    fibers = tuple(sorted(tuple(f) for f in fibers.values()))
    return SbarReport(q, as_permutation(sbar), G.order, homomorphism, fibers, fibers == symmetry_classes(quandle))


@dataclass(frozen=True)
class VedernikovOrbitReport:
    '''The orbit of a under x·a = xaφ(x⁻¹) against (G/G^{φ_a}, ▷_{φ_a})'''
    element: int
    orbit: tuple
    closed: bool
    bijective: bool
    homomorphism: bool

    @property
    def ok(self):
        return self.closed and self.bijective and self.homomorphism


def vedernikov_orbit_check(group, automorphism, a):
    xs = np.arange(group.order)
    twisted = group.mul_many(group.mul_many(xs, a), automorphism.map[group.inverses])
    orbit = np.unique(twisted)
    inside = np.zeros(group.order, dtype=bool)
    inside[orbit] = True
    closed = bool(np.all(inside[vedernikov_product(group, automorphism, orbit[:, None], orbit[None, :])]))

    phi_a = GroupAutomorphism.checked(
        group, group.mul_many(group.mul_many(a, automorphism.map), group.inv(a)))
    fixed = np.flatnonzero(phi_a.map == xs)
    quotient, space = phi_space(group, phi_a, fixed)
    iota = twisted[list(space.reps)]
    bijective = sorted(iota.tolist()) == orbit.tolist()
    homomorphism = bool(np.array_equal(
        iota[quotient.op], vedernikov_product(group, automorphism, iota[:, None], iota[None, :])))
    return VedernikovOrbitReport(int(a), tuple(orbit.tolist()), closed, bijective, homomorphism)
