'''Finite forms of the regularity conditions on a quandle.

    I′   every s_q fixes exactly q
    D′   every right translation t_q: r ↦ r▷q is onto
    C    Q is connected
    Φ′   every orbit is realized as a coset quandle with G_q inside G^{φ_q}

Φ′ is the weak φ-space notion: for finite groups the identity component of
G^φ is trivial, so the stronger reading adds nothing.
'''
import logging
from dataclasses import dataclass, field
from itertools import permutations as ordered_pairs

import numpy as np

from . import conf
from .exceptions import CapExceeded
from .symmetry import acting_group, aut, coset_realization, is_connected, orbits
from .workers import parallel_map

logger = logging.getLogger(__name__)

CONDITIONS = ('I_prime', 'D_prime', 'C', 'Phi_prime')

PHI_NOTE = 'weak φ-space reading: the identity component of G^φ is trivial for finite groups'


def fixed_points(quandle, q):
    '''{r : q▷r = r}'''
    return tuple(int(r) for r in np.flatnonzero(quandle.op[q] == np.arange(quandle.size)))


def image_sizes(quandle):
    '''|t_q(Q)| for every q'''
    return [len(np.unique(quandle.op[:, q])) for q in range(quandle.size)]


@dataclass(frozen=True)
class CentralizerCheck:
    '''Automorphisms commuting with some s_q must fix q on an I′-instance'''
    automorphisms: int
    violations: tuple

    @property
    def holds(self):
        return not self.violations


def symmetry_centralizer_check(quandle, limit=None, cap=None):
    group = aut(quandle, limit)
    cap = conf.pick('CLOSURE_CAP', cap)
    if group.order > cap:
        raise CapExceeded(cap, 'automorphism group')
    elements = group.elements
    violations = []
    for index, f in enumerate(elements):
        commutes = np.all(f[quandle.op] == quandle.op[:, f], axis=1)
        violations.extend((index, int(q)) for q in np.flatnonzero(commutes & (f != np.arange(quandle.size))))
    return CentralizerCheck(len(elements), tuple(violations[:conf.get('WITNESS_CAP')]))


@dataclass(frozen=True)
class RegularityReport:
    size: int
    flags: dict
    fixed_sets: tuple
    non_surjective: tuple
    realizations: tuple
    centralizer: CentralizerCheck = None
    note: str = PHI_NOTE
    centralizer_skipped: str = None

    def as_dict(self):
        data = {
            'size': self.size,
            'flags': dict(self.flags),
            'fixed_sets': [list(f) for f in self.fixed_sets],
            'non_surjective': list(self.non_surjective),
            'realizations': [dict(r) for r in self.realizations],
            'note': self.note,
        }
        if self.centralizer is not None:
            data['centralizer'] = {
                'automorphisms': self.centralizer.automorphisms,
                'violations': [list(v) for v in self.centralizer.violations],
            }
        if self.centralizer_skipped:
            data['centralizer_skipped'] = self.centralizer_skipped
        return data


def regularity_report(quandle, group='tr', cap=None, threads=1, centralizer=True):
    n = quandle.size
    fixed_sets = tuple(fixed_points(quandle, q) for q in range(n))
    sizes = image_sizes(quandle)
    non_surjective = tuple(q for q in range(n) if sizes[q] < n)
    decomposition = orbits(quandle, threads)
    acting = acting_group(quandle, group, cap)
    realizations = []
    for base in decomposition.bases:
        realization = coset_realization(quandle, base, acting=acting)
        realizations.append({
            'basepoint': base,
            'orbit_size': len(realization.orbit),
            'group_order': acting.order,
            'stabilizer_order': len(realization.stabilizer),
            'ok': realization.ok,
        })
    flags = {
        'I_prime': all(len(f) == 1 for f in fixed_sets),
        'D_prime': not non_surjective,
        'C': bool(is_connected(quandle, threads)),
        'Phi_prime': all(r['ok'] for r in realizations),
    }
    check = skipped = None
    if centralizer and flags['I_prime'] and n <= conf.get('SEARCH_LIMIT'):
        try:
            check = symmetry_centralizer_check(quandle, cap=cap)
        except CapExceeded as error:
            logger.info('centralizer check skipped: %s', error)
            skipped = str(error)
    logger.debug('regularity flags for size %d: %s', n, flags)
    return RegularityReport(
        n, flags, fixed_sets, non_surjective, tuple(realizations), check, centralizer_skipped=skipped)


@dataclass(frozen=True)
class Survey:
    '''Flag vectors per instance and, for each ordered pair (A, B), the instances with A and not B'''
    rows: tuple
    counterexamples: dict = field(default_factory=dict)

    def implications(self):
        '''Pairs (A, B) with A ⇒ B on every instance'''
        return [pair for pair, names in self.counterexamples.items() if not names]

    def as_dict(self):
        return {
            'rows': [{'name': name, 'flags': dict(flags)} for name, flags in self.rows],
            'implications': [
                {'if': a, 'then': b, 'counterexamples': list(names)}
                for (a, b), names in self.counterexamples.items()
            ],
        }


def implication_survey(corpus, group='tr', cap=None, threads=1):
    '''`corpus` is a list of (name, quandle); every report is computed independently'''
    corpus = list(corpus)
    reports = parallel_map(
        lambda item: regularity_report(item[1], group=group, cap=cap, centralizer=False), corpus, threads)
    rows = tuple((name, report.flags) for (name, _), report in zip(corpus, reports))
    counterexamples = {}
    if rows:
        for a, b in ordered_pairs(CONDITIONS, 2):
            counterexamples[(a, b)] = tuple(name for name, flags in rows if flags[a] and not flags[b])
    return Survey(rows, counterexamples)


@dataclass(frozen=True)
class IsolationConsequence:
    isolated: bool
    surjective: tuple
    max_image_size: int

    @property
    def anomaly(self):
        '''I′ holds but no right translation is onto'''
        return self.isolated and not self.surjective


def isolated_connected_consequence(quandle):
    sizes = image_sizes(quandle)
    isolated = all(len(fixed_points(quandle, q)) == 1 for q in range(quandle.size))
    surjective = tuple(q for q in range(quandle.size) if sizes[q] == quandle.size)
    return IsolationConsequence(isolated, surjective, max(sizes))
