'''Knot diagrams and quandle coloring counts.

Arcs here are the edges of the diagram: the pieces of strand between
consecutive crossings, over- and under-passages alike. A coloring gives both
edges of an over-passage the same color, and at a crossing of sign ε sets
c(under_out) = c(over) ▷^ε c(under_in).
'''
import logging
import re
from dataclasses import dataclass

import numpy as np

from .exceptions import InconsistentArcs, ParseError, TooLarge
from .symmetry import orbits
from .workers import parallel_map

logger = logging.getLogger(__name__)

_CROSSING = re.compile(r'X\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]')
_GENERATOR = re.compile(r"s(\d+)('?)")

BRUTE_FORCE_LIMIT = 10 ** 7


@dataclass(frozen=True)
class Crossing:
    over: int
    under_in: int
    under_out: int
    sign: int
    over_out: int


@dataclass(frozen=True)
class KnotDiagram:
    crossings: tuple
    arc_count: int
    components: tuple

    def __str__(self):
        return '<KnotDiagram crossings={} arcs={} components={}>'.format(
            len(self.crossings), self.arc_count, len(self.components))


def _position(text, offset):
    line = text.count('\n', 0, offset) + 1
    return line, offset - (text.rfind('\n', 0, offset) + 1) + 1


def _components(crossings, arc_count):
    successor = list(range(arc_count))
    for c in crossings:
        successor[c.under_in] = c.under_out
        successor[c.over] = c.over_out
    seen = [False] * arc_count
    found = []
    for start in range(arc_count):
        if seen[start]:
            continue
        component, arc = [], start
        while not seen[arc]:
            seen[arc] = True
            component.append(arc)
            arc = successor[arc]
        found.append(tuple(component))
    return tuple(found)


def _strip_comments(text):
    return re.sub(r'#[^\n]*', lambda m: ' ' * len(m.group()), text)


def parse_pd(text):
    '''Parse "X[a,b,c,d];..." with 1-based labels, a the incoming and c the
    outgoing under-edge. The over strand runs d → b when b − d ≡ 1 (sign +1)
    and b → d when d − b ≡ 1 (sign −1), modulo the number of edges.
    '''
    body = _strip_comments(text)
    raw, pos = [], 0
    while pos < len(body):
        if body[pos].isspace() or body[pos] == ';':
            pos += 1
            continue
        match = _CROSSING.match(body, pos)
        if match is None:
            raise ParseError('expected a crossing X[a,b,c,d]', *_position(body, pos))
        labels = [int(x) for x in match.groups()]
        if 0 in labels:
            raise ParseError('edge labels start at 1', *_position(body, match.start()))
        raw.append((labels, match.start()))
        pos = match.end()
    if not raw:
        raise ParseError('no crossings found', *_position(body, len(body)))

    count = max(max(labels) for labels, _ in raw)
    occurrences = np.zeros(count + 1, dtype=int)
    under_outs = np.zeros(count + 1, dtype=int)
    under_ins = np.zeros(count + 1, dtype=int)
    for (a, b, c, d), _ in raw:
        occurrences[[a, b, c, d]] += 1
        under_ins[a] += 1
        under_outs[c] += 1
    missing = [x for x in range(1, count + 1) if occurrences[x] < 2]
    duplicated = [x for x in range(1, count + 1) if occurrences[x] > 2 or under_outs[x] > 1 or under_ins[x] > 1]
    if missing or duplicated:
        raise InconsistentArcs(missing, duplicated)

    crossings = []
    for (a, b, c, d), offset in raw:
        forward, backward = (b - d) % count == 1, (d - b) % count == 1
        if forward and backward:
            raise ParseError('over strand direction is ambiguous with {} edges'.format(count), *_position(body, offset))
        if forward:
            crossings.append(Crossing(d - 1, a - 1, c - 1, 1, b - 1))
        elif backward:
            crossings.append(Crossing(b - 1, a - 1, c - 1, -1, d - 1))
        else:
            raise ParseError('over edges {} and {} are not consecutive'.format(b, d), *_position(body, offset))
    overs = np.bincount([c.over for c in crossings] + [c.under_in for c in crossings], minlength=count)
    if np.any(overs > 1):
        raise InconsistentArcs([], (np.flatnonzero(overs > 1) + 1).tolist())
    diagram = KnotDiagram(tuple(crossings), count, _components(crossings, count))
    logger.debug('parsed %s', diagram)
    return diagram


def parse_braid(word, strands):
    '''Closure of a braid word over s1..s(k-1) and inverses s1'..s(k-1)'.

    For s_i the strand at position i-1 passes over to position i (sign +1);
    for s_i' the strand at position i passes over to position i-1 (sign −1).
    '''
    if strands < 1:
        raise ParseError('a braid needs at least one strand')
    position = list(range(strands))
    fresh = strands
    crossings = []
    pos = 0
    while pos < len(word):
        if word[pos].isspace():
            pos += 1
            continue
        match = _GENERATOR.match(word, pos)
        if match is None:
            raise ParseError("expected a generator such as s1 or s1'", *_position(word, pos))
        i = int(match.group(1))
        if not 1 <= i < strands:
            raise ParseError('generator s{} needs strands {} and {}; the braid has {}'.format(i, i, i + 1, strands),
                             *_position(word, pos))
        left, right = position[i - 1], position[i]
        new_left, new_right = fresh, fresh + 1
        fresh += 2
        if match.group(2):
            crossings.append(Crossing(right, left, new_right, -1, new_left))
        else:
            crossings.append(Crossing(left, right, new_left, 1, new_right))
        position[i - 1], position[i] = new_left, new_right
        pos = match.end()

    closing = {end: start for start, end in enumerate(position)}
    used = sorted({closing.get(x, x) for c in crossings for x in (c.over, c.under_in, c.under_out, c.over_out)}
                  | set(range(strands)))
    index = {label: i for i, label in enumerate(used)}

    def relabel(x):
        return index[closing.get(x, x)]

    crossings = tuple(
        Crossing(relabel(c.over), relabel(c.under_in), relabel(c.under_out), c.sign, relabel(c.over_out))
        for c in crossings
    )
    return KnotDiagram(crossings, len(used), _components(crossings, len(used)))


@dataclass(frozen=True)
class ColoringCount:
    total: int
    by_orbit: tuple = None


def _relations(diagram, quandle):
    '''Merge over-passage edges into arcs; return arc of each edge and the crossing relations'''
    parent = list(range(diagram.arc_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in diagram.crossings:
        parent[find(c.over_out)] = find(c.over)
    roots = sorted({find(x) for x in range(diagram.arc_count)})
    arc_of = {root: i for i, root in enumerate(roots)}
    relations = []
    for c in diagram.crossings:
        forward, backward = (quandle.op, quandle.inv_op) if c.sign > 0 else (quandle.inv_op, quandle.op)
        relations.append((arc_of[find(c.over)], arc_of[find(c.under_in)], arc_of[find(c.under_out)], forward, backward))
    return len(roots), relations


def _solve(relations, assign, domains):
    '''Number of completions of a partial coloring; unit propagation, then branch on the smallest domain'''
    changed = True
    while changed:
        changed = False
        for over, under_in, under_out, forward, backward in relations:
            o, i, out = assign[over], assign[under_in], assign[under_out]
            if o >= 0 and i >= 0:
                value = forward[o, i]
                if out >= 0:
                    if out != value:
                        return 0
                    continue
                if not domains[under_out, value]:
                    return 0
                assign[under_out] = value
                domains[under_out] = False
                domains[under_out, value] = True
                changed = True
            elif o >= 0 and out >= 0:
                value = backward[o, out]
                if not domains[under_in, value]:
                    return 0
                assign[under_in] = value
                domains[under_in] = False
                domains[under_in, value] = True
                changed = True
            elif i >= 0 and out >= 0:
                narrowed = domains[over] & (forward[:, i] == out)
                remaining = int(narrowed.sum())
                if remaining == 0:
                    return 0
                if remaining < int(domains[over].sum()):
                    domains[over] = narrowed
                    changed = True
                if remaining == 1:
                    assign[over] = int(np.flatnonzero(narrowed)[0])
                    changed = True
    open_arcs = np.flatnonzero(assign < 0)
    if not len(open_arcs):
        return 1
    sizes = domains[open_arcs].sum(axis=1)
    arc = int(open_arcs[np.argmin(sizes)])
    total = 0
    for value in np.flatnonzero(domains[arc]).tolist():
        branch, branch_domains = assign.copy(), domains.copy()
        branch[arc] = value
        branch_domains[arc] = False
        branch_domains[arc, value] = True
        total += _solve(relations, branch, branch_domains)
    return total


def _count(diagram, quandle, allowed, threads):
    arcs, relations = _relations(diagram, quandle)
    constrained = sorted({x for over, i, out, _, _ in relations for x in (over, i, out)})
    free = arcs - len(constrained)
    width = int(allowed.sum())
    if not constrained:
        return width ** free
    position = {arc: k for k, arc in enumerate(constrained)}
    relations = [(position[o], position[i], position[out], f, b) for o, i, out, f, b in relations]
    assign = np.full(len(constrained), -1, dtype=np.int64)
    domains = np.tile(allowed, (len(constrained), 1))

    def branch(value):
        start, start_domains = assign.copy(), domains.copy()
        start[0] = value
        start_domains[0] = False
        start_domains[0, value] = True
        return _solve(relations, start, start_domains)

    counts = parallel_map(branch, np.flatnonzero(allowed).tolist(), threads)
    return sum(counts) * width ** free


def count_colorings(diagram, quandle, threads=1, by_orbit=False):
    '''Exact number of colorings; with `by_orbit`, also those using one orbit only'''
    everything = np.ones(quandle.size, dtype=bool)
    total = _count(diagram, quandle, everything, threads)
    refined = None
    if by_orbit:
        refined = []
        for orbit in orbits(quandle).orbits:
            allowed = np.zeros(quandle.size, dtype=bool)
            allowed[list(orbit)] = True
            refined.append(_count(diagram, quandle, allowed, threads))
        refined = tuple(refined)
    logger.debug('%s: %d colorings by a quandle of size %d', diagram, total, quandle.size)
    return ColoringCount(total, refined)


def brute_force_colorings(diagram, quandle):
    '''Count by checking every labeling of the edges'''
    n, edges = quandle.size, diagram.arc_count
    if n ** edges > BRUTE_FORCE_LIMIT:
        raise TooLarge('{}^{} labelings is beyond the brute-force limit'.format(n, edges))
    grid = np.indices((n,) * edges).reshape(edges, -1)
    ok = np.ones(grid.shape[1], dtype=bool)
    for c in diagram.crossings:
        table = quandle.op if c.sign > 0 else quandle.inv_op
        ok &= grid[c.over_out] == grid[c.over]
        ok &= grid[c.under_out] == table[grid[c.over], grid[c.under_in]]
    return int(ok.sum())


def invariance_check(first, second, quandle, threads=1):
    '''Both diagrams get the same count; the caller vouches that they show the same knot'''
    return count_colorings(first, quandle, threads).total == count_colorings(second, quandle, threads).total
