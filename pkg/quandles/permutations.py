'''Permutations of {0..m-1} as numpy index arrays, and disjoint-cycle notation.

A permutation p maps x to p[x]. Composition follows function notation:
compose(a, b) is "b first, then a", i.e. a[b].
'''
import re

import numpy as np

from .exceptions import ParameterError, ParseError

DTYPE = np.int64

_CYCLE = re.compile(r'\(([^()]*)\)')
_POINT = re.compile(r'[^\s,]+')
_DIGITS = re.compile(r'[0-9]+')


def as_permutation(values):
    '''Read-only int64 array copy of `values`'''
    perm = np.array(values, dtype=DTYPE)
    perm.setflags(write=False)
    return perm


def identity(degree):
    return as_permutation(np.arange(degree))


def compose(a, b):
    return a[b]


def integer_array(data, error=ParameterError, what='table'):
    '''`data` as an int64 array; every entry must be an int (not a bool, not a float such as 1.0)'''
    if isinstance(data, np.ndarray) and data.dtype != object:
        if data.dtype == bool or not np.issubdtype(data.dtype, np.integer):
            raise error('{} entries must be integers, got {}'.format(what, data.dtype))
        return data.astype(DTYPE, copy=False)
    try:
        array = np.array(data, dtype=object)
    except ValueError:
        raise error('{} must be a rectangular array of integers'.format(what))
    for position, value in zip(np.ndindex(array.shape), array.ravel()):
        if isinstance(value, (bool, np.bool_)) or not isinstance(value, (int, np.integer)):
            raise error('{} entry {!r} at {} is not an integer'.format(what, value, list(position)))
    return array.astype(DTYPE)


def inverse(perm):
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm), dtype=DTYPE)
    return inv


def is_permutation(values, degree=None):
    values = np.asarray(values)
    degree = len(values) if degree is None else degree
    if values.ndim != 1 or len(values) != degree:
        return False
    if degree and (values.min() < 0 or values.max() >= degree):
        return False
    return bool(np.all(np.bincount(values, minlength=degree) == 1))


def key(perm):
    '''Hashable identity of a permutation'''
    return np.ascontiguousarray(perm, dtype=DTYPE).tobytes()


def cycles(perm):
    '''Nontrivial cycles, each starting at its smallest point, in order of that point'''
    seen = np.zeros(len(perm), dtype=bool)
    result = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        x = int(perm[start])
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = int(perm[x])
        if len(cycle) > 1:
            result.append(tuple(cycle))
    return result


def cycle_type(perm):
    '''Sorted cycle lengths, fixed points included'''
    seen = np.zeros(len(perm), dtype=bool)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = int(perm[x])
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def format_cycles(perm):
    '''"(0 1 2)(3 4)"; the identity formats as the empty string'''
    return ''.join('(' + ' '.join(str(x) for x in cycle) + ')' for cycle in cycles(perm))


def parse_cycles(text, degree=None, line=1):
    '''Parse one permutation in disjoint-cycle notation over 0-based points.

    Cycles may be separated by whitespace; a point repeated anywhere in the
    line is rejected with the column of the repetition.
    '''
    seen = {}
    parsed = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _CYCLE.match(text, pos)
        if match is None:
            raise ParseError('expected "(" to open a cycle, found {!r}'.format(text[pos]), line, pos + 1)
        cycle = []
        for token in _POINT.finditer(match.group(1)):
            column = match.start(1) + token.start() + 1
            if not _DIGITS.fullmatch(token.group()):
                raise ParseError('point {!r} is not a non-negative integer'.format(token.group()), line, column)
            point = int(token.group())
            if point in seen:
                raise ParseError('point {} repeated (first seen at column {})'.format(point, seen[point]), line, column)
            if degree is not None and point >= degree:
                raise ParseError('point {} outside 0..{}'.format(point, degree - 1), line, column)
            seen[point] = column
            cycle.append(point)
        parsed.append(cycle)
        pos = match.end()
    size = max(seen) + 1 if seen else 0
    if degree is not None:
        size = degree
    perm = np.arange(size, dtype=DTYPE)
    for cycle in parsed:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            perm[a] = b
    return perm


def parse_generators(text, degree=None):
    '''One permutation per line; an empty line is the identity.

    Without an explicit degree every permutation is padded to the largest
    point mentioned anywhere in the text.
    '''
    lines = text.splitlines()
    perms = [parse_cycles(raw, degree=degree, line=number) for number, raw in enumerate(lines, start=1)]
    if degree is None:
        degree = max([len(p) for p in perms] + [1])
    padded = []
    for perm in perms:
        full = np.arange(degree, dtype=DTYPE)
        full[:len(perm)] = perm
        padded.append(as_permutation(full))
    return padded
