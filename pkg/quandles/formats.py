'''JSON interchange for quandles, groups, automorphisms, actions and cocycles.

Quandle files are {"size": n, "table": [[...]], "labels": [...]}; group files
are either an explicit {"order": k, "mul": [[...]], "labels": [...]} or a
named group such as {"family": "symmetric", "n": 3}. Permutation groups can also
be given by {"generators": ["(0 1)", "(0 1 2)"]}, or as plain text with one
cycle-notation generator per line, and are closed on load.
'''
import json
import re
import sys
from pathlib import Path

import numpy as np

from .core import validate
from .exceptions import ParameterError, ParseError
from .groups import (
    FiniteGroup, GroupAutomorphism, close, cyclic_group, inner_automorphism, matrix_group_sl2, power_automorphism,
    symmetric_group,
)
from .permutations import integer_array, parse_generators

_INDEX = re.compile(r'[^\s,]+')
_DIGITS = re.compile(r'[0-9]+')


def read_text(path):
    '''Contents of `path`; "-" reads standard input'''
    if str(path) == '-':
        return sys.stdin.read()
    try:
        data = Path(path).read_bytes()
    except OSError as error:
        raise ParameterError('cannot read {}: {}'.format(path, error.strerror))
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as error:
        line = data.count(b'\n', 0, error.start) + 1
        column = error.start - (data.rfind(b'\n', 0, error.start) + 1) + 1
        raise ParseError('{} is not UTF-8 text'.format(path), line, column)


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(error.msg, error.lineno, error.colno)


def load_json(path):
    return loads(read_text(path))


def dumps(data):
    '''Canonical JSON: sorted keys, no spaces, trailing newline'''
    return json.dumps(data, sort_keys=True, separators=(',', ':'), ensure_ascii=False) + '\n'


def _require(data, *names):
    if not isinstance(data, dict):
        raise ParameterError('expected a JSON object')
    missing = [name for name in names if name not in data]
    if missing:
        raise ParameterError('missing field(s): {}'.format(', '.join(missing)))


def quandle_to_dict(quandle):
    data = {'size': quandle.size, 'table': quandle.op.tolist()}
    if quandle.labels:
        data['labels'] = list(quandle.labels)
    record = quandle.provenance
    if record is not None:
        data['construction'] = {'family': record.family, 'parameters': record.parameters}
    return data


def quandle_from_dict(data):
    _require(data, 'size', 'table')
    table = data['table']
    if not isinstance(table, list) or len(table) != data['size']:
        raise ParameterError('"size" is {} but the table has {} rows'.format(data['size'], len(table) if isinstance(table, list) else 0))
    return validate(table, labels=data.get('labels'))


def load_quandle(path):
    return quandle_from_dict(load_json(path))


def group_to_dict(group):
    if group.spec is not None:
        return dict(group.spec)
    if group.is_permutation_backed:
        return {'order': group.order, 'permutations': group.permutations.tolist()}
    data = {'order': group.order, 'mul': group.table.tolist()}
    if group.labels:
        data['labels'] = list(group.labels)
    return data


def group_from_dict(data, seed=None):
    _require(data)
    family = data.get('family')
    if family == 'cyclic':
        return cyclic_group(int(data['n']))
    if family == 'symmetric':
        return symmetric_group(int(data['n']))
    if family == 'sl2':
        return matrix_group_sl2(int(data['p']))
    if family is not None:
        raise ParameterError('unknown group family {!r}'.format(family))
    if 'generators' in data:
        lines = data['generators']
        text = lines if isinstance(lines, str) else '\n'.join(lines)
        generators = parse_generators(text, degree=data.get('degree'))
        return close(generators, degree=data.get('degree')).to_finite_group()
    if 'permutations' in data:
        return FiniteGroup.from_permutations(data['permutations'], labels=data.get('labels'))
    _require(data, 'order', 'mul')
    if len(data['mul']) != data['order']:
        raise ParameterError('"order" is {} but the table has {} rows'.format(data['order'], len(data['mul'])))
    return FiniteGroup.from_table(data['mul'], labels=data.get('labels'), seed=seed)


def load_group(path, seed=None):
    '''A group JSON file, or a text file of generators in cycle notation, one per line'''
    text = read_text(path)
    if text.lstrip().startswith('('):
        return close(parse_generators(text)).to_finite_group()
    return group_from_dict(loads(text), seed=seed)


def automorphism_from_dict(group, data):
    '''A map list, {"map": [...]}, {"inner": g} or {"power": k}'''
    if isinstance(data, list):
        return GroupAutomorphism.checked(group, data)
    _require(data)
    if 'map' in data:
        return GroupAutomorphism.checked(group, data['map'])
    if 'inner' in data:
        return inner_automorphism(group, int(data['inner']))
    if 'power' in data:
        return power_automorphism(group, int(data['power']))
    raise ParameterError('automorphism needs one of "map", "inner" or "power"')


def load_automorphism(group, path):
    return automorphism_from_dict(group, load_json(path))


def cocycle_from_dict(data):
    '''{"x_size": x, "values": x-by-x table of group indices}'''
    _require(data, 'x_size', 'values')
    values = integer_array(data['values'], what='cocycle')
    if values.shape != (data['x_size'], data['x_size']):
        raise ParameterError('cocycle table must be {0} x {0}'.format(data['x_size']))
    return int(data['x_size']), values


def action_from_dict(quandle, data):
    '''{"set_size": m, "act": one image list of 0..m-1 per quandle element}'''
    from .symmetry import quandle_action

    _require(data, 'set_size', 'act')
    return quandle_action(quandle, data['set_size'], data['act'])


def parse_indices(text):
    '''"0,1 2" -> [0, 1, 2]'''
    indices = []
    for token in _INDEX.finditer(text):
        if not _DIGITS.fullmatch(token.group()):
            raise ParseError('{!r} is not a non-negative integer'.format(token.group()), 1, token.start() + 1)
        indices.append(int(token.group()))
    return indices


def load_corpus(directory):
    '''(name, quandle) for every *.json file of `directory`, sorted by name'''
    directory = Path(directory)
    if not directory.is_dir():
        raise ParameterError('{} is not a directory'.format(directory))
    return [(path.stem, load_quandle(path)) for path in sorted(directory.glob('*.json'))]
