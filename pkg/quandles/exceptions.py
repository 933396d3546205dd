'''Errors raised by the quandles app.

Every error carries the data a caller needs to report it (witnesses,
positions) and the exit code the `quandle` command uses for it.
'''
from dataclasses import dataclass


class QuandleError(Exception):
    '''Base class for every domain error'''
    exit_code = 1


@dataclass(frozen=True)
class AxiomViolation:
    '''One failed quandle axiom: 1 idempotence, 2 left-invertibility, 3 left-distributivity'''
    axiom: int
    witness: tuple

    def __str__(self):
        names = {1: 'idempotence', 2: 'left-invertibility', 3: 'left-distributivity'}
        return 'axiom {} ({}) fails at {}'.format(self.axiom, names[self.axiom], self.witness)


class InvalidQuandle(QuandleError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__('{} axiom violation(s); first: {}'.format(len(self.violations), self.violations[0]))


class RangeError(QuandleError):
    def __init__(self, positions, size):
        self.positions = list(positions)
        self.size = size
        super().__init__('entries out of range 0..{} at {}'.format(size - 1, self.positions[:10]))


class CapExceeded(QuandleError):
    def __init__(self, cap, what='group closure'):
        self.cap = cap
        super().__init__('{} exceeded the cap of {} elements (set QUANDLE_CAP to raise it)'.format(what, cap))


class InvalidGroup(QuandleError):
    pass


class NotASubgroup(QuandleError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__('not a subgroup: a*b^-1 leaves the set for (a, b) = {}'.format(self.witness))


class NotFixed(QuandleError):
    def __init__(self, moved):
        self.moved = list(moved)
        super().__init__('subgroup elements moved by the automorphism: {}'.format(self.moved))


class NotAutomorphism(QuandleError):
    pass


class NotAbelian(QuandleError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__('group is not abelian: {} do not commute'.format(self.witness))


class CocycleError(QuandleError):
    def __init__(self, elements):
        self.elements = list(elements)
        super().__init__('F(x, x) is not zero for x in {}'.format(self.elements))


class InvalidAction(QuandleError):
    pass


class NotClosed(QuandleError):
    def __init__(self, escapes):
        self.escapes = list(escapes)
        super().__init__('subset is not closed under the quandle operations; escapes: {}'.format(self.escapes[:10]))


class TooLarge(QuandleError):
    pass


class ParameterError(QuandleError):
    pass


class ParseError(QuandleError):
    def __init__(self, message, line=1, column=1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__('line {}, column {}: {}'.format(line, column, message))


class InconsistentArcs(QuandleError):
    def __init__(self, missing=(), duplicated=()):
        self.missing = sorted(missing)
        self.duplicated = sorted(duplicated)
        super().__init__('inconsistent arc labels: missing {}, duplicated {}'.format(self.missing, self.duplicated))


class VerificationFailure(QuandleError):
    '''A property that must hold by theory failed on a concrete instance'''
    exit_code = 2
