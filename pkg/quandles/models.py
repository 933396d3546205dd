import hashlib
import json

from django.db import models

from .constructions import ConstructionRecord
from .exceptions import VerificationFailure


def table_digest(quandle):
    '''SHA-256 of the canonical JSON of the operation table'''
    text = json.dumps(quandle.op.tolist(), separators=(',', ':'))
    return hashlib.sha256(text.encode('ascii')).hexdigest()


class Construction(models.Model):
    '''A named quandle kept as its family and parameters, not as a table'''
    name = models.CharField(max_length=100, unique=True)
    family = models.CharField(max_length=30)
    parameters = models.JSONField()
    size = models.PositiveIntegerField()
    ## Digest of the table at save time, checked on replay
    digest = models.CharField(max_length=64)
    date_added = models.DateTimeField(auto_now=True)

    def __str__(self):
        '''returning a string representation of this construction'''
        return '{} ({}, size {})'.format(self.name, self.family, self.size)

    class Meta:
        ordering = ['-date_added']

    @classmethod
    def store(cls, name, quandle):
        record = quandle.provenance
        if record is None:
            raise ValueError('only constructed quandles can be stored')
        construction, _ = cls.objects.update_or_create(name=name, defaults={
            'family': record.family,
            'parameters': record.parameters,
            'size': quandle.size,
            'digest': table_digest(quandle),
        })
        return construction

    def record(self):
        return ConstructionRecord(self.family, self.parameters)

    def replay(self):
        quandle = self.record().replay()
        if table_digest(quandle) != self.digest:
            raise VerificationFailure('construction {!r} no longer rebuilds the stored table'.format(self.name))
        return quandle
