'''Forms validating the parameters of `quandle make <family>`.

Each family form cleans raw command-line strings into typed values, loads the
group, automorphism and cocycle files it needs, and builds the quandle in
`build()`. Errors from file loading surface as form errors.
'''
from django import forms

from . import conf, constructions
from .exceptions import QuandleError
from .formats import cocycle_from_dict, load_automorphism, load_group, load_json, loads, parse_indices
from .groups import is_prime


def _as_form_error(error):
    return forms.ValidationError(str(error))


class PrimeField(forms.IntegerField):
    '''An integer that must be prime'''

    def validate(self, value):
        super().validate(value)
        if value is not None and not is_prime(value):
            raise forms.ValidationError('%(value)s is not prime', params={'value': value})


class FamilyForm(forms.Form):
    family = None

    def build(self):
        raise NotImplementedError


class TrivialForm(FamilyForm):
    family = 'trivial'
    n = forms.IntegerField(min_value=1)

    def build(self):
        return constructions.trivial(self.cleaned_data['n'])


class DihedralForm(FamilyForm):
    family = 'dihedral'
    n = forms.IntegerField(min_value=1)

    def build(self):
        return constructions.dihedral(self.cleaned_data['n'])


class AlexanderForm(FamilyForm):
    family = 'alexander'
    p = PrimeField()
    n = forms.IntegerField(min_value=1)
    ## An integer, or a JSON matrix such as [[1,1],[0,1]]
    a = forms.CharField()

    def clean_a(self):
        try:
            return loads(self.cleaned_data['a'])
        except QuandleError as error:
            raise _as_form_error(error)

    def build(self):
        data = self.cleaned_data
        return constructions.alexander(data['p'], data['n'], data['a'])


class Section5Form(FamilyForm):
    family = 'section5'
    p = PrimeField()
    n = forms.IntegerField(min_value=2)

    def clean_p(self):
        p = self.cleaned_data['p']
        if p == 2:
            raise forms.ValidationError('p must be an odd prime')
        return p

    def build(self):
        return constructions.section5_example(self.cleaned_data['p'], self.cleaned_data['n'])


class UnipotentClassForm(FamilyForm):
    family = 'unipotent_class'
    p = PrimeField()

    def clean_p(self):
        p = self.cleaned_data['p']
        largest = conf.get('SL2_MAX_PRIME')
        if p > largest:
            raise forms.ValidationError('SL2(F_p) is only built for p up to %(largest)s', params={'largest': largest})
        return p

    def build(self):
        return constructions.unipotent_class_quandle(self.cleaned_data['p'])[0]


class GroupForm(FamilyForm):
    '''Families built over a group given as a JSON file'''
    seed = forms.IntegerField(required=False)
    group = forms.CharField()

    def clean_group(self):
        try:
            return load_group(self.cleaned_data['group'], seed=self.cleaned_data.get('seed'))
        except QuandleError as error:
            raise _as_form_error(error)


class ConjForm(GroupForm):
    family = 'conj'

    def build(self):
        return constructions.conjugation(self.cleaned_data['group'])


class ConjClassForm(GroupForm):
    family = 'conj_class'
    element = forms.IntegerField(min_value=0)

    def build(self):
        return constructions.conj_class(self.cleaned_data['group'], self.cleaned_data['element'])[0]


class CocycleForm(GroupForm):
    family = 'cocycle'
    cocycle = forms.CharField()

    def clean(self):
        data = super().clean()
        if 'group' in data and 'cocycle' in data:
            try:
                data['x_size'], data['values'] = cocycle_from_dict(load_json(data['cocycle']))
            except QuandleError as error:
                self.add_error('cocycle', _as_form_error(error))
        return data

    def build(self):
        data = self.cleaned_data
        return constructions.cocycle_extension(data['x_size'], data['group'], data['values'])


class AutomorphismForm(GroupForm):
    automorphism = forms.CharField()

    def clean(self):
        data = super().clean()
        if 'group' in data and 'automorphism' in data:
            try:
                data['automorphism'] = load_automorphism(data['group'], data['automorphism'])
            except QuandleError as error:
                self.add_error('automorphism', _as_form_error(error))
        return data


class VedernikovForm(AutomorphismForm):
    family = 'vedernikov'

    def build(self):
        return constructions.vedernikov(self.cleaned_data['group'], self.cleaned_data['automorphism'])


class PhiSpaceForm(AutomorphismForm):
    family = 'phi_space'
    ## Element indices of H, e.g. "0" or "0,3"
    subgroup = forms.CharField(required=False)

    def clean_subgroup(self):
        try:
            return parse_indices(self.cleaned_data['subgroup']) or None
        except QuandleError as error:
            raise _as_form_error(error)

    def build(self):
        data = self.cleaned_data
        group = data['group']
        subgroup = data['subgroup'] if data['subgroup'] is not None else [group.identity]
        return constructions.phi_space(group, data['automorphism'], subgroup, seed=data.get('seed'))[0]


FAMILY_FORMS = {
    form.family: form
    for form in (
        TrivialForm, DihedralForm, AlexanderForm, Section5Form, UnipotentClassForm, ConjForm, ConjClassForm,
        CocycleForm, VedernikovForm, PhiSpaceForm,
    )
}


def error_text(form):
    '''Form errors as "field: message" lines'''
    return '\n'.join(
        '{}: {}'.format(field, ' '.join(messages)) for field, messages in form.errors.items()
    )
