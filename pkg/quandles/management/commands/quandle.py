import argparse
import logging

from django.core.management.base import BaseCommand, CommandError

from quandles.constructions import FAMILIES
from quandles.core import subquandle_closure
from quandles.exceptions import InvalidQuandle, QuandleError, VerificationFailure
from quandles.forms import FAMILY_FORMS, error_text
from quandles.formats import (
    action_from_dict, dumps, load_corpus, load_json, load_quandle, loads, parse_indices, quandle_from_dict,
    quandle_to_dict, read_text,
)
from quandles.knots import brute_force_colorings, count_colorings, parse_braid, parse_pd
from quandles.models import Construction
from quandles.permutations import format_cycles
from quandles.regularity import implication_survey, isolated_connected_consequence, regularity_report
from quandles.symmetry import (
    acting_group, aut, coset_realization, hom_check, inn, inter_orbit_action, is_connected, iso_search,
    normality_witness, op_group, open_subquandle_check, orbits, saturate_mixed, sbar_hom, tr, tr_action_group,
    transvection_layers, transvection_word_check,
)

## Django verbosity 0..3 mapped onto the quandles logger; 1 keeps the LOGGING setting
LOG_LEVELS = {0: logging.ERROR, 2: logging.INFO, 3: logging.DEBUG}

GROUPS = ('tr', 'inn', 'aut')


def _cycles(perm):
    return format_cycles(perm) or '()'


class Command(BaseCommand):
    help = 'Build, check and analyse finite quandles, their symmetry groups and knot colorings'

    def add_arguments(self, parser):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--json', action='store_true', help='print canonical JSON instead of text')
        common.add_argument('--threads', type=int, default=1, help='worker threads; results do not depend on it')
        common.add_argument('--seed', type=int, default=None, help='seed for randomized checks (default 0)')
        common.add_argument('--cap', type=int, default=None, help='largest explicit group to build')

        commands = parser.add_subparsers(dest='subcommand', required=True, metavar='subcommand')

        def add(name, help):
            return commands.add_parser(name, parents=[common], help=help)

        make = add('make', 'build a quandle from a family and print its table')
        make.add_argument('family', choices=FAMILIES)
        make.add_argument('--n', type=int)
        make.add_argument('--p', type=int)
        make.add_argument('--a', help='scalar or JSON matrix')
        make.add_argument('--group', help='group JSON file')
        make.add_argument('--element', type=int)
        make.add_argument('--phi', '--automorphism', dest='automorphism', help='automorphism JSON file')
        make.add_argument('--subgroup', help='element indices, e.g. "0,3"')
        make.add_argument('--cocycle', help='cocycle JSON file')
        make.add_argument('--save', metavar='NAME', help='store the construction under NAME')

        check = add('check', 'validate the quandle axioms')
        check.add_argument('quandle', help='quandle JSON file, - for stdin')

        orbit = add('orbits', 'Inn(Q)-orbits')
        orbit.add_argument('quandle')
        orbit.add_argument('--generate', metavar='INDICES',
                           help='compare orbits of the subquandle generated by INDICES with Inn(Q)-orbits')

        for name, help in (('inn', 'the inner automorphism group'), ('tr', 'the transvection group')):
            add(name, help).add_argument('quandle')

        add('connected', 'connectedness with witness words').add_argument('quandle')
        add('aut', 'the automorphism group').add_argument('quandle')

        iso = add('iso', 'search for an isomorphism, or check a given map')
        iso.add_argument('first')
        iso.add_argument('second')
        iso.add_argument('--map', dest='mapping', help='JSON list of images to check as a homomorphism')

        realize = add('realize', 'coset realization of orbits')
        realize.add_argument('quandle')
        realize.add_argument('--basepoint', type=int, help='default: the smallest element of every orbit')
        realize.add_argument('--group', choices=GROUPS, default='tr')
        realize.add_argument('--with', dest='other', type=int, metavar='R',
                             help='also check the action of G_q-cosets on G_R-cosets')

        sbar = add('sbar', 'the map x ↦ s_x s_q⁻¹ into a Vedernikov quandle')
        sbar.add_argument('quandle')
        sbar.add_argument('--basepoint', type=int, default=0)

        report = add('report', 'regularity conditions I′, D′, C and Φ′')
        report.add_argument('quandle')
        report.add_argument('--group', choices=GROUPS, default='tr')

        survey = add('survey', 'regularity implications over a corpus')
        survey.add_argument('directory', nargs='?', help='directory of quandle JSON files')
        survey.add_argument('--stored', action='store_true', help='survey every saved construction')
        survey.add_argument('--group', choices=GROUPS, default='tr')

        color = add('color', 'count quandle colorings of a knot diagram')
        source = color.add_mutually_exclusive_group(required=True)
        source.add_argument('--diagram', help='PD code file')
        source.add_argument('--braid', help="braid word such as \"s1 s2' s1\"")
        color.add_argument('--strands', type=int)
        color.add_argument('--quandle', required=True)
        color.add_argument('--by-orbit', action='store_true')
        color.add_argument('--oracle', action='store_true', help='compare with exhaustive enumeration')

        action = add('action', 'Op and Tr orbits of a quandle action')
        action.add_argument('quandle')
        action.add_argument('action', help='action JSON file {"set_size": m, "act": [...]}')
        action.add_argument('--points', default='0', help='starting points, e.g. "0,3"')

    def handle(self, *args, **options):
        level = LOG_LEVELS.get(options['verbosity'])
        if level is not None:
            logging.getLogger('quandles').setLevel(level)
        self.options = options
        handler = getattr(self, 'handle_' + options['subcommand'])
        try:
            handler(**options)
        except QuandleError as error:
            raise CommandError(str(error), returncode=error.exit_code) from error

    def emit(self, data, lines):
        if self.options['json']:
            self.stdout.write(dumps(data), ending='')
        else:
            for line in lines:
                self.stdout.write(line)

    def handle_make(self, family, save, **options):
        form_class = FAMILY_FORMS[family]
        data = {name: options.get(name) for name in form_class.base_fields if options.get(name) is not None}
        form = form_class(data=data)
        if not form.is_valid():
            raise CommandError(error_text(form), returncode=1)
        quandle = form.build()
        if save:
            construction = Construction.store(save, quandle)
            logging.getLogger('quandles').info('saved %s', construction)
        self.stdout.write(dumps(quandle_to_dict(quandle)), ending='')

    def handle_check(self, quandle, **options):
        try:
            q = quandle_from_dict(loads(read_text(quandle)))
        except InvalidQuandle as error:
            witnesses = [{'axiom': v.axiom, 'witness': list(v.witness)} for v in error.violations]
            self.emit({'valid': False, 'violations': witnesses}, ['invalid'] + [str(v) for v in error.violations])
            raise CommandError(str(error), returncode=error.exit_code)
        self.emit({'valid': True, 'size': q.size}, ['valid', 'size: {}'.format(q.size)])

    def handle_orbits(self, quandle, generate, threads, **options):
        q = load_quandle(quandle)
        decomposition = orbits(q, threads)
        data = {'orbits': [list(o) for o in decomposition.orbits]}
        lines = ['orbits: {}'.format(len(decomposition))] + [' '.join(map(str, o)) for o in decomposition.orbits]
        if generate is not None:
            _, embedding = subquandle_closure(q, parse_indices(generate))
            report = open_subquandle_check(q, embedding.tolist())
            data['subquandle'] = {
                'members': list(report.subset),
                'meets_every_orbit': report.meets_every_orbit,
                'hypothesis_holds': report.hypothesis_holds,
                'orbits_agree': report.orbits_agree,
                'differing': list(report.differing),
            }
            lines += [
                'subquandle: {}'.format(' '.join(map(str, report.subset))),
                'hypothesis holds: {}'.format(str(report.hypothesis_holds).lower()),
                'orbits agree: {}'.format(str(report.orbits_agree).lower()),
            ]
        self.emit(data, lines)

    def _group_summary(self, group):
        generators = [_cycles(g) for g in group.generators]
        data = {'order': group.order, 'generators': generators, 'orbits': group.orbits()}
        lines = ['order: {}'.format(group.order)] + ['generator: {}'.format(g) for g in generators]
        return data, lines

    def handle_inn(self, quandle, cap, **options):
        data, lines = self._group_summary(inn(load_quandle(quandle), cap))
        self.emit(data, lines)

    def handle_tr(self, quandle, cap, seed, threads, **options):
        q = load_quandle(quandle)
        group = tr(q, cap)
        data, lines = self._group_summary(group)
        inn_orbits = [list(o) for o in orbits(q, threads).orbits]
        data['orbits_match_inn'] = group.orbits() == inn_orbits
        data['normal_in_inn'] = normality_witness(q) is None
        data['stray_words'] = [str(w) for w in transvection_word_check(q, seed=seed)]
        lines += [
            'orbits match Inn: {}'.format(str(data['orbits_match_inn']).lower()),
            'normal in Inn: {}'.format(str(data['normal_in_inn']).lower()),
            'balanced words outside Tr: {}'.format(len(data['stray_words'])),
        ]
        self.emit(data, lines)
        if not (data['orbits_match_inn'] and data['normal_in_inn']) or data['stray_words']:
            raise VerificationFailure('transvection group checks failed')

    def handle_connected(self, quandle, threads, **options):
        result = is_connected(load_quandle(quandle), threads)
        if result.connected:
            data = {'connected': True, 'words': [str(w) for w in result.words]}
            lines = ['connected: true']
        else:
            data = {'connected': False, 'separated': list(result.separated)}
            lines = ['connected: false', 'separated: {} {}'.format(*result.separated)]
        self.emit(data, lines)

    def handle_aut(self, quandle, threads, **options):
        q = load_quandle(quandle)
        group = aut(q)
        homogeneous = bool(is_connected(q, threads)) or group.is_transitive()
        generators = [_cycles(g) for g in group.generators]
        self.emit(
            {'order': group.order, 'generators': generators, 'homogeneous': homogeneous},
            ['order: {}'.format(group.order), 'homogeneous: {}'.format(str(homogeneous).lower())]
            + ['generator: {}'.format(g) for g in generators],
        )

    def handle_iso(self, first, second, mapping, **options):
        q1, q2 = load_quandle(first), load_quandle(second)
        if mapping is not None:
            result = hom_check(load_json(mapping), q1, q2)
            self.emit(
                {'homomorphism': result.is_homomorphism, 'violations': [list(v) for v in result.violations],
                 'preserves_inverse': result.preserves_inverse},
                ['homomorphism: {}'.format(str(result.is_homomorphism).lower())]
                + ['violation: {} {}'.format(*v) for v in result.violations],
            )
            return
        found = iso_search(q1, q2)
        if found is None:
            self.emit({'isomorphic': False}, ['isomorphic: false'])
        else:
            self.emit({'isomorphic': True, 'map': found.tolist()},
                      ['isomorphic: true', 'map: ' + ' '.join(str(x) for x in found.tolist())])

    def handle_realize(self, quandle, basepoint, group, other, cap, seed, threads, **options):
        q = load_quandle(quandle)
        acting = acting_group(q, group, cap)
        basepoints = [basepoint] if basepoint is not None else orbits(q, threads).bases
        results, lines, ok = [], [], True
        for base in basepoints:
            realization = coset_realization(q, base, acting=acting)
            ok = ok and realization.ok
            entry = {
                'basepoint': base,
                'group_order': acting.order,
                'stabilizer': list(realization.stabilizer),
                'phi': realization.automorphism.map.tolist(),
                'orbit': list(realization.orbit),
                'checks': dict(realization.checks),
                'pi': realization.pi.tolist() if realization.pi is not None else None,
            }
            lines.append('basepoint {}: |G| = {}, |G_q| = {}, {}'.format(
                base, acting.order, len(realization.stabilizer), 'ok' if realization.ok else 'FAILED'))
            if other is not None:
                inter = inter_orbit_action(q, base, other, group=group, cap=cap, seed=seed)
                ok = ok and inter.compatible and inter.well_defined
                entry['inter_orbit'] = {
                    'r': other, 'compatible': inter.compatible, 'well_defined': inter.well_defined,
                    'pairs_checked': inter.pairs_checked, 'reduces_to_phi': inter.reduces_to_phi,
                }
                lines.append('  with {}: compatible {}, well defined {}'.format(
                    other, str(inter.compatible).lower(), str(inter.well_defined).lower()))
            results.append(entry)
        generators = [_cycles(acting.permutation(g)) for g in acting.generating_set]
        self.emit({'group': group, 'generators': generators, 'realizations': results}, lines)
        if not ok:
            raise VerificationFailure('coset realization checks failed')

    def handle_sbar(self, quandle, basepoint, cap, **options):
        result = sbar_hom(load_quandle(quandle), basepoint, cap)
        self.emit(
            {'basepoint': result.basepoint, 'map': result.map.tolist(), 'group_order': result.group_order,
             'homomorphism': result.homomorphism, 'injective': result.injective,
             'fibers': [list(f) for f in result.fibers],
             'fibers_match_symmetry_classes': result.fibers_match_symmetry_classes},
            ['homomorphism: {}'.format(str(result.homomorphism).lower()),
             'injective: {}'.format(str(result.injective).lower()),
             'fibers: {}'.format(' | '.join(' '.join(map(str, f)) for f in result.fibers))],
        )
        if not (result.homomorphism and result.fibers_match_symmetry_classes):
            raise VerificationFailure('s̄ is not a homomorphism with the expected fibers')

    def handle_report(self, quandle, group, cap, threads, **options):
        q = load_quandle(quandle)
        report = regularity_report(q, group=group, cap=cap, threads=threads)
        consequence = isolated_connected_consequence(q)
        data = report.as_dict()
        data['isolation'] = {
            'isolated': consequence.isolated,
            'surjective': list(consequence.surjective),
            'max_image_size': consequence.max_image_size,
            'anomaly': consequence.anomaly,
        }
        lines = ['{}: {}'.format(name, str(value).lower()) for name, value in report.flags.items()]
        lines.append('non-surjective translations: {}'.format(len(report.non_surjective)))
        if report.centralizer_skipped:
            lines.append('centralizer check skipped: {}'.format(report.centralizer_skipped))
        lines.append('note: {}'.format(report.note))
        self.emit(data, lines)
        failed = not all(r['ok'] for r in report.realizations)
        if report.centralizer is not None and not report.centralizer.holds:
            failed = True
        if failed:
            raise VerificationFailure('regularity report found a failed realization or centralizer check')

    def handle_survey(self, directory, stored, group, cap, threads, **options):
        if stored:
            corpus = [(c.name, c.replay()) for c in Construction.objects.order_by('name')]
        elif directory:
            corpus = load_corpus(directory)
        else:
            raise CommandError('give a corpus directory or --stored', returncode=1)
        survey = implication_survey(corpus, group=group, cap=cap, threads=threads)
        lines = ['{}: {}'.format(name, ' '.join('{}={}'.format(k, int(v)) for k, v in flags.items()))
                 for name, flags in survey.rows]
        lines += ['{} => {}'.format(a, b) for a, b in survey.implications()]
        self.emit(survey.as_dict(), lines)

    def handle_color(self, diagram, braid, strands, quandle, by_orbit, oracle, threads, **options):
        if braid is not None:
            if strands is None:
                raise CommandError('--braid needs --strands', returncode=1)
            knot = parse_braid(braid, strands)
        else:
            knot = parse_pd(read_text(diagram))
        q = load_quandle(quandle)
        count = count_colorings(knot, q, threads=threads, by_orbit=by_orbit)
        data = {
            'total': count.total,
            'crossings': len(knot.crossings),
            'arcs': knot.arc_count,
            'components': len(knot.components),
        }
        lines = ['colorings: {}'.format(count.total)]
        if count.by_orbit is not None:
            data['by_orbit'] = list(count.by_orbit)
            lines += ['orbit {}: {}'.format(i, c) for i, c in enumerate(count.by_orbit)]
        if oracle:
            data['oracle'] = brute_force_colorings(knot, q)
            lines.append('brute force: {}'.format(data['oracle']))
        self.emit(data, lines)
        if oracle and data['oracle'] != count.total:
            raise VerificationFailure('backtracking and brute force disagree')

    def handle_action(self, quandle, action, points, cap, **options):
        q = load_quandle(quandle)
        act = action_from_dict(q, load_json(action))
        start = parse_indices(points)
        op, trg = op_group(act, cap), tr_action_group(act, cap)
        rows = [{'point': x, 'op_orbit': op.orbit(x), 'tr_orbit': trg.orbit(x)} for x in start]
        data = {
            'points': rows,
            'op_order': op.order,
            'tr_order': trg.order,
            'mixed_saturation': saturate_mixed(act, start).sizes,
            'transvection_layers': transvection_layers(act, start),
        }
        lines = ['|Op| = {}, |Tr| = {}'.format(op.order, trg.order)]
        lines += ['{}: op orbit {} points, tr orbit {} points'.format(r['point'], len(r['op_orbit']), len(r['tr_orbit']))
                  for r in rows]
        self.emit(data, lines)
