'''`quandle` without manage.py: the same subcommands, exit codes and output'''
import os
import sys

from django.core.management import call_command
from django.core.management.base import CommandError


def run(argv, stdout=None, stderr=None):
    '''Run one subcommand; return 0, 1 for input errors or 2 for failed verifications'''
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        call_command('quandle', *argv, stdout=stdout, stderr=stderr)
    except CommandError as error:
        stderr.write('quandle: {}\n'.format(error))
        return error.returncode
    except SystemExit as error:
        # argparse has already printed usage
        return 1 if error.code else 0
    return 0


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'quandle_lab.settings')
    import django

    django.setup()
    sys.exit(run(sys.argv[1:]))
