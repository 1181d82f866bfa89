import sys
from types import SimpleNamespace
from typing import Optional, Sequence

import click
from pydantic import ValidationError
from termcolor import colored

from samuel import __version__
from samuel.cli_helpers.report import emit_report
from samuel.cli_helpers.selftest import print_results, run_catalog
from samuel.core.exceptions import ProblemSpecError, SamuelError, TheoremViolation
from samuel.core.glue import analyze_problem, hilbert_only, with_prime
from samuel.core.logger import setup_logging
from samuel.core.problems import BUILTIN_EXAMPLES, builtin_example, load_problem, print_problem
from samuel.core.settings import Settings
from samuel.local_config import EXAMPLE_CONFIG

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2
EXIT_FAILED = 3


def _fatal(message: str):
    print(colored(f'FATAL: {message}', 'red'), file=sys.stderr)


def _report_format(ctx: click.Context) -> str:
    return 'json' if ctx.obj.json else 'text'


@click.group()
@click.version_option(__version__)
@click.option('--json', 'json_', is_flag=True, default=False, help='Print reports as JSON')
@click.option('--seed', type=click.IntRange(0, 2 ** 64 - 1), default=0, help='Seed of the randomized selftest suites')
@click.option('--prime', type=int, default=None, help='Characteristic for the local engine')
@click.pass_context
def cli(ctx: click.Context, json_: bool, seed: int, prime: Optional[int]):
    """Hilbert coefficients, Sally modules and Ratliff-Rush closures of m-primary ideals"""
    setup_logging()
    ctx.obj = SimpleNamespace(json=json_, seed=seed, prime=prime)


@cli.command()
@click.argument('spec_file', type=click.Path())
@click.pass_context
def invariants(ctx: click.Context, spec_file: str):
    """Lengths, Hilbert coefficients, Sally module and Ratliff-Rush closure of a problem"""
    spec = with_prime(load_problem(spec_file), ctx.obj.prime)
    print(emit_report(analyze_problem(spec, with_classification=False), _report_format(ctx)))
    return EXIT_OK


@cli.command()
@click.argument('spec_file', type=click.Path())
@click.pass_context
def classify(ctx: click.Context, spec_file: str):
    """Invariants plus the structure results that apply to them"""
    spec = with_prime(load_problem(spec_file), ctx.obj.prime)
    report = analyze_problem(spec, with_classification=True)
    print(emit_report(report, _report_format(ctx)))
    return EXIT_FAILED if report.failed else EXIT_OK


@cli.command()
@click.argument('spec_file', type=click.Path())
@click.option('--n-max', type=click.IntRange(min=1), default=None, help='Largest n of the table')
@click.pass_context
def hilbert(ctx: click.Context, spec_file: str, n_max: Optional[int]):
    """Hilbert-Samuel function and Hilbert coefficients of I"""
    spec = with_prime(load_problem(spec_file), ctx.obj.prime)
    print(emit_report(hilbert_only(spec, n_max), _report_format(ctx)))
    return EXIT_OK


@cli.command()
@click.argument('name', type=click.Choice(BUILTIN_EXAMPLES))
@click.option('--m', 'm', type=int, default=None)
@click.option('--d', 'd', type=int, default=None)
@click.option('--lambda', 'lam', default=None, help='Comma separated indices, e.g. 3,4')
@click.pass_context
def example(ctx: click.Context, name: str, m: Optional[int], d: Optional[int], lam: Optional[str]):
    """Print the problem file of a built-in example"""
    print(print_problem(builtin_example(name, m=m, d=d, lam=lam, prime=ctx.obj.prime)))
    return EXIT_OK


@cli.command()
@click.option('--quick', is_flag=True, default=False, help='Smaller random suites')
@click.pass_context
def selftest(ctx: click.Context, quick: bool):
    """Run the acceptance catalog"""
    results = run_catalog(seed=ctx.obj.seed, quick=quick)
    print_results(results)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


@cli.command(name='config')
def print_config():
    """Print an example samuel.cfg"""
    print(EXAMPLE_CONFIG.format(prime=Settings.prime), end='')
    return EXIT_OK


def run_command(argv: Sequence[str]) -> int:
    try:
        result = cli.main(args=list(argv), prog_name='samuel', standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.Abort:
        _fatal('Aborted')
        return EXIT_USAGE
    except click.ClickException as e:
        _fatal(e.format_message())
        return EXIT_USAGE
    except TheoremViolation as e:
        _fatal(f'Theorem check failed: {e}')
        return EXIT_FAILED
    except (ProblemSpecError, ValidationError) as e:
        _fatal(str(e))
        return EXIT_USAGE
    except SamuelError as e:
        _fatal(f'{type(e).__name__}: {e}')
        return EXIT_COMPUTATION
    return result if isinstance(result, int) else EXIT_OK


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == '__main__':
    main()
