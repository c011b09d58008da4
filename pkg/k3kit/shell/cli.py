from fractions import Fraction
import functools
import json
import logging

import click
import numpy as np

from k3kit import settings
from k3kit.exceptions import K3KitError
from k3kit.lattice import LatticeVector, RootConstraint, enumerate_roots, make_lattice
from k3kit.lattice.exact import to_fraction
from k3kit.orbit import ReductionCertificate, canonicalize_root, discriminant_component, random_root
from k3kit.period import PeriodDomain, TubePoint, gram_det, normalize_basis, tube_embed
from k3kit.lattice.vector import ComplexVector
from k3kit.mirror import marked_pair, mirror_swap
from k3kit.counting import count_roots_with_degree, euler_product, log_derivative_series, product_expansion, theta_series
from k3kit.counting.profile import STRATEGIES
from k3kit.spectral import k3_det_assembly, torus_det
from k3kit.shell.emit import emit, to_file


K3_DESCRIPTOR = 'U^3+E8(-1)^2'

QSERIES_KINDS = ('eta', 'theta', 'product', 'lambert')


class RationalList(click.ParamType):
    """
    Un vettore scritto come array JSON di interi o di stringhe "p/q".
    """

    name = 'vector'

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return [to_fraction(c) for c in value]
        try:
            data = json.loads(value)
            if not isinstance(data, list):
                raise ValueError('not an array')
            return [to_fraction(c) for c in data]
        except (ValueError, TypeError, ZeroDivisionError) as e:
            self.fail('%r is not a JSON array of integers or "p/q" strings (%s)' % (value, e), param, ctx)


class RationalMatrix(click.ParamType):
    """
    Una matrice scritta come array JSON di righe.
    """

    name = 'matrix'

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return [[to_fraction(c) for c in row] for row in value]
        try:
            data = json.loads(value)
            if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
                raise ValueError('not an array of arrays')
            if len(set(len(row) for row in data)) > 1:
                raise ValueError('rows have different lengths')
            return [[to_fraction(c) for c in row] for row in data]
        except (ValueError, TypeError, ZeroDivisionError) as e:
            self.fail('%r is not a JSON array of rows (%s)' % (value, e), param, ctx)


VECTOR = RationalList()
MATRIX = RationalMatrix()


def common_options(command):
    """
    Le opzioni condivise da tutti i sottocomandi.
    """
    command = click.option(
        '--output', 'output', type=click.Path(dir_okay=False), default=None,
        help='Write the result to this file instead of stdout'
    )(command)
    command = click.option(
        '--threads', 'threads', type=click.IntRange(min=1), default=settings.DEFAULT.THREADS, show_default=True,
        help='Worker processes for enumerations'
    )(command)
    command = click.option(
        '--seed', 'seed', type=int, default=settings.DEFAULT.SEED, show_default=True,
        help='Seed of the pseudo-random generator'
    )(command)
    command = click.option(
        '--format', 'fmt', type=click.Choice(settings.SUPPORTED['FORMATS']), default='text', show_default=True,
        help='Output format'
    )(command)
    return command


def domain_errors(callback):
    """
    Converte gli errori di dominio nella riga "ERROR <code>: <detail>"
    su stderr, con codice di uscita 3.
    """
    @functools.wraps(callback)
    def wrapper(*args, **kwargs):
        try:
            return callback(*args, **kwargs)
        except K3KitError as e:
            detail = ' '.join(str(e).split())
            click.echo('ERROR %s: %s' % (e.code, detail), err=True)
            click.get_current_context().exit(3)
    return wrapper


def _finish(result, fmt, output):
    if output is not None:
        to_file(result, fmt, output)
    else:
        click.echo(emit(result, fmt), nl=False)


def _vector(lattice, coords):
    return LatticeVector(lattice, coords)


def _period_point(lattice, basis, frame):
    domain = PeriodDomain(lattice)
    rows = np.array([[float(c) for c in row] for row in basis], dtype=float)
    return normalize_basis(rows, domain=domain, frame=frame)


@click.group()
@click.option('--verbose', 'verbose', is_flag=True, default=False, help='Log progress of long computations')
@click.option('--config', 'config_file', type=click.Path(dir_okay=False), default=None, help='YAML file overriding numeric settings')
def cli(verbose, config_file):
    """
    k3kit: reticoli, domini dei periodi e prodotti automorfi.
    """
    if config_file is not None:
        settings.DEFAULT.update(settings.from_file(config_file))
    if verbose:
        settings.set_print_events(True)
        logging.basicConfig(
            level=logging.INFO, format='%(asctime)s %(name)s %(message)s',
            datefmt=settings.LOGGING['DATE_FORMAT']
        )


@cli.command('lattice')
@common_options
@click.option('--lattice', 'descriptor', required=True, help='Lattice descriptor, i.e. "U^3+E8(-1)^2"')
@domain_errors
def lattice_command(fmt, seed, threads, output, descriptor):
    _finish(make_lattice(descriptor), fmt, output)


@cli.command('roots')
@common_options
@click.option('--lattice', 'descriptor', required=True, help='Lattice descriptor')
@click.option('--norm', 'norm', type=int, default=-2, show_default=True, help='Norm of the enumerated vectors')
@click.option(
    '--pair', 'pairings', type=(VECTOR, int), multiple=True,
    help='Linear constraint <x, VECTOR> = VALUE, may be repeated'
)
@click.option('--bound', 'bound', type=click.IntRange(min=1), default=None, help='Coordinate bound |x_i| <= BOUND')
@domain_errors
def roots_command(fmt, seed, threads, output, descriptor, norm, pairings, bound):
    lattice = make_lattice(descriptor)
    constraint = RootConstraint(norm, [(_vector(lattice, w), c) for w, c in pairings], bound)
    _finish(enumerate_roots(lattice, constraint, workers=threads), fmt, output)


@cli.command('reduce')
@common_options
@click.option('--lattice', 'descriptor', default=K3_DESCRIPTOR, show_default=True, help='Lattice descriptor')
@click.option('--vector', 'vector', type=VECTOR, default=None, help='The root to reduce')
@click.option(
    '--random-steps', 'random_steps', type=click.IntRange(min=0), default=0,
    help='Reduce a seeded random root built with this many generators'
)
@click.option('--polarization', 'polarization', type=VECTOR, default=None, help='Find the discriminant component for l')
@click.option('--budget', 'budget', type=click.IntRange(min=1), default=settings.DEFAULT.STEP_BUDGET, show_default=True)
@click.option('--replay', 'replay', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Replay a certificate file instead of reducing')
@domain_errors
def reduce_command(fmt, seed, threads, output, descriptor, vector, random_steps, polarization, budget, replay):
    lattice = make_lattice(descriptor)
    if replay is not None:
        with open(replay) as fd:
            certificate = ReductionCertificate.from_json(fd.read(), lattice)
        _finish({
            "lattice": lattice.label,
            "replay": certificate.replay(),
            "steps": certificate.steps
        }, fmt, output)
        return
    if vector is not None:
        delta = _vector(lattice, vector)
    elif random_steps > 0:
        delta = random_root(lattice, random_steps, np.random.default_rng(seed))
    else:
        raise click.UsageError('Pass either --vector, --random-steps or --replay')
    if polarization is not None:
        result = discriminant_component(delta, _vector(lattice, polarization), budget=budget)
    else:
        result = canonicalize_root(delta, budget)
    _finish(result, fmt, output)


@cli.command('coords')
@common_options
@click.option('--lattice', 'descriptor', default=K3_DESCRIPTOR, show_default=True, help='Lattice descriptor')
@click.option('--basis', 'basis', type=MATRIX, required=True, help='Rows spanning a positive p-plane')
@click.option('--frame', 'frame', is_flag=True, default=False, help='Rows are already in the orthonormal frame')
@domain_errors
def coords_command(fmt, seed, threads, output, descriptor, basis, frame):
    _finish(_period_point(make_lattice(descriptor), basis, frame), fmt, output)


@cli.command('tube')
@common_options
@click.option('--lattice', 'descriptor', required=True, help='Hyperbolic lattice S, i.e. "U+E8(-1)"')
@click.option('--real', 'real', type=VECTOR, required=True, help='Real part x of w')
@click.option('--imag', 'imag', type=VECTOR, required=True, help='Imaginary part y of w, in the positive cone')
@domain_errors
def tube_command(fmt, seed, threads, output, descriptor, real, imag):
    lattice = make_lattice(descriptor)
    w = ComplexVector(lattice, real, imag)
    _finish(tube_embed(TubePoint(w)), fmt, output)


@cli.command('mirror')
@common_options
@click.option('--ambient', 'descriptor', default=K3_DESCRIPTOR, show_default=True, help='The K3 lattice descriptor')
@click.option('--picard', 'picard', required=True, help='Comma separated summand positions forming M, i.e. "0,3"')
@click.option('--u-choice', 'u_choice', type=int, default=None, help='Summand position of the chosen U')
@click.option('--swaps', 'swaps', type=click.IntRange(min=0), default=1, show_default=True)
@domain_errors
def mirror_command(fmt, seed, threads, output, descriptor, picard, u_choice, swaps):
    try:
        blocks = [int(k) for k in picard.split(',') if k.strip() != '']
    except ValueError:
        raise click.BadParameter('%r is not a list of summand positions' % picard, param_hint='--picard')
    data = marked_pair(blocks, make_lattice(descriptor), u_choice)
    for _ in range(swaps):
        data = mirror_swap(data)
    _finish(data, fmt, output)


@cli.command('count')
@common_options
@click.option('--lattice', 'descriptor', required=True, help='Hyperbolic lattice S')
@click.option('--l', 'l', type=VECTOR, required=True, help='The polarization l')
@click.option('--max-n', 'max_n', type=click.IntRange(min=0), default=settings.DEFAULT.TRUNCATION, show_default=True)
@click.option('--strategy', 'strategy', type=click.Choice(STRATEGIES), default='auto', show_default=True)
@domain_errors
def count_command(fmt, seed, threads, output, descriptor, l, max_n, strategy):
    lattice = make_lattice(descriptor)
    profile = count_roots_with_degree(lattice, _vector(lattice, l), max_n, strategy, workers=threads)
    _finish(profile, fmt, output)


@cli.command('qseries')
@common_options
@click.option('--kind', 'kind', type=click.Choice(QSERIES_KINDS), default='eta', show_default=True)
@click.option('--order', 'order', type=int, default=settings.DEFAULT.TRUNCATION, show_default=True)
@click.option('--lattice', 'descriptor', default=None, help='Lattice for theta, product and lambert series')
@click.option('--l', 'l', type=VECTOR, default=None, help='Polarization for product and lambert series')
@click.option('--weyl-exponent', 'weyl_exponent', default='0', show_default=True, help='Exponent of the leading q^w')
@domain_errors
def qseries_command(fmt, seed, threads, output, kind, order, descriptor, l, weyl_exponent):
    if kind == 'eta':
        _finish(euler_product(order), fmt, output)
        return
    if descriptor is None:
        raise click.UsageError('--lattice is required for %s series' % kind)
    lattice = make_lattice(descriptor)
    if kind == 'theta':
        _finish(theta_series(lattice, order), fmt, output)
        return
    if l is None:
        raise click.UsageError('--l is required for %s series' % kind)
    profile = count_roots_with_degree(lattice, _vector(lattice, l), order, workers=threads)
    if kind == 'lambert':
        _finish(log_derivative_series(profile), fmt, output)
    else:
        try:
            exponent = Fraction(weyl_exponent)
        except (ValueError, ZeroDivisionError):
            raise click.BadParameter('%r is not a rational number' % weyl_exponent, param_hint='--weyl-exponent')
        _finish(product_expansion(profile, exponent, order), fmt, output)


@cli.command('etadet')
@common_options
@click.option('--tau', 'tau', required=True, help='Torus modulus, i.e. "0.5+1i"')
@click.option('--tol', 'tol', type=float, default=settings.DEFAULT.TOLERANCE, show_default=True)
@domain_errors
def etadet_command(fmt, seed, threads, output, tau, tol):
    try:
        modulus = complex(tau.replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise click.BadParameter('%r is not a complex number' % tau, param_hint='--tau')
    _finish(torus_det(modulus, precision=tol), fmt, output)


@cli.command('assemble')
@common_options
@click.option('--lattice', 'descriptor', default=K3_DESCRIPTOR, show_default=True, help='Lattice descriptor')
@click.option('--basis', 'basis', type=MATRIX, required=True, help='Rows spanning the positive plane')
@click.option('--frame', 'frame', is_flag=True, default=False, help='Rows are already in the orthonormal frame')
@click.option('--phi', 'phi', default='0', show_default=True, help='Value of phi at the point, a complex number')
@click.option('--constant', 'constant', type=float, default=1.0, show_default=True)
@domain_errors
def assemble_command(fmt, seed, threads, output, descriptor, basis, frame, phi, constant):
    try:
        value = complex(phi.replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise click.BadParameter('%r is not a complex number' % phi, param_hint='--phi')
    point = _period_point(make_lattice(descriptor), basis, frame)
    _finish({
        "gram_det": gram_det(point),
        "phi": value,
        "constant": constant,
        "value": k3_det_assembly(point, value, constant)
    }, fmt, output)


def main(argv=None):
    """
    Punto di ingresso della CLI.
    """
    return cli.main(args=argv, prog_name='k3kit')
