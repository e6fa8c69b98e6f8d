"""Command line front end.

    regdepth depth --input pts.csv --flat "0,0,0;1,0,0"
    regdepth catline --input pts.csv
    regdepth generate kind=r31-lower-bound n=60 d=3 seed=4 --output r31.csv
    regdepth bounds --d 3 --k 1

Every command except generate and render prints a JSON report.
Exit codes: 0 success, 2 malformed input, 3 unsupported dimension or
flat combination, 4 a construction failed its verification."""

import argparse
import logging
import sys

from regdepth import config
from regdepth.exceptions import RegDepthError, InputError, UnsupportedCaseError
from regdepth.geometry.scalar import parse_scalar
from regdepth.geometry.flats import AffineFlat, VerticalInfinity
from regdepth.depth.engine import regression_depth, tukey_depth, crossing_distance
from regdepth.depth.audit import certify_not_deeper
from regdepth.constructions.centerpoint import centerpoint, centerpoint_target
from regdepth.constructions.hamsandwich import ham_sandwich_2d, ham_sandwich_3d, ham_sandwich_check
from regdepth.constructions.catline import catline, catline_partition, catline_target
from regdepth.constructions.sixsector import six_sector_partition
from regdepth.constructions.deepflats import (construct_deep_line_3d, construct_deep_plane_3d,
                                              STRATEGIES)
from regdepth.search.deepest import deepest_line_2d, deepest_flat_heuristic_3d
from regdepth.search.approx import ApproxParams, approx_deepest
from regdepth.tverberg import (tverberg_partition_2d, catline_tverberg_partition,
                               verify_flat_tverberg)
from regdepth.bounds import TABLE
from regdepth.datagen import GeneratorSpec, generate
from regdepth.dataset import Dataset
from regdepth.reporters import ResultReporter
from regdepth.render import render_svg, OVERLAYS

COMMANDS = ('depth', 'tukey', 'crossing-distance', 'catline', 'centerpoint',
            'hamsandwich2d', 'hamsandwich3d', 'sixsector', 'deep-line3d',
            'deep-plane3d', 'deepest-line2d', 'heuristic3d', 'approx-deepest',
            'tverberg2d', 'tverberg-catline', 'verify-tverberg', 'generate',
            'bounds', 'render')

def build_parser():
    parser = argparse.ArgumentParser(prog='regdepth',
                                     description='Exact regression depth of flats and deep-flat constructions.')
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('options', nargs='*',
                        help='generator options key=value (generate only)')
    parser.add_argument('--input', action='append', default=[],
                        help='dataset CSV; repeat once per set for the ham sandwich commands')
    parser.add_argument('--k', type=int, default=None, help='flat dimension')
    parser.add_argument('--d', type=int, default=None, help='ambient dimension (bounds)')
    parser.add_argument('--flat', action='append', default=[],
                        help='flat "anchor;span;...", or "infinity" for the flat at vertical infinity')
    parser.add_argument('--parts', default=None, help='partition "0,1,2;3,4,5"')
    parser.add_argument('--delta', default=None, help='approximation factor in (0,1)')
    parser.add_argument('--seed', type=int, default=None,
                        help='random seed (default ${0} or 0)'.format(config.SEED_ENV))
    parser.add_argument('--budget', type=int, default=None, help='candidate budget for bounded searches')
    parser.add_argument('--strategy', default='median', choices=STRATEGIES)
    parser.add_argument('--audit', type=int, default=0,
                        help='random double wedges checked against a depth certificate')
    parser.add_argument('--overlay', default='none', choices=OVERLAYS)
    parser.add_argument('--format', default=None, choices=('json', 'svg', 'csv'))
    parser.add_argument('--output', default=None, help='write to this file instead of stdout')
    parser.add_argument('--verbose', action='store_true')
    return parser

def _datasets(args, count=None):
    if not args.input:
        raise InputError("Error! {0} needs --input".format(args.command))
    if count is not None and len(args.input) != count:
        raise InputError("Error! {0} needs exactly {1} --input files, got {2}".format(args.command, count, len(args.input)))
    return [Dataset.from_csv(path) for path in args.input]

def _dataset(args):
    return _datasets(args, 1)[0]

def _parse_flat(text, d=None, k=None):
    if text.strip().lower() == 'infinity':
        if d is None or k is None:
            raise InputError("Error! the flat at infinity needs a dataset dimension and --k")
        return VerticalInfinity.for_regression(d, k)
    return AffineFlat.parse(text)

def _parse_parts(text):
    if text is None:
        raise InputError("Error! --parts is required")
    try:
        return [[int(i) for i in part.split(',') if i.strip() != ''] for part in text.split(';')]
    except ValueError:
        raise InputError("Error! cannot parse --parts {0!r}".format(text))

def _one_flat(args):
    if len(args.flat) != 1:
        raise InputError("Error! {0} needs exactly one --flat".format(args.command))
    return _parse_flat(args.flat[0])

def _check_k(args, flat):
    if args.k is not None and args.k != flat.k:
        raise InputError("Error! --k {0} is inconsistent with a flat spanned by {1} vectors".format(args.k, flat.k))
    return flat.k

def _report(args, datasets, **parameters):
    digest = None
    if datasets:
        digests = [ds.digest() for ds in datasets]
        digest = digests[0] if len(digests) == 1 else digests
    parameters = {key: value for key, value in parameters.items() if value is not None}
    return ResultReporter(args.command, input_digest=digest, parameters=parameters)

def cmd_depth(args):
    ds = _dataset(args)
    flat = _one_flat(args)
    k = _check_k(args, flat)
    seed = _seed(args) if args.audit else None
    r = _report(args, [ds], k=k, flat=flat.to_text(), audit=args.audit or None, seed=seed)
    cert = regression_depth(flat, k, ds.points)
    r.report('flat', flat)
    r.report('certificate', cert)
    r.report('vertical', flat.is_vertical())
    if args.audit:
        r.report('audit_passed', certify_not_deeper(cert, flat, k, ds.points, args.audit, seed))
    return r

def cmd_tukey(args):
    ds = _dataset(args)
    flat = _one_flat(args)
    if flat.k != 0:
        raise InputError("Error! tukey needs a point, got a {0}-flat".format(flat.k))
    r = _report(args, [ds], point=flat.to_text())
    r.report('certificate', tukey_depth(flat.anchor, ds.points))
    return r

def cmd_crossing_distance(args):
    ds = _dataset(args)
    if len(args.flat) != 2:
        raise InputError("Error! crossing-distance needs two --flat values")
    first = [t for t in args.flat if t.strip().lower() != 'infinity']
    k = args.k if args.k is not None else (AffineFlat.parse(first[0]).k if first else None)
    f, g = (_parse_flat(t, ds.d, k) for t in args.flat)
    r = _report(args, [ds], flats=list(args.flat), k=args.k)
    r.report('certificate', crossing_distance(f, g, ds.points))
    return r

def cmd_catline(args):
    ds = _dataset(args)
    r = _report(args, [ds])
    line = catline(ds.points)
    r.report('flat', line)
    r.report('partition', catline_partition(ds.points))
    r.report('certificate', regression_depth(line, 1, ds.points))
    r.report('guarantee', catline_target(len(ds)))
    return r

def cmd_centerpoint(args):
    ds = _dataset(args)
    seed = _seed(args)
    r = _report(args, [ds], seed=seed)
    c = centerpoint(ds.points, seed=seed)
    r.report('point', AffineFlat(c))
    r.report('certificate', tukey_depth(c, ds.points))
    r.report('guarantee', centerpoint_target(len(ds), ds.d))
    return r

def cmd_hamsandwich2d(args):
    sets = _datasets(args, 2)
    r = _report(args, sets)
    h = ham_sandwich_2d(sets[0].points, sets[1].points)
    r.report('hyperplane', h)
    r.report('counts', [{'below': lo, 'above': hi} for lo, hi in
                        ham_sandwich_check(h, [s.points for s in sets])])
    return r

def cmd_hamsandwich3d(args):
    sets = _datasets(args, 3)
    seed = _seed(args)
    r = _report(args, sets, seed=seed, budget=args.budget)
    h = ham_sandwich_3d(sets[0].points, sets[1].points, sets[2].points, seed=seed, budget=args.budget)
    r.report('hyperplane', h)
    r.report('counts', [{'below': lo, 'above': hi} for lo, hi in
                        ham_sandwich_check(h, [s.points for s in sets])])
    return r

def cmd_sixsector(args):
    ds = _dataset(args)
    r = _report(args, [ds])
    witness = six_sector_partition(ds.points)
    witness.verify(ds.points)
    r.report('witness', witness)
    return r

def cmd_deep_line3d(args):
    ds = _dataset(args)
    seed = _seed(args)
    r = _report(args, [ds], seed=seed, strategy=args.strategy)
    flat, guarantee = construct_deep_line_3d(ds.points, strategy=args.strategy, seed=seed)
    r.report('flat', flat)
    r.report('certificate', regression_depth(flat, 1, ds.points))
    r.report('guarantee', guarantee)
    return r

def cmd_deep_plane3d(args):
    ds = _dataset(args)
    seed = _seed(args)
    r = _report(args, [ds], seed=seed)
    flat, guarantee = construct_deep_plane_3d(ds.points, seed=seed)
    r.report('flat', flat)
    r.report('certificate', regression_depth(flat, 2, ds.points))
    r.report('guarantee', guarantee)
    return r

def cmd_deepest_line2d(args):
    ds = _dataset(args)
    r = _report(args, [ds])
    line, cert = deepest_line_2d(ds.points)
    r.report('flat', line)
    r.report('certificate', cert)
    return r

def cmd_heuristic3d(args):
    ds = _dataset(args)
    seed = _seed(args)
    k = ds.regression_k() if args.k is None else args.k
    budget = config.HEURISTIC_BUDGET if args.budget is None else args.budget
    r = _report(args, [ds], k=k, seed=seed, budget=budget)
    flat, cert = deepest_flat_heuristic_3d(ds.points, k, budget=budget, seed=seed)
    r.report('flat', flat)
    r.report('certificate', cert)
    r.report('exact', False)
    return r

def cmd_approx_deepest(args):
    ds = _dataset(args)
    seed = _seed(args)
    k = ds.regression_k() if args.k is None else args.k
    if args.delta is None:
        raise InputError("Error! approx-deepest needs --delta")
    params = ApproxParams.create(parse_scalar(args.delta), ds.d, k, len(ds), seed=seed)
    r = _report(args, [ds], k=k, seed=seed, budget=args.budget, approx=params)
    flat, cert = approx_deepest(ds.points, k, params, budget=args.budget)
    r.report('flat', flat)
    r.report('certificate', cert)
    return r

def cmd_tverberg2d(args):
    ds = _dataset(args)
    seed = _seed(args)
    r = _report(args, [ds], seed=seed, budget=args.budget)
    result = tverberg_partition_2d(ds.points, seed=seed, budget=args.budget)
    r.report('tverberg', result)
    r.report('certificate', tukey_depth(result.flat.anchor, ds.points))
    return r

def cmd_tverberg_catline(args):
    ds = _dataset(args)
    r = _report(args, [ds])
    r.report('tverberg', catline_tverberg_partition(ds.points))
    return r

def cmd_verify_tverberg(args):
    ds = _dataset(args)
    flat = _one_flat(args)
    k = _check_k(args, flat)
    parts = _parse_parts(args.parts)
    r = _report(args, [ds], k=k, flat=flat.to_text(), parts=parts)
    depths = verify_flat_tverberg(flat, k, parts, ds.points)
    r.report('per_part_depth', depths)
    r.report('valid', all(v >= 1 for v in depths))
    return r

def cmd_generate(args):
    spec = GeneratorSpec.parse(args.options)
    if args.seed is not None and not any(o.startswith('seed=') for o in args.options):
        spec.seed = args.seed
    k = args.k
    if spec.kind == 'r31-lower-bound' and k is None:
        k = 1
    ds = Dataset(generate(spec), k=k, d=spec.d)
    r = _report(args, [ds], spec=spec.to_dict())
    r.report('n', len(ds))
    r.report('dataset', ds.to_text())
    r.artifact = ds.to_text()
    r.artifact_format = 'csv'
    return r

def cmd_bounds(args):
    if args.d is None:
        raise InputError("Error! bounds needs --d")
    if args.d < 1:
        raise InputError("Error! --d must be positive")
    if args.k is not None and not 0 <= args.k <= args.d - 1:
        raise UnsupportedCaseError("Error! k must be in 0..{0} for d={1}".format(args.d - 1, args.d))
    r = _report(args, [], d=args.d, k=args.k)
    entries = TABLE.for_dimension(args.d, args.k)
    r.report('entries', entries)
    if args.k is not None:
        r.report('deep_flat_constant', TABLE.deep_flat_constant(args.d, args.k))
    return r

def cmd_render(args):
    ds = _dataset(args)
    seed = _seed(args)
    r = _report(args, [ds], overlay=args.overlay, seed=seed)
    svg = render_svg(ds.points, overlay=args.overlay, seed=seed)
    r.report('overlay', args.overlay)
    r.artifact = svg
    r.artifact_format = 'svg'
    return r

def _seed(args):
    if args.seed is None:
        args.seed = config.default_seed()
    return args.seed

HANDLERS = {
    'depth': cmd_depth,
    'tukey': cmd_tukey,
    'crossing-distance': cmd_crossing_distance,
    'catline': cmd_catline,
    'centerpoint': cmd_centerpoint,
    'hamsandwich2d': cmd_hamsandwich2d,
    'hamsandwich3d': cmd_hamsandwich3d,
    'sixsector': cmd_sixsector,
    'deep-line3d': cmd_deep_line3d,
    'deep-plane3d': cmd_deep_plane3d,
    'deepest-line2d': cmd_deepest_line2d,
    'heuristic3d': cmd_heuristic3d,
    'approx-deepest': cmd_approx_deepest,
    'tverberg2d': cmd_tverberg2d,
    'tverberg-catline': cmd_tverberg_catline,
    'verify-tverberg': cmd_verify_tverberg,
    'generate': cmd_generate,
    'bounds': cmd_bounds,
    'render': cmd_render,
}

def run_command(argv):
    """Parse argv and run one command; returns its ResultReporter.
    Library errors propagate."""

    args = build_parser().parse_intermixed_args(argv)
    if args.options and args.command != 'generate':
        raise InputError("Error! unexpected arguments {0}".format(' '.join(args.options)))
    reporter = HANDLERS[args.command](args)
    reporter.format = args.format
    reporter.output = args.output
    return reporter

def render_output(reporter):
    """Text written for a finished command: the artifact (CSV or SVG)
    unless --format json was asked for, else the JSON report."""

    artifact = getattr(reporter, 'artifact', None)
    fmt = getattr(reporter, 'format', None)
    if artifact is not None and fmt in (None, reporter.artifact_format):
        return artifact
    if fmt not in (None, 'json'):
        raise InputError("Error! {0} does not produce {1} output".format(reporter.command, fmt))
    return reporter.to_json()

def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    verbose = '--verbose' in argv
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format='%(levelname)s %(message)s', stream=sys.stderr)
    try:
        reporter = run_command(argv)
        text = render_output(reporter)
    except RegDepthError as e:
        sys.stderr.write('regdepth: {0}\n'.format(e))
        return e.exit_code
    except ValueError as e:
        sys.stderr.write('regdepth: {0}\n'.format(e))
        return InputError.exit_code
    if reporter.output:
        with open(reporter.output, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0

if __name__ == '__main__':
    sys.exit(main())
