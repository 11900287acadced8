# PPT - Point Process Transport
# Copyright (C) 2026 The PPT Authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
The ``ppt`` command: run one experiment spec and write its report.

    ppt <kind> --spec FILE [--out FILE] [--seed N] [--threads K]

Exit status is 0 on success, 1 when a ``verify`` scenario fails a check and
2 for invalid specs, library errors and unreadable or unwritable files.
"""

import argparse
import json
import logging
import sys

from . import config
from .errors import PPTError, ValidationError
from .experiment import KINDS, ExperimentSpec, run_experiment

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog='ppt',
        description="Point process transport experiments.")
    parser.add_argument('kind', choices=KINDS)
    parser.add_argument('--spec', required=True,
                        help="experiment spec (JSON file, '-' for stdin)")
    parser.add_argument('--out', help="write the report here")
    parser.add_argument('--seed', type=int,
                        help="override the spec's seed")
    parser.add_argument('--threads', type=int,
                        help="worker threads (default: $PPT_THREADS or 1)")
    parser.add_argument('-v', '--verbose', action='count', default=0)
    parser.add_argument('-q', '--quiet', action='store_true')
    return parser


def log_level(args):
    if args.quiet:
        return logging.ERROR
    if args.verbose >= 2:
        return logging.DEBUG
    if args.verbose == 1:
        return logging.INFO
    return logging.WARNING


def read_spec(path):
    if path == '-':
        text = sys.stdin.read()
    else:
        with open(path) as f:
            text = f.read()
    try:
        d = json.loads(text)
    except ValueError as e:
        raise ValidationError("invalid JSON: %s" % e)
    return d


def load_spec(args):
    d = read_spec(args.spec)
    if isinstance(d, dict):
        if d.get('kind', args.kind) != args.kind:
            raise ValidationError("spec kind %r does not match command %r"
                                  % (d['kind'], args.kind), "kind")
        d = dict(d, kind=args.kind)
        if args.seed is not None:
            d['seed'] = args.seed
    return ExperimentSpec.from_dict(d)


def write_report(report, path):
    text = report.to_json() + "\n"
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, 'w') as f:
        f.write(text)
    logger.info("report written to %s", path)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=log_level(args),
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads is not None:
        if args.threads < 1:
            parser.error("--threads must be at least 1")
        config.THREADS = args.threads

    try:
        spec = load_spec(args)
        report = run_experiment(spec)
        write_report(report, args.out or spec.output_path)
    except ValidationError as e:
        logger.error("invalid spec: %s", e)
        return EXIT_ERROR
    except PPTError as e:
        logger.error("%s", e)
        return EXIT_ERROR
    except (IOError, OSError) as e:
        logger.error("%s", e)
        return EXIT_ERROR

    if report.passed is False:
        logger.warning("verification failed")
        return EXIT_FAILED
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
