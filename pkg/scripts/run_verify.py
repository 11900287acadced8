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
Run every verification scenario and print one line per scenario.

    $ python run_verify.py [--seed N] [--threads K] [--out DIR] [scenario ...]
"""

import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.abspath('.'))
sys.path.insert(0, os.path.abspath('..'))
from ppt import config
from ppt.errors import PPTError
from ppt.experiment import ExperimentSpec, run_experiment
from ppt.scenarios import SCENARIOS


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.strip())
    parser.add_argument('scenarios', nargs='*')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--threads', type=int, default=config.THREADS)
    parser.add_argument('--out', help="directory for the JSON reports")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    config.THREADS = max(1, args.threads)

    names = args.scenarios or sorted(SCENARIOS)
    failed = []
    for name in names:
        spec = ExperimentSpec('verify', {'scenario': name}, seed=args.seed)
        try:
            report = run_experiment(spec)
        except PPTError as e:
            print("%-20s ERROR  %s" % (name, e))
            failed.append(name)
            continue
        status = "ok" if report.passed else "FAILED"
        print("%-20s %-6s %6d ms" % (name, status, report.wall_time_ms))
        if not report.passed:
            failed.append(name)
        if args.out:
            path = os.path.join(args.out, name + '.json')
            with open(path, 'w') as f:
                f.write(report.to_json() + "\n")

    if failed:
        print("failed: %s" % ", ".join(failed))
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
