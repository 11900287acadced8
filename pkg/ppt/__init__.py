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


__version__ = '0.1.0'

from .window import Window
from .configuration import Configuration
from .intensity import IntensityMeasure
from .seed import SeedSpec, Estimate
from .metrics import (rho0, rho1, rho2, rho1_normalized, rho2_normalized,
                      rho2_marked)
from .processes.process import PointProcess
from .experiment import ExperimentSpec, Report, run_experiment
