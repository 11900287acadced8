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
Exceptions raised by ppt. Everything the library raises on purpose derives
from :class:`PPTError`.
"""


class PPTError(Exception):
    pass


class ValidationError(PPTError, ValueError):
    """
    Bad input. ``path`` names the offending field, e.g.
    ``parameters.window``.
    """
    def __init__(self, message, path=None):
        self.path = path
        if path:
            message = "%s: %s" % (path, message)
        super(ValidationError, self).__init__(message)


class ExpressionParseError(ValidationError):
    def __init__(self, message, expr, position):
        self.expr = expr
        self.position = position
        msg = "%s at position %d in %r" % (message, position, expr)
        super(ExpressionParseError, self).__init__(msg)


class UnsupportedDimensionError(PPTError):
    pass


class QuadratureError(PPTError):
    """
    Raised when adaptive refinement stops before reaching the tolerance.
    ``trace`` holds (step, estimate, error) tuples of the refinement.
    """
    def __init__(self, message, trace=None):
        self.trace = list(trace or [])
        super(QuadratureError, self).__init__(message)


class OutsideWindowError(ValidationError):
    pass


class UndefinedInputError(PPTError):
    pass


class ZeroMassError(PPTError):
    pass


class EnvelopeViolationError(PPTError):
    def __init__(self, observed, envelope):
        self.observed = observed
        self.envelope = envelope
        super(EnvelopeViolationError, self).__init__(
            "density value %r exceeds declared density_sup %r"
            % (observed, envelope))


class MixerError(PPTError):
    pass


class GibbsHardnessError(PPTError):
    def __init__(self, message, diagnostics):
        self.diagnostics = dict(diagnostics)
        super(GibbsHardnessError, self).__init__(
            "%s (%s)" % (message, ", ".join(
                "%s=%r" % kv for kv in sorted(self.diagnostics.items()))))


class InvalidTimeChangeError(ValidationError):
    pass


class InconsistentBoundError(PPTError):
    pass


class MarginalMismatchError(ValidationError):
    pass


class NonSquareError(ValidationError):
    pass


class TransportError(PPTError):
    pass


class TruncationError(PPTError):
    pass


class DegenerateEventError(PPTError):
    pass


class CoareaRangeError(PPTError):
    def __init__(self, observed_range, limit):
        self.observed_range = observed_range
        self.limit = limit
        super(CoareaRangeError, self).__init__(
            "observed functional range %r exceeds %d thresholds"
            % (observed_range, limit))


class LipschitzViolationError(PPTError):
    pass


class SharedAtomError(PPTError):
    pass


class ExperimentError(PPTError):
    """
    Wraps a library error raised while running an experiment, keeping the
    spec that produced it.
    """
    def __init__(self, spec_echo, cause):
        self.spec_echo = spec_echo
        self.cause = cause
        super(ExperimentError, self).__init__(
            "%s: %s" % (type(cause).__name__, cause))
