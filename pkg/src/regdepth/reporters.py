"""Reporters collect the results of one command and turn them into a
JSON report.

A report holds: schema, command, input_digest, parameters, result and
timing. Everything except timing depends only on the inputs, so two
runs with the same inputs and seed give identical text once the timing
field is removed."""

import json
import time
from fractions import Fraction

import numpy as np

from regdepth import config
from regdepth.geometry.scalar import rational_text, decimal_text

def exact(x):
    """A rational value as both exact text and decimal rendering."""

    x = Fraction(x)
    return {'exact': rational_text(x), 'decimal': decimal_text(x)}

def to_plain(value):
    """JSON-ready copy of a result value: objects with to_dict() are
    expanded, Fractions become exact/decimal pairs."""

    if hasattr(value, 'to_dict'):
        return to_plain(value.to_dict())
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return exact(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_plain(v) for v in value]
    raise TypeError("Error! cannot report a value of type {0}".format(type(value).__name__))

class Reporter(object):
    """Base class for Reporters"""

    def __init__(self):
        self._reports = []

    def report(self, name, value):
        self._reports.append((name, to_plain(value)))

    def reports(self):
        """Return the list of (name, value) pairs collected so far."""

        return self._reports

class ResultReporter(Reporter):
    """Collects the result sections of a command and the clock."""

    def __init__(self, command, input_digest=None, parameters=None):
        super().__init__()
        self.command = command
        self.input_digest = input_digest
        self.parameters = to_plain(parameters or {})
        # CSV or SVG text written instead of the report, if any
        self.artifact = None
        self.artifact_format = None
        self.format = None
        self.output = None
        self._start = time.perf_counter()

    def to_dict(self, timing=True):
        out = {'schema': config.JSON_SCHEMA,
               'command': self.command,
               'input_digest': self.input_digest,
               'parameters': self.parameters,
               'result': dict(self._reports)}
        if timing:
            out['timing'] = {'seconds': round(time.perf_counter() - self._start, 6)}
        return out

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing=timing), sort_keys=True, indent=2) + '\n'
