"""Datasets are containers for exact points read from, or written to,
CSV files.

A dataset file has a header `x,y` or `x,y,z`, one point per row with
values written as decimals or rationals ("p/q"), and may contain `#`
comment lines. A comment of the form

    # k=1

declares the number of independent variables; without it the first
d - 1 coordinates are independent.

dataset.points holds the points as tuples of Fractions
dataset.k holds the declared independent-variable count (or None)
"""

import hashlib
import io

import pandas as pd

from regdepth.exceptions import InputError
from regdepth.geometry.scalar import make_points, dataset_dimension, rational_text

COLUMNS = {2: ['x', 'y'], 3: ['x', 'y', 'z']}

def _pragma_k(text):
    k = None
    for line in text.splitlines():
        s = line.strip()
        if not s.startswith('#'):
            continue
        body = s[1:].strip().replace(' ', '')
        if body.startswith('k='):
            try:
                k = int(body[2:])
            except ValueError:
                raise InputError("Error! bad k= pragma {0!r}".format(line))
    return k

class Dataset(object):

    def __init__(self, points=(), k=None, d=None):
        self.points = make_points(points)
        self.k = k
        if self.points:
            self.d = dataset_dimension(self.points, d)
        elif d is not None:
            self.d = d
        else:
            self.d = 2
        if self.d not in COLUMNS:
            raise InputError("Error! datasets have 2 or 3 columns, got {0}".format(self.d))
        if k is not None and not 0 <= k <= self.d - 1:
            raise InputError("Error! k= pragma must be in 0..{0}, got {1}".format(self.d - 1, k))

    def __len__(self):
        return len(self.points)

    @classmethod
    def from_text(cls, text):
        k = _pragma_k(text)
        try:
            df = pd.read_csv(io.StringIO(text), dtype=str, comment='#',
                             skipinitialspace=True, keep_default_na=False)
        except pd.errors.EmptyDataError:
            raise InputError("Error! dataset has no header row")
        return cls.from_dataframe(df, k=k)

    @classmethod
    def from_csv(cls, filename):
        try:
            with open(filename) as f:
                text = f.read()
        except OSError as e:
            raise InputError("Error! cannot read dataset {0}: {1}".format(filename, e))
        return cls.from_text(text)

    @classmethod
    def from_dataframe(cls, df, k=None):
        cols = [str(c).strip() for c in df.columns]
        d = len(cols)
        if d not in COLUMNS or cols != COLUMNS[d]:
            raise InputError("Error! dataset header must be x,y or x,y,z, got {0}".format(','.join(cols)))
        rows = []
        for i, row in enumerate(df.itertuples(index=False)):
            values = [str(v).strip() for v in row]
            if any(v == '' for v in values):
                raise InputError("Error! row {0} does not have {1} values".format(i + 1, d))
            rows.append(values)
        return cls(rows, k=k, d=d)

    def to_dataframe(self):
        df = pd.DataFrame(
            [[rational_text(a) for a in p] for p in self.points],
            columns=COLUMNS[self.d])
        return df

    def to_text(self):
        """Canonical CSV text: pragma (if any), header, exact rows."""

        buf = io.StringIO()
        if self.k is not None:
            buf.write('# k={0}\n'.format(self.k))
        self.to_dataframe().to_csv(buf, index=False, lineterminator='\n')
        return buf.getvalue()

    def to_csv(self, filename):
        with open(filename, 'w') as f:
            f.write(self.to_text())

    def digest(self):
        return hashlib.sha256(self.to_text().encode('utf-8')).hexdigest()

    def regression_k(self):
        """Independent-variable count used by the regression commands."""

        return self.d - 1 if self.k is None else self.k
