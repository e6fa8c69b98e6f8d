"""Families of disjoint index subsets of a dataset."""

from regdepth.exceptions import InputError, VerificationError

KINDS = ('vertical-thirds', 'six-sector', 'median-split', 'tverberg', 'three-piece')

class PartitionFamily(object):
    """parts : list of lists of data indices
    kind : one of KINDS

    Parts are pairwise disjoint; their union need not cover the data
    (the middle point of an odd median split is left out, for example).
    The overlapping sets fed to the catline and three-piece cuts are
    built from these blocks with union()."""

    def __init__(self, parts, kind, n=None):
        if kind not in KINDS:
            raise InputError("Error! unknown partition kind {0!r}".format(kind))
        self.parts = [sorted(int(i) for i in p) for p in parts]
        self.kind = kind
        self.n = n
        self.check()

    def check(self):
        seen = set()
        for p in self.parts:
            for i in p:
                if i in seen:
                    raise VerificationError("Error! index {0} appears in two parts".format(i))
                if i < 0 or (self.n is not None and i >= self.n):
                    raise VerificationError("Error! index {0} outside the dataset".format(i))
                seen.add(i)
        return True

    def sizes(self):
        return [len(p) for p in self.parts]

    def balanced(self, slack=1):
        """True when part sizes differ by at most `slack`."""

        s = self.sizes()
        return not s or max(s) - min(s) <= slack

    def union(self, *which):
        out = []
        for w in which:
            out += self.parts[w]
        return sorted(out)

    def subsets(self, xs):
        return [[xs[i] for i in p] for p in self.parts]

    def __len__(self):
        return len(self.parts)

    def to_dict(self):
        return {'kind': self.kind, 'parts': [list(p) for p in self.parts], 'sizes': self.sizes()}

def order_by_x(xs):
    """Indices sorted by (x, index)."""

    return sorted(range(len(xs)), key=lambda i: (xs[i][0], i))
