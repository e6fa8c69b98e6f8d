"""Depth values together with the double wedge that attains them."""

from regdepth.exceptions import VerificationError

class DepthCertificate(object):
    """depth : int
    witness : DoubleWedge attaining the depth, or None for the vertical
              flats whose depth is zero by definition
    contained_indices : indices of the data points inside the witness"""

    def __init__(self, depth, witness, contained_indices):
        self.depth = int(depth)
        self.witness = witness
        self.contained_indices = list(contained_indices)
        assert self.depth >= 0, "Error! depth must be nonnegative"
        assert len(self.contained_indices) == self.depth, "Error! |contained_indices| must equal depth"

    def recount(self, xs):
        if self.witness is None:
            return []
        return self.witness.count(xs)[1]

    def verify(self, xs):
        """Recount witness membership; raises VerificationError on any
        disagreement with the stored indices."""

        if self.witness is None:
            if self.depth != 0:
                raise VerificationError("Error! a certificate without witness must have depth 0")
            return True
        got = self.recount(xs)
        if got != self.contained_indices:
            raise VerificationError("Error! witness recount {0} differs from stored indices {1}".format(got, self.contained_indices))
        return True

    def to_dict(self):
        return {'depth': self.depth,
                'witness': None if self.witness is None else self.witness.to_dict(),
                'contained_indices': list(self.contained_indices)}

    def __repr__(self):
        return 'DepthCertificate(depth={0}, witness={1!r})'.format(self.depth, self.witness)
