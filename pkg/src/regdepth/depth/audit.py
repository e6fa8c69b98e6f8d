"""Randomized audit of depth certificates.

Draws random double wedges with one boundary through the flat and one
vertical boundary and checks that none of them holds fewer points than
the certificate claims. All sampling is integer valued, so every count
is exact."""

import logging

import numpy as np

from regdepth.exceptions import InputError
from regdepth.geometry.scalar import (make_points, common_denominator, to_integers,
                                      primitive)
from regdepth.geometry.pencil import normal_basis

# integer coordinates are spread by this factor so a random cut can
# fall strictly between any two distinct data values
SPREAD = 1000
NORMAL_RANGE = 10**6

def _signs(normals, offsets, pts):
    # object arrays keep Python ints, so products never overflow
    N = np.array(normals, dtype=object).reshape(len(normals), -1)
    P = np.array(pts, dtype=object).reshape(len(pts), -1)
    values = N.dot(P.T) - np.array(offsets, dtype=object).reshape(-1, 1)
    pos = (values > 0).astype(bool).astype(np.int64)
    neg = (values < 0).astype(bool).astype(np.int64)
    return pos - neg

def _random_through_flat(f, A, rng, trials):
    d, k = f.d, f.k
    if k == d - 1:
        h = f.hyperplane()
        n = primitive(h.normal)
        return [n]*trials
    if k == d - 2:
        if d == 2:
            u, w = (1, 0), (0, 1)
        else:
            u, w = normal_basis(primitive(f.span[0]))
        out = []
        for a, b in rng.integers(-NORMAL_RANGE, NORMAL_RANGE + 1, size=(trials, 2)):
            a, b = int(a), int(b)
            if a == 0 and b == 0:
                a = 1
            out.append(tuple(a*x + b*y for x, y in zip(u, w)))
        return out
    out = []
    for row in rng.integers(-NORMAL_RANGE, NORMAL_RANGE + 1, size=(trials, d)):
        row = tuple(int(a) for a in row)
        if all(a == 0 for a in row):
            row = (1,) + row[1:]
        out.append(row)
    return out

def _random_vertical(d, k, pts, rng, trials):
    """Integer (normal, offset) pairs for hyperplanes containing the flat
    at vertical infinity (k independent coordinates); the hyperplane at
    infinity is normal 0, offset -1."""

    normals, offsets = [], []
    for t in range(trials):
        if k == 0 or rng.random() < 0.1 or not pts:
            normals.append((0,)*d)
            offsets.append(-1)
            continue
        p = pts[int(rng.integers(len(pts)))]
        jitter = int(rng.integers(-SPREAD + 1, SPREAD))
        if k == 1:
            n = (1,) + (0,)*(d - 1)
        else:
            a, b = (int(v) for v in rng.integers(-NORMAL_RANGE, NORMAL_RANGE + 1, size=2))
            if a == 0 and b == 0:
                a = 1
            n = (a, b, 0)
        normals.append(n)
        offsets.append(sum(x*y for x, y in zip(n, p)) + jitter)
    return normals, offsets

def certify_not_deeper(cert, f, k, xs, trials, seed):
    """True iff none of `trials` double wedges holds fewer than cert.depth
    points. Trial 0 recounts the certificate's own witness; the others
    pair a random hyperplane through f with a random vertical one."""

    if trials < 0:
        raise InputError("Error! trials must be nonnegative")
    if trials == 0:
        return True
    xs = make_points(xs)
    if cert.witness is None:
        # only vertical flats come without a witness, at depth 0
        return cert.depth == 0
    if cert.witness.count(xs)[0] < cert.depth:
        logging.info("audit: witness holds fewer than {0} points".format(cert.depth))
        return False
    trials -= 1
    if trials == 0 or not xs:
        return True
    rng = np.random.default_rng(seed)
    den = common_denominator(xs, [f.anchor]) * SPREAD
    pts = to_integers(xs, den)
    A = to_integers([f.anchor], den)[0]

    normals1 = _random_through_flat(f, A, rng, trials)
    offsets1 = [sum(x*y for x, y in zip(n, A)) for n in normals1]
    normals2, offsets2 = _random_vertical(f.d, k, pts, rng, trials)
    pairings = rng.integers(0, 2, size=trials)

    block = 1024
    for start in range(0, trials, block):
        stop = min(trials, start + block)
        s1 = _signs(normals1[start:stop], offsets1[start:stop], pts)
        s2 = _signs(normals2[start:stop], offsets2[start:stop], pts)
        prod = s1*s2
        plus = (prod >= 0).sum(axis=1)
        minus = (prod <= 0).sum(axis=1)
        counts = np.where(pairings[start:stop] == 0, plus, minus)
        if (counts < cert.depth).any():
            return False
    return True
