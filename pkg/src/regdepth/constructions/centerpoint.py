"""Centerpoints: points of Tukey depth at least ceil(n/(d+1)).

The region of depth >= t is the intersection of the halfspaces
{u.p <= v_t(u)}, where v_t(u) is the t-th largest value of u.x over
the data. We collect such halfspaces (all data-incident boundaries for
small n, random directions otherwise), take the Chebyshev center of
their intersection with scipy's linprog and check it exactly. Each
failed check returns a witness halfspace whose direction is added as a
new cut before the next round."""

import logging
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy.optimize import linprog

from regdepth import config
from regdepth.exceptions import VerificationError, InputError
from regdepth.geometry.scalar import (make_points, dataset_dimension, sub, cross,
                                      add, scale, cross2, is_zero)
from regdepth.depth.engine import tukey_depth

def centerpoint_target(n, d):
    return -(-n // (d + 1))

def _cut(U, X, t):
    """Right-hand sides v_t(u) for every row u of U."""

    values = U @ X.T
    return -np.sort(-values, axis=1)[:, t - 1]

def _data_directions(pts, d, limit):
    out = []
    if d == 2:
        if len(pts)*(len(pts) - 1) // 2 > limit:
            return None
        for p, q in combinations(pts, 2):
            v = sub(q, p)
            if not is_zero(v):
                out.append((-v[1], v[0]))
    else:
        if len(pts)*(len(pts) - 1)*(len(pts) - 2) // 6 > limit:
            return None
        for p, q, r in combinations(pts, 3):
            nrm = cross(sub(q, p), sub(r, p))
            if not is_zero(nrm):
                out.append(nrm)
    return out

def _chebyshev(U, b, lo, hi):
    d = U.shape[1]
    norms = np.linalg.norm(U, axis=1)
    A = np.hstack([U, norms.reshape(-1, 1)])
    c = np.zeros(d + 1)
    c[-1] = -1.0
    bounds = [(l, h) for l, h in zip(lo, hi)] + [(0, None)]
    res = linprog(c, A_ub=A, b_ub=b, bounds=bounds, method='highs')
    if res.status != 0:
        return None
    return res.x[:d], res.x[-1]

def _brute_candidates(pts, d):
    """Data points, pairwise midpoints and (in the plane) crossings of
    lines through data pairs, nearest to the coordinatewise median first."""

    med = tuple(sorted(p[j] for p in pts)[len(pts)//2] for j in range(d))
    cands = set(pts)
    for p, q in combinations(pts, 2):
        cands.add(scale(Fraction(1, 2), add(p, q)))
    if d == 2 and len(pts) <= 40:
        lines = [(p, sub(q, p)) for p, q in combinations(pts, 2) if p != q]
        for (p, v), (q, w) in combinations(lines, 2):
            den = cross2(v, w)
            if den == 0:
                continue
            s = cross2(sub(q, p), w) / den
            cands.add(add(p, scale(s, v)))
    if d == 3:
        for p, q, r in combinations(pts[:30], 3):
            cands.add(scale(Fraction(1, 3), add(add(p, q), r)))
    return sorted(cands, key=lambda c: (sum(abs(a - b) for a, b in zip(c, med)), c))

def centerpoint(xs, seed=0, rounds=None, check_limit=5000):
    """A point of exact Tukey depth >= ceil(n/(d+1)).

    Raises VerificationError when neither the cutting-plane rounds nor
    the brute-force candidates produce such a point."""

    xs = make_points(xs)
    if not xs:
        raise InputError("Error! centerpoint of an empty dataset")
    d = dataset_dimension(xs)
    n = len(xs)
    target = centerpoint_target(n, d)
    if len(set(xs)) == 1:
        return xs[0]
    rounds = config.CENTERPOINT_ROUNDS if rounds is None else rounds

    X = np.array([[float(a) for a in p] for p in xs])
    shift = X.mean(axis=0)
    spread = max(float(np.abs(X - shift).max()), 1e-300)
    Xs = (X - shift) / spread
    lo = Xs.min(axis=0)
    hi = Xs.max(axis=0)

    dirs = _data_directions(sorted(set(xs)), d, config.CENTERPOINT_SEED_DIRECTIONS)
    if dirs:
        U = np.array([[float(a) for a in v] for v in dirs])
        U = U / np.linalg.norm(U, axis=1).reshape(-1, 1)
    else:
        rng = np.random.default_rng(seed)
        U = rng.normal(size=(config.CENTERPOINT_SEED_DIRECTIONS, d))
        U = U / np.linalg.norm(U, axis=1).reshape(-1, 1)
    U = np.vstack([U, -U])

    for r in range(rounds):
        found = _chebyshev(U, _cut(U, Xs, target), lo, hi)
        if found is None:
            break
        x, radius = found
        cand = tuple(Fraction(float(a)) for a in x*spread + shift)
        cert = tukey_depth(cand, xs)
        if cert.depth >= target:
            logging.info("centerpoint: depth {0} >= {1} after {2} rounds".format(cert.depth, target, r + 1))
            return cand
        h = cert.witness.h1
        u = np.array([float(a) for a in h.normal])
        if cert.witness.pairing == '-':
            u = -u
        if not np.any(u):
            break
        u = u / np.linalg.norm(u)
        U = np.vstack([U, u])
        if radius <= 0:
            break

    logging.warning("centerpoint: cutting planes did not converge, trying brute-force candidates")
    for i, cand in enumerate(_brute_candidates(xs, d)):
        if i >= check_limit:
            break
        if tukey_depth(cand, xs).depth >= target:
            return cand
    raise VerificationError("Error! no point of depth >= {0} found among {1} points".format(target, n))
