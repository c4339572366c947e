"""Brute-force oracles for the test suite.

Everything here recomputes a quantity by the most direct route
available (explicit determinant sums, exhaustive sign enumeration,
dense Gram matrices) so the library's structured paths have an
independent reference.  Joint enumerations are capped at 10^4 states.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .randomdet import brute_force_expected_abs_det  # noqa: F401  (re-export)

__all__ = [
    "support_brute",
    "length_brute",
    "radius_brute",
    "volume_brute",
    "intrinsic_brute",
    "mixed_volume_brute",
    "mixed_volume_brute_exact",
    "wedge_norm_brute",
    "hull_area_brute",
    "brute_force_expected_abs_det",
]

ENUM_CAP = 10**4


def support_brute(generators, u) -> float:
    """h(u) = (1/2) sum |<v, u>| by direct accumulation."""
    u = np.asarray(u, dtype=np.float64)
    return 0.5 * math.fsum(
        abs(float(np.dot(np.asarray(v, dtype=np.float64), u))) for v in generators
    )


def length_brute(generators) -> float:
    return math.fsum(
        float(np.linalg.norm(np.asarray(v, dtype=np.float64))) for v in generators
    )


def radius_brute(generators) -> float:
    """max ||(1/2) sum eps_i v_i|| over all sign vectors (exponential)."""
    G = np.asarray(generators, dtype=np.float64)
    if G.shape[0] == 0:
        return 0.0
    if 2 ** G.shape[0] > ENUM_CAP * 16:
        raise ValueError("too many generators for sign enumeration")
    best = 0.0
    for eps in product((-1.0, 1.0), repeat=G.shape[0]):
        best = max(best, float(np.linalg.norm(0.5 * (np.asarray(eps) @ G))))
    return best


def volume_brute(generators) -> float:
    """vol_m = sum over m-subsets of |det|."""
    G = np.asarray(generators, dtype=np.float64)
    m = G.shape[1]
    total = [
        abs(float(np.linalg.det(G[list(idx)])))
        for idx in combinations(range(G.shape[0]), m)
    ]
    return math.fsum(total)


def intrinsic_brute(generators, d: int) -> float:
    """V_d = sum over d-subsets of the parallelotope volume (Gram root)."""
    G = np.asarray(generators, dtype=np.float64)
    if d == 0:
        return 1.0
    vals = []
    for idx in combinations(range(G.shape[0]), d):
        A = G[list(idx)]
        vals.append(math.sqrt(max(float(np.linalg.det(A @ A.T)), 0.0)))
    return math.fsum(vals)


def mixed_volume_brute(generator_lists) -> float:
    """MV = (1/m!) sum over ordered generator tuples of |det|."""
    mats = [np.asarray(G, dtype=np.float64) for G in generator_lists]
    m = len(mats)
    count = 1
    for G in mats:
        count *= max(G.shape[0], 1)
    if count > ENUM_CAP * 100:
        raise ValueError("tuple enumeration too large")
    vals = []
    for pick in product(*[range(G.shape[0]) for G in mats]):
        M = np.stack([mats[j][pick[j]] for j in range(m)])
        vals.append(abs(float(np.linalg.det(M))))
    return math.fsum(vals) / math.factorial(m)


def _det_exact(rows) -> Fraction:
    """Fraction determinant by cofactor expansion (tiny matrices only)."""
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = Fraction(rows[0][j]) * _det_exact(minor)
        total += term if j % 2 == 0 else -term
    return total


def mixed_volume_brute_exact(generator_lists) -> Fraction:
    """Exact-rational version of the ordered-tuple determinant sum."""
    mats = [[[Fraction(x) for x in row] for row in G] for G in generator_lists]
    m = len(mats)
    total = Fraction(0)
    for pick in product(*[range(len(G)) for G in mats]):
        rows = [mats[j][pick[j]] for j in range(m)]
        total += abs(_det_exact(rows))
    return total / math.factorial(m)


def wedge_norm_brute(vectors) -> float:
    """||v_1 ^ ... ^ v_k|| = sqrt(det Gram): parallelotope volume."""
    A = np.asarray(vectors, dtype=np.float64)
    return math.sqrt(max(float(np.linalg.det(A @ A.T)), 0.0))


def hull_area_brute(points) -> float:
    """Convex hull area of a 2D point cloud by angular sort + shoelace."""
    P = np.asarray(points, dtype=np.float64)
    P = np.unique(np.round(P, 12), axis=0)
    if P.shape[0] < 3:
        return 0.0
    c = P.mean(axis=0)
    rel = P - c
    order = np.argsort(np.arctan2(rel[:, 1], rel[:, 0]))
    ring = P[order]
    # Peel interior points: keep only points on the hull by rebuilding
    # with the gift-wrapping test against every other point.
    keep = []
    for i in range(len(ring)):
        p = ring[i]
        others = np.delete(ring, i, axis=0)
        inside = False
        for a, b, cc in combinations(range(len(others)), 3):
            if _in_triangle(p, others[a], others[b], others[cc]):
                inside = True
                break
        if not inside:
            keep.append(p)
    ring = np.asarray(keep)
    c = ring.mean(axis=0)
    rel = ring - c
    order = np.argsort(np.arctan2(rel[:, 1], rel[:, 0]))
    ring = ring[order]
    area = 0.0
    for i in range(len(ring)):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % len(ring)]
        area += x1 * y2 - x2 * y1
    return 0.5 * abs(area)


def _in_triangle(p, a, b, c, tol=1e-12) -> bool:
    def cross(o, x, y):
        return (x[0] - o[0]) * (y[1] - o[1]) - (x[1] - o[1]) * (y[0] - o[0])

    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    area2 = abs(cross(a, b, c))
    if area2 < tol:
        return False
    lo = min(d1, d2, d3), max(d1, d2, d3)
    return (lo[0] > tol * area2) or (lo[1] < -tol * area2)
