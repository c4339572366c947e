"""Zonotopes as weighted generator lists, with Minkowski arithmetic.

A generator list (v_1, ..., v_n) represents the centered zonotope
K = sum_i 1/2 [-v_i, v_i]; the empty list represents {0}.  The hosting
space may be a plain R^D or an exterior power, recorded by an optional
grading tag.  Generators are float64 rows by default; object-dtype rows
of Fraction entries give exact arithmetic for rational inputs.

Formal differences of zonotopes (virtual zonotopes) carry signed
support functions and a linear length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .sampling import covering_net, direction_net

__all__ = [
    "Zonotope",
    "VirtualZonotope",
    "zonotope",
    "support",
    "minkowski_sum",
    "scale",
    "length",
    "linear_image",
    "canonicalize",
    "canonical_eq",
    "radius",
    "radius_bounds",
    "hausdorff_estimate",
    "virtual_support",
    "virtual_add",
    "virtual_negate",
    "virtual_length",
    "virtual_eq",
    "zonotope_to_dict",
    "zonotope_from_dict",
    "COLLINEAR_SINE_TOL",
    "RADIUS_EXACT_MAX_GENERATORS",
]

# two generators merge when the sine of their angle is at most this
COLLINEAR_SINE_TOL = 1e-10
# exact radius enumerates 2^(n-1) sign vectors; refuse beyond this
RADIUS_EXACT_MAX_GENERATORS = 22

_MERGE_DENSE_LIMIT = 8192


@dataclass(frozen=True, eq=False)
class Zonotope:
    """Centered zonotope sum_i 1/2 [-v_i, v_i] in R^ambient_dim.

    grading:  (base_dim m, degree k) when the hosting space is the k-th
              exterior power of R^m (so ambient_dim == C(m, k)).
    cgrading: (complex_dim n, degree k) when the hosting space is the
              realified k-th complex exterior power of C^n
              (ambient_dim == 2 C(n, k)).
    simple:   every generator is a simple blade (set only by
              constructions that guarantee it).
    """

    ambient_dim: int
    generators: np.ndarray
    grading: tuple[int, int] | None = None
    cgrading: tuple[int, int] | None = None
    simple: bool = False

    def __post_init__(self):
        g = np.asarray(self.generators)
        if g.size == 0:
            g = g.reshape(0, self.ambient_dim)
        if g.ndim != 2 or g.shape[1] != self.ambient_dim:
            raise ValueError(f"generators must be rows of length {self.ambient_dim}")
        if g.dtype != object:
            g = g.astype(np.float64)
        object.__setattr__(self, "generators", g)

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    @property
    def exact(self) -> bool:
        return self.generators.dtype == object

    def support(self, u) -> float:
        return support(self, u)

    def length(self):
        return length(self)

    def __add__(self, other: "Zonotope") -> "Zonotope":
        return minkowski_sum(self, other)

    def __rmul__(self, lam) -> "Zonotope":
        return scale(self, lam)

    def __repr__(self):
        tag = ""
        if self.grading:
            tag = f", grading={self.grading}"
        if self.cgrading:
            tag = f", cgrading={self.cgrading}"
        return f"Zonotope(dim={self.ambient_dim}, n={self.n_generators}{tag})"


def zonotope(generators, ambient_dim=None, grading=None, cgrading=None, simple=False) -> Zonotope:
    """Build a zonotope from generator rows (not canonicalized)."""
    g = np.asarray(generators)
    if g.size == 0:
        if ambient_dim is None:
            raise ValueError("ambient_dim required for the zero zonotope")
        g = np.zeros((0, ambient_dim))
    if g.ndim == 1:
        g = g[None, :]
    if ambient_dim is None:
        ambient_dim = g.shape[1]
    return Zonotope(int(ambient_dim), g, grading, cgrading, simple)


def _row_norms(g: np.ndarray) -> np.ndarray:
    if g.dtype == object:
        return np.array([math.sqrt(float(sum(x * x for x in row))) for row in g])
    return np.linalg.norm(g, axis=1)


def support(K: Zonotope, u) -> float:
    """Support function h_K(u) = 1/2 sum_i |<v_i, u>|."""
    u = np.asarray(u)
    if u.shape != (K.ambient_dim,):
        raise ValueError("direction dimension mismatch")
    if K.n_generators == 0:
        return Fraction(0) if (K.exact and u.dtype == object) else 0.0
    dots = K.generators @ u
    if K.exact or u.dtype == object:
        return sum(abs(d) for d in dots) / 2
    return float(np.sum(np.abs(dots))) / 2.0


def support_many(K: Zonotope, U: np.ndarray) -> np.ndarray:
    """Support values along each row of U."""
    U = np.asarray(U, dtype=np.float64)
    if K.n_generators == 0:
        return np.zeros(len(U))
    g = K.generators.astype(np.float64) if K.exact else K.generators
    return 0.5 * np.abs(U @ g.T).sum(axis=1)


def length(K: Zonotope):
    """First intrinsic volume sum_i ||v_i||; additive under Minkowski sum.

    In exact mode with ambient_dim 1 the result is an exact Fraction.
    """
    if K.n_generators == 0:
        return Fraction(0) if (K.exact and K.ambient_dim == 1) else 0.0
    if K.exact and K.ambient_dim == 1:
        return sum(abs(row[0]) for row in K.generators)
    return float(np.sum(_row_norms(K.generators)))


def minkowski_sum(K: Zonotope, L: Zonotope) -> Zonotope:
    """Minkowski sum; h_{K+L} = h_K + h_L."""
    if K.ambient_dim != L.ambient_dim:
        raise ValueError("ambient dimension mismatch in Minkowski sum")
    grading = K.grading if K.grading == L.grading else None
    cgrading = K.cgrading if K.cgrading == L.cgrading else None
    if K.exact != L.exact:
        if K.n_generators == 0:
            K = replace(K, generators=L.generators[:0])
        elif L.n_generators == 0:
            L = replace(L, generators=K.generators[:0])
        else:
            raise ValueError("cannot mix exact and float zonotopes")
    gens = np.concatenate([K.generators, L.generators], axis=0)
    simple = K.simple and L.simple and grading is not None
    return canonicalize(Zonotope(K.ambient_dim, gens, grading, cgrading, simple))


def scale(K: Zonotope, lam) -> Zonotope:
    """Dilation by lam >= 0 (negation of a centered zonotope is itself)."""
    if lam < 0:
        raise ValueError("scale factor must be nonnegative")
    if lam == 0:
        return replace(K, generators=K.generators[:0])
    return canonicalize(replace(K, generators=K.generators * lam))


def linear_image(M, K: Zonotope) -> Zonotope:
    """Image zonotope M(K); h_{M K}(u) = h_K(M^T u)."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[1] != K.ambient_dim:
        raise ValueError("matrix shape does not match ambient dimension")
    gens = K.generators @ M.T
    return canonicalize(Zonotope(M.shape[0], gens))


def _sign_normalize_float(g: np.ndarray) -> np.ndarray:
    nz = np.abs(g) > 0.0
    first = np.argmax(nz, axis=1)
    lead = g[np.arange(len(g)), first]
    return g * np.where(lead < 0, -1.0, 1.0)[:, None]


def _merge_groups_dense(unit: np.ndarray) -> list[list[int]]:
    """Group indices whose directions agree up to COLLINEAR_SINE_TOL."""
    n = len(unit)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n - 1):
        cos = unit[i + 1 :] @ unit[i]
        resid = unit[i + 1 :] - cos[:, None] * unit[i][None, :]
        sine = np.linalg.norm(resid, axis=1)
        for j in np.nonzero(sine <= COLLINEAR_SINE_TOL)[0]:
            ra, rb = find(i), find(i + 1 + j)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _merge_groups_sorted(unit: np.ndarray) -> list[list[int]]:
    """Cheap near-duplicate grouping for very large generator lists.

    Compares each direction with a sorted-order window; a missed merge
    only leaves a redundant generator and never changes the support.
    """
    order = np.lexsort(unit.T[::-1])
    window = 48
    n = len(unit)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for pos in range(n - 1):
        i = order[pos]
        nxt = order[pos + 1 : pos + 1 + window]
        cos = unit[nxt] @ unit[i]
        resid = unit[nxt] - cos[:, None] * unit[i][None, :]
        sine = np.linalg.norm(resid, axis=1)
        for j in np.nonzero(sine <= COLLINEAR_SINE_TOL)[0]:
            ra, rb = find(i), find(int(nxt[j]))
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _canonicalize_float(K: Zonotope) -> Zonotope:
    g = K.generators.astype(np.float64, copy=True)
    norms = np.linalg.norm(g, axis=1)
    g = g[norms > 0.0]
    if len(g) == 0:
        return replace(K, generators=g.reshape(0, K.ambient_dim))
    g = _sign_normalize_float(g)
    norms = np.linalg.norm(g, axis=1)
    unit = g / norms[:, None]
    if len(g) > 1:
        if len(g) <= _MERGE_DENSE_LIMIT:
            groups = _merge_groups_dense(unit)
        else:
            groups = _merge_groups_sorted(unit)
        if len(groups) < len(g):
            merged = []
            for idx in groups:
                if len(idx) == 1:
                    merged.append(g[idx[0]])
                else:
                    rep = unit[idx[0]]
                    flips = np.where(unit[idx] @ rep < 0, -1.0, 1.0)
                    merged.append((g[idx] * flips[:, None]).sum(axis=0))
            g = _sign_normalize_float(np.asarray(merged))
    order = np.lexsort(g.T[::-1])
    return replace(K, generators=g[order])


def _canonicalize_exact(K: Zonotope) -> Zonotope:
    rows = []
    for row in K.generators:
        vec = [Fraction(x) for x in row]
        pivot = next((i for i, x in enumerate(vec) if x != 0), None)
        if pivot is None:
            continue
        if vec[pivot] < 0:
            vec = [-x for x in vec]
        rows.append((pivot, vec))
    groups: dict[tuple, list[list[Fraction]]] = {}
    for pivot, vec in rows:
        key = (pivot, tuple(x / vec[pivot] for x in vec))
        groups.setdefault(key, []).append(vec)
    merged = []
    for _, vecs in groups.items():
        total = vecs[0]
        for v in vecs[1:]:
            total = [a + b for a, b in zip(total, v)]
        merged.append(total)
    merged.sort(key=tuple)
    g = np.empty((len(merged), K.ambient_dim), dtype=object)
    for i, vec in enumerate(merged):
        g[i, :] = vec
    return replace(K, generators=g)


def canonicalize(K: Zonotope) -> Zonotope:
    """Canonical form: no zero or collinear generators, sign-normalized
    (first nonzero coordinate positive), sorted lexicographically.

    The support function is unchanged at every direction.
    """
    if K.exact:
        return _canonicalize_exact(K)
    return _canonicalize_float(K)


def canonical_eq(K: Zonotope, L: Zonotope, tol: float = 1e-12) -> bool:
    """Equality of canonical forms, entrywise within tol."""
    if K.ambient_dim != L.ambient_dim:
        return False
    a, b = canonicalize(K), canonicalize(L)
    if a.n_generators != b.n_generators:
        return False
    if a.exact and b.exact:
        return all(
            x == y for ra, rb in zip(a.generators, b.generators) for x, y in zip(ra, rb)
        )
    ga = a.generators.astype(np.float64) if a.exact else a.generators
    gb = b.generators.astype(np.float64) if b.exact else b.generators
    if ga.size == 0:
        return True
    scale_ = max(1.0, float(np.max(np.abs(ga))), float(np.max(np.abs(gb))))
    return bool(np.all(np.abs(ga - gb) <= tol * scale_))


def radius(K: Zonotope) -> float:
    """Exact radius max_{x in K} ||x|| by sign-vector enumeration.

    Requires at most RADIUS_EXACT_MAX_GENERATORS generators.
    """
    Kc = canonicalize(K)
    n = Kc.n_generators
    if n == 0:
        return 0.0
    if n > RADIUS_EXACT_MAX_GENERATORS:
        raise ValueError(
            f"exact radius supports at most {RADIUS_EXACT_MAX_GENERATORS} generators, got {n}"
        )
    g = Kc.generators.astype(np.float64) if Kc.exact else Kc.generators
    # vertices are 1/2 sum_i eps_i v_i; fix eps_0 = +1 by symmetry
    best = 0.0
    total = 1 << (n - 1)
    step = 1 << 16
    for start in range(0, total, step):
        codes = np.arange(start, min(start + step, total), dtype=np.uint64)
        bits = (codes[:, None] >> np.arange(n - 1, dtype=np.uint64)[None, :]) & 1
        signs = np.concatenate(
            [np.ones((len(codes), 1)), np.where(bits == 1, 1.0, -1.0)], axis=1
        )
        pts = 0.5 * signs @ g
        best = max(best, float(np.max(np.linalg.norm(pts, axis=1))))
    return best


def radius_bounds(K: Zonotope, net_count: int = 4096, seed: int = 0) -> tuple[float, float]:
    """Certified enclosure [lo, hi] of the radius.

    lo = max(sampled support, length / tau_D); hi = length / 2.  Both
    bounds follow from 2 ||K|| <= l(K) <= tau_D ||K||.
    """
    from .randomdet import tau  # local import to avoid a cycle

    if K.n_generators == 0:
        return (0.0, 0.0)
    ell = float(length(K))
    net = direction_net(K.ambient_dim, net_count, seed)
    lo = float(np.max(support_many(K, net)))
    lo = max(lo, ell / tau(K.ambient_dim))
    return (lo, ell / 2.0)


def hausdorff_estimate(
    K: Zonotope, L: Zonotope, delta: float = 1e-3, seed: int = 0
) -> tuple[float, float]:
    """Interval around d_H(K, L) = sup_u |h_K(u) - h_L(u)|.

    The lower bound scans a direction net; the Lipschitz constant
    ||K|| + ||L|| <= (l(K) + l(L)) / 2 converts the net's covering
    radius delta into an upper bound.
    """
    if K.ambient_dim != L.ambient_dim:
        raise ValueError("ambient dimension mismatch in Hausdorff estimate")
    if delta <= 0:
        raise ValueError("delta must be positive")
    net = covering_net(K.ambient_dim, delta, seed)
    diff = np.abs(support_many(K, net) - support_many(L, net))
    lo = float(np.max(diff)) if len(diff) else 0.0
    lip = (float(length(K)) + float(length(L))) / 2.0
    return (lo, lo + lip * delta)


# ---------------------------------------------------------------------------
# virtual zonotopes (formal differences)


@dataclass(frozen=True, eq=False)
class VirtualZonotope:
    """Formal difference plus - minus of two zonotopes."""

    plus: Zonotope
    minus: Zonotope

    def __post_init__(self):
        if self.plus.ambient_dim != self.minus.ambient_dim:
            raise ValueError("ambient dimension mismatch in virtual zonotope")

    @property
    def ambient_dim(self) -> int:
        return self.plus.ambient_dim

    def __repr__(self):
        return f"VirtualZonotope({self.plus!r} - {self.minus!r})"


def virtual_support(W: VirtualZonotope, u) -> float:
    return support(W.plus, u) - support(W.minus, u)


def virtual_add(W1: VirtualZonotope, W2: VirtualZonotope) -> VirtualZonotope:
    return VirtualZonotope(
        minkowski_sum(W1.plus, W2.plus), minkowski_sum(W1.minus, W2.minus)
    )


def virtual_negate(W: VirtualZonotope) -> VirtualZonotope:
    return VirtualZonotope(W.minus, W.plus)


def virtual_length(W: VirtualZonotope):
    return length(W.plus) - length(W.minus)


def virtual_eq(W1: VirtualZonotope, W2: VirtualZonotope, tol: float = 1e-12) -> bool:
    """W1 == W2 iff plus1 + minus2 and plus2 + minus1 agree canonically."""
    return canonical_eq(
        minkowski_sum(W1.plus, W2.minus), minkowski_sum(W2.plus, W1.minus), tol
    )


# ---------------------------------------------------------------------------
# JSON schema


def zonotope_to_dict(K: Zonotope) -> dict:
    grading = None
    if K.grading is not None:
        grading = {"base_dim": K.grading[0], "degree": K.grading[1]}
    if K.exact:
        gens = [[str(x) for x in row] for row in K.generators]
    else:
        gens = [[float(x) for x in row] for row in K.generators]
    out = {"ambient_dim": K.ambient_dim, "grading": grading, "generators": gens}
    if K.cgrading is not None:
        out["cgrading"] = {"complex_dim": K.cgrading[0], "degree": K.cgrading[1]}
    return out


def zonotope_from_dict(d: dict, exact: bool = False) -> Zonotope:
    try:
        dim = int(d["ambient_dim"])
        raw = d["generators"]
        grading = d.get("grading")
        cgrading = d.get("cgrading")
    except (KeyError, TypeError) as e:
        raise KeyError(f"malformed zonotope object: {e}") from e
    if grading is not None:
        grading = (int(grading["base_dim"]), int(grading["degree"]))
    if cgrading is not None:
        cgrading = (int(cgrading["complex_dim"]), int(cgrading["degree"]))
    # String entries mean exact rationals regardless of the flag.
    if not exact:
        exact = any(isinstance(x, str) for row in raw for x in row)
    if exact:
        g = np.empty((len(raw), dim), dtype=object)
        for i, row in enumerate(raw):
            if len(row) != dim:
                raise KeyError("generator length does not match ambient_dim")
            g[i, :] = [Fraction(x) for x in row]
        if len(raw) == 0:
            g = g.reshape(0, dim)
    else:
        g = np.asarray(raw, dtype=np.float64)
        if g.size == 0:
            g = g.reshape(0, dim)
        if g.ndim != 2 or g.shape[1] != dim:
            raise KeyError("generator rows must have length ambient_dim")
    return Zonotope(dim, g, grading, cgrading)
