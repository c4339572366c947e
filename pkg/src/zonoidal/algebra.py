"""Products of zonotopes and the volume identities they compute.

Every product here expands a multilinear map over generator tuples:
the tensor product takes all pairwise outer products, the wedge product
all pairwise exterior products, and a user-supplied multilinear map is
expanded the same way.  Mixed, intrinsic and ordinary volumes then fall
out of wedge-product lengths:

    MV(K_1, ..., K_m) = length(K_1 ^ ... ^ K_m) / m!
    V_d(K)            = length(K^(^d)) / d!
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import exterior
from .exterior import Multivector, exterior_dim
from .zonotope import (
    Zonotope,
    VirtualZonotope,
    canonicalize,
    length,
    minkowski_sum,
    scale,
    zonotope,
)

__all__ = [
    "tensor_product",
    "wedge_product",
    "wedge_power",
    "induced_map",
    "mixed_volume",
    "volume",
    "intrinsic_volume",
    "hodge_star_zonoid",
    "projection_body",
    "af_gap",
    "reverse_af_gap",
    "virtual_tensor",
]


def _require_grading(K: Zonotope) -> tuple[int, int]:
    if K.grading is None:
        raise ValueError("operation requires a graded zonotope (base_dim, degree)")
    m, k = K.grading
    if K.ambient_dim != exterior_dim(m, k):
        raise ValueError("ambient_dim does not match the grading")
    return m, k


def _as_degree_one(K: Zonotope) -> Zonotope:
    """Interpret an ungraded zonotope in R^m as degree 1 in R^m."""
    if K.grading is not None:
        if K.grading[1] != 1:
            raise ValueError("expected a degree-1 zonotope")
        return K
    from dataclasses import replace

    return replace(K, grading=(K.ambient_dim, 1))


def tensor_product(K: Zonotope, L: Zonotope) -> Zonotope:
    """Zonotope of the tensor of independent representatives.

    Generators are all pairwise outer products, flattened row-major.
    """
    if K.n_generators == 0 or L.n_generators == 0:
        return zonotope([], ambient_dim=K.ambient_dim * L.ambient_dim)
    gens = np.einsum("ia,jb->ijab", K.generators, L.generators).reshape(
        K.n_generators * L.n_generators, K.ambient_dim * L.ambient_dim
    )
    return canonicalize(Zonotope(K.ambient_dim * L.ambient_dim, gens))


def virtual_tensor(W1: VirtualZonotope, W2: VirtualZonotope) -> VirtualZonotope:
    """Bilinear extension of the tensor product to formal differences."""
    plus = minkowski_sum(
        tensor_product(W1.plus, W2.plus), tensor_product(W1.minus, W2.minus)
    )
    minus = minkowski_sum(
        tensor_product(W1.plus, W2.minus), tensor_product(W1.minus, W2.plus)
    )
    return VirtualZonotope(plus, minus)


def wedge_product(K: Zonotope, L: Zonotope) -> Zonotope:
    """Wedge of graded zonotopes: all pairwise exterior products."""
    m, k = _require_grading(K)
    m2, l = _require_grading(L)
    if m != m2:
        raise ValueError("base dimension mismatch in wedge product")
    out_dim = exterior_dim(m, k + l)
    if K.n_generators == 0 or L.n_generators == 0 or k + l > m:
        return zonotope([], ambient_dim=out_dim, grading=(m, k + l),
                        simple=K.simple and L.simple)
    rows = []
    for a in K.generators:
        mv_a = Multivector(m, k, a)
        for b in L.generators:
            rows.append(exterior.wedge(mv_a, Multivector(m, l, b)).coeffs)
    gens = np.asarray(rows) if rows and not K.exact and not L.exact else _stack_object(rows, out_dim)
    return canonicalize(
        Zonotope(out_dim, gens, grading=(m, k + l), simple=K.simple and L.simple)
    )


def _stack_object(rows, width):
    out = np.empty((len(rows), width), dtype=object)
    for i, r in enumerate(rows):
        out[i, :] = list(r)
    return out


def wedge_power(K: Zonotope, d: int) -> Zonotope:
    """d-fold wedge of K with itself.

    Antisymmetry kills tuples with repeats and merges the d!
    permutations of a subset, so it suffices to walk d-subsets of the
    generators and scale each simple wedge by d!.
    """
    if d < 0:
        raise ValueError("power must be nonnegative")
    K = _as_degree_one(K)
    m, _ = K.grading
    if d == 0:
        return zonotope([[1.0]], ambient_dim=1, grading=(m, 0), simple=True)
    out_dim = exterior_dim(m, d)
    Kc = canonicalize(K)
    fact = math.factorial(d)
    rows = []
    for subset in combinations(range(Kc.n_generators), d):
        blade = exterior.blade_from_vectors(*(Kc.generators[i] for i in subset))
        rows.append(blade.coeffs * fact)
    if not rows or d > m:
        return zonotope([], ambient_dim=out_dim, grading=(m, d), simple=True)
    gens = _stack_object(rows, out_dim) if Kc.exact else np.asarray(rows)
    return canonicalize(Zonotope(out_dim, gens, grading=(m, d), simple=True))


def induced_map(f, zonotopes, out_dim: int | None = None, probe_seed: int = 7) -> Zonotope:
    """Zonotope of f(X_1, ..., X_p) for a multilinear callback f.

    f takes p vectors and returns a vector; it is expanded over all
    generator tuples.  Multilinearity is the caller's responsibility
    and is spot-checked on random inputs (warning on failure).
    """
    Ks = [canonicalize(K) for K in zonotopes]
    if not Ks:
        raise ValueError("need at least one zonotope")
    _probe_linearity(f, Ks, probe_seed)
    rows = []
    idx = [0] * len(Ks)

    def rec(slot, picked):
        if slot == len(Ks):
            rows.append(np.asarray(f(*picked), dtype=np.float64))
            return
        for g in Ks[slot].generators:
            rec(slot + 1, picked + [np.asarray(g, dtype=np.float64)])

    del idx
    if all(K.n_generators > 0 for K in Ks):
        rec(0, [])
    if not rows:
        if out_dim is None:
            probe = f(*[np.zeros(K.ambient_dim) for K in Ks])
            out_dim = len(np.asarray(probe))
        return zonotope([], ambient_dim=out_dim)
    return canonicalize(Zonotope(len(rows[0]), np.asarray(rows)))


def _probe_linearity(f, Ks, seed, rtol=1e-8):
    rng = np.random.Generator(np.random.Philox(key=seed))
    slot = int(rng.integers(len(Ks)))
    args_u = [rng.standard_normal(K.ambient_dim) for K in Ks]
    args_v = list(args_u)
    u = rng.standard_normal(Ks[slot].ambient_dim)
    v = rng.standard_normal(Ks[slot].ambient_dim)
    a, b = float(rng.standard_normal()), float(rng.standard_normal())
    args_u[slot] = u
    args_v[slot] = v
    args_c = list(args_u)
    args_c[slot] = a * u + b * v
    lhs = np.asarray(f(*args_c), dtype=np.float64)
    rhs = a * np.asarray(f(*args_u), dtype=np.float64) + b * np.asarray(
        f(*args_v), dtype=np.float64
    )
    tol = rtol * max(1.0, float(np.max(np.abs(rhs))))
    if np.any(np.abs(lhs - rhs) > tol):
        warnings.warn("callback failed the multilinearity spot check", stacklevel=3)


def _wedge_chain(zonotopes) -> Zonotope:
    out = zonotopes[0]
    for K in zonotopes[1:]:
        out = wedge_product(out, K)
    return out


def mixed_volume(zonotopes):
    """MV(K_1, ..., K_m) = length(K_1 ^ ... ^ K_m) / m!.

    Expects exactly m degree-1 zonotopes in R^m.  Exact-rational inputs
    give an exact Fraction.
    """
    Ks = [_as_degree_one(K) for K in zonotopes]
    m = Ks[0].grading[0]
    if len(Ks) != m:
        raise ValueError(f"mixed volume in R^{m} needs exactly {m} bodies")
    if any(K.grading != (m, 1) for K in Ks):
        raise ValueError("all bodies must be degree 1 in the same space")
    ell = length(_wedge_chain(Ks))
    if isinstance(ell, Fraction):
        return ell / math.factorial(m)
    return float(ell) / math.factorial(m)


def volume(K: Zonotope):
    """vol_m(K) = length(K^(^m)) / m! = sum over m-subsets of |det|."""
    K = _as_degree_one(K)
    m = K.grading[0]
    ell = length(wedge_power(K, m))
    if isinstance(ell, Fraction):
        return ell / math.factorial(m)
    return float(ell) / math.factorial(m)


def intrinsic_volume(K: Zonotope, d: int):
    """V_d(K) = length(K^(^d)) / d!; V_0 = 1 and V_1 = length."""
    K = _as_degree_one(K)
    m = K.grading[0]
    if not 0 <= d <= m:
        raise ValueError("intrinsic volume degree out of range")
    if d == 0:
        return 1.0
    ell = length(wedge_power(K, d))
    if isinstance(ell, Fraction):
        return ell / math.factorial(d)
    return float(ell) / math.factorial(d)


def hodge_star_zonoid(K: Zonotope) -> Zonotope:
    """Star every generator; an isometry of zonoids (length preserved)."""
    m, k = _require_grading(K)
    out_dim = exterior_dim(m, m - k)
    if K.n_generators == 0:
        return zonotope([], ambient_dim=out_dim, grading=(m, m - k), simple=K.simple)
    rows = [exterior.hodge_star(Multivector(m, k, g)).coeffs for g in K.generators]
    gens = _stack_object(rows, out_dim) if K.exact else np.asarray(rows)
    return canonicalize(Zonotope(out_dim, gens, grading=(m, m - k), simple=K.simple))


def projection_body(K: Zonotope) -> Zonotope:
    """Projection body: h(u) = ||u|| vol_{m-1}(K projected along u).

    Computed as (2 / (m-1)!) * star(K^(m-1)).
    """
    K = _as_degree_one(K)
    m = K.grading[0]
    if m < 2:
        raise ValueError("projection body needs ambient dimension >= 2")
    starred = hodge_star_zonoid(wedge_power(K, m - 1))
    return scale(starred, 2.0 / math.factorial(m - 1))


def af_gap(K1: Zonotope, K2: Zonotope, companions=(), middle: Zonotope | None = None):
    """Signed gap of the Alexandrov-Fenchel-type length inequality

        length(K1 ^ K2 ^ C)^2 >= length(K1 ^ K1 ^ C) length(K2 ^ K2 ^ C)

    where C is the wedge of the companions (or ``middle`` directly).
    Nonnegative up to roundoff; tolerances belong to the caller.
    """
    K1, K2 = _as_degree_one(K1), _as_degree_one(K2)
    if middle is not None and companions:
        raise ValueError("pass either companions or a prewedged middle factor")
    C = middle
    if companions:
        C = _wedge_chain([_as_degree_one(K) for K in companions])

    def term(A, B):
        w = wedge_product(A, B)
        if C is not None:
            w = wedge_product(w, C)
        return float(length(w))

    return term(K1, K2) ** 2 - term(K1, K1) * term(K2, K2)


def reverse_af_gap(zonotopes, degrees):
    """Signed gap of the reverse inequality

        prod_i length(K_i^(^d_i)) / m!  -  MV(K_1[d_1], ..., K_p[d_p])

    which vanishes exactly when the spans are pairwise orthogonal (or a
    factor vanishes) and is positive otherwise.
    """
    Ks = [_as_degree_one(K) for K in zonotopes]
    degrees = [int(d) for d in degrees]
    if len(Ks) != len(degrees):
        raise ValueError("need one multiplicity per body")
    m = Ks[0].grading[0]
    if sum(degrees) != m:
        raise ValueError("multiplicities must sum to the ambient dimension")
    powers = [wedge_power(K, d) for K, d in zip(Ks, degrees)]
    chain = float(length(_wedge_chain(powers)))
    bound = 1.0
    for P in powers:
        bound *= float(length(P))
    return (bound - chain) / math.factorial(m)
