"""Multilinear algebra in real and complex exterior powers.

An element of the k-th exterior power of R^m is stored densely as a
vector of C(m, k) coefficients, indexed by the k-element subsets of
{0, ..., m-1} in lexicographic order.  Coefficients are float64 by
default; arrays of Fraction (numpy object dtype) are accepted
everywhere for exact arithmetic on rational inputs.

The complex variant stores C(n, k) complex128 coefficients for the
k-th complex exterior power of C^n.  ``realify`` maps it isometrically
onto R^{2 C(n,k)} by interleaving (real, imaginary) parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

__all__ = [
    "Multivector",
    "ComplexMultivector",
    "wedge",
    "blade_from_vectors",
    "hodge_star",
    "norm",
    "inner",
    "complex_wedge",
    "complex_blade_from_vectors",
    "realify",
    "unrealify",
    "exterior_dim",
    "basis_subsets",
]


def exterior_dim(m: int, k: int) -> int:
    """Dimension C(m, k) of the k-th exterior power; 0 when k > m."""
    return math.comb(m, k) if 0 <= k <= m else 0


@lru_cache(maxsize=None)
def basis_subsets(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of {0..m-1} in lexicographic order."""
    return tuple(combinations(range(m), k))


@lru_cache(maxsize=None)
def _subset_rank(m: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(basis_subsets(m, k))}


def _merge_sign(I: tuple[int, ...], J: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Merge two disjoint sorted index tuples, counting inversions.

    Returns (sorted union, sign); sign is 0 if the tuples intersect.
    """
    out = []
    inv = 0
    i = j = 0
    while i < len(I) and j < len(J):
        if I[i] == J[j]:
            return (), 0
        if I[i] < J[j]:
            out.append(I[i])
            i += 1
        else:
            # J[j] jumps over the remaining entries of I
            inv += len(I) - i
            out.append(J[j])
            j += 1
    out.extend(I[i:])
    out.extend(J[j:])
    return tuple(out), (-1) ** inv


@lru_cache(maxsize=None)
def _wedge_table(m: int, k: int, l: int):
    """Sparse multiplication table for wedge: Λ^k x Λ^l -> Λ^{k+l}.

    Arrays (ii, jj, oo, ss): coefficient pairs (ii, jj) accumulate into
    output slot oo with sign ss.
    """
    ii, jj, oo, ss = [], [], [], []
    if k + l <= m:
        rank_out = _subset_rank(m, k + l)
        for i, I in enumerate(basis_subsets(m, k)):
            for j, J in enumerate(basis_subsets(m, l)):
                merged, sign = _merge_sign(I, J)
                if sign:
                    ii.append(i)
                    jj.append(j)
                    oo.append(rank_out[merged])
                    ss.append(sign)
    return (
        np.asarray(ii, dtype=np.intp),
        np.asarray(jj, dtype=np.intp),
        np.asarray(oo, dtype=np.intp),
        np.asarray(ss, dtype=np.int64),
    )


@lru_cache(maxsize=None)
def _hodge_table(m: int, k: int):
    """Permutation and signs sending e_I to sign * e_{I complement}."""
    rank_out = _subset_rank(m, m - k)
    perm = np.empty(exterior_dim(m, k), dtype=np.intp)
    sign = np.empty(exterior_dim(m, k), dtype=np.int64)
    full = set(range(m))
    for i, I in enumerate(basis_subsets(m, k)):
        comp = tuple(sorted(full - set(I)))
        perm[i] = rank_out[comp]
        # parity of the permutation (I, complement) of (0..m-1)
        sign[i] = (-1) ** sum(a - t for t, a in enumerate(I))
    return perm, sign


def _coerce_coeffs(coeffs, n: int, complex_ok: bool = False) -> np.ndarray:
    c = np.asarray(coeffs)
    if c.shape != (n,):
        raise ValueError(f"expected {n} coefficients, got shape {c.shape}")
    if c.dtype == object:
        return c
    if complex_ok:
        return c.astype(np.complex128)
    if np.iscomplexobj(c):
        raise ValueError("complex coefficients in a real multivector")
    return c.astype(np.float64)


@dataclass(frozen=True, eq=False)
class Multivector:
    """Dense element of the k-th exterior power of R^m."""

    ambient_dim: int
    degree: int
    coeffs: np.ndarray

    def __post_init__(self):
        if self.ambient_dim < 1 or self.degree < 0:
            raise ValueError("need ambient_dim >= 1 and degree >= 0")
        c = _coerce_coeffs(self.coeffs, exterior_dim(self.ambient_dim, self.degree))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, m: int, k: int) -> "Multivector":
        return cls(m, k, np.zeros(exterior_dim(m, k)))

    @classmethod
    def from_vector(cls, v) -> "Multivector":
        v = np.asarray(v)
        return cls(len(v), 1, v)

    @classmethod
    def basis_blade(cls, m: int, indices: tuple[int, ...]) -> "Multivector":
        k = len(indices)
        c = np.zeros(exterior_dim(m, k))
        c[_subset_rank(m, k)[tuple(sorted(indices))]] = 1.0
        return cls(m, k, c)

    def norm(self) -> float:
        return norm(self)

    def __add__(self, other: "Multivector") -> "Multivector":
        if (self.ambient_dim, self.degree) != (other.ambient_dim, other.degree):
            raise ValueError("shape mismatch in multivector addition")
        return Multivector(self.ambient_dim, self.degree, self.coeffs + other.coeffs)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-1) * other

    def __mul__(self, scalar) -> "Multivector":
        return Multivector(self.ambient_dim, self.degree, self.coeffs * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Multivector(m={self.ambient_dim}, k={self.degree}, {self.coeffs!r})"


@dataclass(frozen=True, eq=False)
class ComplexMultivector:
    """Dense element of the k-th complex exterior power of C^n."""

    ambient_complex_dim: int
    degree: int
    coeffs: np.ndarray

    def __post_init__(self):
        n = exterior_dim(self.ambient_complex_dim, self.degree)
        c = _coerce_coeffs(self.coeffs, n, complex_ok=True)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, n: int, k: int) -> "ComplexMultivector":
        return cls(n, k, np.zeros(exterior_dim(n, k), dtype=np.complex128))

    @classmethod
    def from_vector(cls, z) -> "ComplexMultivector":
        z = np.asarray(z, dtype=np.complex128)
        return cls(len(z), 1, z)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def __mul__(self, scalar) -> "ComplexMultivector":
        return ComplexMultivector(self.ambient_complex_dim, self.degree, self.coeffs * scalar)

    __rmul__ = __mul__

    def __add__(self, other: "ComplexMultivector") -> "ComplexMultivector":
        if (self.ambient_complex_dim, self.degree) != (other.ambient_complex_dim, other.degree):
            raise ValueError("shape mismatch in multivector addition")
        return ComplexMultivector(self.ambient_complex_dim, self.degree, self.coeffs + other.coeffs)

    def __repr__(self):
        return f"ComplexMultivector(n={self.ambient_complex_dim}, k={self.degree}, {self.coeffs!r})"


def _wedge_coeffs(m, k, l, a, b):
    ii, jj, oo, ss = _wedge_table(m, k, l)
    if a.dtype == object or b.dtype == object:
        out = np.zeros(exterior_dim(m, k + l), dtype=object)
    elif np.iscomplexobj(a) or np.iscomplexobj(b):
        out = np.zeros(exterior_dim(m, k + l), dtype=np.complex128)
    else:
        out = np.zeros(exterior_dim(m, k + l))
    if len(ii):
        np.add.at(out, oo, a[ii] * b[jj] * ss)
    return out


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product of two real multivectors."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch in wedge")
    m = a.ambient_dim
    k, l = a.degree, b.degree
    return Multivector(m, k + l, _wedge_coeffs(m, k, l, a.coeffs, b.coeffs))


def complex_wedge(a: ComplexMultivector, b: ComplexMultivector) -> ComplexMultivector:
    """Complex-bilinear exterior product."""
    if a.ambient_complex_dim != b.ambient_complex_dim:
        raise ValueError("complex ambient dimension mismatch in wedge")
    n = a.ambient_complex_dim
    k, l = a.degree, b.degree
    return ComplexMultivector(n, k + l, _wedge_coeffs(n, k, l, a.coeffs, b.coeffs))


def blade_from_vectors(*vectors) -> Multivector:
    """Simple blade v1 ^ ... ^ vk; coefficients are the k x k minors."""
    if not vectors:
        raise ValueError("need at least one vector")
    vs = [np.asarray(v) for v in vectors]
    m = len(vs[0])
    if any(len(v) != m for v in vs):
        raise ValueError("vectors must share a dimension")
    out = Multivector.from_vector(vs[0])
    for v in vs[1:]:
        out = wedge(out, Multivector.from_vector(v))
    return out


def complex_blade_from_vectors(*vectors) -> ComplexMultivector:
    """Complex simple blade z1 ^ ... ^ zk."""
    if not vectors:
        raise ValueError("need at least one vector")
    vs = [np.asarray(v, dtype=np.complex128) for v in vectors]
    n = len(vs[0])
    if any(len(v) != n for v in vs):
        raise ValueError("vectors must share a dimension")
    out = ComplexMultivector.from_vector(vs[0])
    for v in vs[1:]:
        out = complex_wedge(out, ComplexMultivector.from_vector(v))
    return out


def hodge_star(a: Multivector) -> Multivector:
    """Hodge dual: the isometry Λ^k -> Λ^{m-k} with <u, v> = u ^ *v."""
    m, k = a.ambient_dim, a.degree
    if not 0 <= k <= m:
        raise ValueError("degree out of range for hodge star")
    perm, sign = _hodge_table(m, k)
    if a.coeffs.dtype == object:
        out = np.zeros(exterior_dim(m, m - k), dtype=object)
    else:
        out = np.zeros(exterior_dim(m, m - k))
    out[perm] = a.coeffs * sign
    return Multivector(m, m - k, out)


def norm(a) -> float:
    """Euclidean coefficient norm; equals the spanned k-volume on blades."""
    c = a.coeffs
    if c.dtype == object:
        return math.sqrt(float(sum(x * x for x in c)))
    return float(np.linalg.norm(c))


def inner(a: Multivector, b: Multivector):
    """Euclidean scalar product of same-degree multivectors."""
    if (a.ambient_dim, a.degree) != (b.ambient_dim, b.degree):
        raise ValueError("shape mismatch in inner product")
    if a.coeffs.dtype == object or b.coeffs.dtype == object:
        return sum(x * y for x, y in zip(a.coeffs, b.coeffs))
    return float(np.dot(a.coeffs, b.coeffs))


def realify(a: ComplexMultivector) -> np.ndarray:
    """Norm-preserving real coordinates: (re, im) interleaved per slot."""
    out = np.empty(2 * len(a.coeffs))
    out[0::2] = a.coeffs.real
    out[1::2] = a.coeffs.imag
    return out


def unrealify(v, n: int, k: int) -> ComplexMultivector:
    """Inverse of :func:`realify` for given complex shape (n, k)."""
    v = np.asarray(v, dtype=np.float64)
    if len(v) != 2 * exterior_dim(n, k):
        raise ValueError("realified length does not match (n, k)")
    return ComplexMultivector(n, k, v[0::2] + 1j * v[1::2])
