"""Complex-structure volumes: sigma^J, complex wedges, mixed J-volume,
J-volume of zonotopes and of polytopes with supplied faces, and the
Kazarnovskii pseudovolume.

Complex vectors live in realified coordinates: z in C^n becomes the
interleaved real vector (Re z_1, Im z_1, ..., Re z_n, Im z_n), and the
standard complex structure J acts blockwise by (x, y) -> (-y, x).  A
zonotope whose generators are realified elements of the k-th complex
exterior power carries the tag ``cgrading=(n, k)``.

The J-volume of a zonotope P in C^n sums, over the distinct spans E of
n independent generators, vol_n of the sub-zonotope of generators lying
in E times sigma^J(E)^(1/2); the Kazarnovskii pseudovolume uses
sigma^J(E) un-rooted.  For general polytopes the same sum runs over the
supplied n-faces with a Monte Carlo normal-angle weight.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from . import exterior
from .exterior import ComplexMultivector, exterior_dim, realify, unrealify
from .sampling import SeedStream, chunk_sizes, derive_seed
from .zonotope import Zonotope, canonicalize, length, zonotope

__all__ = [
    "ComplexStructure",
    "Subspace",
    "PolytopeFaceData",
    "standard_structure",
    "sigma_J",
    "embed_real_zonotope",
    "complex_wedge_zonoids",
    "mixed_J_volume",
    "j_volume_zonotope",
    "kazarnovskii_zonotope",
    "normal_angle_mc",
    "j_volume_polytope_mc",
    "kazarnovskii_polytope_mc",
    "disc_zonotope",
    "zonotope_faces_for_span",
    "zonotope_face_data",
    "face_data_to_dict",
    "face_data_from_dict",
]

J_SQUARE_TOL = 1e-12
ORTHONORMAL_TOL = 1e-10
SPAN_MEMBER_TOL = 1e-9
SPAN_KEY_DECIMALS = 8


@dataclass(frozen=True)
class ComplexStructure:
    """A linear map J with J^2 = -Identity on R^(2n)."""

    complex_dim: int
    J: np.ndarray

    def __post_init__(self):
        J = np.asarray(self.J, dtype=np.float64)
        n = self.complex_dim
        if J.shape != (2 * n, 2 * n):
            raise ValueError("J must be 2n x 2n")
        if np.max(np.abs(J @ J + np.eye(2 * n))) > J_SQUARE_TOL:
            raise ValueError("J^2 must equal -Identity")
        object.__setattr__(self, "J", J)


def standard_structure(n: int) -> ComplexStructure:
    """Multiplication by i in interleaved coordinates: (x, y) -> (-y, x)."""
    J = np.zeros((2 * n, 2 * n))
    for j in range(n):
        J[2 * j, 2 * j + 1] = -1.0
        J[2 * j + 1, 2 * j] = 1.0
    return ComplexStructure(n, J)


def _structure(ambient_dim: int, J) -> ComplexStructure:
    if ambient_dim % 2:
        raise ValueError("complex structure needs even ambient dimension")
    if J is None:
        return standard_structure(ambient_dim // 2)
    if isinstance(J, ComplexStructure):
        if J.J.shape[0] != ambient_dim:
            raise ValueError("complex structure dimension mismatch")
        return J
    return ComplexStructure(ambient_dim // 2, np.asarray(J))


@dataclass(frozen=True)
class Subspace:
    """A linear subspace given by orthonormal basis rows."""

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self):
        B = np.asarray(self.basis, dtype=np.float64)
        if B.ndim != 2 or B.shape[1] != self.ambient_dim:
            raise ValueError("basis rows must have length ambient_dim")
        gram = B @ B.T
        if B.shape[0] and np.max(np.abs(gram - np.eye(B.shape[0]))) > ORTHONORMAL_TOL:
            B = _orthonormal_rows(B, B.shape[0])
        object.__setattr__(self, "basis", B)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def projector(self) -> np.ndarray:
        return self.basis.T @ self.basis

    def key(self) -> bytes:
        """Basis-independent grouping key: rounded projector entries."""
        P = np.round(self.projector(), SPAN_KEY_DECIMALS) + 0.0
        return P.tobytes()

    def complement(self) -> "Subspace":
        _, _, Vt = np.linalg.svd(self.basis, full_matrices=True)
        return Subspace(self.ambient_dim, Vt[self.dim:])

    def contains(self, v, tol: float = SPAN_MEMBER_TOL) -> bool:
        v = np.asarray(v, dtype=np.float64)
        resid = v - self.basis.T @ (self.basis @ v)
        return float(np.linalg.norm(resid)) <= tol * float(np.linalg.norm(v))


def _orthonormal_rows(V: np.ndarray, expected_rank: int | None = None) -> np.ndarray:
    """Orthonormal row basis of the row span of V (SVD), rank-checked."""
    V = np.asarray(V, dtype=np.float64)
    U, s, Vt = np.linalg.svd(V, full_matrices=False)
    if s.size == 0:
        return Vt[:0]
    rank = int(np.sum(s > max(V.shape) * np.finfo(np.float64).eps * s[0]))
    if expected_rank is not None and rank < expected_rank:
        raise ValueError("rank-deficient basis")
    return Vt[:rank]


def subspace_from_vectors(vectors, ambient_dim: int | None = None) -> Subspace:
    V = np.asarray(vectors, dtype=np.float64)
    if ambient_dim is None:
        ambient_dim = V.shape[1]
    return Subspace(ambient_dim, _orthonormal_rows(V))


@dataclass(frozen=True)
class PolytopeFaceData:
    """Vertices of a polytope in R^(2n) plus its n-faces as index lists."""

    ambient_dim: int
    vertices: np.ndarray
    n_faces: tuple

    def __post_init__(self):
        V = np.asarray(self.vertices, dtype=np.float64)
        if V.ndim != 2 or V.shape[1] != self.ambient_dim:
            raise ValueError("vertices must be rows of length ambient_dim")
        faces = tuple(tuple(int(i) for i in f) for f in self.n_faces)
        for f in faces:
            if not f or max(f) >= V.shape[0] or min(f) < 0:
                raise ValueError("face refers to a missing vertex")
        object.__setattr__(self, "vertices", V)
        object.__setattr__(self, "n_faces", faces)


def sigma_J(E: Subspace, J=None) -> float:
    """sigma^J(E) = |det [b_1 .. b_n, Jb_1 .. Jb_n]| for an orthonormal
    basis of the half-dimensional subspace E; 1 exactly on Lagrangian
    planes, 0 exactly when E contains a complex line.
    """
    struct = _structure(E.ambient_dim, J)
    n = struct.complex_dim
    if E.dim != n:
        raise ValueError("sigma^J needs a half-dimensional subspace")
    B = E.basis
    M = np.hstack([B.T, (struct.J @ B.T)])
    val = abs(float(np.linalg.det(M)))
    return min(val, 1.0)


def _require_cgrading(K: Zonotope) -> tuple[int, int]:
    if K.cgrading is None:
        raise ValueError("operation requires a complex-graded zonotope")
    n, k = K.cgrading
    if K.ambient_dim != 2 * exterior_dim(n, k):
        raise ValueError("ambient_dim does not match the complex grading")
    return n, k


def embed_real_zonotope(K: Zonotope) -> Zonotope:
    """Embed a real zonotope in R^n into C^n (zero imaginary parts)."""
    if K.exact:
        K = canonicalize(K)
        gens = np.asarray(
            [[float(x) for x in row] for row in K.generators], dtype=np.float64
        ).reshape(K.n_generators, K.ambient_dim)
    else:
        gens = K.generators
    out = np.zeros((gens.shape[0], 2 * K.ambient_dim))
    out[:, 0::2] = gens
    return canonicalize(zonotope(out, ambient_dim=2 * K.ambient_dim,
                                 cgrading=(K.ambient_dim, 1)))


def complex_zonotope(vectors, n: int | None = None) -> Zonotope:
    """Zonotope in C^n from complex generator rows (realified storage)."""
    Z = np.asarray(vectors, dtype=np.complex128)
    if Z.ndim == 1:
        Z = Z[None, :]
    if n is None:
        n = Z.shape[1]
    gens = np.empty((Z.shape[0], 2 * n))
    gens[:, 0::2] = Z.real
    gens[:, 1::2] = Z.imag
    return canonicalize(zonotope(gens, ambient_dim=2 * n, cgrading=(n, 1)))


def complex_wedge_zonoids(*zonotopes: Zonotope) -> Zonotope:
    """Pairwise complex wedges of generators, realified and canonical."""
    if not zonotopes:
        raise ValueError("need at least one zonotope")
    gradings = [_require_cgrading(K) for K in zonotopes]
    n = gradings[0][0]
    if any(g[0] != n for g in gradings):
        raise ValueError("complex-dimension mismatch")

    def mvs(K: Zonotope, k: int):
        return [unrealify(g, n, k) for g in K.generators]

    acc = mvs(zonotopes[0], gradings[0][1])
    deg = gradings[0][1]
    for K, (_, k) in zip(zonotopes[1:], gradings[1:]):
        nxt = []
        for a in acc:
            for b in mvs(K, k):
                nxt.append(exterior.complex_wedge(a, b))
        acc = nxt
        deg += k
    out_dim = 2 * exterior_dim(n, deg)
    if not acc:
        return zonotope([], ambient_dim=out_dim, cgrading=(n, deg))
    gens = np.asarray([realify(a) for a in acc])
    return canonicalize(Zonotope(out_dim, gens, cgrading=(n, deg)))


def mixed_J_volume(*zonotopes: Zonotope) -> float:
    """MV^J(K_1, ..., K_n) = length(K_1 ^_C ... ^_C K_n) / n!."""
    if not zonotopes:
        raise ValueError("need at least one zonotope")
    n, k = _require_cgrading(zonotopes[0])
    if k != 1 or any(K.cgrading != (n, 1) for K in zonotopes):
        raise ValueError("mixed J-volume expects degree-1 bodies in C^n")
    if len(zonotopes) != n:
        raise ValueError(f"mixed J-volume in C^{n} needs exactly {n} bodies")
    return float(length(complex_wedge_zonoids(*zonotopes))) / math.factorial(n)


def _independent_spans(P: Zonotope, n: int):
    """Distinct n-dimensional generator spans, keyed by rounded projector."""
    spans: dict[bytes, Subspace] = {}
    G = P.generators
    for subset in combinations(range(P.n_generators), n):
        V = G[list(subset)]
        B = _orthonormal_rows(V)
        if B.shape[0] != n:
            continue
        E = Subspace(P.ambient_dim, B)
        spans.setdefault(E.key(), E)
    return list(spans.values())


def _chart_generators(P: Zonotope, E: Subspace) -> np.ndarray:
    """Coordinates (in E's basis) of the generators lying in E."""
    rows = [E.basis @ g for g in P.generators if E.contains(g)]
    return np.asarray(rows).reshape(len(rows), E.dim)


def _float_zonotope(P: Zonotope) -> Zonotope:
    if not P.exact:
        return P
    gens = np.asarray(
        [[float(x) for x in row] for row in P.generators], dtype=np.float64
    ).reshape(P.n_generators, P.ambient_dim)
    return Zonotope(P.ambient_dim, gens, P.grading, P.cgrading, P.simple)


def _j_volume_sum(P: Zonotope, J, weight) -> float:
    from .algebra import volume

    if P.ambient_dim % 2:
        raise ValueError("J-volume needs even ambient dimension")
    struct = _structure(P.ambient_dim, J)
    n = struct.complex_dim
    P = canonicalize(_float_zonotope(P))
    total = 0.0
    for E in _independent_spans(P, n):
        chart = _chart_generators(P, E)
        face_vol = float(volume(zonotope(chart, ambient_dim=n)))
        total += face_vol * weight(sigma_J(E, struct))
    return total


def j_volume_zonotope(P: Zonotope, J=None) -> float:
    """vol_n^J(P): sum over generator spans E of vol_n(F_P(E)) sigma^J(E)^(1/2).

    Agrees with length(P^(^_C n)) / n! for the standard structure.
    """
    return _j_volume_sum(P, J, math.sqrt)


def kazarnovskii_zonotope(P: Zonotope, J=None) -> float:
    """Kazarnovskii pseudovolume: the same sum with sigma^J un-rooted."""
    return _j_volume_sum(P, J, lambda s: s)


def disc_zonotope(z, q: int) -> Zonotope:
    """Polygonal model of the disc zonoid D_z = K(unit-circle multiples of z).

    Generators (pi/q) e^(theta J) z over theta = j pi / q, j = 0..q-1;
    the half turn suffices by central symmetry.  length == pi ||z|| at
    every q; the Hausdorff error against the true disc is O(||z||/q^2).
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    n = z.shape[0]
    if not np.any(z != 0):
        warnings.warn("disc of the zero vector is {0}", stacklevel=2)
        return zonotope([], ambient_dim=2 * n, cgrading=(n, 1))
    thetas = np.pi * np.arange(q) / q
    rows = (np.pi / q) * np.exp(1j * thetas)[:, None] * z[None, :]
    gens = np.empty((q, 2 * n))
    gens[:, 0::2] = rows.real
    gens[:, 1::2] = rows.imag
    return canonicalize(zonotope(gens, ambient_dim=2 * n, cgrading=(n, 1)))


def _face_membership_counter(P, face):
    """Return (complement Subspace, hit predicate) for a face of P."""
    if isinstance(P, Zonotope):
        E, signs = face
        if not isinstance(E, Subspace):
            E = subspace_from_vectors(E, P.ambient_dim)
        P = canonicalize(_float_zonotope(P))
        outside = np.asarray(
            [g for g in P.generators if not E.contains(g)]
        ).reshape(-1, P.ambient_dim)
        signs = np.asarray(signs, dtype=np.float64)
        if signs.shape != (outside.shape[0],):
            raise ValueError(
                "sign vector must match the generators outside the span, "
                "in canonical order"
            )

        def hits(U: np.ndarray) -> np.ndarray:
            dots = U @ outside.T
            return np.all(dots * signs > 0.0, axis=1)

        return E.complement(), hits

    if isinstance(P, PolytopeFaceData):
        idx = P.n_faces[int(face)] if isinstance(face, (int, np.integer)) else face
        idx = list(idx)
        verts = P.vertices
        fverts = verts[idx]
        centroid = fverts.mean(axis=0)
        E = Subspace(P.ambient_dim, _orthonormal_rows(fverts - centroid))

        def hits(U: np.ndarray) -> np.ndarray:
            all_dots = U @ verts.T
            peak = all_dots.max(axis=1)
            scale = np.maximum(1.0, np.abs(peak))
            face_min = all_dots[:, idx].min(axis=1)
            return face_min >= peak - 1e-12 * scale

        return E.complement(), hits

    raise TypeError("P must be a Zonotope or PolytopeFaceData")


def normal_angle_mc(P, face, samples: int, seed: int = 0) -> tuple[float, float]:
    """Normalized normal angle Theta_P(F) with its binomial standard error.

    Samples directions uniformly on the unit sphere of the orthogonal
    complement of the face's direction span; a hit is a direction whose
    maximizing face is F.  A 0-sphere complement is handled exactly by
    checking both antipodal directions and counting hits/2 (error 0).
    """
    comp, hits = _face_membership_counter(P, face)
    c = comp.dim
    if c == 0:
        raise ValueError("degenerate complement: the face spans the ambient space")
    if c == 1:
        U = np.vstack([comp.basis, -comp.basis])
        return float(np.count_nonzero(hits(U))) / 2.0, 0.0
    if samples < 1:
        raise ValueError("need at least one sample")
    stream = SeedStream(seed).derive("normal_angle")
    hit_count = 0
    for ci, size in enumerate(chunk_sizes(samples)):
        pts = stream.derive(ci).sphere(size, c)
        U = pts @ comp.basis
        hit_count += int(np.count_nonzero(hits(U)))
    p = hit_count / samples
    se = math.sqrt(max(p * (1.0 - p), 0.0) / samples)
    return p, se


def _ordered_hull_area(chart: np.ndarray) -> float:
    """Area of a convex polygon given as an unordered 2D point cloud:
    fan triangulation from the centroid over hull vertices in order.
    """
    from scipy.spatial import ConvexHull, QhullError

    pts = np.unique(np.round(chart, 12), axis=0)
    if pts.shape[0] < 3:
        return 0.0
    try:
        hull = ConvexHull(pts)
    except QhullError:
        return 0.0
    ring = pts[hull.vertices]
    c = ring.mean(axis=0)
    area = 0.0
    for i in range(len(ring)):
        a = ring[i] - c
        b = ring[(i + 1) % len(ring)] - c
        area += 0.5 * abs(a[0] * b[1] - a[1] * b[0])
    return area


def _face_volume(chart: np.ndarray, n: int) -> float:
    if n == 1:
        lo, hi = float(np.min(chart)), float(np.max(chart))
        return hi - lo
    if n == 2:
        return _ordered_hull_area(chart)
    from scipy.spatial import ConvexHull, QhullError

    try:
        return float(ConvexHull(chart).volume)
    except QhullError:
        return 0.0


def _polytope_mc_sum(P: PolytopeFaceData, samples, seed, J, weight):
    struct = _structure(P.ambient_dim, J)
    n = struct.complex_dim
    total = 0.0
    var = 0.0
    for fi, idx in enumerate(P.n_faces):
        fverts = P.vertices[list(idx)]
        centroid = fverts.mean(axis=0)
        B = _orthonormal_rows(fverts - centroid)
        if B.shape[0] > n:
            raise ValueError(f"face {fi} spans more than {n} dimensions")
        if B.shape[0] < n:
            continue
        E = Subspace(P.ambient_dim, B)
        vol = _face_volume((fverts - centroid) @ B.T, n)
        if vol == 0.0:
            continue
        w = weight(sigma_J(E, struct))
        if w == 0.0:
            continue
        theta, se = normal_angle_mc(P, list(idx), samples,
                                    seed=derive_seed(seed, "face", fi))
        total += vol * w * theta
        var += (vol * w * se) ** 2
    return total, math.sqrt(var)


def j_volume_polytope_mc(P: PolytopeFaceData, samples: int, seed: int = 0,
                         J=None) -> tuple[float, float]:
    """Monte Carlo J-volume from supplied n-faces:
    sum of vol_n(F) Theta_P(F) sigma^J(E_F)^(1/2), with propagated error.
    """
    return _polytope_mc_sum(P, samples, seed, J, math.sqrt)


def kazarnovskii_polytope_mc(P: PolytopeFaceData, samples: int, seed: int = 0,
                             J=None) -> tuple[float, float]:
    """Monte Carlo Kazarnovskii pseudovolume (sigma^J un-rooted)."""
    return _polytope_mc_sum(P, samples, seed, J, lambda s: s)


def zonotope_faces_for_span(P: Zonotope, E: Subspace):
    """Sign vectors of the faces of P whose direction span is E.

    Each face with direction span E is a translate of the sub-zonotope
    of in-E generators by (1/2) sum of eps_k v_k over the generators
    outside E; this enumerates the realizable eps.  Exact for a
    2-dimensional complement (angular sweep); random-probe enumeration
    with a dedup otherwise.
    """
    P = canonicalize(_float_zonotope(P))
    comp = E.complement()
    outside = np.asarray(
        [g for g in P.generators if not E.contains(g)]
    ).reshape(-1, P.ambient_dim)
    if outside.shape[0] == 0:
        return []
    proj = outside @ comp.basis.T
    c = comp.dim
    if c == 1:
        s = np.where(proj[:, 0] > 0, 1.0, -1.0)
        return [tuple(s), tuple(-s)]
    if c == 2:
        angles = np.arctan2(proj[:, 1], proj[:, 0])
        # Wall normals of the cells cut by the lines <p_i, u> = 0.
        walls = np.sort(np.unique(np.concatenate([
            np.mod(angles + np.pi / 2, np.pi),
            np.mod(angles - np.pi / 2, np.pi),
        ])))
        walls = np.concatenate([walls, walls + np.pi])
        mids = (walls + np.roll(walls, -1)) / 2.0
        mids[-1] = (walls[-1] + walls[0] + 2 * np.pi) / 2.0
        out = []
        seen = set()
        for t in mids:
            u = np.array([np.cos(t), np.sin(t)])
            dots = proj @ u
            if np.any(dots == 0.0):
                continue
            key = tuple(np.where(dots > 0, 1.0, -1.0))
            if key not in seen:
                seen.add(key)
                out.append(key)
        return out
    stream = SeedStream(17).derive("face_probe")
    seen = set()
    for ci, size in enumerate(chunk_sizes(4096 * c)):
        for u in stream.derive(ci).sphere(size, c):
            dots = proj @ u
            if np.any(dots == 0.0):
                continue
            seen.add(tuple(np.where(dots > 0, 1.0, -1.0)))
    return sorted(seen)


def zonotope_face_data(P: Zonotope, J=None) -> PolytopeFaceData:
    """All n-faces of a zonotope in R^(2n) as explicit vertex data.

    Points of the face F = (1/2) sum eps_k v_k + sub-zonotope(E) are
    emitted for every sign choice on the in-E generators; points
    interior to a face are harmless for volumes and normal angles.
    """
    struct = _structure(P.ambient_dim, J)
    n = struct.complex_dim
    P = canonicalize(_float_zonotope(P))
    vert_index: dict[bytes, int] = {}
    verts: list[np.ndarray] = []
    faces = []

    def add_vertex(p: np.ndarray) -> int:
        key = (np.round(p, 9) + 0.0).tobytes()
        if key not in vert_index:
            vert_index[key] = len(verts)
            verts.append(p)
        return vert_index[key]

    for E in _independent_spans(P, n):
        inside = [g for g in P.generators if E.contains(g)]
        outside = [g for g in P.generators if not E.contains(g)]
        for eps in zonotope_faces_for_span(P, E):
            shift = 0.5 * sum(
                (e * g for e, g in zip(eps, outside)), np.zeros(P.ambient_dim)
            )
            face = []
            for signs in product((-1.0, 1.0), repeat=len(inside)):
                p = shift + 0.5 * sum(
                    (s * g for s, g in zip(signs, inside)), np.zeros(P.ambient_dim)
                )
                face.append(add_vertex(p))
            faces.append(sorted(set(face)))
    return PolytopeFaceData(P.ambient_dim, np.asarray(verts), tuple(faces))


def face_data_to_dict(P: PolytopeFaceData) -> dict:
    return {
        "ambient_dim": P.ambient_dim,
        "vertices": [[float(x) for x in v] for v in P.vertices],
        "n_faces": [list(f) for f in P.n_faces],
    }


def face_data_from_dict(d: dict) -> PolytopeFaceData:
    return PolytopeFaceData(int(d["ambient_dim"]), d["vertices"], d["n_faces"])
