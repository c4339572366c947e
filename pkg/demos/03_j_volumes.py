"""J-volumes: zonotope volumes weighted by how complex their tangent spans are.

Run with: python3 demos/03_j_volumes.py

On R^{2n} with its standard complex structure J, each n-dimensional
subspace E carries a weight sigma(E) in [0, 1]: one when E is totally
real, zero when E is J-invariant (a complex subspace).  Integrating
sqrt(sigma) over the n-faces of a body gives its J-volume; integrating
sigma gives the Kazarnovskii variant.  For zonotopes both reduce to
weighted sums over generator subsets.
"""

import math

import numpy as np

import zonoidal as zn


def banner(text):
    print()
    print("=" * 64)
    print(text)
    print("=" * 64)


g = np.random.Generator(np.random.Philox(key=33))


# ----------------------------------------------------------------------
banner("1. The span weight sigma")

# R^4 = C^2 with interleaved coordinates (re z1, im z1, re z2, im z2).
# The complex line spanned by (e1, J e1) has sigma = 0; the real plane
# spanned by (e1, e3) has sigma = 1; tilting between them interpolates.
complex_line = zn.subspace_from_vectors([[1, 0, 0, 0], [0, 1, 0, 0]], 4)
real_plane = zn.subspace_from_vectors([[1, 0, 0, 0], [0, 0, 1, 0]], 4)
print("sigma(complex line) =", zn.sigma_J(complex_line))
print("sigma(real plane)   =", zn.sigma_J(real_plane))

for t in (0.25, 0.5, 1.0):
    tilted = zn.subspace_from_vectors(
        [[1, 0, 0, 0], [0, math.cos(t), math.sin(t), 0]], 4)
    print(f"sigma(tilt t={t:.2f}) = {zn.sigma_J(tilted):.6f}"
          f"   sin^2(t) = {math.sin(t)**2:.6f}")


# ----------------------------------------------------------------------
banner("2. Complex zonotopes and their J-volume")

# complex_zonotope interleaves complex generator rows into R^{2n}.
Z = g.standard_normal((4, 2)) + 1j * g.standard_normal((4, 2))
P = zn.complex_zonotope(Z)
print("4 complex generators in C^2 -> real zonotope in R^%d" % P.ambient_dim)
print("J-volume:      ", zn.j_volume_zonotope(P))
print("Kazarnovskii:  ", zn.kazarnovskii_zonotope(P))
print("(Kazarnovskii weights by sigma <= sqrt(sigma), so it is smaller.)")

# Mixed version: polarizing the J-volume over n bodies.  For discretized
# discs around complex vectors z1, z2 it recovers the complex wedge
# modulus up to the normalization pi^2 / 2!.
z1 = np.array([1.0 + 0.5j, 0.25j])
z2 = np.array([0.2j, 1.0 - 1.0j])
D1 = zn.disc_zonotope(z1, q=64)
D2 = zn.disc_zonotope(z2, q=64)
mvj = zn.mixed_J_volume(D1, D2)
wedge_mod = abs(z1[0] * z2[1] - z1[1] * z2[0])
print("MV^J(discs):                 ", mvj)
print("pi^2/2! * |z1 ^_C z2|:       ", math.pi**2 / 2.0 * wedge_mod)


# ----------------------------------------------------------------------
banner("3. Two routes to the same number")

# Route A: J-volume of the zonotope directly.  Route B: generator length
# of the complex wedge of the body with itself, divided by 2.  These
# agree identically.
route_a = zn.j_volume_zonotope(P)
route_b = zn.length(zn.complex_wedge_zonoids(P, P)) / 2.0
print("direct:     ", route_a)
print("via wedge:  ", route_b)

# Real zonotopes embedded in C^n keep their ordinary volume.
K = zn.zonotope(g.standard_normal((4, 2)), grading=(2, 1))
E = zn.embed_real_zonotope(K)
print("embedded real body: volume", zn.volume(K),
      " J-volume", zn.j_volume_zonotope(E))


# ----------------------------------------------------------------------
banner("4. Face decompositions and Monte Carlo")

# The polytope route decomposes a zonotope into faces and weights each
# face by a normal-cone angle estimated by sampling.  For zonotopes the
# exact value is available, which makes a good cross-check.
P2 = zn.complex_zonotope(g.standard_normal((5, 2)) + 1j * g.standard_normal((5, 2)))
faces = zn.zonotope_face_data(P2)
print("face data: %d vertices, %d 2-faces" % (len(faces.vertices), len(faces.n_faces)))
est, se = zn.j_volume_polytope_mc(faces, samples=20000, seed=5)
exact = zn.j_volume_zonotope(P2)
print(f"MC estimate {est:.6f} +- {se:.6f}   exact {exact:.6f}"
      f"   ({abs(est - exact) / se if se else 0.0:.2f} se away)")

# Normal-cone angles themselves: a facet's complement is a 0-sphere, so
# the angle comes back exactly (1/2 per facet, standard error 0).
sq = zn.zonotope(np.eye(2))
E_edge = zn.subspace_from_vectors([[1.0, 0.0]], 2)
for eps in zn.zonotope_faces_for_span(sq, E_edge):
    theta, se = zn.normal_angle_mc(sq, (E_edge, eps), samples=2000, seed=9)
    print("edge with sign pattern", tuple(int(e) for e in eps),
          "-> normal angle", theta, "+-", se)
