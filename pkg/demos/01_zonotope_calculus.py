"""Generator-level zonotope calculus: supports, lengths, sums, and distances.

Run with: python3 demos/01_zonotope_calculus.py

A zonotope here is a finite list of weighted segments summed up: each
generator v contributes the centered segment [-v/2, v/2].  Everything the
library computes is carried out on the generator list itself, so the basic
operations below stay exact and fast regardless of how many vertices the
underlying polytope would have.
"""

from fractions import Fraction

import numpy as np

import zonoidal as zn


def banner(text):
    print()
    print("=" * 64)
    print(text)
    print("=" * 64)


# ----------------------------------------------------------------------
banner("1. Building zonotopes and evaluating support functions")

# The unit cube in R^3 is the sum of the three axis segments.
cube = zn.zonotope(np.eye(3))
print("cube generators:")
print(cube.generators)

# h_K(u) is a sum of |<v_i, u>| / 2 over generators, so the cube's support
# in direction (1, 1, 1) is 3/2.
u = np.array([1.0, 1.0, 1.0])
print("support of cube at (1,1,1):", zn.support(cube, u))

# length() is the total generator length, i.e. the first intrinsic volume
# up to normalization.  For the cube it is 3.
print("generator length of cube:", zn.length(cube))

# Support evaluation is vectorized over directions.
net = zn.direction_net(3, 6)
print("supports on a 6-direction net:", np.round(zn.support_many(cube, net), 6))


# ----------------------------------------------------------------------
banner("2. Exact rational mode")

# Generators can be Fractions (object-dtype array); support values then
# come back as Fractions with no rounding anywhere.
gens = np.empty((1, 2), dtype=object)
gens[0, :] = [Fraction(1, 3), Fraction(1, 5)]
K = zn.zonotope(gens)
h = zn.support(K, np.array([Fraction(3), Fraction(5)], dtype=object))
print("exact support value:", h, "(type:", type(h).__name__ + ")")


# ----------------------------------------------------------------------
banner("3. Minkowski sums and images")

square = zn.zonotope(np.eye(2))
diag = zn.zonotope([[1.0, 1.0]])
hexagon = zn.minkowski_sum(square, diag)
print("hexagon generators (square + diagonal segment):")
print(hexagon.generators)

# Support functions add under Minkowski sum.
d = np.array([2.0, -1.0])
lhs = zn.support(hexagon, d)
rhs = zn.support(square, d) + zn.support(diag, d)
print("additivity check:", lhs, "==", rhs)

# Linear images act generator by generator.  A rotation leaves the radius
# unchanged; a projection drops a coordinate.
theta = 0.3
rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
print("radius before/after rotation:",
      zn.radius(square), zn.radius(zn.linear_image(rot, square)))
proj = np.array([[1.0, 0.0]])
print("projected hexagon length:", zn.length(zn.linear_image(proj, hexagon)))


# ----------------------------------------------------------------------
banner("4. Canonical form")

# Zero generators are dropped, collinear generators are merged, signs are
# normalized, and rows are sorted.  Two generator lists describe the same
# body iff they canonicalize identically.
messy = zn.zonotope([[1.0, 0.0], [-2.0, 0.0], [0.0, 0.0], [0.0, 1.0]])
print("canonical generators of a messy list:")
print(zn.canonicalize(messy).generators)
clean = zn.zonotope([[3.0, 0.0], [0.0, 1.0]])
print("same body as {3 e1, e2}?", zn.canonical_eq(messy, clean))


# ----------------------------------------------------------------------
banner("5. Radius and Hausdorff distance")

# Exact radius enumerates sign patterns, so it is limited to modest
# generator counts; the bounds variant scales to anything.
g = np.random.Generator(np.random.Philox(key=7))
K = zn.zonotope(g.standard_normal((12, 3)))
r = zn.radius(K)
lo, hi = zn.radius_bounds(K, net_count=4096, seed=1)
print(f"exact radius {r:.6f} inside bounds [{lo:.6f}, {hi:.6f}]")

# Hausdorff distance comes back as a certified interval from a covering
# net: the true distance lies between the two numbers.
L = zn.scale(K, 2.0)
dlo, dhi = zn.hausdorff_estimate(K, L, delta=1e-3, seed=1)
print(f"certified Hausdorff interval between K and 2K: [{dlo:.6f}, {dhi:.6f}]")
print(f"(the distance here equals the radius of K: {r:.6f})")


# ----------------------------------------------------------------------
banner("6. Virtual (formal difference) zonotopes")

# Differences K - L live in the virtual world: supports subtract, lengths
# are signed, and a virtual zonotope can be fed back into products later.
A = zn.zonotope([[5.0, 1.0]])
B = zn.zonotope([[5.0, 0.0]])
W = zn.VirtualZonotope(A, B)
u = np.array([0.0, 1.0])
print("virtual support of A - B at e2:", zn.virtual_support(W, u))
print("virtual length:", zn.virtual_length(W))


# ----------------------------------------------------------------------
banner("7. JSON round trips")

d = zn.zonotope_to_dict(hexagon)
print("serialized hexagon:", d)
back = zn.zonotope_from_dict(d)
print("round trip preserves the body:", zn.canonical_eq(back, hexagon))
