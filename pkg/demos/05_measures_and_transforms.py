"""Even measures on the sphere, the cosine transform, and zonotopes.

Run with: python3 demos/05_measures_and_transforms.py

Every zonotope corresponds to a discrete even measure on the unit
sphere: each generator v contributes mass ||v|| / 2 at the direction
v / ||v|| (identified with its antipode).  The support function of the
zonotope is the cosine transform of that measure, and the dictionary is
exactly invertible for discrete data.
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
banner("1. From zonotope to measure and back")

K = zn.zonotope([[3.0, 4.0], [0.0, 2.0], [-1.0, 1.0]])
mu = zn.zonotope_to_measure(K)
print("atoms (unit directions, sign-normalized):")
print(mu.atoms)
print("weights:", mu.weights)
print("total mass:", float(np.sum(mu.weights)), " = length/2 =", zn.length(K) / 2.0)

back = zn.measure_to_zonotope(mu)
print("round trip gives the same body:", zn.canonical_eq(back, K))


# ----------------------------------------------------------------------
banner("2. The cosine transform is the support function")

u = np.array([0.6, -0.8])
print("cosine transform at u:", zn.cosine_transform_eval(mu, u))
print("support of K at u:    ", zn.support(K, u))

# Injectivity in action: distinct bodies separate somewhere on a net.
L = zn.zonotope([[3.0, 4.0], [1.0, 1.0]])
nu = zn.zonotope_to_measure(L)
net = zn.direction_net(2, 500)
gap = np.max(np.abs(zn.support_many(K, net) - zn.support_many(L, net)))
print("max support gap against a different body:", gap)


# ----------------------------------------------------------------------
banner("3. Exact rational atoms")

# Pythagorean generators have rational norms, so the whole dictionary
# stays inside the rationals.
gens = np.empty((2, 2), dtype=object)
gens[0, :] = [Fraction(3), Fraction(4)]
gens[1, :] = [Fraction(5, 13), Fraction(-12, 13)]
KQ = zn.zonotope(gens)
muQ = zn.zonotope_to_measure(KQ)
print("exact atoms:")
for row, w in zip(muQ.atoms, muQ.weights):
    print("  ", [str(x) for x in row], " weight", w)
backQ = zn.measure_to_zonotope(muQ)
print("exact round trip, bitwise:", bool(np.array_equal(backQ.generators, zn.canonicalize(KQ).generators)))


# ----------------------------------------------------------------------
banner("4. Signed measures give virtual bodies")

# A signed even measure splits into positive and negative parts; the
# pair is a formal difference of zonotopes whose virtual support is the
# signed cosine transform.
atoms = np.array([[1.0, 0.0], [0.0, 1.0]])
weights = np.array([1.0, -0.5])
signed = zn.DiscreteEvenMeasure(2, atoms, weights)
W = zn.signed_measure_to_virtual(signed)
print("virtual support at e1:", zn.virtual_support(W, np.array([1.0, 0.0])))
print("virtual support at e2:", zn.virtual_support(W, np.array([0.0, 1.0])))


# ----------------------------------------------------------------------
banner("5. JSON round trips")

d = zn.measure_to_dict(mu)
print("serialized:", {k: np.round(v, 4).tolist() if k == "atoms" else v for k, v in d.items()})
mu2 = zn.measure_from_dict(d)
print("round trip preserves the transform:",
      float(zn.cosine_transform_eval(mu2, u)) == float(zn.cosine_transform_eval(mu, u)))

# Off-unit atoms in input files are tolerated: the mass moves onto the
# normalized direction.
loose = zn.measure_from_dict({"atoms": [[2.0, 0.0]], "weights": [1.0]})
print("renormalized atom:", loose.atoms[0], " weight:", loose.weights[0])
