"""Tests for generator-level zonotope calculus."""

import math
from fractions import Fraction

import numpy as np
import pytest

from zonoidal import (
    VirtualZonotope,
    canonical_eq,
    canonicalize,
    hausdorff_estimate,
    length,
    linear_image,
    minkowski_sum,
    radius,
    radius_bounds,
    scale,
    support,
    support_many,
    tau,
    virtual_add,
    virtual_eq,
    virtual_length,
    virtual_negate,
    virtual_support,
    zonotope,
    zonotope_from_dict,
    zonotope_to_dict,
)
from zonoidal.sampling import direction_net
from zonoidal.testkit import length_brute, radius_brute, support_brute


def rng(seed=0):
    return np.random.Generator(np.random.Philox(key=seed))


def random_zonotope(g, dim=None, max_gens=5):
    d = dim if dim is not None else int(g.integers(1, 5))
    return zonotope(g.standard_normal((int(g.integers(1, max_gens + 1)), d)))


def frac_zonotope(rows):
    arr = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        arr[i, :] = [Fraction(x) for x in row]
    return zonotope(arr)


def test_support_examples():
    seg = zonotope([[1.0, 0.0]])
    assert support(seg, [1.0, 0.0]) == 0.5
    square = zonotope([[1.0, 0.0], [0.0, 1.0]])
    assert math.isclose(support(square, [1.0, 1.0]), 1.0)
    origin = zonotope([], ambient_dim=3)
    assert support(origin, [1.0, 2.0, 3.0]) == 0.0


def test_support_matches_brute():
    g = rng(1)
    for _ in range(30):
        K = random_zonotope(g)
        u = g.standard_normal(K.ambient_dim)
        assert math.isclose(support(K, u), support_brute(K.generators, u),
                            rel_tol=1e-12, abs_tol=1e-12)


def test_support_even_and_sublinear():
    g = rng(2)
    for _ in range(20):
        K = random_zonotope(g)
        u = g.standard_normal(K.ambient_dim)
        v = g.standard_normal(K.ambient_dim)
        assert math.isclose(support(K, u), support(K, -u), rel_tol=1e-12)
        assert support(K, u + v) <= support(K, u) + support(K, v) + 1e-12


def test_support_exact_rational():
    K = frac_zonotope([[Fraction(1, 3), Fraction(2, 7)], [Fraction(-4, 5), Fraction(1, 2)]])
    u = np.array([Fraction(2), Fraction(3)], dtype=object)
    val = support(K, u)
    assert isinstance(val, Fraction)
    expected = (abs(Fraction(2, 3) + Fraction(6, 7)) + abs(Fraction(-8, 5) + Fraction(3, 2))) / 2
    assert val == expected


def test_support_many_matches_support():
    g = rng(3)
    K = random_zonotope(g, dim=3)
    U = g.standard_normal((40, 3))
    vals = support_many(K, U)
    for u, v in zip(U, vals):
        assert math.isclose(v, support(K, u), rel_tol=1e-12)


def test_length():
    square = zonotope([[1.0, 0.0], [0.0, 1.0]])
    assert math.isclose(length(square), 2.0)
    g = rng(4)
    K = random_zonotope(g)
    assert math.isclose(length(K), length_brute(K.generators), rel_tol=1e-12)


def test_length_exact_in_dim_one():
    K = frac_zonotope([[Fraction(1, 3)], [Fraction(-2, 5)]])
    val = length(K)
    assert isinstance(val, Fraction)
    assert val == Fraction(1, 3) + Fraction(2, 5)


def test_minkowski_sum_merges_and_supports_add():
    a = zonotope([[1.0, 0.0]])
    b = zonotope([[2.0, 0.0]])
    s = canonicalize(minkowski_sum(a, b))
    assert s.n_generators == 1
    assert np.allclose(s.generators, [[3.0, 0.0]])
    g = rng(5)
    K = random_zonotope(g, dim=3)
    L = random_zonotope(g, dim=3)
    u = g.standard_normal(3)
    assert math.isclose(support(minkowski_sum(K, L), u),
                        support(K, u) + support(L, u), rel_tol=1e-12)


def test_sum_with_origin_is_identity():
    g = rng(6)
    K = random_zonotope(g, dim=2)
    O = zonotope([], ambient_dim=2)
    assert canonical_eq(minkowski_sum(K, O), K)


def test_scale():
    g = rng(7)
    K = random_zonotope(g, dim=3)
    u = g.standard_normal(3)
    assert math.isclose(support(scale(K, 2.5), u), 2.5 * support(K, u), rel_tol=1e-12)
    assert math.isclose(length(scale(K, 3.0)), 3.0 * length(K), rel_tol=1e-12)
    Z = scale(K, 0.0)
    assert support(Z, u) == 0.0
    with pytest.raises(ValueError):
        scale(K, -1.0)


def test_linear_image():
    K = zonotope([[1.0, 0.0], [0.0, 1.0]])
    M = np.array([[1.0, 0.0]])
    P = canonicalize(linear_image(M, K))
    assert P.ambient_dim == 1
    assert math.isclose(length(P), 1.0)
    # rotations preserve length
    g = rng(8)
    K = random_zonotope(g, dim=2)
    t = 0.7
    R = np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])
    assert math.isclose(length(linear_image(R, K)), length(K), rel_tol=1e-12)


def test_canonicalize_rules():
    K = zonotope([[1.0, 0.0], [-1.0, 0.0], [0.0, 0.0], [2.0, 0.0], [0.0, 1.0]])
    C = canonicalize(K)
    assert C.n_generators == 2
    assert np.allclose(sorted(C.generators.tolist()), [[0.0, 1.0], [4.0, 0.0]])
    # sign normalization: first nonzero coordinate positive
    D = canonicalize(zonotope([[-1.0, 2.0]]))
    assert np.allclose(D.generators, [[1.0, -2.0]])


def test_canonicalize_idempotent_and_support_preserving():
    g = rng(9)
    for _ in range(10):
        K = random_zonotope(g, dim=3, max_gens=8)
        C = canonicalize(K)
        assert canonical_eq(C, canonicalize(C))
        U = direction_net(3, 100)
        assert np.allclose(support_many(K, U), support_many(C, U), rtol=1e-12, atol=1e-12)


def test_canonicalize_exact():
    K = frac_zonotope([[1, 2], [2, 4], [-3, -6], [0, 1]])
    C = canonicalize(K)
    assert C.exact
    assert C.n_generators == 2
    gens = sorted(tuple(r) for r in C.generators)
    assert gens == [(Fraction(0), Fraction(1)), (Fraction(6), Fraction(12))]


def test_radius_examples():
    seg = zonotope([[3.0, 4.0]])
    assert math.isclose(radius(seg), 2.5)
    square = zonotope([[1.0, 0.0], [0.0, 1.0]])
    assert math.isclose(radius(square), math.sqrt(2.0) / 2.0)


def test_radius_matches_brute_and_bounds():
    g = rng(10)
    for _ in range(10):
        K = random_zonotope(g, dim=3, max_gens=6)
        r = radius(K)
        assert math.isclose(r, radius_brute(K.generators), rel_tol=1e-10)
        lo, hi = radius_bounds(K, net_count=2048, seed=3)
        assert lo <= r * (1 + 1e-12)
        assert r <= hi * (1 + 1e-12)
    big = zonotope(rng(11).standard_normal((23, 2)))
    with pytest.raises(ValueError):
        radius(big)


def test_norm_length_sandwich():
    g = rng(12)
    for _ in range(10):
        d = int(g.integers(1, 4))
        K = random_zonotope(g, dim=d)
        r = radius(K)
        ell = length(K)
        assert 2.0 * r <= ell * (1 + 1e-12)
        assert ell <= tau(d) * r * (1 + 1e-12)


def test_hausdorff_estimate():
    g = rng(13)
    K = random_zonotope(g, dim=2, max_gens=4)
    lo, hi = hausdorff_estimate(K, K, delta=1e-3)
    assert lo == 0.0
    assert hi <= length(K) * 1e-3 + 1e-15
    # distinct bodies: interval brackets the max support gap on the net
    L = scale(K, 2.0)
    lo2, hi2 = hausdorff_estimate(K, L, delta=1e-3)
    lb = radius_bounds(K)[0]
    assert hi2 >= lb  # true distance equals the norm of K
    assert lo2 <= radius_bounds(K)[1] + 1e-12


def test_virtual_difference_basics():
    g = rng(14)
    K = random_zonotope(g, dim=2)
    W = VirtualZonotope(K, K)
    u = g.standard_normal(2)
    assert abs(virtual_support(W, u)) < 1e-12
    assert abs(virtual_length(W)) < 1e-12
    L = random_zonotope(g, dim=2)
    V = VirtualZonotope(K, L)
    assert math.isclose(virtual_support(V, u), support(K, u) - support(L, u),
                        rel_tol=1e-12, abs_tol=1e-12)
    assert math.isclose(virtual_length(V), length(K) - length(L), rel_tol=1e-12)


def test_virtual_add_negate():
    g = rng(15)
    K, L, M = (random_zonotope(g, dim=2) for _ in range(3))
    V = VirtualZonotope(K, L)
    W = VirtualZonotope(M, zonotope([], ambient_dim=2))
    S = virtual_add(V, W)
    u = g.standard_normal(2)
    assert math.isclose(virtual_support(S, u),
                        virtual_support(V, u) + virtual_support(W, u), rel_tol=1e-12)
    N = virtual_negate(V)
    assert math.isclose(virtual_support(N, u), -virtual_support(V, u), rel_tol=1e-12)
    assert virtual_eq(virtual_add(V, N), VirtualZonotope(K, K))


def test_segment_pair_distance_interval():
    # nearly parallel long segments at unit vertical offset stay 1/2 apart
    for n in (1, 10, 100):
        A = zonotope([[float(n), 1.0]])
        B = zonotope([[float(n), 0.0]])
        lo, hi = hausdorff_estimate(A, B, delta=1e-3)
        assert lo <= 0.5 <= hi


def test_tensor_square_of_difference_grows():
    # support of (A - B) tensor (A - B) in a fixed direction grows linearly
    # in n even though the bodies stay at distance 1/2
    from zonoidal import virtual_tensor

    ratios = []
    for n in (1, 5, 20, 100):
        A = zonotope([[float(n), 1.0]])
        B = zonotope([[float(n), 0.0]])
        W = VirtualZonotope(A, B)
        P = virtual_tensor(W, W)
        w = np.array([1.0, -float(n), -float(n), 0.0])
        val = virtual_support(P, w)
        expected = n * n / math.sqrt(1.0 + 2.0 * n * n)
        ratio = val / float(np.linalg.norm(w))
        assert math.isclose(ratio, expected, rel_tol=1e-10)
        ratios.append(ratio)
    assert all(b > a for a, b in zip(ratios, ratios[1:]))


def test_serialization_roundtrip_float():
    g = rng(16)
    K = zonotope(g.standard_normal((4, 3)), grading=(3, 1), simple=True)
    d = zonotope_to_dict(K)
    back = zonotope_from_dict(d)
    assert back.grading == (3, 1)
    assert not back.simple  # decomposition bookkeeping is not persisted
    assert np.array_equal(back.generators, K.generators)


def test_serialization_roundtrip_exact():
    K = frac_zonotope([[Fraction(1, 3), Fraction(-2, 7)]])
    d = zonotope_to_dict(K)
    assert d["generators"][0][0] == "1/3"
    back = zonotope_from_dict(d)
    assert back.exact
    assert back.generators[0][0] == Fraction(1, 3)
    assert back.generators[0][1] == Fraction(-2, 7)


def test_serialization_cgrading_and_errors():
    K = zonotope(rng(17).standard_normal((2, 4)), cgrading=(2, 1))
    back = zonotope_from_dict(zonotope_to_dict(K))
    assert back.cgrading == (2, 1)
    with pytest.raises(KeyError):
        zonotope_from_dict({"ambient_dim": 2})
