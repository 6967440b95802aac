import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

import dualvinberg as dv
from dualvinberg.cone import (
    IDENTITY_POINT,
    diag_pair,
    embed,
    embed_diag_pair,
    is_triangular_pattern,
    open_cone_reason,
    unembed,
)
from dualvinberg.errors import DomainError, PatternError

from conftest import ZeroRandomness

TOL = 1e-10

coords = hnp.arrays(
    np.float64, 5, elements=st.floats(-1e6, 1e6, allow_nan=False, width=64)
)


@settings(max_examples=200, deadline=None)
@given(coords)
def test_embed_unembed_round_trip(x):
    m = embed(x)
    assert np.array_equal(m, m.T)
    assert m[0, 1] == 0.0
    assert np.array_equal(unembed(m), x)


def test_unembed_rejects_off_pattern():
    m = np.eye(3)
    m[0, 1] = 1e-6
    with pytest.raises(PatternError):
        unembed(m)
    m = np.zeros((3, 3))
    m[0, 2] = 1.0  # mirror entry missing
    with pytest.raises(PatternError):
        unembed(m)


def test_diag_pair_embedding():
    u = np.array([2.0, -3.0])
    assert np.array_equal(embed_diag_pair(u), np.diag([2.0, -3.0, 0.0]))
    assert np.array_equal(diag_pair(embed_diag_pair(u)), u)


def test_minors_frozen_example():
    assert np.allclose(dv.minors([2, 2, 2.01, -1, 0]), (2.0, 4.0, 6.04), rtol=1e-15)


def test_minors_match_leading_determinants():
    rng = np.random.default_rng(1)
    for _ in range(300):
        x = 2.0 * rng.standard_normal(5)
        m = embed(x)
        d1, d2, d3 = dv.minors(x)
        assert np.isclose(d1, m[0, 0], rtol=1e-12, atol=1e-12)
        assert np.isclose(d2, np.linalg.det(m[:2, :2]), rtol=1e-12, atol=1e-12)
        assert np.isclose(d3, np.linalg.det(m), rtol=1e-10, atol=1e-12)


@pytest.mark.parametrize(
    "x,expected",
    [
        ([1, 1, 1, 0, 0], True),
        ([2, 2, 2.01, -1, 0], True),
        ([1, 1, 0.9, 0.5, 0.5], True),
        ([1, 1, 1, 1, 0], False),  # third minor exactly zero
        ([-1, -1, 1, 0, 0], False),  # second minor positive, first not
        ([0, 1, 1, 0, 0], False),
    ],
)
def test_open_cone_frozen_cases(x, expected):
    assert dv.in_open_cone(x) is expected


def test_open_cone_reasons_name_the_failing_minor():
    assert open_cone_reason([-1, 1, 1, 0, 0]) == "minor 1 not positive"
    assert open_cone_reason([1, -1, 1, 0, 0]) == "minor 2 not positive"
    assert open_cone_reason([1, 1, 1, 1, 0]) == "minor 3 not positive"
    assert open_cone_reason([1, 1, 1, 0, 0]) is None


def test_open_cone_matches_positive_definiteness():
    rng = np.random.default_rng(2)
    points = [rng.standard_normal(5) for _ in range(400)]
    points += [dv.sample_cone(rng) for _ in range(400)]
    for x in points:
        pd = bool(np.linalg.eigvalsh(embed(x)).min() > 0)
        assert dv.in_open_cone(x) == pd


def test_closed_cone_frozen_cases():
    # minors nonnegative but an eigenvalue is (1 - sqrt(5))/2 < 0
    assert not dv.in_closed_cone([1, 0, 1, 0, 1])
    assert dv.in_closed_cone([1, 1, 1, 1, 0])
    assert dv.in_closed_cone(np.zeros(5))
    assert dv.in_closed_cone(IDENTITY_POINT)


def test_open_cone_implies_closed():
    rng = np.random.default_rng(3)
    for _ in range(200):
        x = dv.sample_cone(rng)
        assert dv.in_open_cone(x) and dv.in_closed_cone(x)


def test_relative_invariant_frozen_value():
    val = dv.relative_invariant([1, 1, 2, 0, 0], (-1.5, -1.5, -2.0))
    assert np.isclose(val, 0.25, rtol=1e-14)


def test_relative_invariant_minor_product_form():
    rng = np.random.default_rng(4)
    for _ in range(100):
        x = dv.sample_cone(rng, 0.8)
        s1, s2, s3 = rng.standard_normal(3)
        d1, d2, d3 = dv.minors(x)
        direct = d1 ** (s1 - s2) * d2 ** (s2 - s3) * d3 ** s3
        assert np.isclose(dv.relative_invariant(x, (s1, s2, s3)), direct, rtol=1e-12)


def test_relative_invariant_scaling_law():
    rng = np.random.default_rng(5)
    for _ in range(300):
        x = dv.sample_cone(rng, 0.75)
        A = dv.sample_positive_triangular(rng, 0.75)
        s = rng.standard_normal(3)
        a1, a2, a3 = A[0, 0], A[1, 1], A[2, 2]
        factor = a1 ** (2 * s[0]) * a2 ** (2 * s[1]) * a3 ** (2 * s[2])
        lhs = dv.relative_invariant(dv.congruence(A, x), tuple(s))
        rhs = factor * dv.relative_invariant(x, tuple(s))
        assert np.isclose(lhs, rhs, rtol=TOL)


def test_relative_invariant_requires_interior_point():
    with pytest.raises(DomainError):
        dv.relative_invariant([-1, 1, 1, 0, 0], (1, 1, 1))


def test_char_function_frozen_values():
    assert dv.char_function(IDENTITY_POINT) == 1.0
    assert np.isclose(dv.char_function([4, 1, 1, 0, 0]), 0.125, rtol=1e-14)
    with pytest.raises(DomainError):
        dv.char_function([1, 1, 1, 1, 0])


def test_char_function_transforms_by_inverse_determinant():
    rng = np.random.default_rng(6)
    for _ in range(300):
        x = dv.sample_cone(rng, 0.75)
        A = dv.sample_triangular(rng, 0.75)
        lhs = dv.char_function(dv.congruence(A, x))
        rhs = dv.char_function(x) / abs(dv.congruence_det(A))
        assert np.isclose(lhs, rhs, rtol=TOL)


def test_log_char_matches_log_of_char():
    rng = np.random.default_rng(7)
    for _ in range(100):
        x = dv.sample_cone(rng, 0.5)
        assert np.isclose(dv.log_char_function(x), np.log(dv.char_function(x)), atol=1e-12)


def test_congruence_diagonal_formula():
    rng = np.random.default_rng(8)
    for _ in range(100):
        a = np.exp(rng.standard_normal(3))
        x = rng.standard_normal(5)
        got = dv.congruence(np.diag(a), x)
        want = [
            a[0] ** 2 * x[0],
            a[1] ** 2 * x[1],
            a[2] ** 2 * x[2],
            a[0] * a[2] * x[3],
            a[1] * a[2] * x[4],
        ]
        assert np.allclose(got, want, rtol=1e-14)


def test_congruence_unipotent_frozen_example():
    A = dv.triangular([1, 1, 1, 1, 0])
    assert np.array_equal(dv.congruence(A, IDENTITY_POINT), [1, 1, 2, 1, 0])


def test_congruence_rejects_off_pattern_matrix():
    A = np.eye(3)
    A[0, 1] = 0.5
    with pytest.raises(DomainError):
        dv.congruence(A, IDENTITY_POINT)


def test_congruence_matrix_represents_the_action():
    rng = np.random.default_rng(9)
    for _ in range(100):
        A = dv.sample_triangular(rng)
        x = rng.standard_normal(5)
        assert np.allclose(dv.congruence_matrix(A) @ x, dv.congruence(A, x), rtol=1e-12, atol=1e-12)


def test_congruence_matrix_rejects_pattern_breaking_action():
    A = np.eye(3)
    A[0, 1] = 1.0  # congruence by this leaves the patterned subspace
    with pytest.raises(PatternError):
        dv.congruence_matrix(A)


def test_congruence_det_matches_matrix_determinant():
    rng = np.random.default_rng(10)
    for _ in range(1000):
        A = dv.sample_triangular(rng)
        got = dv.congruence_det(A)
        want = np.linalg.det(dv.congruence_matrix(A))
        assert np.isclose(got, want, rtol=TOL)


def test_congruence_preserves_cone():
    rng = np.random.default_rng(11)
    for _ in range(200):
        A = dv.sample_triangular(rng)
        x = dv.sample_cone(rng)
        assert dv.in_open_cone(dv.congruence(A, x))


def test_triangular_params_round_trip():
    params = np.array([1.5, -2.0, 0.5, 3.0, -1.0])
    A = dv.triangular(params)
    assert np.array_equal(dv.triangular_params(A), params)
    assert is_triangular_pattern(A)
    assert dv.in_triangular_group(A)
    assert not dv.in_positive_triangular(A)
    assert dv.in_positive_triangular(dv.triangular([1, 2, 3, -4, 5]))
    assert not dv.in_triangular_group(dv.triangular([0, 1, 1, 0, 0]))
    assert not dv.in_triangular_group(dv.triangular([1, 1, -1, 0, 0]))


def test_sample_cone_deterministic_and_interior():
    a = dv.sample_cone(np.random.default_rng(123))
    b = dv.sample_cone(np.random.default_rng(123))
    assert np.array_equal(a, b)
    rng = np.random.default_rng(12)
    assert all(dv.in_open_cone(dv.sample_cone(rng)) for _ in range(200))


def test_sample_cone_degenerate_randomness_gives_identity():
    assert np.array_equal(dv.sample_cone(ZeroRandomness()), IDENTITY_POINT)


def test_isotropy_group_structure():
    group = dv.isotropy_group()
    assert len(group) == 8
    keys = {tuple(np.rint(m).astype(int).ravel()) for m in group}
    assert len(keys) == 8
    for a in group:
        assert np.array_equal(a @ IDENTITY_POINT, IDENTITY_POINT)
        assert np.array_equal(a @ a.T, np.eye(5))  # signed coordinate permutations
        for b in group:
            assert tuple(np.rint(a @ b).astype(int).ravel()) in keys
    orders = []
    for a in group:
        p, k = np.eye(5), 0
        while True:
            p, k = p @ a, k + 1
            if np.array_equal(p, np.eye(5)):
                break
        orders.append(k)
    assert max(orders) == 4


def test_isotropy_group_preserves_cone():
    group = dv.isotropy_group()
    rng = np.random.default_rng(13)
    for _ in range(1000):
        x = dv.sample_cone(rng)
        for a in group:
            assert dv.in_open_cone(a @ x)
