"""The dual Vinberg cone and its linear automorphisms.

Points are coordinate vectors x = (x1, ..., x5) identified with patterned
symmetric 3x3 matrices via :func:`embed`:

    [x1  0  x4]
    [ 0 x2  x5]
    [x4 x5  x3]

The open cone is the set of positive definite matrices of this shape, cut
out by the nested minors x1, x1*x2 and x1*x2*x3 - x1*x5**2 - x2*x4**2.
Lower triangular matrices carrying the matching zero in slot (1,0) act
transitively on the cone by congruence A.x = A embed(x) A^T, so the cone
is homogeneous; it is the standard example of a homogeneous cone that is
not self-dual.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, PatternError
from .linalg import maxabs

IDENTITY_POINT = np.array([1.0, 1.0, 1.0, 0.0, 0.0])

PATTERN_TOL = 1e-12

# Zero slots of the triangular automorphism pattern [[a1,0,0],[0,a2,0],[a4,a5,a3]].
_TRIANGULAR_ZEROS = ((0, 1), (0, 2), (1, 0), (1, 2))


def embed(x) -> np.ndarray:
    """Patterned symmetric matrix of a coordinate vector (complex allowed)."""
    x = np.asarray(x)
    m = np.zeros((3, 3), dtype=complex if np.iscomplexobj(x) else float)
    m[0, 0] = x[0]
    m[1, 1] = x[1]
    m[2, 2] = x[2]
    m[0, 2] = m[2, 0] = x[3]
    m[1, 2] = m[2, 1] = x[4]
    return m


def unembed(m, atol: float | None = None) -> np.ndarray:
    """Coordinates of a patterned symmetric matrix.

    The forbidden slot is (0,1)/(1,0) and the mirror pairs must match;
    off-pattern mass beyond ``atol`` (default 1e-12, scale-relative)
    raises PatternError.  Mirror pairs are averaged.
    """
    m = np.asarray(m)
    if atol is None:
        atol = PATTERN_TOL * (1.0 + maxabs(m))
    off = max(
        abs(m[0, 1]),
        abs(m[1, 0]),
        abs(m[0, 2] - m[2, 0]),
        abs(m[1, 2] - m[2, 1]),
    )
    if off > atol:
        raise PatternError(f"matrix leaves the patterned subspace by {off:.3e}")
    return np.array(
        [m[0, 0], m[1, 1], m[2, 2], (m[0, 2] + m[2, 0]) / 2, (m[1, 2] + m[2, 1]) / 2]
    )


def embed_diag_pair(u) -> np.ndarray:
    """diag(u1, u2, 0), the flat slice of the pattern."""
    u = np.asarray(u)
    m = np.zeros((3, 3), dtype=complex if np.iscomplexobj(u) else float)
    m[0, 0] = u[0]
    m[1, 1] = u[1]
    return m


def diag_pair(m) -> np.ndarray:
    """First two diagonal entries of a matrix in the flat slice."""
    m = np.asarray(m)
    return np.array([m[0, 0], m[1, 1]])


def minors(x) -> tuple[float, float, float]:
    """The three nested principal minors of embed(x)."""
    x = np.asarray(x, dtype=float)
    d1 = x[0]
    d2 = x[0] * x[1]
    d3 = x[0] * x[1] * x[2] - x[0] * x[4] ** 2 - x[1] * x[3] ** 2
    return float(d1), float(d2), float(d3)


def open_cone_reason(x) -> str | None:
    """None when x is interior; otherwise which minor fails (strictly)."""
    d1, d2, d3 = minors(x)
    if not d1 > 0:
        return "minor 1 not positive"
    if not d2 > 0:
        return "minor 2 not positive"
    if not d3 > 0:
        return "minor 3 not positive"
    return None


def in_open_cone(x) -> bool:
    """Strict positivity of all three minors, with no tolerance."""
    return open_cone_reason(x) is None


def closed_cone_reason(x, tol: float = 1e-9) -> str | None:
    m = embed(np.asarray(x, dtype=float))
    lo = float(np.linalg.eigvalsh(m).min())
    if lo < -tol * (1.0 + maxabs(m)):
        return f"eigenvalue {lo:.3e} below -tol"
    return None


def in_closed_cone(x, tol: float = 1e-9) -> bool:
    """Positive semidefiniteness of embed(x), within a scale-relative tol."""
    return closed_cone_reason(x, tol) is None


def relative_invariant(x, powers) -> float:
    """Power function x1**(s1-s3) * x2**(s2-s3) * d3**s3 on the open cone.

    Writing d1, d2, d3 for the minors, it equals d1**(s1-s2) * d2**(s2-s3)
    * d3**s3, and it scales by a1**(2 s1) * a2**(2 s2) * a3**(2 s3) under
    the triangular congruence action.
    """
    x = np.asarray(x, dtype=float)
    if (reason := open_cone_reason(x)) is not None:
        raise DomainError(f"point outside the open cone: {reason}")
    s1, s2, s3 = powers
    d3 = minors(x)[2]
    return float(x[0] ** (s1 - s3) * x[1] ** (s2 - s3) * d3 ** s3)


def char_function(x) -> float:
    """Characteristic function x1**(1/2) * x2**(1/2) * d3**(-2).

    Normalized to 1 at (1,1,1,0,0).  Under an automorphism g of the cone it
    transforms by 1/|det g|, which makes its log-Hessian an invariant metric.
    """
    x = np.asarray(x, dtype=float)
    if (reason := open_cone_reason(x)) is not None:
        raise DomainError(f"point outside the open cone: {reason}")
    d3 = minors(x)[2]
    return float(np.sqrt(x[0] * x[1]) * d3 ** -2.0)


def log_char_function(x) -> float:
    """log of char_function, kept separate for finite differencing."""
    x = np.asarray(x, dtype=float)
    if (reason := open_cone_reason(x)) is not None:
        raise DomainError(f"point outside the open cone: {reason}")
    d3 = minors(x)[2]
    return float(0.5 * (np.log(x[0]) + np.log(x[1])) - 2.0 * np.log(d3))


def triangular(params) -> np.ndarray:
    """Build [[a1,0,0],[0,a2,0],[a4,a5,a3]] from (a1, a2, a3, a4, a5)."""
    a = np.asarray(params, dtype=float)
    m = np.zeros((3, 3))
    m[0, 0] = a[0]
    m[1, 1] = a[1]
    m[2, 2] = a[2]
    m[2, 0] = a[3]
    m[2, 1] = a[4]
    return m


def triangular_params(A) -> np.ndarray:
    """Parameters (a1, a2, a3, a4, a5) of a triangular-patterned matrix."""
    A = np.asarray(A, dtype=float)
    return np.array([A[0, 0], A[1, 1], A[2, 2], A[2, 0], A[2, 1]])


def is_triangular_pattern(A, atol: float | None = None) -> bool:
    A = np.asarray(A)
    if A.shape != (3, 3):
        return False
    if atol is None:
        atol = PATTERN_TOL * (1.0 + maxabs(A))
    return all(abs(A[i, j]) <= atol for i, j in _TRIANGULAR_ZEROS)


def in_triangular_group(A) -> bool:
    """Pattern membership plus invertibility constraints a1*a2 != 0, a3 > 0."""
    A = np.asarray(A, dtype=float)
    return bool(
        is_triangular_pattern(A) and A[0, 0] * A[1, 1] != 0.0 and A[2, 2] > 0.0
    )


def in_positive_triangular(A) -> bool:
    """The transitive identity component: all three diagonal entries positive."""
    A = np.asarray(A, dtype=float)
    return bool(
        is_triangular_pattern(A) and A[0, 0] > 0 and A[1, 1] > 0 and A[2, 2] > 0
    )


def congruence(A, x) -> np.ndarray:
    """Coordinates of A embed(x) A^T for triangular-patterned A.

    The pattern is closed under this product, with the zero slots exact
    even in floating point.
    """
    A = np.asarray(A, dtype=float)
    if not is_triangular_pattern(A):
        raise DomainError("matrix is not in the triangular pattern")
    return unembed(A @ embed(x) @ A.T)


def congruence_matrix(A) -> np.ndarray:
    """5x5 matrix of x -> A embed(x) A^T in coordinates.

    Defined for any 3x3 A whose congruence preserves the patterned
    subspace (PatternError otherwise); this admits the coordinate swap
    generator of the isotropy group, which is not triangular.
    """
    A = np.asarray(A, dtype=float)
    cols = [unembed(A @ embed(e) @ A.T) for e in np.eye(5)]
    return np.array(cols).T


def congruence_det(A) -> float:
    """Determinant a1**3 * a2**3 * a3**4 of the congruence action on
    coordinates, valid for any triangular-group element."""
    A = np.asarray(A, dtype=float)
    if not in_triangular_group(A):
        raise DomainError("matrix is not in the triangular group")
    return float(A[0, 0] ** 3 * A[1, 1] ** 3 * A[2, 2] ** 4)


def sample_positive_triangular(rng, sigma: float = 1.0) -> np.ndarray:
    """Random element of the identity component: log-normal diagonal,
    normal lower entries.  Zeroed randomness gives the identity."""
    diag = np.exp(sigma * rng.standard_normal(3))
    low = sigma * rng.standard_normal(2)
    return triangular([diag[0], diag[1], diag[2], low[0], low[1]])


def sample_triangular(rng, sigma: float = 1.0) -> np.ndarray:
    """Random element of the full triangular group: the first two diagonal
    entries carry random signs, a3 stays positive."""
    A = sample_positive_triangular(rng, sigma)
    signs = np.where(rng.random(2) < 0.5, -1.0, 1.0)
    A[0, 0] *= signs[0]
    A[1, 1] *= signs[1]
    return A


def sample_cone(rng, sigma: float = 1.0) -> np.ndarray:
    """Random interior point: the identity pushed by a random triangular
    automorphism.  Zeroed randomness gives (1,1,1,0,0)."""
    return congruence(sample_positive_triangular(rng, sigma), IDENTITY_POINT)


def isotropy_group() -> list[np.ndarray]:
    """All eight 5x5 matrices stabilizing (1,1,1,0,0).

    Generated by the sign flips diag(-1,1,1), diag(1,-1,1) and the swap of
    the first two coordinates; returned closed under composition, in a
    deterministic order.  The swap composed with a flip has order four.
    """
    swap = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    gens = [
        congruence_matrix(np.diag([-1.0, 1.0, 1.0])),
        congruence_matrix(np.diag([1.0, -1.0, 1.0])),
        congruence_matrix(swap),
    ]

    def key(m):
        return tuple(int(round(e)) for e in m.ravel())

    elems = {key(np.eye(5)): np.eye(5)}
    frontier = [np.eye(5)]
    while frontier:
        nxt = []
        for m in frontier:
            for gen in gens:
                p = gen @ m
                k = key(p)
                if k not in elems:
                    elems[k] = p
                    nxt.append(p)
        frontier = nxt
    return [elems[k] for k in sorted(elems)]
