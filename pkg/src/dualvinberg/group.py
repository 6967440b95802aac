"""Tube-domain automorphisms realized inside the real symplectic group.

A real 6x6 matrix g = [[A, B], [C, D]] acts on complex symmetric 3x3
arguments by the fractional linear map

    g.z = (A z + B)(C z + D)^{-1}.

The symplectic condition makes the result symmetric; the subgroup
preserving the patterned tube domain (imaginary part in the open cone) is
cut out by block patterns on A, B, C, D.  On the dense chart where D is
invertible every element factors uniquely as

    translation(v) @ congruence_embed(L) @ [[I, 0], [U, I]]

with v in the patterned subspace, L triangular and U = diag(u1, u2, 0).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cone import (
    diag_pair,
    embed,
    embed_diag_pair,
    in_open_cone,
    unembed,
)
from .errors import DomainError, SingularityError
from .linalg import adjugate3, det3, inv3, maxabs

SYMPLECTIC_FORM = np.block(
    [[np.zeros((3, 3)), -np.eye(3)], [np.eye(3), np.zeros((3, 3))]]
)

# i times the identity, the natural base point of the tube domain.
BASE_POINT = 1j * np.array([1.0, 1.0, 1.0, 0.0, 0.0])

SYMPLECTIC_TOL = 1e-10
PATTERN_TOL = 1e-12
ACTION_PATTERN_TOL = 1e-9


def blocks(g) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    g = np.asarray(g, dtype=float)
    if g.shape != (6, 6):
        raise ValueError(f"expected a 6x6 matrix, got shape {g.shape}")
    return g[:3, :3], g[:3, 3:], g[3:, :3], g[3:, 3:]


def symplectic_defect(g) -> float:
    """Largest violation of the block relations A^T C, D^T B symmetric and
    D^T A - B^T C = I."""
    A, B, C, D = blocks(g)
    r1 = A.T @ C
    r2 = D.T @ B
    r3 = D.T @ A - B.T @ C - np.eye(3)
    return max(maxabs(r1 - r1.T), maxabs(r2 - r2.T), maxabs(r3))


def symplectic_defect_dual(g) -> float:
    """Same group, written on the transposed side: B A^T, C D^T symmetric
    and A D^T - B C^T = I.  Must agree with symplectic_defect up to scale."""
    A, B, C, D = blocks(g)
    r1 = B @ A.T
    r2 = C @ D.T
    r3 = A @ D.T - B @ C.T - np.eye(3)
    return max(maxabs(r1 - r1.T), maxabs(r2 - r2.T), maxabs(r3))


def is_symplectic(g, tol: float = SYMPLECTIC_TOL) -> bool:
    """Block test at tolerance tol * (1 + maxabs(g)**2); equivalent to
    g J g^T = J for the standard form J."""
    return symplectic_defect(g) <= tol * (1.0 + maxabs(g) ** 2)


def _pattern_residue(M, slots) -> float:
    return max(abs(M[i, j]) for i, j in slots)


_CORNER_SLOTS = ((0, 1), (0, 2), (1, 0), (1, 2))  # zeros of triangular-with-corner
_FLAT_SLOTS = ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2))


def tube_group_reason(g, tol: float = PATTERN_TOL) -> str | None:
    """None when g lies in the tube automorphism group; otherwise the first
    failing block constraint."""
    g = np.asarray(g, dtype=float)
    if g.shape != (6, 6):
        raise ValueError(f"expected a 6x6 matrix, got shape {g.shape}")
    if not is_symplectic(g):
        return "not symplectic"
    A, B, C, D = blocks(g)
    atol = tol * (1.0 + maxabs(g))
    if _pattern_residue(A, _CORNER_SLOTS) > atol:
        return "A off pattern"
    if not A[2, 2] > 0:
        return "A[3,3] not positive"
    if _pattern_residue(D.T, _CORNER_SLOTS) > atol:
        return "D off pattern"
    if not D[2, 2] > 0:
        return "D[3,3] not positive"
    if max(abs(B[0, 1]), abs(B[1, 0])) > atol:
        return "B off pattern"
    if _pattern_residue(C, _FLAT_SLOTS) > atol:
        return "C off pattern"
    return None


def in_tube_group(g, tol: float = PATTERN_TOL) -> bool:
    return tube_group_reason(g, tol) is None


def tube_group_alt_reason(g, tol: float = PATTERN_TOL) -> str | None:
    """Same group through product constraints: A and D^T patterned with
    positive corner, D^T B in the patterned subspace, C D^T in the flat
    slice.  Must agree with tube_group_reason on every matrix."""
    g = np.asarray(g, dtype=float)
    if g.shape != (6, 6):
        raise ValueError(f"expected a 6x6 matrix, got shape {g.shape}")
    if not is_symplectic(g):
        return "not symplectic"
    A, B, C, D = blocks(g)
    atol = tol * (1.0 + maxabs(g))
    atol2 = tol * (1.0 + maxabs(g) ** 2)
    if _pattern_residue(A, _CORNER_SLOTS) > atol:
        return "A off pattern"
    if not A[2, 2] > 0:
        return "A[3,3] not positive"
    if _pattern_residue(D.T, _CORNER_SLOTS) > atol:
        return "D off pattern"
    if not D[2, 2] > 0:
        return "D[3,3] not positive"
    S = D.T @ B
    if max(maxabs(S - S.T), abs(S[0, 1]), abs(S[1, 0])) > atol2:
        return "D^T B leaves the patterned subspace"
    P = C @ D.T
    if _pattern_residue(P, _FLAT_SLOTS) > atol2:
        return "C D^T not in the flat slice"
    return None


def in_tube_group_alt(g, tol: float = PATTERN_TOL) -> bool:
    return tube_group_alt_reason(g, tol) is None


def translation(v) -> np.ndarray:
    """z -> z + v for v in the patterned subspace."""
    g = np.eye(6)
    g[:3, 3:] = embed(np.asarray(v, dtype=float))
    return g


def dual_translation(u) -> np.ndarray:
    """The inversion conjugate of a flat translation: [[I, 0], [-U, I]]
    with U = diag(u1, u2, 0)."""
    g = np.eye(6)
    g[3:, :3] = -embed_diag_pair(np.asarray(u, dtype=float))
    return g


def congruence_embed(A) -> np.ndarray:
    """blockdiag(A, A^{-T}), the linear map z -> A z A^T inside the
    symplectic group.  A must be invertible; it need not be triangular,
    but only triangular A land in the tube group."""
    A = np.asarray(A, dtype=float)
    g = np.zeros((6, 6))
    g[:3, :3] = A
    g[3:, 3:] = inv3(A).T
    return g


def inversion() -> np.ndarray:
    """The order-four rational symmetry fixing the base point i*I.

    It inverts the first two coordinates, z1 -> -1/z1, z2 -> -1/z2, and
    conjugates flat translations into dual ones.
    """
    g = np.zeros((6, 6))
    g[:3, :3] = np.diag([0.0, 0.0, 1.0])
    g[:3, 3:] = np.diag([-1.0, -1.0, 0.0])
    g[3:, :3] = np.diag([1.0, 1.0, 0.0])
    g[3:, 3:] = np.diag([0.0, 0.0, 1.0])
    return g


def isotropy_rotation(theta: float, phi: float) -> np.ndarray:
    """Stabilizer of the base point: plane rotations by theta and phi in
    the first two coordinate pairs (angles taken mod 2 pi)."""
    c = np.diag([np.cos(theta), np.cos(phi), 1.0])
    s = np.diag([np.sin(theta), np.sin(phi), 0.0])
    g = np.zeros((6, 6))
    g[:3, :3] = c
    g[:3, 3:] = -s
    g[3:, :3] = s
    g[3:, 3:] = c
    return g


def _mobius(g, Z):
    """(A Z + B)(C Z + D)^{-1} for an embedded argument Z."""
    A, B, C, D = blocks(g)
    M = C @ Z + D
    d = det3(M)
    if abs(d) <= 1e-12 * (1.0 + maxabs(M) ** 3):
        raise SingularityError("C z + D is singular")
    return (A @ Z + B) @ (adjugate3(M) / d)


def act(g, z) -> np.ndarray:
    """Fractional linear action on a tube point (imaginary part interior).

    The result is again a tube point; its pattern zeros are exact for
    exactly patterned g.
    """
    z = np.asarray(z, dtype=complex)
    if not in_open_cone(z.imag):
        raise DomainError("imaginary part outside the open cone")
    W = _mobius(g, embed(z))
    return unembed(W, atol=ACTION_PATTERN_TOL * (1.0 + maxabs(W)))


def act_real(g, x) -> np.ndarray:
    """Real form of the action, defined wherever C embed(x) + D is
    invertible."""
    W = _mobius(g, embed(np.asarray(x, dtype=float)))
    return unembed(W, atol=ACTION_PATTERN_TOL * (1.0 + maxabs(W)))


def has_triple_decomposition(g) -> bool:
    """Membership in the dense chart: |det D| above the singularity
    threshold."""
    D = blocks(g)[3]
    return bool(abs(det3(D)) > 1e-12 * (1.0 + maxabs(D) ** 3))


@dataclass(frozen=True)
class TripleFactors:
    """Factors of g = translation(v) @ congruence_embed(L) @ [[I,0],[U,I]]."""

    v: np.ndarray
    L: np.ndarray
    u: np.ndarray


def triple_decompose(g) -> TripleFactors:
    """Unique chart factors: v = B D^{-1}, L = D^{-T} (equal to
    A - B D^{-1} C), u = diagonal pair of D^{-1} C."""
    g = np.asarray(g, dtype=float)
    A, B, C, D = blocks(g)
    if not has_triple_decomposition(g):
        raise SingularityError("det D = 0")
    Dinv = inv3(D)
    v = unembed(B @ Dinv, atol=ACTION_PATTERN_TOL * (1.0 + maxabs(g) ** 2))
    return TripleFactors(v=v, L=Dinv.T.copy(), u=diag_pair(Dinv @ C))


def triple_compose(f: TripleFactors) -> np.ndarray:
    """Multiply the three chart factors back together."""
    lower = np.eye(6)
    lower[3:, :3] = embed_diag_pair(f.u)
    return translation(f.v) @ congruence_embed(f.L) @ lower


def inverse(g) -> np.ndarray:
    """Symplectic inverse [[D^T, -B^T], [-C^T, A^T]], exact on the blocks."""
    A, B, C, D = blocks(g)
    out = np.zeros((6, 6))
    out[:3, :3] = D.T
    out[:3, 3:] = -B.T
    out[3:, :3] = -C.T
    out[3:, 3:] = A.T
    return out
