"""Oriented 2D subspaces of Euclidean 4-space.

A plane is stored as an ordered orthonormal basis pair (u, w).  Identity of
planes is decided through their projector u*u^T + w*w^T, which is basis-free;
orientation (the order/sign of the basis) carries the sense of in-plane
rotation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateAxis
from .quat import EPS_AXIS, EPS_UNIT, Quaternion, dot4, norm_sq

EPS_PLANE = 1e-8


@dataclass(frozen=True)
class Plane:
    """Plane spanned by the orthonormal pair (u, w)."""

    u: Quaternion
    w: Quaternion

    def __post_init__(self):
        if (
            abs(norm_sq(self.u) - 1.0) > EPS_UNIT
            or abs(norm_sq(self.w) - 1.0) > EPS_UNIT
            or abs(dot4(self.u, self.w)) > EPS_UNIT
        ):
            raise ValueError("plane basis is not orthonormal")

    def projector(self) -> np.ndarray:
        """Symmetric rank-2 idempotent u*u^T + w*w^T."""
        ua = self.u.as_array()
        wa = self.w.as_array()
        return np.outer(ua, ua) + np.outer(wa, wa)

    def contains(self, x: Quaternion, eps: float = EPS_PLANE) -> bool:
        """True when x lies in the plane up to a projection residual of eps."""
        xa = x.as_array()
        return bool(np.abs(self.projector() @ xa - xa).max() <= eps)

    def flipped(self) -> "Plane":
        """Same plane with reversed orientation."""
        return Plane(self.u, -self.w)


def plane_from_span(v1: Quaternion, v2: Quaternion, eps: float = EPS_AXIS) -> Plane:
    """Orthonormalize the spanning pair (v1 first) via Gram-Schmidt."""
    n1 = np.sqrt(norm_sq(v1))
    if n1 <= eps:
        raise DegenerateAxis("first spanning vector is (near-)zero")
    u = v1 / n1
    w = v2 - u * dot4(v2, u)
    n2 = np.sqrt(norm_sq(w))
    if n2 <= eps:
        raise DegenerateAxis("spanning vectors are (near-)collinear")
    return Plane(u, w / n2)


def projector_distance(p1: Plane, p2: Plane) -> float:
    """Max-abs entry difference of the two projectors."""
    return float(np.abs(p1.projector() - p2.projector()).max())


def same_plane(p1: Plane, p2: Plane, eps: float = EPS_PLANE) -> bool:
    return projector_distance(p1, p2) <= eps


def planes_orthogonal(p1: Plane, p2: Plane, eps: float = EPS_PLANE) -> bool:
    """True when every basis vector of p1 is orthogonal to every one of p2."""
    dots = (
        dot4(p1.u, p2.u),
        dot4(p1.u, p2.w),
        dot4(p1.w, p2.u),
        dot4(p1.w, p2.w),
    )
    return max(abs(d) for d in dots) <= eps
