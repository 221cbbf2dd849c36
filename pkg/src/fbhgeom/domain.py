"""Domain parameters, point geometry, the Kahler potential, and automorphisms.

The domain is the set of pairs (z, w) in C^n x C^m with ||w||^2 < exp(-mu ||z||^2).
Every invariant quantity of the metric depends on w only through the reduced
coordinate w_tilde = exp(mu ||z||^2 / 2) w, which maps the fiber over z onto
the unit ball of C^m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = [
    "DomainParams",
    "DomainPoint",
    "contains",
    "reduced_w",
    "reduced_norm_sq",
    "potential",
    "apply_unitary_z",
    "apply_unitary_w",
    "apply_translation",
    "translation_jacobian_det",
    "sample_members",
    "random_unitary",
]

# Points whose reduced-coordinate norm is within this distance of the unit
# sphere are rejected at construction: every series downstream diverges on
# the boundary.
_BOUNDARY_SLACK = 1e-14

# Operator-norm tolerance for accepting a matrix as unitary.
_UNITARY_TOL = 1e-12

_POTENTIAL_CONSISTENCY_TOL = 1e-12


@dataclass(frozen=True)
class DomainParams:
    """The tuple (n, m, mu, nu) fixing the domain and the metric weight.

    n, m are the complex dimensions of the z- and w-blocks, mu > 0 scales the
    Gaussian decay of the fiber radius, and nu > -1 is required for the
    potential to be strictly plurisubharmonic.
    """

    n: int
    m: int
    mu: float
    nu: float

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not (isinstance(self.m, int) and self.m >= 1):
            raise ValueError(f"m must be a positive integer, got {self.m}")
        if not self.mu > 0:
            raise ValueError(f"mu must be positive, got {self.mu}")
        if not self.nu > -1:
            raise ValueError(f"nu must be > -1, got {self.nu}")

    @property
    def dim(self) -> int:
        return self.n + self.m


def _as_complex_vector(v, length: int, name: str) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(v, dtype=complex))
    if arr.shape != (length,):
        raise ValueError(f"{name} must be a vector of length {length}, got shape {arr.shape}")
    return arr


@dataclass(frozen=True, eq=False)
class DomainPoint:
    """A point (z, w) of the domain, validated at construction.

    Membership is strict: points within 1e-14 of the boundary (measured in
    the reduced coordinate) are rejected.
    """

    params: DomainParams
    z: np.ndarray = field(repr=False)
    w: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        z = _as_complex_vector(self.z, self.params.n, "z")
        w = _as_complex_vector(self.w, self.params.m, "w")
        z.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "w", w)
        tau = float(np.exp(self.params.mu * _norm_sq(z)) * _norm_sq(w))
        if not tau < 1.0 - _BOUNDARY_SLACK:
            raise ValueError(
                f"(z, w) is not an interior point: ||w_tilde||^2 = {tau} (must be < 1)"
            )


def _norm_sq(v: np.ndarray) -> float:
    return float(np.real(np.vdot(v, v)))


def _check_same_domain(params: DomainParams, point: DomainPoint) -> None:
    if point.params != params:
        raise ValueError(f"point belongs to {point.params}, not {params}")


def contains(params: DomainParams, z, w) -> bool:
    """Strict membership test ||w||^2 < exp(-mu ||z||^2)."""
    zv = _as_complex_vector(z, params.n, "z")
    wv = _as_complex_vector(w, params.m, "w")
    return _norm_sq(wv) < math.exp(-params.mu * _norm_sq(zv))


def reduced_w(params: DomainParams, point: DomainPoint) -> np.ndarray:
    """Reduced fiber coordinate w_tilde = exp(mu ||z||^2 / 2) w; its norm is < 1."""
    _check_same_domain(params, point)
    wt = np.exp(0.5 * params.mu * _norm_sq(point.z)) * point.w
    wt.setflags(write=False)
    return wt


def reduced_norm_sq(params: DomainParams, point: DomainPoint) -> float:
    """||w_tilde||^2, the single scalar all invariant quantities depend on."""
    _check_same_domain(params, point)
    return float(np.exp(params.mu * _norm_sq(point.z)) * _norm_sq(point.w))


def potential(params: DomainParams, point: DomainPoint) -> float:
    """Kahler potential nu mu ||z||^2 - ln(exp(-mu ||z||^2) - ||w||^2).

    Evaluated in the reduced form mu (nu+1) ||z||^2 - ln(1 - ||w_tilde||^2),
    which stays finite for large ||z||; the direct form is cross-checked
    whenever exp(-mu ||z||^2) is representable.
    """
    _check_same_domain(params, point)
    zsq = _norm_sq(point.z)
    tau = reduced_norm_sq(params, point)
    value = params.mu * (params.nu + 1) * zsq - math.log1p(-tau)

    decay = math.exp(-params.mu * zsq)
    if decay > 0.0:
        direct = params.nu * params.mu * zsq - math.log(decay - _norm_sq(point.w))
        if abs(direct - value) > _POTENTIAL_CONSISTENCY_TOL * max(1.0, abs(value)):
            raise ArithmeticError(
                f"potential forms disagree: {direct} vs {value} at ||z||^2={zsq}, tau={tau}"
            )
    return value


def _check_unitary(U, dim: int, name: str) -> np.ndarray:
    mat = np.asarray(U, dtype=complex)
    if mat.shape != (dim, dim):
        raise ValueError(f"{name} must be {dim}x{dim}, got shape {mat.shape}")
    defect = np.linalg.norm(mat.conj().T @ mat - np.eye(dim), 2)
    if defect > _UNITARY_TOL:
        raise ValueError(f"{name} is not unitary: ||U^H U - I||_2 = {defect}")
    return mat


def apply_unitary_z(U, point: DomainPoint) -> DomainPoint:
    """Automorphism (z, w) -> (U z, w) for U in U(n)."""
    mat = _check_unitary(U, point.params.n, "U")
    return DomainPoint(point.params, mat @ point.z, point.w)


def apply_unitary_w(V, point: DomainPoint) -> DomainPoint:
    """Automorphism (z, w) -> (z, V w) for V in U(m)."""
    mat = _check_unitary(V, point.params.m, "V")
    return DomainPoint(point.params, point.z, mat @ point.w)


def _translation_scale(params: DomainParams, a: np.ndarray, z: np.ndarray) -> complex:
    # exp(mu <z, a> - mu/2 ||a||^2) with <z, a> = sum_i z_i conj(a_i)
    inner = complex(np.vdot(a, z))
    return complex(np.exp(params.mu * inner - 0.5 * params.mu * _norm_sq(a)))


def apply_translation(a, point: DomainPoint) -> DomainPoint:
    """Automorphism (z, w) -> (z - a, exp(mu <z,a> - mu/2 ||a||^2) w).

    Preserves the reduced-coordinate norm exactly, hence membership.
    """
    params = point.params
    av = _as_complex_vector(a, params.n, "a")
    scale = _translation_scale(params, av, point.z)
    return DomainPoint(params, point.z - av, scale * point.w)


def translation_jacobian_det(params: DomainParams, a, point: DomainPoint) -> complex:
    """Holomorphic Jacobian determinant of the translation automorphism.

    The w-block is scaled by a single holomorphic factor, so the determinant
    is that factor to the power m.
    """
    _check_same_domain(params, point)
    av = _as_complex_vector(a, params.n, "a")
    inner = complex(np.vdot(av, point.z))
    return complex(np.exp(params.m * (params.mu * inner - 0.5 * params.mu * _norm_sq(av))))


def _as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def sample_members(
    params: DomainParams,
    count: int,
    seed=0,
    radius: float = 0.95,
) -> list[DomainPoint]:
    """Random interior points: z complex Gaussian, w_tilde uniform in the
    ball of the given radius, mapped back to the fiber.

    The radius cap keeps series truncation cheap for the sampled points.
    """
    if not 0.0 <= radius < 1.0:
        raise ValueError(f"radius must be in [0, 1), got {radius}")
    rng = _as_generator(seed)
    points = []
    for _ in range(count):
        z = (rng.standard_normal(params.n) + 1j * rng.standard_normal(params.n)) / math.sqrt(2)
        direction = rng.standard_normal(params.m) + 1j * rng.standard_normal(params.m)
        norm = np.linalg.norm(direction)
        if norm == 0.0:
            direction = np.ones(params.m, dtype=complex)
            norm = math.sqrt(params.m)
        r = radius * rng.uniform() ** (1.0 / (2 * params.m))
        w_tilde = r * direction / norm
        w = np.exp(-0.5 * params.mu * _norm_sq(z)) * w_tilde
        points.append(DomainPoint(params, z, w))
    return points


def random_unitary(dim: int, seed=0) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    rng = _as_generator(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases
