"""Analytic test functions with exact evaluation and differentiation.

Four families are supported: finite Taylor polynomials and the closed
forms (1 - z)^(-s) and log(1/(1 - z)) on the disk, and multi-variable
monomial polynomials on the ball.  Everything evaluates vectorized over
numpy arrays and round-trips through a small JSON encoding.
"""
from __future__ import annotations

import numpy as np

from .errors import ParameterError
from .geometry import BALL_DIMS, ball_phi

FD_STEP = 1e-5  # central-difference step for the invariant gradient


class HoloFunction:
    """Base class; concrete variants implement ``__call__`` and, on the
    disk, ``derivative_at``."""

    domain = "disk"

    def __call__(self, z):
        raise NotImplementedError

    def derivative_at(self, z):
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    @staticmethod
    def from_json(obj: dict) -> "HoloFunction":
        variant = obj["variant"]
        if variant == "taylor":
            return TaylorPoly([complex(re, im) for re, im in obj["coeffs"]])
        if variant == "power":
            return PowerSingularity(obj["s"])
        if variant == "log":
            return LogKernel()
        if variant == "ball":
            terms = {tuple(idx): complex(re, im) for idx, (re, im) in obj["terms"]}
            return BallPoly(obj["n"], terms)
        raise TypeError(f"unknown function variant {variant!r}")


class TaylorPoly(HoloFunction):
    """Finite Taylor polynomial sum a_k z^k, evaluated by Horner."""

    def __init__(self, coeffs):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        if c.ndim != 1 or len(c) == 0:
            raise ParameterError("coefficients must be a nonempty 1-d sequence")
        self.coeffs = c

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(np.asarray(z, dtype=complex),
                                                self.coeffs)

    def differentiated(self) -> "TaylorPoly":
        if len(self.coeffs) == 1:
            return TaylorPoly([0.0])
        return TaylorPoly(self.coeffs[1:] * np.arange(1, len(self.coeffs)))

    def derivative_at(self, z):
        return self.differentiated()(z)

    def to_json(self) -> dict:
        return {"variant": "taylor",
                "coeffs": [[c.real, c.imag] for c in self.coeffs]}


class PowerSingularity(HoloFunction):
    """f(z) = (1 - z)^(-s) for s > 0, principal branch."""

    def __init__(self, s: float):
        if not s > 0:
            raise ParameterError("exponent s must be positive")
        self.s = float(s)

    def __call__(self, z):
        return (1.0 - np.asarray(z, dtype=complex)) ** (-self.s)

    def derivative_at(self, z):
        return self.s * (1.0 - np.asarray(z, dtype=complex)) ** (-self.s - 1.0)

    def taylor_section(self, degree: int) -> TaylorPoly:
        """Taylor polynomial of degree ``degree``; a_k = (s)_k / k!."""
        c = np.empty(degree + 1, dtype=complex)
        c[0] = 1.0
        for k in range(1, degree + 1):
            c[k] = c[k - 1] * (self.s + k - 1) / k
        return TaylorPoly(c)

    def to_json(self) -> dict:
        return {"variant": "power", "s": self.s}


class LogKernel(HoloFunction):
    """f(z) = log(1/(1 - z)), principal branch; f(0) = 0."""

    def __call__(self, z):
        return -np.log(1.0 - np.asarray(z, dtype=complex))

    def derivative_at(self, z):
        return 1.0 / (1.0 - np.asarray(z, dtype=complex))

    def taylor_section(self, degree: int) -> TaylorPoly:
        c = np.zeros(degree + 1, dtype=complex)
        c[1:] = 1.0 / np.arange(1, degree + 1)
        return TaylorPoly(c)

    def to_json(self) -> dict:
        return {"variant": "log"}


class BallPoly(HoloFunction):
    """Polynomial in n complex variables given as a monomial table
    {(e_1, ..., e_n): coefficient}."""

    domain = "ball"

    def __init__(self, n: int, terms: dict):
        if n not in BALL_DIMS:
            raise ParameterError(f"ball dimension must be one of {BALL_DIMS}")
        self.n = int(n)
        self.terms = {}
        for idx, c in terms.items():
            idx = tuple(int(e) for e in idx)
            if len(idx) != n or any(e < 0 for e in idx):
                raise ParameterError(f"bad monomial index {idx}")
            if c != 0:
                self.terms[idx] = complex(c)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape[:-1], dtype=complex)
        for idx, c in self.terms.items():
            t = np.full(z.shape[:-1], c, dtype=complex)
            for k, e in enumerate(idx):
                if e:
                    t = t * z[..., k] ** e
            out += t
        return out

    def partial(self, k: int) -> "BallPoly":
        """d/dz_k as another BallPoly."""
        terms = {}
        for idx, c in self.terms.items():
            if idx[k]:
                new = list(idx)
                new[k] -= 1
                terms[tuple(new)] = terms.get(tuple(new), 0.0) + c * idx[k]
        return BallPoly(self.n, terms)

    def radial_derivative_at(self, z):
        """Rf(z) = sum_k z_k df/dz_k."""
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape[:-1], dtype=complex)
        for k in range(self.n):
            out += z[..., k] * self.partial(k)(z)
        return out

    def gradient_norm_at(self, z):
        """|grad f(z)| = sqrt(sum_k |df/dz_k|^2)."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros(z.shape[:-1])
        for k in range(self.n):
            acc += np.abs(self.partial(k)(z)) ** 2
        return np.sqrt(acc)

    def invariant_gradient_at(self, z, h: float = FD_STEP):
        """Moebius-invariant gradient |grad(f o phi_z)(0)| by central
        finite differences along each complex coordinate axis."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros(z.shape[:-1])
        for k in range(self.n):
            e = np.zeros(self.n, dtype=complex)
            e[k] = h
            gp = self(ball_phi(z, np.broadcast_to(e, z.shape), validate=False))
            gm = self(ball_phi(z, np.broadcast_to(-e, z.shape), validate=False))
            acc += np.abs((gp - gm) / (2.0 * h)) ** 2
        return np.sqrt(acc)

    def to_json(self) -> dict:
        return {"variant": "ball", "n": self.n,
                "terms": [[list(idx), [c.real, c.imag]]
                          for idx, c in sorted(self.terms.items())]}


def derivative(f: HoloFunction, z, kind: str = "complex"):
    """Dispatch the derivative notions: ``complex`` (f', disk variants),
    ``radial``, ``gradient`` and ``invariant-gradient`` (ball variants)."""
    if kind == "complex":
        if f.domain != "disk":
            raise TypeError("complex derivative requires a disk variant")
        return f.derivative_at(z)
    if f.domain != "ball":
        raise TypeError(f"derivative kind {kind!r} requires a ball variant")
    if kind == "radial":
        return f.radial_derivative_at(z)
    if kind == "gradient":
        return f.gradient_norm_at(z)
    if kind == "invariant-gradient":
        return f.invariant_gradient_at(z)
    raise TypeError(f"unknown derivative kind {kind!r}")


def radial_metric_ratio(z, metric: str = "rho", h: float = 1e-5):
    """Difference quotient metric(z, w) / |z - w| for the radial inward
    step w = (1 - h/|z|) z; tends to 1 / (1 - |z|^2) as h -> 0.

    Disk points are complex scalars (z = 0 steps along the positive real
    axis); ball points are length-n vectors and require z != 0.
    """
    z = np.asarray(z, dtype=complex)
    if z.ndim == 0:  # disk point
        az = abs(complex(z))
        if not 0.0 < h < 1.0 - az:
            raise ParameterError("step h must lie in (0, 1 - |z|)")
        w = complex(z) * (1.0 - h / az) if az > 0 else complex(h)
        from .geometry import rho as _rho, beta as _beta
        dist = _rho(z, w) if metric == "rho" else _beta(z, w)
        return float(dist / abs(complex(z) - w))
    # ball point
    from .geometry import ball_metric
    az = float(np.sqrt(np.sum(np.abs(z) ** 2)))
    if az == 0.0:
        raise ParameterError("ball radial direction undefined at the origin")
    if not 0.0 < h < 1.0 - az:
        raise ParameterError("step h must lie in (0, 1 - |z|)")
    w = z * (1.0 - h / az)
    if metric not in ("rho", "beta"):
        raise ParameterError(f"unknown metric {metric!r}")
    return float(ball_metric(z, w, kind=metric) / h)
