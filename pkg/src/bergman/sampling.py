"""Seeded samplers for disk/ball points and stratified verification pairs."""
from __future__ import annotations

import numpy as np
from scipy.stats import qmc

from .errors import ParameterError
from .geometry import ball_phi, mobius, rho, ball_metric


def _rng(seed_or_rng):
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def sample_disk(seed_or_rng, size: int, rmax: float = 1.0) -> np.ndarray:
    """Area-uniform sample of the disk |z| < rmax."""
    rng = _rng(seed_or_rng)
    rad = rmax * np.sqrt(rng.uniform(0.0, 1.0, size))
    ang = rng.uniform(0.0, 2.0 * np.pi, size)
    return rad * np.exp(1j * ang)


def sample_ball(seed_or_rng, size: int, n: int = 2, rmax: float = 1.0) -> np.ndarray:
    """Volume-uniform sample of the complex n-ball, shape (size, n)."""
    rng = _rng(seed_or_rng)
    x = rng.normal(size=(size, 2 * n))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    x *= rmax * rng.uniform(0.0, 1.0, (size, 1)) ** (1.0 / (2 * n))
    return x[:, :n] + 1j * x[:, n:]


def sobol_ball(n: int, count: int, seed: int = 0) -> np.ndarray:
    """First ``count`` points of a scrambled Sobol stream rejected to the
    complex n-ball; shape (count, n)."""
    sob = qmc.Sobol(d=2 * n, scramble=True, seed=seed)
    out = []
    have = 0
    while have < count:
        raw = 2.0 * sob.random(max(4096, 2 * count)) - 1.0
        keep = raw[np.sum(raw * raw, axis=1) < 1.0]
        out.append(keep)
        have += len(keep)
    pts = np.concatenate(out)[:count]
    return pts[:, :n] + 1j * pts[:, n:]


def disk_pairs_stratified(seed: int, n_pairs: int, r: float):
    """Deterministic (z, w) pairs: the first half has rho(z, w) < r, the
    second half rho(z, w) >= r (rejection sampled)."""
    if n_pairs < 1:
        raise ParameterError("need at least one pair")
    rng = _rng(seed)
    z = sample_disk(rng, n_pairs)
    n_near = n_pairs // 2
    zeta = sample_disk(rng, n_near, rmax=r)
    w_near = mobius(z[:n_near], zeta)
    n_far = n_pairs - n_near
    w_far = np.empty(n_far, dtype=complex)
    got = 0
    while got < n_far:
        cand = sample_disk(rng, n_far - got)
        ok = rho(z[n_near + got:n_near + got + len(cand)], cand,
                 validate=False) >= r
        sel = cand[ok]
        w_far[got:got + len(sel)] = sel
        got += len(sel)
    return z, np.concatenate([w_near, w_far])


def ball_pairs_stratified(seed: int, n_pairs: int, r: float, n: int = 2):
    """Ball analogue of :func:`disk_pairs_stratified`."""
    if n_pairs < 1:
        raise ParameterError("need at least one pair")
    rng = _rng(seed)
    z = sample_ball(rng, n_pairs, n)
    n_near = n_pairs // 2
    e = sample_ball(rng, n_near, n, rmax=r)
    w_near = ball_phi(z[:n_near], e)
    n_far = n_pairs - n_near
    w_far = np.empty((n_far, n), dtype=complex)
    got = 0
    while got < n_far:
        cand = sample_ball(rng, n_far - got, n)
        ok = ball_metric(z[n_near + got:n_near + got + len(cand)], cand,
                         kind="rho", validate=False) >= r
        sel = cand[ok]
        w_far[got:got + len(sel)] = sel
        got += len(sel)
    return z, np.concatenate([w_near, w_far])
