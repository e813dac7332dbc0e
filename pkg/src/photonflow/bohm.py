"""Guidance-equation trajectories for the flow recipes.

A flow (rho, J) defines a velocity field v = J / rho and trajectories
dx/dt = v(x, t).  Two guidance laws are supported:

    phi_based     v = J / rho         (probability flow of the wave function)
    weber_based   v = S / rho_E       (energy transport velocity)

Both satisfy |v| <= c pointwise, since |J| <= c rho holds for each by
the triangle inequality on the underlying complex field.

Near nodes of the density the velocity is undefined.  The node floor is
relative to a rigorous upper bound on the density (the squared sum of
component amplitude norms), so it does not depend on where the state is
evaluated.

The frame-consistency check compares, at one event, the velocity
obtained by relativistically transforming the rest-frame velocity
against the velocity of the boosted-frame flow at the transformed event.
Agreement for every event is what it means for the trajectories
themselves to be Lorentz covariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FieldValidationError, GuidanceNodeError, InternalConsistencyError
from .lorentz import Boost, boost_event, boost_plane_wave, velocity_addition
from .photon import PHI_BASED, WEBER_BASED
from .planewaves import (PlaneWaveSuperposition, analytic_probability_flow,
                         analytic_weber_flow, coalesce)

SPEED_SLACK = 1e-9


def density_upper_bound(state: PlaneWaveSuperposition, guidance: str = PHI_BASED,
                        *, c: float = 1.0, hbar: float = 1.0) -> float:
    """A bound on the guidance denominator valid at every point and time."""
    merged = coalesce(state)
    if guidance == PHI_BASED:
        total = sum(np.linalg.norm(comp.phi_amplitude(c, hbar)) for comp in merged.components)
        return float(total ** 2)
    if guidance == WEBER_BASED:
        total = sum(np.linalg.norm(comp.weber_amplitude(c)) for comp in merged.components)
        return float(total ** 2 / (8.0 * np.pi))
    raise FieldValidationError(f"unknown guidance law {guidance!r}")


def _flow(state, x, t, guidance, c, hbar):
    if guidance == PHI_BASED:
        return analytic_probability_flow(state, x, t, c, hbar)
    if guidance == WEBER_BASED:
        return analytic_weber_flow(state, x, t, c)
    raise FieldValidationError(f"unknown guidance law {guidance!r}")


def _velocity_masked(state, x, t, guidance, c, hbar, floor):
    """Velocity with node mask instead of an exception; nodes get v = 0."""
    rho, current = _flow(state, x, t, guidance, c, hbar)
    mask = rho <= floor
    safe = np.where(mask, 1.0, rho)
    v = current / safe[..., None]
    v = np.where(mask[..., None], 0.0, v)
    speed = np.linalg.norm(v, axis=-1)
    if speed.size and speed.max() > c * (1.0 + SPEED_SLACK):
        raise InternalConsistencyError(
            f"guidance speed {speed.max()!r} exceeds c = {c!r}; "
            f"the flow recipe violated |J| <= c rho")
    return v, mask


def guidance_velocity(state: PlaneWaveSuperposition, x, t, guidance: str = PHI_BASED,
                      *, c: float = 1.0, hbar: float = 1.0,
                      node_floor_rel: float = 1e-12) -> np.ndarray:
    """v = J / rho at points x (..., 3) and time(s) t.

    Raises GuidanceNodeError if any point sits where the density is below
    node_floor_rel times its global upper bound.
    """
    floor = node_floor_rel * density_upper_bound(state, guidance, c=c, hbar=hbar)
    v, mask = _velocity_masked(state, x, t, guidance, c, hbar, floor)
    if np.any(mask):
        idx = np.unravel_index(np.argmax(mask), mask.shape)
        where = np.asarray(x, dtype=float)[idx]
        when = float(np.broadcast_to(np.asarray(t, dtype=float), mask.shape)[idx])
        raise GuidanceNodeError(
            f"density node at x = {where.tolist()}, t = {when:.6g}: "
            f"guidance velocity undefined", location=where, time=when)
    return v


@dataclass
class Trajectory:
    """Sampled solution of dx/dt = v(x, t) at the integrator's time knots."""

    times: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    guidance: str
    node_hit: bool = False


def _time_knots(t0, t1, step):
    if step <= 0:
        raise FieldValidationError(f"step must be positive, got {step!r}")
    if t1 < t0:
        raise FieldValidationError(f"need t1 >= t0, got t0 = {t0!r}, t1 = {t1!r}")
    n = max(1, int(np.ceil((t1 - t0) / step - 1e-12))) if t1 > t0 else 0
    knots = t0 + step * np.arange(n + 1)
    knots[-1] = t1
    return knots


def integrate_trajectory(state: PlaneWaveSuperposition, x0, t0: float, t1: float,
                         step: float, guidance: str = PHI_BASED, *, c: float = 1.0,
                         hbar: float = 1.0, node_floor_rel: float = 1e-12) -> Trajectory:
    """Classic fixed-step RK4 from (x0, t0) to t1, last step shortened to land on t1.

    If the trajectory reaches a density node the integration stops there
    and the returned object has node_hit = True with the samples
    accumulated so far.
    """
    floor = node_floor_rel * density_upper_bound(state, guidance, c=c, hbar=hbar)
    x = np.asarray(x0, dtype=float).reshape(1, 3)
    knots = _time_knots(t0, t1, step)

    def vel(p, tt):
        v, mask = _velocity_masked(state, p, tt, guidance, c, hbar, floor)
        return (None, None) if mask.any() else (v, mask)

    v, mask = vel(x, knots[0])
    if v is None:
        raise GuidanceNodeError(
            f"trajectory starts on a density node at x = {x[0].tolist()}, t = {knots[0]:.6g}",
            location=x[0], time=float(knots[0]))

    times = [knots[0]]
    positions = [x[0].copy()]
    velocities = [v[0].copy()]
    node_hit = False
    for a, b in zip(knots[:-1], knots[1:]):
        h = b - a
        k1, _ = vel(x, a)
        k2, _ = vel(x + 0.5 * h * k1, a + 0.5 * h) if k1 is not None else (None, None)
        k3, _ = vel(x + 0.5 * h * k2, a + 0.5 * h) if k2 is not None else (None, None)
        k4, _ = vel(x + h * k3, b) if k3 is not None else (None, None)
        if k4 is None:
            node_hit = True
            break
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        v, _ = vel(x, b)
        if v is None:
            node_hit = True
            break
        times.append(b)
        positions.append(x[0].copy())
        velocities.append(v[0].copy())
    return Trajectory(np.array(times), np.array(positions), np.array(velocities),
                      guidance, node_hit)


def transport_ensemble(state: PlaneWaveSuperposition, points, t0: float, t1: float,
                       step: float, guidance: str = PHI_BASED, *, c: float = 1.0,
                       hbar: float = 1.0, node_floor_rel: float = 1e-12) -> tuple:
    """Push many initial points through the flow at once.

    Returns (final_positions, node_mask).  A particle that reaches a node
    freezes in place and is marked; the others are unaffected.
    """
    floor = node_floor_rel * density_upper_bound(state, guidance, c=c, hbar=hbar)
    x = np.array(points, dtype=float)
    if x.ndim != 2 or x.shape[1] != 3:
        raise FieldValidationError(f"points must have shape (n, 3), got {x.shape}")
    frozen = np.zeros(x.shape[0], dtype=bool)
    knots = _time_knots(t0, t1, step)

    for a, b in zip(knots[:-1], knots[1:]):
        h = b - a
        k1, m1 = _velocity_masked(state, x, a, guidance, c, hbar, floor)
        k2, m2 = _velocity_masked(state, x + 0.5 * h * k1, a + 0.5 * h, guidance, c, hbar, floor)
        k3, m3 = _velocity_masked(state, x + 0.5 * h * k2, a + 0.5 * h, guidance, c, hbar, floor)
        k4, m4 = _velocity_masked(state, x + h * k3, b, guidance, c, hbar, floor)
        bad = m1 | m2 | m3 | m4
        delta = (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        move = ~(frozen | bad)
        x[move] += delta[move]
        frozen |= bad
    return x, frozen


def sample_points_on_line(state: PlaneWaveSuperposition, origin, direction,
                          length: float, n_points: int, rng,
                          guidance: str = PHI_BASED, *, t: float = 0.0,
                          c: float = 1.0, hbar: float = 1.0,
                          n_dense: int = 4096) -> np.ndarray:
    """Draw points on a segment with probability proportional to the density.

    Inverse-CDF sampling on a dense tabulation of rho along
    origin + s * direction for s in [0, length].
    """
    origin = np.asarray(origin, dtype=float)
    direction = np.asarray(direction, dtype=float)
    direction = direction / np.linalg.norm(direction)
    s = np.linspace(0.0, length, n_dense)
    pts = origin + s[:, None] * direction
    rho, _ = _flow(state, pts, t, guidance, c, hbar)
    ds = s[1] - s[0]
    cdf = np.concatenate([[0.0], np.cumsum(0.5 * (rho[1:] + rho[:-1]) * ds)])
    if cdf[-1] <= 0.0:
        raise FieldValidationError("density vanishes along the whole segment")
    cdf /= cdf[-1]
    u = rng.random(n_points)
    s_samples = np.interp(u, cdf, s)
    return origin + s_samples[:, None] * direction


@dataclass
class FrameConsistency:
    """Velocity comparison at one event, rest frame vs boosted frame.

    v_velocity_addition is the rest-frame guidance velocity pushed through
    the relativistic velocity map (what the boosted trajectory would do if
    trajectories transformed as world lines).  v_boosted_frame is the
    guidance velocity computed from the boosted-frame flow at the same
    event.  mismatch is their distance in units of c.
    """

    guidance: str
    x: np.ndarray
    t: float
    x_prime: np.ndarray
    t_prime: float
    v_rest: np.ndarray
    v_velocity_addition: np.ndarray
    v_boosted_frame: np.ndarray
    mismatch: float


def frame_consistency_check(state: PlaneWaveSuperposition, boost: Boost, x, t: float,
                            guidance: str = PHI_BASED, *, c: float = 1.0,
                            hbar: float = 1.0,
                            node_floor_rel: float = 1e-12) -> FrameConsistency:
    """Compare the two ways of obtaining the boosted-frame velocity at one event."""
    x = np.asarray(x, dtype=float)
    v_rest = guidance_velocity(state, x[None, :], t, guidance, c=c, hbar=hbar,
                               node_floor_rel=node_floor_rel)[0]
    v_add = velocity_addition(v_rest, boost)

    x_prime, t_prime = boost_event(x, t, boost)
    boosted = boost_plane_wave(state, boost)
    v_flow = guidance_velocity(boosted, x_prime[None, :], float(t_prime), guidance,
                               c=c, hbar=hbar, node_floor_rel=node_floor_rel)[0]
    return FrameConsistency(guidance, x, float(t), x_prime, float(t_prime), v_rest,
                            v_add, v_flow, float(np.linalg.norm(v_add - v_flow) / c))
