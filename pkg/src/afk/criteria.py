"""Sufficient conditions for (ir)reducibility of X(Lambda) (x) L(V(pi))."""
from __future__ import annotations

from typing import Mapping

from .natmod import NatModule, PiData, first_layer_dims, k_of_natural, last_layer_dims, n_values
from .rootdata import (
    AffineWeight,
    CartanData,
    embed,
    fundamental_finite,
    lowest_weight_in_orbit,
    pair_with_delta,
    pair_with_root,
    theta_coroot_pairing,
)

IRREDUCIBLE = "irreducible (Thm B)"
REDUCIBLE = "reducible (Thm C)"
UNDETERMINED = "undetermined"


def trivial_filtration_criterion(
    cartan: CartanData,
    lam: AffineWeight,
    pi: PiData,
    dims: Mapping[int, int],
    dims_star: Mapping[int, int],
) -> bool:
    """True when the filtration by t-degree is constant, so the tensor product is irreducible.

    Holds if (k+m)(Lambda|delta) < (Lambda + lambda_pi | alpha_i) for some i with
    dims[i] = k, or k(Lambda|delta) < -(Lambda + w0 lambda_pi | alpha_i) for some i
    with dims_star[i] = k.
    """
    ld = pair_with_delta(cartan, lam)
    top = lam + embed(cartan, pi.lambda_pi)
    bottom = lam + embed(cartan, lowest_weight_in_orbit(cartan, pi.lambda_pi))
    for i in cartan.finite_nodes:
        if dims.get(i) == pi.k and (pi.k + pi.m) * ld < pair_with_root(cartan, top, i):
            return True
        if dims_star.get(i) == pi.k and pi.k * ld < -pair_with_root(cartan, bottom, i):
            return True
    return False


def reducibility_criterion(lam: AffineWeight, pi: PiData) -> bool:
    """Lambda(alpha_0^vee) >= lambda_pi(theta^vee) + m(pi)."""
    return lam.omega[0] >= pi.theta_pairing + pi.m


def natural_pi_data(m: NatModule) -> PiData:
    top = fundamental_finite(m.cartan, 1)
    return PiData(
        lambda_pi=top,
        k=k_of_natural(m),
        m=1,
        n_pi=max(n_values(m)),
        theta_pairing=theta_coroot_pairing(m.cartan, top),
    )


def verdict(trivial: bool, reducible: bool) -> str:
    if trivial:
        return IRREDUCIBLE
    if reducible:
        return REDUCIBLE
    return UNDETERMINED


def evaluate_natural(m: NatModule, lam: AffineWeight) -> dict:
    pi = natural_pi_data(m)
    b = trivial_filtration_criterion(m.cartan, lam, pi, first_layer_dims(m), last_layer_dims(m))
    c = reducibility_criterion(lam, pi)
    return {"thmB_trivial": b, "thmC_reducible": c, "verdict": verdict(b, c)}
