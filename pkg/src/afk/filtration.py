"""Quotients of the filtration of X(Lambda) (x) L(V) by t-degree.

Two independent routes to the same multiset of highest weights:

* :func:`decompose_quotient` is type-uniform and works from the weights of V
  (which mu keep Lambda + mu dominant);
* :func:`chain` walks the per-type chain of submodules generated by
  v_Lambda (x) w_j t^{n + n(w_j)} and uses hand-transcribed collapse
  conditions; :func:`chain_summands` reads off one summand per strict step.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .natmod import NatModule, n_values
from .rootdata import AffineWeight, FiniteWeight, embed, is_dominant


class NotCoveredError(ValueError):
    """Lambda is a multiple of delta, where the decomposition does not apply."""


class NonDominantError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DecompositionSummand:
    highest_weight: AffineWeight
    mu: FiniteWeight
    n_mu: int
    multiplicity: int = 1

    def to_json(self) -> dict:
        return {
            "mu": self.mu.to_json(),
            "n_mu": self.n_mu,
            "weight": self.highest_weight.to_json(),
            "multiplicity": self.multiplicity,
        }


def check_lambda(lam: AffineWeight) -> None:
    if lam.is_delta_multiple():
        raise NotCoveredError("Lambda is a multiple of delta")
    if not is_dominant(lam):
        raise NonDominantError(f"Lambda = {lam} is not dominant")


def omega_lambda(m: NatModule, lam: AffineWeight) -> list[FiniteWeight]:
    """Weights mu of V with Lambda + mu dominant (zero weight dropped in type B when Lambda_l = 0)."""
    check_lambda(lam)
    out = []
    for mu in m.weights:
        if m.family == "B" and mu.is_zero() and lam.omega[m.rank] == 0:
            continue
        if is_dominant(lam + embed(m.cartan, mu)):
            out.append(mu)
    return sorted(out)


def decompose_quotient(m: NatModule, lam: AffineWeight, n: int) -> list[DecompositionSummand]:
    ns = n_values(m)
    out = []
    for mu in omega_lambda(m, lam):
        n_mu = ns[m.index_of(mu)]
        hw = (lam + embed(m.cartan, mu)).shift_delta(n + n_mu)
        out.append(DecompositionSummand(hw, mu, n_mu))
    return sorted(out)


# -- the chain of submodules -----------------------------------------------------

Condition = tuple[int, int]  # (i, t): the step is strict only if Lambda_i >= t


def collapse_table(family: str, rank: int, literal: bool = False) -> list[tuple[Condition, ...]]:
    """Per step j (generator w_j), the conditions that must all hold for the step to be strict.

    The step collapses as soon as one Lambda_i falls below its threshold.
    Thresholds are 1 except at the type B step generated by w_{l-1}, whose weight
    pairs to -2 with the short coroot; ``literal=True`` uses threshold 1 there too.
    """
    l = rank
    if family == "A":
        return [(((l - j + 1) % (l + 1), 1),) for j in range(l + 1)]
    if family == "C":
        steps = [((j, 1),) for j in range(l + 1)]
        steps += [((l - k, 1),) for k in range(1, l)]
        return steps
    if family == "B":
        steps: list[tuple[Condition, ...]] = [((0, 1),)]
        steps += [((j + 1, 1),) for j in range(1, l - 1)]
        steps.append(((l, 1 if literal else 2),))
        steps += [((l - k, 1),) for k in range(0, l - 1)]
        steps.append(((0, 1), (1, 1)))
        steps.append(((1, 1),))
        return steps
    if family == "D":
        steps = [((0, 1),)]
        steps += [((j + 1, 1),) for j in range(1, l - 2)]
        steps.append(((l - 1, 1), (l, 1)))
        steps.append(((l, 1),))
        steps.append(((l - 1, 1),))
        steps += [((l - k, 1),) for k in range(2, l - 1)]
        steps.append(((0, 1), (1, 1)))
        steps.append(((1, 1),))
        return steps
    raise ValueError(f"unsupported family {family!r}")


@dataclass(frozen=True)
class ChainStep:
    j: int
    generator: tuple[int, int]  # (basis index, t-exponent) of v_Lambda (x) w_j t^e
    conditions: tuple[Condition, ...]
    is_strict: bool

    @property
    def collapse_indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.conditions)

    def collapse_labels(self) -> list[str]:
        return [f"Lambda_{i}" if t == 1 else f"Lambda_{i}<{t}" for i, t in self.conditions]

    def to_json(self) -> dict:
        return {"j": self.j, "strict": self.is_strict, "collapse": self.collapse_labels()}


@dataclass(frozen=True)
class Chain:
    module: NatModule
    lam: AffineWeight
    n: int
    steps: tuple[ChainStep, ...]


def chain(m: NatModule, lam: AffineWeight, n: int, literal: bool = False) -> Chain:
    check_lambda(lam)
    table = collapse_table(m.family, m.rank, literal)
    if len(table) != m.dim:
        raise AssertionError("chain table length differs from the module dimension")
    ns = n_values(m)
    steps = []
    for j, conds in enumerate(table):
        strict = all(lam.omega[i] >= t for i, t in conds)
        steps.append(ChainStep(j, (j, n + ns[j]), conds, strict))
    return Chain(m, lam, n, tuple(steps))


def chain_summands(ch: Chain) -> list[DecompositionSummand]:
    m = ch.module
    ns = n_values(m)
    out = []
    for step in ch.steps:
        if not step.is_strict:
            continue
        mu = m.weights[step.j]
        hw = (ch.lam + embed(m.cartan, mu)).shift_delta(ch.n + ns[step.j])
        out.append(DecompositionSummand(hw, mu, ns[step.j]))
    return sorted(out)


def same_multiset(a: list[DecompositionSummand], b: list[DecompositionSummand]) -> bool:
    return Counter(a) == Counter(b)


def decompose_json(m: NatModule, lam: AffineWeight, n: int) -> dict:
    return {
        "lambda": lam.to_json(),
        "n": n,
        "summands": [s.to_json() for s in decompose_quotient(m, lam, n)],
        "chain": [s.to_json() for s in chain(m, lam, n).steps],
    }
