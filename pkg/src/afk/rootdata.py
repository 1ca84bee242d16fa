"""Finite and untwisted affine root data for the classical families A, B, C, D.

Nodes are numbered as in Kac's tables: in B the last node is short, in C the
last node is long, in D the last two nodes form the fork.  The affine node 0
is appended with ``alpha_0 = delta - theta``.

Conventions
-----------
* ``matrix[i][j] = alpha_j(alpha_i^vee)``, so ``d_i a_ij = (alpha_i | alpha_j)``.
* ``d`` are the coprime positive integers symmetrising the extended matrix.
* ``marks`` are the coefficients of theta in the simple roots (``a_0 = 1``),
  ``comarks`` those of theta^vee in the simple coroots (``a_0^vee = 1``).
* An affine weight is stored by its coroot pairings ``omega = (n_0..n_l)``
  together with its delta coefficient; a finite weight by its pairings with
  ``alpha_1^vee .. alpha_l^vee``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

FAMILIES = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}


class RootDataError(ValueError):
    pass


def _unit(n: int, k: int, scale=1) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[k] = Fraction(scale)
    return v


def _euclidean_simple_roots(family: str, rank: int) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Simple roots alpha_1..alpha_l and the highest root, in epsilon coordinates."""
    l = rank
    if family == "A":
        n = l + 1
        roots = []
        for i in range(l):
            v = _unit(n, i)
            v[i + 1] = Fraction(-1)
            roots.append(v)
        theta = _unit(n, 0)
        theta[n - 1] = Fraction(-1)
        return roots, theta
    n = l
    roots = []
    for i in range(l - 1):
        v = _unit(n, i)
        v[i + 1] = Fraction(-1)
        roots.append(v)
    if family == "B":
        roots.append(_unit(n, l - 1))
        theta = _unit(n, 0)
        theta[1] = Fraction(1)
    elif family == "C":
        roots.append(_unit(n, l - 1, 2))
        theta = _unit(n, 0, 2)
    elif family == "D":
        v = _unit(n, l - 2)
        v[l - 1] = Fraction(1)
        roots.append(v)
        theta = _unit(n, 0)
        theta[1] = Fraction(1)
    else:
        raise RootDataError(f"unsupported family {family!r}")
    return roots, theta


def _marks(family: str, rank: int) -> tuple[int, ...]:
    l = rank
    if family == "A":
        return (1,) * (l + 1)
    if family == "B":
        return (1, 1) + (2,) * (l - 1)
    if family == "C":
        return (1,) + (2,) * (l - 1) + (1,)
    if family == "D":
        return (1, 1) + (2,) * (l - 3) + (1, 1)
    raise RootDataError(f"unsupported family {family!r}")


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class CartanData:
    family: str
    rank: int
    matrix: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    # alpha_0 (= -theta on the finite part), alpha_1, ..., alpha_l in epsilon coordinates
    euclidean_roots: tuple[tuple[Fraction, ...], ...]

    @property
    def nodes(self) -> range:
        return range(self.rank + 1)

    @property
    def finite_nodes(self) -> range:
        return range(1, self.rank + 1)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def a(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def finite_matrix(self) -> list[list[int]]:
        return [list(row[1:]) for row in self.matrix[1:]]


def make_cartan(family: str, rank: int) -> CartanData:
    family = family.upper()
    if family not in FAMILIES:
        raise RootDataError(f"unsupported family {family!r}")
    if rank < MIN_RANK[family]:
        raise RootDataError(f"{family}_{rank} is out of range (rank >= {MIN_RANK[family]} required)")
    simple, theta = _euclidean_simple_roots(family, rank)
    roots = [[-x for x in theta]] + simple
    lengths = [_dot(r, r) for r in roots]
    shortest = min(lengths)
    d = tuple(int(x / shortest) for x in lengths)
    matrix = tuple(
        tuple(int(2 * _dot(roots[i], roots[j]) / lengths[i]) for j in range(rank + 1))
        for i in range(rank + 1)
    )
    marks = _marks(family, rank)
    comarks = tuple(Fraction(marks[i] * d[i], d[0]) for i in range(rank + 1))
    if any(c.denominator != 1 for c in comarks):
        raise RootDataError("non-integral comarks")
    return CartanData(
        family=family,
        rank=rank,
        matrix=matrix,
        d=d,
        marks=marks,
        comarks=tuple(int(c) for c in comarks),
        euclidean_roots=tuple(tuple(r) for r in roots),
    )


# -- weights ------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class FiniteWeight:
    varpi: tuple[int, ...]

    def __add__(self, other: "FiniteWeight") -> "FiniteWeight":
        return FiniteWeight(tuple(a + b for a, b in zip(self.varpi, other.varpi)))

    def __sub__(self, other: "FiniteWeight") -> "FiniteWeight":
        return FiniteWeight(tuple(a - b for a, b in zip(self.varpi, other.varpi)))

    def __neg__(self) -> "FiniteWeight":
        return FiniteWeight(tuple(-a for a in self.varpi))

    def is_zero(self) -> bool:
        return not any(self.varpi)

    def to_json(self) -> dict:
        return {"varpi": list(self.varpi)}

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteWeight":
        return cls(tuple(int(x) for x in obj["varpi"]))

    def __str__(self) -> str:
        return _render(self.varpi, "varpi", start=1)


@dataclass(frozen=True, order=True)
class AffineWeight:
    """sum_i omega[i] * omega_i + delta * delta."""

    omega: tuple[int, ...]
    delta: int = 0

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(tuple(a + b for a, b in zip(self.omega, other.omega)), self.delta + other.delta)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(tuple(a - b for a, b in zip(self.omega, other.omega)), self.delta - other.delta)

    def __neg__(self) -> "AffineWeight":
        return AffineWeight(tuple(-a for a in self.omega), -self.delta)

    def scale(self, k: int) -> "AffineWeight":
        return AffineWeight(tuple(k * a for a in self.omega), k * self.delta)

    def shift_delta(self, k: int) -> "AffineWeight":
        return AffineWeight(self.omega, self.delta + k)

    def is_delta_multiple(self) -> bool:
        return not any(self.omega)

    def to_json(self) -> dict:
        return {"omega": list(self.omega), "delta": self.delta}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineWeight":
        return cls(tuple(int(x) for x in obj["omega"]), int(obj.get("delta", 0)))

    def __str__(self) -> str:
        s = _render(self.omega, "omega", start=0)
        if self.delta:
            tail = f"{self.delta}delta" if self.delta not in (1, -1) else ("delta" if self.delta == 1 else "-delta")
            if s == "0":
                return tail
            return f"{s} + {tail}" if not tail.startswith("-") else f"{s} - {tail[1:]}"
        return s


def _render(coords: Sequence[int], sym: str, start: int) -> str:
    parts = []
    for k, c in enumerate(coords, start):
        if not c:
            continue
        term = f"{sym}_{k}" if abs(c) == 1 else f"{abs(c)}{sym}_{k}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append((" + " if c > 0 else " - ") + term)
    return "".join(parts) or "0"


def fundamental(cartan: CartanData, i: int) -> AffineWeight:
    """omega_i as an affine weight."""
    return AffineWeight(tuple(int(k == i) for k in cartan.nodes), 0)


def delta(cartan: CartanData) -> AffineWeight:
    return AffineWeight((0,) * (cartan.rank + 1), 1)


def simple_root(cartan: CartanData, j: int) -> AffineWeight:
    """alpha_j = sum_i a_ij omega_i + delta_{j0} delta."""
    return AffineWeight(tuple(cartan.matrix[i][j] for i in cartan.nodes), int(j == 0))


def finite_simple_root(cartan: CartanData, j: int) -> FiniteWeight:
    """alpha_j (j in I, or j = 0 meaning -theta) in varpi coordinates."""
    return FiniteWeight(tuple(cartan.matrix[i][j] for i in cartan.finite_nodes))


def highest_root(cartan: CartanData) -> FiniteWeight:
    return -finite_simple_root(cartan, 0)


def embed(cartan: CartanData, mu: FiniteWeight) -> AffineWeight:
    """varpi_i = omega_i - a_i^vee omega_0."""
    n0 = -sum(m * cartan.comarks[i] for i, m in enumerate(mu.varpi, 1))
    return AffineWeight((n0,) + tuple(mu.varpi), 0)


def pair_with_coroot(lam: AffineWeight, i: int) -> int:
    return lam.omega[i]


def pair_with_delta(cartan: CartanData, lam: AffineWeight) -> int:
    """(lam | delta) = sum_i n_i a_i d_i."""
    return sum(n * a * d for n, a, d in zip(lam.omega, cartan.marks, cartan.d))


def pair_with_root(cartan: CartanData, lam: AffineWeight, i: int) -> int:
    """(lam | alpha_i) = d_i lam(alpha_i^vee)."""
    return cartan.d[i] * lam.omega[i]


def theta_coroot_pairing(cartan: CartanData, mu: FiniteWeight) -> int:
    """mu(theta^vee) = sum_i a_i^vee mu(alpha_i^vee)."""
    return sum(m * cartan.comarks[i] for i, m in enumerate(mu.varpi, 1))


def is_dominant(lam: AffineWeight) -> bool:
    return all(n >= 0 for n in lam.omega)


def reflect(cartan: CartanData, mu: FiniteWeight, i: int) -> FiniteWeight:
    """s_i(mu) = mu - mu(alpha_i^vee) alpha_i, i in I."""
    k = mu.varpi[i - 1]
    if not k:
        return mu
    a = finite_simple_root(cartan, i)
    return FiniteWeight(tuple(m - k * x for m, x in zip(mu.varpi, a.varpi)))


def weyl_orbit(cartan: CartanData, mu: FiniteWeight) -> frozenset[FiniteWeight]:
    seen = {mu}
    todo = deque([mu])
    while todo:
        nu = todo.popleft()
        for i in cartan.finite_nodes:
            r = reflect(cartan, nu, i)
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return frozenset(seen)


def lowest_weight_in_orbit(cartan: CartanData, mu: FiniteWeight) -> FiniteWeight:
    lows = [nu for nu in weyl_orbit(cartan, mu) if all(m <= 0 for m in nu.varpi)]
    if len(lows) != 1:
        raise RootDataError(f"orbit of {mu} has {len(lows)} antidominant elements")
    return lows[0]


def highest_weight_in_orbit(cartan: CartanData, mu: FiniteWeight) -> FiniteWeight:
    highs = [nu for nu in weyl_orbit(cartan, mu) if all(m >= 0 for m in nu.varpi)]
    if len(highs) != 1:
        raise RootDataError(f"orbit of {mu} has {len(highs)} dominant elements")
    return highs[0]


def fundamental_finite(cartan: CartanData, i: int) -> FiniteWeight:
    return FiniteWeight(tuple(int(k == i) for k in cartan.finite_nodes))


def euclidean_to_finite(cartan: CartanData, vec: Sequence[Fraction]) -> FiniteWeight:
    """Coroot pairings of a vector given in epsilon coordinates."""
    out = []
    for i in cartan.finite_nodes:
        a = cartan.euclidean_roots[i]
        v = 2 * _dot(vec, a) / _dot(a, a)
        if v.denominator != 1:
            raise RootDataError(f"{vec} is not integral")
        out.append(int(v))
    return FiniteWeight(tuple(out))


FIXTURE_TYPES: tuple[tuple[str, int], ...] = (
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 4), ("D", 5),
)
