"""Finite-dimensional U_q(sl2) modules and the F-power expansion on tensor products.

Coproduct convention: Delta(E) = E (x) 1 + K (x) E, Delta(F) = F (x) K^-1 + 1 (x) F,
K group-like.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import matrix as mx
from .qlaurent import ONE, ZERO, LaurentPoly, qint, qpow


@dataclass(frozen=True)
class Sl2Module:
    """V(n) in the basis v_0 (highest) .. v_n, over q^d."""

    n: int
    d: int
    E: tuple[tuple[LaurentPoly, ...], ...]
    F: tuple[tuple[LaurentPoly, ...], ...]
    K: tuple[tuple[LaurentPoly, ...], ...]
    Kinv: tuple[tuple[LaurentPoly, ...], ...]

    @property
    def dim(self) -> int:
        return self.n + 1

    def mat(self, name: str) -> mx.Matrix:
        return [list(row) for row in getattr(self, name)]

    def e_scalar(self, k: int) -> LaurentPoly:
        """E v_k = e_scalar(k) v_{k-1}."""
        return self.E[k - 1][k]

    def f_scalar(self, k: int) -> LaurentPoly:
        """F v_{k-1} = f_scalar(k) v_k."""
        return self.F[k][k - 1]


def _freeze(m: mx.Matrix):
    return tuple(tuple(row) for row in m)


def build_sl2(n: int, d: int = 1) -> Sl2Module:
    if n < 0:
        raise ValueError("highest weight must be nonnegative")
    dim = n + 1
    E, F = mx.zeros(dim), mx.zeros(dim)
    for k in range(dim):
        if k >= 1:
            E[k - 1][k] = qint(n - k + 1, d)
        if k + 1 < dim:
            F[k + 1][k] = qint(k + 1, d)
    K = mx.diag([qpow(d * (n - 2 * k)) for k in range(dim)])
    Kinv = mx.diag([qpow(-d * (n - 2 * k)) for k in range(dim)])
    return Sl2Module(n, d, _freeze(E), _freeze(F), _freeze(K), _freeze(Kinv))


def commutator_rhs(K: mx.Matrix, Kinv: mx.Matrix, d: int = 1) -> mx.Matrix:
    """(K - K^-1)/(q^d - q^-d) by exact entrywise division."""
    den = qpow(d) - qpow(-d)
    return [[x / den for x in row] for row in mx.matsub(K, Kinv)]


def check_commutator(m: Sl2Module) -> bool:
    E, F = m.mat("E"), m.mat("F")
    lhs = mx.matsub(mx.matmul(E, F), mx.matmul(F, E))
    return lhs == commutator_rhs(m.mat("K"), m.mat("Kinv"), m.d)


def delta_f(left: Sl2Module, right: Sl2Module) -> mx.Matrix:
    return mx.matadd(mx.kron(left.mat("F"), right.mat("Kinv")),
                     mx.kron(mx.identity(left.dim), right.mat("F")))


def delta_e(left: Sl2Module, right: Sl2Module) -> mx.Matrix:
    return mx.matadd(mx.kron(left.mat("E"), mx.identity(right.dim)),
                     mx.kron(left.mat("K"), right.mat("E")))


def delta_k(left: Sl2Module, right: Sl2Module, inverse: bool = False) -> mx.Matrix:
    name = "Kinv" if inverse else "K"
    return mx.kron(left.mat(name), right.mat(name))


def tensor_f_power(left: Sl2Module, right: Sl2Module, p: int) -> mx.Matrix:
    """Matrix of Delta(F)^p on left (x) right; basis index i*dim(right)+j."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    return mx.matpow(delta_f(left, right), p)


def check_hopf_commutator(left: Sl2Module, right: Sl2Module) -> bool:
    E, F = delta_e(left, right), delta_f(left, right)
    lhs = mx.matsub(mx.matmul(E, F), mx.matmul(F, E))
    return lhs == commutator_rhs(delta_k(left, right), delta_k(left, right, True), left.d)


def _basis(dim: int, k: int) -> list[LaurentPoly]:
    return [ONE if i == k else ZERO for i in range(dim)]


@dataclass(frozen=True)
class ExpansionResult:
    n_lambda: int
    string_dim: int
    start: int
    coefficients: tuple[tuple[LaurentPoly, LaurentPoly], ...]  # (numerator, denominator), k = 1..
    verified: bool

    def coefficient_strings(self) -> list[str]:
        out = []
        for num, den in self.coefficients:
            out.append(str(num) if den == ONE else f"({num})/({den})")
        return out


def f_power_expansion_check(n_lambda: int, string_dim: int, start: int = 0, d: int = 1) -> ExpansionResult:
    """Expand Delta(F)^{N+1}(v_0 (x) u) along Delta(F)^{N+1-k}(v_0 (x) F^k u).

    v_0 is the highest vector of V(N), N = n_lambda, and u = u_start in V(string_dim - 1).
    Solves exactly for the coefficients c_k, k = 1..N+1, over Q(q) and
    re-verifies the identity by clearing denominators.
    """
    if n_lambda < 0 or string_dim < 1:
        raise ValueError("need n_lambda >= 0 and string_dim >= 1")
    left = build_sl2(n_lambda, d)
    right = build_sl2(string_dim - 1, d)
    dimR = right.dim
    v0 = _basis(left.dim, 0)
    u = _basis(dimR, start)
    Fr = right.mat("F")
    DF = delta_f(left, right)

    def tensor(x, y):
        return [a * b for a in x for b in y]

    def df_power(vec, p):
        for _ in range(p):
            vec = mx.apply(DF, vec)
        return vec

    p = n_lambda + 1
    target = df_power(tensor(v0, u), p)
    columns = []
    Fku = u
    for k in range(1, p + 1):
        Fku = mx.apply(Fr, Fku)
        columns.append(df_power(tensor(v0, Fku), p - k))
    sol = mx.solve_fraction_free(columns, target)
    if sol is None:
        return ExpansionResult(n_lambda, string_dim, start, (), False)
    # independent re-check: sum_k num_k * (D / den_k) * column_k == D * target
    D = ONE
    for _, den in sol:
        D = D * den
    acc = [ZERO] * len(target)
    for (num, den), col in zip(sol, columns):
        w = num * (D / den)
        acc = [a + w * c for a, c in zip(acc, col)]
    verified = acc == [D * t for t in target]
    return ExpansionResult(n_lambda, string_dim, start, tuple(sol), verified)


def string_products(n: int, d: int = 1) -> list[LaurentPoly]:
    """Gauge-invariant products e_k f_k = [n-k+1][k] along V(n), k = 1..n."""
    m = build_sl2(n, d)
    return [m.e_scalar(k) * m.f_scalar(k) for k in range(1, n + 1)]

