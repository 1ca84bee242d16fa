"""Natural-representation loop modules over the quantum affine algebra.

The basis w_0 .. w_N of V = V(varpi_1) is built from explicit E-paths out of
the highest weight vector; each defining arrow carries the scalar 1.  The
remaining E-arrows and all F-arrows get the scalars forced by the defining
relations (see :func:`solve_scalars`).  The loop module L(V) has basis
w_j t^n, and a generator of degree k shifts the t-exponent by k (only E_0 and
F_0 have nonzero degree).
"""
from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import matrix as mx
from .qlaurent import ONE, ZERO, InexactDivisionError, LaurentPoly, parse_laurent, qbinom, qpow
from .rootdata import (
    CartanData,
    FiniteWeight,
    finite_simple_root,
    fundamental_finite,
    lowest_weight_in_orbit,
    make_cartan,
    theta_coroot_pairing,
    weyl_orbit,
)
from .sl2check import string_products


class InconsistentTableError(ValueError):
    """No scalar assignment makes the action tables satisfy the relations."""


Arrow = tuple[int, int, int]  # (generator index i, source basis index, target basis index)


def module_dim(family: str, rank: int) -> int:
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]


def defining_arrows(family: str, rank: int) -> list[Arrow]:
    """The E-arrows that define w_1, ..., w_N (and close the cycle in types A, C)."""
    l = rank
    if family == "A":
        arrows = [(0, 0, 1)]
        for j in range(2, l + 2):
            arrows.append((l - j + 2, j - 1, j % (l + 1)))
        return arrows
    if family == "C":
        arrows = [(j - 1, j - 1, j) for j in range(1, l + 2)]
        for j in range(1, l):
            arrows.append((l - j, l + j, (l + j + 1) % (2 * l)))
        return arrows
    if family == "B":
        arrows = [(0, 0, 1)]
        arrows += [(j, j - 1, j) for j in range(2, l + 1)]
        arrows += [(l - j, l + j, l + j + 1) for j in range(0, l - 1)]
        arrows.append((0, 2 * l - 1, 2 * l))
        return arrows
    if family == "D":
        arrows = [(0, 0, 1)]
        arrows += [(j, j - 1, j) for j in range(2, l)]
        arrows.append((l, l - 2, l))
        arrows.append((l, l - 1, l + 1))
        arrows += [(l - j, l + j - 1, l + j) for j in range(2, l - 1)]
        arrows.append((0, 2 * l - 2, 2 * l - 1))
        return arrows
    raise ValueError(f"unsupported family {family!r}")


def consistency_arrows(family: str, rank: int) -> list[Arrow]:
    """Second definitions of an already-defined vector; their scalar is solved, not fixed."""
    if family == "D":
        return [(rank - 1, rank, rank + 1)]
    return []


def listed_f_arrows(family: str, rank: int) -> list[Arrow] | None:
    """Nonzero F-entries (i, source, target) as tabulated for types A and B."""
    l = rank
    if family == "A":
        # F_j w_{i+1} = delta_{j, l-i+1} w_i, indices of w mod l+1, F_{l+1} = F_0
        return [((l - i + 1) % (l + 1), (i + 1) % (l + 1), i) for i in range(l + 1)]
    if family == "B":
        arrows = [(1, 0, 2 * l - 1), (1, 1, 2 * l), (0, 1, 0)]
        arrows += [(j, j, j - 1) for j in range(2, l + 1)]
        arrows += [(l - j, l + j + 1, l + j) for j in range(0, l - 1)]
        arrows.append((0, 2 * l, 2 * l - 1))
        return arrows
    return None


def closed_form_n(family: str, rank: int, j: int) -> int:
    l = rank
    base = 1 - int(j == 0)
    if family in ("A", "C"):
        return base
    if family == "B":
        return base + int(j == 2 * l)
    if family == "D":
        return base + int(j == 2 * l - 1)
    raise ValueError(family)


# -- weights and arrows -------------------------------------------------------


def basis_weights(cartan: CartanData, arrows: Sequence[Arrow], dim: int) -> tuple[FiniteWeight, ...]:
    """Propagate weights from wt(w_0) = varpi_1 along the defining arrows."""
    wt: dict[int, FiniteWeight] = {0: fundamental_finite(cartan, 1)}
    pending = list(arrows)
    while pending:
        rest = []
        for i, src, dst in pending:
            if src not in wt:
                rest.append((i, src, dst))
                continue
            w = wt[src] + finite_simple_root(cartan, i)
            if dst in wt and wt[dst] != w:
                raise InconsistentTableError(f"w_{dst} reached with weights {wt[dst]} and {w}")
            wt[dst] = w
        if len(rest) == len(pending):
            raise InconsistentTableError("defining arrows do not reach every basis vector")
        pending = rest
    if sorted(wt) != list(range(dim)):
        raise InconsistentTableError("defining arrows do not produce a full basis")
    weights = tuple(wt[j] for j in range(dim))
    if len(set(weights)) != dim:
        raise InconsistentTableError("weight spaces are not one-dimensional")
    return weights


def all_e_arrows(cartan: CartanData, weights: Sequence[FiniteWeight]) -> list[Arrow]:
    index = {w: j for j, w in enumerate(weights)}
    out = []
    for i in cartan.nodes:
        a = finite_simple_root(cartan, i)
        for j, w in enumerate(weights):
            k = index.get(w + a)
            if k is not None:
                out.append((i, j, k))
    return sorted(out)


# -- scalar solving ------------------------------------------------------------


@dataclass(frozen=True)
class ScalarAssignment:
    e: Mapping[tuple[int, int], LaurentPoly]  # (i, src) -> scalar of E_i w_src
    f: Mapping[tuple[int, int], LaurentPoly]  # (i, src) -> scalar of F_i w_src
    notes: tuple[str, ...]


def i_strings(arrows: Iterable[Arrow], i: int) -> list[list[int]]:
    """Maximal E_i-chains, each listed from the top (E_i-annihilated) vector down."""
    up = {src: dst for k, src, dst in arrows if k == i}
    down = {dst: src for src, dst in up.items()}
    tops = sorted(v for v in down if v not in up)
    strings = []
    for t in tops:
        s = [t]
        while s[-1] in down:
            s.append(down[s[-1]])
        strings.append(s)
    return strings


def solve_scalars(
    cartan: CartanData,
    arrows: Sequence[Arrow],
    defining: Iterable[Arrow],
    fixed_f: Mapping[tuple[int, int], LaurentPoly] | None = None,
) -> ScalarAssignment:
    """Assign scalars to all E- and F-arrows so that the relations can hold.

    E-scalars on ``defining`` arrows are 1.  Other E-scalars are propagated
    through commuting squares (E_i E_j = E_j E_i when a_ij = 0); a scalar left
    undetermined is a genuine free parameter and is set to 1, unless a fixed
    F-entry pins it.  F-scalars then follow string by string from
    e_k f_k = [n-k+1]_i [k]_i on each (n+1)-dimensional i-string.
    """
    fixed_f = dict(fixed_f or {})
    tgt = {(i, s): t for i, s, t in arrows}
    src_of = defaultdict(list)  # (i, dst) -> [src]
    for i, s, t in arrows:
        src_of[(i, t)].append(s)
    e: dict[tuple[int, int], LaurentPoly] = {}
    for i, s, t in defining:
        if tgt.get((i, s)) != t:
            raise InconsistentTableError(f"defining arrow E_{i} w_{s} -> w_{t} is not weight-compatible")
        e[(i, s)] = ONE
    notes: list[str] = []
    commuting = [(i, j) for i in cartan.nodes for j in cartan.nodes
                 if i != j and cartan.a(i, j) == 0]

    def square_value(i: int, u: int):
        v = tgt[(i, u)]
        for a, j in commuting:
            if a != i:
                continue
            # forward: E_i E_j u = E_j E_i u
            if (j, u) in tgt:
                u1 = tgt[(j, u)]
                if (i, u1) in tgt and (j, v) in tgt and tgt[(i, u1)] == tgt[(j, v)]:
                    ks = [(j, u), (i, u1), (j, v)]
                    if all(k in e for k in ks):
                        return e[(j, u)] * e[(i, u1)] / e[(j, v)]
            # backward: E_i E_j u0 = E_j E_i u0 with E_j u0 = u
            for u0 in src_of.get((j, u), ()):
                if (i, u0) in tgt and (j, tgt[(i, u0)]) in tgt and tgt[(j, tgt[(i, u0)])] == v:
                    v0 = tgt[(i, u0)]
                    ks = [(i, u0), (j, v0), (j, u0)]
                    if all(k in e for k in ks):
                        return e[(i, u0)] * e[(j, v0)] / e[(j, u0)]
        return None

    strings = {i: i_strings(arrows, i) for i in cartan.nodes}
    products = {}
    for i in cartan.nodes:
        for s in strings[i]:
            n = len(s) - 1
            prods = string_products(n, cartan.d[i])
            for k in range(1, n + 1):
                # E_i s[k] -> s[k-1]; F_i s[k-1] -> s[k]
                products[(i, s[k])] = (s[k - 1], prods[k - 1])

    unknown = sorted(k for k in tgt if k not in e)
    while unknown:
        progress = True
        while progress:
            progress = False
            for k in list(unknown):
                val = square_value(*k)
                if val is not None:
                    e[k] = val
                    unknown.remove(k)
                    progress = True
        if not unknown:
            break
        # a free parameter: pinned by a fixed F-entry if one is given, else 1
        k = unknown.pop(0)
        i, s = k
        upper, prod = products[k]
        if (i, upper) in fixed_f:
            fv = fixed_f[(i, upper)]
            if not fv:
                raise InconsistentTableError(
                    f"F_{i} w_{upper} forced to 0, but [E_{i},F_{i}] needs E_{i}F_{i} w_{upper} = ({prod}) w_{upper}")
            try:
                e[k] = prod / fv
            except InexactDivisionError as exc:
                raise InconsistentTableError(f"fixed F_{i} w_{upper} = {fv} is not supported: {exc}") from None
            notes.append(f"free parameter E_{i} w_{s} -> w_{upper} set to {e[k]} by fixed F_{i} w_{upper} = {fv}")
        else:
            e[k] = ONE
            notes.append(f"free parameter E_{i} w_{s} -> w_{upper} set to 1")

    # every commuting square must close
    for (i, u), v in tgt.items():
        val = square_value(i, u)
        if val is not None and val != e[(i, u)]:
            raise InconsistentTableError(f"commuting square through E_{i} w_{u} does not close")

    f: dict[tuple[int, int], LaurentPoly] = {}
    for (i, s), (upper, prod) in products.items():
        f[(i, upper)] = prod / e[(i, s)]
    for key, val in fixed_f.items():
        if key not in f:
            if val:
                raise InconsistentTableError(f"F_{key[0]} w_{key[1]} must vanish by weight")
            continue
        if f[key] != val:
            raise InconsistentTableError(
                f"F_{key[0]} w_{key[1]} forced to {val}, relations require {f[key]}")
    return ScalarAssignment(e=e, f=f, notes=tuple(notes))


# -- the module -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class NatModule:
    cartan: CartanData
    weights: tuple[FiniteWeight, ...]
    # i -> {src: (dst, scalar)}
    e_action: Mapping[int, Mapping[int, tuple[int, LaurentPoly]]]
    f_action: Mapping[int, Mapping[int, tuple[int, LaurentPoly]]]
    notes: tuple[str, ...] = ()
    # K_i w_j = q^{k_exp[i][j]} w_j
    k_exp: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def family(self) -> str:
        return self.cartan.family

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def index_of(self, mu: FiniteWeight) -> int | None:
        try:
            return self.weights.index(mu)
        except ValueError:
            return None

    def e_arrows(self) -> list[Arrow]:
        return sorted((i, s, t) for i, tab in self.e_action.items() for s, (t, c) in tab.items() if c)

    def f_arrows(self) -> list[Arrow]:
        return sorted((i, s, t) for i, tab in self.f_action.items() for s, (t, c) in tab.items() if c)

    def matrix(self, kind: str, i: int) -> mx.Matrix:
        """Matrix of E_i, F_i or K_i on V (columns = source)."""
        m = mx.zeros(self.dim)
        if kind == "K":
            for j in range(self.dim):
                m[j][j] = qpow(self.k_exp[i][j])
            return m
        tab = self.e_action if kind == "E" else self.f_action
        for s, (t, c) in tab[i].items():
            m[t][s] = c
        return m


def _k_exponents(cartan: CartanData, weights: Sequence[FiniteWeight]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for i in cartan.nodes:
        if i == 0:
            # level zero: K_0 = prod_{i in I} K_i^{-a_i}
            rows.append(tuple(-sum(cartan.marks[k] * cartan.d[k] * w.varpi[k - 1]
                                   for k in cartan.finite_nodes) for w in weights))
        else:
            rows.append(tuple(cartan.d[i] * w.varpi[i - 1] for w in weights))
    return tuple(rows)


def build_natural(
    cartan: CartanData | tuple[str, int],
    fixed_f: Mapping[tuple[int, int], LaurentPoly] | None = None,
) -> NatModule:
    if not isinstance(cartan, CartanData):
        cartan = make_cartan(*cartan)
    fam, l = cartan.family, cartan.rank
    dim = module_dim(fam, l)
    defining = defining_arrows(fam, l)
    weights = basis_weights(cartan, defining + consistency_arrows(fam, l), dim)
    arrows = all_e_arrows(cartan, weights)
    sol = solve_scalars(cartan, arrows, defining, fixed_f)
    e_action: dict[int, dict[int, tuple[int, LaurentPoly]]] = {i: {} for i in cartan.nodes}
    f_action: dict[int, dict[int, tuple[int, LaurentPoly]]] = {i: {} for i in cartan.nodes}
    for i, s, t in arrows:
        e_action[i][s] = (t, sol.e[(i, s)])
        f_action[i][t] = (s, sol.f[(i, t)])
    return NatModule(cartan, weights, e_action, f_action, sol.notes, _k_exponents(cartan, weights))


def with_tables(m: NatModule, e_action=None, f_action=None) -> NatModule:
    """A copy of ``m`` with replaced tables (used for negative controls)."""
    return NatModule(m.cartan, m.weights, e_action or m.e_action, f_action or m.f_action, m.notes, m.k_exp)


def corrupt_f(m: NatModule, i: int, src: int | None = None, value: LaurentPoly = ZERO) -> NatModule:
    """Overwrite F_i (all entries, or the one on w_src) with ``value``."""
    f = {k: dict(v) for k, v in m.f_action.items()}
    for s, (t, _) in list(f[i].items()):
        if src is None or s == src:
            f[i][s] = (t, value)
    return with_tables(m, f_action=f)


# -- loop vectors and the action ----------------------------------------------------


class LoopVector:
    """Finitely supported combination of w_j t^n with LaurentPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LaurentPoly] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, j: int, n: int, coeff: LaurentPoly = ONE) -> "LoopVector":
        return cls({(j, n): coeff})

    def __add__(self, other: "LoopVector") -> "LoopVector":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return LoopVector(out)

    def scale(self, c: LaurentPoly) -> "LoopVector":
        return LoopVector({k: c * v for k, v in self.terms.items()})

    def __sub__(self, other: "LoopVector") -> "LoopVector":
        return self + other.scale(-ONE)

    def __eq__(self, other) -> bool:
        return isinstance(other, LoopVector) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def divide(self, c: LaurentPoly) -> "LoopVector":
        return LoopVector({k: v / c for k, v in self.terms.items()})

    def t_exponents(self) -> set[int]:
        return {n for _, n in self.terms}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({v}) w_{j} t^{n}" for (j, n), v in sorted(self.terms.items()))


class Gen(NamedTuple):
    kind: str  # "E", "F", "K", "D", "C"
    index: int = 0
    power: int = 1

    def __str__(self) -> str:
        if self.kind in ("E", "F"):
            return f"{self.kind}{self.index}"
        if self.kind == "K":
            return f"K{self.index}" + ("" if self.power == 1 else f"^{self.power}")
        return self.kind + ("" if self.power == 1 else f"^{self.power}")


def E(i: int) -> Gen:
    return Gen("E", i)


def F(i: int) -> Gen:
    return Gen("F", i)


def K(i: int, power: int = 1) -> Gen:
    return Gen("K", i, power)


def D(power: int = 1) -> Gen:
    return Gen("D", 0, power)


def degree(g: Gen) -> int:
    if g.kind == "E" and g.index == 0:
        return 1
    if g.kind == "F" and g.index == 0:
        return -1
    return 0


def act(m: NatModule, g: Gen, v: LoopVector) -> LoopVector:
    out: dict[tuple[int, int], LaurentPoly] = {}
    if g.kind in ("E", "F"):
        tab = (m.e_action if g.kind == "E" else m.f_action)[g.index]
        shift = degree(g)
        for (j, n), c in v.terms.items():
            hit = tab.get(j)
            if hit is None:
                continue
            t, s = hit
            key = (t, n + shift)
            out[key] = out.get(key, ZERO) + c * s
        return LoopVector(out)
    if g.kind == "K":
        row = m.k_exp[g.index]
        return LoopVector({(j, n): c * qpow(g.power * row[j]) for (j, n), c in v.terms.items()})
    if g.kind == "D":
        return LoopVector({(j, n): c * qpow(g.power * n) for (j, n), c in v.terms.items()})
    if g.kind == "C":
        # C^{+-1/2} acts trivially on a level-zero module
        return LoopVector(v.terms)
    raise ValueError(f"unknown generator {g}")


def apply_word(m: NatModule, word: Sequence[Gen], v: LoopVector,
               window: tuple[int, int] | None = None) -> tuple[LoopVector, bool]:
    """Apply ``word`` (written left to right, acting right to left).

    Returns the image and whether any intermediate term left ``window``.
    """
    exited = False
    for g in reversed(word):
        v = act(m, g, v)
        if window is not None and any(n < window[0] or n > window[1] for n in v.t_exponents()):
            exited = True
    return v, exited


# -- relation verification ------------------------------------------------------------


Term = tuple[LaurentPoly, tuple[Gen, ...]]


@dataclass(frozen=True)
class Relation:
    rid: str
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]
    rhs_divisor: LaurentPoly = ONE


@dataclass(frozen=True)
class RelationCheck:
    rid: str
    passed: bool
    checked: int
    excluded: int
    detail: str = ""


@dataclass(frozen=True)
class RelationReport:
    name: str
    window: tuple[int, int]
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {self.name} {c.rid} checked={c.checked} excluded={c.excluded}"
            if c.detail:
                line += f" {c.detail}"
            out.append(line)
        return out

    def to_json(self) -> dict:
        return {
            "module": self.name,
            "window": list(self.window),
            "ok": self.ok,
            "checks": [
                {"id": c.rid, "passed": c.passed, "checked": c.checked, "excluded": c.excluded, "detail": c.detail}
                for c in self.checks
            ],
        }


def relations(cartan: CartanData) -> list[Relation]:
    nodes = list(cartan.nodes)
    rels: list[Relation] = []
    one = ONE
    for i in nodes:
        qi = cartan.d[i]
        rels.append(Relation(f"KKinv[{i}]", ((one, (K(i), K(i, -1))),), ((one, ()),)))
        for j in nodes:
            a = cartan.a(i, j)
            rels.append(Relation(f"KEK[{i},{j}]", ((one, (K(i), E(j), K(i, -1))),), ((qpow(qi * a), (E(j),)),)))
            rels.append(Relation(f"KFK[{i},{j}]", ((one, (K(i), F(j), K(i, -1))),), ((qpow(-qi * a), (F(j),)),)))
            if j > i:
                rels.append(Relation(f"KK[{i},{j}]", ((one, (K(i), K(j))),), ((one, (K(j), K(i))),)))
            lhs = ((one, (E(i), F(j))), (-one, (F(j), E(i))))
            if i == j:
                rhs = ((one, (K(i),)), (-one, (K(i, -1),)))
                rels.append(Relation(f"EF[{i},{j}]", lhs, rhs, qpow(qi) - qpow(-qi)))
            else:
                rels.append(Relation(f"EF[{i},{j}]", lhs, ()))
            if i != j:
                N = 1 - a
                for X, name in ((E, "serreE"), (F, "serreF")):
                    terms = []
                    for r in range(N + 1):
                        c = qbinom(N, r, qi) * (-1) ** r
                        terms.append((c, (X(i),) * r + (X(j),) + (X(i),) * (N - r)))
                    rels.append(Relation(f"{name}[{i},{j}]", tuple(terms), ()))
        rels.append(Relation(f"DK[{i}]", ((one, (D(), K(i))),), ((one, (K(i), D())),)))
        delta0 = int(i == 0)
        rels.append(Relation(f"DED[{i}]", ((one, (D(), E(i), D(-1))),), ((qpow(delta0), (E(i),)),)))
        rels.append(Relation(f"DFD[{i}]", ((one, (D(), F(i), D(-1))),), ((qpow(-delta0), (F(i),)),)))
    central = (K(0),) + tuple(K(i, cartan.marks[i]) for i in cartan.finite_nodes)
    rels.append(Relation("level", ((one, central),), ((one, ()),)))
    for i in nodes:
        rels.append(Relation(f"Ccentral[E{i}]", ((one, central + (E(i),)),), ((one, (E(i),) + central),)))
        rels.append(Relation(f"Ccentral[F{i}]", ((one, central + (F(i),)),), ((one, (F(i),) + central),)))
    rels.append(Relation("DDinv", ((one, (D(), D(-1))),), ((one, ()),)))
    return rels


def _side(m: NatModule, terms: Sequence[Term], v: LoopVector, window) -> tuple[LoopVector, bool]:
    acc = LoopVector()
    exited = False
    for c, word in terms:
        w, ex = apply_word(m, word, v, window)
        exited |= ex
        acc = acc + w.scale(c)
    return acc, exited


def verify_relations(m: NatModule, window: tuple[int, int] = (-3, 3)) -> RelationReport:
    lo, hi = window
    if hi - lo + 1 < 3:
        raise ValueError("window must contain at least 3 t-exponents")
    checks = []
    basis = [LoopVector.basis(j, n) for n in range(lo, hi + 1) for j in range(m.dim)]
    for rel in relations(m.cartan):
        checked = excluded = 0
        detail = ""
        for v in basis:
            left, ex1 = _side(m, rel.lhs, v, window)
            right, ex2 = _side(m, rel.rhs, v, window)
            if ex1 or ex2:
                excluded += 1
                continue
            if rel.rhs_divisor != ONE:
                right = right.divide(rel.rhs_divisor)
            checked += 1
            if left != right and not detail:
                (j, n), = v.terms
                detail = f"fails on w_{j} t^{n}: lhs={left!r} rhs={right!r}"
        checks.append(RelationCheck(rel.rid, not detail, checked, excluded, detail))
    checks.sort(key=lambda c: c.rid)
    return RelationReport(f"{m.family}{m.rank}", window, tuple(checks))


# -- degree function and first-layer data ------------------------------------------------


def n_values(m: NatModule) -> list[int]:
    """Minimal number of E_0-steps over E-paths from w_0 to each w_j."""
    INF = float("inf")
    dist = [INF] * m.dim
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        dcur, u = heapq.heappop(heap)
        if dcur > dist[u]:
            continue
        for i, tab in m.e_action.items():
            hit = tab.get(u)
            if hit is None or not hit[1]:
                continue
            v = hit[0]
            nd = dcur + (1 if i == 0 else 0)
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    if any(x == INF for x in dist):
        raise InconsistentTableError("some basis vector is unreachable from w_0")
    return [int(x) for x in dist]


def n_of(m: NatModule, j: int) -> int:
    return n_values(m)[j]


def first_layer_dims(m: NatModule) -> dict[int, int]:
    """dim V_{varpi_1 - alpha_i} for i in I."""
    top = fundamental_finite(m.cartan, 1)
    return {i: int(top - finite_simple_root(m.cartan, i) in m.weights) for i in m.cartan.finite_nodes}


def last_layer_dims(m: NatModule) -> dict[int, int]:
    """dim V_{w0 varpi_1 + alpha_i} for i in I."""
    low = lowest_weight_in_orbit(m.cartan, fundamental_finite(m.cartan, 1))
    return {i: int(low + finite_simple_root(m.cartan, i) in m.weights) for i in m.cartan.finite_nodes}


def _min_nonzero(dims: Mapping[int, int]) -> int:
    vals = [x for x in dims.values() if x]
    if not vals:
        raise InconsistentTableError("no nonzero first-layer weight space")
    return min(vals)


def k_of_natural(m: NatModule) -> int:
    return _min_nonzero(first_layer_dims(m))


def k_star_of_natural(m: NatModule) -> int:
    return _min_nonzero(last_layer_dims(m))


# -- structural checks ----------------------------------------------------------------------


def nilpotency_violations(m: NatModule) -> list[str]:
    """E_i^p = F_i^p = 0 with p = 2, except p = 3 for the short node of type B."""
    bad = []
    for i in m.cartan.nodes:
        p = 3 if (m.family == "B" and i == m.rank) else 2
        for kind in ("E", "F"):
            M = m.matrix(kind, i)
            if not mx.is_zero(mx.matpow(M, p)):
                bad.append(f"{kind}{i}^{p} != 0")
    return bad


def e0_power_violations(m: NatModule) -> list[str]:
    """E_0^{p+1} = F_0^{p+1} = 0 with p = varpi_1(theta^vee)."""
    p = theta_coroot_pairing(m.cartan, fundamental_finite(m.cartan, 1))
    bad = []
    for kind in ("E", "F"):
        if not mx.is_zero(mx.matpow(m.matrix(kind, 0), p + 1)):
            bad.append(f"{kind}0^{p + 1} != 0")
    return bad


def degree_inequality_violations(m: NatModule) -> list[str]:
    """n(E_i w) <= n(w), n(E_0 w) <= n(w)+1, n(F_i w) <= n(w) + dim V_{varpi_1-alpha_i}, n(F_0 w) <= n(w)-1."""
    n = n_values(m)
    dims = first_layer_dims(m)
    bad = []
    for i in m.cartan.nodes:
        for kind, tab in (("E", m.e_action[i]), ("F", m.f_action[i])):
            for s, (t, c) in tab.items():
                if not c:
                    continue
                if kind == "E":
                    bound = n[s] + (1 if i == 0 else 0)
                else:
                    bound = n[s] - 1 if i == 0 else n[s] + dims[i]
                if n[t] > bound:
                    bad.append(f"n({kind}{i} w_{s}) = {n[t]} > {bound}")
    return bad


def level_zero_ok(m: NatModule) -> bool:
    for j in range(m.dim):
        e = m.k_exp[0][j] + sum(m.cartan.marks[i] * m.k_exp[i][j] for i in m.cartan.finite_nodes)
        if e:
            return False
    return True


def character_is_w_invariant(m: NatModule) -> bool:
    ws = set(m.weights)
    return all(weyl_orbit(m.cartan, w) <= ws for w in ws)


# -- serialisation --------------------------------------------------------------------------


def tables_to_json(m: NatModule) -> dict:
    def rows(tab):
        return [{"i": i, "from": s, "to": t, "scalar": str(c)}
                for i in sorted(tab) for s, (t, c) in sorted(tab[i].items())]

    return {"family": m.family, "rank": m.rank, "E": rows(m.e_action), "F": rows(m.f_action)}


def tables_from_json(obj: Mapping) -> NatModule:
    cartan = make_cartan(obj["family"], int(obj["rank"]))
    base = build_natural(cartan)
    e = {i: {} for i in cartan.nodes}
    f = {i: {} for i in cartan.nodes}
    for row in obj["E"]:
        e[int(row["i"])][int(row["from"])] = (int(row["to"]), parse_laurent(row["scalar"]))
    for row in obj["F"]:
        f[int(row["i"])][int(row["from"])] = (int(row["to"]), parse_laurent(row["scalar"]))
    return with_tables(base, e, f)


def highest_root_pairing(m: NatModule) -> int:
    return theta_coroot_pairing(m.cartan, fundamental_finite(m.cartan, 1))


@dataclass(frozen=True)
class PiData:
    """Numerical invariants of a Drinfeld-polynomial datum that the criteria need."""

    lambda_pi: FiniteWeight
    k: int
    m: int
    n_pi: int
    theta_pairing: int


__all__ = [
    "Arrow", "NatModule", "LoopVector", "Gen", "E", "F", "K", "D", "act", "apply_word",
    "build_natural", "solve_scalars", "verify_relations", "n_of", "n_values", "k_of_natural",
    "InconsistentTableError", "PiData",
]
