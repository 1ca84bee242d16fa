"""Aggregated invariant suite behind ``afk selftest``.

Every check returns (name, passed, detail).  The report is a plain list of
lines in a fixed order, so equal seeds give byte-identical output.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Sequence

from . import natmod as nm
from .criteria import evaluate_natural, natural_pi_data
from .crystal import crystal_graph, lambda_dominant_count
from .filtration import chain, chain_summands, decompose_quotient, omega_lambda, same_multiset
from .qlaurent import LaurentPoly, eval_at_one, qbinom, qint, qpow
from .rootdata import (
    FIXTURE_TYPES,
    AffineWeight,
    delta,
    embed,
    fundamental_finite,
    highest_root,
    lowest_weight_in_orbit,
    make_cartan,
    simple_root,
    theta_coroot_pairing,
)
from .sl2check import build_sl2, check_commutator, check_hopf_commutator, f_power_expansion_check

DEFAULT_SEED = 20240611
DEFAULT_SAMPLES = 200


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        s = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        return f"{s}: {self.detail}" if self.detail else s


# -- sampling ------------------------------------------------------------------------


def lambda_sweep(rank: int, samples: int, rng: random.Random) -> list[AffineWeight]:
    """Nonzero dominant Lambda with coordinates in {0,1,2}: exhaustive for rank <= 3, else sampled."""
    if rank <= 3:
        coords = [c for c in itertools.product(range(3), repeat=rank + 1) if any(c)]
    else:
        coords = []
        while len(coords) < samples:
            c = tuple(rng.randrange(3) for _ in range(rank + 1))
            if any(c):
                coords.append(c)
    return [AffineWeight(c, 0) for c in coords]


def random_laurent(rng: random.Random) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randrange(0, 5)):
        num = rng.randint(-20, 20)
        den = rng.choice([d for d in range(-20, 21) if d])
        terms[rng.randint(-6, 6)] = Fraction(num, den)
    return LaurentPoly(terms)


# -- individual suites ---------------------------------------------------------------


def check_qlaurent(samples: int, rng: random.Random) -> Iterator[CheckResult]:
    bad = [(m, r) for m in range(2, 9) for r in range(1, m)
           if qbinom(m, r) != qpow(r) * qbinom(m - 1, r) + qpow(r - m) * qbinom(m - 1, r - 1)]
    yield CheckResult("qlaurent.q_pascal", not bad, f"failures={bad}" if bad else "")
    bad = [(m, r, d) for m in range(9) for r in range(m + 1) for d in (1, 2, 3)
           if qbinom(m, r, d) != qbinom(m, r, d).bar()]
    yield CheckResult("qlaurent.palindromic", not bad, f"failures={bad}" if bad else "")
    bad = [(m, r) for m in range(11) for r in range(m + 1) if eval_at_one(qbinom(m, r)) != comb(m, r)]
    bad += [(m, "qint") for m in range(11) if eval_at_one(qint(m)) != m]
    yield CheckResult("qlaurent.specialization", not bad, f"failures={bad}" if bad else "")
    fails = 0
    for _ in range(samples):
        a, b, c = random_laurent(rng), random_laurent(rng), random_laurent(rng)
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c or (a + b) + c != a + (b + c):
            fails += 1
    yield CheckResult("qlaurent.ring_axioms", not fails, f"triples={samples} failures={fails}")


def check_rootdata(types: Sequence[tuple[str, int]]) -> Iterator[CheckResult]:
    for fam, l in types:
        c = make_cartan(fam, l)
        name = f"rootdata.{fam}{l}"
        sym = all(c.d[i] * c.a(i, j) == c.d[j] * c.a(j, i) for i in c.nodes for j in c.nodes)
        theta = embed(c, highest_root(c))
        summed = AffineWeight(tuple([0] * (l + 1)))
        for i in c.finite_nodes:
            summed = summed + simple_root(c, i).scale(c.marks[i])
        theta_ok = summed.omega == theta.omega
        alpha0_ok = simple_root(c, 0) == delta(c) - theta
        top = fundamental_finite(c, 1)
        low_ok = -theta_coroot_pairing(c, lowest_weight_in_orbit(c, top)) == theta_coroot_pairing(c, top)
        ok = sym and theta_ok and alpha0_ok and low_ok and c.marks[0] == 1 and c.comarks[0] == 1
        yield CheckResult(name, ok, f"symmetrizable={sym} theta={theta_ok} alpha0={alpha0_ok} w0={low_ok}")


def check_sl2() -> Iterator[CheckResult]:
    bad = [n for n in range(6) for d in (1, 2) if not check_commutator(build_sl2(n, d))]
    yield CheckResult("sl2.commutator", not bad, f"failures={bad}" if bad else "")
    bad = [(a, b) for a in range(4) for b in range(4) if not check_hopf_commutator(build_sl2(a), build_sl2(b))]
    yield CheckResult("sl2.hopf", not bad, f"failures={bad}" if bad else "")
    bad = [(n, s) for n in range(7) for s in (2, 3) if not f_power_expansion_check(n, s).verified]
    yield CheckResult("sl2.f_power_expansion", not bad, f"failures={bad}" if bad else "cases=14")


def check_module(m: nm.NatModule, window: tuple[int, int]) -> Iterator[CheckResult]:
    name = f"natmod.{m.family}{m.rank}"
    rep = nm.verify_relations(m, window)
    fails = rep.failures
    detail = f"instances={len(rep.checks)} failures={len(fails)}"
    if fails:
        detail += " first=" + fails[0].rid
    yield CheckResult(f"{name}.relations", rep.ok, detail)
    ns = nm.n_values(m)
    want = [nm.closed_form_n(m.family, m.rank, j) for j in range(m.dim)]
    yield CheckResult(f"{name}.n_closed_form", ns == want, f"n={ns}")
    k, ks = nm.k_of_natural(m), nm.k_star_of_natural(m)
    yield CheckResult(f"{name}.k", k == 1 and ks == k, f"k={k} k_star={ks}")
    bad = nm.nilpotency_violations(m) + nm.e0_power_violations(m)
    yield CheckResult(f"{name}.nilpotency", not bad, "; ".join(bad))
    bad = nm.degree_inequality_violations(m)
    yield CheckResult(f"{name}.degree_inequalities", not bad, "; ".join(bad[:3]))
    yield CheckResult(f"{name}.level_zero", nm.level_zero_ok(m))
    yield CheckResult(f"{name}.w_invariant", nm.character_is_w_invariant(m))


def check_sweeps(m: nm.NatModule, samples: int, rng: random.Random) -> Iterator[CheckResult]:
    name = f"{m.family}{m.rank}"
    lams = lambda_sweep(m.rank, samples, rng)
    cross = shift = strict = counts = 0
    remark = excl = 0
    pi = natural_pi_data(m)
    for lam in lams:
        for n in (-1, 0, 1):
            d = decompose_quotient(m, lam, n)
            if not same_multiset(d, chain_summands(chain(m, lam, n))):
                cross += 1
            up = decompose_quotient(m, lam, n + 1)
            if [s.highest_weight.shift_delta(1) for s in d] != [s.highest_weight for s in up]:
                shift += 1
        if not any(s.is_strict for s in chain(m, lam, 0).steps):
            strict += 1
        if lambda_dominant_count(m, lam) != len(omega_lambda(m, lam)):
            counts += 1
        ev = evaluate_natural(m, lam)
        if ev["thmB_trivial"]:
            remark += 1
        if ev["thmC_reducible"] != (lam.omega[0] >= pi.theta_pairing + 1):
            remark += 1
        if ev["thmB_trivial"] and ev["thmC_reducible"]:
            excl += 1
    n_l = len(lams)
    yield CheckResult(f"filtration.{name}.cross_engine", not cross, f"lambdas={n_l} mismatches={cross}")
    yield CheckResult(f"filtration.{name}.delta_shift", not shift, f"mismatches={shift}")
    yield CheckResult(f"filtration.{name}.strict", not strict, f"all_collapsed={strict}")
    yield CheckResult(f"criteria.{name}.remark", not remark and not excl, f"violations={remark} both_true={excl}")
    yield CheckResult(f"crystal.{name}.count", not counts, f"mismatches={counts}")
    g = crystal_graph(m)
    ok = g.degree_ok() and g.is_connected() and len(g.edges) == len(m.e_arrows())
    if m.family == "A":
        ok = ok and g.is_single_cycle()
    yield CheckResult(f"crystal.{name}.graph", ok, f"edges={len(g.edges)}")


def parse_corruption(text: str) -> tuple[str, int]:
    """'F1' or 'E0' -> ('F', 1)."""
    text = text.strip()
    if len(text) < 2 or text[0] not in "EF" or not text[1:].isdigit():
        raise ValueError(f"corruption must look like F1 or E0, got {text!r}")
    return text[0], int(text[1:])


def corrupt(m: nm.NatModule, kind: str, i: int) -> nm.NatModule:
    if i not in m.cartan.nodes:
        return m
    if kind == "F":
        return nm.corrupt_f(m, i)
    e = {k: dict(v) for k, v in m.e_action.items()}
    e[i] = {s: (t, LaurentPoly()) for s, (t, _) in e[i].items()}
    return nm.with_tables(m, e_action=e)


def run_selftest(
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    window: tuple[int, int] = (-3, 3),
    types: Sequence[tuple[str, int]] = FIXTURE_TYPES,
    corruption: tuple[str, int] | None = None,
    progress: Callable[[CheckResult], None] | None = None,
) -> tuple[bool, list[str]]:
    rng = random.Random(seed)
    results: list[CheckResult] = []

    def add(items):
        for r in items:
            results.append(r)
            if progress:
                progress(r)

    add(check_qlaurent(samples, rng))
    add(check_rootdata(types))
    add(check_sl2())
    for fam, l in types:
        m = nm.build_natural(make_cartan(fam, l))
        if corruption:
            m = corrupt(m, *corruption)
        add(check_module(m, window))
        add(check_sweeps(m, samples, rng))
    ok = all(r.passed for r in results)
    lines = [f"selftest seed={seed} samples={samples} window={window[0]},{window[1]}"]
    lines += [r.line() for r in results]
    npass = sum(r.passed for r in results)
    lines.append(f"summary: {npass} passed, {len(results) - npass} failed")
    return ok, lines
