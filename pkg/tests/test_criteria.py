import itertools

from afk.criteria import (
    IRREDUCIBLE, REDUCIBLE, UNDETERMINED, evaluate_natural, natural_pi_data, reducibility_criterion,
    trivial_filtration_criterion, verdict,
)
from afk.natmod import PiData, first_layer_dims, last_layer_dims
from afk.rootdata import AffineWeight, FiniteWeight, make_cartan


def W(*c, delta=0):
    return AffineWeight(tuple(c), delta)


def test_pi_data(nat):
    for fam, l, npi in (("A", 2, 1), ("C", 2, 1), ("B", 3, 2), ("D", 4, 2)):
        pi = natural_pi_data(nat(fam, l))
        assert pi.lambda_pi == FiniteWeight((1,) + (0,) * (l - 1))
        assert (pi.k, pi.m, pi.n_pi, pi.theta_pairing) == (1, 1, npi, 1)


def _b(m, lam):
    return trivial_filtration_criterion(m.cartan, lam, natural_pi_data(m), first_layer_dims(m), last_layer_dims(m))


def test_trivial_examples(nat):
    assert not _b(nat("A", 2), W(1, 0, 0))
    assert _b(nat("A", 2), W(0, 0, 0))
    assert not _b(nat("B", 3), W(1, 0, 0, 0, delta=7))


def test_trivial_false_on_every_nonzero_small_lambda(nat):
    for fam, l in (("A", 1), ("A", 2), ("A", 3), ("B", 3), ("C", 2), ("C", 3)):
        m = nat(fam, l)
        for c in itertools.product(range(3), repeat=l + 1):
            if any(c):
                assert not _b(m, W(*c))


def test_reducible_examples(nat):
    pi = natural_pi_data(nat("A", 2))
    assert reducibility_criterion(W(2, 0, 0), pi)
    assert not reducibility_criterion(W(1, 0, 0), pi)
    assert not reducibility_criterion(W(0, 1, 0), pi)


def test_delta_shift_invariance(nat):
    m = nat("C", 3)
    for c in itertools.product(range(3), repeat=4):
        for k in (-3, 5):
            assert evaluate_natural(m, W(*c)) == evaluate_natural(m, W(*c, delta=k))


def test_general_pi_data_is_used_as_given():
    c = make_cartan("A", 2)
    pi = PiData(FiniteWeight((3, 0)), k=1, m=1, n_pi=1, theta_pairing=3)
    # (Lambda + lambda_pi | alpha_1) = 3 > 2 * (Lambda|delta) = 2 for Lambda = omega_0
    assert trivial_filtration_criterion(c, W(1, 0, 0), pi, {1: 1, 2: 0}, {1: 0, 2: 0})
    assert not trivial_filtration_criterion(c, W(1, 0, 0), pi, {1: 2, 2: 0}, {1: 0, 2: 0})
    assert reducibility_criterion(W(4, 0, 0), pi) and not reducibility_criterion(W(3, 0, 0), pi)


def test_verdicts(nat):
    assert verdict(True, False) == IRREDUCIBLE
    assert verdict(False, True) == REDUCIBLE
    assert verdict(False, False) == UNDETERMINED
    assert evaluate_natural(nat("A", 2), W(2, 0, 0)) == {
        "thmB_trivial": False, "thmC_reducible": True, "verdict": REDUCIBLE}
