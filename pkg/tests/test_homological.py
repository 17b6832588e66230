from __future__ import annotations

from itertools import permutations

import pytest

from coljones.braid import BraidWord, mirror, standard_knots
from coljones.errors import BudgetExceeded, NotAKnot
from coljones.homological import (
    HomClass,
    PairingMatrix,
    budget_cap,
    check_budget,
    class_F0,
    class_F_global,
    class_F_specialised,
    class_G,
    class_G_global,
    inversions,
    jones_global,
    jones_homological,
    pair,
    pairing_polynomial,
)
from coljones.hwspace import _expansion, enumerate_partitions, hw_basis_vector, kohno_theta
from coljones.quantum import apply_coproduct_E, coev_normalized, colour, ev_normalized, jones_rt
from coljones.ring import LaurentPoly, RationalFunc, RingHom
from winding_oracle import half_twists, winding_polynomial

q = LaurentPoly.gen("q")
XD = ("x", "d")
d = LaurentPoly.gen("d", XD)
ONE = LaurentPoly.const(1, XD)


# pairing polynomials


def test_pairing_polynomial_examples():
    assert pairing_polynomial((1,)) == ONE
    assert pairing_polynomial((0,)) == ONE
    assert pairing_polynomial((2,)) == 1 + d
    assert pairing_polynomial((2, 1)) == 1 + d
    assert pairing_polynomial((3,)) == (1 + d) * (1 + d + d**2)


def test_pairing_specialisation_example():
    assert RingHom("alpha", 1)(pairing_polynomial((2,))) == RationalFunc(1 - q**-2)


@pytest.mark.parametrize("k", range(1, 5))
def test_winding_oracle_matches_inversions(k):
    signs = set()
    for sigma in permutations(range(1, k + 1)):
        t = half_twists(sigma)
        assert abs(t) == inversions(sigma)
        if t:
            signs.add(t > 0)
    # one orientation for every permutation: all exchanges are clockwise
    assert signs <= {False}
    poly = winding_polynomial(k, clockwise=True)
    assert LaurentPoly({(0, e): c for e, c in poly.items()}, XD) == pairing_polynomial((k,))
    ccw = winding_polynomial(k, clockwise=False)
    assert LaurentPoly({(0, e): c for e, c in ccw.items()}, XD) == pairing_polynomial((k,)).bar()


def test_pairing_polynomial_structure():
    for n in range(2, 8):
        for m in range(0, 9 - n):
            for e in enumerate_partitions(n, m):
                p = pairing_polynomial(e)
                assert p == pairing_polynomial(e, enumerate_all=True)
                assert all(c > 0 for c in p.terms.values())
                assert all(ex[0] == 0 and ex[1] >= 0 for ex in p.terms)
                assert p.coefficient((0, 0)) == 1
                expected = ONE
                for part in e:
                    expected = expected * pairing_polynomial((part,))
                assert p == expected
                for lam in (1, 2, 3):
                    assert not RingHom("alpha", lam)(p).is_zero()


def test_pairing_diagonal():
    parts = enumerate_partitions(4, 2)
    a = RingHom("alpha", 1)
    for e in parts:
        for f in parts:
            val = pair({e: RationalFunc(1)}, {f: RationalFunc(1)}, a)
            assert val == (a(pairing_polynomial(e)) if e == f else RationalFunc(0))
    assert pair({(1, 0, 0): 1}, {(1, 0, 0): 1}, a) == RationalFunc(1)


def test_pair_is_sesquilinear():
    a = RingHom("alpha", 1)
    e = (2, 0, 0)
    lhs = pair({e: RationalFunc(q)}, {e: RationalFunc(q**2)}, a)
    assert lhs == RationalFunc(q**-1) * a(pairing_polynomial(e))


# classes


def test_class_examples_n1_N2():
    F = class_F0(1, 2)
    assert F.coeffs == {(1,): q**-2}
    G = class_G(1, 2)
    assert G.coeffs == {(1,): RationalFunc(q**-3 + q**-1)}
    assert pair(class_F_specialised(1, 2), G, RingHom("alpha", 1)) == RationalFunc(q + q**-1)


def test_class_example_n1_N3():
    F = class_F0(1, 3)
    assert list(F.coeffs) == [(2,)]
    v = kohno_theta("forward", F.coeffs, 2, 2, 3)
    assert v == coev_normalized(1, 3)


@pytest.mark.parametrize("n,N", [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)])
def test_F0_reconstructs_coev(n, N):
    F = class_F0(n, N)
    v = kohno_theta("forward", F.coeffs, 2 * n, n * (N - 1), N)
    assert v == coev_normalized(n, N)
    assert apply_coproduct_E(v, colour(N, bounded=False)).is_zero()


@pytest.mark.parametrize("n,N", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_G_duality_contract(n, N):
    a = RingHom("alpha", N - 1)
    G = class_G(n, N)
    m = n * (N - 1)
    for e in enumerate_partitions(2 * n, m):
        phi = hw_basis_vector(e, 2 * n, m, N).expansion
        ev = ev_normalized(n, N, phi)
        assert pair({e: RationalFunc(1)}, G, a) == RationalFunc(ev)
        bounded = [idx for idx in phi if max(idx) < N]
        if not bounded:
            assert G[e] == 0


def test_homclass_json():
    data = class_F0(1, 2).to_json()
    assert data["coordinates"] == {"(1)": "q^-2"}
    assert data["side"] == "multifork" and data["m"] == 1
    with pytest.raises(ValueError):
        HomClass("noodle", 1, 2, {})


@pytest.mark.parametrize("n,N", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_global_classes_specialise(n, N):
    delta = RingHom("delta", N - 1)
    Fg, Fs = class_F_global(n, N), class_F_specialised(n, N)
    Gg, Gs = class_G_global(n, N), class_G(n, N)
    for e in enumerate_partitions(2 * n, n * (N - 1)):
        assert delta(RationalFunc(Fg[e])) == Fs[e]
        assert delta(RationalFunc(Gg[e])) == Gs[e]


# invariants


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_unknot(N):
    u = BraidWord(1, [])
    assert jones_homological(u, N) == 1
    assert jones_global(u, N) == 1


@pytest.mark.parametrize("name", ["trefoil", "figure-eight", "cinquefoil", "5_2"])
@pytest.mark.parametrize("N", [2, 3])
def test_agrees_with_rt(name, N):
    b = standard_knots()[name]
    ref = jones_rt(b, N)
    assert jones_homological(b, N) == ref
    assert jones_global(b, N) == ref
    assert jones_homological(mirror(b), N) == ref.bar()


def test_not_a_knot():
    with pytest.raises(NotAKnot):
        jones_homological(BraidWord(2, []), 2)
    with pytest.raises(NotAKnot):
        jones_global(BraidWord(3, [1, 1, 2, 2]), 2)


def test_pairing_independence():
    for name, b in standard_knots().items():
        if b.strands > 2:
            continue
        base = jones_homological(b, 2)
        parts = enumerate_partitions(2 * b.strands, b.strands)
        for seed in range(3):
            pm = PairingMatrix.randomized(parts, seed)
            assert jones_homological(b, 2, pm) == base
    b = standard_knots()["figure-eight"]
    base = jones_global(b, 2)
    pm = PairingMatrix.randomized(enumerate_partitions(6, 3), 5)
    assert jones_global(b, 2, pm) == base


def test_budget(monkeypatch):
    assert check_budget(2, 2) == 6
    with pytest.raises(BudgetExceeded):
        check_budget(4, 4)
    with pytest.raises(BudgetExceeded):
        jones_homological(standard_knots()["trefoil"], 3, budget=5)
    monkeypatch.setenv("JONES_BUDGET", "4")
    assert budget_cap() == 4
    with pytest.raises(BudgetExceeded):
        jones_global(standard_knots()["trefoil"], 2)
    assert budget_cap(100) == 100
