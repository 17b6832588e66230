"""The intersection pairing model of the coloured Jones polynomial.

A knot given as the closure of ``b`` in B_n is evaluated as

    J_N = [N]^-1 q^(-(N-1) w(b)) < (b u 1_n) F, G >

where F and G are coordinate vectors over E_{2n, n(N-1)}, ``(b u 1_n)``
acts through the braid matrices of :mod:`coljones.hwspace`, and the pairing
is diagonal with entries p_e.  ``F`` comes from the normalised
coevaluation; ``G`` is dual to the normalised evaluation.  Everything can be
carried out either with s already set to q^(N-1) or over Z[q, s] with the
specialisation postponed to the very end.
"""

from __future__ import annotations

import os
import random
from functools import lru_cache
from itertools import permutations

from .braid import BraidWord, is_knot, writhe
from .errors import BudgetExceeded, NonDivisible, NonIntegral, NotAKnot
from .hwspace import Partition, _expansion, dimension, enumerate_partitions, kohno_theta, lawrence_matrix
from .quantum import coev_normalized, ev_normalized
from .ring import LaurentPoly, RationalFunc, RingHom, exact_div, quantum_int

__all__ = [
    "DEFAULT_BUDGET",
    "budget_cap",
    "check_budget",
    "inversions",
    "pairing_polynomial",
    "PairingMatrix",
    "HomClass",
    "pair",
    "class_F0",
    "class_F_specialised",
    "class_G",
    "class_F_global",
    "class_G_global",
    "jones_homological",
    "jones_global",
]

DEFAULT_BUDGET = 3000


def budget_cap(budget: int | None = None) -> int:
    """The explicit budget, else ``JONES_BUDGET`` from the environment, else the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("JONES_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def check_budget(n: int, N: int, budget: int | None = None) -> int:
    d = dimension(2 * n, n * (N - 1))
    cap = budget_cap(budget)
    if d > cap:
        raise BudgetExceeded(d, cap)
    return d


# pairing polynomials


def inversions(perm) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


@lru_cache(maxsize=None)
def _single_part(k: int) -> LaurentPoly:
    # sum over S_k of d^inv, which factors as prod_j (1 + d + ... + d^(j-1))
    d = LaurentPoly.gen("d", ("x", "d"))
    out = LaurentPoly.const(1, ("x", "d"))
    for j in range(1, k + 1):
        out = out * sum((d**i for i in range(1, j)), LaurentPoly.const(1, ("x", "d")))
    return out


def pairing_polynomial(e: Partition, enumerate_all: bool = False) -> LaurentPoly:
    """p_e = prod_i sum_{sigma in S_(e_i)} d^inv(sigma), a polynomial in d.

    ``enumerate_all`` sums over the permutations literally instead of using
    the product formula for the inversion generating function.
    """
    one = LaurentPoly.const(1, ("x", "d"))
    d = LaurentPoly.gen("d", ("x", "d"))
    out = one
    for k in e:
        if enumerate_all:
            part = LaurentPoly.const(0, ("x", "d"))
            for p in permutations(range(k)):
                part = part + d ** inversions(p)
        else:
            part = _single_part(k)
        out = out * part
    return out


class PairingMatrix:
    """Diagonal of the pairing between multifork and barcode classes.

    ``override`` replaces the specialised diagonal values outright; it is used
    to check that the invariant does not depend on them.
    """

    def __init__(self, partitions: list[Partition], override: dict | None = None):
        self.partitions = list(partitions)
        self.override = override

    def diagonal(self, e: Partition) -> LaurentPoly:
        return pairing_polynomial(e)

    def value(self, e: Partition, hom: RingHom):
        if self.override is not None:
            return RationalFunc(self.override[e])
        return hom(self.diagonal(e))

    @classmethod
    def randomized(cls, partitions: list[Partition], seed: int, max_degree: int = 3) -> PairingMatrix:
        """Random non-zero Laurent polynomials in q in place of every p_e."""
        rng = random.Random(seed)
        q = LaurentPoly.gen("q")
        values = {}
        for e in partitions:
            p = LaurentPoly.const(0)
            while p.is_zero():
                p = sum(
                    (rng.randint(-3, 3) * q**k for k in range(-max_degree, max_degree + 1)),
                    LaurentPoly.const(0),
                )
            values[e] = p
        return cls(partitions, values)


# classes


class HomClass:
    """Coordinates of a homology class over E_{2n,m}, zero entries omitted."""

    __slots__ = ("side", "n", "N", "m", "partitions", "coeffs", "ring")

    def __init__(self, side: str, n: int, N: int, coeffs: dict, ring: str = "specialised"):
        if side not in ("multifork", "barcode"):
            raise ValueError(f"unknown side {side!r}")
        self.side = side
        self.n = n
        self.N = N
        self.m = n * (N - 1)
        self.partitions = enumerate_partitions(2 * n, self.m)
        self.coeffs = {e: c for e, c in coeffs.items() if not (c == 0)}
        self.ring = ring

    def __getitem__(self, e: Partition):
        return self.coeffs.get(tuple(e), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomClass):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return self.side == other.side and all(self[e] == other[e] for e in keys)

    def map(self, f) -> HomClass:
        return HomClass(self.side, self.n, self.N, {e: f(c) for e, c in self.coeffs.items()}, self.ring)

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "n": self.n,
            "color": self.N,
            "m": self.m,
            "ring": self.ring,
            "coordinates": {
                "(" + ",".join(map(str, e)) + ")": str(self.coeffs[e]) for e in self.partitions if e in self.coeffs
            },
        }


def _alpha(N: int) -> RingHom:
    return RingHom("alpha", N - 1)


def pair(F: HomClass | dict, G: HomClass | dict, spec: RingHom, pairing: PairingMatrix | None = None) -> RationalFunc:
    """sum_e F_e * bar(G_e) * spec(p_e)."""
    fc = F.coeffs if isinstance(F, HomClass) else F
    gc = G.coeffs if isinstance(G, HomClass) else G
    total = RationalFunc(0)
    for e, f in fc.items():
        g = gc.get(e)
        if g is None or g == 0:
            continue
        p = pairing.value(e, spec) if pairing is not None else spec(pairing_polynomial(e))
        total = total + RationalFunc(f) * RationalFunc(g).bar() * p
    return total


def class_F0(n: int, N: int) -> HomClass:
    """Multifork coordinates of the normalised coevaluation vector (in Z[q])."""
    v = coev_normalized(n, N)
    return HomClass("multifork", n, N, kohno_theta("inverse", v, 2 * n, n * (N - 1), N))


def class_F_specialised(n: int, N: int) -> HomClass:
    return class_F0(n, N).map(RationalFunc)


def _G0(n: int, N: int, generic: bool) -> dict[Partition, LaurentPoly]:
    m = n * (N - 1)
    out = {}
    for e in enumerate_partitions(2 * n, m):
        out[e] = ev_normalized(n, N, _expansion(e, 2 * n, m, N, generic), generic)
    return out


def class_G(n: int, N: int, pairing: PairingMatrix | None = None) -> HomClass:
    """Barcode coordinates bar(G0(phi_e) / alpha(p_e))."""
    hom = _alpha(N)
    coeffs = {}
    for e, g in _G0(n, N, False).items():
        if g.is_zero():
            continue
        p = pairing.value(e, hom) if pairing is not None else hom(pairing_polynomial(e))
        coeffs[e] = (RationalFunc(g) / p).bar()
    return HomClass("barcode", n, N, coeffs)


def class_F_global(n: int, N: int) -> HomClass:
    v = coev_normalized(n, N, generic=True)
    coords = kohno_theta("inverse", v, 2 * n, n * (N - 1), N, generic=True)
    return HomClass("multifork", n, N, {e: RationalFunc(c) for e, c in coords.items()}, "global")


def class_G_global(n: int, N: int, pairing: PairingMatrix | None = None) -> HomClass:
    hom = RingHom("gamma")
    coeffs = {}
    for e, g in _G0(n, N, True).items():
        if g.is_zero():
            continue
        p = pairing.value(e, hom) if pairing is not None else hom(pairing_polynomial(e))
        coeffs[e] = (RationalFunc(g) / p).bar()
    return HomClass("barcode", n, N, coeffs, "global")


def _act(coords: dict, b: BraidWord, n: int, N: int, generic: bool) -> dict:
    m = n * (N - 1)
    for g in b.letters:
        coords = lawrence_matrix(g, 2 * n, m, N, generic).apply(coords)
    return coords


def _finish(value: RationalFunc, b: BraidWord, N: int) -> LaurentPoly:
    if not value.is_laurent():
        raise NonIntegral(f"pairing {value} does not clear to a Laurent polynomial")
    bracket = value.to_laurent().lift_to(("q",))
    try:
        inv = exact_div(bracket, quantum_int(N))
    except NonDivisible as exc:
        raise NonDivisible(f"pairing {bracket} is not divisible by [{N}]") from exc
    return inv * LaurentPoly.gen("q") ** (-(N - 1) * writhe(b))


def jones_homological(
    b: BraidWord, N: int, pairing: PairingMatrix | None = None, budget: int | None = None
) -> LaurentPoly:
    """Coloured Jones polynomial from the specialised classes."""
    if not is_knot(b):
        raise NotAKnot(f"closure of {b!r} is not a knot")
    n = b.strands
    check_budget(n, N, budget)
    F = _act(class_F0(n, N).coeffs, b, n, N, False)
    G = class_G(n, N, pairing)
    return _finish(pair(F, G, _alpha(N), pairing), b, N)


def jones_global(
    b: BraidWord, N: int, pairing: PairingMatrix | None = None, budget: int | None = None
) -> LaurentPoly:
    """Coloured Jones polynomial from the two-variable classes, specialised at the end."""
    if not is_knot(b):
        raise NotAKnot(f"closure of {b!r} is not a knot")
    n = b.strands
    check_budget(n, N, budget)
    F = _act({e: c.to_laurent() for e, c in class_F_global(n, N).coeffs.items()}, b, n, N, True)
    G = class_G_global(n, N, pairing)
    value = pair(F, G, RingHom("gamma"), pairing)
    return _finish(RingHom("delta", N - 1)(value), b, N)
