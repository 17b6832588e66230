"""Seeded property suites shared by the ``verify`` command and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .braid import (
    BraidWord,
    markov_conjugate,
    markov_stabilize,
    mirror,
    random_knot_braid,
    standard_knots,
)
from .errors import BudgetExceeded
from .homological import PairingMatrix, check_budget, jones_global, jones_homological
from .hwspace import RepMatrix, enumerate_partitions, lawrence_matrix
from .quantum import TensorVector, braid_rep_action, colour, jones_hw, jones_rt

__all__ = [
    "ROUTES",
    "Check",
    "Report",
    "sample_knots",
    "golden_corpus",
    "compute",
    "suite_braid_relations",
    "suite_markov",
    "suite_routes",
    "suite_pairing",
    "SUITES",
]

ROUTES: dict[str, Callable] = {
    "rt": jones_rt,
    "hw": jones_hw,
    "homological": jones_homological,
    "global": jones_global,
}


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(label, ok, detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> Iterator[str]:
        for c in self.checks:
            tail = f"  ({c.detail})" if c.detail else ""
            yield f"{'PASS' if c.ok else 'FAIL'} {c.label}{tail}"
        passed = sum(c.ok for c in self.checks)
        yield f"{self.name}: {passed}/{len(self.checks)} checks passed"


def compute(b: BraidWord, N: int, route: str, budget: int | None = None):
    fn = ROUTES[route]
    if route in ("homological", "global"):
        return fn(b, N, budget=budget)
    return fn(b, N)


def _valid_lengths(n: int, max_len: int) -> list[int]:
    # a product of L transpositions is an n-cycle only if L >= n-1 and L = n-1 mod 2
    return [L for L in range(max(n - 1, 1), max_len + 1) if (L - (n - 1)) % 2 == 0]


def sample_knots(seed: int, count: int, max_strands: int, max_len: int, min_strands: int = 2) -> list[BraidWord]:
    """``count`` reproducible random braids whose closures are knots."""
    rng = random.Random(seed)
    choices = [(n, L) for n in range(min_strands, max_strands + 1) for L in _valid_lengths(n, max_len)]
    if not choices:
        return []
    out = []
    for _ in range(count):
        n, L = rng.choice(choices)
        out.append(random_knot_braid(n, L, rng.randrange(2**32)))
    return out


def golden_corpus() -> dict[str, BraidWord]:
    k = standard_knots()
    return {
        "unknot": k["unknot"],
        "trefoil": k["trefoil"],
        "mirror trefoil": mirror(k["trefoil"]),
        "figure-eight": k["figure-eight"],
    }


def _all_basis(n: int, N: int):
    if n == 0:
        yield ()
        return
    for rest in _all_basis(n - 1, N):
        for i in range(N):
            yield rest + (i,)


def _same_action(w1: BraidWord, w2: BraidWord, N: int) -> bool:
    col = colour(N)
    for idx in _all_basis(w1.strands, N):
        v = TensorVector({idx: col.one}, w1.strands)
        if braid_rep_action(w1, N, v) != braid_rep_action(w2, N, v):
            return False
    return True


def suite_braid_relations(seed: int = 0, max_strands: int = 4, max_len: int = 6, max_color: int = 3, **_) -> Report:
    rep = Report("braid-relations")
    for N in range(2, max_color + 1):
        ok = _same_action(BraidWord(3, [1, 2, 1]), BraidWord(3, [2, 1, 2]), N)
        rep.add(f"R-matrix braid relation on V_{N}^3", ok)
        ok = _same_action(BraidWord(3, [1, -1]), BraidWord(3, []), N)
        rep.add(f"R-matrix inverse on V_{N}^3", ok)
        if max_strands >= 4:
            ok = _same_action(BraidWord(4, [1, 3]), BraidWord(4, [3, 1]), N)
            rep.add(f"R-matrix far commutation on V_{N}^4", ok)
    rng = random.Random(seed)
    for N in range(2, max_color + 1):
        for n in range(3, max(max_strands, 3) + 1):
            for m in range(0, max_len - n + 2):
                M = {g: lawrence_matrix(g, n, m, N) for g in range(-(n - 1), n) if g}
                ident = RepMatrix.identity(enumerate_partitions(n, m))
                i = rng.randint(1, n - 2)
                ok = M[i] @ M[i + 1] @ M[i] == M[i + 1] @ M[i] @ M[i + 1]
                ok = ok and M[i] @ M[-i] == ident
                if n >= 4:
                    ok = ok and M[1] @ M[3] == M[3] @ M[1]
                rep.add(f"braid matrices n={n} m={m} N={N}", ok)
    return rep


def suite_markov(seed: int = 1, max_strands: int = 3, max_len: int = 5, max_color: int = 3, count: int = 10, **_) -> Report:
    rep = Report("markov")
    rng = random.Random(seed)
    for b in sample_knots(seed, count, max_strands, max_len):
        N = rng.randint(2, max_color)
        base = jones_rt(b, N)
        g = rng.choice([x for x in range(-(b.strands - 1), b.strands) if x])
        moves = {
            "conjugate": markov_conjugate(b, g),
            "stabilize+": markov_stabilize(b, 1),
            "stabilize-": markov_stabilize(b, -1),
        }
        for name, b2 in moves.items():
            rep.add(f"{name} [{b}] in B_{b.strands} N={N}", jones_rt(b2, N) == base)
        rep.add(f"mirror [{b}] N={N}", jones_rt(mirror(b), N) == base.bar())
    return rep


def suite_routes(
    seed: int = 7, max_strands: int = 3, max_len: int = 6, max_color: int = 3, count: int = 10, budget: int | None = None, **_
) -> Report:
    rep = Report("routes")
    rng = random.Random(seed)
    for b in sample_knots(seed, count, max_strands, max_len):
        N = rng.randint(2, max_color)
        values = {"rt": jones_rt(b, N), "hw": jones_hw(b, N)}
        skipped = ""
        try:
            check_budget(b.strands, N, budget)
            values["homological"] = jones_homological(b, N, budget=budget)
            values["global"] = jones_global(b, N, budget=budget)
        except BudgetExceeded as exc:
            skipped = f"homological routes skipped: {exc}"
        ok = len(set(str(v) for v in values.values())) == 1
        rep.add(f"[{b}] in B_{b.strands} N={N}: {'='.join(values)}", ok, skipped)
    return rep


def suite_pairing(seed: int = 1, max_color: int = 3, count: int = 3, budget: int | None = None, **_) -> Report:
    rep = Report("pairing")
    for name, b in golden_corpus().items():
        for N in range(2, max_color + 1):
            try:
                check_budget(b.strands, N, budget)
            except BudgetExceeded:
                continue
            base = jones_homological(b, N)
            parts = enumerate_partitions(2 * b.strands, b.strands * (N - 1))
            for r in range(count):
                pm = PairingMatrix.randomized(parts, seed * 1000 + r)
                rep.add(f"{name} N={N} randomization {r}", jones_homological(b, N, pm) == base)
    return rep


SUITES = {
    "braid-relations": suite_braid_relations,
    "markov": suite_markov,
    "routes": suite_routes,
    "pairing": suite_pairing,
}
