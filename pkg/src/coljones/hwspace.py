"""Highest weight spaces of tensor powers of the Verma module.

The weight space of weight ``m`` in the ``n``-fold tensor power has basis
``v_f`` for ``f`` running over n-tuples with sum ``m``.  Inside it, the
vectors killed by E have a basis ``phi_e`` indexed by (n-1)-tuples ``e``
with sum ``m``:

    phi_e = sum_k (-1)^k s^(-k(n-1)) q^(2mk - k(k+1)) v_k (x) E^k(w_e),
    w_e   = s^(sum_j (j+1) e_j) v_{e_1} (x) ... (x) v_{e_{n-1}}.

Only the ``k = 0`` term of ``phi_e`` has a ``v_0`` in the first factor, and a
vector killed by E is determined by its ``v_0 (x) ...`` part.  So the
coordinates of a highest weight vector are read off from that part, which
is how braid matrices are produced below.  The dense Bareiss solve is kept
as an independent route for checking.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import comb

from .errors import IndexOutOfRange, NotInSpan, SolveFailed
from .linalg import bareiss_solve
from .quantum import (
    Colour,
    TensorVector,
    apply_coproduct_E,
    apply_coproduct_K,
    braiding_operator,
    colour,
)
from .ring import LaurentPoly, RationalFunc, exact_div

__all__ = [
    "Partition",
    "enumerate_partitions",
    "enumerate_bounded",
    "dimension",
    "shift_exponent",
    "HWBasisVector",
    "hw_basis_vector",
    "is_highest_weight",
    "RepMatrix",
    "lawrence_matrix",
    "braid_matrix",
    "kohno_theta",
]

Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def _partitions(parts: int, m: int) -> tuple[Partition, ...]:
    if parts == 0:
        return ((),) if m == 0 else ()
    if parts == 1:
        return ((m,),)
    out = []
    for first in range(m, -1, -1):
        for rest in _partitions(parts - 1, m - first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int, m: int) -> list[Partition]:
    """E_{n,m}: (n-1)-tuples of non-negative integers with sum m, in
    decreasing lexicographic order."""
    if n < 1 or m < 0:
        raise IndexOutOfRange(f"no index set for n={n}, m={m}")
    return list(_partitions(n - 1, m))


def enumerate_bounded(n: int, m: int, N: int) -> list[Partition]:
    return [e for e in enumerate_partitions(n, m) if all(x <= N - 1 for x in e)]


def dimension(n: int, m: int) -> int:
    if n == 1:
        return 1 if m == 0 else 0
    return comb(n + m - 2, m)


def shift_exponent(e: Partition) -> int:
    """Power of s in front of ``v_0 (x) v_e``; factor j+1 of the full tuple
    carries weight j+1."""
    return sum((j + 2) * x for j, x in enumerate(e))


def _setting(N: int, generic: bool) -> Colour:
    return colour(N, generic, bounded=False)


class HWBasisVector:
    """The basis vector ``phi_e`` together with its expansion."""

    __slots__ = ("partition", "n", "m", "N", "generic", "expansion")

    def __init__(self, partition: Partition, n: int, m: int, N: int, generic: bool, expansion: TensorVector):
        self.partition = partition
        self.n = n
        self.m = m
        self.N = N
        self.generic = generic
        self.expansion = expansion

    def __repr__(self) -> str:
        return f"HWBasisVector({self.partition}, n={self.n}, m={self.m}, N={self.N})"


def _expand(e: Partition, n: int, m: int, col: Colour) -> TensorVector:
    if n == 1:
        if m:
            raise IndexOutOfRange("a single factor has no highest weight vector of positive weight")
        return TensorVector({(0,): col.one}, 1)
    w = TensorVector({e: col.mono(0, shift_exponent(e))}, n - 1)
    out: dict = {}
    for k in range(m + 1):
        if w.is_zero():
            break
        a = col.mono(2 * m * k - k * (k + 1), -k * (n - 1), (-1) ** k)
        for idx, c in w.items():
            out[(k,) + idx] = c * a
        w = apply_coproduct_E(w, col)
    return TensorVector(out, n)


_EXPANSIONS: dict[tuple, TensorVector] = {}
_EXP_LOCK = threading.Lock()


def _expansion(e: Partition, n: int, m: int, N: int, generic: bool) -> TensorVector:
    key = (e, n, m, N, generic)
    v = _EXPANSIONS.get(key)
    if v is None:
        v = _expand(e, n, m, _setting(N, generic))
        with _EXP_LOCK:
            _EXPANSIONS[key] = v
    return v


def is_highest_weight(v: TensorVector, n: int, m: int, col: Colour) -> bool:
    """True iff ``v`` is killed by E and is a K-eigenvector of weight (n, m)."""
    if v.factor_count != n:
        return False
    if any(sum(idx) != m for idx in v):
        return False
    if not apply_coproduct_E(v, col).is_zero():
        return False
    weight = col.mono(-2 * m, n)
    return apply_coproduct_K(v, col) == v.scale(weight)


def hw_basis_vector(e: Partition, n: int, m: int, N: int, generic: bool = False, check: bool = True) -> HWBasisVector:
    """``phi_e`` in the weight space of weight ``m`` of the n-fold tensor power."""
    e = tuple(e)
    if len(e) != n - 1 or sum(e) != m or any(x < 0 for x in e):
        raise IndexOutOfRange(f"{e} is not in E_({n},{m})")
    v = _expansion(e, n, m, N, generic)
    if check and not is_highest_weight(v, n, m, _setting(N, generic)):
        raise SolveFailed(f"phi_{e} is not a highest weight vector")
    return HWBasisVector(e, n, m, N, generic, v)


def _readoff(v: TensorVector, col: Colour) -> dict[Partition, LaurentPoly]:
    out = {}
    for idx, c in v.items():
        if idx[0] == 0:
            out[idx[1:]] = exact_div(c, col.mono(0, shift_exponent(idx[1:])))
    return out


def kohno_theta(
    direction: str,
    data,
    n: int,
    m: int,
    N: int,
    generic: bool = False,
    method: str = "readoff",
):
    """Identification of multifork coordinates with phi-basis coordinates.

    ``forward``: a coordinate dict over E_{n,m} to the tensor vector
    ``sum_e c_e phi_e``.  ``inverse``: a highest weight tensor vector to its
    coordinate dict.  ``method="bareiss"`` solves the full linear system
    instead of reading off the ``v_0`` component.
    """
    col = _setting(N, generic)
    if direction == "forward":
        out: dict = {}
        for e, c in data.items():
            if c == 0:
                continue
            for idx, a in _expansion(tuple(e), n, m, N, generic).items():
                cur = out.get(idx)
                out[idx] = a * c if cur is None else cur + a * c
        return TensorVector({k: v for k, v in out.items() if not v.is_zero()}, n)
    if direction != "inverse":
        raise ValueError(f"unknown direction {direction!r}")
    v: TensorVector = data
    if v.factor_count != n or any(sum(idx) != m for idx in v):
        raise NotInSpan(f"vector is not in the weight space ({n}, {m})")
    if method == "bareiss":
        rows_idx = enumerate_partitions(n + 1, m)
        parts = enumerate_partitions(n, m)
        exps = [_expansion(e, n, m, N, generic) for e in parts]
        A = [[x.get(f, col.zero) for x in exps] for f in rows_idx]
        for f in v:
            if f not in set(rows_idx):
                raise NotInSpan(f"index {f} outside the weight space")
        b = [col.lift(v.get(f, col.zero)) for f in rows_idx]
        sol = bareiss_solve(A, b)
        out = {}
        for e, y in zip(parts, sol):
            if not y.is_laurent():
                raise NotInSpan(f"coordinate {y} is not a Laurent polynomial")
            if not y.is_zero():
                out[e] = y.to_laurent().lift(col.vars)
        return out
    if not apply_coproduct_E(v, col).is_zero():
        raise NotInSpan("vector is not killed by E")
    return _readoff(v, col)


class RepMatrix:
    """Square matrix indexed by partitions; ``entries[(f, e)]`` is row f, column e."""

    def __init__(self, partitions: list[Partition], entries: dict, vars: tuple[str, ...] = ("q",)):
        self.partitions = list(partitions)
        self.index = {e: i for i, e in enumerate(self.partitions)}
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}
        self.vars = vars
        self._cols: dict[Partition, list] | None = None

    @property
    def size(self) -> int:
        return len(self.partitions)

    @classmethod
    def identity(cls, partitions: list[Partition], vars=("q",)) -> RepMatrix:
        one = LaurentPoly.const(1, vars)
        return cls(partitions, {(e, e): one for e in partitions}, vars)

    def entry(self, f: Partition, e: Partition) -> LaurentPoly:
        return self.entries.get((f, e), LaurentPoly.const(0, self.vars))

    def columns(self) -> dict[Partition, list]:
        if self._cols is None:
            cols: dict[Partition, list] = {}
            for (f, e), c in self.entries.items():
                cols.setdefault(e, []).append((f, c))
            self._cols = cols
        return self._cols

    def apply(self, coords: dict) -> dict:
        """Matrix times a coordinate vector given as a partition-keyed dict."""
        out: dict = {}
        cols = self.columns()
        for e, x in coords.items():
            for f, c in cols.get(e, ()):
                t = c * x
                cur = out.get(f)
                out[f] = t if cur is None else cur + t
        return {k: v for k, v in out.items() if not (v == 0)}

    def __matmul__(self, other: RepMatrix) -> RepMatrix:
        out: dict = {}
        for (g, f), b in other.entries.items():
            for h, a in self.columns().get(g, ()):
                cur = out.get((h, f))
                out[(h, f)] = a * b if cur is None else cur + a * b
        return RepMatrix(self.partitions, out, self.vars)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix) or self.partitions != other.partitions:
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        return all(self.entries.get(k, 0) == other.entries.get(k, 0) for k in keys)

    def rows(self) -> list[list[LaurentPoly]]:
        return [[self.entry(f, e) for e in self.partitions] for f in self.partitions]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows()]


_MATRICES: dict[tuple, RepMatrix] = {}
_MAT_LOCK = threading.Lock()


def lawrence_matrix(
    letter: int, n: int, m: int, N: int, generic: bool = False, verify: bool = False
) -> RepMatrix:
    """Matrix of sigma_|letter|^(sign) on the phi-basis of weight ``m`` in
    ``n`` factors.  Column e holds the coordinates of the image of phi_e.

    With ``verify=True`` each image is recomputed in full and compared to
    the claimed combination of basis vectors.
    """
    if letter == 0 or abs(letter) > n - 1:
        raise IndexOutOfRange(f"letter {letter} is not a generator of B_{n}")
    key = (letter, n, m, N, generic)
    mat = _MATRICES.get(key)
    if mat is None:
        mat = _build_matrix(letter, n, m, N, generic)
        with _MAT_LOCK:
            _MATRICES.setdefault(key, mat)
    if verify:
        _verify_matrix(mat, letter, n, m, N, generic)
    return mat


def _build_matrix(letter: int, n: int, m: int, N: int, generic: bool) -> RepMatrix:
    col = _setting(N, generic)
    op = braiding_operator(N, 1 if letter > 0 else -1, generic, bounded=False)
    pos = abs(letter) - 1
    parts = enumerate_partitions(n, m)
    entries: dict = {}
    for e in parts:
        acc: dict = {}
        for idx, c in _expansion(e, n, m, N, generic).items():
            if pos > 0 and idx[0] != 0:
                continue
            for (x, y), r in op.image(idx[pos], idx[pos + 1]):
                new = idx[:pos] + (x, y) + idx[pos + 2 :]
                if new[0] != 0:
                    continue
                f = new[1:]
                t = c * r
                cur = acc.get(f)
                acc[f] = t if cur is None else cur + t
        for f, c in acc.items():
            if not c.is_zero():
                entries[(f, e)] = exact_div(c, col.mono(0, shift_exponent(f)))
    return RepMatrix(parts, entries, col.vars)


def _verify_matrix(mat: RepMatrix, letter: int, n: int, m: int, N: int, generic: bool) -> None:
    op = braiding_operator(N, 1 if letter > 0 else -1, generic, bounded=False)
    for e in mat.partitions:
        image = op.apply(_expansion(e, n, m, N, generic), abs(letter) - 1)
        claimed = kohno_theta("forward", {f: c for (f, e2), c in mat.entries.items() if e2 == e}, n, m, N, generic)
        if not image == claimed:
            raise SolveFailed(f"image of phi_{e} under {letter} leaves the highest weight span")


def braid_matrix(letters, n: int, m: int, N: int, generic: bool = False) -> RepMatrix:
    """Product of generator matrices; the first letter acts first."""
    vars = _setting(N, generic).vars
    mat = RepMatrix.identity(enumerate_partitions(n, m), vars)
    for g in letters:
        mat = lawrence_matrix(g, n, m, N, generic) @ mat
    return mat
