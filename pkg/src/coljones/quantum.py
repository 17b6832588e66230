"""Quantum sl(2) side: module actions, the braiding, (co)evaluations and the
two direct evaluations of the coloured Jones polynomial.

All coefficient settings share one code path.  A :class:`Colour` either
specialises the Verma weight to ``s = q^(N-1)`` (optionally truncating to
the finite module V_N spanned by v_0..v_{N-1}) or keeps ``s`` as a second
variable.

Tensor basis indices are 0-based factor positions; braid letters are
1-based as usual, so sigma_i acts on factors ``i-1`` and ``i``.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .braid import BraidWord, embed_union_trivial, is_knot, writhe
from .errors import IndexOutOfRange, NonDivisible, NotAKnot
from .ring import LaurentPoly, exact_div, quantum_binomial, quantum_int

__all__ = [
    "Colour",
    "colour",
    "TensorVector",
    "GeneratorAction",
    "TwoStrandOperator",
    "apply_generator",
    "apply_coproduct_E",
    "apply_coproduct_K",
    "braiding_operator",
    "braid_rep_action",
    "coev",
    "ev",
    "coev_right",
    "ev_right",
    "Normalizer",
    "normalizer_alpha",
    "coev_normalized",
    "ev_normalized",
    "jones_rt",
    "jones_hw",
]

Index = tuple[int, ...]


class Colour:
    """Coefficient setting for colour ``N``.

    ``generic=False``: coefficients in Z[q^±] with s = q^(N-1).  By default
    basis indices are then bounded by N-1 (the module V_N); with
    ``bounded=False`` the whole specialised Verma module is used.
    ``generic=True``: coefficients in Z[q^±, s^±] on the Verma module.
    """

    def __init__(self, N: int, generic: bool = False, bounded: bool | None = None):
        if N < 1:
            raise IndexOutOfRange(f"colour must be positive, got {N}")
        if bounded is None:
            bounded = not generic
        if generic and bounded:
            raise ValueError("the two-variable setting has no finite quotient")
        self.N = N
        self.generic = generic
        self.bounded = bounded
        self.vars = ("q", "s") if generic else ("q",)
        self.q = LaurentPoly.gen("q", self.vars)
        self.s = LaurentPoly.gen("s", self.vars) if generic else self.q ** (N - 1)
        self.one = LaurentPoly.const(1, self.vars)
        self.zero = LaurentPoly.const(0, self.vars)
        self.bound = N if bounded else None
        self._K: dict[int, LaurentPoly] = {}

    def __repr__(self) -> str:
        return f"Colour({self.N}, generic={self.generic}, bounded={self.bounded})"

    def mono(self, qe: int, se: int = 0, c: int = 1) -> LaurentPoly:
        """The monomial c * q^qe * s^se in this coefficient ring."""
        if self.generic:
            return LaurentPoly._raw(self.vars, {(qe, se): c})
        return LaurentPoly._raw(self.vars, {(qe + se * (self.N - 1),): c})

    def K(self, i: int) -> LaurentPoly:
        """Eigenvalue of K on v_i, namely s q^(-2i)."""
        k = self._K.get(i)
        if k is None:
            k = self._K[i] = self.mono(-2 * i, 1)
        return k

    def K_inv(self, i: int) -> LaurentPoly:
        return self.mono(2 * i, -1)

    def lift(self, p) -> LaurentPoly:
        if isinstance(p, int):
            return LaurentPoly.const(p, self.vars)
        return p.lift(self.vars) if p.vars != self.vars else p

    def in_range(self, i: int) -> bool:
        return i >= 0 and (self.bound is None or i < self.bound)

    def F_div_coeff(self, n: int, i: int) -> LaurentPoly:
        """Coefficient of v_{i+n} in F^(n) v_i."""
        c = self.lift(quantum_binomial(n + i, i))
        for k in range(n):
            c = c * (self.mono(-k - i, 1) - self.mono(k + i, -1))
            if c.is_zero():
                break
        return c


def colour(N: int, generic: bool = False, bounded: bool | None = None) -> Colour:
    return _colour(N, generic, (not generic) if bounded is None else bounded)


@lru_cache(maxsize=None)
def _colour(N: int, generic: bool, bounded: bool) -> Colour:
    return Colour(N, generic, bounded)


class TensorVector:
    """A finitely supported vector in a tensor product of V, V* factors.

    ``coeffs`` maps index tuples to non-zero coefficients.  ``dual_mask[k]``
    is true when factor ``k`` is a dual module, whose basis is v_i^*.
    """

    __slots__ = ("coeffs", "factor_count", "dual_mask")

    def __init__(self, coeffs: dict, factor_count: int | None = None, dual_mask: Iterable[bool] | None = None):
        clean = {tuple(k): c for k, c in coeffs.items() if not (c == 0)}
        if factor_count is None:
            if not clean:
                raise ValueError("factor_count needed for the zero vector")
            factor_count = len(next(iter(clean)))
        for k in clean:
            if len(k) != factor_count:
                raise IndexOutOfRange(f"index {k} does not have {factor_count} factors")
        mask = tuple(dual_mask) if dual_mask is not None else (False,) * factor_count
        if len(mask) != factor_count:
            raise ValueError("dual_mask length mismatch")
        self.coeffs = clean
        self.factor_count = factor_count
        self.dual_mask = mask

    @classmethod
    def basis(cls, idx: Index, coeff, dual_mask=None) -> TensorVector:
        return cls({tuple(idx): coeff}, len(idx), dual_mask)

    def _like(self, coeffs: dict) -> TensorVector:
        v = object.__new__(TensorVector)
        v.coeffs = coeffs
        v.factor_count = self.factor_count
        v.dual_mask = self.dual_mask
        return v

    def items(self):
        return self.coeffs.items()

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Index]:
        return iter(self.coeffs)

    def get(self, idx: Index, default=0):
        return self.coeffs.get(tuple(idx), default)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: TensorVector) -> TensorVector:
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _acc(out, k, c)
        return self._like({k: c for k, c in out.items() if not c.is_zero()})

    def __sub__(self, other: TensorVector) -> TensorVector:
        return self + other.scale(-1)

    def __neg__(self) -> TensorVector:
        return self.scale(-1)

    def scale(self, a) -> TensorVector:
        out = {}
        for k, c in self.coeffs.items():
            v = c * a
            if not v.is_zero():
                out[k] = v
        return self._like(out)

    def map_coeffs(self, f: Callable) -> TensorVector:
        out = {}
        for k, c in self.coeffs.items():
            v = f(c)
            if not (v == 0):
                out[k] = v
        return self._like(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        if self.factor_count != other.factor_count or self.dual_mask != other.dual_mask:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0) for k in keys)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*v{list(k)}" for k, c in sorted(self.coeffs.items()))
        return f"TensorVector({body or '0'})"

    def _check(self, other: TensorVector) -> None:
        if self.factor_count != other.factor_count or self.dual_mask != other.dual_mask:
            raise IndexOutOfRange("tensor shapes differ")

    def weight(self) -> int | None:
        """Total index sum if homogeneous, else None."""
        sums = {sum(k) for k in self.coeffs}
        return sums.pop() if len(sums) == 1 else None


def _acc(out: dict, key, val) -> None:
    cur = out.get(key)
    out[key] = val if cur is None else cur + val


def _finish(out: dict) -> dict:
    return {k: c for k, c in out.items() if c.terms}


class GeneratorAction:
    """One of K, K_inv, E or the divided power F^(n)."""

    __slots__ = ("which", "n")

    def __init__(self, which: str, n: int = 0):
        if which not in ("K", "K_inv", "E", "F_div"):
            raise ValueError(f"unknown generator {which!r}")
        if which == "F_div" and n < 0:
            raise IndexOutOfRange("divided power index must be non-negative")
        self.which = which
        self.n = n

    def image(self, col: Colour, i: int, dual: bool = False) -> list[tuple[int, LaurentPoly]]:
        w = self.which
        if dual:
            # (X f)(w) = f(S(X) w) with S(K) = K^-1, S(E) = -E K^-1
            if w == "K":
                return [(i, col.K_inv(i))]
            if w == "K_inv":
                return [(i, col.K(i))]
            if w == "E":
                if not col.in_range(i + 1):
                    return []
                return [(i + 1, -col.K_inv(i + 1))]
            raise NotImplementedError("divided powers of F on dual factors")
        if w == "K":
            return [(i, col.K(i))]
        if w == "K_inv":
            return [(i, col.K_inv(i))]
        if w == "E":
            return [(i - 1, col.one)] if i > 0 else []
        c = col.F_div_coeff(self.n, i)
        if c.is_zero():
            return []
        if not col.in_range(i + self.n):
            raise AssertionError("truncation violated")
        return [(i + self.n, c)]


def apply_generator(g: GeneratorAction, v: TensorVector, factor: int, col: Colour) -> TensorVector:
    """Act by ``g`` on tensor factor ``factor`` (0-based) only."""
    if not 0 <= factor < v.factor_count:
        raise IndexOutOfRange(f"factor {factor} out of range")
    dual = v.dual_mask[factor]
    out: dict = {}
    cache: dict[int, list] = {}
    for idx, c in v.coeffs.items():
        i = idx[factor]
        img = cache.get(i)
        if img is None:
            img = cache[i] = g.image(col, i, dual)
        for j, a in img:
            _acc(out, idx[:factor] + (j,) + idx[factor + 1 :], c * a)
    return v._like(_finish(out))


def _K_value(col: Colour, i: int, dual: bool) -> LaurentPoly:
    return col.K_inv(i) if dual else col.K(i)


def apply_coproduct_K(v: TensorVector, col: Colour) -> TensorVector:
    out = {}
    for idx, c in v.coeffs.items():
        a = c
        for i, dual in zip(idx, v.dual_mask):
            a = a * _K_value(col, i, dual)
        out[idx] = a
    return v._like(out)


def apply_coproduct_E(v: TensorVector, col: Colour) -> TensorVector:
    """Iterated coproduct of E: sum over j of 1 x .. x E (at j) x K x .. x K."""
    out: dict = {}
    E = GeneratorAction("E")
    k = v.factor_count
    for idx, c in v.coeffs.items():
        suffix = [col.one] * (k + 1)
        for p in range(k - 1, -1, -1):
            suffix[p] = suffix[p + 1] * _K_value(col, idx[p], v.dual_mask[p])
        for p in range(k):
            for j, a in E.image(col, idx[p], v.dual_mask[p]):
                _acc(out, idx[:p] + (j,) + idx[p + 1 :], c * a * suffix[p + 1])
    return v._like(_finish(out))


class TwoStrandOperator:
    """The braiding on two adjacent factors, or its inverse.

    The positive operator is the tabulated map

        v_i (x) v_j  ->  s^-(i+j) sum_n q^(2(i-n)(j+n)) q^(n(n-1)/2) [n+j, j]_q
                         prod_{k<n} (s q^(-k-j) - s^-1 q^(k+j))  v_{j+n} (x) v_{i-n}

    which already contains the flip of the two factors.  The inverse is
    solved exactly on each weight block, where the matrix is triangular
    with unit monomials on the diagonal.
    """

    def __init__(self, col: Colour, sign: int):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.colour = col
        self.sign = sign
        self._cache: dict[tuple[int, int], list] = {}
        self._lock = threading.Lock()

    @property
    def N(self) -> int:
        return self.colour.N

    def image(self, i: int, j: int) -> list[tuple[tuple[int, int], LaurentPoly]]:
        key = (i, j)
        img = self._cache.get(key)
        if img is None:
            if self.sign > 0:
                img = _positive_image(self.colour, i, j)
            else:
                img = self._inverse_block(i + j)[i]
            with self._lock:
                self._cache[key] = img
        return img

    def _inverse_block(self, w: int) -> dict[int, list]:
        col = self.colour
        lo = 0 if col.bound is None else max(0, w - col.bound + 1)
        hi = w if col.bound is None else min(w, col.bound - 1)
        if lo > hi:
            raise IndexOutOfRange(f"no basis vectors of weight {w}")
        cols = list(range(hi, lo - 1, -1))  # input first index i, pivot row w - i ascending
        M = {i: dict((a, c) for (a, _), c in _positive_image(col, i, w - i)) for i in cols}
        result = {}
        for target in range(lo, hi + 1):
            y: dict[int, LaurentPoly] = {}
            for i in cols:
                r = w - i
                acc = col.one if r == target else col.zero
                for i2, yv in y.items():
                    m = M[i2].get(r)
                    if m is not None:
                        acc = acc - m * yv
                if acc.is_zero():
                    continue
                y[i] = exact_div(acc, M[i][r])
            result[target] = [((i, w - i), c) for i, c in sorted(y.items())]
        return result

    def apply(self, v: TensorVector, pos: int) -> TensorVector:
        """Act on factors ``pos`` and ``pos + 1`` (0-based)."""
        if not 0 <= pos < v.factor_count - 1:
            raise IndexOutOfRange(f"cannot braid factors {pos}, {pos + 1} of {v.factor_count}")
        if v.dual_mask[pos] or v.dual_mask[pos + 1]:
            raise IndexOutOfRange("braiding acts on non-dual factors only")
        out: dict = {}
        for idx, c in v.coeffs.items():
            for (a, b), x in self.image(idx[pos], idx[pos + 1]):
                _acc(out, idx[:pos] + (a, b) + idx[pos + 2 :], c * x)
        return v._like(_finish(out))

    def matrix(self) -> dict[tuple[int, int], list]:
        """All images of the N^2 basis vectors of V_N (x) V_N."""
        if self.colour.bound is None:
            raise ValueError("the Verma braiding has infinitely many basis vectors")
        N = self.colour.N
        return {(i, j): self.image(i, j) for i in range(N) for j in range(N)}


def _positive_image(col: Colour, i: int, j: int) -> list:
    out = []
    for n in range(i + 1):
        if col.bound is not None and j + n >= col.bound:
            # the product contains the factor that vanishes at s = q^(N-1)
            break
        c = col.mono(2 * (i - n) * (j + n) + n * (n - 1) // 2, -(i + j))
        c = c * col.lift(quantum_binomial(n + j, j))
        for k in range(n):
            c = c * (col.mono(-k - j, 1) - col.mono(k + j, -1))
        if not c.is_zero():
            out.append(((j + n, i - n), c))
    return out


_OPS: dict[tuple[int, bool, bool, int], TwoStrandOperator] = {}
_OPS_LOCK = threading.Lock()


def braiding_operator(
    N: int, sign: int, generic: bool = False, bounded: bool | None = None
) -> TwoStrandOperator:
    col = colour(N, generic, bounded)
    key = (N, col.generic, col.bounded, sign)
    op = _OPS.get(key)
    if op is None:
        with _OPS_LOCK:
            op = _OPS.setdefault(key, TwoStrandOperator(col, sign))
    return op


def braid_rep_action(
    b: BraidWord, N: int, v: TensorVector, generic: bool = False, bounded: bool | None = None
) -> TensorVector:
    """Apply the letters of ``b`` to ``v`` one by one, in reading order."""
    if v.factor_count < b.strands:
        raise IndexOutOfRange(f"braid on {b.strands} strands applied to {v.factor_count} factors")
    for g in b.letters:
        v = braiding_operator(N, 1 if g > 0 else -1, generic, bounded).apply(v, abs(g) - 1)
    return v


# dualities


def coev(N: int) -> TensorVector:
    """sum_j v_j (x) v_j^*."""
    col = colour(N)
    return TensorVector({(j, j): col.one for j in range(N)}, 2, (False, True))


def coev_right(N: int) -> TensorVector:
    """sum_j v_j^* (x) K^-1 v_j."""
    col = colour(N)
    return TensorVector({(j, j): col.K_inv(j) for j in range(N)}, 2, (True, False))


def ev(N: int, v: TensorVector) -> LaurentPoly:
    """f (x) w -> f(w) on V^* (x) V."""
    if v.dual_mask != (True, False):
        raise IndexOutOfRange("ev expects a V* (x) V vector")
    col = colour(N)
    total = col.zero
    for (i, j), c in v.items():
        if i == j:
            total = total + c
    return total


def ev_right(N: int, v: TensorVector) -> LaurentPoly:
    """v (x) f -> f(K v) on V (x) V^*."""
    if v.dual_mask != (False, True):
        raise IndexOutOfRange("ev_right expects a V (x) V* vector")
    col = colour(N)
    total = col.zero
    for (i, j), c in v.items():
        if i == j:
            total = total + c * col.K(i)
    return total


def _nested_coev(n: int, N: int) -> TensorVector:
    col = colour(N)
    out = {}
    for idx in _all_indices(n, N):
        full = idx + tuple(reversed(idx))
        out[full] = col.one
    return TensorVector(out, 2 * n, (False,) * n + (True,) * n)


def _all_indices(n: int, N: int):
    if n == 0:
        yield ()
        return
    for rest in _all_indices(n - 1, N):
        for i in range(N):
            yield rest + (i,)


def _nested_ev_right(n: int, N: int, v: TensorVector) -> LaurentPoly:
    col = colour(N)
    total = col.zero
    for idx, c in v.items():
        val = c
        for p in range(n):
            if idx[p] != idx[2 * n - 1 - p]:
                val = None
                break
            val = val * col.K(idx[p])
        if val is not None:
            total = total + val
    return total


# normalizer


class Normalizer:
    """The isomorphism V_N^* -> V_N, v_i^* -> c_i v_{N-1-i}, one per strand.

    Specialised coefficients obey c_0 = 1, c_{i+1} = -q^((N-1)-2(i+1)) c_i and
    do not depend on the strand.  The two-variable lift on strand k (k = 1 the
    innermost pair) obeys c_{i+1} = -s^-(2k-1) q^(2k(N-1)-2(i+1)) c_i.
    """

    def __init__(self, n: int, N: int, generic: bool = False):
        if n < 1 or N < 1:
            raise IndexOutOfRange("normalizer needs n >= 1 and N >= 1")
        self.n = n
        self.N = N
        self.colour = colour(N, generic)
        self.coeffs: list[list[LaurentPoly]] = []
        for k in range(1, n + 1):
            row = [self.colour.one]
            for i in range(N - 1):
                if generic:
                    step = self.colour.mono(2 * k * (N - 1) - 2 * (i + 1), -(2 * k - 1), -1)
                else:
                    step = self.colour.mono((N - 1) - 2 * (i + 1), 0, -1)
                row.append(row[-1] * step)
            self.coeffs.append(row)

    def c(self, i: int, strand: int = 1) -> LaurentPoly:
        return self.coeffs[strand - 1][i]

    def apply(self, i: int, strand: int = 1) -> tuple[int, LaurentPoly]:
        """f(v_i^*) as (index, coefficient)."""
        return self.N - 1 - i, self.c(i, strand)

    def inverse(self, j: int, strand: int = 1) -> tuple[int, LaurentPoly]:
        """f^-1(v_j) as (dual index, coefficient)."""
        i = self.N - 1 - j
        return i, self.c(i, strand) ** -1


@lru_cache(maxsize=None)
def normalizer_alpha(n: int, N: int, generic: bool = False) -> Normalizer:
    return Normalizer(n, N, generic)


def coev_normalized(n: int, N: int, generic: bool = False) -> TensorVector:
    """The n nested normalised coevaluations, a vector in 2n non-dual factors.

    Factor p and factor 2n-1-p (0-based) form the pair of strand n-p.
    """
    f = normalizer_alpha(n, N, generic)
    out = {}
    for idx in _all_indices(n, N):
        coeff = f.colour.one
        for p, i in enumerate(idx):
            coeff = coeff * f.c(i, n - p)
        out[idx + tuple(N - 1 - i for i in reversed(idx))] = coeff
    return TensorVector(out, 2 * n)


def ev_normalized(n: int, N: int, v: TensorVector, generic: bool = False) -> LaurentPoly:
    """Apply the n nested normalised evaluations to a 2n-factor vector."""
    if v.factor_count != 2 * n or any(v.dual_mask):
        raise IndexOutOfRange(f"expected {2 * n} non-dual factors")
    f = normalizer_alpha(n, N, generic)
    col = f.colour
    weights: dict[tuple[int, int], LaurentPoly] = {}
    total = col.zero
    for idx, c in v.items():
        val = c
        for p in range(n):
            a = idx[p]
            if a + idx[2 * n - 1 - p] != N - 1:
                val = None
                break
            key = (a, n - p)
            w = weights.get(key)
            if w is None:
                w = weights[key] = f.c(a, n - p) ** -1 * col.K(a)
            val = val * w
        if val is not None:
            total = total + val
    return total


def _finalise(bracket: LaurentPoly, b: BraidWord, N: int) -> LaurentPoly:
    q = LaurentPoly.gen("q")
    try:
        inv = exact_div(bracket, quantum_int(N))
    except NonDivisible as exc:
        raise NonDivisible(f"bracket {bracket} is not divisible by [{N}]") from exc
    return inv * q ** (-(N - 1) * writhe(b))


def _require_knot(b: BraidWord) -> None:
    if not is_knot(b):
        raise NotAKnot(f"closure of {b!r} is not a knot")


def jones_rt(b: BraidWord, N: int) -> LaurentPoly:
    """Coloured Jones polynomial by the quantum trace of the braid action."""
    _require_knot(b)
    n = b.strands
    v = _nested_coev(n, N)
    v = braid_rep_action(embed_union_trivial(b), N, v)
    return _finalise(_nested_ev_right(n, N, v), b, N)


def jones_hw(b: BraidWord, N: int) -> LaurentPoly:
    """Coloured Jones polynomial through the normalised highest weight vector."""
    _require_knot(b)
    n = b.strands
    v = coev_normalized(n, N)
    v = braid_rep_action(embed_union_trivial(b), N, v)
    return _finalise(ev_normalized(n, N, v), b, N)
