"""Exact Laurent polynomials over Z, their fraction fields, and the
coefficient homomorphisms used to specialise homology classes.

Variables are drawn from ``q``, ``s``, ``x`` and ``d`` and are always kept in
that order.  Operands with different variable sets are lifted to the union,
so a polynomial in ``q`` can be added to one in ``q, s`` directly.
"""

from __future__ import annotations

from math import gcd as _igcd
from typing import Iterable, Mapping, Union

from . import _upoly
from .errors import IndexOutOfRange, NonDivisible, NonIntegral, VariableMismatch

__all__ = [
    "VARIABLE_ORDER",
    "LaurentPoly",
    "RationalFunc",
    "RingHom",
    "apply_hom",
    "exact_div",
    "poly_gcd",
    "bar",
    "quantum_int",
    "quantum_factorial",
    "quantum_binomial",
]

VARIABLE_ORDER = ("q", "s", "x", "d")

Exps = tuple[int, ...]


def _sorted_vars(names: Iterable[str]) -> tuple[str, ...]:
    names = set(names)
    for v in names:
        if v not in VARIABLE_ORDER:
            raise VariableMismatch(f"unknown variable {v!r}")
    return tuple(v for v in VARIABLE_ORDER if v in names)


class LaurentPoly:
    """An element of Z[v1^±, v2^±, ...] stored as ``{exponent tuple: int}``."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping | None = None, vars: Iterable[str] = ("q",)):
        vs = tuple(vars)
        if vs != _sorted_vars(vs) or len(set(vs)) != len(vs):
            raise VariableMismatch(f"variables must be distinct and ordered as {VARIABLE_ORDER}")
        clean: dict[Exps, int] = {}
        for e, c in (terms or {}).items():
            if isinstance(e, int):
                e = (e,)
            e = tuple(int(k) for k in e)
            if len(e) != len(vs):
                raise ValueError(f"exponent {e} does not match variables {vs}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.vars = vs
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exps, int]) -> LaurentPoly:
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def const(cls, c: int, vars: Iterable[str] = ("q",)) -> LaurentPoly:
        vs = tuple(vars)
        return cls({(0,) * len(vs): c}, vs)

    @classmethod
    def monomial(cls, exps: Exps | int, coeff: int = 1, vars: Iterable[str] = ("q",)) -> LaurentPoly:
        return cls({exps: coeff}, vars)

    @classmethod
    def gen(cls, name: str, vars: Iterable[str] | None = None) -> LaurentPoly:
        vs = (name,) if vars is None else tuple(vars)
        if name not in vs:
            raise VariableMismatch(f"{name!r} not among {vs}")
        return cls({tuple(int(v == name) for v in vs): 1}, vs)

    @classmethod
    def from_json(cls, data: list, vars: Iterable[str] = ("q",)) -> LaurentPoly:
        return cls({tuple(e): int(c) for e, c in data}, vars)

    # structure

    def lift(self, vars: tuple[str, ...]) -> LaurentPoly:
        """Re-express in a larger variable set."""
        if vars == self.vars:
            return self
        pos = []
        for v in vars:
            pos.append(self.vars.index(v) if v in self.vars else None)
        missing = [v for v in self.vars if v not in vars]
        if missing:
            if any(e[self.vars.index(v)] for e in self.terms for v in missing):
                raise VariableMismatch(f"cannot drop variables {missing}")
        terms = {tuple(0 if i is None else e[i] for i in pos): c for e, c in self.terms.items()}
        return LaurentPoly._raw(vars, terms)

    def used_vars(self) -> tuple[str, ...]:
        used = set()
        for e in self.terms:
            for v, k in zip(self.vars, e):
                if k:
                    used.add(v)
        return _sorted_vars(used)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("not a constant")
        return next(iter(self.terms.values()), 0)

    def coefficient(self, exps: Exps | int) -> int:
        if isinstance(exps, int):
            exps = (exps,)
        return self.terms.get(tuple(exps), 0)

    def min_exps(self) -> Exps:
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.vars)))

    def max_exps(self) -> Exps:
        return tuple(max(e[i] for e in self.terms) for i in range(len(self.vars)))

    def shifted(self, exps: Exps) -> LaurentPoly:
        """Multiply by the monomial with the given exponents."""
        return LaurentPoly._raw(
            self.vars, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}
        )

    def bar(self) -> LaurentPoly:
        return LaurentPoly._raw(self.vars, {tuple(-k for k in e): c for e, c in self.terms.items()})

    def substitute(self, images: Mapping[str, Union[LaurentPoly, int]]) -> LaurentPoly:
        """Ring homomorphism sending each listed variable to a Laurent polynomial.

        Unlisted variables map to themselves.  Images of variables that occur
        with negative exponents must be units.
        """
        imgs = {v: (LaurentPoly.const(p, ()) if isinstance(p, int) else p) for v, p in images.items()}
        keep = [v for v in self.vars if v not in imgs]
        tvars_set = set(keep)
        for p in imgs.values():
            tvars_set.update(p.used_vars())
        tvars = _sorted_vars(tvars_set) or ("q",)
        full = {}
        for v in self.vars:
            full[v] = imgs[v].lift_to(tvars) if v in imgs else LaurentPoly.gen(v, tvars)
        if all(p.is_monomial() for p in full.values()):
            mono = [(next(iter(full[v].terms.items()))) for v in self.vars]
            out: dict[Exps, int] = {}
            k = len(tvars)
            for e, c in self.terms.items():
                acc = [0] * k
                coeff = c
                for (me, mc), ei in zip(mono, e):
                    if ei:
                        if ei < 0:
                            if abs(mc) != 1:
                                raise NonDivisible("negative power of a non-unit image")
                            if mc < 0 and ei % 2:
                                coeff = -coeff
                        else:
                            coeff *= mc**ei
                        for j in range(k):
                            acc[j] += ei * me[j]
                key = tuple(acc)
                out[key] = out.get(key, 0) + coeff
            return LaurentPoly._raw(tvars, {e: c for e, c in out.items() if c})
        result = LaurentPoly._raw(tvars, {})
        for e, c in self.terms.items():
            term = LaurentPoly.const(c, tvars)
            for v, ei in zip(self.vars, e):
                if ei:
                    term = term * (full[v] ** ei)
            result = result + term
        return result

    def lift_to(self, vars: tuple[str, ...]) -> LaurentPoly:
        """Like :meth:`lift`, dropping variables that do not occur."""
        if set(self.used_vars()) - set(vars):
            raise VariableMismatch(f"{self.used_vars()} not contained in {vars}")
        pos = [self.vars.index(v) if v in self.vars else None for v in vars]
        return LaurentPoly._raw(
            vars, {tuple(0 if i is None else e[i] for i in pos): c for e, c in self.terms.items()}
        )

    # arithmetic

    def _coerce(self, other) -> tuple[LaurentPoly, LaurentPoly] | None:
        if isinstance(other, LaurentPoly):
            if other.vars == self.vars:
                return self, other
            vs = _sorted_vars(set(self.vars) | set(other.vars))
            return self.lift(vs), other.lift(vs)
        if isinstance(other, int):
            return self, LaurentPoly._raw(self.vars, {(0,) * len(self.vars): other} if other else {})
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(a.vars, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw(self.vars, {})
            return LaurentPoly._raw(self.vars, {e: c * other for e, c in self.terms.items()})
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        ta, tb = a.terms, b.terms
        out: dict[Exps, int] = {}
        get = out.get
        k = len(a.vars)
        if k == 1:
            for (e1,), c1 in ta.items():
                for (e2,), c2 in tb.items():
                    key = (e1 + e2,)
                    out[key] = get(key, 0) + c1 * c2
        elif k == 2:
            for (e1, f1), c1 in ta.items():
                for (e2, f2), c2 in tb.items():
                    key = (e1 + e2, f1 + f2)
                    out[key] = get(key, 0) + c1 * c2
        else:
            for e1, c1 in ta.items():
                for e2, c2 in tb.items():
                    key = tuple(x + y for x, y in zip(e1, e2))
                    out[key] = get(key, 0) + c1 * c2
        return LaurentPoly._raw(a.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise NonDivisible("negative power of a non-unit")
            (e, c), = self.terms.items()
            return LaurentPoly._raw(self.vars, {tuple(k * n for k in e): c ** (-n)})
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            return LaurentPoly._raw(self.vars, {tuple(k * n for k in e): c**n})
        result = LaurentPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        return RationalFunc(self, other)

    def __rtruediv__(self, other):
        return RationalFunc(other, self)

    def __eq__(self, other):
        if isinstance(other, RationalFunc):
            return NotImplemented
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(
                    frozenset(
                        (tuple((v, k) for v, k in zip(self.vars, e) if k), c) for e, c in self.terms.items()
                    )
                )
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # rendering

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, vars={self.vars})"

    def to_json(self) -> list:
        return [[list(e), str(c)] for e, c in self.sorted_terms()]


class RationalFunc:
    """A fraction of Laurent polynomials kept in lowest terms.

    The canonical form divides out the full gcd (including integer content),
    moves monomial factors into the numerator so the denominator is an
    honest polynomial with no monomial factor, and makes the coefficient
    of the denominator's lowest term positive.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, RationalFunc) or isinstance(den, RationalFunc):
            a = num if isinstance(num, RationalFunc) else RationalFunc(num)
            b = den if isinstance(den, RationalFunc) else RationalFunc(den)
            num, den = a.num * b.den, a.den * b.num
        if isinstance(num, int) and isinstance(den, int):
            num = LaurentPoly.const(num)
        if isinstance(num, int):
            num = LaurentPoly.const(num, den.vars)
        if isinstance(den, int):
            den = LaurentPoly.const(den, num.vars)
        num, den = num._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RationalFunc:
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @property
    def vars(self) -> tuple[str, ...]:
        return self.num.vars

    def is_laurent(self) -> bool:
        return self.den.is_constant() and self.den.constant_value() == 1

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise NonIntegral(f"{self} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def bar(self) -> RationalFunc:
        return RationalFunc(self.num.bar(), self.den.bar())

    def substitute(self, images) -> RationalFunc:
        den = self.den.substitute(images)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes under substitution")
        return RationalFunc(self.num.substitute(images), den)

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunc):
            return other
        if isinstance(other, (LaurentPoly, int)):
            if isinstance(other, int):
                other = LaurentPoly.const(other)
            return RationalFunc._raw(other, LaurentPoly.const(1, other.vars))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunc(self.num + o.num, self.den)
        return RationalFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero() or self.num.is_zero():
            return RationalFunc(0 * self.num)
        # cancel crosswise first to keep intermediate sizes down
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n = exact_div(self.num, g1) * exact_div(o.num, g2)
        d = exact_div(self.den, g2) * exact_div(o.den, g1)
        return RationalFunc(n, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return self * RationalFunc._raw(o.den, o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        if self.is_laurent():
            return hash(self.num)
        return hash((hash(self.num), hash(self.den)))

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunc({str(self)!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _canonical(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    vs = num.vars
    one = LaurentPoly._raw(vs, {(0,) * len(vs): 1})
    if num.is_zero():
        return num, one
    if not den.is_unit():
        g = poly_gcd(num, den)
        if not (g.is_constant() and g.constant_value() == 1):
            num = exact_div(num, g)
            den = exact_div(den, g)
    shift = tuple(-k for k in den.min_exps())
    if any(shift):
        num = num.shifted(shift)
        den = den.shifted(shift)
    if den.terms[min(den.terms)] < 0:
        num, den = -num, -den
    return num, den


def exact_div(a, b) -> LaurentPoly:
    """Quotient of Laurent polynomials; raises :class:`NonDivisible` otherwise."""
    if isinstance(a, int):
        a = LaurentPoly.const(a, b.vars if isinstance(b, LaurentPoly) else ("q",))
    a, b = a._coerce(b)
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return a
    if len(b.terms) == 1:
        (eb, cb), = b.terms.items()
        out = {}
        for e, c in a.terms.items():
            qc, r = divmod(c, cb)
            if r:
                raise NonDivisible(f"{a} is not divisible by {b}")
            out[tuple(x - y for x, y in zip(e, eb))] = qc
        return LaurentPoly._raw(a.vars, out)
    amin, amax, bmin, bmax = a.min_exps(), a.max_exps(), b.min_exps(), b.max_exps()
    lo = tuple(x - y for x, y in zip(amin, bmin))
    hi = tuple(x - y for x, y in zip(amax, bmax))
    if any(l > h for l, h in zip(lo, hi)):
        raise NonDivisible(f"{a} is not divisible by {b}")
    lead = max(b.terms)
    cl = b.terms[lead]
    rem = dict(a.terms)
    quot: dict[Exps, int] = {}
    while rem:
        e = max(rem)
        c = rem[e]
        qe = tuple(x - y for x, y in zip(e, lead))
        qc, r = divmod(c, cl)
        if r or any(x < l or x > h for x, l, h in zip(qe, lo, hi)):
            raise NonDivisible(f"{a} is not divisible by {b}")
        quot[qe] = qc
        for eb, c2 in b.terms.items():
            key = tuple(x + y for x, y in zip(qe, eb))
            v = rem.get(key, 0) - qc * c2
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return LaurentPoly._raw(a.vars, quot)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor up to units, normalised to a polynomial with
    positive leading coefficient and no monomial factor.

    Supports at most two variables that actually occur.
    """
    a, b = a._coerce(b)
    vs = a.vars
    if a.is_zero() and b.is_zero():
        return a
    polys = []
    for p in (a, b):
        if p.is_zero():
            polys.append(p)
        else:
            polys.append(p.shifted(tuple(-k for k in p.min_exps())))
    used = sorted(
        {i for p in polys for e in p.terms for i, k in enumerate(e) if k}
    )
    if len(used) > 2:
        raise NotImplementedError("gcd in more than two variables")
    if not used:
        g = _igcd(
            polys[0].constant_value() if polys[0].terms else 0,
            polys[1].constant_value() if polys[1].terms else 0,
        )
        return LaurentPoly.const(g, vs)
    if len(used) == 1:
        (i,) = used
        dense = []
        for p in polys:
            if p.is_zero():
                dense.append([])
                continue
            arr = [0] * (max(e[i] for e in p.terms) + 1)
            for e, c in p.terms.items():
                arr[e[i]] = c
            dense.append(arr)
        g = _upoly.gcd1(dense[0], dense[1])
        out = {}
        for k, c in enumerate(g):
            if c:
                key = [0] * len(vs)
                key[i] = k
                out[tuple(key)] = c
        return LaurentPoly._raw(vs, out)
    i, j = used
    dense2 = []
    for p in polys:
        if p.is_zero():
            dense2.append([])
            continue
        dj = max(e[j] for e in p.terms)
        rows: list[list[int]] = [[] for _ in range(dj + 1)]
        for e, c in p.terms.items():
            row = rows[e[j]]
            if len(row) <= e[i]:
                row.extend([0] * (e[i] + 1 - len(row)))
            row[e[i]] = c
        dense2.append(_upoly.b_trim([_upoly.trim(r) for r in rows]))
    g = _upoly.gcd2(dense2[0], dense2[1])
    out = {}
    for kj, row in enumerate(g):
        for ki, c in enumerate(row):
            if c:
                key = [0] * len(vs)
                key[i], key[j] = ki, kj
                out[tuple(key)] = c
    return LaurentPoly._raw(vs, out)


def bar(a):
    """The involution inverting every variable."""
    return a.bar()


# coefficient homomorphisms

_HOM_NAMES = ("psi", "eta", "alpha", "xi", "gamma", "delta", "f_q")


class RingHom:
    """One of the specialisation maps between the coefficient rings.

    ``psi``/``alpha`` send Z[x,d] to Z[q] (resp. Q(q)) with x -> q^(2 lam),
    d -> -q^-2; ``xi``/``gamma`` send Z[x,d] to Z[q,s] (resp. Q(q,s)) with x -> s^2,
    d -> -q^-2; ``eta``/``delta`` set s = q^lam; ``f_q`` embeds Z[q] in Q(q).
    """

    __slots__ = ("name", "lam")

    def __init__(self, name: str, lam: int | None = None):
        name = name.removesuffix("_lambda")
        if name not in _HOM_NAMES:
            raise ValueError(f"unknown homomorphism {name!r}")
        if name in ("psi", "eta", "alpha", "delta") and lam is None:
            raise ValueError(f"{name} needs an integer parameter")
        self.name = name
        self.lam = lam if name in ("psi", "eta", "alpha", "delta") else None

    @property
    def source_vars(self) -> tuple[str, ...]:
        if self.name in ("psi", "alpha", "xi", "gamma"):
            return ("x", "d")
        if self.name in ("eta", "delta"):
            return ("q", "s")
        return ("q",)

    @property
    def into_field(self) -> bool:
        return self.name in ("alpha", "gamma", "delta", "f_q")

    def images(self) -> dict[str, LaurentPoly]:
        q = LaurentPoly.gen("q")
        if self.name in ("psi", "alpha"):
            return {"x": q ** (2 * self.lam), "d": -(q**-2)}
        if self.name in ("xi", "gamma"):
            return {"x": LaurentPoly.gen("s") ** 2, "d": -(q**-2)}
        if self.name in ("eta", "delta"):
            return {"s": q**self.lam}
        return {}

    def __call__(self, a):
        return apply_hom(self, a)

    def __repr__(self) -> str:
        return f"RingHom({self.name!r}, {self.lam})" if self.lam is not None else f"RingHom({self.name!r})"


def apply_hom(h: RingHom, a):
    """Image of ``a`` under ``h``; fractions are mapped numerator and denominator."""
    if isinstance(a, int):
        a = LaurentPoly.const(a, h.source_vars)
    extra = set(a.num.used_vars() if isinstance(a, RationalFunc) else a.used_vars())
    if isinstance(a, RationalFunc):
        extra |= set(a.den.used_vars())
    extra -= set(h.source_vars)
    if extra:
        raise VariableMismatch(f"{sorted(extra)} not in the source of {h!r}")
    imgs = h.images()
    if isinstance(a, RationalFunc):
        return a.substitute(imgs)
    out = a.substitute(imgs)
    if h.into_field:
        return RationalFunc(out)
    return out


# quantum numbers


def quantum_int(n: int) -> LaurentPoly:
    """[n]_q = (q^n - q^-n)/(q - q^-1)."""
    if n < 0:
        return -quantum_int(-n)
    return LaurentPoly._raw(("q",), {(n - 1 - 2 * k,): 1 for k in range(n)})


def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise IndexOutOfRange(f"factorial of negative {n}")
    out = LaurentPoly.const(1)
    for k in range(2, n + 1):
        out = out * quantum_int(k)
    return out


def quantum_binomial(n: int, j: int) -> LaurentPoly:
    if not 0 <= j <= n:
        raise IndexOutOfRange(f"binomial index {j} outside [0, {n}]")
    return exact_div(quantum_factorial(n), quantum_factorial(j) * quantum_factorial(n - j))
