"""Dense integer polynomial helpers used by the gcd routines.

A univariate polynomial is a list of ints, index = degree, with no
trailing zeros (the zero polynomial is ``[]``).  A bivariate polynomial
is a list of univariate ones indexed by the degree in the outer variable.
"""

from __future__ import annotations

from math import gcd

from .errors import NonDivisible


def trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a: list[int], b: list[int]) -> list[int]:
    return add(a, [-c for c in b])


def mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def scale(a: list[int], c: int) -> list[int]:
    if not c:
        return []
    return [c * x for x in a]


def content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def exact_divmod(a: list[int], b: list[int]) -> list[int]:
    """Quotient of ``a`` by ``b`` over Z; raises if the division is not exact."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = a[:]
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c, rem = divmod(r[-1], lb)
        if rem:
            raise NonDivisible("coefficient not divisible")
        q[shift] = c
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        trim(r)
    if r:
        raise NonDivisible("non-zero remainder")
    return trim(q)


def primitive(a: list[int]) -> list[int]:
    c = content(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    r = a[:]
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = scale(r, lb)
        for j, y in enumerate(b):
            r[shift + j] -= lr * y
        trim(r)
    return r


def gcd1(a: list[int], b: list[int]) -> list[int]:
    """Gcd over Z[x] with positive leading coefficient."""
    if not a:
        return scale(primitive(b), content(b)) if b else []
    if not b:
        return scale(primitive(a), content(a))
    c = gcd(content(a), content(b))
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return scale(primitive(a), c)


# bivariate: list of univariate coefficient lists


def b_trim(a: list[list[int]]) -> list[list[int]]:
    while a and not a[-1]:
        a.pop()
    return a


def b_content(a: list[list[int]]) -> list[int]:
    g: list[int] = []
    for c in a:
        if c:
            g = gcd1(g, c)
            if len(g) == 1 and g[0] == 1:
                break
    return g


def b_scale(a: list[list[int]], c: list[int]) -> list[list[int]]:
    return b_trim([mul(x, c) for x in a])


def b_div_univ(a: list[list[int]], c: list[int]) -> list[list[int]]:
    return b_trim([exact_divmod(x, c) if x else [] for x in a])


def b_primitive(a: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    p = b_div_univ(a, b_content(a))
    if p[-1][-1] < 0:
        p = [scale(x, -1) for x in p]
    return p


def b_pseudo_rem(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    r = [x[:] for x in a]
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [mul(x, lb) for x in r]
        for j, y in enumerate(b):
            r[shift + j] = sub(r[shift + j], mul(lr, y))
        b_trim(r)
    return r


def gcd2(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Gcd over Z[x][y], normalised so the leading coefficient is positive."""
    if not a and not b:
        return []
    if not a:
        a, b = b, a
    if not b:
        return b_scale(b_primitive(a), b_content(a))
    c = gcd1(b_content(a), b_content(b))
    a, b = b_primitive(a), b_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = b_pseudo_rem(a, b)
        a, b = b, b_primitive(r)
    return b_scale(b_primitive(a), c)
