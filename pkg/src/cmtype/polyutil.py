"""Dense univariate polynomial arithmetic over a FieldSpec.

Polynomials are lists of coefficients in ascending degree with no trailing
zeros.  This is enough for the binary-form gcd behind the tangent-cone
trichotomy and for minimal polynomials in the endomorphism analysis.
"""

from __future__ import annotations

from .fields import FieldSpec


def trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p: list) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(p) - 1


def add(p: list, q: list, fld: FieldSpec) -> list:
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else fld.zero()
        b = q[i] if i < len(q) else fld.zero()
        out.append(fld.add(a, b))
    return trim(out)

def scale(p: list, c, fld: FieldSpec) -> list:
    if fld.is_zero(c):
        return []
    return [fld.mul(a, c) for a in p]


def mul(p: list, q: list, fld: FieldSpec) -> list:
    if not p or not q:
        return []
    out = [fld.zero()] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if fld.is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = fld.add(out[i + j], fld.mul(a, b))
    return trim(out)


def divmod_poly(p: list, q: list, fld: FieldSpec):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [fld.zero()] * max(0, len(p) - len(q) + 1)
    lead_inv = fld.inv(q[-1])
    while len(r) >= len(q) and trim(r):
        shift = len(r) - len(q)
        c = fld.mul(r[-1], lead_inv)
        quo[shift] = c
        for i, b in enumerate(q):
            r[shift + i] = fld.sub(r[shift + i], fld.mul(c, b))
        trim(r)
    return trim(quo), trim(r)


def gcd(p: list, q: list, fld: FieldSpec) -> list:
    a, b = trim(list(p)), trim(list(q))
    while b:
        _, r = divmod_poly(a, b, fld)
        a, b = b, r
    if a:
        inv = fld.inv(a[-1])
        a = [fld.mul(c, inv) for c in a]
    return a


def ext_gcd(p: list, q: list, fld: FieldSpec):
    """(g, s, t) with s*p + t*q = g, g monic."""
    a, b = trim(list(p)), trim(list(q))
    s0, s1 = [fld.one()], []
    t0, t1 = [], [fld.one()]
    while b:
        quo, r = divmod_poly(a, b, fld)
        a, b = b, r
        s0, s1 = s1, add(s0, scale(mul(quo, s1, fld), fld.neg(fld.one()), fld), fld)
        t0, t1 = t1, add(t0, scale(mul(quo, t1, fld), fld.neg(fld.one()), fld), fld)
    if a:
        inv = fld.inv(a[-1])
        a = [fld.mul(c, inv) for c in a]
        s0 = scale(s0, inv, fld)
        t0 = scale(t0, inv, fld)
    return a, s0, t0


def eval_in_algebra(p: list, elem_pow):
    """Evaluate p at an element given a function elem_pow(k) -> k-th power
    vector; powers are combined by the caller's vector arithmetic, so this
    helper just pairs coefficients with powers."""
    return [(i, c) for i, c in enumerate(p) if c != 0]
