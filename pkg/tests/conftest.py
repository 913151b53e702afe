from __future__ import annotations

import random

import pytest

from cmtype.fields import QQ
from cmtype.parser import parse_series
from cmtype.series import TruncatedSeries, substitute


def S(text, variables=("x", "y"), prec=12, field=QQ):
    return parse_series(text, variables, field, prec)


def random_polynomial(rng: random.Random, variables, prec, field=QQ,
                      min_deg=0, max_deg=4, n_terms=5, nonzero=True):
    terms = {}
    nvars = len(variables)
    for _ in range(n_terms):
        d = rng.randint(min_deg, max_deg)
        cuts = sorted(rng.randint(0, d) for _ in range(nvars - 1))
        parts = []
        prev = 0
        for c in cuts:
            parts.append(c - prev)
            prev = c
        parts.append(d - prev)
        e = tuple(parts)
        c = field.from_int(rng.randint(-4, 4))
        if not field.is_zero(c):
            terms[e] = c
    if nonzero and not terms:
        terms[(min_deg,) + (0,) * (nvars - 1)] = field.one()
    return TruncatedSeries.from_terms(terms.items(), variables, field, prec)


def random_unit(rng: random.Random, variables, prec, field=QQ):
    c = field.from_int(rng.choice([1, 2, 3, -1, -2]))
    tail = random_polynomial(rng, variables, prec, field,
                             min_deg=1, max_deg=3, n_terms=3, nonzero=False)
    return TruncatedSeries.constant(c, variables, field, prec) + tail


def random_linear_change(rng: random.Random, variables, prec, field=QQ):
    """Invertible linear substitution as an images dict."""
    n = len(variables)
    while True:
        rows = [[field.from_int(rng.randint(-2, 2)) for _ in range(n)]
                for _ in range(n)]
        det = _det_int(rows, field)
        if not field.is_zero(det):
            break
    images = {}
    for i, v in enumerate(variables):
        coeffs = {}
        for j, w in enumerate(variables):
            if not field.is_zero(rows[i][j]):
                e = tuple(1 if k == j else 0 for k in range(n))
                coeffs[e] = rows[i][j]
        images[v] = TruncatedSeries(tuple(variables), field, prec, coeffs, True)
    return images


def _det_int(rows, field):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = field.zero()
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = field.mul(rows[0][j], _det_int(minor, field))
        if j % 2:
            term = field.neg(term)
        total = field.add(total, term)
    return total


def apply_linear(f, images):
    return substitute(f, images)


@pytest.fixture
def rng():
    return random.Random(90125)
