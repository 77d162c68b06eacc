"""Shared fixtures and helpers for the test suite."""

import pytest

from lexseg.monomials import LexSpec, MonomialIdeal, PrimeIdeal
from lexseg.serialize import parse_monomial


def P(n, *vars):
    return PrimeIdeal.from_vars(n, vars)


def I(n, *gens):
    """Ideal from monomial strings, e.g. I(3, "x1*x2", "x2^2")."""
    return MonomialIdeal.from_gens(n, [parse_monomial(g, n) for g in gens])


def spec(n, d, u, v):
    return LexSpec(n, d, parse_monomial(u, n), parse_monomial(v, n))


# The five hand-derived associated-prime fixtures. Each expected set was
# confirmed against the independent decomposition oracle when the suite
# was written, and the oracle cross-check is repeated in the tests.
FIXTURES = [
    ("A", 3, 2, "x1*x2", "x2*x3", [(1, 2), (1, 2, 3), (2, 3)]),
    ("B", 4, 2, "x1*x2", "x2*x4", [(1, 2), (1, 2, 3, 4), (2, 3, 4)]),
    ("C", 4, 2, "x1*x2", "x2*x3", [(2, 3, 4), (1, 2), (1, 2, 3)]),
    ("D", 4, 3, "x1*x3*x4", "x2^2*x3", [(2, 3, 4), (1, 2), (1, 2, 3), (2, 4)]),
    ("E", 5, 2, "x1*x5", "x2*x3", [(1, 2), (1, 2, 3), (2, 5), (2, 3, 5)]),
]


@pytest.fixture(params=FIXTURES, ids=[f[0] for f in FIXTURES])
def fixture_case(request):
    name, n, d, u, v, primes = request.param
    return spec(n, d, u, v), frozenset(P(n, *vars) for vars in primes)
