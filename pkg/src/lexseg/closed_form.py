"""Closed-form associated primes of lexsegment ideals.

The dispatcher normalizes a spec (dividing out x1^b1 and dropping unused
leading variables), routes the reduced spec to the matching case formula,
and re-indexes the result back into the original ring. All formulas act
only on reduced specs and hard-fail otherwise, so normalization happens
in exactly one place.
"""

from __future__ import annotations

from .depth import DepthClass, depth_class
from .monomials import (
    LexSpec,
    Monomial,
    PrimeIdeal,
    SpecError,
    SpecKind,
    classify,
    colon,
    lexsegment_generators,
    max_var,
    mon_div,
    mon_mul,
    reduce_fully,
    supp,
    variable,
)


def _require_reduced(spec: LexSpec) -> None:
    if spec.b1 > 0 or spec.a1 == 0:
        raise SpecError(f"spec not reduced: a1={spec.a1}, b1={spec.b1}")


def supp_witness_primes(spec: LexSpec) -> list[tuple[PrimeIdeal, Monomial]]:
    """The primes (x1..xj) for j in supp(v) \\ {n}, with explicit witnesses.

    Each witness w = (v / x_j) * xn^(d - bn) is checked sound against the
    generated ideal: w not in I and (I : w) = (x1, ..., xj).
    """
    n, d = spec.n, spec.d
    if spec.a1 == 0:
        raise SpecError("x1 must divide u")
    if spec.b1 > 0:
        raise SpecError("x1 must not divide v")
    if spec.v == variable(n, n, d):
        raise SpecError("v = xn^d is excluded")
    ideal = lexsegment_generators(spec)
    bn = spec.v[n - 1]
    out = []
    for j in supp(spec.v):
        if j == n:
            continue
        w = mon_mul(mon_div(spec.v, variable(n, j)), variable(n, n, d - bn))
        prime = PrimeIdeal.span(n, 1, j)
        if w in ideal or colon(ideal, w) != prime.to_ideal():
            raise SpecError(f"witness {w} for {prime.vars} failed its soundness check")
        out.append((prime, w))
    return out


def ass_initial(spec: LexSpec) -> frozenset[PrimeIdeal]:
    """Initial segments u = x1^d: primes (x1..xj) for j in supp(v) ∪ {n}."""
    _require_reduced(spec)
    if classify(spec).kind not in (SpecKind.INITIAL, SpecKind.FULL_SEGMENT):
        raise SpecError("not an initial lexsegment spec")
    n = spec.n
    return frozenset(
        PrimeIdeal.span(n, 1, j) for j in set(supp(spec.v)) | {n}
    )


def ass_final(spec: LexSpec) -> frozenset[PrimeIdeal]:
    """Final segments v = xn^d with x1 | u, u != x1^d."""
    _require_reduced(spec)
    if classify(spec).kind != SpecKind.FINAL:
        raise SpecError("not a final lexsegment spec (or u = x1^d)")
    n = spec.n
    return frozenset({PrimeIdeal.maximal(n), PrimeIdeal.span(n, 2, n)})


def ass_depth0(spec: LexSpec) -> frozenset[PrimeIdeal]:
    """Arbitrary class, depth 0: the initial-segment primes plus (x2..xn)."""
    _require_reduced(spec)
    if classify(spec).kind != SpecKind.ARBITRARY:
        raise SpecError("not an arbitrary-class spec")
    case = depth_class(spec)
    if case.depth is not DepthClass.DEPTH0:
        raise SpecError(f"depth class is {case.depth}, not depth 0")
    n = spec.n
    primes = {PrimeIdeal.span(n, 1, j) for j in set(supp(spec.v)) | {n}}
    primes.add(PrimeIdeal.span(n, 2, n))
    return frozenset(primes)


def _p_jt(n: int, j: int, t: int) -> PrimeIdeal | None:
    """P_{j,t} = (x2..xj, xt..xn), defined only for 2 <= j <= t-2 <= n-2."""
    if not (2 <= j <= t - 2 and t <= n):
        return None
    return PrimeIdeal.from_vars(n, list(range(2, j + 1)) + list(range(t, n + 1)))


def ass_depth_pos(spec: LexSpec, case=None) -> frozenset[PrimeIdeal]:
    """Arbitrary class with positive depth: the four P_{j,t} formulas."""
    _require_reduced(spec)
    if classify(spec).kind != SpecKind.ARBITRARY:
        raise SpecError("not an arbitrary-class spec")
    if case is None:
        case = depth_class(spec)
    if case.depth not in (DepthClass.DEPTH1, DepthClass.DEPTH_GE2):
        raise SpecError(f"depth class is {case.depth}, not positive")
    n = spec.n
    l = spec.l
    sv = supp(spec.v)
    primes: set[PrimeIdeal] = {
        PrimeIdeal.span(n, 1, j) for j in sv if j != n
    }

    def add_family(t: int, jbound: int | None) -> None:
        for j in sv:
            if jbound is not None and j > jbound:
                continue
            p = _p_jt(n, j, t)
            if p is not None:
                primes.add(p)

    if case.depth is DepthClass.DEPTH1:
        primes.add(PrimeIdeal.span(n, 2, n))
        add_family(l, l - 2)
        if case.subcase == "a":
            add_family(l + 1, l - 1)
    else:
        add_family(l, None)
        if case.subcase == "a":
            add_family(l + 1, None)
    return frozenset(primes)


def associated_primes_lexsegment(spec: LexSpec) -> frozenset[PrimeIdeal]:
    """Ass(S/I) for an arbitrary lexsegment spec, via the case formulas."""
    n0 = spec.n
    work, extras, offset = reduce_fully(spec)

    def shift(primes) -> frozenset[PrimeIdeal]:
        return frozenset(p.shift(offset, n0) for p in primes)

    kind = classify(work).kind
    if kind == SpecKind.PRINCIPAL:
        core = frozenset(
            PrimeIdeal.from_vars(work.n, (i,)) for i in supp(work.u)
        )
    elif work.d == 1:
        # a degree-1 segment (x1, ..., xk) is itself prime
        core = frozenset({PrimeIdeal.span(work.n, 1, max_var(work.v))})
    elif kind == SpecKind.FULL_SEGMENT:
        core = frozenset({PrimeIdeal.maximal(work.n)})
    elif kind == SpecKind.INITIAL:
        core = ass_initial(work)
    elif kind == SpecKind.FINAL:
        core = ass_final(work)
    else:
        case = depth_class(work)
        if case.depth is DepthClass.DEPTH0:
            core = ass_depth0(work)
        else:
            core = ass_depth_pos(work, case)
    return frozenset(extras) | shift(core)
