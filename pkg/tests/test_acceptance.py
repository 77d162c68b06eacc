"""Acceptance gate: the seven top-level criteria, one pass/fail line each.

Criteria 1 and 3-5 share two exhaustive sweeps (n=2..4, d=2..3 and
n=5, d=2) run once per session; the remaining criteria use frozen
fixtures, a seeded random-ideal battery, and constructed negatives.
"""

import random

import pytest

from conftest import FIXTURES, P, spec
from lexseg.closed_form import associated_primes_lexsegment
from lexseg.decompose import associated_primes_oracle, irreducible_decomposition
from lexseg.depth import DepthClass, depth_class, depth_exact
from lexseg.filtration import (
    FiltrationStep,
    PrimeFiltration,
    disjoint_cover_check,
    greedy_filtration,
    search_filtration,
    stanley_decomposition,
    verify_prime_filtration,
)
from lexseg.monomials import (
    MonomialIdeal,
    SpecKind,
    classify,
    colon,
    intersect,
    lexsegment_generators,
    reduce_fully,
    unit_ideal,
)
from lexseg.sweep import iter_specs, sweep

MAIN_BUDGET_SECONDS = 60.0
EXT_BUDGET_SECONDS = 120.0


@pytest.fixture(scope="session")
def sweep_main():
    return sweep((2, 4), (2, 3))


@pytest.fixture(scope="session")
def sweep_ext():
    return sweep((5, 5), (2, 2))


def report_line(k, ok, detail):
    print(f"[criterion {k}] {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def family_mismatches(report, family):
    return [m for m in report.mismatches if m.family == family]


def test_criterion_1_closed_form_vs_oracle(sweep_main, sweep_ext):
    """Closed form agrees with the oracle over both exhaustive sweeps,
    within the runtime budgets."""
    bad = family_mismatches(sweep_main, "ass") + family_mismatches(sweep_ext, "ass")
    ok = (
        not bad
        and sweep_main.specs_tested == 357
        and sweep_ext.specs_tested == 120
        and sweep_main.seconds <= MAIN_BUDGET_SECONDS
        and sweep_ext.seconds <= EXT_BUDGET_SECONDS
    )
    report_line(
        1,
        ok,
        f"{sweep_main.specs_tested}+{sweep_ext.specs_tested} specs, "
        f"{len(bad)} prime-set mismatches, "
        f"{sweep_main.seconds:.1f}s/{MAIN_BUDGET_SECONDS:.0f}s and "
        f"{sweep_ext.seconds:.1f}s/{EXT_BUDGET_SECONDS:.0f}s",
    )


def test_criterion_2_fixture_exactness():
    """The five hand-derived instances produce exactly the frozen prime
    sets, and the oracle independently confirms each."""
    failures = []
    for name, n, d, u, v, primes in FIXTURES:
        s = spec(n, d, u, v)
        expected = frozenset(P(n, *vars) for vars in primes)
        closed = associated_primes_lexsegment(s)
        oracle = associated_primes_oracle(lexsegment_generators(s)).primes
        if closed != expected or oracle != expected:
            failures.append(name)
    report_line(
        2,
        not failures,
        f"{len(FIXTURES)} fixtures exact and oracle-confirmed"
        + (f"; failed: {failures}" if failures else ""),
    )


def test_criterion_3_filtration_realization(sweep_main, sweep_ext):
    """staged_filtration passes all three verifiers on every swept ideal,
    and search_filtration never comes back empty."""
    bad = family_mismatches(sweep_main, "filtration") + family_mismatches(
        sweep_ext, "filtration"
    )
    searched = 0
    missing = 0
    for s in iter_specs((2, 4), (2, 3)):
        searched += 1
        if search_filtration(lexsegment_generators(s)) is None:
            missing += 1
    ok = not bad and missing == 0
    report_line(
        3,
        ok,
        f"{len(bad)} verifier failures across both sweeps; "
        f"search found a filtration for {searched - missing}/{searched} ideals",
    )


def test_criterion_4_depth_coherence(sweep_main, sweep_ext):
    """depth_class matches the Betti-number depth on every arbitrary-class
    spec, and GF(2)/GF(32003) depths agree throughout."""
    bad = family_mismatches(sweep_main, "depth") + family_mismatches(
        sweep_ext, "depth"
    )
    # direct recount of classifier comparisons, independent of the sweep
    compared = 0
    wrong = 0
    for s in iter_specs((2, 4), (2, 3)):
        work, _, _ = reduce_fully(s)
        if classify(work).kind != SpecKind.ARBITRARY or work.d < 2:
            continue
        compared += 1
        exact = depth_exact(lexsegment_generators(work), 32003)
        case = depth_class(work)
        agree = {
            DepthClass.DEPTH0: exact == 0,
            DepthClass.DEPTH1: exact == 1,
            DepthClass.DEPTH_GE2: exact >= 2,
        }[case.depth]
        if not agree:
            wrong += 1
    ok = not bad and wrong == 0
    report_line(
        4,
        ok,
        f"{len(bad)} sweep depth mismatches; classifier right on "
        f"{compared - wrong}/{compared} arbitrary-class specs",
    )


def test_criterion_5_stanley_inequality(sweep_main, sweep_ext):
    """sdepth lower bound >= depth on every swept ideal, with the
    finite disjoint-cover certificate passing."""
    bad = family_mismatches(sweep_main, "stanley") + family_mismatches(
        sweep_ext, "stanley"
    )
    report_line(5, not bad, f"{len(bad)} Stanley-bound or cover failures")


def random_ideal(rng):
    while True:
        n = rng.randint(2, 4)
        gens = []
        for _ in range(rng.randint(1, 6)):
            g = tuple(rng.randint(0, 3) for _ in range(n))
            if any(g):
                gens.append(g)
        if gens:
            return MonomialIdeal.from_gens(n, gens)


def test_criterion_6_oracle_self_consistency():
    """100 seeded random ideals: components intersect back to the input,
    the decomposition is irredundant, and every oracle prime carries a
    sound witness matching the decomposition radicals."""
    rng = random.Random(20250825)
    failures = 0
    for _ in range(100):
        ideal = random_ideal(rng)
        comps = irreducible_decomposition(ideal)
        meet = unit_ideal(ideal.n)
        for c in comps:
            meet = intersect(meet, c.to_ideal())
        if meet != ideal:
            failures += 1
            continue
        irredundant = True
        for c in comps:
            rest = unit_ideal(ideal.n)
            for k in comps:
                if k != c:
                    rest = intersect(rest, k.to_ideal())
            if rest == ideal:
                irredundant = False
        result = associated_primes_oracle(ideal)
        radicals = {c.radical() for c in comps}
        witnessed = {p for p, _ in result.witnesses}
        sound = all(
            w not in ideal and colon(ideal, w) == p.to_ideal()
            for p, w in result.witnesses
        )
        if not (
            irredundant
            and result.primes == radicals
            and witnessed == set(result.primes)
            and sound
        ):
            failures += 1
    report_line(6, failures == 0, f"{100 - failures}/100 random ideals consistent")


def test_criterion_7_negative_controls():
    """The three constructed failures each produce violation reports."""
    base = MonomialIdeal.from_gens(2, [(1, 1)])
    good = greedy_filtration(base)
    swapped = PrimeFiltration(base, (good.steps[1], good.steps[0]))
    fail_swap = not verify_prime_filtration(swapped).ok

    decomposition = stanley_decomposition(good)
    dropped = type(decomposition)(2, decomposition.spaces[:1])
    fail_drop = not disjoint_cover_check(base, dropped, 4).ok
    doubled = type(decomposition)(2, decomposition.spaces + decomposition.spaces[:1])
    fail_double = not disjoint_cover_check(base, doubled, 4).ok

    ok = fail_swap and fail_drop and fail_double
    report_line(
        7,
        ok,
        "swapped steps, dropped space, duplicated space all rejected"
        if ok
        else f"swap={fail_swap} drop={fail_drop} double={fail_double}",
    )
