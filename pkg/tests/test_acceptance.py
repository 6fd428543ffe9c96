"""Acceptance suite: fourteen exact checks, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or
``python tests/test_acceptance.py`` for a plain summary.
"""

import math
import random
import time
from fractions import Fraction
from functools import partial

import pytest

from hooklab.cores import (
    all_reductions,
    core_vectors,
    delta_profile,
    gks_phi,
    gks_phi_inv,
    gks_weight,
    is_t_core,
    make_pair,
    phi1,
    phi2,
    t_core_reduce,
    t_cores,
    varphi,
)
from hooklab.hooks import (
    CompactSet,
    bij_product_check,
    compact_lemma_check,
    distinct_signed_sum,
    genfunc_pair,
    no_product,
    no_rhs,
    pair_Q,
    pair_rhs,
    random_compact_set,
    random_pairs,
    sc_dd_pairs,
    symplectic_hook_sum,
    typeC_product,
    typeC_rhs,
)
from hooklab.macdonald import lattice_spec, lattice_weight, macdonald_constant, minimal_vector, verify_macdonald
from hooklab.partitions import make_partition, partitions
from hooklab.series import eta_power, poly_identity_check, power_product

P = make_partition


def report(number, title, result):
    ok, detail = result
    print(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}")
    assert ok, detail


def nekrasov_okounkov():
    start = time.perf_counter()
    rep = poly_identity_check(partial(no_rhs, order=12), partial(no_product, order=12), 12, lambda m: m)
    elapsed = time.perf_counter() - start
    ok = rep.ok and len(rep.samples) == 13 and elapsed < 30
    return ok, f"{rep}, {elapsed:.1f}s"


def type_c_polynomial():
    start = time.perf_counter()
    rep = poly_identity_check(partial(typeC_rhs, order=15), partial(typeC_product, order=15), 15, lambda m: 2 * m)
    elapsed = time.perf_counter() - start
    ok = rep.ok and len(rep.samples) == 31 and elapsed < 120
    return ok, f"{rep}, {elapsed:.1f}s"


def type_c_at_minus_one():
    lhs = typeC_rhs(-1, 20)
    ok = lhs == distinct_signed_sum(20) == power_product(1, 20)
    return ok, "t=-1 matches signed distinct sum and prod(1-x^k) to order 20"


def _macdonald(family, ts, order):
    bad = [(t, r.mismatch) for t in ts for r in [verify_macdonald(family, t, order)] if not r.ok]
    return not bad, f"family {family}, t in {ts}, order {order}" + (f", mismatches {bad}" if bad else "")


def macdonald_c():
    ok, detail = _macdonald("C", [2, 3, 4], 20)
    leads = []
    for t in (2, 3, 4):
        w = lattice_weight("C", minimal_vector(lattice_spec("C", t)))
        leads.append(macdonald_constant("C", t) * w)
    w2 = lattice_weight("C", minimal_vector(lattice_spec("C", 2)))
    ok = ok and all(c == 1 for c in leads) and w2 == -6
    return ok, detail + f", leading coefficients {[str(c) for c in leads]}, weight at t=2 is {w2}"


def hook_formula():
    got = {n: symplectic_hook_sum(n) for n in range(1, 13)}
    ok = all(got[n] == Fraction(1, 2**n * math.factorial(n)) for n in got)
    ok = ok and got[1] == Fraction(1, 2) and got[2] == Fraction(1, 8)
    return ok, f"n=1..12, n=1 -> {got[1]}, n=2 -> {got[2]}, n=12 -> {got[12]}"


def bijections():
    checked = 0
    for t in range(2, 8):
        for core in t_cores(t, 30):
            v = gks_phi(core, t)
            if gks_phi_inv(v) != core or gks_weight(v.entries) != core.weight:
                return False, f"GKS law fails on {core} for t={t}"
            checked += 1
    examples = [
        gks_phi(P([7, 5, 3, 1, 1]), 3).entries == (3, -2, -1),
        gks_phi(P([7, 5, 3, 2, 2, 1, 1]), 3).entries == (3, 0, -3),
        phi1(P([7, 5, 3, 2, 2, 1, 1]), 3).entries == (-3,),
        phi2(P([5, 3, 1, 1]), 3).entries == (-2,),
        varphi(make_pair([7, 5, 3, 2, 2, 1, 1], [5, 3, 1, 1], 3)).entries == (-2, -3),
    ]
    if not all(examples):
        return False, f"worked examples {examples}"
    pairs = 0
    all_pairs = list(sc_dd_pairs(40))
    for T in range(2, 7):
        t, m = T - 1, 2 * T
        for pair in all_pairs:
            if not (is_t_core(pair.lam, T) and is_t_core(pair.mu, T)):
                continue
            n = varphi(pair, t).entries
            prof = delta_profile(pair, t)
            for i, x in enumerate(n, start=1):
                s = 1 if x >= 0 else -1
                if t + 1 + prof.delta_i[i] != s * (m * x + i):
                    return False, f"Delta_i relation fails on {pair} (t+1={T}, i={i})"
            pairs += 1
    return True, f"{checked} t-cores round-trip, 5 worked examples, Delta_i relation on {pairs} core pairs"


def generating_function():
    bad = [T for T in range(2, 7) if genfunc_pair(T, 30, "enumerate") != genfunc_pair(T, 30, "product")]
    return not bad, "t+1 in 2..6 to order 30" + (f", mismatch at {bad}" if bad else "")


def compact_sets():
    rng = random.Random(2024)
    for t in range(1, 5):
        for _ in range(500):
            A = random_compact_set(rng, t)
            ok, lhs, rhs = compact_lemma_check(A)
            if not ok:
                return False, f"t={t}, {sorted(A.elements)}: {lhs} != {rhs}"
    minimal = [compact_lemma_check(CompactSet(t, frozenset(range(-2 * t - 1, 0))))[1] for t in range(1, 5)]
    worked = compact_lemma_check(CompactSet(1, frozenset({-1, -2, -3, 1})))[1]
    ok = all(x == -1 for x in minimal) and worked == 15
    return ok, f"2000 random sets, minimal sets -> {minimal[0]}, t=1 {{-1,-2,-3,1}} -> {worked}"


def vanishing():
    seen = 0
    for t in (2, 3):
        for pair in sc_dd_pairs(16):
            cores = is_t_core(pair.lam, t + 1) and is_t_core(pair.mu, t + 1)
            if (pair_Q(pair, t) != 0) != cores:
                return False, f"t={t}: pair_Q vanishing wrong on {pair}"
            seen += 1
        if pair_rhs(t, 12, cores_only=True) != pair_rhs(t, 12):
            return False, f"t={t}: cores-only sum differs"
    return True, f"{seen} pairs checked, cores-only sum equal to order 12"


def bridge():
    rng = random.Random(7)
    for t in range(2, 6):
        for pair in random_pairs(rng, 100, 20):
            rep = bij_product_check(pair, t)
            if not rep:
                return False, f"t={t}, {pair}: {rep}"
        if pair_rhs(t, 12) != typeC_rhs(t, 12):
            return False, f"pair sum differs from type C sum at t={t}"
    return True, "400 random pairs, pair_rhs equals typeC_rhs to order 12 for t=2..5"


def ribbon_order():
    rng = random.Random(11)
    pool = [p for n in range(26) for p in partitions(n)]
    for _ in range(200):
        p, t = rng.choice(pool), rng.randint(2, 5)
        outs = all_reductions(p, t)
        if len(outs) != 1 or not is_t_core(next(iter(outs)), t) or next(iter(outs)) != t_core_reduce(p, t):
            return False, f"{p}, t={t}: {outs}"
    return True, "200 random partitions, every removal order gives the same core"


CRITERIA = [
    (1, "Nekrasov-Okounkov in z", nekrasov_okounkov),
    (2, "type C expansion in t", type_c_polynomial),
    (3, "type C at t=-1", type_c_at_minus_one),
    (4, "Macdonald A", lambda: _macdonald("A", [3, 5], 20)),
    (5, "Macdonald C", macdonald_c),
    (6, "Macdonald B", lambda: _macdonald("B", [3, 4], 15)),
    (7, "Macdonald BC", lambda: _macdonald("BC", [1, 2, 3], 15)),
    (8, "symplectic hook formula", hook_formula),
    (9, "bijection suite", bijections),
    (10, "core pair generating function", generating_function),
    (11, "compact-set lemma", compact_sets),
    (12, "vanishing off cores", vanishing),
    (13, "pair to doubled distinct bridge", bridge),
    (14, "ribbon removal order", ribbon_order),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    report(number, title, check())


if __name__ == "__main__":
    failed = 0
    for number, title, check in CRITERIA:
        try:
            report(number, title, check())
        except AssertionError:
            failed += 1
    print(f"{len(CRITERIA) - failed}/{len(CRITERIA)} criteria passed")
    raise SystemExit(1 if failed else 0)
