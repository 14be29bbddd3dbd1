"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line (run with ``pytest tests/test_acceptance.py -v -s``).

Every tolerance is pinned here; nothing is deferred to calibration.
All instance streams are deterministic (fixed seeds, fixed grids).
"""

import time

import numpy as np
import pytest

import gen
from lpsums import components as C
from lpsums import oracles as O
from lpsums import orthogonality as orth
from lpsums import report
from lpsums import sums as S
from lpsums.errors import NotEnumerableError
from lpsums.orthogonality import TriBool


def _report(criterion: str, ok: bool, detail: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'} {criterion}: {detail}")
    return ok


def test_criterion_1_orthogonality_equivalence():
    t0 = time.monotonic()
    total = 0
    disagreements = 0
    for space, x, y in gen.instance_stream(seed=20250101, count=2000):
        total += 1
        if orth.bj_orthogonal(space, x, y) != \
                orth.bj_orthogonal_oracle(space, x, y, tol=1e-7):
            disagreements += 1
    dt = time.monotonic() - t0
    ok = total >= 2000 and disagreements == 0 and dt <= 60.0
    assert _report(
        "criterion 1 (orthogonality equivalence)", ok,
        f"{total} instances over p in {{0,1,1.5,2,3}}, "
        f"{disagreements} disagreements, {dt:.1f}s",
    )


def test_criterion_2_diameter_formula_vs_oracle():
    rng = np.random.default_rng(20250102)
    checked = 0
    worst = 0.0
    while checked < 500:
        p = (1.5, 2.0, 3.0)[checked % 3]
        space = gen.random_sum_space(rng, p)
        x = gen.random_vector(rng, space)
        d_formula = S.support_diameter(space, x)
        try:
            d_oracle = O.oracle_diameter(space, x)
        except NotEnumerableError:
            continue
        worst = max(worst, abs(d_formula - d_oracle) / max(d_formula, 1.0))
        checked += 1
    ok = worst <= 1e-9
    assert _report(
        "criterion 2 (diameter formula vs oracle)", ok,
        f"{checked} instances, worst relative error {worst:.2e} (tol 1e-9)",
    )


def test_criterion_3_dual_isometry():
    rng = np.random.default_rng(20250103)
    worst_gap = 0.0
    worst_hoelder = 0.0
    for k in range(1000):
        p = (1.0, 0.0, 1.5, 2.0, 3.0)[k % 5]
        space = gen.random_sum_space(rng, p)
        f = S.SumFunctional(gen.random_vector(rng, space).entries)
        nf = S.functional_norm(space, f)
        y = S.norming_element(space, f, eps=1e-8)
        worst_gap = max(worst_gap, nf - S.apply_functional(f, y),
                        abs(S.sum_norm(space, y) - 1.0))
        x = gen.random_vector(rng, space)
        slack = abs(S.apply_functional(f, x)) - nf * S.sum_norm(space, x)
        worst_hoelder = max(worst_hoelder, slack)
    worst_exact = 0.0
    for k in range(300):
        p = (1.0, 0.0, 1.5, 2.0)[k % 4]
        space = gen.random_sum_space(rng, p, kinds=("l1", "linf", "polygon"))
        f = S.SumFunctional(gen.random_vector(rng, space).entries)
        nf = S.functional_norm(space, f)
        gap = abs(S.apply_functional(f, S.norming_element(space, f)) - nf)
        worst_exact = max(worst_exact, gap / max(nf, 1.0))
    ok = worst_gap <= 1e-8 and worst_hoelder <= 1e-9 and worst_exact <= 1e-12
    assert _report(
        "criterion 3 (dual isometry)", ok,
        f"1000 functionals: attainment gap {worst_gap:.2e} (tol 1e-8), "
        f"Hoelder slack {worst_hoelder:.2e}, "
        f"polyhedral attainment {worst_exact:.2e} (tol 1e-12)",
    )


def test_criterion_4_p1_p0_diameter_laws():
    rng = np.random.default_rng(20250104)
    failures = 0
    for _ in range(200):
        space = gen.random_sum_space(rng, 1.0, min_components=2)
        x = gen.random_vector(rng, space, entry_prob=0.5)
        while len(x.support()) >= len(space.components):
            x = gen.random_vector(rng, space, entry_prob=0.5)
        if S.support_diameter(space, x) != 2.0 or O.oracle_diameter(space, x) != 2.0:
            failures += 1
    for _ in range(200):
        space = gen.random_sum_space(rng, 0.0, min_components=2)
        x = gen.tied_max_vector(rng, space, ties=int(rng.integers(2, 4)))
        if S.support_diameter(space, x) != 2.0 or \
                abs(O.oracle_diameter(space, x) - 2.0) > 1e-9:
            failures += 1
    ok = failures == 0
    assert _report(
        "criterion 4 (p=1 and p=0 diameter laws)", ok,
        f"200 off-support p=1 + 200 multi-max p=0 instances, {failures} failures "
        "(diameter exactly 2, oracle cross-checked)",
    )


def test_criterion_5_diameter_gap_report():
    t0 = time.monotonic()
    doc = report.build_dgap_report(100, 2.0, samples=200)
    dt = time.monotonic() - t0
    rows_ok = all(
        abs(row["max_support_diameter"] - row["target"]) <= 1e-6
        and row["witness_diameter"] >= row["target"] - 1e-6
        for row in doc["rows"]
    )
    samples_ok = doc["samples"]["all_below_two"] and \
        doc["samples"]["per_sample_bound_respected"]
    ok = rows_ok and samples_ok and doc["certified_all"] and dt <= 120.0
    assert _report(
        "criterion 5 (diameter-gap report)", ok,
        f"100 components certified to 2 - 1/n within 1e-6, "
        f"max sampled diameter {doc['samples']['max_diameter']:.6f} < 2, "
        f"witness supremum {doc['witness_supremum']:.6f}, {dt:.1f}s",
    )


def test_criterion_6_symmetry_falsification():
    rng = np.random.default_rng(20250106)
    confirmed = 0
    total = 0

    def confirm(space, x, side):
        nonlocal confirmed, total
        total += 1
        w = orth.falsify_symmetry(space, x, side, tol=1e-7)
        if w is None:
            return
        if side == "left":
            good = orth.bj_orthogonal_oracle(space, x, w, 1e-7) and \
                not orth.bj_orthogonal_oracle(space, w, x, 1e-7)
        else:
            good = orth.bj_orthogonal_oracle(space, w, x, 1e-7) and \
                not orth.bj_orthogonal_oracle(space, x, w, 1e-7)
        confirmed += good

    # l1 left: off-support and unbalanced full-support instances
    for k in range(200):
        space = gen.random_sum_space(rng, 1.0, min_components=2)
        if k % 2 == 0:
            x = gen.random_vector(rng, space, entry_prob=0.5)
            while len(x.support()) >= len(space.components):
                x = gen.random_vector(rng, space, entry_prob=0.5)
        else:
            x = gen.full_support_vector(rng, space)
        confirm(space, x, "left")
    # c0 right: some coordinate strictly below the max
    for _ in range(200):
        space = gen.random_sum_space(rng, 0.0, min_components=2)
        x = gen.random_vector(rng, space, entry_prob=0.6)
        while len(S.max_attaining_indices(space, x)) >= len(space.components):
            x = gen.random_vector(rng, space, entry_prob=0.6)
        confirm(space, x, "right")
    # general p: unequal norms (both sides) and equal-norm triples
    for k in range(200):
        p = (1.5, 3.0)[k % 2]
        space = gen.random_sum_space(rng, p, min_components=2)
        i, j = sorted(rng.choice(len(space.components), size=2, replace=False) + 1)
        u = gen.random_entry(rng, space.component(int(i)))
        v = gen.random_entry(rng, space.component(int(j)))
        u = u / C.norm(space.component(int(i)), u)
        v = (1.5 + float(rng.exponential())) * v / C.norm(space.component(int(j)), v)
        x = S.sum_vector({int(i): u, int(j): v})
        confirm(space, x, "left" if k % 4 < 2 else "right")
    for k in range(200):
        p = (1.5, 3.0)[k % 2]
        space = gen.random_sum_space(rng, p, min_components=3)
        x = gen.tied_max_vector(rng, space, ties=3)
        while len(x.support()) < 3:
            x = gen.tied_max_vector(rng, space, ties=3)
        confirm(space, x, "left" if k % 4 < 2 else "right")

    # sufficiency side: single euclidean entries are symmetric points
    yes_ok = True
    for _ in range(50):
        space = gen.random_sum_space(rng, 1.0, kinds=("euclidean",), min_components=2)
        i = int(rng.integers(1, len(space.components) + 1))
        x = S.sum_vector({i: gen.random_entry(rng, space.component(i))})
        yes_ok &= orth.symmetric_point(space, x, "right") is TriBool.YES
        space0 = gen.random_sum_space(rng, 0.0, kinds=("euclidean",), min_components=2)
        i = int(rng.integers(1, len(space0.components) + 1))
        x0 = S.sum_vector({i: gen.random_entry(rng, space0.component(i))})
        yes_ok &= orth.symmetric_point(space0, x0, "left") is TriBool.YES

    ok = confirmed == total and total >= 800 and yes_ok
    assert _report(
        "criterion 6 (symmetry theorems)", ok,
        f"{confirmed}/{total} witnesses oracle-confirmed; single-entry "
        f"euclidean symmetry clauses {'hold' if yes_ok else 'FAIL'}",
    )


def test_criterion_7_sip_axioms_and_orthogonality_selectors():
    sel = orth.CANONICAL_SELECTOR
    rng = np.random.default_rng(20250107)
    worst = 0.0
    triples = 0
    for k in range(2000):
        p = (1.0, 0.0, 1.5, 2.0, 3.0)[k % 5]
        space = gen.random_sum_space(rng, p, max_components=4)
        for _ in range(5):
            x = gen.random_vector(rng, space)
            y = gen.random_vector(rng, space, nonzero=False)
            z = gen.random_vector(rng, space, nonzero=False)
            lam = float(rng.normal())
            nx, ny = S.sum_norm(space, x), S.sum_norm(space, y)
            xx = orth.sip(space, sel, x, x)
            worst = max(worst, abs(xx - nx * nx) / max(nx * nx, 1.0))
            additivity = abs(
                orth.sip(space, sel, x, y.plus(z, lam))
                - orth.sip(space, sel, x, y) - lam * orth.sip(space, sel, x, z))
            worst = max(worst, additivity / (1.0 + abs(xx)))
            cauchy = orth.sip(space, sel, x, y) ** 2 - nx * nx * ny * ny
            worst = max(worst, cauchy / max(1.0, nx * nx * ny * ny) - 1e-9)
            triples += 1
    axioms_ok = worst <= 1e-9

    built = 0
    worst_sum = 0.0
    while built < 200:
        p = (1.5, 2.0, 3.0)[built % 3]
        space = gen.random_sum_space(rng, p)
        x, y = gen.orthogonal_pair(rng, space)
        if not orth.bj_orthogonal(space, x, y):
            continue
        selectors = orth.sip_orthogonality_selectors(space, x, y)
        norms = S.component_norms(space, x)
        total = 0.0
        for i, g in selectors.items():
            yi = y.entry(i)
            if yi is None:
                yi = np.zeros(space.component(i).dim)
            total += norms[i] ** (p - 2.0) * norms[i] * float(np.dot(g, yi))
        worst_sum = max(worst_sum, abs(total))
        built += 1
    selectors_ok = worst_sum <= 1e-9
    ok = axioms_ok and selectors_ok and triples >= 10000
    assert _report(
        "criterion 7 (s.i.p. axioms and orthogonality selectors)", ok,
        f"{triples} triples, worst axiom violation {worst:.2e} (tol 1e-9); "
        f"{built} selector constructions, worst sum {worst_sum:.2e} (tol 1e-9)",
    )


def test_criterion_8_right_additivity_at_smooth_points():
    rng = np.random.default_rng(20250108)
    violations = 0
    for k in range(500):
        p = (1.5, 2.0, 3.0)[k % 3]
        space = gen.random_sum_space(rng, p, kinds=("euclidean", "lr"))
        x = gen.random_vector(rng, space)
        if not S.smoothness_report(space, x, 0.0).smooth:
            violations += 1
            continue
        y = gen.completed_orthogonal(space, x,
                                     gen.random_vector(rng, space, nonzero=False))
        z = gen.completed_orthogonal(space, x,
                                     gen.random_vector(rng, space, nonzero=False))
        if not (orth.bj_orthogonal(space, x, y) and orth.bj_orthogonal(space, x, z)):
            violations += 1
            continue
        w = y.plus(z, 1.0)
        if not orth.bj_orthogonal(space, x, w) or \
                not orth.bj_orthogonal_oracle(space, x, w, 1e-7):
            violations += 1
    ok = violations == 0
    assert _report(
        "criterion 8 (right additivity at smooth points)", ok,
        f"500 instances, {violations} violations",
    )
