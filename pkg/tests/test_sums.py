import math

import numpy as np
import pytest

import gen
from lpsums import components as C
from lpsums import oracles as O
from lpsums import sums as S
from lpsums.errors import (
    DegenerateInputError,
    DimensionMismatchError,
    NotEnumerableError,
    ValidationError,
)

E2 = C.euclidean(2)


def two_euclid(p):
    return S.sum_space(p, [E2, E2])


def test_sum_norm_examples():
    x = S.sum_vector({1: [3, 0], 2: [4, 0]})
    assert S.sum_norm(two_euclid(2), x) == pytest.approx(5.0)
    assert S.sum_norm(two_euclid(1), x) == pytest.approx(7.0)
    assert S.sum_norm(two_euclid(0), x) == pytest.approx(4.0)
    assert S.sum_norm(two_euclid(2), S.sum_vector({})) == 0.0
    assert S.sum_norm(two_euclid(0), S.sum_vector({})) == 0.0


def test_element_validation():
    with pytest.raises(ValidationError):
        S.sum_norm(two_euclid(2), S.sum_vector({3: [1, 0]}))
    with pytest.raises(DimensionMismatchError):
        S.sum_norm(two_euclid(2), S.sum_vector({1: [1, 0, 0]}))
    with pytest.raises(ValidationError):
        S.SumVector([(2, [1, 0]), (1, [1, 0])])  # indices must increase
    with pytest.raises(ValidationError):
        S.sum_space(0.5, [E2])


def test_conjugate_exponent_and_dual_space():
    assert two_euclid(3).q == pytest.approx(1.5)
    assert two_euclid(1).q == math.inf
    assert two_euclid(0).q == 1.0
    dual = S.dual_sum_space(S.sum_space(1, [C.linf(2), C.linf(3)]))
    assert dual.p == math.inf
    assert [c.kind for c in dual.components] == ["l1", "l1"]
    assert S.dual_sum_space(two_euclid(0)).p == 1.0
    dual3 = S.dual_sum_space(two_euclid(3))
    assert dual3.p == pytest.approx(1.5)
    assert all(c == E2 for c in dual3.components)


def test_apply_functional():
    f = S.sum_functional({1: [1, 0]})
    x = S.sum_vector({1: [2, 0]})
    assert S.apply_functional(f, x) == pytest.approx(2.0)
    assert S.apply_functional(S.sum_functional({1: [1, 1]}),
                              S.sum_vector({2: [5, 5]})) == 0.0
    f2 = S.sum_functional({1: [1, 0], 2: [0, 1]})
    x2 = S.sum_vector({1: [1, 3], 2: [4, 1]})
    assert S.apply_functional(f2, x2) == pytest.approx(2.0)


def test_norming_element_examples():
    X = two_euclid(2)
    f = S.sum_functional({1: [1, 0], 2: [1, 0]})
    y = S.norming_element(X, f)
    r = 1.0 / math.sqrt(2.0)
    np.testing.assert_allclose(y.entry(1), [r, 0], rtol=1e-15)
    np.testing.assert_allclose(y.entry(2), [r, 0], rtol=1e-15)
    assert S.apply_functional(f, y) == pytest.approx(math.sqrt(2.0))
    assert S.sum_norm(X, y) == pytest.approx(1.0)

    X3 = two_euclid(3)
    f1 = S.sum_functional({1: [1, 0]})
    y1 = S.norming_element(X3, f1)
    np.testing.assert_allclose(y1.entry(1), [1, 0], rtol=1e-15)
    assert S.apply_functional(f1, y1) == pytest.approx(1.0)

    with pytest.raises(DegenerateInputError):
        S.norming_element(X, S.sum_functional({}))


def test_norming_element_random_attainment():
    rng = np.random.default_rng(1031)
    for k in range(300):
        p = (1.0, 0.0, 1.5, 2.0, 3.0)[k % 5]
        space = gen.random_sum_space(rng, p)
        f = S.SumFunctional(gen.random_vector(rng, space).entries)
        nf = S.functional_norm(space, f)
        y = S.norming_element(space, f, eps=1e-8)
        assert S.sum_norm(space, y) == pytest.approx(1.0, abs=1e-12)
        assert S.apply_functional(f, y) >= nf - 1e-8
    # polyhedral components attain exactly
    for k in range(100):
        p = (1.0, 0.0, 1.5, 2.0)[k % 4]
        space = gen.random_sum_space(rng, p, kinds=("l1", "linf", "polygon"))
        f = S.SumFunctional(gen.random_vector(rng, space).entries)
        nf = S.functional_norm(space, f)
        y = S.norming_element(space, f)
        assert abs(S.apply_functional(f, y) - nf) <= 1e-12 * max(1.0, nf)


def test_support_functionals_p3_canonical():
    X = two_euclid(3)
    x = S.sum_vector({1: [2, 0], 2: [1, 0]})
    sset = S.support_functionals(X, x)
    f = sset.canonical()
    scale = 9.0 ** (2.0 / 3.0)
    np.testing.assert_allclose(f.entry(1), [4.0 / scale, 0.0], atol=1e-10)
    np.testing.assert_allclose(f.entry(2), [1.0 / scale, 0.0], atol=1e-10)
    assert S.apply_functional(f, x) == pytest.approx(9.0 ** (1.0 / 3.0), abs=1e-10)
    assert S.functional_norm(X, f) == pytest.approx(1.0, abs=1e-10)
    assert S.is_support(X, x, f)
    assert sset.contains(f)


def test_support_functionals_p1_free_ball():
    X = two_euclid(1)
    x = S.sum_vector({1: [1, 0]})
    sset = S.support_functionals(X, x)
    assert sset.free_indices == (2,)
    # anything of dual norm <= 1 rides along on the free coordinate
    f = S.sum_functional({1: [1, 0], 2: [0, 0.5]})
    assert S.is_support(X, x, f)
    assert sset.contains(f)
    too_big = S.sum_functional({1: [1, 0], 2: [0, 1.5]})
    assert not S.is_support(X, x, too_big)
    assert not sset.contains(too_big)


def test_support_functionals_p0_simplex():
    X = two_euclid(0)
    x = S.sum_vector({1: [1, 0], 2: [1, 0]})
    sset = S.support_functionals(X, x)
    for lam in (0.0, 0.25, 1.0):
        f = S.sum_functional({1: [lam, 0], 2: [1.0 - lam, 0]})
        assert S.is_support(X, x, f)
        assert sset.contains(f)
    bad = S.sum_functional({1: [0.5, 0], 2: [0.1, 0]})  # weights sum to 0.6
    assert not S.is_support(X, x, bad)
    assert not sset.contains(bad)
    # below-max indices carry no weight
    x2 = S.sum_vector({1: [1, 0], 2: [0.5, 0]})
    sset2 = S.support_functionals(X, x2)
    leak = S.sum_functional({1: [0.5, 0], 2: [0.5, 0]})
    assert not sset2.contains(leak)


def test_is_support_rejects_scaling():
    X = two_euclid(3)
    x = S.sum_vector({1: [2, 0], 2: [1, 0]})
    f = S.support_functionals(X, x).canonical()
    assert not S.is_support(X, x, S.SumFunctional(f.scaled(0.5).entries))


def test_support_theorem_equivalence_random():
    """A functional passes the definitional support check iff it
    decomposes per the structural description, across exponents."""
    rng = np.random.default_rng(20111)
    for k in range(1700):
        p = (1.5, 2.0, 3.0, 1.0, 0.0)[k % 5]
        space = gen.random_sum_space(rng, p, max_components=4)
        x = gen.random_vector(rng, space)
        sset = S.support_functionals(space, x)
        ext = None
        try:
            ext = S.support_extreme_points(space, x, max_count=512)
        except NotEnumerableError:
            pass
        if ext:
            # random convex combination of extreme points is a support functional
            weights = rng.dirichlet(np.ones(min(len(ext), 4)))
            chosen = [ext[int(i)] for i in
                      rng.choice(len(ext), size=len(weights), replace=False)]
            f = S.SumFunctional([])
            for w, g in zip(weights, chosen):
                f = f.plus(g, float(w))
            f = S.SumFunctional(f.entries)
            assert S.is_support(space, x, f)
            assert sset.contains(f)
            bad = S.SumFunctional(f.scaled(1.05).entries)
            assert not S.is_support(space, x, bad)
        else:
            f = sset.canonical()
            assert S.is_support(space, x, f)
            assert sset.contains(f)


def test_support_extreme_points_product():
    X = S.sum_space(2, [C.l1(2), E2])
    x = S.sum_vector({1: [1, 0], 2: [1, 0]})
    ext = S.support_extreme_points(X, x)
    r = 1.0 / math.sqrt(2.0)
    got = sorted(
        tuple(np.round(np.concatenate([f.entry(1), f.entry(2)]), 12)) for f in ext
    )
    want = sorted([
        (r, -r, r, 0.0),
        (r, r, r, 0.0),
    ])
    np.testing.assert_allclose(got, want, atol=1e-12)


def test_support_extreme_points_p0_single_index():
    X = two_euclid(0)
    x = S.sum_vector({1: [1, 0], 2: [1, 0]})
    ext = S.support_extreme_points(X, x)
    assert len(ext) == 2
    supports = sorted(f.support() for f in ext)
    assert supports == [(1,), (2,)]
    for f in ext:
        assert S.is_support(X, x, f)


def test_support_extreme_points_smooth_is_singleton():
    rng = np.random.default_rng(127)
    for _ in range(20):
        space = gen.random_sum_space(rng, 2.5, kinds=("euclidean", "lr"))
        x = gen.random_vector(rng, space)
        assert len(S.support_extreme_points(space, x)) == 1


def test_support_extreme_points_not_enumerable():
    X = two_euclid(1)
    x = S.sum_vector({1: [1, 0]})  # free euclidean coordinate
    with pytest.raises(NotEnumerableError):
        S.support_extreme_points(X, x)


def test_diameter_examples():
    X = S.sum_space(2, [C.l1(2), E2])
    x = S.sum_vector({1: [1, 0], 2: [1, 0]})
    assert S.support_diameter(X, x) == pytest.approx(math.sqrt(2.0), abs=1e-12)
    # p=1 with an unsupported declared coordinate
    X1 = two_euclid(1)
    assert S.support_diameter(X1, S.sum_vector({1: [1, 0]})) == 2.0
    # p=0 with a unique max index and smooth component
    X0 = two_euclid(0)
    assert S.support_diameter(X0, S.sum_vector({1: [1, 0], 2: [0.5, 0]})) == 0.0
    assert S.support_diameter(X0, S.sum_vector({1: [1, 0], 2: [1, 0]})) == 2.0


def test_diameter_matches_oracle_random():
    rng = np.random.default_rng(33311)
    checked = 0
    while checked < 250:
        p = (1.5, 2.0, 3.0)[checked % 3]
        space = gen.random_sum_space(rng, p)
        x = gen.random_vector(rng, space)
        d = S.support_diameter(space, x)
        try:
            d_oracle = O.oracle_diameter(space, x)
        except NotEnumerableError:
            continue
        assert abs(d - d_oracle) <= 1e-9 * max(1.0, d)
        checked += 1


def test_diameter_scaling_invariance():
    rng = np.random.default_rng(991)
    for k in range(200):
        p = (1.5, 2.0, 3.0, 1.0, 0.0)[k % 5]
        space = gen.random_sum_space(rng, p)
        x = gen.random_vector(rng, space)
        lam = 0.1 + float(rng.exponential(2.0))
        d1 = S.support_diameter(space, x)
        d2 = S.support_diameter(space, x.scaled(lam))
        assert abs(d1 - d2) <= 1e-9 * max(1.0, d1)


def test_p1_zero_coordinate_law():
    rng = np.random.default_rng(441)
    for _ in range(100):
        space = gen.random_sum_space(rng, 1.0, min_components=2)
        x = gen.random_vector(rng, space, entry_prob=0.5)
        while len(x.support()) >= len(space.components):
            x = gen.random_vector(rng, space, entry_prob=0.5)
        assert S.support_diameter(space, x) == 2.0
        assert O.oracle_diameter(space, x) == 2.0


def test_p0_multiplicity_law():
    rng = np.random.default_rng(443)
    for _ in range(100):
        space = gen.random_sum_space(rng, 0.0, min_components=2)
        x = gen.tied_max_vector(rng, space, ties=2)
        assert S.support_diameter(space, x) == 2.0
        assert abs(O.oracle_diameter(space, x) - 2.0) <= 1e-9


def test_sum_max_support_diameter():
    assert S.sum_max_support_diameter(two_euclid(2)) == 0.0
    assert S.sum_max_support_diameter(S.sum_space(2, [C.linf(2), E2])) == pytest.approx(2.0)
    assert S.sum_max_support_diameter(two_euclid(1)) == 2.0
    assert S.sum_max_support_diameter(two_euclid(0)) == 2.0


def test_smoothness_report():
    X = two_euclid(2)
    rep = S.smoothness_report(X, S.sum_vector({1: [1, 0], 2: [1, 0]}), 0.5)
    assert rep.smooth and rep.eps_smooth and rep.diameter == 0.0

    X1 = two_euclid(1)
    rep1 = S.smoothness_report(X1, S.sum_vector({1: [1, 0]}), 1.99)
    assert not rep1.smooth and not rep1.eps_smooth and rep1.diameter == 2.0

    Xm = S.sum_space(2, [C.l1(2), E2])
    repm = S.smoothness_report(Xm, S.sum_vector({1: [1, 0], 2: [1, 0]}), 1.5)
    assert not repm.smooth and repm.eps_smooth
    assert repm.diameter == pytest.approx(math.sqrt(2.0))

    with pytest.raises(ValidationError):
        S.smoothness_report(X, S.sum_vector({1: [1, 0]}), 2.0)
    with pytest.raises(DegenerateInputError):
        S.smoothness_report(X, S.sum_vector({}), 0.5)


def test_smoothness_structural_consistency_random():
    rng = np.random.default_rng(887)
    for k in range(300):
        p = (1.5, 2.0, 3.0, 1.0, 0.0)[k % 5]
        space = gen.random_sum_space(rng, p)
        x = gen.random_vector(rng, space)
        S.smoothness_report(space, x, 1.0)  # raises on any cross-check failure
