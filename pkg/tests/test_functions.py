"""Tests for the function representations and the dual pairing laws.

Independent routes used as oracles:

* convexity: the structural slope test is compared against the
  definitional chord inequality evaluated on targeted probes around
  every breakpoint (sized to stay inside the adjacent segments, so a
  slope descent is always caught) plus a random triple sample;
* closure_hull: the geometric hull construction is compared against a
  sup-of-affine-minorants oracle that enumerates candidate slopes (all
  pairwise breakpoint chords plus the clipped window ends);
* split laws: the closed-form candidate splits are compared against
  direct affine evaluation at the combined point.
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import infsup.extreal as xr
from infsup.extreal import UpReal, down, up
from infsup.functions import (
    AffineDual,
    ConstBottom,
    ConstTop,
    DownFunction,
    DualElem,
    ImproperSplit,
    PLProper,
    abs_fn,
    affine_eval,
    affine_split_dif,
    affine_split_sup,
    closure_hull,
    dom,
    dual_add,
    dual_scale,
    epi_contains,
    fn_allclose,
    improper_split,
    is_convex,
    negate_fn,
    pl,
)
from infsup.laws import (
    random_closed_convex_fn,
    random_convex_pl,
    random_nonconvex_pl,
    random_pl,
)

INF = math.inf
TOP = UpReal.top()
BOT = UpReal.bottom()

dyadic = st.integers(-40, 40).map(lambda k: k / 4.0)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def test_abs_eval_frozen():
    f = abs_fn()
    assert f.eval(-2.0) == up(2.0)
    assert f.eval(0.0) == up(0.0)
    assert f.eval(1.5) == up(1.5)


def test_pl_eval_interpolation_and_rays():
    f = pl([(0.0, 0.0), (1.0, 1.0)], slope_left=-2.0, slope_right=3.0)
    assert f.eval(0.5) == up(0.5)
    assert f.eval(-1.0) == up(2.0)
    assert f.eval(2.0) == up(4.0)


def test_pl_eval_outside_dom_is_top():
    f = pl([(0.0, 0.0)], slope_right=1.0, dom_lo=0.0, dom_hi=2.0)
    assert f.eval(-0.5) == TOP
    assert f.eval(0.0) == up(0.0)
    assert f.eval(2.0) == up(2.0)  # boundary value attained
    assert f.eval(2.5) == TOP


def test_improper_split_eval():
    f = improper_split(0.0, INF)
    assert f.eval(-1.0) == TOP
    assert f.eval(0.0) == BOT
    assert f.eval(5.0) == BOT


def test_const_eval():
    assert ConstBottom().eval(7.25) == BOT
    assert ConstTop().eval(-3.0) == TOP


def test_eval_rejects_nonfinite_points():
    for f in (abs_fn(), improper_split(0.0, 1.0), ConstTop(), ConstBottom()):
        with pytest.raises(ValueError):
            f.eval(INF)
        with pytest.raises(ValueError):
            f.eval(math.nan)


# ---------------------------------------------------------------------------
# Construction and canonicalization
# ---------------------------------------------------------------------------


def test_make_folds_bounded_domain_into_breakpoints():
    f = pl([(0.0, 0.0)], slope_left=-1.0, slope_right=1.0, dom_lo=-2.0, dom_hi=3.0)
    assert f.xs == [-2.0, 0.0, 3.0]
    assert f.vs == [2.0, 0.0, 3.0]
    assert f.slope_left is None and f.slope_right is None
    assert f.dom() == (-2.0, 3.0)


def test_make_removes_collinear_breakpoints():
    f = pl(
        [(-1.0, 1.0), (0.0, 0.0), (1.0, 1.0), (2.0, 2.0)],
        slope_left=-1.0,
        slope_right=1.0,
    )
    assert fn_allclose(f, abs_fn(), tol=0.0)


def test_make_point_domain():
    f = pl([(0.0, 5.0), (1.0, 6.0)], dom_lo=0.5, dom_hi=0.5)
    assert f.xs == [0.5] and f.vs == [5.5]
    assert f.eval(0.5) == up(5.5)
    assert f.eval(0.6) == TOP


def test_constructor_rejects_bad_data():
    with pytest.raises(ValueError):
        PLProper([0.0, 0.0], [1.0, 2.0], slope_left=0.0, slope_right=0.0)
    with pytest.raises(ValueError):
        PLProper([0.0], [1.0], slope_left=0.0, slope_right=0.0, dom_lo=-1.0)
    with pytest.raises(ValueError):
        PLProper([0.0], [1.0], slope_left=0.0, dom_hi=2.0)
    with pytest.raises(ValueError):
        PLProper([0.0], [1.0], slope_right=1.0)  # missing slope_left
    with pytest.raises(ValueError):
        PLProper([0.0], [math.nan], slope_left=0.0, slope_right=0.0)
    with pytest.raises(ValueError):
        pl([(0.0, 0.0)], slope_left=0.0, slope_right=0.0, dom_lo=2.0, dom_hi=1.0)
    with pytest.raises(ValueError):
        pl([(0.0, 0.0)], slope_right=1.0, dom_lo=-1.0)  # fold needs slope_left


def test_improper_split_factory_canonicalizes():
    assert isinstance(improper_split(3.0, 2.0), ConstTop)
    assert isinstance(improper_split(-INF, INF), ConstBottom)
    assert isinstance(improper_split(2.0, 2.0), ImproperSplit)
    assert isinstance(improper_split(INF, INF), ConstTop)
    with pytest.raises(ValueError):
        ImproperSplit(3.0, 2.0)
    with pytest.raises(ValueError):
        ImproperSplit(-INF, INF)


# ---------------------------------------------------------------------------
# Domain and epigraph
# ---------------------------------------------------------------------------


def test_dom_variants():
    assert dom(abs_fn()) == (-INF, INF)
    assert dom(pl([(0.0, 0.0)], slope_right=1.0, dom_lo=0.0)) == (0.0, INF)
    assert dom(improper_split(0.0, INF)) == (0.0, INF)
    assert dom(ConstTop()) is None
    assert dom(ConstBottom()) == (-INF, INF)


def test_epi_contains_examples():
    f = abs_fn()
    assert epi_contains(f, 1.0, 2.0)
    assert epi_contains(f, 1.0, 1.0)  # boundary
    assert not epi_contains(f, 1.0, 0.5)
    g = improper_split(0.0, INF)
    assert epi_contains(g, 3.0, -100.0)  # Bottom is below everything
    assert not epi_contains(g, -1.0, 100.0)
    assert not epi_contains(ConstTop(), 0.0, 0.0)
    with pytest.raises(ValueError):
        epi_contains(f, 1.0, INF)


# ---------------------------------------------------------------------------
# Convexity: structural test against the definitional chord inequality
# ---------------------------------------------------------------------------


def chord_holds(f, x1, x2, t, tol=1e-9):
    """f(t*x1 + (1-t)*x2) <= t*f(x1) up-plus (1-t)*f(x2), within tol."""
    lhs = f.eval(t * x1 + (1 - t) * x2)
    rhs = xr.isum(xr.scale(t, f.eval(x1)), xr.scale(1 - t, f.eval(x2)))
    if lhs.is_bottom or rhs.is_top:
        return True
    if lhs.is_top or rhs.is_bottom:
        return False
    return lhs.value <= rhs.value + tol


def joint_probes(f):
    # Midpoint probes around each breakpoint, sized to stay inside the two
    # adjacent segments; any adjacent slope descent is then caught exactly.
    out = []
    if not isinstance(f, PLProper):
        return out
    xs = f.xs
    for i, b in enumerate(xs):
        left_gap = (b - xs[i - 1]) if i > 0 else (1.0 if f.dom_lo == -INF else None)
        right_gap = (
            (xs[i + 1] - b) if i < len(xs) - 1 else (1.0 if f.dom_hi == INF else None)
        )
        if left_gap is None or right_gap is None:
            continue
        h = min(left_gap, right_gap) / 2.0
        out.append((b - h, b + h, 0.5))
    return out


def random_triples(rng, n):
    out = []
    for _ in range(n):
        x1 = float(rng.integers(-48, 49)) / 4.0
        x2 = float(rng.integers(-48, 49)) / 4.0
        t = float(rng.integers(0, 5)) / 4.0
        out.append((x1, x2, t))
    return out


def definitional_convex(f, rng, n_random=16):
    probes = joint_probes(f) + random_triples(rng, n_random)
    return all(chord_holds(f, *tr) for tr in probes)


def test_is_convex_examples():
    assert is_convex(abs_fn())
    assert is_convex(improper_split(-1.0, 1.0))
    assert not is_convex(pl([(0.0, 0.0)], slope_left=1.0, slope_right=-1.0))


def test_convexity_structural_matches_definitional():
    rng = np.random.default_rng(2024)
    fns = [random_pl(rng) for _ in range(45)]
    fns += [random_convex_pl(rng) for _ in range(15)]
    fns += [
        improper_split(-1.0, 1.0),
        improper_split(0.0, INF),
        improper_split(-INF, 3.0),
        ConstTop(),
        ConstBottom(),
        abs_fn(),
    ]
    for f in fns:
        assert is_convex(f) == definitional_convex(f, rng), repr(f)


def test_nonconvex_generator_always_detected():
    rng = np.random.default_rng(99)
    for _ in range(25):
        f = random_nonconvex_pl(rng)
        assert not is_convex(f)
        assert not definitional_convex(f, rng)


# ---------------------------------------------------------------------------
# Closed convex hull
# ---------------------------------------------------------------------------


def test_hull_of_double_well():
    f = pl([(-1.0, 0.0), (0.0, 1.0), (1.0, 0.0)], slope_left=-1.0, slope_right=1.0)
    h = closure_hull(f)
    expect = pl([(-1.0, 0.0), (1.0, 0.0)], slope_left=-1.0, slope_right=1.0)
    assert fn_allclose(h, expect, tol=0.0)
    assert h.eval(0.0) == up(0.0)


def test_hull_idempotent_on_closed_convex():
    rng = np.random.default_rng(7)
    for _ in range(60):
        f = random_closed_convex_fn(rng)
        assert fn_allclose(closure_hull(f), f, tol=1e-9), repr(f)
    assert isinstance(closure_hull(ConstBottom()), ConstBottom)
    assert isinstance(closure_hull(ConstTop()), ConstTop)


def test_hull_collapses_without_affine_minorant():
    # end slopes descend and the domain is unbounded both ways: any affine
    # candidate is beaten on one of the rays, so the hull is Bottom
    f = pl([(0.0, 0.0)], slope_left=1.0, slope_right=-1.0)
    assert isinstance(closure_hull(f), ConstBottom)


def test_hull_left_clip_frozen():
    f = pl([(0.0, 0.0), (1.0, -5.0)], slope_left=-1.0, slope_right=0.0)
    h = closure_hull(f)
    expect = pl([(1.0, -5.0)], slope_left=-1.0, slope_right=0.0)
    assert fn_allclose(h, expect, tol=0.0)
    assert h.eval(-1.0) == up(-3.0)
    assert h.eval(1.0) == up(-5.0)


def slope_window(f):
    a_lo = f.slope_left if f.dom_lo == -INF else -INF
    a_hi = f.slope_right if f.dom_hi == INF else INF
    return a_lo, a_hi


def oracle_hull_value(f, x):
    # Sup of affine minorants, enumerating candidate slopes.  A minorant's
    # slope must lie in the window set by the infinite rays; within the
    # window the best offset is min over breakpoints of v - a*xx.  On the
    # domain the sup over the whole window is attained at a hull segment
    # slope (a chord between breakpoints) or at a clipped window end, so
    # enumerating those is exact there.
    a_lo, a_hi = slope_window(f)
    if a_lo > a_hi:
        return BOT
    pts = list(zip(f.xs, f.vs))
    cands = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            s = (pts[j][1] - pts[i][1]) / (pts[j][0] - pts[i][0])
            if a_lo <= s <= a_hi:
                cands.add(s)
    for s in (a_lo, a_hi):
        if math.isfinite(s):
            cands.add(s)
    cands.add(min(max(0.0, a_lo), a_hi))
    best = -INF
    for a in cands:
        b = min(v - a * xx for xx, v in pts)
        best = max(best, a * x + b)
    return up(best)


def hull_probe_points(f):
    xs = list(f.xs)
    out = xs + [(a + b) / 2.0 for a, b in zip(xs, xs[1:])]
    if f.dom_lo == -INF:
        out.append(xs[0] - 7.5)
    if f.dom_hi == INF:
        out.append(xs[-1] + 7.5)
    return out


def test_hull_matches_minorant_enumeration_oracle():
    rng = np.random.default_rng(31)
    fns = [random_nonconvex_pl(rng) for _ in range(40)]
    fns += [random_pl(rng) for _ in range(30)]
    for f in fns:
        h = closure_hull(f)
        a_lo, a_hi = slope_window(f)
        if isinstance(h, ConstBottom):
            assert a_lo > a_hi, repr(f)
            continue
        assert h.is_convex(), repr(f)
        assert h.dom() == f.dom(), repr(f)
        for x in hull_probe_points(f):
            got = h.eval(x)
            want = oracle_hull_value(f, x)
            assert got.is_finite and want.is_finite, repr(f)
            assert abs(got.value - want.value) <= 1e-9, (repr(f), x)
            # the hull never exceeds the function
            assert got <= f.eval(x), (repr(f), x)
        if f.dom_lo > -INF:
            assert h.eval(f.dom_lo - 1.0) == TOP
        if f.dom_hi < INF:
            assert h.eval(f.dom_hi + 1.0) == TOP


# ---------------------------------------------------------------------------
# Negation and the down space
# ---------------------------------------------------------------------------


def test_negate_abs_is_concave():
    h = negate_fn(abs_fn())
    assert isinstance(h, DownFunction)
    assert h.eval(2.0) == down(-2.0)
    assert h.eval(-0.5) == down(-0.5)
    assert h.is_concave()
    back = negate_fn(h)
    assert fn_allclose(back, abs_fn(), tol=0.0)


def test_negate_improper_split_keeps_interval():
    f = improper_split(0.0, INF)
    h = negate_fn(f)
    assert h.dom() == f.dom()
    # down-space reading: dom = {x : Bottom < h(x)}; inside the interval the
    # value is Top of the down space, outside it is Bottom
    assert h.eval(3.0) == xr.DownReal.top()
    assert h.eval(-1.0) == xr.DownReal.bottom()


def test_negate_rejects_non_functions():
    with pytest.raises(TypeError):
        negate_fn(42)
    with pytest.raises(TypeError):
        DownFunction(3.0)


def test_down_hypo_contains():
    h = negate_fn(abs_fn())
    assert h.hypo_contains(1.0, -1.0)
    assert h.hypo_contains(1.0, -2.0)
    assert not h.hypo_contains(1.0, -0.5)


# ---------------------------------------------------------------------------
# Dual elements
# ---------------------------------------------------------------------------


def test_dual_add_table():
    assert dual_add(DualElem.proper(2.0), DualElem.proper(3.0)) == DualElem.proper(5.0)
    assert dual_add(DualElem.hat(1.0), DualElem.proper(5.0)) == DualElem.hat(1.0)
    assert dual_add(DualElem.proper(5.0), DualElem.hat(1.0)) == DualElem.hat(1.0)
    two = dual_add(DualElem.hat(1.0), DualElem.hat(1.0))
    assert two == DualElem.hat(2.0)
    assert two == DualElem.hat(1.0)  # canonical: positively proportional hats coincide
    assert dual_add(DualElem.hat(-1.0), DualElem.hat(1.0)) == DualElem.hat(0.0)
    with pytest.raises(TypeError):
        dual_add(DualElem.hat(1.0), 3.0)


def test_dual_scale():
    assert dual_scale(2.0, DualElem.proper(3.0)) == DualElem.proper(6.0)
    assert dual_scale(2.0, DualElem.hat(3.0)) == DualElem.hat(3.0)
    assert dual_scale(0.0, DualElem.hat(3.0)) == DualElem.proper(0.0)
    assert dual_scale(0.0, DualElem.proper(-2.0)) == DualElem.proper(0.0)
    with pytest.raises(ValueError):
        dual_scale(-1.0, DualElem.proper(1.0))
    with pytest.raises(ValueError):
        dual_scale(INF, DualElem.proper(1.0))


def test_dual_elem_canonical_equality():
    assert DualElem.hat(2.0) == DualElem.hat(7.0)
    assert hash(DualElem.hat(2.0)) == hash(DualElem.hat(7.0))
    assert DualElem.hat(-3.0) == DualElem.hat(-0.5)
    assert DualElem.hat(1.0) != DualElem.hat(-1.0)
    assert DualElem.proper(2.0) != DualElem.proper(3.0)
    assert DualElem.hat(0.0) != DualElem.proper(0.0)
    with pytest.raises(ValueError):
        DualElem("linear", 1.0)
    with pytest.raises(ValueError):
        DualElem.proper(INF)


def test_affine_dual_canonical_keys_are_function_identity():
    # pairs with equal keys must agree everywhere; pairs with different
    # keys must differ somewhere on a grid that covers all thresholds
    catalog = [
        AffineDual(DualElem.proper(1.0), 0.0),
        AffineDual(DualElem.proper(1.0), 1.0),
        AffineDual(DualElem.proper(-2.0), 0.0),
        AffineDual(DualElem.proper(0.0), 0.0),
        AffineDual(DualElem.hat(1.0), 2.0),
        AffineDual(DualElem.hat(2.0), 4.0),
        AffineDual(DualElem.hat(-1.0), 1.0),
        AffineDual(DualElem.hat(0.0), 3.0),
        AffineDual(DualElem.hat(0.0), 0.0),
        AffineDual(DualElem.hat(0.0), -1.0),
        AffineDual(DualElem.hat(0.0), -5.0),
    ]
    grid = [k / 2.0 for k in range(-12, 13)]
    for p in catalog:
        for q in catalog:
            same_fn = all(affine_eval(p, x) == affine_eval(q, x) for x in grid)
            assert (p == q) == same_fn, (p, q)
    with pytest.raises(TypeError):
        AffineDual(1.0, 0.0)
    with pytest.raises(ValueError):
        AffineDual(DualElem.proper(1.0), INF)


def test_affine_eval_examples():
    assert affine_eval(AffineDual(DualElem.hat(1.0), 0.0), -1.0) == BOT
    assert affine_eval(AffineDual(DualElem.hat(1.0), 0.0), 0.0) == BOT  # boundary
    assert affine_eval(AffineDual(DualElem.hat(1.0), 0.0), 1.0) == TOP
    assert affine_eval(AffineDual(DualElem.proper(2.0), 1.0), 3.0) == up(5.0)
    assert affine_eval(AffineDual(DualElem.hat(-2.0), 1.0), -0.5) == BOT
    assert affine_eval(AffineDual(DualElem.hat(-2.0), 1.0), -1.0) == TOP


def test_hat_positive_homogeneity_excluding_zero():
    xs = [k / 2.0 for k in range(-8, 9)]
    for a in (-2.0, 1.0, 0.0):
        xi0 = AffineDual(DualElem.hat(a), 0.0)
        for t in (0.25, 0.5, 1.0, 2.0, 4.0):
            for x in xs:
                assert affine_eval(xi0, t * x) == xr.scale(t, affine_eval(xi0, x))
    # t = 0 fails: 0 * Top is finite 0, but the hat at the origin is Bottom
    xi0 = AffineDual(DualElem.hat(1.0), 0.0)
    assert xr.scale(0.0, affine_eval(xi0, 1.0)) == up(0.0)
    assert affine_eval(xi0, 0.0) == BOT


def test_hat_sub_and_superadditive_but_not_additive():
    # valid laws: hat(x+y) <= hat(x) up-plus hat(y), and hat(x+y) >=
    # hat(x) down-plus hat(y); additivity itself fails at x = -y != 0
    xi0 = AffineDual(DualElem.hat(1.0), 0.0)

    def val(x):
        return affine_eval(xi0, x)

    pts = [k / 2.0 for k in range(-6, 7)]
    for x in pts:
        for y in pts:
            v = val(x + y)
            assert v <= xr.isum(val(x), val(y))
            assert v >= xr.as_up(xr.ssum(xr.as_down(val(x)), xr.as_down(val(y))))
    assert val(0.0) == BOT
    assert xr.isum(val(1.0), val(-1.0)) == TOP  # so the up-sum is not additive


# ---------------------------------------------------------------------------
# The split laws for affine duals
# ---------------------------------------------------------------------------


def test_split_sup_frozen_examples():
    assert affine_split_sup(DualElem.proper(2.0), 1.5, 1.0, 2.0) == up(4.5)
    assert affine_split_sup(DualElem.hat(1.0), 0.0, 2.0, -3.0) == BOT
    assert affine_split_sup(DualElem.hat(1.0), 0.0, 1.0, 1.0) == TOP


def test_split_dif_frozen_examples():
    assert affine_split_dif(DualElem.proper(-1.0), 0.5, 2.0, 3.0) == up(0.5)
    assert affine_split_dif(DualElem.hat(1.0), 0.0, 1.0, 2.0) == BOT
    assert affine_split_dif(DualElem.hat(1.0), 0.0, 3.0, 1.0) == TOP


@given(kind=st.sampled_from(["proper", "hat"]), a=dyadic, r=dyadic, x1=dyadic, x2=dyadic)
def test_split_sup_matches_direct_eval(kind, a, r, x1, x2):
    xi = DualElem(kind, a)
    assert affine_split_sup(xi, r, x1, x2) == affine_eval(AffineDual(xi, r), x1 + x2)


@given(kind=st.sampled_from(["proper", "hat"]), a=dyadic, r=dyadic, x1=dyadic, x2=dyadic)
def test_split_dif_matches_direct_eval(kind, a, r, x1, x2):
    xi = DualElem(kind, a)
    assert affine_split_dif(xi, r, x1, x2) == affine_eval(AffineDual(xi, r), x1 - x2)


# ---------------------------------------------------------------------------
# Fixture pathologies
# ---------------------------------------------------------------------------


def test_mixed_addition_pathology():
    # f Bottom on [2, inf), g Bottom on [-1, 1]: their Bottom sets are
    # disjoint, so the up-sum is Top everywhere (empty, hence convex,
    # epigraph) while the down-sum is Bottom on the union and Top in the
    # gaps, making both the epigraph and the hypograph non-convex.
    f = improper_split(2.0, INF)
    g = improper_split(-1.0, 1.0)
    assert is_convex(f) and is_convex(g)

    def up_combo(x):
        return xr.isum(f.eval(x), g.eval(x))

    def down_combo(x):
        return xr.as_up(xr.ssum(xr.as_down(f.eval(x)), xr.as_down(g.eval(x))))

    grid = [k / 4.0 for k in range(-16, 25)]
    assert all(up_combo(x) == TOP for x in grid)

    frozen = {-2.0: TOP, -1.0: BOT, 0.0: BOT, 1.0: BOT, 1.5: TOP, 2.0: BOT, 3.0: BOT}
    for x, v in frozen.items():
        assert down_combo(x) == v, x

    def epi_member(x, r):
        return down_combo(x) <= up(r)

    def hypo_member(x, r):
        return down_combo(x) >= up(r)

    # epigraph: (1,0) and (2,0) are members, their midpoint is not
    assert epi_member(1.0, 0.0) and epi_member(2.0, 0.0)
    assert not epi_member(1.5, 0.0)
    # hypograph: (-2,5) and (1.5,5) are members, their midpoint is not
    assert hypo_member(-2.0, 5.0) and hypo_member(1.5, 5.0)
    assert not hypo_member(-0.25, 5.0)


def test_positive_homogeneity_excludes_zero_fixture():
    g = improper_split(-INF, 0.0)
    xs = [k / 2.0 for k in range(-8, 9)]
    for t in (0.5, 1.0, 2.0, 3.0):
        for x in xs:
            assert g.eval(t * x) == xr.scale(t, g.eval(x))
    for x in xs:
        assert xr.scale(0.0, g.eval(x)) == up(0.0)
    assert g.eval(0.0) == BOT  # so homogeneity genuinely stops at t = 0


# ---------------------------------------------------------------------------
# Equality plumbing and generators
# ---------------------------------------------------------------------------


def test_function_equality():
    assert abs_fn() == abs_fn()
    assert abs_fn() != pl([(0.0, 0.5)], slope_left=-1.0, slope_right=1.0)
    assert ConstTop() == ConstTop()
    assert ConstTop() != ConstBottom()
    assert improper_split(0.0, 1.0) == improper_split(0.0, 1.0)
    assert improper_split(0.0, 1.0) != improper_split(0.0, 2.0)


def test_generators_produce_advertised_shapes():
    rng = np.random.default_rng(5)
    for _ in range(30):
        assert random_convex_pl(rng).is_convex()
    for _ in range(30):
        f = random_closed_convex_fn(rng)
        assert f.is_convex()
