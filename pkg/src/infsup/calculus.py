"""Convex calculus for the up-space function representations.

Directional derivatives, extended subdifferentials, conjugation with
respect to the inf-dual (proper linear functionals and improper hats),
biconjugation, and infimal convolution.  Every supremum or infimum over
the real line is computed in closed form from the piecewise-linear
structure; nothing in this module samples a grid.

The conjugate machinery rests on one primitive, the exact transform of
a piecewise-linear function h into w -> sup_u (w*u - h(u)): the sup is
Top outside the slope window set by h's infinite rays and otherwise is
the upper envelope of the lines w -> x_i*w - v_i through h's
breakpoints.  The transform is applied twice for biconjugation, and the
infimal convolution of proper functions is the inverse transform of the
sum of the two conjugate curves (exact here: piecewise-linear convex
functions are polyhedral, so the infimum in the convolution is attained
and the result is closed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .extreal import (
    DownReal,
    UpReal,
    as_down,
    as_up,
    idif,
    isum,
    ssum,
)
from .functions import (
    AffineDual,
    ConstBottom,
    ConstTop,
    DualElem,
    ImproperSplit,
    PLProper,
    UpFunction,
    _require_finite,
    _sign,
    affine_eval,
    improper_split,
)

INF = math.inf


# ---------------------------------------------------------------------------
# Directional derivatives.
# ---------------------------------------------------------------------------


def diff_quotient(g, x0, x, t):
    """The quotient (1/t) * (g(x0 + t*x) up-minus g(x0)) for t > 0."""
    t = float(t)
    if not (t > 0 and math.isfinite(t)):
        raise ValueError(f"quotient needs a finite t > 0, got {t}")
    d = idif(g.eval(x0 + t * x), g.eval(x0))
    if d.is_finite:
        return UpReal(d.value / t)
    return d


def dirderiv(g, x0, x):
    """Directional derivative of a convex g at x0 in direction x.

    The limit of the difference quotients as t decreases to 0 equals
    their infimum over t > 0 (the quotient is monotone in t for convex
    g), and for the representable variants that infimum has a closed
    form: Top at x0 forces Bottom in every direction; at a Bottom point
    the derivative is Bottom iff the direction keeps some x0 + t*x at
    Bottom; at a finite point it is the matching one-sided slope times
    x, or Top when x points out of a bounded domain.
    """
    x0 = _require_finite(x0, "x0")
    x = _require_finite(x, "x")
    if not g.is_convex():
        raise ValueError("directional derivative requires a convex function")
    v0 = g.eval(x0)
    if v0.is_top:
        return UpReal.bottom()
    if v0.is_bottom:
        if isinstance(g, ConstBottom):
            return UpReal.bottom()
        lo, hi = g.dom()
        if x == 0:
            return UpReal.bottom()
        if x > 0:
            return UpReal.bottom() if x0 < hi else UpReal.top()
        return UpReal.bottom() if x0 > lo else UpReal.top()
    if x == 0:
        return UpReal(0.0)
    if x > 0:
        s = g.slope_after(x0)
        return UpReal.top() if s is None else UpReal(x * s)
    s = g.slope_before(x0)
    return UpReal.top() if s is None else UpReal(x * s)


# ---------------------------------------------------------------------------
# Extended subdifferentials.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubdiffDescription:
    """Extended subdifferential at a point.

    ``proper`` is the closed interval of classical subgradient slopes as
    an (lo, hi) pair with infinite ends allowed, or None when empty.
    ``improper`` holds the canonical hat slopes (each in {-1, 0, +1});
    the constant-Bottom element, canonical slope 0, belongs to every
    extended subdifferential, which is what ``contains_bottom`` records.
    """

    proper: tuple | None
    improper: frozenset
    contains_bottom: bool = True

    def __post_init__(self):
        if 0.0 not in self.improper or not self.contains_bottom:
            raise ValueError("the constant Bottom element is always a subgradient")

    def proper_contains(self, a):
        return self.proper is not None and self.proper[0] <= a <= self.proper[1]

    def hat_contains(self, a):
        return float(_sign(a)) in self.improper

    def contains(self, xi):
        if not isinstance(xi, DualElem):
            raise TypeError("contains expects a DualElem")
        if xi.is_hat:
            return self.hat_contains(xi.a)
        return self.proper_contains(xi.a)


def subdiff_extended(g, x0):
    """All extended subgradients of g at x0.

    At a Top point only the constant Bottom element remains.  At a
    Bottom point of an improper function there are no proper
    subgradients, and a nonzero hat belongs iff its favorable halfline
    anchored at x0 covers the whole domain.  At a finite point the
    proper part is the interval between the one-sided slopes (opening
    to infinity at a bounded domain end), with the same halfline rule
    for the hats.
    """
    x0 = _require_finite(x0, "x0")
    v0 = g.eval(x0)
    if v0.is_top:
        return SubdiffDescription(proper=None, improper=frozenset({0.0}))
    lo, hi = g.dom()
    imp = {0.0}
    if hi <= x0:
        imp.add(1.0)
    if lo >= x0:
        imp.add(-1.0)
    if v0.is_bottom:
        return SubdiffDescription(proper=None, improper=frozenset(imp))
    sb = g.slope_before(x0)
    sa = g.slope_after(x0)
    p_lo = -INF if sb is None else sb
    p_hi = INF if sa is None else sa
    return SubdiffDescription(proper=(p_lo, p_hi), improper=frozenset(imp))


def is_subgradient(g, x0, xi):
    """The definitional subgradient test: xi(x - x0) below g(x) up-minus g(x0).

    Evaluated in closed form: a proper slope a works iff the affine
    function through (x0, g(x0)) with slope a stays below g, which is
    the conjugate inequality sup(a*x - g(x)) <= a*x0 - g(x0); a hat
    works iff its favorable halfline covers the domain, except at a Top
    point where only the constant Bottom hat survives.
    """
    x0 = _require_finite(x0, "x0")
    if not isinstance(xi, DualElem):
        raise TypeError("is_subgradient expects a DualElem")
    if not g.is_convex():
        raise ValueError("subgradient test requires a convex function")
    v0 = g.eval(x0)
    if xi.is_hat:
        if v0.is_top:
            return xi.a == 0
        lo, hi = g.dom()
        if xi.a > 0:
            return hi <= x0
        if xi.a < 0:
            return lo >= x0
        return True
    if not v0.is_finite:
        return False
    return _sup_linear_minus(g, xi.a) <= xi.a * x0 - v0.value


# ---------------------------------------------------------------------------
# The exact piecewise-linear Legendre transform.
# ---------------------------------------------------------------------------


def _sup_linear_minus(g, a):
    """sup over x of a*x - g(x), as a float in [-inf, +inf].

    For a piecewise-linear proper function the sup is +inf exactly when
    a falls outside the slope window of the infinite rays, and otherwise
    is attained at a breakpoint.  Functions with a Bottom point push the
    sup to +inf; the empty-domain function leaves it at -inf.
    """
    if isinstance(g, ConstTop):
        return -INF
    if isinstance(g, (ConstBottom, ImproperSplit)):
        return INF
    if not isinstance(g, PLProper):
        raise TypeError(f"not an up-space function: {type(g).__name__}")
    if g.dom_lo == -INF and a < g.slope_left:
        return INF
    if g.dom_hi == INF and a > g.slope_right:
        return INF
    return max(a * x - v for x, v in zip(g.xs, g.vs))


def _pl_legendre(f):
    """Transform of a PLProper f: w -> sup_u (w*u - f(u)), exactly.

    The result is Top outside the window [slope_left, slope_right]
    (each bound dropping away when the corresponding domain side is
    bounded) and inside the window is the upper envelope of the lines
    w -> x_i*w - v_i, one per breakpoint.  An empty window, which only
    a non-convex f can produce, means the transform is Top everywhere.
    """
    w_lo = f.slope_left if f.dom_lo == -INF else -INF
    w_hi = f.slope_right if f.dom_hi == INF else INF
    if w_lo > w_hi:
        return ConstTop()

    lines = [(x, -v) for x, v in zip(f.xs, f.vs)]
    keep = []
    for m, b in lines:
        while len(keep) >= 2:
            (m1, b1), (m2, b2) = keep[-2], keep[-1]
            # the middle line never wins if the new line overtakes it no
            # later than the point where it overtook its predecessor
            if (b1 - b) * (m2 - m1) <= (b1 - b2) * (m - m1):
                keep.pop()
            else:
                break
        keep.append((m, b))

    if len(keep) == 1:
        m, b = keep[0]
        return PLProper.make(
            [(0.0, b)], slope_left=m, slope_right=m, dom_lo=w_lo, dom_hi=w_hi
        )
    breaks = []
    for j in range(len(keep) - 1):
        (m1, b1), (m2, b2) = keep[j], keep[j + 1]
        w = (b1 - b2) / (m2 - m1)
        breaks.append((w, m1 * w + b1))
    return PLProper.make(
        breaks,
        slope_left=keep[0][0],
        slope_right=keep[-1][0],
        dom_lo=w_lo,
        dom_hi=w_hi,
    )


def _halfline_includes(a, r, interval):
    """Whether the hat's favorable set {x : a*x - r <= 0} covers interval."""
    if interval is None:
        return True
    lo, hi = interval
    if a > 0:
        return a * hi <= r
    if a < 0:
        return a * lo <= r
    return r >= 0


# ---------------------------------------------------------------------------
# Conjugation.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjugateCurve:
    """The conjugate of one function, packaged for repeated queries.

    ``curve`` is the slope-variable function a -> conjugate at (a, 0),
    stored in the up representation; its values are read in the down
    space through :meth:`proper_value` (conjugates are down-valued, and
    the reinterpretation keeps the numeric value while a negation
    wrapper would flip it).  ``base_dom`` is the domain of the original
    function and drives the hat rule: at a hat the conjugate is Bottom
    exactly when the hat's favorable halfline covers that domain.
    """

    curve: UpFunction
    base_dom: tuple | None

    def proper_value(self, a, r=0.0):
        u = self.curve.eval(a)
        return as_down(idif(u, UpReal(float(r))))

    def hat_value(self, a, r):
        if _halfline_includes(a, float(r), self.base_dom):
            return DownReal.bottom()
        return DownReal.top()

    def value(self, xi, r):
        if not isinstance(xi, DualElem):
            raise TypeError("value expects a DualElem")
        r = _require_finite(r, "r")
        if xi.is_hat:
            return self.hat_value(xi.a, r)
        return self.proper_value(xi.a, r)


def conjugate_curve(g):
    """Precompute the conjugate of g as a ConjugateCurve.

    The proper-slope curve is the exact transform for piecewise-linear
    g (identically Bottom for the empty function, identically Top as
    soon as g takes the value Bottom somewhere; also Top everywhere for
    a non-convex g without affine minorants, which matches the rule
    that conjugation sees only the closed convex hull).
    """
    if isinstance(g, ConstTop):
        curve = ConstBottom()
    elif isinstance(g, (ConstBottom, ImproperSplit)):
        curve = ConstTop()
    elif isinstance(g, PLProper):
        curve = _pl_legendre(g)
    else:
        raise TypeError(f"not an up-space function: {type(g).__name__}")
    return ConjugateCurve(curve=curve, base_dom=g.dom())


def conjugate(g, xi, r):
    """The conjugate of g at the affine dual element (xi, r), a DownReal."""
    return conjugate_curve(g).value(xi, r)


def young_fenchel_check(g, xi, r, x):
    """Evaluate the three equivalent forms of the pairing inequality at x.

    Returns (a, b, c): the difference form, the sum form, and the
    conjugate-shifted form.  All three are theorems, so callers expect
    (True, True, True) for every input.
    """
    x = _require_finite(x, "x")
    star = conjugate(g, xi, r)
    val = affine_eval(AffineDual(xi, float(r)), x)
    gx = g.eval(x)
    a_holds = as_down(idif(val, gx)) <= star
    b_holds = val <= isum(gx, as_up(star))
    c_holds = idif(val, as_up(star)) <= gx
    return (a_holds, b_holds, c_holds)


# ---------------------------------------------------------------------------
# Affine minorant conditions (the five equivalent tests plus the hat rule).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinorantReport:
    """Joint evaluation of the equivalent minorant conditions for (xi, r).

    (a) the pointwise inequality; (b) sup of the up-differences <= 0;
    (c) the same sup computed through the down-sum identity
    p up-minus q = p down-plus (-q), so it shares (b)'s value; (d) inf
    of the reversed down-differences >= 0; (e) the same inf through the
    up-sum identity; (f) the hat domain-inclusion test, None for proper
    elements.  For a hat that is a minorant the sup collapses to Bottom
    and the inf to Top.
    """

    a_pointwise: bool
    sup_dif: UpReal
    inf_dif: DownReal
    dom_included: bool | None

    @property
    def b_holds(self):
        return self.sup_dif <= UpReal(0.0)

    @property
    def c_holds(self):
        return self.b_holds

    @property
    def d_holds(self):
        return self.inf_dif >= DownReal(0.0)

    @property
    def e_holds(self):
        return self.d_holds

    @property
    def all_agree(self):
        vals = [self.a_pointwise, self.b_holds, self.c_holds, self.d_holds, self.e_holds]
        if self.dom_included is not None:
            vals.append(self.dom_included)
        return len(set(vals)) == 1


def minorant_conditions(g, xi, r):
    """Evaluate the affine-minorant conditions for xi_r against g."""
    if not isinstance(xi, DualElem):
        raise TypeError("minorant_conditions expects a DualElem")
    r = _require_finite(r, "r")
    if xi.is_hat:
        incl = _halfline_includes(xi.a, r, g.dom())
        return MinorantReport(
            a_pointwise=incl,
            sup_dif=UpReal.bottom() if incl else UpReal.top(),
            inf_dif=DownReal.top() if incl else DownReal.bottom(),
            dom_included=incl,
        )
    G = _sup_linear_minus(g, xi.a)
    if math.isinf(G):
        sup_dif = UpReal(G)
        inf_dif = DownReal(-G)
    else:
        sup_dif = UpReal(G - r)
        inf_dif = DownReal(r - G)
    return MinorantReport(
        a_pointwise=G <= r,
        sup_dif=sup_dif,
        inf_dif=inf_dif,
        dom_included=None,
    )


def hat_minorant_witness(g):
    """A hat minorant with nonzero slope for a never-finite g above Bottom.

    Any closed convex function taking only infinite values, other than
    the constant Bottom, has an interval domain missing at least one
    halfline, and the hat cutting along that halfline lies below g
    everywhere.
    """
    if isinstance(g, ConstTop):
        return AffineDual(DualElem.hat(1.0), 0.0)
    if isinstance(g, ImproperSplit):
        if g.hi < INF:
            return AffineDual(DualElem.hat(1.0), g.hi)
        return AffineDual(DualElem.hat(-1.0), -g.lo)
    raise ValueError(
        "witness exists for functions taking only infinite values with a proper domain"
    )


# ---------------------------------------------------------------------------
# Infimal convolution.
# ---------------------------------------------------------------------------


def _pl_add(p, q):
    """Exact sum of two PLProper functions, or None if the domains miss."""
    lo = max(p.dom_lo, q.dom_lo)
    hi = min(p.dom_hi, q.dom_hi)
    if lo > hi:
        return None
    pts = {x for x in p.xs + q.xs if lo <= x <= hi}
    if math.isfinite(lo):
        pts.add(lo)
    if math.isfinite(hi):
        pts.add(hi)
    pts = sorted(pts)
    vals = [p.eval(x).value + q.eval(x).value for x in pts]
    sl = p.slope_left + q.slope_left if lo == -INF else None
    sr = p.slope_right + q.slope_right if hi == INF else None
    return PLProper.make(list(zip(pts, vals)), sl, sr, dom_lo=lo, dom_hi=hi)


def infconv(f, g):
    """Infimal convolution inf over splits x1 + x2 = x of f(x1) up-plus g(x2).

    ConstTop absorbs (an empty operand empties the result); otherwise a
    Bottom value anywhere drags the whole result to Bottom through the
    unbounded splits.  A never-finite operand turns the result into the
    indicator-like split over the Minkowski sum of the domains.  Two
    proper piecewise-linear operands convolve exactly through the
    conjugate sum: the result is the inverse transform of the sum of
    the two conjugate curves, Bottom when their slope windows miss.
    """
    for h in (f, g):
        if not isinstance(h, UpFunction):
            raise TypeError("infconv expects up-space functions")
        if not h.is_convex():
            raise ValueError("infconv requires convex operands")
    if isinstance(f, ConstTop) or isinstance(g, ConstTop):
        return ConstTop()
    if isinstance(f, ConstBottom) or isinstance(g, ConstBottom):
        return ConstBottom()
    if isinstance(f, ImproperSplit) or isinstance(g, ImproperSplit):
        lof, hif = f.dom()
        log_, hig = g.dom()
        return improper_split(lof + log_, hif + hig)
    s = _pl_add(_pl_legendre(f), _pl_legendre(g))
    if s is None:
        return ConstBottom()
    return _pl_legendre(s)


@dataclass(frozen=True)
class EqualityReport:
    lhs: DownReal
    rhs: DownReal
    equal: bool
    tol: float


def _down_close(p, q, tol):
    if p.is_finite and q.is_finite:
        return abs(p.value - q.value) <= tol
    return p == q


def _support_along(a, interval):
    """The split threshold: a times the far end of the interval along a.

    Empty intervals give Bottom so that the down-sum rule absorbs them.
    """
    if interval is None:
        return DownReal.bottom()
    lo, hi = interval
    if a > 0:
        return DownReal(a * hi)
    if a < 0:
        return DownReal(a * lo)
    return DownReal(0.0)


def infconv_conjugate_check(f, g, xi, r, tol=1e-9):
    """Both routes to the conjugate of a convolution, with equality flag.

    The left side convolves first and conjugates after.  The right side
    is the split formula: for a proper element the two conjugates at
    offset 0 down-added with -r; for a hat, the split succeeds (value
    Top) exactly when some offset split r1 + r2 = r leaves both domain
    inclusions broken, which reduces to comparing r against the
    down-sum of the two support thresholds.
    """
    if not isinstance(xi, DualElem):
        raise TypeError("infconv_conjugate_check expects a DualElem")
    r = _require_finite(r, "r")
    lhs = conjugate(infconv(f, g), xi, r)
    if xi.is_hat:
        s = ssum(_support_along(xi.a, f.dom()), _support_along(xi.a, g.dom()))
        rhs = DownReal.bottom() if s <= DownReal(r) else DownReal.top()
    else:
        rhs = ssum(
            ssum(conjugate(f, xi, 0.0), conjugate(g, xi, 0.0)), DownReal(-r)
        )
    return EqualityReport(lhs=lhs, rhs=rhs, equal=_down_close(lhs, rhs, tol), tol=tol)


# ---------------------------------------------------------------------------
# Biconjugation.
# ---------------------------------------------------------------------------


def biconjugate(g):
    """The double conjugate, equal to the closed convex hull of g.

    The proper dual elements contribute the double transform of the
    conjugate curve; offsets cancel, so only the slope curve matters.
    The hats contribute Top outside the closed domain interval and
    Bottom on it, which only surfaces when the proper contribution is
    identically Bottom (no affine minorant).
    """
    cc = conjugate_curve(g)
    if isinstance(cc.curve, ConstBottom):
        return ConstTop()
    if isinstance(cc.curve, PLProper):
        return _pl_legendre(cc.curve)
    # no proper affine minorant: only the hat branch remains
    d = g.dom()
    if d is None:
        return ConstTop()
    return improper_split(d[0], d[1])


# ---------------------------------------------------------------------------
# Subdifferential vs conjugate characterization.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubdiffConjReport:
    """Membership comparison between the subdifferential description and
    the conjugate inequality, probed over a slope family."""

    x0_in_dom: bool
    probes: tuple
    agree: bool


def _probe_slopes(g):
    if isinstance(g, PLProper):
        s = sorted(set(g.all_slopes()))
        probes = set(s) | {0.0}
        if s:
            probes |= {s[0] - 0.5, s[-1] + 0.5}
            probes |= {(u + v) / 2 for u, v in zip(s, s[1:])}
        return sorted(probes)
    return [-1.0, -0.5, 0.0, 0.5, 1.0]


def subdiff_conjugate_check(g, x0):
    """Check that subgradient membership matches the conjugate inequality.

    At x0 in the domain, an element xi belongs to the extended
    subdifferential iff the conjugate at (xi, a*x0) up-added with g(x0)
    stays below xi(0), which is 0 for proper elements and Bottom for
    hats.  Outside the domain the description must collapse to the
    constant Bottom element alone.  The two membership routes are
    genuinely different: one reads one-sided slopes and domain
    endpoints, the other evaluates the transform.
    """
    x0 = _require_finite(x0, "x0")
    if not g.is_convex():
        raise ValueError("subdifferential characterization requires a convex function")
    sd = subdiff_extended(g, x0)
    v0 = g.eval(x0)
    if v0.is_top:
        ok = sd.proper is None and sd.improper == frozenset({0.0})
        return SubdiffConjReport(x0_in_dom=False, probes=(), agree=ok)
    cc = conjugate_curve(g)
    rows = []
    for a in _probe_slopes(g):
        via_sd = sd.proper_contains(a)
        lhs = isum(as_up(cc.proper_value(a, a * x0)), v0)
        rows.append((f"proper:{a:g}", via_sd, lhs <= UpReal(0.0)))
    for a in (-1.0, 0.0, 1.0):
        via_sd = sd.hat_contains(a)
        lhs = isum(as_up(cc.hat_value(a, a * x0)), v0)
        rows.append((f"hat:{a:g}", via_sd, lhs <= UpReal.bottom()))
    agree = all(b == c for _, b, c in rows)
    return SubdiffConjReport(x0_in_dom=True, probes=tuple(rows), agree=agree)
