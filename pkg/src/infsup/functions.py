"""Extended-real-valued functions of one real variable.

Four representations cover every closed convex function into the up
space and enough non-convex ones to exercise the hull machinery:

* ``PLProper``: piecewise linear, finite on a closed interval domain
  (possibly unbounded), Top outside.  Canonical form folds finite
  domain endpoints into breakpoints, so a stored end slope exists
  exactly when the domain is unbounded on that side.
* ``ImproperSplit``: Bottom on a closed interval, Top off it.  Closed
  improper convex functions take only infinite values, and on the line
  they look exactly like this.
* ``ConstTop`` / ``ConstBottom``: the two constants.

The down space is reached through negation: a ``DownFunction`` stores
the up-space mirror of its pointwise negation, which keeps the two
value conventions from blurring while sharing all the representation
code.

Dual elements are continuous linear functionals (``proper``) plus their
inf-extensions (``hat``); a hat with slope a takes Bottom where
a*x - r <= 0 and Top elsewhere, which makes it positively homogeneous
but deliberately not additive.
"""

from __future__ import annotations

import math

from .extreal import (
    DownReal,
    UpReal,
    as_down,
    as_up,
    idif,
    negate_up,
    ssum,
    sup_up,
)

INF = math.inf

# Slope changes below this are treated as collinear during
# canonicalization.  All fixtures use small integer or dyadic data, so
# the threshold only ever removes genuinely redundant breakpoints.
COLLINEAR_TOL = 1e-12


def _require_finite(x, what):
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"{what} must be finite, got {x}")
    return x


class UpFunction:
    """Base for the up-space representations; use the concrete classes."""

    def eval(self, x):
        raise NotImplementedError

    def dom(self):
        """Effective domain {x : f(x) < Top} as (lo, hi), or None if empty."""
        raise NotImplementedError

    def is_convex(self):
        raise NotImplementedError

    def __eq__(self, other):
        return fn_allclose(self, other, tol=0.0) if isinstance(other, UpFunction) else NotImplemented

    def __hash__(self):
        return hash(type(self).__name__)


class ConstTop(UpFunction):
    """Identically Top; the function with empty domain."""

    def eval(self, x):
        _require_finite(x, "x")
        return UpReal.top()

    def dom(self):
        return None

    def is_convex(self):
        return True

    def __repr__(self):
        return "ConstTop()"


class ConstBottom(UpFunction):
    def eval(self, x):
        _require_finite(x, "x")
        return UpReal.bottom()

    def dom(self):
        return (-INF, INF)

    def is_convex(self):
        return True

    def __repr__(self):
        return "ConstBottom()"


class ImproperSplit(UpFunction):
    """Bottom on the closed interval [lo, hi] (intersected with the reals), Top off it.

    Construct through :func:`improper_split`, which canonicalizes the
    empty interval to ConstTop and the whole line to ConstBottom.
    """

    def __init__(self, lo, hi):
        lo, hi = float(lo), float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval endpoints must not be NaN")
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]; use improper_split")
        if lo == -INF and hi == INF:
            raise ValueError("full-line split is ConstBottom; use improper_split")
        if lo == INF or hi == -INF:
            raise ValueError(f"degenerate interval [{lo}, {hi}]; use improper_split")
        self.lo = lo
        self.hi = hi

    def eval(self, x):
        x = _require_finite(x, "x")
        if self.lo <= x <= self.hi:
            return UpReal.bottom()
        return UpReal.top()

    def dom(self):
        return (self.lo, self.hi)

    def is_convex(self):
        return True

    def __repr__(self):
        return f"ImproperSplit({self.lo}, {self.hi})"


def improper_split(lo, hi):
    """Build the Bottom-on-[lo,hi] function, canonicalizing degenerate intervals."""
    lo, hi = float(lo), float(hi)
    if math.isnan(lo) or math.isnan(hi):
        raise ValueError("interval endpoints must not be NaN")
    if lo > hi or lo == INF or hi == -INF:
        return ConstTop()
    if lo == -INF and hi == INF:
        return ConstBottom()
    return ImproperSplit(lo, hi)


class PLProper(UpFunction):
    """Piecewise-linear function, finite on its interval domain, Top outside.

    Canonical invariants (enforced at construction):

    * ``xs`` strictly increasing, ``vs`` finite, at least one breakpoint;
    * ``dom_lo`` is either -inf or exactly ``xs[0]`` (finite endpoints are
      folded into the breakpoint list by :meth:`make`), same on the right;
    * ``slope_left`` is present iff ``dom_lo`` is -inf, ``slope_right``
      iff ``dom_hi`` is +inf;
    * no collinear interior breakpoints.

    Values at finite domain endpoints are attained, so the epigraph is
    closed by construction.
    """

    def __init__(self, xs, vs, slope_left=None, slope_right=None, dom_lo=-INF, dom_hi=INF):
        xs = [float(x) for x in xs]
        vs = [float(v) for v in vs]
        if len(xs) == 0 or len(xs) != len(vs):
            raise ValueError("need equally many breakpoint positions and values, at least one")
        for i, x in enumerate(xs):
            _require_finite(x, f"breakpoint x[{i}]")
        for i, v in enumerate(vs):
            _require_finite(v, f"breakpoint value v[{i}]")
        for a, b in zip(xs, xs[1:]):
            if not b > a:
                raise ValueError("breakpoints must be strictly increasing")
        dom_lo, dom_hi = float(dom_lo), float(dom_hi)
        if dom_lo == -INF:
            if slope_left is None:
                raise ValueError("unbounded domain on the left needs slope_left")
            slope_left = _require_finite(slope_left, "slope_left")
        else:
            if dom_lo != xs[0]:
                raise ValueError("finite dom_lo must equal the first breakpoint; use make()")
            if slope_left is not None:
                raise ValueError("slope_left is meaningless with a bounded left domain")
        if dom_hi == INF:
            if slope_right is None:
                raise ValueError("unbounded domain on the right needs slope_right")
            slope_right = _require_finite(slope_right, "slope_right")
        else:
            if dom_hi != xs[-1]:
                raise ValueError("finite dom_hi must equal the last breakpoint; use make()")
            if slope_right is not None:
                raise ValueError("slope_right is meaningless with a bounded right domain")
        self.xs = xs
        self.vs = vs
        self.slope_left = slope_left
        self.slope_right = slope_right
        self.dom_lo = dom_lo
        self.dom_hi = dom_hi

    # -- construction ---------------------------------------------------------

    @classmethod
    def make(cls, breaks, slope_left=None, slope_right=None, dom_lo=-INF, dom_hi=INF):
        """Canonicalizing factory.

        ``breaks`` is a sequence of (x, v) pairs.  Finite domain bounds
        may lie anywhere; the breakpoint list is clipped/extended so the
        bounds become breakpoints, and collinear interior breakpoints
        are removed.
        """
        pts = sorted((float(x), float(v)) for x, v in breaks)
        xs = [p[0] for p in pts]
        vs = [p[1] for p in pts]
        if not xs:
            raise ValueError("need at least one breakpoint")
        for a, b in zip(xs, xs[1:]):
            if not b > a:
                raise ValueError("breakpoints must be strictly increasing")
        dom_lo, dom_hi = float(dom_lo), float(dom_hi)
        if dom_lo > dom_hi:
            raise ValueError(f"empty domain [{dom_lo}, {dom_hi}]")

        def chord(i):
            return (vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i])

        def value_at(x):
            # piecewise value of the raw data at a point inside [xs0, xsn]
            # or extrapolated by the end slopes
            if x <= xs[0]:
                if x == xs[0]:
                    return vs[0]
                if slope_left is None:
                    raise ValueError("dom_lo below the first breakpoint needs slope_left")
                return vs[0] + float(slope_left) * (x - xs[0])
            if x >= xs[-1]:
                if x == xs[-1]:
                    return vs[-1]
                if slope_right is None:
                    raise ValueError("dom_hi above the last breakpoint needs slope_right")
                return vs[-1] + float(slope_right) * (x - xs[-1])
            for i in range(len(xs) - 1):
                if xs[i] <= x <= xs[i + 1]:
                    return vs[i] + chord(i) * (x - xs[i])
            raise AssertionError("unreachable")

        sl, sr = slope_left, slope_right
        if math.isfinite(dom_lo):
            v_at = value_at(dom_lo)
            keep = [(x, v) for x, v in zip(xs, vs) if x > dom_lo]
            xs = [dom_lo] + [p[0] for p in keep]
            vs = [v_at] + [p[1] for p in keep]
            sl = None
        if math.isfinite(dom_hi):
            v_at = value_at(dom_hi)
            keep = [(x, v) for x, v in zip(xs, vs) if x < dom_hi]
            xs = [p[0] for p in keep] + [dom_hi]
            vs = [p[1] for p in keep] + [v_at]
            sr = None

        # drop collinear interior breakpoints, and end breakpoints that sit
        # on the continuation of the adjacent infinite ray
        changed = True
        while changed and len(xs) >= 2:
            changed = False
            for i in range(1, len(xs) - 1):
                s0 = (vs[i] - vs[i - 1]) / (xs[i] - xs[i - 1])
                s1 = (vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i])
                if abs(s0 - s1) <= COLLINEAR_TOL:
                    del xs[i], vs[i]
                    changed = True
                    break
            if changed or len(xs) < 2:
                continue
            if sl is not None:
                s1 = (vs[1] - vs[0]) / (xs[1] - xs[0])
                if abs(sl - s1) <= COLLINEAR_TOL:
                    del xs[0], vs[0]
                    changed = True
                    continue
            if sr is not None:
                s0 = (vs[-1] - vs[-2]) / (xs[-1] - xs[-2])
                if abs(sr - s0) <= COLLINEAR_TOL:
                    del xs[-1], vs[-1]
                    changed = True
        return cls(xs, vs, sl, sr, dom_lo, dom_hi)

    # -- evaluation and structure ---------------------------------------------

    def eval(self, x):
        x = _require_finite(x, "x")
        if x < self.dom_lo or x > self.dom_hi:
            return UpReal.top()
        return UpReal(self._finite_value(x))

    def _finite_value(self, x):
        xs, vs = self.xs, self.vs
        if x <= xs[0]:
            if x == xs[0]:
                return vs[0]
            return vs[0] + self.slope_left * (x - xs[0])
        if x >= xs[-1]:
            if x == xs[-1]:
                return vs[-1]
            return vs[-1] + self.slope_right * (x - xs[-1])
        lo, hi = 0, len(xs) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if xs[mid] <= x:
                lo = mid
            else:
                hi = mid
        t = (x - xs[lo]) / (xs[lo + 1] - xs[lo])
        return vs[lo] + t * (vs[lo + 1] - vs[lo])

    def dom(self):
        return (self.dom_lo, self.dom_hi)

    def segment_slopes(self):
        """Chord slopes between consecutive breakpoints (may be empty)."""
        return [
            (self.vs[i + 1] - self.vs[i]) / (self.xs[i + 1] - self.xs[i])
            for i in range(len(self.xs) - 1)
        ]

    def all_slopes(self):
        """End slopes (where present) and chord slopes, left to right."""
        out = []
        if self.slope_left is not None:
            out.append(self.slope_left)
        out.extend(self.segment_slopes())
        if self.slope_right is not None:
            out.append(self.slope_right)
        return out

    def is_convex(self):
        s = self.all_slopes()
        return all(b >= a - COLLINEAR_TOL for a, b in zip(s, s[1:]))

    def slope_before(self, x0):
        """Slope immediately to the left of x0, or None at/below a bounded left end."""
        if x0 <= self.dom_lo:
            return None if self.dom_lo > -INF or x0 < self.dom_lo else self.slope_left
        if x0 > self.dom_hi:
            return None
        if x0 <= self.xs[0]:
            return self.slope_left
        if x0 > self.xs[-1]:
            return self.slope_right
        for i in range(len(self.xs) - 1):
            if self.xs[i] < x0 <= self.xs[i + 1]:
                return self.segment_slopes()[i]
        raise AssertionError("unreachable")

    def slope_after(self, x0):
        """Slope immediately to the right of x0, or None at/above a bounded right end."""
        if x0 >= self.dom_hi:
            return None if self.dom_hi < INF or x0 > self.dom_hi else self.slope_right
        if x0 < self.dom_lo:
            return None
        if x0 >= self.xs[-1]:
            return self.slope_right
        if x0 < self.xs[0]:
            return self.slope_left
        for i in range(len(self.xs) - 1):
            if self.xs[i] <= x0 < self.xs[i + 1]:
                return self.segment_slopes()[i]
        raise AssertionError("unreachable")

    def __repr__(self):
        pieces = ", ".join(f"({x:g},{v:g})" for x, v in zip(self.xs, self.vs))
        return (
            f"PLProper([{pieces}], slope_left={self.slope_left}, "
            f"slope_right={self.slope_right}, dom=[{self.dom_lo:g},{self.dom_hi:g}])"
        )


def pl(breaks, slope_left=None, slope_right=None, dom_lo=-INF, dom_hi=INF):
    """Shorthand for PLProper.make."""
    return PLProper.make(breaks, slope_left, slope_right, dom_lo, dom_hi)


def abs_fn():
    """|x|, the workhorse example."""
    return pl([(0.0, 0.0)], slope_left=-1.0, slope_right=1.0)


# ---------------------------------------------------------------------------
# Down-space functions via the negation duality.
# ---------------------------------------------------------------------------


class DownFunction:
    """A function into the down space, stored as the up-space mirror of -h.

    ``h(x) = -(mirror(x))`` pointwise.  The effective domain follows the
    down-space reading {x : Bottom < h(x)}, which lands on the same
    interval as the mirror's up-space domain; the two readings use the
    same word for genuinely different formulas, and the wrapper keeps
    that straight by type.
    """

    def __init__(self, mirror):
        if not isinstance(mirror, UpFunction):
            raise TypeError("DownFunction wraps an UpFunction mirror")
        self.mirror = mirror

    def eval(self, x):
        return negate_up(self.mirror.eval(x))

    def dom(self):
        return self.mirror.dom()

    def is_concave(self):
        return self.mirror.is_convex()

    def hypo_contains(self, x, r):
        r = _require_finite(r, "r")
        return self.eval(x) >= DownReal(r)

    def __eq__(self, other):
        if not isinstance(other, DownFunction):
            return NotImplemented
        return self.mirror == other.mirror

    def __hash__(self):
        return hash(("DownFunction", type(self.mirror).__name__))

    def __repr__(self):
        return f"DownFunction(-({self.mirror!r}))"


def negate_fn(f):
    """Pointwise negation, swapping the image space.

    UpFunction -> DownFunction and back; applying it twice returns a
    function equal to the original.
    """
    if isinstance(f, UpFunction):
        return DownFunction(f)
    if isinstance(f, DownFunction):
        return f.mirror
    raise TypeError(f"negate_fn expects a function, got {type(f).__name__}")


# ---------------------------------------------------------------------------
# Structure predicates as module functions.
# ---------------------------------------------------------------------------


def dom(f):
    return f.dom()


def epi_contains(f, x, r):
    """Whether (x, r) lies in the epigraph; r must be finite."""
    r = _require_finite(r, "r")
    return f.eval(x) <= UpReal(r)


def is_convex(f):
    return f.is_convex()


def fn_allclose(f, g, tol=1e-9):
    """Structural closeness of two up-space functions.

    Both arguments are canonical by construction, so comparing variant,
    breakpoints, slopes and domain markers within ``tol`` is a faithful
    function comparison.
    """

    def close(a, b):
        if a is None or b is None:
            return a is None and b is None
        if math.isinf(a) or math.isinf(b):
            return a == b
        return abs(a - b) <= tol

    if isinstance(f, ConstTop):
        return isinstance(g, ConstTop)
    if isinstance(f, ConstBottom):
        return isinstance(g, ConstBottom)
    if isinstance(f, ImproperSplit):
        return isinstance(g, ImproperSplit) and close(f.lo, g.lo) and close(f.hi, g.hi)
    if isinstance(f, PLProper):
        if not isinstance(g, PLProper):
            return False
        if len(f.xs) != len(g.xs):
            return False
        return (
            all(close(a, b) for a, b in zip(f.xs, g.xs))
            and all(close(a, b) for a, b in zip(f.vs, g.vs))
            and close(f.slope_left, g.slope_left)
            and close(f.slope_right, g.slope_right)
            and close(f.dom_lo, g.dom_lo)
            and close(f.dom_hi, g.dom_hi)
        )
    raise TypeError(f"not an up-space function: {type(f).__name__}")


# ---------------------------------------------------------------------------
# Closed convex hull.
# ---------------------------------------------------------------------------


def closure_hull(f):
    """Closed convex hull: the function whose epigraph is cl co(epi f).

    For the improper variants the representation is already closed and
    convex.  For a piecewise-linear proper function the hull is the
    supremum of all affine minorants a*x + b.  A slope a admits a
    minorant iff it respects the infinite rays (a >= slope_left when the
    domain extends to -inf, a <= slope_right when it extends to +inf);
    within that slope window the best offset is b = min_i (v_i - a*x_i)
    over the breakpoints, because canonical form makes every domain
    endpoint a breakpoint and the rays bind exactly at the end
    breakpoints for admissible slopes.  Geometrically that is the lower
    convex hull of the breakpoints with its end slopes clipped to the
    window; an empty window means no affine minorant exists at all and
    the hull collapses to ConstBottom.
    """
    if isinstance(f, (ConstTop, ConstBottom, ImproperSplit)):
        return f
    if not isinstance(f, PLProper):
        raise TypeError(f"not an up-space function: {type(f).__name__}")

    a_lo = f.slope_left if f.dom_lo == -INF else -INF
    a_hi = f.slope_right if f.dom_hi == INF else INF
    if a_lo > a_hi:
        return ConstBottom()

    pts = list(zip(f.xs, f.vs))
    hull = []
    for x, v in pts:
        while len(hull) >= 2:
            (x1, v1), (x2, v2) = hull[-2], hull[-1]
            # keep only strict right turns: (x2,v2) above or on the chord
            # from (x1,v1) to (x,v) means it is not a lower-hull vertex
            if (v2 - v1) * (x - x2) >= (v - v2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append((x, v))

    def slope(p, q):
        return (q[1] - p[1]) / (q[0] - p[0])

    if a_lo > -INF:
        while len(hull) >= 2 and slope(hull[0], hull[1]) <= a_lo:
            hull.pop(0)
    if a_hi < INF:
        while len(hull) >= 2 and slope(hull[-2], hull[-1]) >= a_hi:
            hull.pop()

    xs = [p[0] for p in hull]
    vs = [p[1] for p in hull]
    return PLProper.make(
        list(zip(xs, vs)),
        slope_left=None if f.dom_lo > -INF else a_lo,
        slope_right=None if f.dom_hi < INF else a_hi,
        dom_lo=f.dom_lo,
        dom_hi=f.dom_hi,
    )


# ---------------------------------------------------------------------------
# Dual elements: linear functionals and their inf-extensions.
# ---------------------------------------------------------------------------


class DualElem:
    """A proper linear functional x -> a*x, or the hat (inf-extension) of one.

    Hats with positively proportional slopes are the same function, so
    equality and hashing go through a canonical slope in {-1, 0, +1}
    for hats.  Proper elements keep their slope as identity.
    """

    __slots__ = ("kind", "a")

    def __init__(self, kind, a):
        if kind not in ("proper", "hat"):
            raise ValueError(f"kind must be 'proper' or 'hat', got {kind!r}")
        self.kind = kind
        self.a = _require_finite(a, "slope")

    @classmethod
    def proper(cls, a):
        return cls("proper", a)

    @classmethod
    def hat(cls, a):
        return cls("hat", a)

    @property
    def is_hat(self):
        return self.kind == "hat"

    def canonical(self):
        if self.kind == "hat":
            return DualElem("hat", float(_sign(self.a)))
        return self

    def _key(self):
        c = self.canonical()
        return (c.kind, c.a)

    def __eq__(self, other):
        if not isinstance(other, DualElem):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"DualElem.{self.kind}({self.a:g})"


def _sign(a):
    return (a > 0) - (a < 0)


def dual_add(xi, eta):
    """Addition on the inf-dual: hats absorb proper elements.

    hat + hat is the hat of the summed underlying slopes; hat + proper
    is the hat unchanged; proper + proper adds slopes.
    """
    if not isinstance(xi, DualElem) or not isinstance(eta, DualElem):
        raise TypeError("dual_add expects DualElem arguments")
    if xi.is_hat and eta.is_hat:
        return DualElem.hat(xi.a + eta.a)
    if xi.is_hat:
        return xi
    if eta.is_hat:
        return eta
    return DualElem.proper(xi.a + eta.a)


def dual_scale(t, xi):
    """Pointwise multiplication by t >= 0 on the inf-dual.

    For t > 0 both kinds just scale their slope (a hat's values are
    fixed points of positive scaling, and its defining slope scales).
    t = 0 sends everything to the proper zero functional, the neutral
    element of the dual's conlinear structure.
    """
    t = float(t)
    if not math.isfinite(t) or t < 0:
        raise ValueError(f"scale factor must be a finite real >= 0, got {t}")
    if t == 0:
        return DualElem.proper(0.0)
    return DualElem(xi.kind, t * xi.a)


class AffineDual:
    """A dual element with a real offset: the affine family member xi_r."""

    __slots__ = ("xi", "r")

    def __init__(self, xi, r):
        if not isinstance(xi, DualElem):
            raise TypeError("AffineDual needs a DualElem")
        self.xi = xi
        self.r = _require_finite(r, "offset")

    def canonical_key(self):
        """Key identifying the function x -> xi_r(x).

        Proper: (a, r) as is.  Hat with a != 0: the test a*x - r <= 0
        rescales to sign(a)*x - r/|a| <= 0.  Hat with a = 0 is constant:
        Bottom everywhere if r >= 0 (canonically r = 0), Top everywhere
        if r < 0 (canonically r = -1).
        """
        if not self.xi.is_hat:
            return ("proper", self.xi.a, self.r)
        a = self.xi.a
        if a == 0:
            return ("hat", 0.0, 0.0 if self.r >= 0 else -1.0)
        return ("hat", float(_sign(a)), self.r / abs(a))

    def __eq__(self, other):
        if not isinstance(other, AffineDual):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"AffineDual({self.xi!r}, r={self.r:g})"


def affine_eval(xi_r, x):
    """Value of the affine dual element at x, in the up space.

    Proper: a*x - r.  Hat: Bottom where a*x - r <= 0, Top elsewhere
    (the inf-extension of the affine function).
    """
    x = _require_finite(x, "x")
    a, r = xi_r.xi.a, xi_r.r
    t = a * x - r
    if xi_r.xi.is_hat:
        return UpReal.bottom() if t <= 0 else UpReal.top()
    return UpReal(t)


def _split_candidates(xi_r, x1, x2):
    # Candidate offsets r1 for the split r = r1 + r2.  For proper elements
    # every split attains the value, so any candidate works.  For hats the
    # sup is Top iff the feasible r1-interval (where both factors land on
    # the favorable side) is nonempty; that interval is bounded by a*x1 on
    # one side with width governed by the margin m = a*(x1+x2) - r, and
    # r1 = a*x1 - m/2 sits strictly inside it whenever m > 0.  So this
    # finite family always contains a maximizing split when one exists.
    a, r = xi_r.xi.a, xi_r.r
    m = a * (x1 + x2) - r
    return [r / 2.0, a * x1 - m / 2.0, a * x1, 0.0]


def affine_split_sup(xi, r, x1, x2):
    """Supremum over splits r1+r2=r of xi_r1(x1) down-plus xi_r2(x2).

    Finitely many candidate splits suffice: for proper xi every split
    gives the same finite value, and for hats the sup is Top exactly
    when some split puts both factors at Top, which (by the margin
    argument) happens iff it happens at the candidate split.  Callers
    compare the result with affine_eval at x1+x2.
    """
    x1, x2 = _require_finite(x1, "x1"), _require_finite(x2, "x2")
    ad = AffineDual(xi, r)
    vals = []
    for r1 in _split_candidates(ad, x1, x2):
        e1 = affine_eval(AffineDual(xi, r1), x1)
        e2 = affine_eval(AffineDual(xi, r - r1), x2)
        vals.append(as_up(ssum(as_down(e1), as_down(e2))))
    return sup_up(vals)


def affine_split_dif(xi, r, x1, x2):
    """Supremum over splits r1+r2=r of xi_r1(x1) up-minus xi_{-r2}(x2).

    The difference-form companion of affine_split_sup; callers compare
    with affine_eval at x1-x2.
    """
    x1, x2 = _require_finite(x1, "x1"), _require_finite(x2, "x2")
    ad = AffineDual(xi, r)
    vals = []
    for r1 in _split_candidates(ad, x1, -x2):
        e1 = affine_eval(AffineDual(xi, r1), x1)
        e2 = affine_eval(AffineDual(xi, -(r - r1)), x2)
        vals.append(idif(e1, e2))
    return sup_up(vals)
