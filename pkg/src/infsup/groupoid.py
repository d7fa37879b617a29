"""Finite ordered commutative groupoids and the residuation existence tests.

The scalar difference operations in this package are instances of a
general order-algebraic fact: on a partially ordered commutative
groupoid, four conditions are equivalent (a pointwise adjoint
characterization, existence of a least/greatest element in every
residual set, distribution of addition over existing infima/suprema,
and attainment of the residual bound).  On a finite carrier all four
are decidable by brute force, which makes the equivalence itself a
testable statement.  This module implements the checks, a residual
lookup, the conlinear-space axioms for scalar actions, and a generator
of random valid structures for fuzzing.

Elements are opaque labels; nothing here assumes numeric semantics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

CONDITIONS = ("A", "B", "C", "D")
MODES = ("inf", "sup")

# Witness lists are capped so a thoroughly broken structure produces a
# readable report instead of thousands of tuples.
MAX_WITNESSES = 25


class FiniteOrderedGroupoid:
    """A finite carrier with a commutative addition table and a compatible partial order.

    Construction validates everything the theory needs: totality and
    commutativity of the table, the partial-order axioms for ``leq``,
    and compatibility (u <= v implies u+w <= v+w).  Invalid input
    raises ValueError with the offending entries.
    """

    def __init__(self, carrier, add, leq):
        self.carrier = tuple(carrier)
        n = len(self.carrier)
        if n == 0:
            raise ValueError("carrier must be nonempty")
        if len(set(self.carrier)) != n:
            raise ValueError("carrier labels must be distinct")
        self._index = {lab: i for i, lab in enumerate(self.carrier)}

        if len(add) != n or any(len(row) != n for row in add):
            raise ValueError("add table must be n x n")
        self.add = []
        for i, row in enumerate(add):
            out = []
            for j, lab in enumerate(row):
                if lab not in self._index:
                    raise ValueError(f"add[{i}][{j}] = {lab!r} is not a carrier element")
                out.append(self._index[lab])
            self.add.append(out)

        if len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError("leq matrix must be n x n")
        self.leq = [[bool(x) for x in row] for row in leq]

        self._validate()

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_json_dict(cls, d):
        try:
            return cls(d["carrier"], d["add"], d["leq"])
        except KeyError as e:
            raise ValueError(f"groupoid JSON is missing key {e.args[0]!r}") from None

    def _validate(self):
        n = len(self.carrier)
        add, leq, lab = self.add, self.leq, self.carrier
        for i in range(n):
            for j in range(i + 1, n):
                if add[i][j] != add[j][i]:
                    raise ValueError(f"add is not commutative at ({lab[i]!r}, {lab[j]!r})")
        for i in range(n):
            if not leq[i][i]:
                raise ValueError(f"leq is not reflexive at {lab[i]!r}")
        for i in range(n):
            for j in range(n):
                if i != j and leq[i][j] and leq[j][i]:
                    raise ValueError(f"leq is not antisymmetric on ({lab[i]!r}, {lab[j]!r})")
        for i in range(n):
            for j in range(n):
                if not leq[i][j]:
                    continue
                for k in range(n):
                    if leq[j][k] and not leq[i][k]:
                        raise ValueError(
                            f"leq is not transitive: {lab[i]!r} <= {lab[j]!r} <= {lab[k]!r}"
                        )
                    if not leq[add[i][k]][add[j][k]]:
                        raise ValueError(
                            f"order incompatible with addition: {lab[i]!r} <= {lab[j]!r} "
                            f"but adding {lab[k]!r} breaks it"
                        )

    # -- small order-theoretic utilities --------------------------------------

    @property
    def size(self):
        return len(self.carrier)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"{label!r} is not a carrier element") from None

    def glb(self, S):
        """Greatest lower bound of a set of indices, or None.

        S may be empty; the glb of the empty set is the greatest element
        of the whole carrier when one exists.
        """
        n = len(self.carrier)
        lbs = [x for x in range(n) if all(self.leq[x][s] for s in S)]
        for c in lbs:
            if all(self.leq[b][c] for b in lbs):
                return c
        return None

    def lub(self, S):
        n = len(self.carrier)
        ubs = [x for x in range(n) if all(self.leq[s][x] for s in S)]
        for c in ubs:
            if all(self.leq[c][b] for b in ubs):
                return c
        return None

    def least_of(self, S):
        """Least element belonging to S (not merely a lower bound), or None."""
        for m in S:
            if all(self.leq[m][s] for s in S):
                return m
        return None

    def greatest_of(self, S):
        for m in S:
            if all(self.leq[s][m] for s in S):
                return m
        return None

    def residual_set(self, u, v, mode):
        """Indices w' with u <= v+w' (mode inf) or v+w' <= u (mode sup)."""
        n = len(self.carrier)
        if mode == "inf":
            return [w for w in range(n) if self.leq[u][self.add[v][w]]]
        return [w for w in range(n) if self.leq[self.add[v][w]][u]]

    def is_lattice(self):
        """Whether every pair of elements has a meet and a join.

        On a finite carrier this implies every subset (the empty one
        included) has an infimum and a supremum, which is the setting
        where the four residuation conditions are a theorem.  On a bare
        partial order they can genuinely come apart; see the tests for
        a six-element witness.
        """
        n = len(self.carrier)
        for i in range(n):
            for j in range(i + 1, n):
                if self.glb((i, j)) is None or self.lub((i, j)) is None:
                    return False
        return True


@dataclass
class ConditionReport:
    condition: str
    mode: str
    holds: bool
    witnesses: list

    def __post_init__(self):
        assert self.holds == (not self.witnesses)


@dataclass
class EquivalenceReport:
    mode: str
    agree: bool
    reports: dict


def _subsets_for_c(G, rng=None):
    n = G.size
    idx = range(n)
    if n <= 6:
        for r in range(n + 1):
            yield from itertools.combinations(idx, r)
        return
    # larger carriers: empty set, singletons, the full set, and a sample
    yield ()
    for i in idx:
        yield (i,)
    yield tuple(idx)
    rng = rng or np.random.default_rng(0)
    for _ in range(64):
        mask = rng.random(n) < 0.5
        yield tuple(i for i in idx if mask[i])


def check_condition(G, condition, mode, rng=None):
    """Evaluate one of the four residuation conditions exhaustively.

    mode "inf" checks the version whose residual sets are {w' : u <= v + w'}
    and whose distribution law is over infima; mode "sup" is the mirror.
    """
    condition = condition.upper()
    if condition not in CONDITIONS:
        raise ValueError(f"condition must be one of {CONDITIONS}, got {condition!r}")
    if mode not in MODES:
        raise ValueError(f"mode must be 'inf' or 'sup', got {mode!r}")
    n = G.size
    lab = G.carrier
    witnesses = []

    def note(w):
        if len(witnesses) < MAX_WITNESSES:
            witnesses.append(w)

    if condition == "A":
        # some w makes (u <= v + w') / (v + w' <= u) equivalent to the order test against w
        for u in range(n):
            for v in range(n):
                S = set(G.residual_set(u, v, mode))
                found = False
                for w in range(n):
                    if mode == "inf":
                        ok = all((wp in S) == G.leq[w][wp] for wp in range(n))
                    else:
                        ok = all((wp in S) == G.leq[wp][w] for wp in range(n))
                    if ok:
                        found = True
                        break
                if not found:
                    note((lab[u], lab[v]))

    elif condition == "B":
        for u in range(n):
            for v in range(n):
                S = G.residual_set(u, v, mode)
                picked = G.least_of(S) if mode == "inf" else G.greatest_of(S)
                if picked is None:
                    note((lab[u], lab[v]))

    elif condition == "C":
        for M in _subsets_for_c(G, rng):
            ext = G.glb(M) if mode == "inf" else G.lub(M)
            if ext is None:
                continue  # the condition only quantifies over sets whose inf/sup exists
            for u in range(n):
                shifted = [G.add[u][m] for m in M]
                left = G.add[u][ext]
                right = G.glb(shifted) if mode == "inf" else G.lub(shifted)
                if right is None or right != left:
                    note((lab[u], tuple(lab[m] for m in M)))

    else:  # D
        for u in range(n):
            for v in range(n):
                S = G.residual_set(u, v, mode)
                ext = G.glb(S) if mode == "inf" else G.lub(S)
                if ext is None:
                    note((lab[u], lab[v]))
                    continue
                if mode == "inf":
                    if not G.leq[u][G.add[v][ext]]:
                        note((lab[u], lab[v]))
                else:
                    if not G.leq[G.add[v][ext]][u]:
                        note((lab[u], lab[v]))

    return ConditionReport(condition, mode, not witnesses, witnesses)


def check_equivalence(G, mode, rng=None):
    """All four conditions must agree on any valid structure; report whether they do."""
    reports = {c: check_condition(G, c, mode, rng) for c in CONDITIONS}
    outcomes = {r.holds for r in reports.values()}
    return EquivalenceReport(mode, len(outcomes) == 1, reports)


def residual(G, u, v, mode):
    """The residual element of (u, v) if it exists inside the residual set.

    mode "inf": least w' with u <= v + w'.  mode "sup": greatest w' with
    v + w' <= u.  Returns the label, or None when the set has no
    least/greatest member (including when it is empty).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be 'inf' or 'sup', got {mode!r}")
    ui, vi = G.index(u), G.index(v)
    S = G.residual_set(ui, vi, mode)
    picked = G.least_of(S) if mode == "inf" else G.greatest_of(S)
    return None if picked is None else G.carrier[picked]


# ---------------------------------------------------------------------------
# Conlinear-space axioms for a finite carrier with a scalar action.
# ---------------------------------------------------------------------------


class ScaledMonoid:
    """Finite carrier, addition table, and a scalar action by probe scalars.

    ``scale`` maps each probe scalar (a non-negative Fraction or float)
    to the list of images of the carrier under that scalar.  The probe
    set should contain 0 and 1; closure under products and sums is not
    required, axiom checks simply skip pairs that leave the probe set.
    """

    def __init__(self, carrier, add, scale):
        self.carrier = tuple(carrier)
        n = len(self.carrier)
        self._index = {lab: i for i, lab in enumerate(self.carrier)}
        if len(set(self.carrier)) != n or n == 0:
            raise ValueError("carrier must be nonempty with distinct labels")
        if len(add) != n or any(len(row) != n for row in add):
            raise ValueError("add table must be n x n")
        self.add = [[self._index[x] for x in row] for row in add]
        self.scale = {}
        for t, images in scale.items():
            t = _as_scalar(t)
            if t < 0:
                raise ValueError(f"probe scalar {t} is negative")
            if len(images) != n:
                raise ValueError(f"scale table for {t} must list {n} images")
            self.scale[t] = [self._index[x] for x in images]

    @property
    def size(self):
        return len(self.carrier)


def _as_scalar(t):
    from fractions import Fraction

    if isinstance(t, str):
        return Fraction(t)
    return Fraction(t)


@dataclass
class ConlinearReport:
    is_conlinear: bool
    neutral: object
    violations: list
    convex_elements: list


def check_conlinear(S):
    """Check the conlinear-space axioms on a ScaledMonoid.

    Verifies that addition is a commutative monoid (with a neutral
    element), that every probe scalar distributes over addition, that
    composing scalar actions matches multiplied scalars whenever the
    product is again a probe, that 1 acts as identity, and that 0 sends
    the neutral element to itself.  Also reports which elements are
    convex (scaling distributes over scalar sums for them).
    """
    n = S.size
    lab = S.carrier
    add = S.add
    violations = []

    def note(kind, tup):
        if len(violations) < MAX_WITNESSES:
            violations.append((kind, tup))

    for i in range(n):
        for j in range(n):
            if add[i][j] != add[j][i]:
                note("C1-commutative", (lab[i], lab[j]))
            for k in range(n):
                if add[add[i][j]][k] != add[i][add[j][k]]:
                    note("C1-associative", (lab[i], lab[j], lab[k]))

    neutral = None
    for e in range(n):
        if all(add[e][w] == w for w in range(n)):
            neutral = e
            break
    if neutral is None:
        note("C1-neutral", ())

    probes = sorted(S.scale)
    for t in probes:
        img = S.scale[t]
        for i in range(n):
            for j in range(n):
                if img[add[i][j]] != add[img[i]][img[j]]:
                    note("C2-i", (str(t), lab[i], lab[j]))
    for r in probes:
        for s in probes:
            if r * s not in S.scale:
                continue
            rs = S.scale[r * s]
            for w in range(n):
                if S.scale[s][S.scale[r][w]] != rs[w]:
                    note("C2-ii", (str(r), str(s), lab[w]))
    one = _as_scalar(1)
    if one in S.scale:
        for w in range(n):
            if S.scale[one][w] != w:
                note("C2-iii", (lab[w],))
    else:
        note("C2-iii", ("probe 1 missing",))
    zero = _as_scalar(0)
    if neutral is not None:
        if zero in S.scale:
            if S.scale[zero][neutral] != neutral:
                note("C2-iv", (lab[neutral],))
        else:
            note("C2-iv", ("probe 0 missing",))

    convex = []
    for w in range(n):
        ok = True
        for s in probes:
            for t in probes:
                if s + t not in S.scale:
                    continue
                if S.scale[s + t][w] != add[S.scale[s][w]][S.scale[t][w]]:
                    ok = False
        if ok:
            convex.append(lab[w])

    return ConlinearReport(
        is_conlinear=not violations,
        neutral=None if neutral is None else lab[neutral],
        violations=violations,
        convex_elements=convex,
    )


# ---------------------------------------------------------------------------
# Random structures for fuzzing.
# ---------------------------------------------------------------------------


def random_groupoid(rng, size, max_tries=400):
    """Generate a random valid FiniteOrderedGroupoid with the given carrier size.

    Strategy: draw a random commutative table and a random partial order,
    then shrink the order to its largest addition-compatible sub-relation.
    That shrink provably preserves reflexivity, antisymmetry and
    transitivity (the surviving relation is closed under shifting by any
    element, and a shifted chain is again a chain), so the result is a
    valid ordered groupoid whenever any strict pair survives.  Fully
    uniform tables rarely leave a compatible pair beyond four or five
    elements, so the table distribution is a mixture: free uniform
    tables for chaos, plus saturating-sum and max-join tables in a
    random ranking (sometimes with a flipped entry) that keep enough
    structure alive at size six.  Degenerate draws are discarded, and
    so are draws whose surviving order is not a lattice: the four-way
    equivalence of the residuation conditions is a statement about
    lattice orders, and it genuinely fails on bare posets.
    """
    n = int(size)
    if n < 1:
        raise ValueError("size must be >= 1")
    labels = [f"e{i}" for i in range(n)]
    for _ in range(max_tries):
        ranking = [int(x) for x in rng.permutation(n)]  # ranking[r] = element at rank r
        rank = {e: r for r, e in enumerate(ranking)}
        add = [[0] * n for _ in range(n)]
        style = rng.random()
        for i in range(n):
            for j in range(i, n):
                if style < 0.4:
                    k = int(rng.integers(n))
                elif style < 0.7:
                    k = ranking[min(rank[i] + rank[j], n - 1)]
                else:
                    k = ranking[max(rank[i], rank[j])]
                add[i][j] = add[j][i] = k
        if style >= 0.4 and rng.random() < 0.3 and n > 1:
            i, j = int(rng.integers(n)), int(rng.integers(n))
            k = int(rng.integers(n))
            add[i][j] = add[j][i] = k

        # random partial order with edges forward along the ranking (full
        # chain half the time), then reflexive-transitive closure
        leq = [[i == j for j in range(n)] for i in range(n)]
        chain = rng.random() < 0.5
        for i in range(n):
            for j in range(n):
                if i != j and rank[i] < rank[j] and (chain or rng.random() < 0.6):
                    leq[i][j] = True
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    if leq[i][k] and leq[k][j]:
                        leq[i][j] = True

        # greatest compatible sub-relation
        changed = True
        while changed:
            changed = False
            for i in range(n):
                for j in range(n):
                    if i == j or not leq[i][j]:
                        continue
                    if any(not leq[add[i][w]][add[j][w]] for w in range(n)):
                        leq[i][j] = False
                        changed = True

        if n > 1 and not any(leq[i][j] for i in range(n) for j in range(n) if i != j):
            continue  # degenerate: order collapsed to equality
        G = FiniteOrderedGroupoid(labels, [[labels[k] for k in row] for row in add], leq)
        if G.is_lattice():
            return G
    raise RuntimeError(f"could not generate a nondegenerate groupoid of size {n}")
