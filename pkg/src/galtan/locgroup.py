"""Localic groups as Hopf structures in the sup-lattice world, and their
finite set actions.

A group object here is a frame carrier whose multiplication is the meet
and whose unit is the top, so only the coalgebra half needs data: a
comultiplication into the tensor square, a counit into TWO, and an
antipode.  Two families of instances are built: the symmetry frame of a
finite set, presented by generators "x>y" with the bijection axioms as
relations, and the power locale of an ordinary finite group.  Actions on
a finite set are tabulated ell-relations into the carrier subject to the
comultiplication and counit equations; the antipode equation comes for
free and the code asserts that it does.
"""

import itertools
from collections import namedtuple

from .suplat import (TWO, BudgetError, LatticeError, PowerLattice,
                     PowerTensor, RelMap, IdealTensor, tensor)
from .locale import (MATERIALIZE_BUDGET, Presentation, PresentedFrame,
                     frame_morphism, locale_algebra_violation)
from .lrel import LRel, check_triangle, product, restrict


# --------------------------------------------------------------------------
# ordinary finite groups, the discrete raw material

class FiniteGroup:
    """A finite group given by its multiplication table.

    mul is read left to right: mul(a, b) is a followed by b.  The table
    is validated outright; identity, inverses and associativity failures
    raise rather than producing a broken locale later.
    """

    def __init__(self, elements, mul):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise LatticeError("repeated group element")
        self.mul = dict(mul)
        es = set(self.elements)
        for a in self.elements:
            for b in self.elements:
                if self.mul.get((a, b)) not in es:
                    raise LatticeError("product %r.%r missing or foreign"
                                       % (a, b))
        units = [u for u in self.elements
                 if all(self.mul[(u, a)] == a and self.mul[(a, u)] == a
                        for a in self.elements)]
        if len(units) != 1:
            raise LatticeError("table has %d two sided units" % len(units))
        self.unit = units[0]
        self.inv = {}
        for a in self.elements:
            bs = [b for b in self.elements if self.mul[(a, b)] == self.unit]
            if len(bs) != 1 or self.mul[(bs[0], a)] != self.unit:
                raise LatticeError("%r has no two sided inverse" % (a,))
            self.inv[a] = bs[0]
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    ab_c = self.mul[(self.mul[(a, b)], c)]
                    a_bc = self.mul[(a, self.mul[(b, c)])]
                    if ab_c != a_bc:
                        raise LatticeError(
                            "associativity fails at %r,%r,%r" % (a, b, c))

    @classmethod
    def cyclic(cls, n):
        assert n >= 1
        els = tuple(range(n))
        return cls(els, {(a, b): (a + b) % n for a in els for b in els})

    @classmethod
    def symmetric(cls, n):
        'permutations of range(n) as image tuples'
        els = [tuple(p) for p in itertools.permutations(range(n))]
        mul = {(p, q): tuple(q[p[i]] for i in range(n))
               for p in els for q in els}
        return cls(els, mul)

    @classmethod
    def from_rows(cls, elements, rows):
        'row a, column b gives mul(a, b)'
        elements = tuple(elements)
        mul = {}
        for a, row in zip(elements, rows):
            if len(row) != len(elements):
                raise LatticeError("ragged multiplication table")
            for b, c in zip(elements, row):
                mul[(a, b)] = c
        return cls(elements, mul)

    @property
    def order(self):
        return len(self.elements)

    def __repr__(self):
        return "FiniteGroup(%d elements)" % len(self.elements)


# --------------------------------------------------------------------------
# Hopf structure

class SupHopf:
    """Frame carrier with comultiplication, counit and antipode.

    The algebra half is the locale itself (meet and top), so the fields
    are the carrier, its tensor square, and the three structure maps
    w: G -> G(x)G, e: G -> TWO, iota: G -> G, all linear.
    """

    def __init__(self, carrier, square, w, e, iota,
                 name="", gens=None, group=None):
        self.carrier = carrier
        self.square = square
        self.w = w
        self.e = e
        self.iota = iota
        self.name = name
        self.gens = gens        # pair -> carrier element, for symmetry frames
        self.group = group      # FiniteGroup, for discrete carriers

    def pair(self, x, y):
        'the generator cell sending x to y'
        return self.gens[(x, y)]

    def __repr__(self):
        return "SupHopf(%s; %d elements)" % (
            self.name or "?", self.carrier.size)


def hopf_violation(H, cube=None, check_locale=True):
    """First group object law the structure breaks, or None.

    Laws are decided element by element; the carrier is enumerated, so
    equality of the composite maps is checked outright, not sampled.
    Each element is the join of the member cells of its w image, which
    makes the composites computable cell by cell.
    """
    G, sq = H.carrier, H.square
    if check_locale:
        bad = locale_algebra_violation(G)
        if bad is not None:
            return ("carrier is not a locale",) + tuple(bad)
    if cube is None:
        cube = (PowerTensor([G, G, G]) if isinstance(sq, PowerTensor)
                else IdealTensor([G, G, G]))
    for a in G.elements():
        wa = sq.cells_of(H.w(a))
        left = cube.join(cube.pure(p, q, t)
                         for (s, t) in wa for (p, q) in sq.cells_of(H.w(s)))
        right = cube.join(cube.pure(s, p, q)
                          for (s, t) in wa for (p, q) in sq.cells_of(H.w(t)))
        if left != right:
            return ("coassociativity", G.label(a))
        if G.join(t for (s, t) in wa if H.e(s)) != a:
            return ("left counit", G.label(a))
        if G.join(s for (s, t) in wa if H.e(t)) != a:
            return ("right counit", G.label(a))
        want = G.top if H.e(a) else G.bottom
        if G.join(G.meet2(H.iota(s), t) for (s, t) in wa) != want:
            return ("left antipode", G.label(a))
        if G.join(G.meet2(s, H.iota(t)) for (s, t) in wa) != want:
            return ("right antipode", G.label(a))
        if H.iota(H.iota(a)) != a:
            return ("antipode twice", G.label(a))
    return None


def is_hopf(H, **kw):
    return hopf_violation(H, **kw) is None


def hopf_morphism_violation(H1, H2, phi):
    'first element where phi fails to respect w, e or iota; None when ok'
    s1, s2 = H1.square, H2.square
    for a in H1.carrier.elements():
        push = s2.join(s2.pure(phi(s), phi(t))
                       for (s, t) in s1.cells_of(H1.w(a)))
        if push != H2.w(phi(a)):
            return ("comultiplication", H1.carrier.label(a))
        if H2.e(phi(a)) != H1.e(a):
            return ("counit", H1.carrier.label(a))
        if phi(H1.iota(a)) != H2.iota(phi(a)):
            return ("antipode", H1.carrier.label(a))
    return None


def is_hopf_iso(H1, H2, phi):
    """phi is a linear bijection respecting the whole structure.

    A bijective linear map is an order isomorphism (b = f(a) forces
    a <= c iff f(a) <= f(c)), so meets need no separate check.
    """
    if H1.carrier.size != H2.carrier.size:
        return False
    imgs = phi.table_on(H1.carrier.elements())
    if len(set(imgs)) != H1.carrier.size:
        return False
    return hopf_morphism_violation(H1, H2, phi) is None


# --------------------------------------------------------------------------
# the two instance families

def discrete_localic_group(group):
    """The power locale of a finite group.

    On subsets, w(U) = {(a,b) : mul(a,b) in U}, e(U) = [unit in U],
    iota(U) = the set of inverses; all three are determined on
    singletons, hence tabulated as relation maps.
    """
    C = PowerLattice(group.elements)
    square = PowerTensor([C, C])
    pos = {g: i for i, g in enumerate(group.elements)}

    def wfib(g):
        out = 0
        for a in group.elements:
            for b in group.elements:
                if group.mul[(a, b)] == g:
                    out |= square.singleton((a, b))
        return out
    w = RelMap(C, square, [wfib(g) for g in group.elements])
    e = RelMap(C, TWO, [TWO.top if g == group.unit else TWO.bottom
                        for g in group.elements])
    iota = RelMap(C, C, [C.singleton(group.inv[g]) for g in group.elements])
    return SupHopf(C, square, w, e, iota,
                   name="power locale of order %d group" % group.order,
                   group=group)


def aut_presentation(X):
    """Presentation of the symmetry frame of a finite set.

    One generator "x>y" per cell of X x X; the relations state that the
    generic table of generators is an ell-bijection: rows and columns
    join to 1 and have pairwise meet 0.
    """
    X = tuple(X)
    names = {}
    order = []
    for x in X:
        for y in X:
            nm = "%s>%s" % (x, y)
            names[(x, y)] = nm
            order.append(nm)
    pres = Presentation(order)
    for x in X:
        pres.add(" | ".join(names[(x, y)] for y in X), "1")
    for y in X:
        pres.add(" | ".join(names[(x, y)] for x in X), "1")
    for x in X:
        for y1, y2 in itertools.combinations(X, 2):
            pres.add("%s & %s" % (names[(x, y1)], names[(x, y2)]), "0")
    for y in X:
        for x1, x2 in itertools.combinations(X, 2):
            pres.add("%s & %s" % (names[(x1, y)], names[(x2, y)]), "0")
    return pres, names


def aut_hopf(X, bound=2, budget=MATERIALIZE_BUDGET):
    """The symmetry frame of a finite set, materialized, with its group
    structure: w sends a cell to the join of its two step factorizations,
    e is the diagonal indicator, iota transposes.  All three extend to
    frame morphisms because the images satisfy the presenting relations,
    which frame_morphism verifies.
    """
    X = tuple(X)
    if len(X) > bound:
        raise BudgetError("symmetry frame on %d points is only built "
                          "lazily; raise bound to force" % len(X))
    pres, names = aut_presentation(X)
    F = PresentedFrame(pres).materialize(budget)
    gens = {p: F.element_of(nm) for p, nm in names.items()}
    square = tensor(F, F)
    cells = [(x, y) for x in X for y in X]
    w = frame_morphism(F, square, [
        square.join(square.pure(gens[(x, z)], gens[(z, y)]) for z in X)
        for (x, y) in cells])
    e = frame_morphism(F, TWO, [
        TWO.top if x == y else TWO.bottom for (x, y) in cells])
    iota = frame_morphism(F, F, [gens[(y, x)] for (x, y) in cells])
    return SupHopf(F, square, w, e, iota,
                   name="symmetry frame on %d points" % len(X), gens=gens)


# --------------------------------------------------------------------------
# actions

class Action:
    'a finite set with an ell-relation table into a localic group carrier'

    def __init__(self, hopf, space, rel):
        assert rel.G is hopf.carrier
        assert rel.X == rel.Y == tuple(space)
        self.hopf = hopf
        self.space = tuple(space)
        self.rel = rel

    @classmethod
    def from_table(cls, hopf, space, fn):
        space = tuple(space)
        if isinstance(fn, dict):
            tab = fn
            fn = lambda x, y: tab[(x, y)]
        return cls(hopf, space, LRel.from_fn(space, space, hopf.carrier, fn))

    @classmethod
    def regular(cls, hopf):
        'the group translating itself: cell (x, y) holds {g : xg = y}'
        grp = hopf.group
        C = hopf.carrier
        return cls.from_table(
            hopf, grp.elements,
            lambda x, y: C.join(C.singleton(g) for g in grp.elements
                                if grp.mul[(x, g)] == y))

    @classmethod
    def trivial(cls, hopf, space):
        'every group element fixes every point'
        C = hopf.carrier
        return cls.from_table(
            hopf, space, lambda x, y: C.top if x == y else C.bottom)

    @classmethod
    def from_classical(cls, hopf, space, act):
        """From a table act[(g, x)] of an ordinary group action, read with
        the same left to right convention as the group: act of mul(a, b)
        is act of a followed by act of b."""
        grp = hopf.group
        space = tuple(space)
        for x in space:
            assert act[(grp.unit, x)] == x, "unit must act as identity"
        for a in grp.elements:
            for b in grp.elements:
                for x in space:
                    assert act[(grp.mul[(a, b)], x)] == \
                        act[(b, act[(a, x)])], "table is not an action"
        C = hopf.carrier
        return cls.from_table(
            hopf, space,
            lambda x, y: C.join(C.singleton(g) for g in grp.elements
                                if act[(g, x)] == y))

    def classical(self):
        'recover the ordinary action table; the table must be an action'
        grp = self.hopf.group
        C = self.hopf.carrier
        act = {}
        for g in grp.elements:
            for x in self.space:
                ys = [y for y in self.space
                      if C.leq(C.singleton(g), self.rel(x, y))]
                assert len(ys) == 1, "cell joins do not cover %r" % (g,)
                act[(g, x)] = ys[0]
        return act

    def __eq__(self, other):
        return (isinstance(other, Action) and self.hopf is other.hopf
                and self.space == other.space and self.rel == other.rel)

    def __hash__(self):
        return hash((self.space, self.rel))

    def __repr__(self):
        return "Action(%d points into %s)" % (
            len(self.space), self.hopf.name or "?")


ActionReport = namedtuple("ActionReport",
                          "valid axioms comult counit antipode")


def is_action(act):
    """Check the bijection axioms and the two structure equations.

    valid means: the table is an ell-bijection, w of a cell is the join
    of its two step factorizations, and the counit of a cell is the
    diagonal indicator.  The antipode equation is reported too, and
    asserted to hold whenever the rest does; it is a consequence, never
    an input.
    """
    H, X, mu = act.hopf, act.space, act.rel
    G, sq = H.carrier, H.square
    axioms = {k: ok for k, ok in mu.axioms().items()}
    comult = counit = antipode = None
    for x in X:
        for y in X:
            got = H.w(mu(x, y))
            want = sq.join(sq.pure(mu(x, z), mu(z, y)) for z in X)
            if got != want and comult is None:
                comult = (x, y, sq.label(got), sq.label(want))
            ev = H.e(mu(x, y))
            if ev != (TWO.top if x == y else TWO.bottom) and counit is None:
                counit = (x, y, ev)
            if H.iota(mu(x, y)) != mu(y, x) and antipode is None:
                antipode = (x, y)
    valid = all(axioms.values()) and comult is None and counit is None
    if valid:
        assert antipode is None, \
            "structure equations held but the antipode equation failed"
    return ActionReport(valid, axioms, comult, counit, antipode)


def _monoid_tables(hopf, X):
    """Tables satisfying just the comultiplication and counit equations.

    The counit equation fixes which cells may hold which values, which
    prunes the brute force search to the diagonal/off diagonal split.
    """
    G, sq = hopf.carrier, hopf.square
    X = tuple(X)
    diag = [v for v in G.elements() if hopf.e(v)]
    off = [v for v in G.elements() if not hopf.e(v)]
    cells = [(x, y) for x in X for y in X]
    cands = [diag if x == y else off for (x, y) in cells]
    wof = {v: hopf.w(v) for v in G.elements()}
    pure = {}

    def pu(a, b):
        if (a, b) not in pure:
            pure[(a, b)] = sq.pure(a, b)
        return pure[(a, b)]

    for vals in itertools.product(*cands):
        tab = dict(zip(cells, vals))
        if all(wof[tab[(x, y)]] ==
               sq.join(pu(tab[(x, z)], tab[(z, y)]) for z in X)
               for (x, y) in cells):
            yield tab


def enumerate_actions(hopf, X):
    'all actions on X; each monoid table is asserted to be a full action'
    X = tuple(X)
    out = []
    for tab in _monoid_tables(hopf, X):
        act = Action.from_table(hopf, X, tab)
        rep = is_action(act)
        assert rep.valid and rep.antipode is None, rep
        out.append(act)
    return out


MonoidReport = namedtuple("MonoidReport", "bound counts total")


def monoid_implies_group(hopf, bound=2):
    """Enumerate monoid tables on every space up to the bound.

    enumerate_actions asserts the bijection axioms and the antipode
    equation on each one, so merely completing is the theorem instance;
    the report carries the per size counts.
    """
    counts = tuple(len(enumerate_actions(hopf, tuple(range(n))))
                   for n in range(bound + 1))
    return MonoidReport(bound, counts, sum(counts))


def gset_objects(hopf, bound=4):
    'every action on the sets {0..n-1} for n up to the bound'
    return [act for n in range(bound + 1)
            for act in enumerate_actions(hopf, tuple(range(n)))]


# --------------------------------------------------------------------------
# morphisms and relations of actions

MorphismReport = namedtuple("MorphismReport", "holds witness injective")


def is_gset_morphism(f, act, actp):
    """Equivariance of a function between action carriers: the table may
    only grow along f.  When it holds, the pushforward formula and exact
    preservation under injectivity are consequences; both are asserted.
    """
    mu, mup = act.rel, actp.rel
    G = act.hopf.carrier
    rep = check_triangle(f, f, mu, mup)
    if not rep.holds:
        return MorphismReport(False, rep.witness, None)
    for a in act.space:
        for b in act.space:
            want = G.join(mu(a, x) for x in act.space if f[x] == f[b])
            assert mup(f[a], f[b]) == want, \
                "morphism does not push the table forward at %r,%r" % (a, b)
    inj = len(set(f[x] for x in act.space)) == len(act.space)
    if inj:
        for a in act.space:
            for b in act.space:
                assert mup(f[a], f[b]) == mu(a, b), \
                    "monomorphism fails exact preservation at %r,%r" % (a, b)
    return MorphismReport(True, None, inj)


def gset_morphisms(act, actp):
    'every equivariant function between two actions, by brute force'
    assert act.hopf is actp.hopf
    out = []
    for vals in itertools.product(actp.space, repeat=len(act.space)):
        f = dict(zip(act.space, vals))
        if check_triangle(f, f, act.rel, actp.rel).holds:
            out.append(f)
    return out


RelationReport = namedtuple("RelationReport", "holds axioms")


def is_gset_relation(R, act, actp):
    """A subset of the product carrier is a relation of actions exactly
    when the restricted product table is an ell-bijection; the structure
    equations on the restriction then follow and are asserted.
    """
    assert act.hopf is actp.hopf
    pairs = tuple(sorted(set(R)))
    for (a, b) in pairs:
        assert a in act.space and b in actp.space, "pair off the carriers"
    prod = product(act.rel, actp.rel)
    theta = restrict(prod, pairs, pairs)
    axioms = theta.axioms()
    if not all(axioms.values()):
        return RelationReport(False, axioms)
    sub = Action(act.hopf, pairs, theta)
    rep = is_action(sub)
    assert rep.valid, "bijective restriction failed the structure equations"
    return RelationReport(True, axioms)
