"""Comodules over a localic group and the relation picture of actions.

A comodule here is a power lattice of a finite set with a coaction into
the tensor of the group carrier with it, stored by its values on
singletons.  The coaction axioms, the translation to and from action
tables, and the morphism square are all decided cell by cell.  The
module culminates in the instance level category comparison: actions
with relations between them on one side, comodules with linear squares
on the other, matched by the identity on underlying relations.

For a power carrier the tensor is taken in product base form, which is
the power lattice of pairs; the agreement of that representation with
the multi-ideal one is asserted once per carrier.
"""

import itertools
from collections import namedtuple

from .suplat import PowerLattice, PowerTensor, IdealTensor, tensor
from .lrel import check_diamond
from .locgroup import Action, enumerate_actions, is_gset_relation

_REP_CHECKED = set()


def _rep_agreement(C):
    """Assert the product base tensor matches the multi-ideal tensor over
    this carrier, once per run, on a fixed two point second factor."""
    if id(C) in _REP_CHECKED or C.size > 8:
        _REP_CHECKED.add(id(C))
        return
    P = PowerLattice(("l", "r"))
    fast = PowerTensor([C, P])
    slow = IdealTensor([C, P])
    seen = set()
    for m in fast.elements():
        im = slow.join(slow.pure(C.singleton(g), P.singleton(x))
                       for (g, x) in fast.members(m))
        seen.add(im)
    assert len(seen) == fast.size == slow.size, \
        "product base tensor disagrees with the ideal tensor"
    _REP_CHECKED.add(id(C))


def _tensors(hopf, space):
    'the coefficient lattice pair (lX, G(x)lX) for a space, cached on hopf'
    cache = hopf.__dict__.setdefault("_comodule_tensors", {})
    if space not in cache:
        lx = PowerLattice(space)
        C = hopf.carrier
        if isinstance(C, PowerLattice):
            _rep_agreement(C)
            ten = PowerTensor([C, lx])
        else:
            ten = tensor(C, lx)
        cache[space] = (lx, ten)
    return cache[space]


class Comodule:
    'a finite set whose power lattice coacts into the group tensor'

    def __init__(self, hopf, space, table):
        self.hopf = hopf
        self.space = tuple(space)
        self.lx, self.tensor = _tensors(hopf, self.space)
        self.table = {x: table[x] for x in self.space}

    def rho(self, a):
        'the coaction on an arbitrary element, extended by joins'
        return self.tensor.join(self.table[x] for x in self.lx.members(a))

    def __eq__(self, other):
        return (isinstance(other, Comodule) and self.hopf is other.hopf
                and self.space == other.space and self.table == other.table)

    def __hash__(self):
        return hash((self.space,
                     tuple(self.table[x] for x in self.space)))

    def __repr__(self):
        return "Comodule(%d points over %s)" % (
            len(self.space), self.hopf.name or "?")


CoactionReport = namedtuple("CoactionReport", "valid coassoc counit")


def _cube(hopf, cm):
    cache = hopf.__dict__.setdefault("_comodule_cubes", {})
    if cm.space not in cache:
        C = hopf.carrier
        if isinstance(cm.tensor, PowerTensor):
            cache[cm.space] = PowerTensor([C, C, cm.lx])
        else:
            cache[cm.space] = IdealTensor([C, C, cm.lx])
    return cache[cm.space]


def is_coaction(cm):
    """Both coaction equations, checked on the singleton generators.

    Checking generators decides the equations outright: the maps are
    linear and the power lattice is generated by its singletons.
    """
    if "_coaction_report" in cm.__dict__:
        return cm._coaction_report
    H, lx, ten = cm.hopf, cm.lx, cm.tensor
    cube = _cube(H, cm)
    coassoc = counit = None
    for x in cm.space:
        cells = ten.cells_of(cm.table[x])
        got = lx.join(s for (c, s) in cells if H.e(c))
        if got != lx.singleton(x) and counit is None:
            counit = (x, lx.label(got))
        left = cube.join(cube.pure(c, d, t)
                         for (c, s) in cells
                         for (d, t) in ten.cells_of(cm.rho(s)))
        right = cube.join(cube.pure(d, e, s)
                          for (c, s) in cells
                          for (d, e) in H.square.cells_of(H.w(c)))
        if left != right and coassoc is None:
            coassoc = (x, cube.label(left), cube.label(right))
    rep = CoactionReport(coassoc is None and counit is None, coassoc, counit)
    cm._coaction_report = rep
    return rep


# --------------------------------------------------------------------------
# translation between the action table and the coaction

def action_to_comodule(act):
    'coact by tabulating where each point can go: rho(b) = join of mu(b,x)(x)x'
    H = act.hopf
    lx, ten = _tensors(H, act.space)
    return Comodule(H, act.space, {
        b: ten.join(ten.pure(act.rel(b, x), lx.singleton(x))
                    for x in act.space)
        for b in act.space})


def comodule_to_action(cm):
    'read the table back: mu(a,b) collects the coefficients of b in rho(a)'
    H, lx, ten = cm.hopf, cm.lx, cm.tensor
    G = H.carrier

    def mu(a, b):
        sb = lx.singleton(b)
        return G.join(c for (c, s) in ten.cells_of(cm.table[a])
                      if lx.meet2(s, sb) != lx.bottom)
    return Action.from_table(H, cm.space, mu)


def enumerate_coactions(hopf, space):
    """Every valid coaction on the space.

    The counit equation pins the singleton row of each value, which cuts
    the brute force table enumeration down before the coassociativity
    filter runs.
    """
    space = tuple(space)
    lx, ten = _tensors(hopf, space)
    cands = {}
    for x in space:
        want = lx.singleton(x)
        cands[x] = [t for t in ten.elements()
                    if lx.join(s for (c, s) in ten.cells_of(t)
                               if hopf.e(c)) == want]
    out = []
    for vals in itertools.product(*[cands[x] for x in space]):
        cm = Comodule(hopf, space, dict(zip(space, vals)))
        if is_coaction(cm).valid:
            out.append(cm)
    return out


# --------------------------------------------------------------------------
# morphisms

SquareReport = namedtuple("SquareReport", "holds witness")


def is_comodule_morphism(R, cm, cmp, crosscheck=True):
    """The morphism square for a relation read as a linear map: pushing
    the coaction through the relation agrees with coacting after it.

    When both inputs are coactions, the verdict is asserted against the
    two sided join diagram of the corresponding action tables; the two
    routes must agree.
    """
    R = frozenset(R)
    for (x, xp) in R:
        assert x in cm.space and xp in cmp.space, "pair off the carriers"
    fib = {x: cmp.lx.join(cmp.lx.singleton(xp)
                          for (xx, xp) in R if xx == x)
           for x in cm.space}

    def push(s):
        return cmp.lx.join(fib[x] for x in cm.lx.members(s))

    witness = None
    for b in cm.space:
        lhs = cmp.tensor.join(
            cmp.tensor.pure(c, push(s))
            for (c, s) in cm.tensor.cells_of(cm.table[b]))
        rhs = cmp.rho(push(cm.lx.singleton(b)))
        if lhs != rhs:
            witness = (b, cmp.tensor.label(lhs), cmp.tensor.label(rhs))
            break
    holds = witness is None
    if crosscheck and is_coaction(cm).valid and is_coaction(cmp).valid:
        dia = check_diamond(R, R, comodule_to_action(cm).rel,
                            comodule_to_action(cmp).rel)
        assert dia.holds == holds, \
            "morphism square and join diagram verdicts disagree"
    return SquareReport(holds, witness)


def comodule_morphisms(cm, cmp):
    'every relation whose square commutes, by subset enumeration'
    cells = [(x, xp) for x in cm.space for xp in cmp.space]
    out = []
    for bits in range(1 << len(cells)):
        R = frozenset(c for i, c in enumerate(cells) if bits >> i & 1)
        if is_comodule_morphism(R, cm, cmp).holds:
            out.append(R)
    return out


# --------------------------------------------------------------------------
# the category comparison

CorrespondenceReport = namedtuple(
    "CorrespondenceReport",
    "bound action_counts coaction_counts objects_match "
    "hom_counts_match triangle_commutes composition_closed")


def category_correspondence(hopf, bound=3, compose_bound=2):
    """Compare bounded actions-with-relations against bounded comodules.

    Objects are matched by the table translation, morphisms by the
    identity on underlying relations.  The triangle over plain relations
    commutes exactly when the matched hom sets are equal as sets of
    relations, since both forgetful directions keep the relation itself.
    Composition closure is checked exhaustively up to compose_bound.
    """
    spaces = [tuple(range(n)) for n in range(bound + 1)]
    acts = {X: enumerate_actions(hopf, X) for X in spaces}
    cms = {X: enumerate_coactions(hopf, X) for X in spaces}
    objects_match = True
    for X in spaces:
        fwd = [action_to_comodule(a) for a in acts[X]]
        objects_match &= set(fwd) == set(cms[X])
        objects_match &= all(comodule_to_action(c) == a
                             for a, c in zip(acts[X], fwd))
        objects_match &= all(action_to_comodule(comodule_to_action(c)) == c
                             for c in cms[X])
    hom_ok = True
    tri_ok = True
    cmd_homs = {}
    for X in spaces:
        for Xp in spaces:
            for a in acts[X]:
                for ap in acts[Xp]:
                    ca, cap = action_to_comodule(a), action_to_comodule(ap)
                    relside = set()
                    cells = [(x, xp) for x in X for xp in Xp]
                    for bits in range(1 << len(cells)):
                        R = frozenset(c for i, c in enumerate(cells)
                                      if bits >> i & 1)
                        if is_gset_relation(R, a, ap).holds:
                            relside.add(R)
                    cmdside = set(comodule_morphisms(ca, cap))
                    hom_ok &= len(relside) == len(cmdside)
                    tri_ok &= relside == cmdside
                    cmd_homs[(a, ap)] = cmdside
    comp_ok = True
    small = [a for X in spaces[:compose_bound + 1] for a in acts[X]]
    for a in small:
        for b in small:
            for c in small:
                for R in cmd_homs[(a, b)]:
                    for S in cmd_homs[(b, c)]:
                        RS = frozenset((x, z) for (x, y) in R
                                       for (yy, z) in S if yy == y)
                        comp_ok &= RS in cmd_homs[(a, c)]
    return CorrespondenceReport(
        bound,
        tuple(len(acts[X]) for X in spaces),
        tuple(len(cms[X]) for X in spaces),
        objects_match, hom_ok, tri_ok, comp_ok)
