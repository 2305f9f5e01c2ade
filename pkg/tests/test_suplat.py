import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from galtan.suplat import (
    TWO, BudgetError, DenseMap, IdealTensor, LatticeError, PowerLattice,
    PowerTensor, RelMap, TableLattice, dual_map, duality_data, hom_lattice,
    identity_map, is_bilinear, linear_maps, linmap_to_relation, opposite,
    power_lattice, relation_to_linmap, symmetry, tensor, tensor_map,
    tensor_power, triangle_maps, triangles_hold, universal_factor)


def chain(n):
    return TableLattice(list(range(n)), np.triu(np.ones((n, n), dtype=bool)))


def diamond():
    # 0 < a,b < 1 with a,b incomparable
    leq = np.eye(4, dtype=bool)
    leq[0, :] = True
    leq[:, 3] = True
    return TableLattice(["0", "a", "b", "1"], leq)


def pentagon():
    # 0 < a < c < 1, 0 < b < 1, b incomparable to a and c
    labels = ["0", "a", "c", "b", "1"]
    pairs = [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")]
    return TableLattice.from_order_pairs(labels, pairs)


SMALL_LATTICES = [chain(1), chain(2), chain(3), diamond(), pentagon(),
                  PowerLattice((0, 1)), PowerLattice((0, 1, 2))]


# --------------------------------------------------------------------------
# carriers

def test_table_lattice_rejects_missing_join():
    # two maximal elements, no common upper bound
    leq = np.eye(3, dtype=bool)
    leq[0, 1] = leq[0, 2] = True
    with pytest.raises(LatticeError) as e:
        TableLattice(["0", "x", "y"], leq)
    assert "join" in str(e.value) and "x" in str(e.value)


def test_table_lattice_rejects_broken_order():
    leq = np.ones((2, 2), dtype=bool)     # 0 <= 1 and 1 <= 0
    with pytest.raises(LatticeError):
        TableLattice(["p", "q"], leq)
    with pytest.raises(LatticeError):
        TableLattice(["p", "q"], ~np.eye(2, dtype=bool))


def test_bounds_are_computed():
    d = diamond()
    assert d.label(d.bottom) == "0" and d.label(d.top) == "1"
    assert d.join([]) == d.bottom and d.meet([]) == d.top


def test_join_meet_tables_agree_with_definition():
    for lat in SMALL_LATTICES:
        for a in lat.elements():
            for b in lat.elements():
                j = lat.join2(a, b)
                assert lat.leq(a, j) and lat.leq(b, j)
                ubs = [c for c in lat.elements()
                       if lat.leq(a, c) and lat.leq(b, c)]
                assert all(lat.leq(j, c) for c in ubs)
                m = lat.meet2(a, b)
                lbs = [c for c in lat.elements()
                       if lat.leq(c, a) and lat.leq(c, b)]
                assert all(lat.leq(c, m) for c in lbs)


def test_power_lattice_counts():
    # |lX| = 2^|X|, including the empty base
    for k in range(5):
        assert power_lattice(range(k)).size == 2 ** k


def test_power_lattice_is_a_frame():
    assert PowerLattice((0, 1, 2)).frame_violation() is None
    # the pentagon is not even distributive
    assert pentagon().frame_violation() is not None


def test_join_irreducibles():
    lx = PowerLattice((0, 1, 2))
    assert sorted(lx.join_irreducibles()) == [1, 2, 4]
    assert chain(4).join_irreducibles() == [1, 2, 3]


# --------------------------------------------------------------------------
# relations as linear maps

def test_relation_linmap_round_trip():
    X, Y = ("a", "b", "c"), (0, 1)
    rels = [frozenset(), frozenset([("a", 0)]),
            frozenset([("a", 0), ("a", 1), ("c", 1)])]
    for r in rels:
        f = relation_to_linmap(r, X, Y)
        assert linmap_to_relation(f) == r
    # and the other way: every fiber table arises from its relation
    f = RelMap.from_pairs(PowerLattice(X), PowerLattice(Y),
                          [("b", 1), ("c", 0)])
    g = relation_to_linmap(linmap_to_relation(f), X, Y)
    assert f.equals(g)


def test_relation_composition_matches_map_composition():
    X, Y, Z = (0, 1), ("u", "v", "w"), ("p",)
    r = frozenset([(0, "u"), (1, "v"), (1, "w")])
    s = frozenset([("u", "p"), ("w", "p")])
    comp = frozenset((x, z) for x, y in r for yy, z in s if y == yy)
    f = relation_to_linmap(r, X, Y).then(relation_to_linmap(s, Y, Z))
    assert linmap_to_relation(f) == comp


def test_relation_order_is_pointwise_map_order():
    # R <= S iff fR <= fS pointwise, both directions
    X, Y = (0, 1), (0, 1)
    all_rels = [frozenset(s) for k in range(5)
                for s in itertools.combinations(
                    list(itertools.product(X, Y)), k)]
    for r in all_rels:
        for s in all_rels:
            fr = relation_to_linmap(r, X, Y)
            fs = relation_to_linmap(s, X, Y)
            pointwise = all(fr.src.leq(fr(a), fs(a))
                            for a in fr.src.elements())
            assert pointwise == (r <= s)


def test_opposite_is_dual_map():
    X, Y = (0, 1, 2), ("a", "b")
    r = frozenset([(0, "a"), (1, "a"), (1, "b")])
    f = relation_to_linmap(r, X, Y)
    d = dual_map(f)
    assert linmap_to_relation(d) == opposite(r)


def test_dense_map_rejects_non_linear():
    d = diamond()
    # send a,b to themselves, 1 to a: breaks join(a,b) = 1
    with pytest.raises(LatticeError):
        DenseMap(d, d, [0, 1, 2, 1])


# --------------------------------------------------------------------------
# tensor product

@pytest.mark.parametrize("nx,ny", [(1, 1), (1, 2), (2, 1), (2, 2),
                                   (2, 3), (3, 2), (3, 3)])
def test_tensor_of_power_lattices_is_power_of_product(nx, ny):
    X, Y = tuple(range(nx)), tuple("abc"[:ny])
    t = tensor(PowerLattice(X), PowerLattice(Y))
    # oracle: the power lattice of the product set, built independently
    oracle = PowerLattice(tuple(itertools.product(X, Y)))
    assert t.size == oracle.size == 2 ** (nx * ny)
    # order iso: map an ideal to the set of non-degenerate singleton cells
    lx, ly = t.factors

    def to_subset(a):
        m = 0
        for (u, v) in t.cells_of(a):
            us, vs = lx.members(u), ly.members(v)
            if len(us) == 1 and len(vs) == 1:
                m |= oracle.singleton((us[0], vs[0]))
        return m
    imgs = [to_subset(a) for a in t.elements()]
    assert len(set(imgs)) == t.size
    for a in t.elements():
        for b in t.elements():
            assert t.leq(a, b) == oracle.leq(imgs[a], imgs[b])
    # pure tensors of singletons are the atoms on both sides
    for x in X:
        for y in Y:
            p = t.pure(lx.singleton(x), ly.singleton(y))
            assert imgs[p] == oracle.singleton((x, y))


def test_tensor_with_unit_is_identity():
    for lat in SMALL_LATTICES:
        t = tensor(TWO, lat)
        assert t.size == lat.size
        # pure(1, a) in order is a copy of a
        ordering = [t.pure(1, a) for a in lat.elements()]
        for a in lat.elements():
            for b in lat.elements():
                assert lat.leq(a, b) == t.leq(ordering[a], ordering[b])


def test_tensor_chain_count_matches_hom_count():
    # |S (x) T| = |Lin(S, T op)|; for self-dual chains T op = T
    c = chain(3)
    assert tensor(c, c).size == len(list(linear_maps(c, c)))


def test_every_ideal_is_join_of_its_pure_cells():
    t = tensor(diamond(), chain(3))
    for a in t.elements():
        assert t.element_of_cells(t.cells_of(a)) == a


def test_pure_is_bilinear():
    S, T = diamond(), chain(3)
    t = tensor(S, T)
    for s1 in S.elements():
        for s2 in S.elements():
            for u in T.elements():
                assert t.pure(S.join2(s1, s2), u) == \
                    t.join2(t.pure(s1, u), t.pure(s2, u))
    for u in T.elements():
        assert t.pure(S.bottom, u) == t.bottom


def test_universal_property_exhaustive_small():
    # every bilinear map factors uniquely through pure
    for S, T, V in [(chain(2), chain(2), chain(3)),
                    (chain(3), diamond(), TWO.table()),
                    (diamond(), chain(2), diamond())]:
        ten = tensor(S, T)
        homST = hom_lattice(T, V)
        # bilinear maps S x T -> V = linear maps S -> hom(T, V)
        for g in linear_maps(S, homST):
            def b(s, u, g=g):
                return homST.label(g(s))[u]
            assert is_bilinear(b, S, T, V)
            h = universal_factor(b, ten, V)
            # uniqueness: any linear h' agreeing on pures equals h
            for c in ten.elements():
                assert h(c) == V.join(b(s, u) for (s, u) in ten.cells_of(c))


def test_universal_factor_rejects_non_bilinear():
    S = chain(2)
    ten = tensor(S, S)
    with pytest.raises(LatticeError):
        universal_factor(lambda s, t: 1, ten, S)   # not strict at bottom


def test_tensor_budget_error():
    with pytest.raises(BudgetError):
        tensor(PowerLattice(range(4)), PowerLattice(range(4)), budget=100)


def test_power_tensor_matches_ideal_tensor():
    X, Y = (0, 1), ("a", "b")
    lx, ly = PowerLattice(X), PowerLattice(Y)
    pt = tensor_power(lx, ly)
    it = tensor(lx, ly)
    assert pt.size == it.size
    # the pure maps generate isomorphic orders
    for s1 in lx.elements():
        for t1 in ly.elements():
            for s2 in lx.elements():
                for t2 in ly.elements():
                    a = pt.pure(s1, t1) | pt.pure(s2, t2)
                    b = it.join2(it.pure(s1, t1), it.pure(s2, t2))
                    c = pt.pure(s1, t1) & pt.pure(s2, t2)
                    d = it.meet2(it.pure(s1, t1), it.pure(s2, t2))
                    assert (a == pt.pure(s2, t2)) == (b == it.pure(s2, t2))
                    assert (c == pt.pure(s2, t2)) == (d == it.pure(s2, t2))


def test_symmetry_is_natural_involution():
    S, T = PowerLattice((0, 1)), PowerLattice(("x", "y"))
    tst, tts = tensor(S, T), tensor(T, S)
    sym = symmetry(tst, tts)
    sym_back = symmetry(tts, tst)
    assert sym.then(sym_back).equals(identity_map(tst))
    # naturality against a pair of relation maps
    f = RelMap.from_pairs(S, S, [(0, 1), (1, 1)])
    g = RelMap.from_pairs(T, T, [("x", "x"), ("x", "y")])
    fg = tensor_map([f, g], tst, tst)
    gf = tensor_map([g, f], tts, tts)
    assert fg.then(sym).equals(sym.then(gf))


def test_multi_tensor_associativity_on_pures():
    A, B, C = chain(2), chain(2), chain(3)
    t3 = IdealTensor([A, B, C])
    tab = tensor(A, B)
    # pure(a,b,c) joins behave like ((a,b),c) joins
    for a1, b1, c1 in itertools.product(A, B, C):
        for a2, b2, c2 in itertools.product(A, B, C):
            lhs = t3.leq(t3.pure(a1, b1, c1), t3.pure(a2, b2, c2))
            rhs = (tab.leq(tab.pure(a1, b1), tab.pure(a2, b2))
                   and C.leq(c1, c2)) or t3.pure(a1, b1, c1) == t3.bottom
            assert lhs == rhs


# --------------------------------------------------------------------------
# duality

@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_triangle_equations(n):
    assert triangles_hold(tuple(range(n)))


def test_duality_data_shapes():
    eta, eps = duality_data((0, 1))
    assert eta.src is TWO or eta.src.base == TWO.base
    assert eta(0) == 0 and eps(0) == 0
    # eps(pure(U, V)) = 1 iff U meets V
    lX = PowerLattice((0, 1))
    TXX = eta.dst
    for u in lX.elements():
        for v in lX.elements():
            got = eps(TXX.pure(u, v))
            assert got == (1 if u & v else 0)


def test_dual_map_is_transpose_via_duality():
    X, Y = (0, 1), (0, 1, 2)
    for pairs in [[(0, 0)], [(0, 1), (1, 2)], [(0, 0), (0, 1), (1, 0)]]:
        f = relation_to_linmap(frozenset(pairs), X, Y)
        assert linmap_to_relation(dual_map(f)) == opposite(frozenset(pairs))


# --------------------------------------------------------------------------
# homs

def test_hom_lx_two_is_lx():
    for k in range(1, 4):
        lx = PowerLattice(tuple(range(k)))
        h = hom_lattice(lx, TWO.table())
        assert h.size == lx.size


def test_hom_two_s_is_s():
    for lat in SMALL_LATTICES:
        h = hom_lattice(TWO.table(), lat)
        assert h.size == lat.size


def test_hom_tensor_adjunction_counts():
    # |Lin(S (x) V, T)| = |Lin(S, hom(V, T))|, both enumerated directly
    cases = [(chain(2), chain(2), chain(3)),
             (chain(3), chain(2), diamond()),
             (diamond(), chain(2), chain(2)),
             (chain(2), diamond(), chain(2))]
    for S, V, T in cases:
        lhs = len(list(linear_maps(tensor(S, V), T)))
        rhs = len(list(linear_maps(S, hom_lattice(V, T))))
        assert lhs == rhs


@st.composite
def random_lattice(draw):
    # closure system on a small base: subsets closed under union/intersection
    k = draw(st.integers(min_value=0, max_value=3))
    seeds = draw(st.lists(st.integers(min_value=0, max_value=7),
                          min_size=k, max_size=k))
    family = {0, 7}
    family.update(seeds)
    changed = True
    while changed:
        changed = False
        for a in list(family):
            for b in list(family):
                for c in (a | b, a & b):
                    if c not in family:
                        family.add(c)
                        changed = True
    masks = sorted(family)
    leq = np.array([[(a & ~b) == 0 for b in masks] for a in masks])
    return TableLattice(masks, leq)


@settings(max_examples=25, deadline=None)
@given(random_lattice(), random_lattice())
def test_random_lattice_tensor_hom_duality(S, T):
    # |S (x) T| = |Lin(S, T op)| with T op built by flipping the order
    n = T.size
    flip = np.array([[T.leq(j, i) for j in T.elements()]
                     for i in T.elements()])
    Top = TableLattice(list(range(n)), flip)
    assert tensor(S, T).size == len(list(linear_maps(S, Top)))
