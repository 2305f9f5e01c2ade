import pytest

from galtan.suplat import (TWO, LatticeError, PowerLattice, DenseMap,
                           find_order_iso)
from galtan.locale import frame_morphism
from galtan.lrel import LRel, check_diamond
from galtan.locgroup import (FiniteGroup, discrete_localic_group, is_hopf,
                             is_hopf_iso)
from galtan.tannaka import (ASet, ConeFamily, FiniteMonoid, FinSite,
                            adjunction_check, aset_coproduct, aset_iso,
                            aset_product, aset_terminal, bounded_objects,
                            check_iso, classical_actions, compatibility_witness,
                            cyclic_site, diamond_split_witness, equivariant_maps,
                            extend_cone, functor_route_witness,
                            generator_order_check, group_site, hopf_structure_check,
                            join_congruence, lifting_check, nat_predual,
                            nonatomic_site, one_object_site, point_action,
                            point_aut, point_group, rel_coend, site_product,
                            subsite, terminal_site)


# --------------------------------------------------------------------------
# monoids, action sets, diagrams

def test_monoid_needs_single_unit():
    with pytest.raises(LatticeError):
        FiniteMonoid((0, 1), {(a, b): a for a in (0, 1) for b in (0, 1)})


def test_aset_rejects_broken_table():
    M = FiniteMonoid((0,), {(0, 0): 0})
    with pytest.raises(AssertionError):
        ASet(M, (0, 1), {(0, 0): 1, (0, 1): 1})


def test_aset_products_and_sums():
    z2 = cyclic_site(2)
    reg = z2.aset("reg")
    P = aset_product(reg, reg)
    assert len(P.points) == 4
    assert sorted(len(S) for S in P.subsets()) == [0, 2, 2, 4]
    S = aset_coproduct([reg, reg])
    assert len(S.points) == 4
    # the square of the translation splits into two translation copies
    assert aset_iso(P, S) is not None
    assert aset_iso(P, aset_coproduct([reg, z2.aset("pt"), z2.aset("pt")])) \
        is None
    assert len(equivariant_maps(reg, reg)) == 2
    assert aset_iso(reg, reg) is not None
    one = aset_terminal(z2.monoid)
    assert len(equivariant_maps(reg, one)) == 1


def test_site_refuses_broken_composite():
    fibers = {"x": (0, 1)}
    arrows = {"i": ("x", "x"), "f": ("x", "x")}
    app = {"i": {0: 0, 1: 1}, "f": {0: 1, 1: 0}}
    # f;f is the identity on points but the table names f, a real mismatch
    then = {("i", "i"): "i", ("i", "f"): "f", ("f", "i"): "f",
            ("f", "f"): "f"}
    with pytest.raises(LatticeError):
        FinSite(["x"], arrows, {"x": "i"}, then, fibers, app)


def test_group_site_census():
    z2 = cyclic_site(2)
    assert sorted(z2.arrows) == ["drop", "id:pt", "id:reg", "turn:1"]
    assert z2.hom("pt", "reg") == []
    z3 = cyclic_site(3)
    assert sorted(z3.arrows) == ["drop", "id:pt", "id:reg", "turn:1", "turn:2"]
    t = terminal_site()
    assert len(t.arrows) == 1


def test_relation_supply():
    z2 = cyclic_site(2)
    rr = z2.relations("reg", "reg")
    assert len(rr) == 4
    assert ((0, 0), (1, 1)) in rr and ((0, 1), (1, 0)) in rr
    assert len(z2.relations("pt", "reg")) == 2
    z3 = cyclic_site(3)
    assert len(z3.relations("reg", "reg")) == 8


def test_site_products_realized():
    z2 = cyclic_site(2)
    assert site_product(z2, "pt", "pt")[0] == "pt"
    assert site_product(z2, "pt", "reg")[0] == "reg"
    assert site_product(z2, "reg", "reg") is None


def test_functor_routes_agree():
    assert functor_route_witness(terminal_site()) is None
    assert functor_route_witness(cyclic_site(2)) is None
    assert functor_route_witness(cyclic_site(3)) is None
    assert functor_route_witness(nonatomic_site()) is None


# --------------------------------------------------------------------------
# cones and their extensions

def test_cone_laws_on_glued_side():
    z2 = cyclic_site(2)
    cone = rel_coend(z2).cone
    assert cone.bijection_witness() is None
    assert cone.triangle_witness() is None
    assert cone.diamond_witness() is None
    assert cone.diamond1_witness() is None
    assert cone.diamond2_witness() is None


def test_broken_cone_is_witnessed():
    z2 = cyclic_site(2)
    L = rel_coend(z2).lattice
    flat = {X: LRel.from_fn(z2.fiber[X], z2.fiber[X], L,
                            lambda a, b: L.top)
            for X in z2.objects}
    cone = ConeFamily(z2, L, flat)
    assert cone.bijection_witness() is not None
    assert cone.triangle_witness() is None
    assert cone.diamond_witness() is None


def test_extension_fixes_site_objects():
    z2 = cyclic_site(2)
    ce = rel_coend(z2)
    lam = extend_cone(z2, ce.cone, z2.aset("reg"))
    for a in z2.fiber["reg"]:
        for b in z2.fiber["reg"]:
            assert lam(a, b) == ce.cone["reg"](a, b)


def test_extension_separates_components():
    z2 = cyclic_site(2)
    ce = rel_coend(z2)
    two = aset_coproduct([z2.aset("reg"), z2.aset("reg")])
    lam = extend_cone(z2, ce.cone, two)
    assert lam((0, 0), (1, 0)) == ce.lattice.bottom
    assert lam((0, 0), (0, 0)) == ce.cone["reg"](0, 0)


def test_extension_refused_without_cover():
    z2 = cyclic_site(2)
    only_pt = subsite(z2, ("pt",))
    pa = point_aut(only_pt)
    with pytest.raises(LatticeError):
        extend_cone(only_pt, pa.cone, z2.aset("reg"))


def test_diamond_iff_both_one_sided():
    for site in (terminal_site(), cyclic_site(2), nonatomic_site()):
        assert diamond_split_witness(site, rel_coend(site).cone) is None


def test_compatibility_of_glued_cone():
    for site in (terminal_site(), cyclic_site(2)):
        assert compatibility_witness(site, rel_coend(site).cone) is None


# --------------------------------------------------------------------------
# the point side

def test_point_side_sizes():
    assert point_aut(terminal_site()).concrete.size == 2
    pa = point_aut(cyclic_site(2))
    assert pa.materialized and pa.concrete.size == 4
    assert not point_aut(cyclic_site(3)).materialized
    assert point_aut(nonatomic_site()).concrete.size == 2


def test_point_side_is_hopf():
    pa = point_aut(cyclic_site(2))
    assert is_hopf(pa.hopf)
    # orbit pairs land in one class, mixed pairs in the other
    assert pa.gen_element("reg", 0, 0) == pa.gen_element("reg", 1, 1)
    assert pa.gen_element("reg", 0, 1) == pa.gen_element("reg", 1, 0)
    assert pa.gen_element("reg", 0, 0) != pa.gen_element("reg", 0, 1)
    assert pa.gen_element("pt", "*", "*") == pa.concrete.top


def test_point_side_matches_discrete_group():
    pa = point_aut(cyclic_site(2))
    dh = discrete_localic_group(FiniteGroup.cyclic(2))
    lk = dh.carrier
    imgs = [lk.top if X == "pt" else lk.singleton((b - a) % 2)
            for (X, a, b) in pa.triples]
    phi = frame_morphism(pa.concrete, lk, imgs)
    assert is_hopf_iso(pa.hopf, dh, phi)


def test_point_group_and_action():
    z2 = cyclic_site(2)
    pa = point_aut(z2)
    K = point_group(pa)
    assert K.order == 2
    lam = extend_cone(z2, pa.cone, z2.aset("reg"))
    act = point_action(pa, lam)
    moved = [p for p in K.elements if act[(p, 0)] == 1]
    assert len(moved) == 1 and moved[0] != K.unit


def test_nonatomic_point_group_collapses():
    pa = point_aut(nonatomic_site())
    assert point_group(pa).order == 1


# --------------------------------------------------------------------------
# the relation side

def test_congruence_engine():
    # one forced pair on two atoms: {1} ~ {2} collapses the middle layer
    out = join_congruence(2, [(1, 2)])
    assert out[1] == out[2] == out[3] == 3
    assert out[0] == 0
    out = join_congruence(3, [(1, 6)])
    assert out[1] == out[6] == 7


def test_glued_side_sizes():
    assert rel_coend(terminal_site()).lattice.size == 2
    assert rel_coend(cyclic_site(2)).lattice.size == 4
    assert rel_coend(cyclic_site(3)).lattice.size == 8
    assert rel_coend(nonatomic_site()).lattice.size == 2


def test_glued_side_identifications():
    ce = rel_coend(cyclic_site(2))
    assert ce.cls("reg", 0, 0) == ce.cls("reg", 1, 1)
    assert ce.cls("reg", 0, 1) == ce.cls("reg", 1, 0)
    assert ce.cls("pt", "*", "*") == ce.lattice.top
    assert ce.lattice.join2(ce.cls("reg", 0, 0), ce.cls("reg", 0, 1)) == \
        ce.lattice.top
    assert is_hopf(ce.hopf)


def test_glued_side_of_order_three():
    ce = rel_coend(cyclic_site(3))
    for d in (0, 1, 2):
        assert ce.cls("reg", 0, d) == ce.cls("reg", 1, (1 + d) % 3)
    assert len({ce.cls("reg", 0, d) for d in (0, 1, 2)}) == 3
    assert find_order_iso(ce.lattice, PowerLattice((0, 1, 2))) is not None
    dh = discrete_localic_group(FiniteGroup.cyclic(3))
    lk = dh.carrier
    table = [lk.join(lk.singleton((b - a) % 3)
                     for (X, a, b) in ce.lattice.labels[i] if X == "reg")
             for i in ce.lattice.elements()]
    phi = DenseMap(ce.lattice, lk, table)
    assert is_hopf_iso(ce.hopf, dh, phi)


def test_nonatomic_glue_kills_off_diagonal():
    ce = rel_coend(nonatomic_site())
    assert ce.cls("m", 0, 1) == ce.lattice.bottom
    assert ce.cls("m", 0, 0) == ce.lattice.top


# --------------------------------------------------------------------------
# the comparison

def test_iso_terminal():
    rep = check_iso(terminal_site())
    assert rep.ok and rep.sizes == (2, 2)


def test_iso_order_two():
    rep = check_iso(cyclic_site(2))
    assert rep.ok and not rep.lazy and rep.sizes == (4, 4)


def test_iso_order_three_lazy():
    rep = check_iso(cyclic_site(3))
    assert rep.ok and rep.lazy and rep.checked == 55 * 55


def test_mediating_map_of_delta_cone_is_counit():
    # the cone of identity indicators factors through the counit values
    z2 = cyclic_site(2)
    pa = point_aut(z2)
    tables = {X: LRel.from_fn(z2.fiber[X], z2.fiber[X], TWO,
                              lambda a, b: TWO.top if a == b else TWO.bottom)
              for X in z2.objects}
    cone = ConeFamily(z2, TWO, tables)
    phi = factor = frame_morphism(
        pa.concrete, TWO, [cone[X](a, b) for (X, a, b) in pa.triples])
    for (X, a, b) in pa.triples:
        assert factor(pa.gen_element(X, a, b)) == pa.hopf.e(
            pa.gen_element(X, a, b))
    assert phi(pa.concrete.top) == TWO.top


def test_generator_order_keyed_by_arrows():
    for n in (2, 3):
        rep = generator_order_check(cyclic_site(n))
        assert rep.nonzero_ok and rep.order_ok


def test_nonatomic_generators_vanish():
    rep = generator_order_check(nonatomic_site())
    assert not rep.nonzero_ok
    assert rep.witness[0] in (("m", 0, 1), ("m", 1, 0))


# --------------------------------------------------------------------------
# lifting

def test_bounded_window_of_order_two():
    objs = bounded_objects(cyclic_site(2), 3)
    assert len(objs) == 6
    assert sorted(len(A.points) for A in objs) == [0, 1, 2, 2, 3, 3]


def test_classical_action_counts():
    K = FiniteGroup.cyclic(2)
    assert [len(classical_actions(K, n)) for n in (1, 2, 3)] == [1, 2, 4]


def test_lifting_passes_on_group_sites():
    for site in (terminal_site(), cyclic_site(2)):
        rep = lifting_check(site, bound=3)
        for field in ("map_faithful", "map_full", "map_onto",
                      "rel_faithful", "rel_full", "rel_onto"):
            assert getattr(rep, field).ok, (site.name, field)


def test_lifting_fails_on_nonatomic():
    rep = lifting_check(nonatomic_site(), bound=3)
    assert not rep.map_full.ok and rep.map_full.witness is not None
    assert not rep.rel_full.ok and rep.rel_full.witness is not None
    assert rep.map_faithful.ok and rep.rel_faithful.ok
    assert rep.map_onto.ok and rep.rel_onto.ok
    # the witness map really is a point group map that no arrow explains
    A, B, pairs = rep.map_full.witness
    assert rep.group_order == 1


# --------------------------------------------------------------------------
# the predual hom object and its adjunction

def test_predual_sizes():
    assert nat_predual(terminal_site()).lattice.size == 2
    assert nat_predual(one_object_site((0, 1))).lattice.size == 16
    z2 = cyclic_site(2)
    assert nat_predual(subsite(z2, ("reg",))).lattice.size == 4


def test_predual_glues_along_arrows():
    z2 = cyclic_site(2)
    nc = nat_predual(subsite(z2, ("reg",)))
    assert nc.cls("reg", 0, 0) == nc.cls("reg", 1, 1)
    assert nc.cls("reg", 0, 1) == nc.cls("reg", 1, 0)


def test_adjunction_counts():
    V2, V4 = TWO, PowerLattice((0, 1))
    expect = {
        ("terminal", 2): (2, 2), ("terminal", 4): (4, 4),
        ("discrete2", 2): (16, 16), ("discrete2", 4): (256, 256),
        ("group2|reg", 2): (4, 4), ("group2|reg", 4): (16, 16)}
    sites = [terminal_site(), one_object_site((0, 1)),
             subsite(cyclic_site(2), ("reg",))]
    for site in sites:
        nc = nat_predual(site)
        for V in (V2, V4):
            rep = adjunction_check(nc, V)
            assert rep.matched
            assert (rep.hom_count, rep.nat_count) == expect[(site.name, V.size)]


# --------------------------------------------------------------------------
# route independence of the Hopf operations

def test_hopf_routes_on_group_sites():
    for n in (2, 3):
        rep = hopf_structure_check(cyclic_site(n))
        assert rep.mult_ok and rep.unit_ok and rep.counit_ok
        assert rep.antipode_ok and rep.comult_ok
        assert rep.witness is None


def test_hopf_routes_on_terminal():
    rep = hopf_structure_check(terminal_site())
    assert rep.witness is None
