import itertools

import pytest
from hypothesis import given, settings, strategies as st

from galtan.locale import (
    BOT, TOP, ConcreteFrame, ParseError, Presentation, PresentedFrame,
    free_frame, frame_morphism, is_frame, is_locale_algebra, jnf_eval,
    jnf_join, jnf_meet, jnf_reduce, locale_algebra_violation,
    morphism_violation, parse_term, present, prime_elements, show_term)
from galtan.suplat import (
    TWO, BudgetError, LatticeError, PowerLattice, TableLattice,
    find_order_iso)


def upset_count_oracle(n):
    'count the upward closed families of generator masks by brute force'
    ncore = 1 << n
    masks = range(ncore)
    count = 0
    for bits in range(1 << ncore):
        ok = True
        for m in masks:
            if not bits >> m & 1:
                continue
            for i in range(n):
                if not m >> i & 1 and not bits >> (m | 1 << i) & 1:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


# --------------------------------------------------------------------------
# terms

def test_parse_and_show_round_trip():
    gens = ("x", "y", "zz")
    for s in ["x", "x & y", "x | y & zz", "(x | y) & zz", "0", "1",
              "x & x | y"]:
        t = parse_term(s, gens)
        assert parse_term(show_term(t, gens), gens) == t


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_term("x & w", ("x", "y"))
    with pytest.raises(ParseError):
        parse_term("x &", ("x",))
    with pytest.raises(ParseError):
        parse_term("(x", ("x",))
    with pytest.raises(ParseError):
        parse_term("x y", ("x", "y"))


def test_jnf_absorption():
    gens = ("x", "y")
    assert parse_term("x | x & y", gens) == parse_term("x", gens)
    assert parse_term("x & (x | y)", gens) is not None
    assert parse_term("1 | x", gens) == TOP
    assert parse_term("0 & x", gens) == BOT


term_st = st.recursive(
    st.sampled_from(["x", "y", "z", "0", "1"]),
    lambda kids: st.tuples(kids, st.sampled_from("&|"), kids).map(
        lambda t: "(%s) %s (%s)" % (t[0], t[1], t[2])),
    max_leaves=8)


@settings(max_examples=80, deadline=None)
@given(term_st, term_st, st.integers(min_value=0, max_value=7))
def test_jnf_ops_match_truth_tables(s1, s2, vmask):
    gens = ("x", "y", "z")
    a, b = parse_term(s1, gens), parse_term(s2, gens)
    assert jnf_eval(jnf_meet(a, b), vmask) == (
        jnf_eval(a, vmask) and jnf_eval(b, vmask))
    assert jnf_eval(jnf_join(a, b), vmask) == (
        jnf_eval(a, vmask) or jnf_eval(b, vmask))


# --------------------------------------------------------------------------
# free frames

@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_free_frame_sizes(n):
    # oracle: brute force scan of all families of masks
    expected = upset_count_oracle(n)
    assert expected == [2, 3, 6, 20, 168][n]
    assert free_frame(n).materialize().size == expected


def test_free_frame_one_is_three_chain():
    f = free_frame(1).materialize()
    chain3 = TableLattice([0, 1, 2],
                          [[True, True, True],
                           [False, True, True],
                           [False, False, True]])
    assert find_order_iso(f, chain3) is not None


def test_free_frame_is_a_frame():
    for n in range(4):
        assert is_frame(free_frame(n).materialize())


def test_free_frame_generators_incomparable():
    pf = free_frame(3)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert not pf.leq(pf.gen(i), pf.gen(j))


# --------------------------------------------------------------------------
# presented frames

def test_boolean_square_presentation():
    pf = present(["x", "y"], ["x & y = 0", "x | y = 1"])
    f = pf.materialize()
    assert f.size == 4
    assert find_order_iso(f, PowerLattice((0, 1)).table()) is not None
    assert pf.equal("x | y", "1")
    assert pf.value("x & y") == pf.bottom
    assert not pf.leq(pf.gen("x"), pf.gen("y"))


def test_complemented_generator_collapses_order():
    # forcing x = 1 and x = 0 collapses the frame to a single element
    pf = present(["x"], ["x = 1", "x = 0"])
    assert pf.bottom == pf.top
    assert pf.materialize().size == 1
    assert pf.points() == []


def test_idempotent_relation():
    # x & y = x means exactly x <= y
    pf = present(["x", "y"], ["x & y = x"])
    assert pf.leq(pf.gen("x"), pf.gen("y"))
    assert not pf.leq(pf.gen("y"), pf.gen("x"))
    # the result is the frame on a 2 chain: up sets of {x <= y}
    assert pf.materialize().size == 4


def test_add_leq():
    pres = Presentation(("a", "b"))
    pres.add_leq("a", "b")
    pf = PresentedFrame(pres)
    assert pf.leq(pf.gen("a"), pf.gen("b"))


def test_saturation_properties():
    pf = present(["x", "y"], ["x & y = 0", "x | y = 1"])
    for seed in range(16):
        D = pf.up_close(seed)
        S = pf.saturate(seed)
        assert S & D == D                     # extensive
        assert pf.saturate(S) == S            # idempotent
    for s1 in range(16):
        for s2 in range(16):
            if s1 & ~s2 == 0:
                assert pf.saturate(s1) & ~pf.saturate(s2) == 0   # monotone


def test_lazy_order_agrees_with_materialized():
    pf = present(["x", "y", "z"], ["x & y = 0", "x | y | z = 1"])
    f = pf.materialize()
    terms = ["x", "y", "z", "x | y", "x & z", "y & z | x", "1", "0"]
    for t1 in terms:
        for t2 in terms:
            lazy = pf.leq(pf.value(t1), pf.value(t2))
            concrete = f.leq(f.element_of(t1), f.element_of(t2))
            assert lazy == concrete


def test_value_respects_frame_operations():
    pf = present(["x", "y", "z"], ["x & y = z"])
    gens = pf.gens
    terms = [parse_term(s, gens) for s in
             ["x", "y | z", "x & y", "z | x & y", "1", "0"]]
    for a in terms:
        for b in terms:
            assert pf.value(jnf_meet(a, b)) == \
                pf.meet_values([pf.value(a), pf.value(b)])
            assert pf.value(jnf_join(a, b)) == \
                pf.join_values([pf.value(a), pf.value(b)])


def test_materialize_budget():
    with pytest.raises(BudgetError):
        free_frame(4).materialize(budget=100)


def test_too_many_generators_refused():
    with pytest.raises(BudgetError):
        PresentedFrame(Presentation(["g%d" % i for i in range(17)]))


# --------------------------------------------------------------------------
# points

def test_points_of_free_frames():
    # every valuation is a point of the free frame
    for n in range(4):
        assert len(free_frame(n).points()) == 2 ** n


def test_points_of_boolean_square():
    pf = present(["x", "y"], ["x & y = 0", "x | y = 1"])
    assert sorted(pf.points()) == [1, 2]      # exactly one of x, y


def test_points_match_primes():
    # cross check: valuations correspond to prime elements
    cases = [
        present(["x", "y"], ["x & y = 0", "x | y = 1"]),
        free_frame(2),
        present(["x", "y"], ["x & y = x"]),
        present(["x", "y", "z"], ["x & y = 0", "y & z = 0"]),
    ]
    for pf in cases:
        f = pf.materialize()
        primes = set(prime_elements(f))
        assert len(primes) == len(pf.points())
        for v in pf.points():
            killed = [a for a in f.elements()
                      if pf.eval_at(f.value_of(a), v) == 0]
            assert f.join(killed) in primes


def test_eval_at_is_a_frame_morphism():
    pf = present(["x", "y"], ["x & y = 0"])
    f = pf.materialize()
    for v in pf.points():
        ev = [pf.eval_at(f.value_of(a), v) for a in f.elements()]
        for a in f.elements():
            for b in f.elements():
                assert ev[f.join2(a, b)] == max(ev[a], ev[b])
                assert ev[f.meet2(a, b)] == min(ev[a], ev[b])
        assert ev[f.top] == 1 and ev[f.bottom] == 0


# --------------------------------------------------------------------------
# morphisms

def test_frame_morphism_to_two():
    pf = present(["x", "y"], ["x & y = 0", "x | y = 1"])
    f = pf.materialize()
    two = TWO.table()
    g = frame_morphism(f, two, {0: 1, 1: 0})
    assert g(f.element_of("x")) == 1
    assert g(f.element_of("y")) == 0
    assert g(f.top) == 1 and g(f.bottom) == 0


def test_frame_morphism_refused_with_witness():
    pf = present(["x", "y"], ["x & y = 0"])
    f = pf.materialize()
    two = TWO.table()
    with pytest.raises(LatticeError) as e:
        frame_morphism(f, two, {0: 1, 1: 1})
    assert "x & y" in str(e.value)
    assert morphism_violation(pf.pres, two, {0: 1, 1: 1}) is not None
    assert morphism_violation(pf.pres, two, {0: 1, 1: 0}) is None


def test_frame_morphism_between_presented_frames():
    src = present(["x", "y"], ["x & y = 0"]).materialize()
    dst = present(["a", "b"], ["a & b = 0", "a | b = 1"]).materialize()
    g = frame_morphism(src, dst, {0: dst.element_of("a"),
                                  1: dst.element_of("b")})
    assert g(src.top) == dst.top


# --------------------------------------------------------------------------
# algebra checks

def test_power_lattices_are_locale_algebras():
    for k in range(4):
        assert is_locale_algebra(PowerLattice(tuple(range(k))).table())


def test_pentagon_is_not_a_locale_algebra():
    labels = ["0", "a", "c", "b", "1"]
    pairs = [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")]
    pent = TableLattice.from_order_pairs(labels, pairs)
    bad = locale_algebra_violation(pent)
    assert bad is not None and bad[0] == "bilinear"
    assert not is_frame(pent)


def test_materialized_presented_frames_are_frames():
    for pf in [present(["x", "y"], ["x & y = 0"]),
               present(["x", "y"], ["x | y = 1"]),
               free_frame(3)]:
        f = pf.materialize()
        assert is_frame(f)
        assert is_locale_algebra(f)
