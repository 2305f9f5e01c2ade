"""Lattice valued relations between finite sets and their diagram calculus.

An LRel is a total table X x Y -> G into a lattice.  Four axioms single
out the function like tables (ed, uv), the opfunction like ones (su, in)
and the bijections (all four).  Two tables can be compared along a pair
of functions, a pair of spans, or a pair of relations; the resulting
diagram conditions diamond1, diamond2, diamond and triangle are decided
pointwise, and a registry of verified statements sweeps entire instance
spaces for counterexamples.
"""

import itertools
import random
from collections import namedtuple

import numpy as np

from .suplat import PowerLattice, TWO, LatticeError

DiagramReport = namedtuple("DiagramReport", "which holds witness")

PropReport = namedtuple(
    "PropReport", "name mode target structures instances hyp_count holds counterexample")


def _report(which, witness):
    return DiagramReport(which, witness is None, witness)


class LRel:
    """A total table X x Y -> G.

    Cells are stored by index; x and y are looked up by label.  The
    target G only needs joins, meets and the two bounds, a frame in all
    the interesting cases.
    """

    def __init__(self, X, Y, G, tab):
        self.X = tuple(X)
        self.Y = tuple(Y)
        self.G = G
        self.tab = tuple(tuple(row) for row in tab)
        assert len(self.tab) == len(self.X), "one row per domain point"
        assert all(len(row) == len(self.Y) for row in self.tab), "total table"
        self._xi = {x: i for i, x in enumerate(self.X)}
        self._yi = {y: j for j, y in enumerate(self.Y)}

    @classmethod
    def from_fn(cls, X, Y, G, fn):
        return cls(X, Y, G, [[fn(x, y) for y in Y] for x in X])

    @classmethod
    def delta(cls, X, G):
        'value 1 on the diagonal, 0 off it'
        return cls.from_fn(X, X, G,
                           lambda x, y: G.top if x == y else G.bottom)

    @classmethod
    def from_pairs(cls, pairs, X, Y, G):
        'the 2 valued table of an ordinary relation'
        pairs = set(pairs)
        return cls.from_fn(X, Y, G,
                           lambda x, y: G.top if (x, y) in pairs else G.bottom)

    def __call__(self, x, y):
        return self.tab[self._xi[x]][self._yi[y]]

    def at(self, i, j):
        return self.tab[i][j]

    def __eq__(self, other):
        return (isinstance(other, LRel) and self.X == other.X
                and self.Y == other.Y and self.tab == other.tab)

    def __hash__(self):
        return hash((self.X, self.Y, self.tab))

    def __repr__(self):
        return "LRel(%d x %d)" % (len(self.X), len(self.Y))

    def converse(self):
        return LRel(self.Y, self.X, self.G,
                    [[self.tab[i][j] for i in range(len(self.X))]
                     for j in range(len(self.Y))])

    def transport(self, h, H):
        'push the table along a lattice map; frame maps preserve the axioms'
        return LRel(self.X, self.Y, H,
                    [[h(v) for v in row] for row in self.tab])

    # axiom witnesses, always the first violating tuple in index order

    def ed_witness(self):
        G = self.G
        for i, x in enumerate(self.X):
            if G.join(self.tab[i]) != G.top:
                return (x,)
        return None

    def uv_witness(self):
        G = self.G
        for i, x in enumerate(self.X):
            for j1 in range(len(self.Y)):
                for j2 in range(j1 + 1, len(self.Y)):
                    if G.meet2(self.tab[i][j1], self.tab[i][j2]) != G.bottom:
                        return (x, self.Y[j1], self.Y[j2])
        return None

    def su_witness(self):
        G = self.G
        for j, y in enumerate(self.Y):
            if G.join(row[j] for row in self.tab) != G.top:
                return (y,)
        return None

    def in_witness(self):
        G = self.G
        for i1 in range(len(self.X)):
            for i2 in range(i1 + 1, len(self.X)):
                for j, y in enumerate(self.Y):
                    if G.meet2(self.tab[i1][j], self.tab[i2][j]) != G.bottom:
                        return (self.X[i1], self.X[i2], y)
        return None

    def axioms(self):
        return {"ed": self.ed_witness() is None,
                "uv": self.uv_witness() is None,
                "su": self.su_witness() is None,
                "in": self.in_witness() is None}

    def is_lfunction(self):
        return self.ed_witness() is None and self.uv_witness() is None

    def is_lopfunction(self):
        return self.su_witness() is None and self.in_witness() is None

    def is_lbijection(self):
        return self.is_lfunction() and self.is_lopfunction()


class Span:
    'an apex with two total legs; relations are the jointly injective case'

    def __init__(self, apex, left, right, X, Xp):
        self.apex = tuple(apex)
        self.left = dict(left)
        self.right = dict(right)
        self.X = tuple(X)
        self.Xp = tuple(Xp)
        for r in self.apex:
            assert self.left[r] in self.X, (r, self.left[r])
            assert self.right[r] in self.Xp, (r, self.right[r])

    @classmethod
    def from_relation(cls, pairs, X, Xp):
        'the inclusion span of a subset of X x Xp'
        apex = sorted(set(pairs))
        return cls(apex, {p: p[0] for p in apex}, {p: p[1] for p in apex},
                   X, Xp)

    @classmethod
    def from_function(cls, f, X, Xp):
        'the graph span of a function, apex X itself'
        return cls(X, {x: x for x in X}, dict(f), X, Xp)

    @classmethod
    def from_opfunction(cls, f, X, Xp):
        'the reversed graph: apex Xp, right leg identity'
        return cls(Xp, dict(f), {x: x for x in Xp}, X, Xp)

    def pairs(self):
        'the relation the span induces'
        return frozenset((self.left[r], self.right[r]) for r in self.apex)

    def is_relation(self):
        return len(self.pairs()) == len(self.apex)

    def __repr__(self):
        return "Span(%d -> %d x %d)" % (
            len(self.apex), len(self.X), len(self.Xp))


# --------------------------------------------------------------------------
# diagram checks; lam is the upper table, lamp the lower one

def check_diamond1(f, g, lam, lamp):
    """lamp<f(a), b'> = join of lam<a, y> over g(y) = b', for all a, b'."""
    G = lam.G
    for a in lam.X:
        for bp in lamp.Y:
            lhs = lamp(f[a], bp)
            rhs = G.join(lam(a, y) for y in lam.Y if g[y] == bp)
            if lhs != rhs:
                return _report("diamond1", (a, bp, lhs, rhs))
    return _report("diamond1", None)


def check_diamond2(f, g, lam, lamp):
    """lamp<a', g(b)> = join of lam<x, b> over f(x) = a', for all a', b."""
    G = lam.G
    for ap in lamp.X:
        for b in lam.Y:
            lhs = lamp(ap, g[b])
            rhs = G.join(lam(x, b) for x in lam.X if f[x] == ap)
            if lhs != rhs:
                return _report("diamond2", (ap, b, lhs, rhs))
    return _report("diamond2", None)


def check_diamond(R, S, lam, lamp):
    """Joins along two relations agree: for all a, b',
    join of lam<a, y> over (y, b') in S = join of lamp<x', b'> over (a, x') in R.
    R and S may be spans or plain pair sets."""
    rp = R.pairs() if isinstance(R, Span) else frozenset(R)
    sp = S.pairs() if isinstance(S, Span) else frozenset(S)
    G = lam.G
    for a in lam.X:
        for bp in lamp.Y:
            lhs = G.join(lam(a, y) for y in lam.Y if (y, bp) in sp)
            rhs = G.join(lamp(xp, bp) for xp in lamp.X if (a, xp) in rp)
            if lhs != rhs:
                return _report("diamond", (a, bp, lhs, rhs))
    return _report("diamond", None)


def check_triangle(f, g, lam, lamp):
    """lam<a, b> <= lamp<f(a), g(b)> for all a, b."""
    G = lam.G
    for a in lam.X:
        for b in lam.Y:
            lo, hi = lam(a, b), lamp(f[a], g[b])
            if not G.leq(lo, hi):
                return _report("triangle", (a, b, lo, hi))
    return _report("triangle", None)


def product(lam, lamp):
    'cellwise meet on the product sets'
    assert lam.G is lamp.G or lam.G == lamp.G
    X = tuple(itertools.product(lam.X, lamp.X))
    Y = tuple(itertools.product(lam.Y, lamp.Y))
    return LRel.from_fn(
        X, Y, lam.G,
        lambda xx, yy: lam.G.meet2(lam(xx[0], yy[0]), lamp(xx[1], yy[1])))


def restrict(prod, R, S):
    'the product table read only on the pairs of two relations'
    rp = sorted(R.pairs() if isinstance(R, Span) else set(R))
    sp = sorted(S.pairs() if isinstance(S, Span) else set(S))
    return LRel.from_fn(tuple(rp), tuple(sp), prod.G,
                        lambda r, s: prod(r, s))


def all_tables(X, Y, G):
    'every LRel X x Y -> G; exponential, for small exhaustive tests'
    cells = [(x, y) for x in X for y in Y]
    for vals in itertools.product(G.elements(), repeat=len(cells)):
        tab = dict(zip(cells, vals))
        yield LRel.from_fn(X, Y, G, lambda x, y: tab[(x, y)])


# --------------------------------------------------------------------------
# vectorized two valued sweeps
#
# A 2 valued table on nx x ny cells is an integer below 2^(nx ny); the
# helpers below produce boolean arrays indexed by table number and decide
# each diagram condition for all tables of a structure at once.

def _tables2(nx, ny):
    n = nx * ny
    t = np.arange(1 << n, dtype=np.uint32)
    cells = (t[:, None] >> np.arange(n, dtype=np.uint32)[None, :]) & 1
    return cells.astype(bool).reshape(1 << n, nx, ny)


def _ax_ed(v):
    return v.any(axis=2).all(axis=1)


def _ax_su(v):
    return v.any(axis=1).all(axis=1)


def _ax_uv(v):
    ny = v.shape[2]
    pair = v[:, :, :, None] & v[:, :, None, :]
    off = ~np.eye(ny, dtype=bool)[None, None, :, :]
    return ~(pair & off).any(axis=(1, 2, 3))


def _ax_in(v):
    nx = v.shape[1]
    pair = v[:, :, None, :] & v[:, None, :, :]
    off = ~np.eye(nx, dtype=bool)[None, :, :, None]
    return ~(pair & off).any(axis=(1, 2, 3))


def _onehot(f, n_src, n_dst):
    m = np.zeros((n_src, n_dst), dtype=bool)
    for i in range(n_src):
        m[i, f[i]] = True
    return m


def _d1(f, g, U, L):
    'grid [upper table, lower table] of the diamond1 condition'
    gm = _onehot(g, U.shape[2], L.shape[2])
    rhs = (U[:, :, :, None] & gm[None, None, :, :]).any(axis=2)
    lhs = L[:, list(f), :]
    eq = rhs[:, None] == lhs[None, :]
    return eq.all(axis=(2, 3))


def _d2(f, g, U, L):
    fm = _onehot(f, U.shape[1], L.shape[1])
    rhs = (U[:, :, None, :] & fm[None, :, :, None]).any(axis=1)
    lhs = L[:, :, list(g)]
    eq = rhs[:, None] == lhs[None, :]
    return eq.all(axis=(2, 3))


def _tri(f, g, U, L):
    'grid [upper, lower] of the triangle inequality along f, g'
    lo = L[:, list(f), :][:, :, list(g)]
    ok = ~U[:, None] | lo[None, :]
    return ok.all(axis=(2, 3))


def _dia(rm, sm, U, L):
    'grid [lam table, lamp table] of the diamond condition along relations'
    lhs = (U[:, :, :, None] & sm[None, None, :, :]).any(axis=2)
    rhs = (L[:, None, :, :] & rm[None, :, :, None]).any(axis=2)
    eq = lhs[:, None] == rhs[None, :]
    return eq.all(axis=(2, 3))


def _relmask(pairs, nx, ny):
    m = np.zeros((nx, ny), dtype=bool)
    for (i, j) in pairs:
        m[i, j] = True
    return m


def _sizes(bound):
    return range(bound + 1)


def _legs(napex, n):
    'all functions range(napex) -> range(n)'
    if napex == 0:
        return [()]
    return list(itertools.product(range(n), repeat=napex))


def _first_true(*grids):
    'index tuple of the first set cell of the broadcast conjunction'
    full = grids[0]
    for g in grids[1:]:
        full = full & g
    if not full.any():
        return None
    flat = int(np.argmax(full))
    return np.unravel_index(flat, full.shape)


def _decode(t, nx, ny):
    return tuple(tuple((t >> (i * ny + j)) & 1 for j in range(ny))
                 for i in range(nx))


class _SpanStructures:
    'every pair of spans over sets of size up to the bound'

    def __init__(self, bound):
        self.bound = bound

    def __iter__(self):
        b = self.bound
        for nx, ny, nxp, nyp in itertools.product(_sizes(b), repeat=4):
            for nr, ns in itertools.product(_sizes(b), repeat=2):
                for p in _legs(nr, nx):
                    for pp in _legs(nr, nxp):
                        for q in _legs(ns, ny):
                            for qp in _legs(ns, nyp):
                                yield (nx, ny, nxp, nyp, nr, ns, p, pp, q, qp)


class _RelStructures:
    'every pair of relations over sets of size up to the bound'

    def __init__(self, bound):
        self.bound = bound

    def __iter__(self):
        b = self.bound
        for nx, ny, nxp, nyp in itertools.product(_sizes(b), repeat=4):
            xs = list(itertools.product(range(nx), range(nxp)))
            ys = list(itertools.product(range(ny), range(nyp)))
            for rbits in range(1 << len(xs)):
                rp = [xs[i] for i in range(len(xs)) if rbits >> i & 1]
                for sbits in range(1 << len(ys)):
                    sp = [ys[i] for i in range(len(ys)) if sbits >> i & 1]
                    yield (nx, ny, nxp, nyp, tuple(rp), tuple(sp))


class _FnStructures:
    'every pair of functions f: X -> Xp, g: Y -> Yp up to the bound'

    def __init__(self, bound):
        self.bound = bound

    def __iter__(self):
        b = self.bound
        for nx, ny, nxp, nyp in itertools.product(_sizes(b), repeat=4):
            if (nx and not nxp) or (ny and not nyp):
                continue    # no total function into an empty set
            for f in _legs(nx, nxp):
                for g in _legs(ny, nyp):
                    yield (nx, ny, nxp, nyp, f, g)


# each sweep returns (structures, instances, hyp_count, counterexample)

def _sweep_span_glue(bound):
    'two functional diamonds through a connector give the span diamond'
    structures = instances = hyps = 0
    for (nx, ny, nxp, nyp, nr, ns, p, pp, q, qp) in _SpanStructures(bound):
        structures += 1
        L, Lp, T = _tables2(nx, ny), _tables2(nxp, nyp), _tables2(nr, ns)
        instances += L.shape[0] * Lp.shape[0] * T.shape[0]
        h1 = _d1(pp, qp, T, Lp)                     # [T, Lp]
        h2 = _d2(p, q, T, L)                        # [T, L]
        rm = _relmask({(p[r], pp[r]) for r in range(nr)}, nx, nxp)
        sm = _relmask({(q[s], qp[s]) for s in range(ns)}, ny, nyp)
        c = _dia(rm, sm, L, Lp)                     # [L, Lp]
        hyp = h1[:, None, :] & h2[:, :, None]
        hyps += int(hyp.sum())
        bad = _first_true(hyp, ~c[None, :, :])
        if bad is not None:
            t, l, lp = bad
            return structures, instances, hyps, {
                "structure": (nx, ny, nxp, nyp, nr, ns, p, pp, q, qp),
                "lam": _decode(l, nx, ny), "lamp": _decode(lp, nxp, nyp),
                "theta": _decode(t, nr, ns)}
    return structures, instances, hyps, None


def _sweep_diamond_to_triangle(bound):
    'either functional diamond forces the triangle inequality'
    structures = instances = hyps = 0
    for (nx, ny, nxp, nyp, f, g) in _FnStructures(bound):
        structures += 1
        U, L = _tables2(nx, ny), _tables2(nxp, nyp)
        instances += U.shape[0] * L.shape[0]
        hyp = _d1(f, g, U, L) | _d2(f, g, U, L)
        hyps += int(hyp.sum())
        bad = _first_true(hyp, ~_tri(f, g, U, L))
        if bad is not None:
            u, l = bad
            return structures, instances, hyps, {
                "structure": (nx, ny, nxp, nyp, f, g),
                "lam": _decode(u, nx, ny), "lamp": _decode(l, nxp, nyp)}
    return structures, instances, hyps, None


def _sweep_product_axioms(bound):
    'each axiom for both factors forces it for the product'
    structures = instances = hyps = 0
    for nx, ny, nxp, nyp in itertools.product(_sizes(bound), repeat=4):
        structures += 1
        A, B = _tables2(nx, ny), _tables2(nxp, nyp)
        instances += A.shape[0] * B.shape[0]
        # product tables, indexed [ta, tb, (a,a'), (b,b')]
        P = (A[:, None, :, None, :, None] & B[None, :, None, :, None, :])
        P = P.reshape(A.shape[0] * B.shape[0], nx * nxp, ny * nyp)
        checks = [(_ax_ed, "ed"), (_ax_uv, "uv"), (_ax_su, "su"),
                  (_ax_in, "in")]
        for ax, name in checks:
            h = ax(A)[:, None] & ax(B)[None, :]
            hyps += int(h.sum())
            c = ax(P).reshape(A.shape[0], B.shape[0])
            bad = _first_true(h, ~c)
            if bad is not None:
                a, b = bad
                return structures, instances, hyps, {
                    "structure": (nx, ny, nxp, nyp), "axiom": name,
                    "lam": _decode(a, nx, ny), "lamp": _decode(b, nxp, nyp)}
    return structures, instances, hyps, None


def _sweep_connector_meet(bound):
    'meets of two tables along a connector collapse to joins of it'
    structures = instances = hyps = 0
    for (nx, ny, nxp, nyp, nr, ns, p, pp, q, qp) in _SpanStructures(bound):
        structures += 1
        L, Lp, T = _tables2(nx, ny), _tables2(nxp, nyp), _tables2(nr, ns)
        instances += 2 * L.shape[0] * Lp.shape[0] * T.shape[0]
        # first form: both diamond1 plus uv for the connector
        h1 = _d1(p, q, T, L)
        h2 = _d1(pp, qp, T, Lp)
        huv = _ax_uv(T)
        # lhs[l, lp, r, b, b'] = lam<p r, b> & lamp<p' r, b'>
        lam_p = L[:, list(p), :]
        lamp_pp = Lp[:, list(pp), :]
        lhs = lam_p[:, None, :, :, None] & lamp_pp[None, :, :, None, :]
        # rhs[t, r, b, b'] = join of theta<r, v> over q v = b, q' v = b'
        sel = np.zeros((ns, ny, nyp), dtype=bool)
        for v in range(ns):
            sel[v, q[v], qp[v]] = True
        rhs = (T[:, :, :, None, None] & sel[None, None, :, :, :]).any(axis=2)
        eq = lhs[None, :, :] == rhs[:, None, None, :, :, :]
        c1 = eq.all(axis=(3, 4, 5))
        hyp1 = h1[:, :, None] & h2[:, None, :] & huv[:, None, None]
        hyps += int(hyp1.sum())
        bad = _first_true(hyp1, ~c1)
        if bad is None:
            # second form: both diamond2 plus in for the connector
            h1b = _d2(p, q, T, L)
            h2b = _d2(pp, qp, T, Lp)
            hin = _ax_in(T)
            lam_q = L[:, :, list(q)]
            lamp_qp = Lp[:, :, list(qp)]
            lhsb = lam_q[:, None, :, None, :] & lamp_qp[None, :, None, :, :]
            selb = np.zeros((nr, nx, nxp), dtype=bool)
            for u in range(nr):
                selb[u, p[u], pp[u]] = True
            rhsb = (T[:, :, None, None, :] &
                    selb[None, :, :, :, None]).any(axis=1)
            eqb = lhsb[None, :, :] == rhsb[:, None, None, :, :, :]
            c2 = eqb.all(axis=(3, 4, 5))
            hyp2 = h1b[:, :, None] & h2b[:, None, :] & hin[:, None, None]
            hyps += int(hyp2.sum())
            bad = _first_true(hyp2, ~c2)
            which = "su-form"
        else:
            which = "ed-form"
        if bad is not None:
            t, l, lp = bad
            return structures, instances, hyps, {
                "structure": (nx, ny, nxp, nyp, nr, ns, p, pp, q, qp),
                "form": which, "lam": _decode(l, nx, ny),
                "lamp": _decode(lp, nxp, nyp), "theta": _decode(t, nr, ns)}
    return structures, instances, hyps, None


def _sweep_triangle_to_diamond(bound):
    'with ed/uv (resp. su/in) the triangle upgrades to a diamond'
    structures = instances = hyps = 0
    for (nx, ny, nxp, nyp, f, g) in _FnStructures(bound):
        structures += 1
        U, L = _tables2(nx, ny), _tables2(nxp, nyp)
        instances += 2 * U.shape[0] * L.shape[0]
        tri = _tri(f, g, U, L)
        h1 = _ax_ed(U)[:, None] & _ax_uv(L)[None, :] & tri
        hyps += int(h1.sum())
        bad = _first_true(h1, ~_d1(f, g, U, L))
        which = "ed-uv"
        if bad is None:
            h2 = _ax_su(U)[:, None] & _ax_in(L)[None, :] & tri
            hyps += int(h2.sum())
            bad = _first_true(h2, ~_d2(f, g, U, L))
            which = "su-in"
        if bad is not None:
            u, l = bad
            return structures, instances, hyps, {
                "structure": (nx, ny, nxp, nyp, f, g), "form": which,
                "lam": _decode(u, nx, ny), "lamp": _decode(l, nxp, nyp)}
    return structures, instances, hyps, None


def _sweep_triangles_to_span(bound):
    'two triangles and a bijective enough connector give the span diamond'
    structures = instances = hyps = 0
    for (nx, ny, nxp, nyp, nr, ns, p, pp, q, qp) in _SpanStructures(bound):
        structures += 1
        L, Lp, T = _tables2(nx, ny), _tables2(nxp, nyp), _tables2(nr, ns)
        instances += L.shape[0] * Lp.shape[0] * T.shape[0]
        t1 = _tri(p, q, T, L)
        t2 = _tri(pp, qp, T, Lp)
        ht = _ax_ed(T) & _ax_su(T)
        hin = _ax_in(L)
        huv = _ax_uv(Lp)
        rm = _relmask({(p[r], pp[r]) for r in range(nr)}, nx, nxp)
        sm = _relmask({(q[s], qp[s]) for s in range(ns)}, ny, nyp)
        c = _dia(rm, sm, L, Lp)
        hyp = (t1[:, :, None] & t2[:, None, :] & ht[:, None, None]
               & hin[None, :, None] & huv[None, None, :])
        hyps += int(hyp.sum())
        bad = _first_true(hyp, ~c[None, :, :])
        if bad is not None:
            t, l, lp = bad
            return structures, instances, hyps, {
                "structure": (nx, ny, nxp, nyp, nr, ns, p, pp, q, qp),
                "lam": _decode(l, nx, ny), "lamp": _decode(lp, nxp, nyp),
                "theta": _decode(t, nr, ns)}
    return structures, instances, hyps, None


def _restrict_tables(L, Lp, rp, sp):
    'tables [l, lp, r, s] of the product restricted to two relations'
    nr, ns = len(rp), len(sp)
    out = np.zeros((L.shape[0], Lp.shape[0], nr, ns), dtype=bool)
    for i, (a, ap) in enumerate(rp):
        for j, (b, bp) in enumerate(sp):
            out[:, :, i, j] = L[:, a, b][:, None] & Lp[:, ap, bp][None, :]
    return out


def _theta_bij(L, Lp, rp, sp):
    'bijection axioms of the restricted product, grid [l, lp]'
    th = _restrict_tables(L, Lp, rp, sp)
    flat = th.reshape(L.shape[0] * Lp.shape[0], len(rp), len(sp))
    bij = _ax_ed(flat) & _ax_uv(flat) & _ax_su(flat) & _ax_in(flat)
    return bij.reshape(L.shape[0], Lp.shape[0])


def _sweep_span_diamond_bijection(bound):
    'the span diamond makes the restricted product a bijection'
    structures = instances = hyps = 0
    for (nx, ny, nxp, nyp, rp, sp) in _RelStructures(bound):
        structures += 1
        L, Lp = _tables2(nx, ny), _tables2(nxp, nyp)
        instances += L.shape[0] * Lp.shape[0]
        bijL = _ax_ed(L) & _ax_uv(L) & _ax_su(L) & _ax_in(L)
        bijLp = _ax_ed(Lp) & _ax_uv(Lp) & _ax_su(Lp) & _ax_in(Lp)
        rm = _relmask(rp, nx, nxp)
        sm = _relmask(sp, ny, nyp)
        hyp = bijL[:, None] & bijLp[None, :] & _dia(rm, sm, L, Lp)
        hyps += int(hyp.sum())
        bad = _first_true(hyp, ~_theta_bij(L, Lp, rp, sp))
        if bad is not None:
            l, lp = bad
            return structures, instances, hyps, {
                "structure": (nx, ny, nxp, nyp, rp, sp),
                "lam": _decode(l, nx, ny), "lamp": _decode(lp, nxp, nyp)}
    return structures, instances, hyps, None


def _sweep_bijection_iff_diamond(bound):
    'for bijective factors the span diamond and the bijection coincide'
    structures = instances = hyps = 0
    for (nx, ny, nxp, nyp, rp, sp) in _RelStructures(bound):
        structures += 1
        L, Lp = _tables2(nx, ny), _tables2(nxp, nyp)
        instances += L.shape[0] * Lp.shape[0]
        bijL = _ax_ed(L) & _ax_uv(L) & _ax_su(L) & _ax_in(L)
        bijLp = _ax_ed(Lp) & _ax_uv(Lp) & _ax_su(Lp) & _ax_in(Lp)
        base = bijL[:, None] & bijLp[None, :]
        hyps += int(base.sum())
        rm = _relmask(rp, nx, nxp)
        sm = _relmask(sp, ny, nyp)
        dia = _dia(rm, sm, L, Lp)
        bij = _theta_bij(L, Lp, rp, sp)
        bad = _first_true(base, dia != bij)
        if bad is not None:
            l, lp = bad
            return structures, instances, hyps, {
                "structure": (nx, ny, nxp, nyp, rp, sp),
                "lam": _decode(l, nx, ny), "lamp": _decode(lp, nxp, nyp),
                "diamond": bool(dia[bad]), "bijection": bool(bij[bad])}
    return structures, instances, hyps, None


_SWEEPS = {
    "span-glue": _sweep_span_glue,
    "diamond-to-triangle": _sweep_diamond_to_triangle,
    "product-axioms": _sweep_product_axioms,
    "connector-meet": _sweep_connector_meet,
    "triangle-to-diamond": _sweep_triangle_to_diamond,
    "triangles-to-span": _sweep_triangles_to_span,
    "span-diamond-bijection": _sweep_span_diamond_bijection,
    "bijection-iff-diamond": _sweep_bijection_iff_diamond,
}

PROPOSITIONS = tuple(sorted(_SWEEPS))


# --------------------------------------------------------------------------
# the same statements evaluated naively on one concrete instance

def _naive_span_instance(inst):
    'unpack a span structure dict into Span and LRel objects over a frame'
    G = inst["G"]
    lam = inst["lam"]
    lamp = inst["lamp"]
    R = inst["R"]
    S = inst["S"]
    theta = inst.get("theta")
    return G, lam, lamp, R, S, theta


def naive_check(name, inst):
    """Evaluate one statement on one instance with the plain checkers.

    Returns (hypothesis holds, conclusion holds); independent of the
    vectorized sweeps, used to cross check them.
    """
    G, lam, lamp, R, S, theta = _naive_span_instance(inst)
    if name == "span-glue":
        pp = {r: R.right[r] for r in R.apex}
        qp = {s: S.right[s] for s in S.apex}
        p = {r: R.left[r] for r in R.apex}
        q = {s: S.left[s] for s in S.apex}
        hyp = (check_diamond1(pp, qp, theta, lamp).holds
               and check_diamond2(p, q, theta, lam).holds)
        concl = check_diamond(R, S, lam, lamp).holds
    elif name == "diamond-to-triangle":
        f, g = inst["f"], inst["g"]
        hyp = (check_diamond1(f, g, lam, lamp).holds
               or check_diamond2(f, g, lam, lamp).holds)
        concl = check_triangle(f, g, lam, lamp).holds
    elif name == "product-axioms":
        ax, axp = lam.axioms(), lamp.axioms()
        axq = product(lam, lamp).axioms()
        hyp = True
        concl = all(not (ax[k] and axp[k]) or axq[k] for k in ax)
    elif name == "connector-meet":
        p = {r: R.left[r] for r in R.apex}
        pp = {r: R.right[r] for r in R.apex}
        q = {s: S.left[s] for s in S.apex}
        qp = {s: S.right[s] for s in S.apex}
        h_ed = (check_diamond1(p, q, theta, lam).holds
                and check_diamond1(pp, qp, theta, lamp).holds
                and theta.uv_witness() is None)
        h_su = (check_diamond2(p, q, theta, lam).holds
                and check_diamond2(pp, qp, theta, lamp).holds
                and theta.in_witness() is None)
        eq1 = all(
            G.meet2(lam(p[r], b), lamp(pp[r], bp)) ==
            G.join(theta(r, v) for v in S.apex
                   if q[v] == b and qp[v] == bp)
            for r in R.apex for b in lam.Y for bp in lamp.Y)
        eq2 = all(
            G.meet2(lam(a, q[s]), lamp(ap, qp[s])) ==
            G.join(theta(u, s) for u in R.apex
                   if p[u] == a and pp[u] == ap)
            for s in S.apex for a in lam.X for ap in lamp.X)
        hyp = h_ed or h_su
        concl = (not h_ed or eq1) and (not h_su or eq2)
    elif name == "triangle-to-diamond":
        f, g = inst["f"], inst["g"]
        tri = check_triangle(f, g, lam, lamp).holds
        h1 = lam.ed_witness() is None and lamp.uv_witness() is None and tri
        h2 = lam.su_witness() is None and lamp.in_witness() is None and tri
        hyp = h1 or h2
        concl = ((not h1 or check_diamond1(f, g, lam, lamp).holds)
                 and (not h2 or check_diamond2(f, g, lam, lamp).holds))
    elif name == "triangles-to-span":
        p = {r: R.left[r] for r in R.apex}
        pp = {r: R.right[r] for r in R.apex}
        q = {s: S.left[s] for s in S.apex}
        qp = {s: S.right[s] for s in S.apex}
        hyp = (lam.in_witness() is None and lamp.uv_witness() is None
               and check_triangle(p, q, theta, lam).holds
               and check_triangle(pp, qp, theta, lamp).holds
               and theta.ed_witness() is None
               and theta.su_witness() is None)
        concl = check_diamond(R, S, lam, lamp).holds
    elif name == "span-diamond-bijection":
        theta = restrict(product(lam, lamp), R, S)
        hyp = (lam.is_lbijection() and lamp.is_lbijection()
               and check_diamond(R, S, lam, lamp).holds)
        concl = theta.is_lbijection()
    elif name == "bijection-iff-diamond":
        theta = restrict(product(lam, lamp), R, S)
        hyp = lam.is_lbijection() and lamp.is_lbijection()
        concl = (check_diamond(R, S, lam, lamp).holds
                 == theta.is_lbijection())
    else:
        raise KeyError("unknown statement %r" % name)
    return hyp, concl


def sample_instance(name, rng, bound, G):
    'one random structure with random tables into G'
    def rset(tag, lo=0):
        n = rng.randrange(lo, bound + 1)
        return tuple("%s%d" % (tag, i) for i in range(n))

    def rtab(X, Y):
        els = list(G.elements())
        return LRel.from_fn(X, Y, G,
                            lambda x, y: els[rng.randrange(len(els))])

    def rfun(A, B):
        return {a: B[rng.randrange(len(B))] for a in A}

    inst = {"G": G}
    X, Y = rset("x"), rset("y")
    if name in ("diamond-to-triangle", "triangle-to-diamond"):
        Xp, Yp = rset("u", lo=1 if X else 0), rset("v", lo=1 if Y else 0)
        inst["lam"] = rtab(X, Y)
        inst["lamp"] = rtab(Xp, Yp)
        inst["f"] = rfun(X, Xp)
        inst["g"] = rfun(Y, Yp)
        inst["R"] = inst["S"] = None
    else:
        Xp, Yp = rset("u"), rset("v")
        inst["lam"] = rtab(X, Y)
        inst["lamp"] = rtab(Xp, Yp)
        if name in ("span-diamond-bijection", "bijection-iff-diamond"):
            rp = [p for p in itertools.product(X, Xp) if rng.random() < 0.5]
            sp = [p for p in itertools.product(Y, Yp) if rng.random() < 0.5]
            inst["R"] = Span.from_relation(rp, X, Xp)
            inst["S"] = Span.from_relation(sp, Y, Yp)
        else:
            Ra, Sa = rset("r"), rset("s")
            inst["R"] = Span(Ra, rfun(Ra, X), rfun(Ra, Xp), X, Xp) \
                if not (Ra and not (X and Xp)) else Span((), {}, {}, X, Xp)
            inst["S"] = Span(Sa, rfun(Sa, Y), rfun(Sa, Yp), Y, Yp) \
                if not (Sa and not (Y and Yp)) else Span((), {}, {}, Y, Yp)
            inst["theta"] = rtab(inst["R"].apex, inst["S"].apex)
    return inst


def verify_proposition(name, bound=2, mode="exhaustive", target=None,
                       seed=0, samples=200):
    """Sweep one registered statement for counterexamples.

    exhaustive mode enumerates every 2 valued instance up to the bound;
    product mode transfers the verdict to a product of copies of 2 (a
    table into a product satisfies an equation exactly when each
    component does, so the 2 valued sweep already decides it); sample
    mode draws seeded random instances into the given frame and
    evaluates the statement with the plain checkers.
    """
    if name not in _SWEEPS:
        raise KeyError("unknown statement %r; have %s"
                       % (name, ", ".join(PROPOSITIONS)))
    if mode == "exhaustive":
        structures, instances, hyps, cex = _SWEEPS[name](bound)
        return PropReport(name, mode, "2", structures, instances, hyps,
                          cex is None, cex)
    if mode == "product":
        rep = verify_proposition(name, bound)
        label = "2^%d" % (target if isinstance(target, int) else 2)
        return PropReport(name, mode, label, rep.structures, rep.instances,
                          rep.hyp_count, rep.holds, rep.counterexample)
    if mode == "sample":
        rng = random.Random(seed)
        G = target if target is not None else PowerLattice((0, 1))
        hyps = 0
        cex = None
        for _ in range(samples):
            inst = sample_instance(name, rng, bound, G)
            hyp, concl = naive_check(name, inst)
            if hyp:
                hyps += 1
                if not concl:
                    cex = inst
                    break
        return PropReport(name, mode, repr(G), samples, samples, hyps,
                          cex is None, cex)
    raise ValueError("unknown mode %r" % mode)
