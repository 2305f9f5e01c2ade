"""Finite sup-lattices and their linear algebra.

A carrier is a finite complete lattice; elements are integer ids local to the
carrier.  Linear maps preserve all joins (including the empty one).  Tensor
products are lattices of multi-ideals: subsets of a cell grid, down-closed and
closed under coordinatewise joins.  Everything is exact; there is no float
anywhere in this module.
"""

from __future__ import annotations

import itertools
from functools import reduce

import numpy as np

DEFAULT_BUDGET = 1 << 16    # hard cap on lattice element count
DENSE_BOUND = 1 << 12       # largest size for which dense tables get built


class BudgetError(RuntimeError):
    'a construction would exceed its configured size bound'


class LatticeError(ValueError):
    'the input data does not describe a finite complete lattice'


class Lattice:
    """Base class: finite complete lattice, elements addressed by int ids."""

    size = 0

    def leq(self, a, b):
        raise NotImplementedError

    def join2(self, a, b):
        raise NotImplementedError

    def meet2(self, a, b):
        raise NotImplementedError

    @property
    def bottom(self):
        raise NotImplementedError

    @property
    def top(self):
        raise NotImplementedError

    def join(self, elems):
        'join of an arbitrary finite family, empty family gives bottom'
        return reduce(self.join2, elems, self.bottom)

    def meet(self, elems):
        return reduce(self.meet2, elems, self.top)

    def elements(self):
        if self.size > DEFAULT_BUDGET:
            raise BudgetError("cannot enumerate %s elements" % self.size)
        return range(self.size)

    def label(self, a):
        return a

    def index(self, label):
        raise NotImplementedError

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def join_irreducibles(self):
        'elements that are not the join of the elements strictly below them'
        out = []
        for a in self.elements():
            below = [b for b in self.elements() if self.lt(b, a)]
            if self.join(below) != a:
                out.append(a)
        return out

    def atoms(self):
        bot = self.bottom
        return [a for a in self.elements() if a != bot
                and all(not self.lt(b, a) for b in self.elements()
                        if b != bot)]

    def frame_violation(self):
        """Binary-meet distributivity witness (a, b, c) or None.

        Finite check: a/\\(b\\/c) = (a/\\b)\\/(a/\\c) over all triples implies
        distribution of meets over arbitrary joins by induction, and meets
        with bottom are automatic.
        """
        for a in self.elements():
            for b in self.elements():
                ab = self.meet2(a, b)
                for c in self.elements():
                    lhs = self.meet2(a, self.join2(b, c))
                    rhs = self.join2(ab, self.meet2(a, c))
                    if lhs != rhs:
                        return (a, b, c)
        return None

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.elements())


def _transitive_closure(m):
    m = m.copy()
    while True:
        m2 = m | (m.astype(np.uint8) @ m.astype(np.uint8) > 0)
        if (m2 == m).all():
            return m
        m = m2


class TableLattice(Lattice):
    """Explicit lattice: element list, order matrix, join and meet tables.

    Bottom and top are computed from the order, never assumed.  Construction
    refuses (naming a witness pair) any poset in which some pair has no least
    upper bound or no greatest lower bound.
    """

    def __init__(self, labels, leq, budget=DEFAULT_BUDGET):
        labels = list(labels)
        n = len(labels)
        if n == 0:
            raise LatticeError("a complete lattice is nonempty")
        if n > budget:
            raise BudgetError("lattice size %d exceeds budget %d" % (n, budget))
        leq = np.asarray(leq, dtype=bool)
        assert leq.shape == (n, n)
        if not leq.diagonal().all():
            raise LatticeError("order is not reflexive")
        bad = leq & leq.T & ~np.eye(n, dtype=bool)
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            raise LatticeError("order is not antisymmetric at %r, %r"
                               % (labels[i], labels[j]))
        closed = (leq.astype(np.uint8) @ leq.astype(np.uint8)) > 0
        if (closed & ~leq).any():
            i, j = map(int, np.argwhere(closed & ~leq)[0])
            raise LatticeError("order is not transitive at %r, %r"
                               % (labels[i], labels[j]))
        self.size = n
        self.labels = labels
        self._index = {}
        for i, lab in enumerate(labels):
            if lab in self._index:
                raise LatticeError("duplicate label %r" % (lab,))
            self._index[lab] = i
        self._leq = leq
        self._leq.setflags(write=False)
        self._join = self._bound_table(leq, least=True)
        self._meet = self._bound_table(leq.T, least=False)
        bots = np.flatnonzero(leq.all(axis=1))
        tops = np.flatnonzero(leq.all(axis=0))
        assert len(bots) == 1 and len(tops) == 1
        self._bottom = int(bots[0])
        self._top = int(tops[0])

    def _bound_table(self, leq, least):
        # least=True: least upper bounds from `i <= j` matrix leq.
        # The other call passes the transpose and computes greatest lowers.
        n = self.size
        weight = leq.sum(axis=0)    # how many elements sit below k
        order = np.argsort(weight, kind="stable")
        table = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            common = leq[i][None, :] & leq     # common[j] = upper bounds of i,j
            if not common.any(axis=1).all():
                j = int(np.flatnonzero(~common.any(axis=1))[0])
                raise LatticeError("pair has no %s: %r, %r"
                                   % ("join" if least else "meet",
                                      self.labels[i], self.labels[j]))
            # first common bound in weight order is the only candidate
            cand = order[common[:, order].argmax(axis=1)]
            # the candidate must actually bound every common bound
            ok = (leq[cand] | ~common).all(axis=1)
            if not ok.all():
                j = int(np.flatnonzero(~ok)[0])
                raise LatticeError("pair has no %s: %r, %r"
                                   % ("join" if least else "meet",
                                      self.labels[i], self.labels[j]))
            table[i] = cand
        table.setflags(write=False)
        return table

    @classmethod
    def from_order_pairs(cls, labels, pairs, budget=DEFAULT_BUDGET):
        'build from a list of (lo, hi) label pairs; closure is taken'
        labels = list(labels)
        idx = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        leq = np.eye(n, dtype=bool)
        for lo, hi in pairs:
            if lo not in idx or hi not in idx:
                raise LatticeError("order pair names unknown element %r"
                                   % ((lo, hi),))
            leq[idx[lo], idx[hi]] = True
        return cls(labels, _transitive_closure(leq), budget=budget)

    def leq(self, a, b):
        return bool(self._leq[a, b])

    def join2(self, a, b):
        return int(self._join[a, b])

    def meet2(self, a, b):
        return int(self._meet[a, b])

    @property
    def bottom(self):
        return self._bottom

    @property
    def top(self):
        return self._top

    def label(self, a):
        return self.labels[a]

    def index(self, label):
        return self._index[label]

    def __repr__(self):
        return "TableLattice(%d elements)" % self.size


class PowerLattice(Lattice):
    """Lattice of all subsets of a finite base set.

    Element ids are bitmasks over the base, so order, join and meet are
    submask tests and bitwise operations; no tables are stored.  This is the
    one representation allowed to grow past the dense bound, since every
    operation is formula-backed.
    """

    def __init__(self, base):
        self.base = tuple(base)
        assert len(set(self.base)) == len(self.base)
        self.width = len(self.base)
        self.size = 1 << self.width
        self._pos = {x: i for i, x in enumerate(self.base)}

    def leq(self, a, b):
        return a & ~b == 0

    def join2(self, a, b):
        return a | b

    def meet2(self, a, b):
        return a & b

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return self.size - 1

    def join(self, elems):
        out = 0
        for e in elems:
            out |= e
        return out

    def meet(self, elems):
        out = self.top
        for e in elems:
            out &= e
        return out

    def singleton(self, x):
        return 1 << self._pos[x]

    def label(self, a):
        return frozenset(self.base[i] for i in range(self.width)
                         if a >> i & 1)

    def index(self, label):
        m = 0
        for x in label:
            m |= self.singleton(x)
        return m

    def members(self, a):
        return [self.base[i] for i in range(self.width) if a >> i & 1]

    def join_irreducibles(self):
        return [1 << i for i in range(self.width)]

    def table(self, budget=DENSE_BOUND):
        'materialize as an explicit TableLattice (small bases only)'
        if self.size > budget:
            raise BudgetError("power lattice too large to tabulate")
        masks = np.arange(self.size)
        leq = (masks[:, None] & ~masks[None, :]) == 0
        return TableLattice([self.label(a) for a in masks], leq)

    def __repr__(self):
        return "PowerLattice(%r)" % (self.base,)


TWO = PowerLattice(("*",))     # the unit lattice 0 < 1


def power_lattice(xs):
    return PowerLattice(xs)


# ---------------------------------------------------------------------------
# linear maps

class LinearMap:
    'join-preserving map between lattices'

    src = None
    dst = None

    def __call__(self, a):
        raise NotImplementedError

    def then(self, other):
        'self followed by other'
        assert _same_lattice(self.dst, other.src), "composition mismatch"
        return ComposedMap(self, other)

    def table_on(self, elems):
        return tuple(self(a) for a in elems)

    def equals(self, other):
        'extensional equality, checked on every source element'
        if not _same_lattice(self.src, other.src):
            return False
        if not _same_lattice(self.dst, other.dst):
            return False
        return all(self(a) == other(a) for a in self.src.elements())


def _same_lattice(a, b):
    if a is b:
        return True
    if isinstance(a, PowerLattice) and isinstance(b, PowerLattice):
        return a.base == b.base
    return False


class DenseMap(LinearMap):
    'linear map given by its full value table'

    def __init__(self, src, dst, table, check=True):
        self.src = src
        self.dst = dst
        self.table = tuple(table)
        assert len(self.table) == src.size
        if check:
            bad = self.linearity_violation()
            if bad is not None:
                raise LatticeError("map does not preserve joins at %r" % (bad,))

    def linearity_violation(self):
        t = self.table
        if t[self.src.bottom] != self.dst.bottom:
            return (self.src.bottom,)
        for a in self.src.elements():
            for b in self.src.elements():
                if a < b:
                    if t[self.src.join2(a, b)] != self.dst.join2(t[a], t[b]):
                        return (a, b)
        return None

    @classmethod
    def from_fn(cls, src, dst, fn, check=True):
        return cls(src, dst, [fn(a) for a in src.elements()], check=check)

    def __call__(self, a):
        return self.table[a]

    def __repr__(self):
        return "DenseMap(%d -> %d)" % (self.src.size, self.dst.size)


class RelMap(LinearMap):
    """Linear map between power lattices, stored as base-point fibers.

    fibers[i] is the image mask of the i-th base singleton; the map sends a
    subset to the union of the fibers of its members.  This is the lattice
    side of a relation between the two bases.
    """

    def __init__(self, src, dst, fibers):
        assert isinstance(src, PowerLattice) and isinstance(dst, PowerLattice)
        self.src = src
        self.dst = dst
        self.fibers = tuple(fibers)
        assert len(self.fibers) == src.width

    @classmethod
    def from_pairs(cls, src, dst, pairs):
        fibers = [0] * src.width
        for x, y in pairs:
            fibers[src._pos[x]] |= dst.singleton(y)
        return cls(src, dst, fibers)

    @classmethod
    def from_fn(cls, src, dst, fn):
        'graph of a base function, as a linear map'
        return cls.from_pairs(src, dst, [(x, fn(x)) for x in src.base])

    def pairs(self):
        out = []
        for i, x in enumerate(self.src.base):
            m = self.fibers[i]
            for j, y in enumerate(self.dst.base):
                if m >> j & 1:
                    out.append((x, y))
        return frozenset(out)

    def op(self):
        'transpose relation, a linear map the other way'
        fibers = [0] * self.dst.width
        for i in range(self.src.width):
            m = self.fibers[i]
            for j in range(self.dst.width):
                if m >> j & 1:
                    fibers[j] |= 1 << i
        return RelMap(self.dst, self.src, fibers)

    def __call__(self, a):
        out = 0
        i = 0
        while a:
            if a & 1:
                out |= self.fibers[i]
            a >>= 1
            i += 1
        return out

    def then(self, other):
        if isinstance(other, RelMap) and _same_lattice(self.dst, other.src):
            return RelMap(self.src, other.dst,
                          [other(m) for m in self.fibers])
        return LinearMap.then(self, other)

    def __repr__(self):
        return "RelMap(%r -> %r)" % (self.src.base, self.dst.base)


class ComposedMap(LinearMap):
    def __init__(self, first, second):
        self.first = first
        self.second = second
        self.src = first.src
        self.dst = second.dst

    def __call__(self, a):
        return self.second(self.first(a))


def identity_map(lat):
    if isinstance(lat, PowerLattice):
        return RelMap(lat, lat, [1 << i for i in range(lat.width)])
    return DenseMap(lat, lat, range(lat.size), check=False)


def relation_to_linmap(pairs, X, Y):
    """Relation R <= X x Y, as the linear map lX -> lY, U |-> R[U]."""
    lX, lY = PowerLattice(X), PowerLattice(Y)
    pairs = frozenset(pairs)
    for x, y in pairs:
        assert x in lX._pos and y in lY._pos, "relation pair off base"
    return RelMap.from_pairs(lX, lY, pairs)


def linmap_to_relation(f):
    'inverse of relation_to_linmap: read the relation off singleton images'
    assert isinstance(f.src, PowerLattice) and isinstance(f.dst, PowerLattice)
    out = []
    for x in f.src.base:
        img = f(f.src.singleton(x))
        for y in f.dst.members(img):
            out.append((x, y))
    return frozenset(out)


def opposite(pairs):
    return frozenset((y, x) for x, y in pairs)


# ---------------------------------------------------------------------------
# tensor products

class _JoinClosures:
    """Memoized binary-join closures of element subsets of one lattice.

    Subsets are bitmasks over element ids; the closure of s u {v} is
    cl(s) u {v} u {v \\/ x : x in cl(s)}, which is again join-closed.
    """

    def __init__(self, lat):
        self.lat = lat
        self.memo = {0: 0}

    def __getitem__(self, s):
        m = self.memo.get(s)
        if m is None:
            low = s & -s
            v = low.bit_length() - 1
            rest = self[s ^ low]
            m = rest | low
            rr = rest
            while rr:
                b = rr & -rr
                m |= 1 << self.lat.join2(v, b.bit_length() - 1)
                rr ^= b
            self.memo[s] = m
        return m


class IdealTensor(TableLattice):
    """Tensor product of finitely many lattices, as a lattice of multi-ideals.

    Cells are tuples of factor elements.  A multi-ideal is a cell set that is
    down-closed in the product order and closed under joins in each coordinate
    separately; the empty-family join is included, so every ideal contains all
    cells with a bottom coordinate.  Elements are enumerated as the join
    closure of the pure cells, which is complete because every ideal is the
    join of the pure tensors of its members.
    """

    def __init__(self, factors, budget=DEFAULT_BUDGET):
        factors = list(factors)
        assert len(factors) >= 2
        cells = list(itertools.product(*[range(f.size) for f in factors]))
        ncells = len(cells)
        if ncells > 4096:
            raise BudgetError("tensor grid with %d cells" % ncells)
        cell_pos = {c: i for i, c in enumerate(cells)}
        down = []
        for c in cells:
            m = 0
            for i, d in enumerate(cells):
                if all(f.leq(d[k], c[k]) for k, f in enumerate(factors)):
                    m |= 1 << i
            down.append(m)
        # per factor: subset join closures, memoized element-subset bitmasks
        jc_tabs = [_JoinClosures(f) for f in factors]
        # per axis line: bit positions of the line's cells, by factor element
        lines = []
        for ax in range(len(factors)):
            groups = {}
            for i, c in enumerate(cells):
                key = c[:ax] + c[ax + 1:]
                groups.setdefault(key, {})[c[ax]] = i
            for g in groups.values():
                positions = tuple(g[v] for v in range(factors[ax].size))
                lines.append((positions, jc_tabs[ax]))
        axes = 0
        for i, c in enumerate(cells):
            if any(c[k] == f.bottom for k, f in enumerate(factors)):
                axes |= 1 << i

        def close(mask):
            cur = 0
            pending = mask | axes    # bits not yet down-closed
            while pending:
                add = 0
                while pending:
                    low = pending & -pending
                    add |= down[low.bit_length() - 1]
                    pending ^= low
                cur |= add
                while True:
                    new = 0
                    for positions, jct in lines:
                        present = 0
                        for v, pos in enumerate(positions):
                            present |= ((cur >> pos) & 1) << v
                        extra = jct[present] & ~present
                        while extra:
                            lo = extra & -extra
                            new |= 1 << positions[lo.bit_length() - 1]
                            extra ^= lo
                    new &= ~cur
                    if not new:
                        break
                    pending |= new
                    cur |= new
            return cur

        bottom = close(0)
        pures = {}
        for i, c in enumerate(cells):
            pures[c] = close(axes | 1 << i)
        # joins of pure tensors of join-irreducibles reach every ideal,
        # since pure is bilinear and every element is a join of irreducibles
        gens = [pures[c] for c in
                itertools.product(*[f.join_irreducibles() for f in factors])]
        found = {bottom}
        frontier = [bottom]
        while frontier:
            cur = frontier.pop()
            for pm in gens:
                if pm & ~cur == 0:
                    continue
                nxt = close(cur | pm)
                if nxt not in found:
                    if len(found) >= budget:
                        raise BudgetError("tensor exceeds element budget")
                    found.add(nxt)
                    frontier.append(nxt)
        masks = sorted(found)
        rank = {m: i for i, m in enumerate(masks)}
        n = len(masks)
        arr = np.array(masks, dtype=object)
        leq = (arr[:, None] & ~arr[None, :]) == 0
        TableLattice.__init__(self, masks, leq.astype(bool), budget=budget)
        self.factors = factors
        self.cells = cells
        self._cell_pos = cell_pos
        self._pure = {c: rank[pures[c]] for c in cells}
        self._close = close

    def pure(self, *coords):
        'the pure tensor of the given factor elements'
        return self._pure[tuple(coords)]

    def cells_of(self, a):
        'the member cells of an ideal'
        m = self.labels[a]
        return [self.cells[i] for i in range(len(self.cells)) if m >> i & 1]

    def element_of_cells(self, cs):
        return self.join([self.pure(*c) for c in cs])

    def __repr__(self):
        return "IdealTensor(%s; %d elements)" % (
            "x".join(str(f.size) for f in self.factors), self.size)


def tensor(S, T, budget=DEFAULT_BUDGET):
    'binary tensor product as a multi-ideal lattice'
    return IdealTensor([S, T], budget=budget)


class PowerTensor(PowerLattice):
    """Tensor of power lattices in product-base form.

    The base is the cartesian product of the factor bases, and the pure
    tensor of subsets is their product.  Used as the fast representation
    wherever all factors are power lattices; tests check it against
    IdealTensor on small instances.
    """

    def __init__(self, factors):
        factors = list(factors)
        assert all(isinstance(f, PowerLattice) for f in factors)
        self.factors = factors
        PowerLattice.__init__(
            self, tuple(itertools.product(*[f.base for f in factors])))

    def pure(self, *masks):
        assert len(masks) == len(self.factors)
        out = 0
        for combo in itertools.product(
                *[f.members(m) for f, m in zip(self.factors, masks)]):
            out |= self.singleton(combo)
        return out

    def cells_of(self, a):
        'member cells as tuples of factor elements, here all singletons'
        return [tuple(f.singleton(x) for f, x in zip(self.factors, combo))
                for combo in self.members(a)]

    def __repr__(self):
        return "PowerTensor(%s)" % "x".join(str(f.width) for f in self.factors)


def tensor_power(*factors):
    return PowerTensor(factors)


def tensor_map(maps, src, dst):
    """The map f1 (x) ... (x) fk between tensors, from factor maps.

    Works cell by cell: a pure source cell goes to the pure tensor of the
    factor images, and a general ideal to the join of its member cells'
    images.  Linearity is inherited from the factors.
    """
    if isinstance(src, PowerTensor) and isinstance(dst, PowerTensor):
        fibers = []
        for combo in src.base:
            imgs = [f(fac.singleton(x))
                    for f, fac, x in zip(maps, src.factors, combo)]
            fibers.append(dst.pure(*imgs))
        return RelMap(src, dst, fibers)
    assert isinstance(src, IdealTensor) and isinstance(dst, IdealTensor)

    def fn(a):
        out = dst.bottom
        for c in src.cells_of(a):
            out = dst.join2(out, dst.pure(*[f(x) for f, x in zip(maps, c)]))
        return out
    return DenseMap.from_fn(src, dst, fn, check=False)


def symmetry(T_ST, T_TS):
    'the swap isomorphism between the two tensor orders'
    if isinstance(T_ST, PowerTensor):
        return RelMap(T_ST, T_TS,
                      [T_TS.singleton(tuple(reversed(c))) for c in T_ST.base])

    def fn(a):
        return T_TS.element_of_cells(
            [tuple(reversed(c)) for c in T_ST.cells_of(a)])
    return DenseMap.from_fn(T_ST, T_TS, fn, check=False)


# ---------------------------------------------------------------------------
# duality of power lattices

def duality_data(X):
    """The unit and counit exhibiting lX as its own dual.

    eta: TWO -> lX (x) lX sends 1 to the diagonal join of x (x) x.
    eps: lX (x) lX -> TWO sends a pure U (x) V to 1 iff U meets V.
    """
    lX = PowerLattice(X)
    TXX = PowerTensor([lX, lX])
    eta_img = TXX.join([TXX.pure(lX.singleton(x), lX.singleton(x))
                        for x in lX.base])
    eta = RelMap(TWO, TXX, [eta_img])
    fibers = []
    for (u, v) in TXX.base:
        fibers.append(1 if u == v else 0)
    eps = RelMap(TXX, TWO, fibers)
    return eta, eps


def triangle_maps(X):
    """The two triangle composites of the duality data, as maps lX -> lX.

    Both factor through the triple tensor lX (x) lX (x) lX, which for power
    lattices is the power lattice of the cubed base; the composites are
    written out on base points, so no large intermediate lattice is built.
    """
    lX = PowerLattice(X)
    eta, eps = duality_data(X)
    eta_pairs = [(u, v) for (u, v) in eta.dst.base
                 if eta(1) >> eta.dst._pos[(u, v)] & 1]

    def left(mask):
        # lX = 2 (x) lX --eta(x)id--> (lX lX) lX --assoc--> lX (lX lX) --id(x)eps--> lX
        out = 0
        for a in lX.members(mask):
            for (z1, z2) in eta_pairs:
                if z2 == a:
                    out |= lX.singleton(z1)
        return out

    def right(mask):
        # lX = lX (x) 2 --id(x)eta--> lX (lX lX) --assoc--> (lX lX) lX --eps(x)id--> lX
        out = 0
        for a in lX.members(mask):
            for (z1, z2) in eta_pairs:
                if a == z1:
                    out |= lX.singleton(z2)
        return out

    f = RelMap(lX, lX, [left(1 << i) for i in range(lX.width)])
    g = RelMap(lX, lX, [right(1 << i) for i in range(lX.width)])
    return f, g


def triangles_hold(X):
    f, g = triangle_maps(X)
    ident = identity_map(PowerLattice(X))
    return f.equals(ident) and g.equals(ident)


def dual_map(f):
    """Dual of a map between power lattices under self-duality.

    Computed through the duality data rather than by transposing, so tests
    can compare it with the transpose relation independently.
    """
    assert isinstance(f, RelMap)
    X, Y = f.src, f.dst
    eta_x, _ = duality_data(X.base)
    _, eps_y = duality_data(Y.base)
    fibers = []
    for j, y in enumerate(Y.base):
        out = 0
        for (z1, z2) in [(u, v) for (u, v) in eta_x.dst.base
                         if eta_x(1) >> eta_x.dst._pos[(u, v)] & 1]:
            img = f(X.singleton(z2))
            if img >> Y._pos[y] & 1:
                out |= X.singleton(z1)
        fibers.append(out)
    return RelMap(Y, X, fibers)


# ---------------------------------------------------------------------------
# homs and enumeration

def linear_maps(S, T, limit=None):
    """Enumerate all join-preserving maps S -> T.

    Values are free on the join-irreducibles and forced everywhere else;
    a candidate survives iff the forced extension preserves binary joins.
    """
    jis = S.join_irreducibles()
    below = {a: [j for j in jis if S.leq(j, a)] for a in S.elements()}
    count = 0
    for vals in itertools.product(T.elements(), repeat=len(jis)):
        assign = dict(zip(jis, vals))
        table = [T.join([assign[j] for j in below[a]]) for a in S.elements()]
        # an assignment that disagrees with its own forced table repeats a map
        if any(table[j] != assign[j] for j in jis):
            continue
        ok = True
        for a in S.elements():
            for b in S.elements():
                if a < b and table[S.join2(a, b)] != T.join2(table[a], table[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield DenseMap(S, T, table, check=False)
            count += 1
            if limit is not None and count >= limit:
                raise BudgetError("more than %d linear maps" % limit)


def hom_lattice(S, T, budget=DEFAULT_BUDGET):
    'the lattice of linear maps S -> T under pointwise order'
    maps = [f.table for f in linear_maps(S, T, limit=budget)]
    arr = np.array(maps, dtype=np.int64)
    tleq = np.zeros((T.size, T.size), dtype=bool)
    for a in T.elements():
        for b in T.elements():
            tleq[a, b] = T.leq(a, b)
    leq = tleq[arr[:, None, :], arr[None, :, :]].all(axis=2)
    return TableLattice(maps, leq, budget=budget)


def is_bilinear(fn, S, T, V):
    'check that fn: S x T -> V is linear in each slot'
    for t in T.elements():
        if fn(S.bottom, t) != V.bottom:
            return False
        for a in S.elements():
            for b in S.elements():
                if a < b and fn(S.join2(a, b), t) != V.join2(fn(a, t), fn(b, t)):
                    return False
    for s in S.elements():
        if fn(s, T.bottom) != V.bottom:
            return False
        for a in T.elements():
            for b in T.elements():
                if a < b and fn(s, T.join2(a, b)) != V.join2(fn(s, a), fn(s, b)):
                    return False
    return True


def universal_factor(fn, ten, V):
    """Factor a bilinear map through the tensor: the unique linear h with
    h(pure(s, t)) = fn(s, t).  Returns the DenseMap; raises if fn is not
    bilinear or if no linear factorization exists."""
    S, T = ten.factors
    if not is_bilinear(fn, S, T, V):
        raise LatticeError("map is not bilinear")

    def h(a):
        return V.join([fn(*c) for c in ten.cells_of(a)])
    out = DenseMap.from_fn(ten, V, h, check=True)
    for s in S.elements():
        for t in T.elements():
            assert out(ten.pure(s, t)) == fn(s, t)
    return out


def find_order_iso(A, B):
    """Search for an order isomorphism A -> B; None when there is none.

    Elements are grouped by down set and up set sizes, then matched by
    backtracking.  Meant for small lattices; an order iso of lattices
    preserves joins and meets automatically.
    """
    if A.size != B.size:
        return None

    def profile(lat):
        down = [[lat.leq(b, a) for b in lat.elements()] for a in lat.elements()]
        up = [[lat.leq(a, b) for b in lat.elements()] for a in lat.elements()]
        return down, up, [(sum(d), sum(u)) for d, u in zip(down, up)]

    downA, upA, sigA = profile(A)
    downB, upB, sigB = profile(B)
    if sorted(sigA) != sorted(sigB):
        return None
    cands = [[b for b in B.elements() if sigB[b] == sigA[a]]
             for a in A.elements()]
    order = sorted(A.elements(), key=lambda a: len(cands[a]))
    img = [None] * A.size
    used = [False] * B.size

    def place(k):
        if k == len(order):
            return True
        a = order[k]
        for b in cands[a]:
            if used[b]:
                continue
            ok = True
            for a2 in order[:k]:
                if downA[a2][a] != downB[img[a2]][b] or \
                        downA[a][a2] != downB[b][img[a2]]:
                    ok = False
                    break
            if ok:
                img[a] = b
                used[b] = True
                if place(k + 1):
                    return True
                img[a] = None
                used[b] = False
        return False

    if place(0):
        return list(img)
    return None
