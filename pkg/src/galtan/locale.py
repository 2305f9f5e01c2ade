"""Finite frames presented by generators and relations.

Every frame element generated by finitely many generators is a join of
finite meets of generators, so a term is kept in join normal form: a set
of generator masks, read as the join over the masks of the meet of each
mask's generators.  A whole family of masks is packed into one big
integer (bit m set when the meet of mask m lies below the element) and
the relations act on such families by saturation.  Saturated families
are exactly the elements of the presented frame, ordered by inclusion,
with bitwise and as meet and saturated or as join.
"""

import re

import numpy as np

from .suplat import BudgetError, DenseMap, LatticeError, TableLattice

MATERIALIZE_BUDGET = 7581

TOP = frozenset([0])    # the empty meet
BOT = frozenset()       # the empty join


class ParseError(ValueError):
    pass


# --------------------------------------------------------------------------
# join normal form

def jnf_reduce(masks):
    'keep the minimal masks; a larger meet is absorbed by a smaller one'
    ms = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    keep = []
    for m in ms:
        if not any(m & k == k for k in keep):
            keep.append(m)
    return frozenset(keep)


def jnf_join(*parts):
    out = set()
    for p in parts:
        out |= p
    return jnf_reduce(out)


def jnf_meet(a, b):
    return jnf_reduce(x | y for x in a for y in b)


def jnf_eval(jnf, vmask):
    'truth value of a term under a generator valuation'
    return any(m & ~vmask == 0 for m in jnf)


def _tokens(s, gens):
    names = sorted(gens, key=len, reverse=True)
    pat = "|".join([re.escape(n) for n in names] + [r"[()&|01]", r"\S"])
    out = []
    for m in re.finditer(pat, s):
        out.append(m.group(0))
    return out


def parse_term(s, gens):
    'parse "a & (b | 0)" into join normal form over the named generators'
    pos = {g: i for i, g in enumerate(gens)}
    toks = _tokens(s, gens)

    def atom(i):
        if i >= len(toks):
            raise ParseError("unexpected end of %r" % s)
        t = toks[i]
        if t == "(":
            val, i = expr(i + 1)
            if i >= len(toks) or toks[i] != ")":
                raise ParseError("unclosed paren in %r" % s)
            return val, i + 1
        if t in pos:
            return frozenset([1 << pos[t]]), i + 1
        if t == "0":
            return BOT, i + 1
        if t == "1":
            return TOP, i + 1
        raise ParseError("unknown name %r in %r" % (t, s))

    def factor(i):
        val, i = atom(i)
        while i < len(toks) and toks[i] == "&":
            rhs, i = atom(i + 1)
            val = jnf_meet(val, rhs)
        return val, i

    def expr(i):
        val, i = factor(i)
        while i < len(toks) and toks[i] == "|":
            rhs, i = factor(i + 1)
            val = jnf_join(val, rhs)
        return val, i

    val, i = expr(0)
    if i != len(toks):
        raise ParseError("trailing %r in %r" % (toks[i], s))
    return val


def show_term(jnf, gens):
    'render a join normal form with the given generator names'
    if not jnf:
        return "0"
    if 0 in jnf:
        return "1"
    parts = []
    for m in sorted(jnf, key=lambda m: (bin(m).count("1"), m)):
        names = [gens[i] for i in range(len(gens)) if m >> i & 1]
        parts.append(" & ".join(names))
    return " | ".join(parts)


# --------------------------------------------------------------------------
# presentations

class Presentation:
    'generator names together with equations between terms'

    def __init__(self, gens, relations=()):
        self.gens = tuple(gens)
        if len(set(self.gens)) != len(self.gens):
            raise LatticeError("duplicate generator name")
        self.relations = []
        for lhs, rhs in relations:
            self.add(lhs, rhs)

    def add(self, lhs, rhs):
        'record the equation lhs = rhs; strings are parsed first'
        if isinstance(lhs, str):
            lhs = parse_term(lhs, self.gens)
        if isinstance(rhs, str):
            rhs = parse_term(rhs, self.gens)
        self.relations.append((jnf_reduce(lhs), jnf_reduce(rhs)))

    def add_leq(self, lhs, rhs):
        'record lhs <= rhs, that is lhs | rhs = rhs'
        if isinstance(lhs, str):
            lhs = parse_term(lhs, self.gens)
        if isinstance(rhs, str):
            rhs = parse_term(rhs, self.gens)
        self.relations.append((jnf_join(lhs, rhs), jnf_reduce(rhs)))

    def show(self, jnf):
        return show_term(jnf, self.gens)

    def __repr__(self):
        return "Presentation(%d gens, %d relations)" % (
            len(self.gens), len(self.relations))


class PresentedFrame:
    """The frame an equational presentation generates.

    Works lazily: an element is a saturated mask family packed into a
    big integer, and order, meet and join are bit operations plus
    saturation.  Nothing is enumerated until materialize is called.
    """

    def __init__(self, pres):
        if not isinstance(pres, Presentation):
            pres = Presentation(pres)
        self.pres = pres
        self.gens = pres.gens
        self.n = len(pres.gens)
        if self.n > 16:
            raise BudgetError("%d generators need %d core bits"
                              % (self.n, 1 << self.n))
        self.ncore = 1 << self.n
        self.full = (1 << self.ncore) - 1
        # pat[i]: core positions whose mask has generator i unset
        self.pat = []
        for i in range(self.n):
            block = (1 << (1 << i)) - 1
            p = 0
            for off in range(0, self.ncore, 2 << i):
                p |= block << off
            self.pat.append(p)
        # every equation splits into one rule per disjunct on each side
        self.rules = []
        for lhs, rhs in pres.relations:
            for w in lhs:
                self.rules.append((w, tuple(rhs)))
            for w in rhs:
                self.rules.append((w, tuple(lhs)))
        self._values = {}
        self._subsets = {}
        self.top = self.full
        self.bottom = self.saturate(0)

    def __repr__(self):
        return "PresentedFrame(%d gens, %d rules)" % (self.n, len(self.rules))

    def up_close(self, D):
        for i in range(self.n):
            D |= (D & self.pat[i]) << (1 << i)
        return D

    def _shrink(self, D, w):
        # bit c of the result says c | w is in D
        i = 0
        while w:
            if w & 1:
                D = ((D >> (1 << i)) & self.pat[i]) | (D & ~self.pat[i])
            w >>= 1
            i += 1
        return D

    def _expand(self, C, w):
        # image of C under c -> c | w
        i = 0
        while w:
            if w & 1:
                C = ((C & self.pat[i]) << (1 << i)) | (C & ~self.pat[i])
            w >>= 1
            i += 1
        return C

    def saturate(self, D):
        'close a mask family under up closure and the relation rules'
        D = self.up_close(D)
        changed = True
        while changed:
            changed = False
            for w, targets in self.rules:
                C = self.full
                for m in targets:
                    C &= self._shrink(D, m)
                    if not C:
                        break
                add = self._expand(C, w) & ~D
                if add:
                    D |= add
                    changed = True
        return D

    def value(self, term):
        'the saturated family of a term (string or join normal form)'
        if isinstance(term, str):
            term = parse_term(term, self.gens)
        term = jnf_reduce(term)
        got = self._values.get(term)
        if got is None:
            D = 0
            for m in term:
                D |= 1 << m
            got = self._values[term] = self.saturate(D)
        return got

    def gen(self, i):
        if isinstance(i, str):
            i = self.gens.index(i)
        return self.value(frozenset([1 << i]))

    def leq(self, D, E):
        return D & ~E == 0

    def equal(self, t1, t2):
        return self.value(t1) == self.value(t2)

    def join_values(self, ds):
        out = 0
        for d in ds:
            out |= d
        return self.saturate(out)

    def meet_values(self, ds):
        out = self.full
        for d in ds:
            out &= d
        return out

    def describe(self, D):
        'name a saturated family by its minimal masks'
        mins = []
        m = 0
        while D >> m:
            if D >> m & 1:
                # walk the proper submasks of m; the empty mask has none
                hit = False
                s = (m - 1) & m
                while m:
                    if D >> s & 1:
                        hit = True
                        break
                    if s == 0:
                        break
                    s = (s - 1) & m
                if not hit:
                    mins.append(m)
            m += 1
        return show_term(frozenset(mins), self.gens)

    def _subset_bits(self, vmask):
        'bit m set when mask m is contained in the valuation'
        got = self._subsets.get(vmask)
        if got is None:
            S = 1
            i = 0
            while vmask >> i:
                if vmask >> i & 1:
                    S |= S << (1 << i)
                i += 1
            got = self._subsets[vmask] = S
        return got

    def eval_at(self, D, vmask):
        'the two valued image of an element under a generator valuation'
        return 1 if D & self._subset_bits(vmask) else 0

    def point_ok(self, vmask):
        return all(jnf_eval(lhs, vmask) == jnf_eval(rhs, vmask)
                   for lhs, rhs in self.pres.relations)

    def points(self):
        'all valuations of the generators satisfying the relations'
        return [v for v in range(1 << self.n) if self.point_ok(v)]

    def materialize(self, budget=MATERIALIZE_BUDGET):
        'enumerate every element by closing the basic meets under joins'
        seeds = sorted({self.value(frozenset([m]))
                        for m in range(self.ncore)})
        found = set(seeds)
        found.add(self.bottom)
        frontier = sorted(found)
        while frontier:
            fresh = []
            for d in frontier:
                for s in seeds:
                    j = d | s
                    if j in found:
                        continue
                    j = self.saturate(j)
                    if j not in found:
                        found.add(j)
                        fresh.append(j)
                        if len(found) > budget:
                            raise BudgetError(
                                "frame exceeds %d elements" % budget)
            frontier = fresh
        return ConcreteFrame(self, sorted(found))


class ConcreteFrame(TableLattice):
    'a presented frame with every element enumerated'

    def __init__(self, pf, values):
        self.presented = pf
        self.values = list(values)
        self._pos = {v: i for i, v in enumerate(self.values)}
        arr = np.array(self.values, dtype=object)
        leq = (arr[:, None] & ~arr[None, :]) == 0
        labels = [pf.describe(v) for v in self.values]
        TableLattice.__init__(self, labels, leq.astype(bool),
                              budget=max(len(values) + 1, 1 << 16))

    def element_of(self, term):
        'the element id of a term, a saturated family, or a generator name'
        if isinstance(term, int):
            v = term
        else:
            v = self.presented.value(term)
        return self._pos[v]

    def value_of(self, a):
        return self.values[a]

    def points(self):
        return self.presented.points()


# --------------------------------------------------------------------------
# construction helpers and checks

def free_frame(n, names=None):
    'the frame on n generators with no relations'
    if names is None:
        names = ["g%d" % i for i in range(n)] if n > 3 else list("xyz")[:n]
    return PresentedFrame(Presentation(names))


def present(gens, equations=()):
    'frame from generator names and "lhs = rhs" equation strings'
    pres = Presentation(gens)
    for line in equations:
        if "=" not in line:
            raise ParseError("equation %r has no =" % line)
        lhs, rhs = line.split("=", 1)
        pres.add(lhs, rhs)
    return PresentedFrame(pres)


def morphism_violation(pres, target, images):
    """First relation an assignment of generator images breaks, or None.

    images maps each generator index to an element of the target
    lattice; a relation holds when both sides evaluate to the same
    element under join of meets.
    """
    def ev(jnf):
        return target.join(
            target.meet(images[i] for i in range(len(pres.gens))
                        if m >> i & 1)
            for m in jnf)
    for k, (lhs, rhs) in enumerate(pres.relations):
        lv, rv = ev(lhs), ev(rhs)
        if lv != rv:
            return (k, pres.show(lhs), pres.show(rhs),
                    target.label(lv), target.label(rv))
    return None


def frame_morphism(src, dst, images):
    'the linear map a generator assignment induces, if the relations hold'
    pf = src.presented
    bad = morphism_violation(pf.pres, dst, images)
    if bad is not None:
        raise LatticeError(
            "images break relation %d: %s = %s maps to %s vs %s" % bad)

    def ev(a):
        D = src.value_of(a)
        out = dst.bottom
        m = 0
        while D >> m:
            if D >> m & 1:
                out = dst.join2(out, dst.meet(
                    images[i] for i in range(pf.n) if m >> i & 1))
            m += 1
        return out
    table = [ev(a) for a in src.elements()]
    f = DenseMap(src, dst, table, check=False)
    bad = f.linearity_violation()
    assert bad is None, bad
    return f


def prime_elements(lat):
    'elements strictly below the top that no meet from above reaches'
    out = []
    for p in lat.elements():
        if p == lat.top:
            continue
        above = [a for a in lat.elements() if lat.lt(p, a)]
        if lat.meet(above) != p:
            out.append(p)
    return out


def is_frame(lat):
    return lat.frame_violation() is None


def locale_algebra_violation(lat):
    """Check the meet monoid of a lattice lives in the join world.

    Returns the first failure among: unit is the top, idempotency,
    commutativity, associativity, join preservation of the meet in each
    argument including the empty join.
    """
    els = list(lat.elements())
    for a in els:
        if lat.meet2(a, lat.top) != a:
            return ("unit", a)
        if lat.meet2(a, a) != a:
            return ("idempotent", a)
        if lat.meet2(a, lat.bottom) != lat.bottom:
            return ("strict", a)
    for a in els:
        for b in els:
            if lat.meet2(a, b) != lat.meet2(b, a):
                return ("commutative", a, b)
    for a in els:
        for b in els:
            for c in els:
                if lat.meet2(lat.meet2(a, b), c) != lat.meet2(a, lat.meet2(b, c)):
                    return ("associative", a, b, c)
                if lat.meet2(a, lat.join2(b, c)) != \
                        lat.join2(lat.meet2(a, b), lat.meet2(a, c)):
                    return ("bilinear", a, b, c)
    return None


def is_locale_algebra(lat):
    return locale_algebra_violation(lat) is None
