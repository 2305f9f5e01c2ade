"""Command line front end over the workbench.

Subcommands load line oriented instance files, run the registered
verification suites, build the point side and the relation side of the
correspondence and compare them, and replay diagram derivations.  Each
run prints a report, text or json lines, on stdout and exits 0 exactly
when every check in the report passed.  Reports carry no timing or
environment data, so a fixed input, seed and format always render the
same bytes; wall times are kept on the in memory rows only.

Exit codes: 0 every check passed, 1 some check failed, 2 unknown name
or bad usage, 3 malformed file, 4 work budget exceeded.
"""

import argparse
import json
import os
import re
import sys
import time
from collections import namedtuple

from . import elevator
from .locale import ParseError as TermError
from .locale import free_frame, locale_algebra_violation, present
from .locgroup import (Action, FiniteGroup, discrete_localic_group,
                       hopf_violation, is_action, is_hopf_iso)
from .lrel import PROPOSITIONS, verify_proposition
from .suplat import (DEFAULT_BUDGET, BudgetError, LatticeError, PowerLattice,
                     TableLattice)
from .locale import frame_morphism
from .tannaka import (ASet, FiniteMonoid, FinSite, _compose_table, check_iso,
                      cyclic_site, functor_route_witness,
                      generator_order_check, group_site, lifting_check,
                      nonatomic_site, point_aut, point_group, rel_coend,
                      terminal_site)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_MALFORMED = 3
EXIT_BUDGET = 4


class UnknownName(ValueError):
    'a suite, group, or site name outside the registered supply'


class InstanceError(ValueError):
    'an instance file that does not parse or validate'

    def __init__(self, path, line, msg):
        self.path, self.line, self.msg = path, line, msg
        super().__init__("%s:%d: %s" % (path, line, msg))


class Budget:
    """A cap on counted work units.

    Subcommands charge coarse unit counts (instances swept, table cells
    compared, frame elements built) as their checks complete; the first
    charge that pushes the tally past the cap aborts the run.
    """

    def __init__(self, limit=None):
        self.limit = limit
        self.spent = 0

    def charge(self, n, what):
        self.spent += n
        if self.limit is not None and self.spent > self.limit:
            raise BudgetError("%s brings the work to %d units, over the "
                              "cap %d" % (what, self.spent, self.limit))


# --------------------------------------------------------------------------
# reports

Check = namedtuple("Check", "name verdict detail wall")


def _show(x):
    'render witnesses without set iteration order leaking into the bytes'
    if isinstance(x, (set, frozenset)):
        return "{%s}" % ", ".join(sorted(_show(v) for v in x))
    if isinstance(x, tuple):
        return "(%s)" % ", ".join(_show(v) for v in x)
    if isinstance(x, list):
        return "[%s]" % ", ".join(_show(v) for v in x)
    if isinstance(x, dict):
        return "{%s}" % ", ".join("%s: %s" % (_show(k), _show(v))
                                  for k, v in sorted(x.items(), key=repr))
    return str(x)


class Report:
    'ordered check rows; declaration order, never completion order'

    def __init__(self):
        self.rows = []
        self._last = time.perf_counter()

    def add(self, name, ok, detail=""):
        now = time.perf_counter()
        self.rows.append(Check(name, "pass" if ok else "fail",
                               _show(detail) if detail != "" else "",
                               now - self._last))
        self._last = now

    @property
    def passed(self):
        return all(r.verdict == "pass" for r in self.rows)

    def render(self, fmt="text"):
        failed = sum(r.verdict == "fail" for r in self.rows)
        if fmt == "json-lines":
            out = [json.dumps({"check": r.name, "verdict": r.verdict,
                               "detail": r.detail}, sort_keys=True)
                   for r in self.rows]
            out.append(json.dumps({"checks": len(self.rows),
                                   "failed": failed}, sort_keys=True))
        else:
            out = []
            for r in self.rows:
                tail = "  " + r.detail if r.detail else ""
                out.append("%s: %s%s" % (r.name, r.verdict, tail))
            out.append("%d checks, %d failed" % (len(self.rows), failed))
        return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# the instance file format
#
# One declaration per line or block.  A line starting with -- is a
# comment.  One line forms read "kind name : ...", block forms open
# with "kind name" and close with "end".  Points and element names are
# whitespace free tokens; a token spelled like an integer is one.

_INT = re.compile(r"-?\d+\Z")
_KINDS = ("set", "lattice", "group", "monoid", "action", "site", "present")


def _atom(tok):
    return int(tok) if _INT.match(tok) else tok


def _atoms(toks):
    return tuple(_atom(t) for t in toks)


class InstanceFile:
    """Declarations of one file: order, built objects, canonical content.

    Namespaces are per kind, so a group and a site may share a name;
    references inside blocks are always kind qualified.  content maps
    each declaration to a canonical payload used for round trips.
    """

    def __init__(self, path):
        self.path = path
        self.decls = []
        self.objects = {}
        self.content = {}

    def ref(self, kind, name, where):
        if (kind, name) not in self.objects:
            raise LatticeError("%s references the %s %r before it is "
                               "declared" % (where, kind, name))
        return self.objects[(kind, name)]

    def of_kind(self, kind):
        return [(n, self.objects[(k, n)]) for (k, n) in self.decls
                if k == kind]

    def items(self):
        return [(k, n, self.objects[(k, n)]) for (k, n) in self.decls]


def _rows_by(body, head):
    return [(ln, toks) for (ln, toks) in body if toks[0] == head]


def _check_heads(body, allowed, kind):
    for ln, toks in body:
        if toks[0] not in allowed:
            raise LatticeError("line %d: %r is not a %s line; expected %s"
                               % (ln, toks[0], kind,
                                  ", ".join(sorted(allowed))))


def _build_set(inst, name, inline, body, budget):
    if inline is None:
        raise LatticeError("set uses the one line form: set %s : points"
                           % name)
    pts = _atoms(inline)
    if len(set(pts)) != len(pts):
        raise LatticeError("repeated point")
    return pts, ("set", pts)


def _order_content(lat):
    pairs = frozenset((lat.labels[i], lat.labels[j])
                      for i in range(lat.size) for j in range(lat.size)
                      if lat.leq(i, j))
    return ("table", tuple(lat.labels), pairs)


def _build_lattice(inst, name, inline, body, budget):
    if inline is not None:
        if not inline or inline[0] != "power":
            raise LatticeError("one line lattices read ': power points' "
                               "or ': power of setname'")
        if len(inline) >= 2 and inline[1] == "of":
            if len(inline) != 3:
                raise LatticeError("power of takes one set name")
            base = inst.ref("set", inline[2], "lattice %s" % name)
        else:
            base = _atoms(inline[1:])
        lat = PowerLattice(base)
        if budget:
            budget.charge(lat.size, "lattice %s" % name)
        return lat, ("power", tuple(base))
    _check_heads(body, ("elems", "below"), "lattice")
    labels = []
    for ln, toks in _rows_by(body, "elems"):
        labels.extend(_atoms(toks[1:]))
    pairs = []
    for ln, toks in _rows_by(body, "below"):
        if len(toks) != 3:
            raise LatticeError("line %d: below takes two elements" % ln)
        pairs.append((_atom(toks[1]), _atom(toks[2])))
    if not labels:
        raise LatticeError("no elems line")
    lat = TableLattice.from_order_pairs(labels, pairs)
    if budget:
        budget.charge(lat.size * lat.size, "lattice %s" % name)
    return lat, _order_content(lat)


def _table_rows(name, body, ctor):
    elems = []
    for ln, toks in _rows_by(body, "elems"):
        elems.extend(_atoms(toks[1:]))
    mul = {}
    for ln, toks in _rows_by(body, "table"):
        if len(toks) < 3 or toks[2] != ":":
            raise LatticeError("line %d: table rows read 'table a : "
                               "products'" % ln)
        a = _atom(toks[1])
        prods = _atoms(toks[3:])
        if len(prods) != len(elems):
            raise LatticeError("line %d: row for %r has %d entries, the "
                               "carrier has %d" % (ln, a, len(prods),
                                                   len(elems)))
        for b, c in zip(elems, prods):
            mul[(a, b)] = c
    return ctor(elems, mul)


def _build_group(inst, name, inline, body, budget):
    if inline is not None:
        if len(inline) == 2 and inline[0] == "cyclic":
            g = FiniteGroup.cyclic(int(inline[1]))
        else:
            raise LatticeError("one line groups read ': cyclic n'")
    else:
        _check_heads(body, ("elems", "table"), "group")
        g = _table_rows(name, body, FiniteGroup)
    if budget:
        budget.charge(g.order ** 2, "group %s" % name)
    return g, (g.elements, tuple(sorted(g.mul.items(), key=repr)))


def _build_monoid(inst, name, inline, body, budget):
    if inline is not None:
        raise LatticeError("monoids use the block form")
    _check_heads(body, ("elems", "table"), "monoid")
    m = _table_rows(name, body, FiniteMonoid)
    if budget:
        budget.charge(m.order ** 2, "monoid %s" % name)
    return m, (m.elements, tuple(sorted(m.mul.items(), key=repr)))


def _ambient(inst, body, where):
    rows = _rows_by(body, "group") + _rows_by(body, "monoid")
    if len(rows) != 1:
        raise LatticeError("%s needs exactly one group or monoid line"
                           % where)
    ln, toks = rows[0]
    if len(toks) != 2:
        raise LatticeError("line %d: the ambient line names one "
                           "declaration" % ln)
    kind = toks[0]
    return kind, toks[1], inst.ref(kind, toks[1], where)


def _build_action(inst, name, inline, body, budget):
    if inline is not None:
        raise LatticeError("actions use the block form")
    _check_heads(body, ("group", "monoid", "points", "move"), "action")
    kind, ambname, amb = _ambient(inst, body, "action %s" % name)
    pts = []
    for ln, toks in _rows_by(body, "points"):
        pts.extend(_atoms(toks[1:]))
    act = {}
    moves = []
    for ln, toks in _rows_by(body, "move"):
        if len(toks) != 5 or toks[3] != "->":
            raise LatticeError("line %d: move lines read 'move m x -> y'"
                               % ln)
        m, x, y = _atom(toks[1]), _atom(toks[2]), _atom(toks[4])
        act[(m, x)] = y
        moves.append((m, x, y))
    for m in amb.elements:
        for x in pts:
            if (m, x) not in act:
                raise LatticeError("no move line for %r on %r" % (m, x))
    a = ASet(amb, pts, act, name=name)
    if budget:
        budget.charge(len(pts) * amb.order, "action %s" % name)
    return a, ((kind, ambname), tuple(pts), tuple(sorted(moves, key=repr)))


def _build_site(inst, name, inline, body, budget):
    if inline is not None:
        raise LatticeError("sites use the block form")
    _check_heads(body, ("group", "monoid", "object", "move", "arrow", "app"),
                 "site")
    kind, ambname, amb = _ambient(inst, body, "site %s" % name)
    objects, fibers = [], {}
    for ln, toks in _rows_by(body, "object"):
        if len(toks) < 3 or toks[2] != ":":
            raise LatticeError("line %d: object lines read 'object X : "
                               "points'" % ln)
        X = _atom(toks[1])
        objects.append(X)
        fibers[X] = _atoms(toks[3:])
    act = {X: {} for X in objects}
    for ln, toks in _rows_by(body, "move"):
        if len(toks) != 6 or toks[4] != "->":
            raise LatticeError("line %d: move lines read 'move X m x -> y'"
                               % ln)
        X, m, x, y = (_atom(toks[1]), _atom(toks[2]), _atom(toks[3]),
                      _atom(toks[5]))
        if X not in fibers:
            raise LatticeError("line %d: move names unknown object %r"
                               % (ln, X))
        act[X][(m, x)] = y
    arrows, app = {}, {}
    for ln, toks in _rows_by(body, "arrow"):
        if len(toks) != 6 or toks[2] != ":" or toks[4] != "->":
            raise LatticeError("line %d: arrow lines read 'arrow f : X -> Y'"
                               % ln)
        f, src, dst = toks[1], _atom(toks[3]), _atom(toks[5])
        if src not in fibers or dst not in fibers:
            raise LatticeError("line %d: arrow %r uses an unknown object"
                               % (ln, f))
        if f in arrows:
            raise LatticeError("line %d: arrow %r declared twice" % (ln, f))
        arrows[f] = (src, dst)
        app[f] = {}
    for ln, toks in _rows_by(body, "app"):
        if len(toks) != 6 or toks[2] != ":" or toks[4] != "->":
            raise LatticeError("line %d: app lines read 'app f : x -> y'"
                               % ln)
        f, x, y = toks[1], _atom(toks[3]), _atom(toks[5])
        if f not in arrows:
            raise LatticeError("line %d: app names unknown arrow %r"
                               % (ln, f))
        app[f][x] = y
    for X in objects:
        for m in amb.elements:
            for x in fibers[X]:
                if (m, x) not in act[X]:
                    raise LatticeError("no move line for %r on %r of %r"
                                       % (m, x, X))
    for f, (src, dst) in arrows.items():
        for x in fibers[src]:
            if x not in app[f]:
                raise LatticeError("arrow %r has no app line for %r"
                                   % (f, x))
    ident = {}
    for X in objects:
        cands = [f for f, pair in arrows.items() if pair == (X, X)
                 and all(app[f][x] == x for x in fibers[X])]
        if len(cands) != 1:
            raise LatticeError("object %r needs exactly one identity arrow, "
                               "found %d" % (X, len(cands)))
        ident[X] = cands[0]
    then = _compose_table(arrows, app, fibers)
    site = FinSite(objects, arrows, ident, then, fibers, app,
                   monoid=amb, act=act, name=name)
    if isinstance(amb, FiniteGroup):
        site.hopf = discrete_localic_group(amb)
    if budget:
        budget.charge(sum(len(fibers[X]) for X in objects) ** 2
                      + len(arrows) ** 2, "site %s" % name)
    content = ((kind, ambname), tuple(objects),
               tuple((X, fibers[X]) for X in objects),
               tuple(sorted(((X, m, x, y) for X in objects
                             for (m, x), y in act[X].items()), key=repr)),
               tuple(sorted(arrows.items())),
               tuple(sorted(((f, x, y) for f in arrows
                             for x, y in app[f].items()), key=repr)))
    return site, content


def _build_present(inst, name, inline, body, budget):
    if inline is not None:
        raise LatticeError("presentations use the block form")
    _check_heads(body, ("gens", "rel"), "present")
    gens = []
    for ln, toks in _rows_by(body, "gens"):
        gens.extend(toks[1:])
    rels = [" ".join(toks[1:]) for ln, toks in _rows_by(body, "rel")]
    pf = present(gens, rels)
    if budget:
        budget.charge(len(gens) ** 2 + len(rels), "present %s" % name)
    return pf, (tuple(gens),
                tuple((frozenset(l), frozenset(r))
                      for l, r in pf.pres.relations))


_BUILDERS = {"set": _build_set, "lattice": _build_lattice,
             "group": _build_group, "monoid": _build_monoid,
             "action": _build_action, "site": _build_site,
             "present": _build_present}


def loads(text, path="<instance>", budget=None):
    'parse declarations; every name must be declared before it is used'
    inst = InstanceFile(path)
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        ln = i + 1
        s = lines[i].strip()
        i += 1
        if not s or s.startswith("--"):
            continue
        toks = s.split()
        kind = toks[0]
        if kind not in _KINDS:
            raise InstanceError(path, ln, "unknown declaration %r; expected "
                                "one of %s" % (kind, ", ".join(_KINDS)))
        if len(toks) < 2:
            raise InstanceError(path, ln, "%s needs a name" % kind)
        name = toks[1]
        if (kind, name) in inst.objects:
            raise InstanceError(path, ln, "duplicate %s %r" % (kind, name))
        if len(toks) > 2 and toks[2] == ":":
            inline, body = toks[3:], None
        elif len(toks) > 2:
            raise InstanceError(path, ln, "unexpected %r after the name; "
                                "one line forms use ':'" % toks[2])
        else:
            inline, body = None, []
            while True:
                if i >= len(lines):
                    raise InstanceError(path, ln, "%s %s has no end line"
                                        % (kind, name))
                row = lines[i].strip()
                rln = i + 1
                i += 1
                if not row or row.startswith("--"):
                    continue
                if row == "end":
                    break
                body.append((rln, row.split()))
        try:
            obj, content = _BUILDERS[kind](inst, name, inline, body, budget)
        except InstanceError:
            raise
        except (LatticeError, AssertionError, TermError, KeyError) as err:
            raise InstanceError(path, ln, "%s %s: %s" % (kind, name, err))
        inst.decls.append((kind, name))
        inst.objects[(kind, name)] = obj
        inst.content[(kind, name)] = content
    return inst


def load(path, budget=None):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as err:
        raise InstanceError(path, 0, "cannot read: %s" % err)
    return loads(text, path=path, budget=budget)


# --------------------------------------------------------------------------
# serialization back to declaration form

def _tok(p):
    s = str(p)
    if not s or any(c.isspace() for c in s):
        raise ValueError("point %r does not fit the token grammar" % (p,))
    if not isinstance(p, int) and _INT.match(s):
        raise ValueError("point %r would reload as an integer" % (p,))
    return s


def _toks(pts):
    return " ".join(_tok(p) for p in pts)


def _dump_set(out, name, pts, named):
    out.append("set %s : %s" % (name, _toks(pts)))


def _cover_pairs(lat):
    pairs = []
    for i in range(lat.size):
        for j in range(lat.size):
            if lat.lt(i, j) and not any(
                    lat.lt(i, k) and lat.lt(k, j) for k in range(lat.size)):
                pairs.append((lat.labels[i], lat.labels[j]))
    return pairs


def _dump_lattice(out, name, lat, named):
    if isinstance(lat, PowerLattice):
        out.append("lattice %s : power %s" % (name, _toks(lat.base)))
        return
    out.append("lattice %s" % name)
    out.append("  elems %s" % _toks(lat.labels))
    for a, b in _cover_pairs(lat):
        out.append("  below %s %s" % (_tok(a), _tok(b)))
    out.append("end")


def _dump_table(out, kind, name, obj):
    out.append("%s %s" % (kind, name))
    out.append("  elems %s" % _toks(obj.elements))
    for a in obj.elements:
        out.append("  table %s : %s"
                   % (_tok(a), _toks(obj.mul[(a, b)] for b in obj.elements)))
    out.append("end")


def _dump_group(out, name, g, named):
    _dump_table(out, "group", name, g)


def _dump_monoid(out, name, m, named):
    _dump_table(out, "monoid", name, m)


def _amb_line(obj, named, what):
    key = named.get(id(obj))
    if key is None:
        raise ValueError("the ambient of %s must be dumped first" % what)
    return "  %s %s" % key


def _dump_action(out, name, a, named):
    out.append("action %s" % name)
    out.append(_amb_line(a.monoid, named, "action %s" % name))
    out.append("  points %s" % _toks(a.points))
    for m in a.monoid.elements:
        for x in a.points:
            out.append("  move %s %s -> %s"
                       % (_tok(m), _tok(x), _tok(a.act[(m, x)])))
    out.append("end")


def _dump_site(out, name, site, named):
    assert site.monoid is not None and site.act is not None, \
        "only sites with an ambient action serialize"
    out.append("site %s" % name)
    out.append(_amb_line(site.monoid, named, "site %s" % name))
    for X in site.objects:
        out.append("  object %s : %s" % (_tok(X), _toks(site.fiber[X])))
    for X in site.objects:
        for m in site.monoid.elements:
            for x in site.fiber[X]:
                out.append("  move %s %s %s -> %s"
                           % (_tok(X), _tok(m), _tok(x),
                              _tok(site.act[X][(m, x)])))
    for f, (src, dst) in site.arrows.items():
        out.append("  arrow %s : %s -> %s" % (f, _tok(src), _tok(dst)))
    for f in site.arrows:
        src, _ = site.arrows[f]
        for x in site.fiber[src]:
            out.append("  app %s : %s -> %s"
                       % (f, _tok(x), _tok(site.app[f][x])))
    out.append("end")


def _dump_present(out, name, pf, named):
    out.append("present %s" % name)
    out.append("  gens %s" % " ".join(pf.pres.gens))
    for lhs, rhs in pf.pres.relations:
        out.append("  rel %s = %s" % (pf.pres.show(lhs), pf.pres.show(rhs)))
    out.append("end")


_DUMPERS = {"set": _dump_set, "lattice": _dump_lattice,
            "group": _dump_group, "monoid": _dump_monoid,
            "action": _dump_action, "site": _dump_site,
            "present": _dump_present}


def dump_text(items):
    'serialize (kind, name, object) triples to declaration form'
    out = []
    named = {}
    for kind, name, obj in items:
        if out:
            out.append("")
        _DUMPERS[kind](out, name, obj, named)
        named[id(obj)] = (kind, name)
    return "\n".join(out) + "\n"


def dump(items, path):
    text = dump_text(items)
    with open(path, "w") as fh:
        fh.write(text)
    return path


# --------------------------------------------------------------------------
# name resolution

_GROUPS = {"trivial": lambda: FiniteGroup.cyclic(1),
           "z2": lambda: FiniteGroup.cyclic(2),
           "z3": lambda: FiniteGroup.cyclic(3),
           "z4": lambda: FiniteGroup.cyclic(4),
           "s3": lambda: FiniteGroup.symmetric(3)}

_SITES = {"terminal": terminal_site,
          "z2": lambda: cyclic_site(2),
          "z3": lambda: cyclic_site(3),
          "nonatomic": nonatomic_site}


def _resolve_path(value):
    'a literal path, else a bundled data file with that basename'
    if os.path.exists(value):
        return value
    if os.path.basename(value) == value:
        cand = elevator.data_path(value)
        if os.path.exists(cand):
            return cand
    return None


def _the_one(inst, kind, path):
    found = inst.of_kind(kind)
    if len(found) != 1:
        raise UnknownName("%s declares %d %ss, expected exactly one"
                          % (path, len(found), kind))
    return found[0][1]


def _load_group(value, budget):
    if value in _GROUPS:
        return _GROUPS[value]()
    path = _resolve_path(value)
    if path is None:
        raise UnknownName("unknown group %r; have %s, or a path to a file "
                          "declaring one"
                          % (value, ", ".join(sorted(_GROUPS))))
    return _the_one(load(path, budget), "group", path)


def _load_the_site(value, budget):
    if value in _SITES:
        return _SITES[value]()
    path = _resolve_path(value)
    if path is None:
        raise UnknownName("unknown site %r; have %s, or a path to a file "
                          "declaring one"
                          % (value, ", ".join(sorted(_SITES))))
    return _the_one(load(path, budget), "site", path)


# --------------------------------------------------------------------------
# per kind checks shared by the lattice, frame, and verify subcommands

def _bounds_row(lat):
    """Recompute pairwise bounds from the order and compare the tables.

    Small lattices get the full sweep; larger ones are checked on joins
    and meets of their atoms, which generate everything formula backed.
    """
    els = list(lat.elements()) if lat.size <= 64 else lat.atoms()
    scope = "all %d elements" % lat.size if lat.size <= 64 \
        else "atom generated sample of %d" % len(els)
    for a in els:
        for b in els:
            ubs = [c for c in lat.elements()
                   if lat.leq(a, c) and lat.leq(b, c)]
            least = [u for u in ubs if all(lat.leq(u, v) for v in ubs)]
            if len(least) != 1 or lat.join2(a, b) != least[0]:
                return False, ("join of %s, %s disagrees with the order"
                               % (lat.label(a), lat.label(b)))
            lbs = [c for c in lat.elements()
                   if lat.leq(c, a) and lat.leq(c, b)]
            great = [u for u in lbs if all(lat.leq(v, u) for v in lbs)]
            if len(great) != 1 or lat.meet2(a, b) != great[0]:
                return False, ("meet of %s, %s disagrees with the order"
                               % (lat.label(a), lat.label(b)))
    return True, "%d elements; tables agree with the order on %s" \
        % (lat.size, scope)


def _distrib_spot(lat, els):
    for a in els:
        for b in els:
            for c in els:
                lhs = lat.meet2(a, lat.join2(b, c))
                rhs = lat.join2(lat.meet2(a, b), lat.meet2(a, c))
                if lhs != rhs:
                    return (lat.label(a), lat.label(b), lat.label(c))
    return None


def _frame_row(lat):
    if lat.size <= 200:
        bad = locale_algebra_violation(lat)
        if bad is not None:
            return False, (bad[0],) + tuple(lat.label(x) for x in bad[1:])
        return True, ("%d elements; meets distribute over joins"
                      % lat.size)
    gens = lat.join_irreducibles()
    if not isinstance(lat, PowerLattice) and len(gens) > 64:
        raise BudgetError("frame law sweep on %d elements is over the "
                          "built in cap" % lat.size)
    bad = _distrib_spot(lat, gens)
    if bad is not None:
        return False, bad
    return True, ("%d elements; distributivity spot checked on the %d "
                  "join generators" % (lat.size, len(gens)))


def _materialized(pf, budget):
    cap = 7581 if budget is None or budget.limit is None else budget.limit
    return pf.materialize(cap)


def _open_instance(value, budget):
    path = _resolve_path(value)
    if path is None:
        raise InstanceError(value, 0, "no such file, and nothing bundled "
                            "under that name")
    return load(path, budget)


# --------------------------------------------------------------------------
# subcommands

def _cmd_lattice(args, rep, budget):
    if args.action != "check":
        raise UnknownName("lattice subcommand knows: check")
    inst = _open_instance(args.file, budget)
    lats = inst.of_kind("lattice")
    if not lats:
        raise UnknownName("%s declares no lattice" % args.file)
    for name, lat in lats:
        budget.charge(lat.size ** 2, "lattice %s" % name)
        ok, detail = _bounds_row(lat)
        rep.add("lattice %s" % name, ok, detail)


def _cmd_frame(args, rep, budget):
    if args.action == "free":
        n = 3 if args.bound is None else args.bound
        pf = free_frame(n)
        conc = _materialized(pf, budget)
        budget.charge(conc.size ** 2, "free frame")
        ok, detail = _frame_row(conc)
        rep.add("free frame on %d generators" % n, ok, detail)
        return
    if args.action != "check":
        raise UnknownName("frame subcommand knows: check, free")
    if args.file is None:
        raise UnknownName("frame check needs a file")
    inst = _open_instance(args.file, budget)
    targets = inst.of_kind("lattice")
    presents = inst.of_kind("present")
    if not targets and not presents:
        raise UnknownName("%s declares no lattice or presentation"
                          % args.file)
    for name, lat in targets:
        budget.charge(lat.size ** 2, "frame %s" % name)
        ok, detail = _frame_row(lat)
        rep.add("frame %s" % name, ok, detail)
    for name, pf in presents:
        conc = _materialized(pf, budget)
        budget.charge(conc.size ** 2, "frame %s" % name)
        ok, detail = _frame_row(conc)
        rep.add("frame %s" % name, ok, detail)


def _suite_props(args, rep, budget):
    bound = 2 if args.bound is None else args.bound
    for name in PROPOSITIONS:
        r = verify_proposition(name, bound=bound)
        budget.charge(r.instances, "statement %s" % name)
        ok = r.holds and r.counterexample is None
        rep.add("statement %s over 2, bound %d" % (name, bound), ok,
                "%d structures, %d instances, %d with hypothesis"
                % (r.structures, r.instances, r.hyp_count)
                if ok else r.counterexample)
    for name in PROPOSITIONS:
        r = verify_proposition(name, bound=bound, mode="product", target=2)
        budget.charge(r.structures, "statement %s over a product"
                      % name)
        rep.add("statement %s over 2^2, bound %d" % (name, bound), r.holds,
                "verdict transported along the two components"
                if r.holds else r.counterexample)


def _suite_props_sampled(args, rep, budget):
    if args.seed is None:
        raise UnknownName("suite s2-props-sampled draws random instances "
                          "and needs an explicit --seed")
    bound = 2 if args.bound is None else args.bound
    samples = 200
    target = PowerLattice((0, 1))
    for name in PROPOSITIONS:
        budget.charge(samples, "statement %s sampled" % name)
        r = verify_proposition(name, bound=bound, mode="sample",
                               target=target, seed=args.seed,
                               samples=samples)
        rep.add("statement %s sampled over subsets of a two element "
                "carrier, bound %d, seed %d" % (name, bound, args.seed),
                r.holds and r.hyp_count > 0,
                "%d sampled, %d with hypothesis"
                % (r.instances, r.hyp_count)
                if r.holds else r.counterexample)


_SUITES = {"s2-props": _suite_props,
           "s2-props-sampled": _suite_props_sampled}


def _verify_file(args, rep, budget):
    inst = _open_instance(args.file, budget)
    if not inst.decls:
        raise UnknownName("%s declares nothing" % args.file)
    for kind, name in inst.decls:
        obj = inst.objects[(kind, name)]
        if kind == "set":
            rep.add("set %s" % name, True, "%d points" % len(obj))
        elif kind == "lattice":
            budget.charge(obj.size ** 2, "lattice %s" % name)
            ok, detail = _bounds_row(obj)
            rep.add("lattice %s" % name, ok, detail)
        elif kind in ("group", "monoid"):
            rep.add("%s %s" % (kind, name), True,
                    "order %d, laws certified on load" % obj.order)
        elif kind == "action":
            ok, detail = True, "%d points, action laws certified on load" \
                % len(obj.points)
            if isinstance(obj.monoid, FiniteGroup):
                hopf = discrete_localic_group(obj.monoid)
                classical = Action.from_classical(hopf, obj.points, obj.act)
                r = is_action(classical)
                ok = r.valid
                detail = "%d points; structure equations of the relation " \
                    "table agree" % len(obj.points) if ok else r
                budget.charge(len(obj.points) ** 2 * obj.monoid.order,
                              "action %s" % name)
            rep.add("action %s" % name, ok, detail)
        elif kind == "site":
            small = all(len(obj.fiber[X]) * len(obj.fiber[Y]) <= 12
                        for X in obj.objects for Y in obj.objects)
            if small:
                budget.charge(sum(1 << (len(obj.fiber[X]) * len(obj.fiber[Y]))
                                  for X in obj.objects for Y in obj.objects),
                              "site %s" % name)
                bad = functor_route_witness(obj)
                rep.add("site %s" % name, bad is None,
                        "%d objects, %d arrows; graphs, converses and "
                        "products agree along all three routes"
                        % (len(obj.objects), len(obj.arrows))
                        if bad is None else bad)
            else:
                rep.add("site %s" % name, True,
                        "%d objects, %d arrows; category laws and "
                        "equivariance certified on load"
                        % (len(obj.objects), len(obj.arrows)))
        elif kind == "present":
            conc = _materialized(obj, budget)
            budget.charge(conc.size ** 2, "present %s" % name)
            ok, detail = _frame_row(conc)
            rep.add("present %s" % name, ok, detail)


def _cmd_verify(args, rep, budget):
    if (args.suite is None) == (args.file is None):
        raise UnknownName("verify takes exactly one of --suite or --file")
    if args.file is not None:
        _verify_file(args, rep, budget)
        return
    if args.suite not in _SUITES:
        raise UnknownName("unknown suite %r; have %s"
                          % (args.suite, ", ".join(sorted(_SUITES))))
    _SUITES[args.suite](args, rep, budget)


def _cmd_galois(args, rep, budget):
    if args.action != "build":
        raise UnknownName("galois subcommand knows: build")
    group = _load_group(args.group, budget)
    budget.charge(2 ** min(group.order, 24), "carrier frame")
    hopf = discrete_localic_group(group)
    bad = hopf_violation(hopf)
    rep.add("carrier frame", bad is None,
            "%d elements over an order %d group, group structure laws hold"
            % (hopf.carrier.size, group.order) if bad is None else bad)
    site = group_site(group)
    budget.charge(len(site.arrows) ** 2, "translation diagram")
    rep.add("translation diagram", True,
            "%d objects, %d arrows, every equivariant map is an arrow"
            % (len(site.objects), len(site.arrows)))
    pa = point_aut(site)
    budget.charge(1 << min(len(pa.triples), 24), "symmetry frame")
    if not pa.materialized:
        nonzero = all(pa.frame.value(pa.names[t]) != pa.frame.bottom
                      for t in pa.triples)
        rep.add("symmetry frame", nonzero,
                "lazy, %d generators, order decided by saturation; no "
                "generator vanishes" % len(pa.triples) if nonzero
                else "a generator vanishes")
        return
    rep.add("symmetry frame", True, "%d elements" % pa.concrete.size)
    bad = hopf_violation(pa.hopf)
    rep.add("symmetry frame structure maps", bad is None,
            "comultiplication, counit and inverse are frame morphisms "
            "satisfying the group laws" if bad is None else bad)
    K = point_group(pa)
    rep.add("points under convolution", True,
            "a group of order %d" % len(K.elements))
    C = hopf.carrier
    images = []
    for (X, a, b) in pa.triples:
        members = frozenset(m for m in group.elements
                            if site.act[X][(m, a)] == b)
        images.append(C.index(members))
    phi = frame_morphism(pa.concrete, C, images)
    ok = is_hopf_iso(pa.hopf, hopf, phi)
    rep.add("evaluation onto the carrier", ok,
            "the tautological cone factors through an isomorphism of "
            "group frames" if ok else "the mediating map is not an "
            "isomorphism of group frames")


def _cmd_tannaka(args, rep, budget):
    site = _load_the_site(args.site, budget)
    budget.charge(sum(len(site.fiber[X]) ** 2 for X in site.objects) ** 2,
                  "pair lattices")
    if args.action == "build":
        bad = functor_route_witness(site)
        rep.add("relation supply", bad is None,
                "graphs, converses and products agree along all three "
                "routes" if bad is None else bad)
        ce = rel_coend(site)
        bad = locale_algebra_violation(ce.lattice)
        rep.add("glued pair lattice", bad is None,
                "%d elements, meets distribute over joins"
                % ce.lattice.size if bad is None else bad)
        bad = hopf_violation(ce.hopf)
        rep.add("glue structure maps", bad is None,
                "comultiplication, counit and inverse satisfy the group "
                "laws" if bad is None else bad)
        bad = (ce.cone.bijection_witness() or ce.cone.triangle_witness()
               or ce.cone.diamond_witness())
        rep.add("canonical cone", bad is None,
                "a diamond cone of two sided bijections" if bad is None
                else bad)
    elif args.action == "iso":
        r = check_iso(site)
        if r.lazy:
            detail = ("iso: yes, order agreement on %d generator meet "
                      "pairs" % r.checked) if r.ok else r.witness
        else:
            detail = ("iso: yes, carrier size %d" % r.sizes[0]) if r.ok \
                else r.witness
        rep.add("point frame vs relation frame", r.ok, detail)
    elif args.action == "key":
        r = generator_order_check(site)
        rep.add("no pair generator vanishes", r.nonzero_ok,
                "%d generators" % len(point_aut(site).triples)
                if r.nonzero_ok else r.witness)
        rep.add("generator order matches arrow transport", r.order_ok,
                "%d ordered pairs" % r.checked if r.order_ok else r.witness)
    elif args.action == "lift":
        bound = 3 if args.bound is None else args.bound
        budget.charge(4 ** bound, "lifting window")
        r = lifting_check(site, bound=bound)
        rep.add("window", True, "%d reachable carriers at bound %d"
                % (len(r.objects), r.bound))
        for field in ("map_faithful", "map_full", "map_onto",
                      "rel_faithful", "rel_full", "rel_onto"):
            v = getattr(r, field)
            rep.add(field.replace("_", " "), v.ok,
                    "%d comparisons" % v.checked if v.ok else v.witness)
    else:
        raise UnknownName("tannaka subcommand knows: build, iso, key, lift")


def _cmd_elevator(args, rep, budget):
    if args.action != "check":
        raise UnknownName("elevator subcommand knows: check")
    for value in args.files:
        path = _resolve_path(value)
        if path is None:
            raise UnknownName("no derivation file %r" % value)
        with open(path) as fh:
            text = fh.read()
        try:
            sig, derivs = elevator.parse_file(text)
        except elevator.ParseError as err:
            raise InstanceError(path, 0, str(err))
        base = os.path.basename(path)
        if not derivs:
            raise InstanceError(path, 0, "no derive block in the file")
        for d in derivs:
            budget.charge(len(d.terms) * max(len(t.rows) for t in d.terms),
                          "derivation %s" % d.name)
            bad = elevator.check_derivation(sig, d)
            rep.add("%s: %s" % (base, d.name), bad is None,
                    "%d terms, %d moves replayed" % (len(d.terms),
                                                     len(d.moves))
                    if bad is None else bad)


_DISPATCH = {"lattice": _cmd_lattice, "frame": _cmd_frame,
             "verify": _cmd_verify, "galois": _cmd_galois,
             "tannaka": _cmd_tannaka, "elevator": _cmd_elevator}


# --------------------------------------------------------------------------
# argument plumbing

def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="seed for sampled suites; suites that draw "
                        "random instances refuse to run without one")
    common.add_argument("--bound", type=int, default=None,
                        help="size bound where the subcommand sweeps "
                        "structures")
    common.add_argument("--budget", type=int, default=None,
                        help="cap on counted work units; crossing it "
                        "exits 4")
    common.add_argument("--format", choices=("text", "json-lines"),
                        default="text", help="report rendering")
    top = argparse.ArgumentParser(
        prog="galtan",
        description="Finite workbench for lattice valued relation "
        "calculus: instance checking, verification suites, the two "
        "sided group reconstruction pipeline, and diagram derivation "
        "replay.")
    sub = top.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("lattice", parents=[common],
                       help="check lattice declarations in a file")
    p.add_argument("action", choices=("check",))
    p.add_argument("file")
    p = sub.add_parser("frame", parents=[common],
                       help="frame laws of declared lattices, or a free "
                       "frame census")
    p.add_argument("action", choices=("check", "free"))
    p.add_argument("file", nargs="?")
    p = sub.add_parser("verify", parents=[common],
                       help="run a registered suite, or validate every "
                       "declaration of a file")
    p.add_argument("--suite", help="one of: %s" % ", ".join(sorted(_SUITES)))
    p.add_argument("--file", help="instance file to validate")
    p = sub.add_parser("galois", parents=[common],
                       help="build the point side symmetry frame of a "
                       "group and compare it with the carrier")
    p.add_argument("action", choices=("build",))
    p.add_argument("--group", required=True,
                   help="a registered name or a file declaring one group")
    p = sub.add_parser("tannaka", parents=[common],
                       help="build the relation side glue, compare the "
                       "two sides, or lift the diagram")
    p.add_argument("action", choices=("build", "iso", "key", "lift"))
    p.add_argument("--site", required=True,
                   help="a registered name or a file declaring one site")
    p = sub.add_parser("elevator", parents=[common],
                       help="replay derivation files")
    p.add_argument("action", choices=("check",))
    p.add_argument("files", nargs="+")
    return top


def main(argv=None):
    args = _parser().parse_args(argv)
    rep = Report()
    budget = Budget(args.budget)
    try:
        _DISPATCH[args.cmd](args, rep, budget)
    except UnknownName as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_UNKNOWN
    except InstanceError as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_MALFORMED
    except elevator.ParseError as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_MALFORMED
    except BudgetError as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_BUDGET
    sys.stdout.write(rep.render(args.format))
    return EXIT_OK if rep.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
