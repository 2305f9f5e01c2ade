"""Diagram terms over a symmetric monoidal signature, with a move checker.

A term is a vertical stack of rows read top to bottom; each row holds one
cell (a generator or a wire crossing) at a wire offset, with identity wires
everywhere else.  Moves rewrite a stack in place: `ascensor` exchanges two
rows whose cells touch disjoint wires, `swap` slides a one-wire cell through
an adjacent crossing, and `axiom` splices one side of a named equation for
the other.  Derivations record terms and moves; the checker replays every
move and reports the first step whose result differs from the file.

Equality modulo arbitrary axioms is not decided.  The one decidable fragment
is stacks built purely from crossings, where two stacks are equal exactly
when they induce the same permutation of wires; `coherence_census` checks
that decision against an independent normalization oracle.

A `SupModel` interprets wire words as tensors of power lattices and cells as
join-preserving maps, so every term in a derivation denotes an actual linear
map and soundness can be checked step by step.
"""

from __future__ import annotations

import itertools
import os
import re
from typing import NamedTuple

from .suplat import (LatticeError, PowerLattice, PowerTensor, RelMap,
                     duality_data, identity_map)


class ParseError(ValueError):
    'text that does not describe a term, signature, or derivation'


class MoveError(ValueError):
    'a move whose pattern does not match at the given position'


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")


def _word(w):
    return " ".join(w) if w else "(nothing)"


class Cell(NamedTuple):
    name: str
    src: tuple
    dst: tuple

    @property
    def is_sym(self):
        return self.name == "sym"

    def text(self):
        if self.is_sym:
            return "sym:%s,%s" % self.src
        return self.name


def sym_cell(a, b):
    return Cell("sym", (a, b), (b, a))


# ---------------------------------------------------------------------------
# signatures

class Signature:
    """Cell alphabet and axiom list for diagram terms.

    Cells carry a source and a target word over the object alphabet.
    `id:A` and `sym:A,B` are built in and never declared.  Axioms are pairs
    of terms with equal boundaries, usable as rewrite steps in either
    direction.  Words may be given as space-separated strings.
    """

    def __init__(self, objects, cells, axioms=None):
        if isinstance(objects, str):
            objects = objects.split()
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise ParseError("duplicate object name")
        for a in self.objects:
            if not _NAME.match(a):
                raise ParseError("bad object name %r" % a)
        self.cells = {}
        for name, (src, dst) in dict(cells).items():
            if name in ("id", "sym") or not _NAME.match(name):
                raise ParseError("bad cell name %r" % name)
            src, dst = self._word(src), self._word(dst)
            self.cells[name] = Cell(name, src, dst)
        self.axioms = {}
        for name, (lhs, rhs) in dict(axioms or {}).items():
            self.add_axiom(name, lhs, rhs)

    def _word(self, w):
        w = tuple(w.split()) if isinstance(w, str) else tuple(w)
        for a in w:
            if a not in self.objects:
                raise ParseError("unknown object %r in a cell boundary" % a)
        return w

    def cell(self, name):
        if name not in self.cells:
            raise ParseError("unknown cell %r" % name)
        return self.cells[name]

    def add_axiom(self, name, lhs, rhs):
        if not _NAME.match(name.replace("-", "_")):
            raise ParseError("bad axiom name %r" % name)
        if name in self.axioms:
            raise ParseError("duplicate axiom name %r" % name)
        if isinstance(lhs, str):
            lhs = parse(self, lhs)
        if isinstance(rhs, str):
            rhs = parse(self, rhs)
        if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
            raise ParseError(
                "axiom %r sides have different boundaries: %s -> %s vs %s -> %s"
                % (name, _word(lhs.dom), _word(lhs.cod),
                   _word(rhs.dom), _word(rhs.cod)))
        self.axioms[name] = (lhs, rhs)


# ---------------------------------------------------------------------------
# terms

def _trace(dom, rows):
    'the ladder of wire words through the rows; fails on any misfit'
    words = [tuple(dom)]
    for i, (off, cell) in enumerate(rows):
        w = words[-1]
        if off < 0 or off + len(cell.src) > len(w):
            raise ParseError("row %d: cell %s falls off the word %s"
                             % (i, cell.text(), _word(w)))
        if w[off:off + len(cell.src)] != cell.src:
            raise ParseError("row %d: cell %s needs %s at wire %d, found %s"
                             % (i, cell.text(), _word(cell.src), off,
                                _word(w[off:off + len(cell.src)])))
        words.append(w[:off] + cell.dst + w[off + len(cell.src):])
    return tuple(words)


class Term:
    """A stack of rows over a fixed input word.

    Each row is (offset, cell): one non-identity cell starting at that wire,
    identity wires elsewhere.  The empty stack is the identity diagram.
    """

    __slots__ = ("dom", "rows", "_words")

    def __init__(self, dom, rows=()):
        self.dom = tuple(dom)
        self.rows = tuple((int(o), c) for o, c in rows)
        self._words = _trace(self.dom, self.rows)

    @property
    def cod(self):
        return self._words[-1]

    def words(self):
        return self._words

    def __eq__(self, other):
        return (isinstance(other, Term) and self.dom == other.dom
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.dom, self.rows))

    def __repr__(self):
        return "Term(%r)" % render(self)


def boundary(term):
    return term.dom, term.cod


def parse(sig, text):
    """Term from text: rows split on ';', cells on '*', left to right.

    A textual row may hold several cells; it is normalized into one stored
    row per non-identity cell, leftmost first.
    """
    row_texts = text.split(";")
    dom = None
    word = None
    rows = []
    seen = False
    for ri, rt in enumerate(row_texts):
        chunks = [c.strip() for c in rt.split("*")]
        if chunks == [""]:
            raise ParseError("row %d: empty row" % ri)
        cells = [_chunk(sig, ri, ci, c) for ci, c in enumerate(chunks)]
        rword = sum((c.src for c in cells), ())
        if dom is None:
            dom = rword
        elif rword != word:
            raise ParseError("row %d: expects %s, the wires above give %s"
                             % (ri, _word(rword), _word(word)))
        off = 0
        for c in cells:
            if c.name != "id":
                rows.append((off, c))
                off += len(c.dst)
            else:
                off += 1
        word = sum((c.dst for c in cells), ())
        seen = True
    if not seen or dom is None:
        raise ParseError("empty term")
    return Term(dom, rows)


def _chunk(sig, ri, ci, text):
    'one cell of one textual row; identities come back as id pseudo-cells'
    where = "row %d, cell %d" % (ri, ci)
    if not text:
        raise ParseError("%s: missing cell" % where)
    if text.startswith("id:"):
        a = text[3:]
        if a not in sig.objects:
            raise ParseError("%s: unknown object %r" % (where, a))
        return Cell("id", (a,), (a,))
    if text.startswith("sym:"):
        parts = text[4:].split(",")
        if len(parts) != 2 or not all(p in sig.objects for p in parts):
            raise ParseError("%s: bad crossing %r" % (where, text))
        return sym_cell(*parts)
    if not _NAME.match(text):
        raise ParseError("%s: bad cell name %r" % (where, text))
    if text not in sig.cells:
        raise ParseError("%s: unknown cell %r" % (where, text))
    return sig.cells[text]


def render(term):
    'canonical text, one textual row per stored row, identities explicit'
    assert term.dom or term.rows, "nothing to render"
    if not term.rows:
        return " * ".join("id:%s" % a for a in term.dom)
    lines = []
    for (off, cell), w in zip(term.rows, term.words()):
        parts = ["id:%s" % a for a in w[:off]]
        parts.append(cell.text())
        parts.extend("id:%s" % a for a in w[off + len(cell.src):])
        lines.append(" * ".join(parts))
    return " ; ".join(lines)


# ---------------------------------------------------------------------------
# the symmetry fragment

def permutation_of(term):
    """The wire permutation of a crossings-only stack.

    Entry i is the output position of input wire i.  Any generator cell in
    the stack is a refusal: the fragment decision does not cover it.
    """
    pos = list(range(len(term.dom)))
    for off, cell in term.rows:
        if not cell.is_sym:
            raise LatticeError("cell %s is not a crossing" % cell.text())
        for i, p in enumerate(pos):
            if p == off:
                pos[i] = off + 1
            elif p == off + 1:
                pos[i] = off
    return tuple(pos)


def decide_symmetry_equality(t1, t2):
    'equal boundary and equal wire permutation'
    if boundary(t1) != boundary(t2):
        return False
    return permutation_of(t1) == permutation_of(t2)


def _staircase(arrangement):
    'bubble-sort swap positions, a canonical reduced crossing sequence'
    arr = list(arrangement)
    out = []
    changed = True
    while changed:
        changed = False
        for k in range(len(arr) - 1):
            if arr[k] > arr[k + 1]:
                arr[k], arr[k + 1] = arr[k + 1], arr[k]
                out.append(k)
                changed = True
    return tuple(out)


def coherence_census(wires, crossings, obj="W"):
    """Compare the fragment decision with a normalization oracle.

    Enumerates every crossings-only stack over `wires` equal wires with at
    most `crossings` rows.  The oracle pushes a token list through the rows
    and normalizes the arrangement to its bubble-sort crossing sequence;
    the decision compares composed permutations.  Returns (number of terms,
    number of classes, witness), witness naming the first pair on which the
    two verdicts differ, or None.
    """
    word = (obj,) * wires
    cross = sym_cell(obj, obj)
    seqs = [()]
    frontier = [()]
    for _ in range(crossings):
        frontier = [s + (k,) for s in frontier for k in range(wires - 1)]
        seqs.extend(frontier)
    data = []
    for s in seqs:
        term = Term(word, [(k, cross) for k in s])
        perm = permutation_of(term)
        tokens = list(range(wires))
        for k in s:
            tokens[k], tokens[k + 1] = tokens[k + 1], tokens[k]
        # sorting swaps undo the stack, so the canonical stack is their reverse
        canon = tuple(reversed(_staircase(tokens)))
        # the normal form must itself be a stack the decision accepts as equal
        redo = Term(word, [(k, cross) for k in canon])
        if not decide_symmetry_equality(term, redo):
            return len(seqs), 0, (s, canon, "normal form drifted")
        data.append((s, perm, canon))
    classes = len({perm for _, perm, _ in data})
    for (s1, p1, c1), (s2, p2, c2) in itertools.combinations(data, 2):
        if (p1 == p2) != (c1 == c2):
            return len(seqs), classes, (s1, s2, "verdicts disagree")
    return len(seqs), classes, None


# ---------------------------------------------------------------------------
# moves

class Move(NamedTuple):
    kind: str           # "ascensor" | "swap" | "axiom"
    row: int
    col: int
    name: str = ""      # axiom name
    rev: bool = False   # axiom applied right to left

    def text(self):
        head = "axiom:%s" % self.name if self.kind == "axiom" else self.kind
        tail = " rev" if self.rev else ""
        return "%s@%d,%d%s" % (head, self.row, self.col, tail)


def apply_move(sig, term, move):
    'one rewrite step; MoveError when the pattern is absent at the position'
    if move.kind == "ascensor":
        out = _ascensor(term, move.row, move.col)
    elif move.kind == "swap":
        out = _swap(term, move.row, move.col)
    elif move.kind == "axiom":
        out = _axiom(sig, term, move.name, move.row, move.col, move.rev)
    else:
        raise MoveError("unknown move kind %r" % move.kind)
    assert boundary(out) == boundary(term), "move broke the boundary"
    return out


def _cell_at(term, i, col):
    if not 0 <= i < len(term.rows):
        raise MoveError("no row %d" % i)
    off, cell = term.rows[i]
    if off != col:
        raise MoveError("row %d holds its cell at column %d, not %d"
                        % (i, off, col))
    return off, cell


def _ascensor(term, i, col):
    'exchange rows i and i+1 when their cells touch disjoint wires'
    a, f = _cell_at(term, i, col)
    if i + 1 >= len(term.rows):
        raise MoveError("no row %d below row %d" % (i + 1, i))
    b, g = term.rows[i + 1]
    m, n = len(f.src), len(f.dst)
    if b >= a + n:
        # the lower cell sits right of the upper one's output
        pair = ((b - n + m, g), (a, f))
    elif b + len(g.src) <= a:
        pair = ((b, g), (a - len(g.src) + len(g.dst), f))
    else:
        raise MoveError("rows %d and %d share wires near column %d"
                        % (i, i + 1, b))
    return Term(term.dom, term.rows[:i] + pair + term.rows[i + 2:])


def _swap(term, i, col):
    """Slide a one-wire cell through an adjacent crossing.

    Four shapes match: the cell above with the crossing on its output's
    left or right leg, and the mirrored shapes with the crossing above.
    The column names where row i's cell sits.
    """
    a, f = _cell_at(term, i, col)
    if i + 1 >= len(term.rows):
        raise MoveError("no row %d below row %d" % (i + 1, i))
    b, g = term.rows[i + 1]
    if not f.is_sym and g.is_sym:
        if len(f.src) != 1 or len(f.dst) != 1:
            raise MoveError("cell %s spans %d wires, swap moves one"
                            % (f.text(), max(len(f.src), len(f.dst))))
        (x,), (y,) = f.src, f.dst
        if b == a:
            pair = ((a, sym_cell(x, g.src[1])), (a + 1, f))
        elif b == a - 1:
            pair = ((a - 1, sym_cell(g.src[0], x)), (a - 1, f))
        else:
            raise MoveError("no crossing adjacent to column %d in row %d"
                            % (a, i + 1))
    elif f.is_sym and not g.is_sym:
        if len(g.src) != 1 or len(g.dst) != 1:
            raise MoveError("cell %s spans %d wires, swap moves one"
                            % (g.text(), max(len(g.src), len(g.dst))))
        (x,), (y,) = g.src, g.dst
        if b == a + 1:
            pair = ((a, g), (a, sym_cell(y, f.src[1])))
        elif b == a:
            pair = ((a + 1, g), (a, sym_cell(f.src[0], y)))
        else:
            raise MoveError("no cell adjacent to the crossing at row %d" % i)
    else:
        raise MoveError("swap needs one cell and one crossing in rows %d,%d"
                        % (i, i + 1))
    return Term(term.dom, term.rows[:i] + pair + term.rows[i + 2:])


def _axiom(sig, term, name, i, col, rev):
    'splice one axiom side for the other at rows i.. and wire column col'
    if name not in sig.axioms:
        raise MoveError("unknown axiom %r" % name)
    lhs, rhs = sig.axioms[name]
    if rev:
        lhs, rhs = rhs, lhs
    k = len(lhs.rows)
    if not 0 <= i <= len(term.rows) - k:
        raise MoveError("axiom %r needs rows %d..%d, term has %d rows"
                        % (name, i, i + k - 1, len(term.rows)))
    w = term.words()[i]
    width = len(lhs.dom)
    if col < 0 or col + width > len(w) or w[col:col + width] != lhs.dom:
        raise MoveError("axiom %r needs %s at column %d of %s"
                        % (name, _word(lhs.dom), col, _word(w)))
    for j, (off, cell) in enumerate(lhs.rows):
        have = term.rows[i + j]
        if have != (col + off, cell):
            raise MoveError("axiom %r mismatch at row %d: wants %s at "
                            "column %d, term has %s at column %d"
                            % (name, i + j, cell.text(), col + off,
                               have[1].text(), have[0]))
    spliced = tuple((col + off, cell) for off, cell in rhs.rows)
    return Term(term.dom, term.rows[:i] + spliced + term.rows[i + k:])


# ---------------------------------------------------------------------------
# derivations

class Derivation(NamedTuple):
    name: str
    terms: tuple
    moves: tuple


def check_derivation(sig, deriv):
    'replay every move; None when the record is honest, else the first failure'
    if len(deriv.terms) != len(deriv.moves) + 1:
        return ("derivation %s: %d terms do not fit %d moves"
                % (deriv.name, len(deriv.terms), len(deriv.moves)))
    for j, mv in enumerate(deriv.moves):
        try:
            nxt = apply_move(sig, deriv.terms[j], mv)
        except MoveError as e:
            return "step %d (%s): %s" % (j, mv.text(), e)
        if nxt != deriv.terms[j + 1]:
            return ("step %d (%s): the move yields\n    %s\nthe record says\n    %s"
                    % (j, mv.text(), render(nxt), render(deriv.terms[j + 1])))
    return None


# ---------------------------------------------------------------------------
# derivation files

_MOVE = re.compile(
    r"--\s+(ascensor|swap|axiom:([A-Za-z][A-Za-z0-9_'-]*))"
    r"@(\d+),(\d+)(\s+rev)?\s*\Z")


def _parse_move(line, ln):
    m = _MOVE.match(line)
    if not m:
        raise ParseError("line %d: bad move annotation %r" % (ln, line))
    kind = "axiom" if m.group(2) else m.group(1)
    return Move(kind, int(m.group(3)), int(m.group(4)),
                m.group(2) or "", bool(m.group(5)))


def parse_file(text):
    """Signature and derivations from one textual file.

    Declarations come first: `objects ...`, `cell NAME : SRC -> DST`,
    `axiom NAME : TERM = TERM`; `--` lines there are comments.  Each
    `derive NAME` block then alternates term rows (one row per line, or
    several rows joined with ';') with `-- move@row,col` annotations.
    """
    objects = []
    cells = {}
    axiom_lines = []
    derivs = []
    sig = None
    name = None
    terms = []
    moves = []
    pending = []

    def flush_term(ln):
        if not pending:
            raise ParseError("line %d: no term above this point" % ln)
        try:
            terms.append(parse(sig, " ; ".join(pending)))
        except ParseError as e:
            raise ParseError("term ending at line %d: %s" % (ln, e))
        del pending[:]

    def close(ln):
        if name is not None:
            flush_term(ln)
            if len(terms) != len(moves) + 1:
                raise ParseError("line %d: derivation %s ends mid-step"
                                 % (ln, name))
            derivs.append(Derivation(name, tuple(terms), tuple(moves)))
        del terms[:]
        del moves[:]

    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        head = line.split()[0]
        if sig is None:
            if line.startswith("--"):
                continue
            if head == "objects":
                objects.extend(line.split()[1:])
            elif head == "cell":
                try:
                    rest = line[len("cell"):]
                    cname, arrow = rest.split(":", 1)
                    src, dst = arrow.split("->", 1)
                except ValueError:
                    raise ParseError("line %d: bad cell declaration" % ln)
                cells[cname.strip()] = (src.strip(), dst.strip())
            elif head == "axiom":
                try:
                    rest = line[len("axiom"):]
                    aname, eq = rest.split(":", 1)
                    lhs, rhs = eq.split("=", 1)
                except ValueError:
                    raise ParseError("line %d: bad axiom declaration" % ln)
                axiom_lines.append((aname.strip(), lhs.strip(), rhs.strip(), ln))
            elif head == "derive":
                sig = Signature(objects, cells)
                for aname, lhs, rhs, aln in axiom_lines:
                    try:
                        sig.add_axiom(aname, lhs, rhs)
                    except ParseError as e:
                        raise ParseError("line %d: %s" % (aln, e))
                name = " ".join(line.split()[1:]) or "unnamed"
            else:
                raise ParseError("line %d: unknown declaration %r" % (ln, head))
            continue
        if head == "derive":
            close(ln)
            name = " ".join(line.split()[1:]) or "unnamed"
        elif line.startswith("--"):
            mv = _parse_move(line, ln)
            flush_term(ln)
            moves.append(mv)
        else:
            pending.append(line)
    if sig is None:
        raise ParseError("no derive block in the file")
    close(len(text.splitlines()) + 1)
    return sig, tuple(derivs)


def render_file(sig, derivs):
    'canonical text for a signature plus derivations; reparses to the same'
    lines = ["objects " + " ".join(sig.objects)]
    for c in sig.cells.values():
        lines.append("cell %s : %s -> %s"
                     % (c.name, " ".join(c.src), " ".join(c.dst)))
    for aname, (lhs, rhs) in sig.axioms.items():
        lines.append("axiom %s : %s = %s" % (aname, render(lhs), render(rhs)))
    for d in derivs:
        lines.append("derive %s" % d.name)
        lines.append(render(d.terms[0]))
        for mv, t in zip(d.moves, d.terms[1:]):
            lines.append("-- " + mv.text())
            lines.append(render(t))
    return "\n".join(lines) + "\n"


def check_file(text):
    'parse and replay a whole file; list of (derivation name, failure or None)'
    sig, derivs = parse_file(text)
    return [(d.name, check_derivation(sig, d)) for d in derivs]


def data_path(name):
    return os.path.join(os.path.dirname(__file__), "data", name)


def bundled_files():
    'names of the derivation files shipped with the package'
    root = data_path("")
    return sorted(f for f in os.listdir(root) if f.endswith(".elev"))


# ---------------------------------------------------------------------------
# Sup semantics

class SupModel:
    """Sup reading of a signature: wire words as power-lattice tensors.

    `sets` sends each object symbol to a finite point tuple; `cells` sends
    each generator name to pairs (source tuple, target tuple), a relation
    between the cartesian products of its wire sets.  A term denotes a
    join-preserving map between the tensors of its boundary words.
    """

    def __init__(self, sig, sets, cells):
        self.sig = sig
        self.sets = {}
        for a in sig.objects:
            if a not in sets:
                raise LatticeError("no point set for object %r" % a)
            self.sets[a] = tuple(sets[a])
        self.rel = {}
        for name, cell in sig.cells.items():
            if name not in cells:
                raise LatticeError("no model cell for %r" % name)
            fib = {}
            for u, v in cells[name]:
                u, v = tuple(u), tuple(v)
                if len(u) != len(cell.src) or len(v) != len(cell.dst):
                    raise LatticeError("cell %r pair %r -> %r has the wrong "
                                       "shape" % (name, u, v))
                for x, a in zip(u, cell.src):
                    if x not in self.sets[a]:
                        raise LatticeError("cell %r uses %r outside %r"
                                           % (name, x, a))
                for y, a in zip(v, cell.dst):
                    if y not in self.sets[a]:
                        raise LatticeError("cell %r uses %r outside %r"
                                           % (name, y, a))
                fib.setdefault(u, []).append(v)
            self.rel[name] = fib
        self._lat = {}

    def lattice(self, word):
        word = tuple(word)
        if word not in self._lat:
            self._lat[word] = PowerTensor(
                [PowerLattice(self.sets[a]) for a in word])
        return self._lat[word]

    def _fiber(self, cell):
        if cell.is_sym:
            a, b = cell.src
            return {(x, y): [(y, x)]
                    for x in self.sets[a] for y in self.sets[b]}
        return self.rel[cell.name]

    def row_map(self, word, off, cell):
        'the cell at the offset, identity wires elsewhere, as one linear map'
        src = self.lattice(word)
        m = len(cell.src)
        dst = self.lattice(word[:off] + cell.dst + word[off + m:])
        fib = self._fiber(cell)
        fibers = []
        for t in src.base:
            mask = 0
            for v in fib.get(t[off:off + m], ()):
                mask |= dst.singleton(t[:off] + tuple(v) + t[off + m:])
            fibers.append(mask)
        return RelMap(src, dst, fibers)

    def term_map(self, term):
        f = identity_map(self.lattice(term.dom))
        for (off, cell), w in zip(term.rows, term.words()):
            f = f.then(self.row_map(w, off, cell))
        return f

    def derivation_violation(self, deriv):
        'None when every listed term denotes the same map'
        base = self.term_map(deriv.terms[0])
        for j, t in enumerate(deriv.terms[1:], 1):
            if not base.equals(self.term_map(t)):
                return ("derivation %s: term %d denotes a different map"
                        % (deriv.name, j))
        return None


def duality_cells(points):
    'unit and counit of the self-duality of a power lattice, as model cells'
    eta, eps = duality_data(tuple(points))
    t = eta.dst
    unit = frozenset(((), c) for c in t.members(eta(1)))
    counit = frozenset((c, ()) for c in t.base if eps(t.singleton(c)))
    return unit, counit


def cyclic_cells(n):
    """Model data for the bundled derivation files, over the n-cycle.

    Every wire object carries the same n points.  Pairing cells send a pair
    to its cyclic difference, forward relation cells are the graph of the
    successor, reversed ones the graph of the predecessor, and the duality
    cells come straight off duality_data.
    """
    pts = tuple(range(n))
    unit, counit = duality_cells(pts)
    pair = frozenset((((a, b), ((b - a) % n,))) for a in pts for b in pts)
    succ = frozenset(((x,), ((x + 1) % n,)) for x in pts)
    pred = frozenset(((x,), ((x - 1) % n,)) for x in pts)
    ident = frozenset(((x,), (x,)) for x in pts)
    sets = {a: pts for a in ("X", "X'", "Y", "Y'", "R", "S", "G")}
    cells = {
        "lam": pair, "lam'": pair, "theta": pair, "mu": pair, "mu'": pair,
        "rel": succ, "p'": succ,
        "srel_op": pred, "q'_op": pred,
        "p_op": ident, "q": ident,
        "eta": unit, "eta'": unit, "eps'": counit,
    }
    return sets, cells
