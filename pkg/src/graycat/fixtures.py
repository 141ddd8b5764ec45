"""Fixture builders: bicharacter categories and walking shapes.

The bicharacter category BC(A, U, c) is the one-object, one-1-cell category
with 2-cells a finite abelian group A under #1, 3-cells A x U with #2 adding
U-labels, and the interchanger of b and a given by (a + b, c(b, a)).  Walking
shapes are free on a single diagram of generators; all remaining table
entries are forced by identity absorption.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Cell, FiniteGrayCategory, TABLE_ARITY
from .errors import ClosureError, StructuralError


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct sum of cyclic groups; elements are tuples of residues."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not all(isinstance(n, int) and n >= 1 for n in self.orders):
            raise StructuralError(f"bad cyclic orders {self.orders!r}")

    def elements(self):
        return list(itertools.product(*(range(n) for n in self.orders)))

    @property
    def zero(self):
        return tuple(0 for _ in self.orders)

    def add(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a):
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def label(self, a) -> str:
        return "_".join(str(x) for x in a)


def cyclic(n: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup((n,))


def _check_bilinear(A, U, c):
    for a, a2, b in itertools.product(A.elements(), A.elements(), A.elements()):
        if c[(A.add(a, a2), b)] != U.add(c[(a, b)], c[(a2, b)]):
            return ("left", a, a2, b)
        if c[(b, A.add(a, a2))] != U.add(c[(b, a)], c[(b, a2)]):
            return ("right", b, a, a2)
    return None


def build_bicharacter_gray(A: FiniteAbelianGroup, U: FiniteAbelianGroup,
                           c, name: str | None = None) -> FiniteGrayCategory:
    """The degenerate category of a bilinear pairing c: A x A -> U.

    `c` may be a callable or a mapping on pairs of A-elements; it is checked
    to be bilinear in each argument and rejected with a witness otherwise.
    """
    elems = A.elements()
    table = {(a, b): (c(a, b) if callable(c) else c.get((a, b), U.zero))
             for a in elems for b in elems}
    witness = _check_bilinear(A, U, table)
    if witness is not None:
        raise StructuralError(f"pairing is not bilinear, witness {witness}")

    def a_id(a):
        return "a" + A.label(a)

    def u_id(a, u):
        return a_id(a) + "u" + U.label(u)

    cells = {"o": Cell("o", 0), "e": Cell("e", 1, "o", "o")}
    order2, order3 = [], []
    for a in elems:
        cells[a_id(a)] = Cell(a_id(a), 2, "e", "e")
        order2.append(a_id(a))
    for a in elems:
        for u in U.elements():
            cells[u_id(a, u)] = Cell(u_id(a, u), 3, a_id(a), a_id(a))
            order3.append(u_id(a, u))

    ids = {"o": "e", "e": a_id(A.zero)}
    for a in elems:
        ids[a_id(a)] = u_id(a, U.zero)

    t = {k: {} for k in TABLE_ARITY}
    t["comp0"][("e", "e")] = "e"
    for a in elems:
        t["wl12"][("e", a_id(a))] = a_id(a)
        t["wr21"][(a_id(a), "e")] = a_id(a)
        for b in elems:
            t["comp1"][(a_id(b), a_id(a))] = a_id(A.add(a, b))
            t["tensor"][(a_id(b), a_id(a))] = u_id(A.add(a, b), table[(b, a)])
        for u in U.elements():
            t["wl13"][("e", u_id(a, u))] = u_id(a, u)
            t["wr31"][(u_id(a, u), "e")] = u_id(a, u)
            for b in elems:
                t["wm23"][(a_id(b), u_id(a, u))] = u_id(A.add(a, b), u)
                t["wm32"][(u_id(b, u), a_id(a))] = u_id(A.add(a, b), u)
            for v in U.elements():
                t["comp2"][(u_id(a, v), u_id(a, u))] = u_id(a, U.add(u, v))

    inv2 = {a_id(a): a_id(A.neg(a)) for a in elems}
    inv3 = {u_id(a, u): u_id(a, U.neg(u)) for a in elems for u in U.elements()}
    return FiniteGrayCategory(
        name or f"bc{'x'.join(map(str, A.orders))}",
        cells, (("o",), ("e",), tuple(order2), tuple(order3)), ids, t,
        inv2, inv3)


def bc2(nontrivial=True) -> FiniteGrayCategory:
    """BC(Z/2, Z/2) with c(1,1) = 1 (or the zero pairing)."""
    g = cyclic(2)
    c = (lambda a, b: ((a[0] * b[0]) % 2,)) if nontrivial else (lambda a, b: (0,))
    return build_bicharacter_gray(g, g, c, "bc2" if nontrivial else "bc2zero")


def bc4() -> FiniteGrayCategory:
    g = cyclic(4)
    return build_bicharacter_gray(g, g, lambda a, b: ((a[0] * b[0]) % 4,), "bc4")


# -- walking shapes ----------------------------------------------------------

def _saturate(cells, ids, tables):
    """Fill every boundary-compatible table entry forced by identity
    absorption, re-running until no rule fires."""
    cell = lambda c: cells[c]
    dim = lambda c: cell(c).dim
    idset = set(ids.values())

    def b0(c):
        s, t = c, c
        while dim(s) > 0:
            s, t = cell(s).src, cell(t).tgt
        return s, t

    def b1(c):
        s, t = c, c
        while dim(s) > 1:
            s, t = cell(s).src, cell(t).tgt
        return s, t

    by_dim = {k: [c for c in cells if dim(c) == k] for k in range(4)}
    rules = {
        "comp0": (by_dim[1], by_dim[1],
                  lambda a, b: cell(a).src == cell(b).tgt),
        "comp1": (by_dim[2], by_dim[2],
                  lambda a, b: cell(a).src == cell(b).tgt),
        "comp2": (by_dim[3], by_dim[3],
                  lambda a, b: cell(a).src == cell(b).tgt),
        "wl12": (by_dim[1], by_dim[2], lambda a, b: cell(a).src == b0(b)[1]),
        "wl13": (by_dim[1], by_dim[3], lambda a, b: cell(a).src == b0(b)[1]),
        "wr21": (by_dim[2], by_dim[1], lambda a, b: cell(b).tgt == b0(a)[0]),
        "wr31": (by_dim[3], by_dim[1], lambda a, b: cell(b).tgt == b0(a)[0]),
        "wm23": (by_dim[2], by_dim[3], lambda a, b: cell(a).src == b1(b)[1]),
        "wm32": (by_dim[3], by_dim[2], lambda a, b: cell(b).tgt == b1(a)[0]),
        "tensor": (by_dim[2], by_dim[2], lambda a, b: b0(b)[1] == b0(a)[0]),
    }

    def forced(table, a, b):
        ai, bi = a in idset, b in idset
        get = lambda t, x, y: tables[t].get((x, y))
        if table in ("comp0", "comp1", "comp2"):
            if bi:
                return a
            if ai:
                return b
        elif table in ("wl12", "wl13"):
            if ai:
                return b
            if bi:
                low = get("comp0" if table == "wl12" else "wl12", a, cell(b).src)
                return low if low is None else ids.get(low)
        elif table in ("wr21", "wr31"):
            if bi:
                return a
            if ai:
                low = get("comp0" if table == "wr21" else "wr21", cell(a).src, b)
                return low if low is None else ids.get(low)
        elif table == "wm23":
            if ai:
                return b
            if bi:
                low = get("comp1", a, cell(b).src)
                return low if low is None else ids.get(low)
        elif table == "wm32":
            if bi:
                return a
            if ai:
                low = get("comp1", cell(a).src, b)
                return low if low is None else ids.get(low)
        elif table == "tensor":
            if bi:
                low = get("wr21", a, cell(b).src)
                return low if low is None else ids.get(low)
            if ai:
                low = get("wl12", cell(a).src, b)
                return low if low is None else ids.get(low)
        return None

    changed = True
    while changed:
        changed = False
        for table, (lefts, rights, compat) in rules.items():
            for a in lefts:
                for b in rights:
                    if (a, b) in tables[table] or not compat(a, b):
                        continue
                    r = forced(table, a, b)
                    if r is not None:
                        tables[table][(a, b)] = r
                        changed = True
    for table, (lefts, rights, compat) in rules.items():
        for a in lefts:
            for b in rights:
                if compat(a, b) and (a, b) not in tables[table]:
                    raise ClosureError(
                        f"walking shape is not closed: missing {table}({a}, {b})")


def _walking(name, objects, gen1, gen2, gen3, explicit):
    """Assemble a free shape; gen* are (id, src, tgt) triples."""
    cells = {o: Cell(o, 0) for o in objects}
    order = [list(objects), [], [], []]
    for cid, s, t in gen1:
        cells[cid] = Cell(cid, 1, s, t)
        order[1].append(cid)
    ids = {}
    for o in objects:
        cid = "i" + o
        cells[cid] = Cell(cid, 1, o, o)
        order[1].append(cid)
        ids[o] = cid
    for cid, s, t in gen2:
        cells[cid] = Cell(cid, 2, s, t)
        order[2].append(cid)
    for f in list(order[1]):
        cid = "i" + f
        cells[cid] = Cell(cid, 2, f, f)
        order[2].append(cid)
        ids[f] = cid
    for cid, s, t in gen3:
        cells[cid] = Cell(cid, 3, s, t)
        order[3].append(cid)
    for p in list(order[2]):
        cid = "i" + p
        cells[cid] = Cell(cid, 3, p, p)
        order[3].append(cid)
        ids[p] = cid
    tables = {k: dict(explicit.get(k, {})) for k in TABLE_ARITY}
    _saturate(cells, ids, tables)
    inv2 = {c: c for c in order[2] if cells[c].src == cells[c].tgt
            and c in set(ids.values())}
    inv3 = {c: c for c in order[3] if c in set(ids.values())}
    return FiniteGrayCategory(name, cells, order, ids, tables, inv2, inv3)


def build_walking(k: int) -> FiniteGrayCategory:
    """The free category on a single k-cell; k = 0 gives the terminal one."""
    if k == 0:
        return _walking("one", ["x"], [], [], [], {})
    if k == 1:
        return _walking("walking1", ["x", "y"], [("f", "x", "y")], [], [], {})
    if k == 2:
        return _walking("walking2", ["x", "y"],
                        [("f0", "x", "y"), ("f1", "x", "y")],
                        [("p", "f0", "f1")], [], {})
    if k == 3:
        return _walking("walking3", ["x", "y"],
                        [("f0", "x", "y"), ("f1", "x", "y")],
                        [("p", "f0", "f1"), ("q", "f0", "f1")],
                        [("t", "p", "q")], {})
    raise StructuralError(f"no walking {k}-cell in dimensions 0..3")


def terminal_category() -> FiniteGrayCategory:
    return build_walking(0)


def walking_pair() -> FiniteGrayCategory:
    """Two composable 1-cells and their composite."""
    return _walking("wpair", ["x", "y", "z"],
                    [("f", "x", "y"), ("g", "y", "z"), ("gf", "x", "z")],
                    [], [],
                    {"comp0": {("g", "f"): "gf"}})


def walking_triple() -> FiniteGrayCategory:
    """Three composable 1-cells with all their composites."""
    return _walking("wtriple", ["x", "y", "z", "w"],
                    [("f", "x", "y"), ("g", "y", "z"), ("h", "z", "w"),
                     ("gf", "x", "z"), ("hg", "y", "w"), ("hgf", "x", "w")],
                    [], [],
                    {"comp0": {("g", "f"): "gf", ("h", "g"): "hg",
                               ("h", "gf"): "hgf", ("hg", "f"): "hgf"}})


def walking_whisker_left() -> FiniteGrayCategory:
    """A 2-cell whiskered on the right by an incoming 1-cell (c #0 f)."""
    return _walking(
        "wwhiskl", ["x", "y", "z"],
        [("f", "x", "y"), ("g0", "y", "z"), ("g1", "y", "z"),
         ("g0f", "x", "z"), ("g1f", "x", "z")],
        [("c", "g0", "g1"), ("cf", "g0f", "g1f")], [],
        {"comp0": {("g0", "f"): "g0f", ("g1", "f"): "g1f"},
         "wr21": {("c", "f"): "cf"}})


def walking_whisker_right() -> FiniteGrayCategory:
    """A 2-cell whiskered on the left by an outgoing 1-cell (g #0 d)."""
    return _walking(
        "wwhiskr", ["x", "y", "z"],
        [("f0", "x", "y"), ("f1", "x", "y"), ("g", "y", "z"),
         ("gf0", "x", "z"), ("gf1", "x", "z")],
        [("d", "f0", "f1"), ("gd", "gf0", "gf1")], [],
        {"comp0": {("g", "f0"): "gf0", ("g", "f1"): "gf1"},
         "wl12": {("g", "d"): "gd"}})


def empty_category() -> FiniteGrayCategory:
    return FiniteGrayCategory("empty", {}, ((), (), (), ()), {}, {})
