"""Cells, table-backed finite Gray-categories, the axiom validator, fixtures.

A category is stored as four finite cell sets plus explicit partial operation
tables.  Cell equality is identifier equality; all shipped categories are
table-total over boundary-compatible tuples, so every axiom instance is
decidable by exhaustive lookup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ClosureError, CoherenceError, StructuralError

# table name -> (dim of left arg, dim of right arg)
TABLE_ARITY = {
    "comp0": (1, 1),
    "comp1": (2, 2),
    "comp2": (3, 3),
    "wl12": (1, 2),
    "wr21": (2, 1),
    "wl13": (1, 3),
    "wr31": (3, 1),
    "wm23": (2, 3),
    "wm32": (3, 2),
    "tensor": (2, 2),
}

WHISKER_KINDS = ("wl12", "wr21", "wl13", "wr31", "wm23", "wm32")
COMPOSE_KINDS = ("comp0", "comp1", "comp2")


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int
    src: str | None = None
    tgt: str | None = None


@dataclass(frozen=True)
class Violation:
    axiom: str
    args: tuple
    expected: object
    actual: object

    def __str__(self):
        return (f"{self.axiom} at {self.args}: "
                f"expected {self.expected!r}, got {self.actual!r}")


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    # axiom name -> [instances checked, instances with a non-identity argument]
    coverage: dict[str, list[int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def count(self, axiom, args, nontrivial):
        c = self.coverage.setdefault(axiom, [0, 0])
        c[0] += 1
        if nontrivial:
            c[1] += 1

    def fail(self, axiom, args, expected, actual):
        self.violations.append(Violation(axiom, tuple(args), expected, actual))

    def check(self, axiom, args, expected, actual, nontrivial=True):
        self.count(axiom, args, nontrivial)
        if expected != actual:
            self.fail(axiom, args, expected, actual)

    def merge(self, other: "ValidationReport"):
        self.violations.extend(other.violations)
        for axiom, (total, nontriv) in other.coverage.items():
            c = self.coverage.setdefault(axiom, [0, 0])
            c[0] += total
            c[1] += nontriv

    def summary(self) -> str:
        if self.ok:
            return "ok"
        head = f"{len(self.violations)} violation(s)"
        lines = [str(v) for v in self.violations[:20]]
        if len(self.violations) > 20:
            lines.append(f"... {len(self.violations) - 20} more")
        return head + "\n" + "\n".join(lines)


class FiniteGrayCategory:
    """Finite Gray-category presented by explicit operation tables."""

    def __init__(self, name, cells, order, ids, tables, inv2=None, inv3=None):
        self.name = name
        self.cells: dict[str, Cell] = cells
        self.order: tuple[tuple[str, ...], ...] = tuple(tuple(o) for o in order)
        self.ids: dict[str, str] = ids
        self.tables: dict[str, dict[tuple[str, str], str]] = {
            t: dict(tables.get(t, {})) for t in TABLE_ARITY
        }
        self.inv2: dict[str, str] = dict(inv2 or {})
        self.inv3: dict[str, str] = dict(inv3 or {})
        self._identity_cells = frozenset(self.ids.values())
        self._inv_cache: dict[str, str | None] = {}
        self.check_structure()

    # -- structure ---------------------------------------------------------

    def check_structure(self):
        seen = set(self.cells)
        listed = [c for dim_ids in self.order for c in dim_ids]
        if sorted(listed) != sorted(seen):
            raise StructuralError(f"{self.name}: cell order does not list the cell set")
        for c in self.cells.values():
            if not 0 <= c.dim <= 3:
                raise StructuralError(f"cell {c.id}: dimension {c.dim} out of range")
            if c.dim == 0:
                if c.src is not None or c.tgt is not None:
                    raise StructuralError(f"0-cell {c.id} must not have boundaries")
                continue
            for end in (c.src, c.tgt):
                if end is None:
                    raise StructuralError(f"cell {c.id}: missing boundary")
                if end not in self.cells:
                    raise StructuralError(f"cell {c.id}: dangling boundary id {end!r}")
                if self.cells[end].dim != c.dim - 1:
                    raise StructuralError(
                        f"cell {c.id}: boundary {end!r} has wrong dimension")
        for k, target in self.ids.items():
            if k not in self.cells or target not in self.cells:
                raise StructuralError(f"identity table: dangling id {k!r} -> {target!r}")
        for tname, table in self.tables.items():
            for (a, b), r in table.items():
                if a not in self.cells or b not in self.cells or r not in self.cells:
                    raise StructuralError(f"{tname}: dangling id in entry ({a},{b})->{r}")
        for inv in (self.inv2, self.inv3):
            for a, b in inv.items():
                if a not in self.cells or b not in self.cells:
                    raise StructuralError(f"inverse table: dangling id {a!r} -> {b!r}")

    # -- basic accessors ----------------------------------------------------

    def dim(self, c: str) -> int:
        return self.cells[c].dim

    def src(self, c: str) -> str:
        s = self.cells[c].src
        if s is None:
            raise CoherenceError(f"{c} is a 0-cell and has no source")
        return s

    def tgt(self, c: str) -> str:
        t = self.cells[c].tgt
        if t is None:
            raise CoherenceError(f"{c} is a 0-cell and has no target")
        return t

    def boundary(self, c: str, k: int) -> tuple[str, str]:
        """The dimension-k (source, target) pair of a cell of dimension > k."""
        s, t = c, c
        while self.dim(s) > k:
            s, t = self.src(s), self.tgt(t)
        return s, t

    def dim_cells(self, k: int) -> tuple[str, ...]:
        return self.order[k]

    def is_id(self, c: str) -> bool:
        return c in self._identity_cells

    def nontrivial(self, *cells) -> bool:
        return any(not self.is_id(c) for c in cells if self.dim(c) > 0)

    # -- operations ---------------------------------------------------------

    def ident(self, c: str) -> str:
        if self.dim(c) == 3:
            raise CoherenceError(f"{c} is a 3-cell; no identities above top dimension")
        try:
            return self.ids[c]
        except KeyError:
            raise ClosureError(f"{self.name}: no identity entry for {c}") from None

    def _lookup(self, tname, a, b):
        try:
            return self.tables[tname][(a, b)]
        except KeyError:
            raise ClosureError(f"{self.name}: no {tname} entry for ({a}, {b})") from None

    def _table_op(self, tname, a, b, compat):
        da, db = TABLE_ARITY[tname]
        if self.dim(a) != da or self.dim(b) != db:
            raise CoherenceError(
                f"{tname}({a}, {b}): expected dimensions {da},{db}, "
                f"got {self.dim(a)},{self.dim(b)}")
        if not compat(a, b):
            raise CoherenceError(f"{tname}({a}, {b}): boundary mismatch")
        return self._lookup(tname, a, b)

    def comp0(self, g, f):
        return self._table_op("comp0", g, f, lambda g, f: self.src(g) == self.tgt(f))

    def comp1(self, q, p):
        return self._table_op("comp1", q, p, lambda q, p: self.src(q) == self.tgt(p))

    def comp2(self, d, g):
        return self._table_op("comp2", d, g, lambda d, g: self.src(d) == self.tgt(g))

    def whisker(self, kind, outer, inner):
        if kind not in WHISKER_KINDS:
            raise CoherenceError(f"unknown whisker kind {kind!r}")
        compat = {
            "wl12": lambda g, p: self.src(g) == self.boundary(p, 0)[1],
            "wl13": lambda g, p: self.src(g) == self.boundary(p, 0)[1],
            "wr21": lambda p, f: self.tgt(f) == self.boundary(p, 0)[0],
            "wr31": lambda p, f: self.tgt(f) == self.boundary(p, 0)[0],
            "wm23": lambda p, d: self.src(p) == self.boundary(d, 1)[1],
            "wm32": lambda d, p: self.tgt(p) == self.boundary(d, 1)[0],
        }[kind]
        return self._table_op(kind, outer, inner, compat)

    def tens(self, psi, phi):
        return self._table_op(
            "tensor", psi, phi,
            lambda psi, phi: self.boundary(phi, 0)[1] == self.boundary(psi, 0)[0])

    # dimension-dispatched pasting helpers; these make formula code read like
    # the diagram calculus (right argument is applied first throughout).

    def h0(self, a, b):
        """#0-composition or whisker of a after b, by dimension."""
        da, db = self.dim(a), self.dim(b)
        if (da, db) == (1, 1):
            return self.comp0(a, b)
        if da == 1 and db in (2, 3):
            return self.whisker("wl12" if db == 2 else "wl13", a, b)
        if db == 1 and da in (2, 3):
            return self.whisker("wr21" if da == 2 else "wr31", a, b)
        raise CoherenceError(f"h0: no #0 operation for dimensions {da},{db}")

    def v1(self, a, b):
        """#1-composition of a after b: 2- and 3-cells, including the derived
        double whisker of two 3-cells (well defined by hom interchange)."""
        da, db = self.dim(a), self.dim(b)
        if (da, db) == (2, 2):
            return self.comp1(a, b)
        if (da, db) == (2, 3):
            return self.whisker("wm23", a, b)
        if (da, db) == (3, 2):
            return self.whisker("wm32", a, b)
        if (da, db) == (3, 3):
            return self.comp2(self.whisker("wm32", a, self.tgt(b)),
                              self.whisker("wm23", self.src(a), b))
        raise CoherenceError(f"v1: no #1 operation for dimensions {da},{db}")

    def v2(self, a, b):
        return self.comp2(a, b)

    def inv(self, c: str) -> str | None:
        """Two-sided inverse of a 2- or 3-cell: stored witness, else search."""
        if self.dim(c) not in (2, 3):
            raise CoherenceError(f"inv({c}): only 2- and 3-cells can be inverted")
        if c in self._inv_cache:
            return self._inv_cache[c]
        witness = (self.inv2 if self.dim(c) == 2 else self.inv3).get(c)
        result = witness if witness is not None and self._is_inverse(c, witness) \
            else self._search_inverse(c)
        self._inv_cache[c] = result
        return result

    def _is_inverse(self, c, d):
        if self.dim(d) != self.dim(c):
            return False
        if (self.src(d), self.tgt(d)) != (self.tgt(c), self.src(c)):
            return False
        comp = self.comp1 if self.dim(c) == 2 else self.comp2
        id_src = self.ident(self.src(c))
        id_tgt = self.ident(self.tgt(c))
        try:
            return comp(d, c) == id_src and comp(c, d) == id_tgt
        except (CoherenceError, ClosureError):
            return False

    def _search_inverse(self, c):
        for d in self.dim_cells(self.dim(c)):
            if self._is_inverse(c, d):
                return d
        return None

    def inv_or_fail(self, c: str) -> str:
        d = self.inv(c)
        if d is None:
            raise ClosureError(f"{self.name}: cell {c} has no two-sided inverse")
        return d

    # -- mutation support (used by the axiom-sensitivity tests) -------------

    def with_entry(self, tname, key, value) -> "FiniteGrayCategory":
        """Copy of the category with one table entry rebound."""
        tables = {t: dict(tab) for t, tab in self.tables.items()}
        ids = dict(self.ids)
        inv2, inv3 = dict(self.inv2), dict(self.inv3)
        if tname == "ids":
            ids[key] = value
        elif tname == "inv2":
            inv2[key] = value
        elif tname == "inv3":
            inv3[key] = value
        else:
            tables[tname][key] = value
        return FiniteGrayCategory(self.name + "*", self.cells, self.order,
                                  ids, tables, inv2, inv3)


# -- public operation wrappers (module-level API) ---------------------------

def compose(cat: FiniteGrayCategory, op: str, left: str, right: str) -> str:
    """comp0_1, comp1_2 or comp2_3 table application with boundary checks."""
    table = {"comp0_1": "comp0", "comp1_2": "comp1", "comp2_3": "comp2"}.get(op, op)
    if table not in COMPOSE_KINDS:
        raise CoherenceError(f"unknown composition {op!r}")
    return {"comp0": cat.comp0, "comp1": cat.comp1, "comp2": cat.comp2}[table](left, right)


def whisker(cat: FiniteGrayCategory, kind: str, outer: str, inner: str) -> str:
    return cat.whisker(kind, outer, inner)


def tensor(cat: FiniteGrayCategory, psi: str, phi: str) -> str:
    return cat.tens(psi, phi)


def identity(cat: FiniteGrayCategory, c: str) -> str:
    return cat.ident(c)


def inverse(cat: FiniteGrayCategory, c: str) -> str | None:
    return cat.inv(c)


# -- the axiom validator -----------------------------------------------------

def _composable_pairs(cat, table):
    """Boundary-compatible argument tuples of a table, in canonical order."""
    da, db = TABLE_ARITY[table]
    compat = {
        "comp0": lambda a, b: cat.src(a) == cat.tgt(b),
        "comp1": lambda a, b: cat.src(a) == cat.tgt(b),
        "comp2": lambda a, b: cat.src(a) == cat.tgt(b),
        "wl12": lambda a, b: cat.src(a) == cat.boundary(b, 0)[1],
        "wl13": lambda a, b: cat.src(a) == cat.boundary(b, 0)[1],
        "wr21": lambda a, b: cat.tgt(b) == cat.boundary(a, 0)[0],
        "wr31": lambda a, b: cat.tgt(b) == cat.boundary(a, 0)[0],
        "wm23": lambda a, b: cat.src(a) == cat.boundary(b, 1)[1],
        "wm32": lambda a, b: cat.tgt(b) == cat.boundary(a, 1)[0],
        "tensor": lambda a, b: cat.boundary(b, 0)[1] == cat.boundary(a, 0)[0],
    }[table]
    for a in cat.dim_cells(da):
        for b in cat.dim_cells(db):
            if compat(a, b):
                yield a, b


def _forced_boundary(cat, table, a, b):
    """(src, tgt) the result of a table entry must carry."""
    if table == "comp0":
        return cat.src(b), cat.tgt(a)
    if table in ("comp1", "comp2"):
        return cat.src(b), cat.tgt(a)
    if table in ("wl12", "wl13"):
        lower = (lambda c: cat.comp0(a, c)) if table == "wl12" \
            else (lambda c: cat.whisker("wl12", a, c))
        return lower(cat.src(b)), lower(cat.tgt(b))
    if table in ("wr21", "wr31"):
        lower = (lambda c: cat.comp0(c, b)) if table == "wr21" \
            else (lambda c: cat.whisker("wr21", c, b))
        return lower(cat.src(a)), lower(cat.tgt(a))
    if table == "wm23":
        return cat.comp1(a, cat.src(b)), cat.comp1(a, cat.tgt(b))
    if table == "wm32":
        return cat.comp1(cat.src(a), b), cat.comp1(cat.tgt(a), b)
    if table == "tensor":
        f, fp = cat.src(b), cat.tgt(b)
        g, gp = cat.src(a), cat.tgt(a)
        return (cat.comp1(cat.whisker("wl12", gp, b), cat.whisker("wr21", a, f)),
                cat.comp1(cat.whisker("wr21", a, fp), cat.whisker("wl12", g, b)))
    raise AssertionError(table)


def validate_gray_category(cat: FiniteGrayCategory) -> ValidationReport:
    """Exhaustively check every Gray-category axiom instance.

    Structural defects raise StructuralError (already enforced at
    construction); everything else is reported with a minimal witness.
    """
    rep = ValidationReport()
    _check_globularity(cat, rep)
    _check_identity_tables(cat, rep)
    _check_table_closure(cat, rep)
    if rep.violations:
        # boundary/closure defects make the equational axioms unevaluable
        return rep
    _check_units(cat, rep)
    _check_associativity(cat, rep)
    _check_hom_2cat_laws(cat, rep)
    _check_whisker_functoriality(cat, rep)
    _check_whisker_comp0_compat(cat, rep)
    _check_tensor_axioms(cat, rep)
    _check_inverse_witnesses(cat, rep)
    return rep


def _guarded(rep, axiom, args, nontrivial, thunk, expected_thunk):
    """Evaluate both sides of an axiom instance, turning lookup failures
    into violations rather than aborting the sweep."""
    rep.count(axiom, args, nontrivial)
    try:
        expected = expected_thunk()
        actual = thunk()
    except (CoherenceError, ClosureError) as exc:
        rep.fail(axiom, args, "evaluable", f"{type(exc).__name__}: {exc}")
        return
    if expected != actual:
        rep.fail(axiom, args, expected, actual)


def _check_globularity(cat, rep):
    for k in (2, 3):
        for c in cat.dim_cells(k):
            rep.count("globularity", (c,), not cat.is_id(c))
            s, t = cat.src(c), cat.tgt(c)
            if (cat.src(s), cat.tgt(s)) != (cat.src(t), cat.tgt(t)):
                rep.fail("globularity", (c,),
                         (cat.src(t), cat.tgt(t)), (cat.src(s), cat.tgt(s)))


def _check_identity_tables(cat, rep):
    for k in (0, 1, 2):
        for c in cat.dim_cells(k):
            rep.count("identity table", (c,), not (k and cat.is_id(c)))
            e = cat.ids.get(c)
            if e is None:
                rep.fail("identity table", (c,), "an identity cell", "missing")
                continue
            if cat.dim(e) != k + 1 or cat.src(e) != c or cat.tgt(e) != c:
                rep.fail("identity table", (c,), f"id on {c}",
                         (e, cat.dim(e), cat.cells[e].src, cat.cells[e].tgt))


def _check_table_closure(cat, rep):
    for table in TABLE_ARITY:
        for a, b in _composable_pairs(cat, table):
            axiom = f"{table} boundary"
            rep.count(axiom, (a, b), cat.nontrivial(a, b))
            r = cat.tables[table].get((a, b))
            if r is None:
                rep.fail(f"{table} closure", (a, b), "a table entry", "missing")
                continue
            try:
                want = _forced_boundary(cat, table, a, b)
            except (CoherenceError, ClosureError) as exc:
                rep.fail(axiom, (a, b), "computable boundary", str(exc))
                continue
            da, db = TABLE_ARITY[table]
            rdim = 3 if table == "tensor" else max(da, db)
            got = (cat.cells[r].src, cat.cells[r].tgt)
            if cat.dim(r) != rdim or got != want:
                rep.fail(axiom, (a, b), want, (r, got))


def _check_units(cat, rep):
    for f in cat.dim_cells(1):
        nt = cat.nontrivial(f)
        _guarded(rep, "comp0 right unit", (f,), nt,
                 lambda: cat.comp0(f, cat.ident(cat.src(f))), lambda: f)
        _guarded(rep, "comp0 left unit", (f,), nt,
                 lambda: cat.comp0(cat.ident(cat.tgt(f)), f), lambda: f)
    for p in cat.dim_cells(2):
        nt = cat.nontrivial(p)
        _guarded(rep, "comp1 right unit", (p,), nt,
                 lambda: cat.comp1(p, cat.ident(cat.src(p))), lambda: p)
        _guarded(rep, "comp1 left unit", (p,), nt,
                 lambda: cat.comp1(cat.ident(cat.tgt(p)), p), lambda: p)
        x, y = cat.boundary(p, 0)
        _guarded(rep, "whisker unit 1-cell", (p,), nt,
                 lambda: cat.whisker("wl12", cat.ident(y), p), lambda: p)
        _guarded(rep, "whisker unit 1-cell", (p,), nt,
                 lambda: cat.whisker("wr21", p, cat.ident(x)), lambda: p)
    for g in cat.dim_cells(3):
        nt = cat.nontrivial(g)
        _guarded(rep, "comp2 right unit", (g,), nt,
                 lambda: cat.comp2(g, cat.ident(cat.src(g))), lambda: g)
        _guarded(rep, "comp2 left unit", (g,), nt,
                 lambda: cat.comp2(cat.ident(cat.tgt(g)), g), lambda: g)
        x, y = cat.boundary(g, 0)
        _guarded(rep, "whisker unit 1-cell", (g,), nt,
                 lambda: cat.whisker("wl13", cat.ident(y), g), lambda: g)
        _guarded(rep, "whisker unit 1-cell", (g,), nt,
                 lambda: cat.whisker("wr31", g, cat.ident(x)), lambda: g)
        b1, b1t = cat.boundary(g, 1)
        _guarded(rep, "whisker unit 2-cell", (g,), nt,
                 lambda: cat.whisker("wm23", cat.ident(b1t), g), lambda: g)
        _guarded(rep, "whisker unit 2-cell", (g,), nt,
                 lambda: cat.whisker("wm32", g, cat.ident(b1)), lambda: g)
    # whiskering an identity returns the identity on the whiskered cell
    for g, p in _composable_pairs(cat, "wl12"):
        _guarded(rep, "whisker of identity", (g, p), cat.nontrivial(g, p),
                 lambda: cat.whisker("wl13", g, cat.ident(p)),
                 lambda: cat.ident(cat.whisker("wl12", g, p)))
    for p, f in _composable_pairs(cat, "wr21"):
        _guarded(rep, "whisker of identity", (p, f), cat.nontrivial(p, f),
                 lambda: cat.whisker("wr31", cat.ident(p), f),
                 lambda: cat.ident(cat.whisker("wr21", p, f)))
    for g, f in _composable_pairs(cat, "comp0"):
        _guarded(rep, "whisker of identity", (g, f), cat.nontrivial(g, f),
                 lambda: cat.whisker("wl12", g, cat.ident(f)),
                 lambda: cat.ident(cat.comp0(g, f)))
        _guarded(rep, "whisker of identity", (g, f), cat.nontrivial(g, f),
                 lambda: cat.whisker("wr21", cat.ident(g), f),
                 lambda: cat.ident(cat.comp0(g, f)))
    for q, p in _composable_pairs(cat, "comp1"):
        _guarded(rep, "whisker of identity", (q, p), cat.nontrivial(q, p),
                 lambda: cat.whisker("wm23", q, cat.ident(p)),
                 lambda: cat.ident(cat.comp1(q, p)))
        _guarded(rep, "whisker of identity", (q, p), cat.nontrivial(q, p),
                 lambda: cat.whisker("wm32", cat.ident(q), p),
                 lambda: cat.ident(cat.comp1(q, p)))


def _check_associativity(cat, rep):
    for table in COMPOSE_KINDS:
        op = {"comp0": cat.comp0, "comp1": cat.comp1, "comp2": cat.comp2}[table]
        k = TABLE_ARITY[table][0]
        for a, b in _composable_pairs(cat, table):
            for c in cat.dim_cells(k):
                if cat.src(b) != cat.tgt(c):
                    continue
                _guarded(rep, f"{table} associativity", (a, b, c),
                         cat.nontrivial(a, b, c),
                         lambda: op(op(a, b), c), lambda: op(a, op(b, c)))


def _check_hom_2cat_laws(cat, rep):
    # functoriality of the mid-whiskers over #2
    for d2, d1 in _composable_pairs(cat, "comp2"):
        for p in cat.dim_cells(2):
            if cat.src(p) == cat.boundary(d1, 1)[1]:
                _guarded(rep, "mid-whisker over comp2", (p, d2, d1),
                         cat.nontrivial(p, d2, d1),
                         lambda: cat.whisker("wm23", p, cat.comp2(d2, d1)),
                         lambda: cat.comp2(cat.whisker("wm23", p, d2),
                                           cat.whisker("wm23", p, d1)))
            if cat.tgt(p) == cat.boundary(d1, 1)[0]:
                _guarded(rep, "mid-whisker over comp2", (d2, d1, p),
                         cat.nontrivial(p, d2, d1),
                         lambda: cat.whisker("wm32", cat.comp2(d2, d1), p),
                         lambda: cat.comp2(cat.whisker("wm32", d2, p),
                                           cat.whisker("wm32", d1, p)))
    # mid-whiskers compose like the 2-cells they whisker by
    for q, p in _composable_pairs(cat, "comp1"):
        for d in cat.dim_cells(3):
            if cat.src(p) == cat.boundary(d, 1)[1]:
                _guarded(rep, "mid-whisker composition", (q, p, d),
                         cat.nontrivial(q, p, d),
                         lambda: cat.whisker("wm23", q, cat.whisker("wm23", p, d)),
                         lambda: cat.whisker("wm23", cat.comp1(q, p), d))
            if cat.tgt(q) == cat.boundary(d, 1)[0]:
                _guarded(rep, "mid-whisker composition", (d, q, p),
                         cat.nontrivial(q, p, d),
                         lambda: cat.whisker("wm32", cat.whisker("wm32", d, q), p),
                         lambda: cat.whisker("wm32", d, cat.comp1(q, p)))
    for d in cat.dim_cells(3):
        for p in cat.dim_cells(2):
            for q in cat.dim_cells(2):
                if cat.tgt(p) == cat.boundary(d, 1)[0] and \
                        cat.src(q) == cat.boundary(d, 1)[1]:
                    _guarded(rep, "mid-whisker composition", (q, d, p),
                             cat.nontrivial(q, d, p),
                             lambda: cat.whisker("wm23", q, cat.whisker("wm32", d, p)),
                             lambda: cat.whisker("wm32", cat.whisker("wm23", q, d), p))
    # interchange of #1 and #2 inside each hom
    for g1 in cat.dim_cells(3):
        for g2 in cat.dim_cells(3):
            if cat.boundary(g2, 1)[0] != cat.boundary(g1, 1)[1]:
                continue
            _guarded(rep, "hom interchange", (g2, g1), cat.nontrivial(g2, g1),
                     lambda: cat.comp2(cat.whisker("wm32", g2, cat.tgt(g1)),
                                       cat.whisker("wm23", cat.src(g2), g1)),
                     lambda: cat.comp2(cat.whisker("wm23", cat.tgt(g2), g1),
                                       cat.whisker("wm32", g2, cat.src(g1))))


def _check_whisker_functoriality(cat, rep):
    for g in cat.dim_cells(1):
        for q, p in _composable_pairs(cat, "comp1"):
            if cat.src(g) != cat.boundary(p, 0)[1]:
                continue
            _guarded(rep, "left whisker functorial", (g, q, p),
                     cat.nontrivial(g, q, p),
                     lambda: cat.whisker("wl12", g, cat.comp1(q, p)),
                     lambda: cat.comp1(cat.whisker("wl12", g, q),
                                       cat.whisker("wl12", g, p)))
        for d2, d1 in _composable_pairs(cat, "comp2"):
            if cat.src(g) != cat.boundary(d1, 0)[1]:
                continue
            _guarded(rep, "left whisker functorial", (g, d2, d1),
                     cat.nontrivial(g, d2, d1),
                     lambda: cat.whisker("wl13", g, cat.comp2(d2, d1)),
                     lambda: cat.comp2(cat.whisker("wl13", g, d2),
                                       cat.whisker("wl13", g, d1)))
        for p, d in _composable_pairs(cat, "wm23"):
            if cat.src(g) != cat.boundary(p, 0)[1]:
                continue
            _guarded(rep, "left whisker functorial", (g, p, d),
                     cat.nontrivial(g, p, d),
                     lambda: cat.whisker("wl13", g, cat.whisker("wm23", p, d)),
                     lambda: cat.whisker("wm23", cat.whisker("wl12", g, p),
                                         cat.whisker("wl13", g, d)))
        for d, p in _composable_pairs(cat, "wm32"):
            if cat.src(g) != cat.boundary(p, 0)[1]:
                continue
            _guarded(rep, "left whisker functorial", (g, d, p),
                     cat.nontrivial(g, d, p),
                     lambda: cat.whisker("wl13", g, cat.whisker("wm32", d, p)),
                     lambda: cat.whisker("wm32", cat.whisker("wl13", g, d),
                                         cat.whisker("wl12", g, p)))
    for f in cat.dim_cells(1):
        for q, p in _composable_pairs(cat, "comp1"):
            if cat.tgt(f) != cat.boundary(p, 0)[0]:
                continue
            _guarded(rep, "right whisker functorial", (q, p, f),
                     cat.nontrivial(f, q, p),
                     lambda: cat.whisker("wr21", cat.comp1(q, p), f),
                     lambda: cat.comp1(cat.whisker("wr21", q, f),
                                       cat.whisker("wr21", p, f)))
        for d2, d1 in _composable_pairs(cat, "comp2"):
            if cat.tgt(f) != cat.boundary(d1, 0)[0]:
                continue
            _guarded(rep, "right whisker functorial", (d2, d1, f),
                     cat.nontrivial(f, d2, d1),
                     lambda: cat.whisker("wr31", cat.comp2(d2, d1), f),
                     lambda: cat.comp2(cat.whisker("wr31", d2, f),
                                       cat.whisker("wr31", d1, f)))
        for p, d in _composable_pairs(cat, "wm23"):
            if cat.tgt(f) != cat.boundary(p, 0)[0]:
                continue
            _guarded(rep, "right whisker functorial", (p, d, f),
                     cat.nontrivial(f, p, d),
                     lambda: cat.whisker("wr31", cat.whisker("wm23", p, d), f),
                     lambda: cat.whisker("wm23", cat.whisker("wr21", p, f),
                                         cat.whisker("wr31", d, f)))
        for d, p in _composable_pairs(cat, "wm32"):
            if cat.tgt(f) != cat.boundary(p, 0)[0]:
                continue
            _guarded(rep, "right whisker functorial", (d, p, f),
                     cat.nontrivial(f, d, p),
                     lambda: cat.whisker("wr31", cat.whisker("wm32", d, p), f),
                     lambda: cat.whisker("wm32", cat.whisker("wr31", d, f),
                                         cat.whisker("wr21", p, f)))


def _check_whisker_comp0_compat(cat, rep):
    for h, g in _composable_pairs(cat, "comp0"):
        for k, table in ((2, "wl12"), (3, "wl13")):
            for p in cat.dim_cells(k):
                if cat.src(g) != cat.boundary(p, 0)[1]:
                    continue
                _guarded(rep, "whisker vs comp0", (h, g, p),
                         cat.nontrivial(h, g, p),
                         lambda: cat.whisker(table, cat.comp0(h, g), p),
                         lambda: cat.whisker(table, h, cat.whisker(table, g, p)))
    for g, f in _composable_pairs(cat, "comp0"):
        for k, table in ((2, "wr21"), (3, "wr31")):
            for p in cat.dim_cells(k):
                if cat.tgt(g) != cat.boundary(p, 0)[0]:
                    continue
                _guarded(rep, "whisker vs comp0", (p, g, f),
                         cat.nontrivial(g, f, p),
                         lambda: cat.whisker(table, p, cat.comp0(g, f)),
                         lambda: cat.whisker(table, cat.whisker(table, p, g), f))
    for g in cat.dim_cells(1):
        for f in cat.dim_cells(1):
            for k, left, right in ((2, "wl12", "wr21"), (3, "wl13", "wr31")):
                for p in cat.dim_cells(k):
                    if cat.src(g) != cat.boundary(p, 0)[1] or \
                            cat.tgt(f) != cat.boundary(p, 0)[0]:
                        continue
                    _guarded(rep, "whisker vs comp0", (g, p, f),
                             cat.nontrivial(g, f, p),
                             lambda: cat.whisker(right, cat.whisker(left, g, p), f),
                             lambda: cat.whisker(left, g, cat.whisker(right, p, f)))


def _check_tensor_axioms(cat, rep):
    for psi, phi in _composable_pairs(cat, "tensor"):
        if cat.is_id(phi):
            _guarded(rep, "tensor unit", (psi, phi), cat.nontrivial(psi),
                     lambda: cat.tens(psi, phi),
                     lambda: cat.ident(cat.whisker("wr21", psi, cat.src(phi))))
        if cat.is_id(psi):
            _guarded(rep, "tensor unit", (psi, phi), cat.nontrivial(phi),
                     lambda: cat.tens(psi, phi),
                     lambda: cat.ident(cat.whisker("wl12", cat.src(psi), phi)))
    # compatibility with #1 in the left argument
    for q, p in _composable_pairs(cat, "comp1"):
        for phi in cat.dim_cells(2):
            if cat.boundary(phi, 0)[1] != cat.boundary(p, 0)[0]:
                continue
            f, fp = cat.src(phi), cat.tgt(phi)
            _guarded(rep, "tensor vs comp1 left", (q, p, phi),
                     cat.nontrivial(q, p, phi),
                     lambda: cat.tens(cat.comp1(q, p), phi),
                     lambda: cat.comp2(
                         cat.whisker("wm23", cat.whisker("wr21", q, fp),
                                     cat.tens(p, phi)),
                         cat.whisker("wm32", cat.tens(q, phi),
                                     cat.whisker("wr21", p, f))))
    # compatibility with #1 in the right argument
    for q, p in _composable_pairs(cat, "comp1"):
        for psi in cat.dim_cells(2):
            if cat.boundary(p, 0)[1] != cat.boundary(psi, 0)[0]:
                continue
            g, gp = cat.src(psi), cat.tgt(psi)
            _guarded(rep, "tensor vs comp1 right", (psi, q, p),
                     cat.nontrivial(psi, q, p),
                     lambda: cat.tens(psi, cat.comp1(q, p)),
                     lambda: cat.comp2(
                         cat.whisker("wm32", cat.tens(psi, q),
                                     cat.whisker("wl12", g, p)),
                         cat.whisker("wm23", cat.whisker("wl12", gp, q),
                                     cat.tens(psi, p))))
    # naturality with respect to 3-cells, in each argument
    for d in cat.dim_cells(3):
        phi, phit = cat.src(d), cat.tgt(d)
        for psi in cat.dim_cells(2):
            if cat.boundary(phi, 0)[1] == cat.boundary(psi, 0)[0]:
                f, fp = cat.src(phi), cat.tgt(phi)
                g, gp = cat.src(psi), cat.tgt(psi)
                _guarded(rep, "tensor naturality right", (psi, d),
                         cat.nontrivial(psi, d),
                         lambda: cat.comp2(
                             cat.tens(psi, phit),
                             cat.whisker("wm32", cat.whisker("wl13", gp, d),
                                         cat.whisker("wr21", psi, f))),
                         lambda: cat.comp2(
                             cat.whisker("wm23", cat.whisker("wr21", psi, fp),
                                         cat.whisker("wl13", g, d)),
                             cat.tens(psi, phi)))
            if cat.boundary(psi, 0)[1] == cat.boundary(phi, 0)[0]:
                # here d runs over the left (psi-side) argument
                f, fp = cat.src(psi), cat.tgt(psi)
                g, gp = cat.src(phi), cat.tgt(phi)
                _guarded(rep, "tensor naturality left", (d, psi),
                         cat.nontrivial(psi, d),
                         lambda: cat.comp2(
                             cat.tens(phit, psi),
                             cat.whisker("wm23", cat.whisker("wl12", gp, psi),
                                         cat.whisker("wr31", d, f))),
                         lambda: cat.comp2(
                             cat.whisker("wm32", cat.whisker("wr31", d, fp),
                                         cat.whisker("wl12", g, psi)),
                             cat.tens(phi, psi)))


def _check_inverse_witnesses(cat, rep):
    for table in (cat.inv2, cat.inv3):
        for a, b in table.items():
            rep.count("inverse witness", (a,), cat.nontrivial(a))
            if not cat._is_inverse(a, b):
                rep.fail("inverse witness", (a,), f"two-sided inverse of {a}", b)


def enumerate_single_entry_mutations(cat: FiniteGrayCategory):
    """All single-entry rebindings to a different cell of the same dimension.

    Yields (table name, key, original, replacement) in deterministic order.
    """
    for table in sorted(TABLE_ARITY):
        da, db = TABLE_ARITY[table]
        rdim = 3 if table == "tensor" else max(da, db)
        for key in sorted(cat.tables[table]):
            old = cat.tables[table][key]
            for new in cat.dim_cells(rdim):
                if new != old:
                    yield table, key, old, new
    for key in sorted(cat.ids):
        old = cat.ids[key]
        for new in cat.dim_cells(cat.dim(key) + 1):
            if new != old:
                yield "ids", key, old, new
    for name, table in (("inv2", cat.inv2), ("inv3", cat.inv3)):
        for key in sorted(table):
            old = table[key]
            for new in cat.dim_cells(cat.dim(key)):
                if new != old:
                    yield name, key, old, new
