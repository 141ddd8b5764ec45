"""The graycat v1 text format.

Line-oriented, whitespace-separated tokens, `#` comments.  A document is a
sequence of named sections (category, functor, pstransf, psmod, perturbation,
dictionary); later sections refer to earlier ones by name.  Serialization
uses one canonical order throughout, so a parsed canonical file re-serializes
byte-identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Cell, FiniteGrayCategory, TABLE_ARITY
from .errors import ParseError, StructuralError
from .functors import GrayFunctor
from .mapspace import MappingSpace
from .transfors import Perturbation, PseudoModification, PseudoTransformation

VERSION_LINE = "graycat v1"
SECTION_KINDS = ("category", "functor", "pstransf", "psmod",
                 "perturbation", "dictionary")

_WHISK_TOKENS = {"wl12": "l12", "wr21": "r21", "wl13": "l13",
                 "wr31": "r31", "wm23": "m23", "wm32": "m32"}
_WHISK_NAMES = {v: k for k, v in _WHISK_TOKENS.items()}


@dataclass
class Section:
    kind: str
    name: str
    obj: object


@dataclass
class Document:
    sections: list[Section] = field(default_factory=list)

    def add(self, kind, name, obj):
        if kind not in SECTION_KINDS:
            raise StructuralError(f"unknown section kind {kind!r}")
        if any(s.name == name and s.kind == kind for s in self.sections):
            raise StructuralError(f"duplicate section {kind} {name!r}")
        self.sections.append(Section(kind, name, obj))
        return self

    def find(self, kind, name):
        for s in self.sections:
            if s.kind == kind and s.name == name:
                return s.obj
        raise StructuralError(f"no section {kind} {name!r}")

    def __eq__(self, other):
        return isinstance(other, Document) and serialize(self) == serialize(other)


# -- serialization ------------------------------------------------------------

def _ser_category(out, name, cat: FiniteGrayCategory):
    out.append(f"[category {name}]")
    for k in range(4):
        out.append(f"cells {k}: " + " ".join(cat.dim_cells(k)))
    for k in (1, 2, 3):
        for c in cat.dim_cells(k):
            out.append(f"src {c} = {cat.src(c)}")
            out.append(f"tgt {c} = {cat.tgt(c)}")
    for k in (0, 1, 2):
        for c in cat.dim_cells(k):
            if c in cat.ids:
                out.append(f"id {c} = {cat.ids[c]}")
    for table in ("comp0", "comp1", "comp2"):
        for (a, b), r in sorted(cat.tables[table].items()):
            out.append(f"{table} {a} {b} = {r}")
    for table in ("wl12", "wr21", "wl13", "wr31", "wm23", "wm32"):
        for (a, b), r in sorted(cat.tables[table].items()):
            out.append(f"whisk {_WHISK_TOKENS[table]} {a} {b} = {r}")
    for (a, b), r in sorted(cat.tables["tensor"].items()):
        out.append(f"tensor {a} {b} = {r}")
    for inv in (cat.inv2, cat.inv3):
        for a, b in sorted(inv.items()):
            out.append(f"inv {a} = {b}")


def _name_of(doc, kind, obj, eq):
    for s in doc.sections:
        if s.kind == kind and eq(s.obj, obj):
            return s.name
    raise StructuralError(f"serialization needs an earlier {kind} section "
                          f"for a referenced object")


def _ser_functor(out, doc, name, F: GrayFunctor):
    out.append(f"[functor {name}]")
    out.append(f"dom {_name_of(doc, 'category', F.dom, lambda a, b: a is b)}")
    out.append(f"cod {_name_of(doc, 'category', F.cod, lambda a, b: a is b)}")
    for k in range(4):
        for a, b in F.maps[k]:
            out.append(f"map{k} {a} = {b}")


def _ser_pstransf(out, doc, name, t: PseudoTransformation):
    out.append(f"[pstransf {name}]")
    out.append(f"dom {_name_of(doc, 'functor', t.dom, lambda a, b: a == b)}")
    out.append(f"cod {_name_of(doc, 'functor', t.cod, lambda a, b: a == b)}")
    for label, items in (("at0", t.at0), ("at1", t.at1), ("at2", t.at2)):
        for a, b in items:
            out.append(f"{label} {a} = {b}")
    for (fp, f), r in t.coc:
        out.append(f"coc {fp} {f} = {r}")


def _ser_psmod(out, doc, name, m: PseudoModification):
    out.append(f"[psmod {name}]")
    out.append(f"dom {_name_of(doc, 'pstransf', m.dom, lambda a, b: a == b)}")
    out.append(f"cod {_name_of(doc, 'pstransf', m.cod, lambda a, b: a == b)}")
    for label, items in (("at0", m.at0), ("at1", m.at1)):
        for a, b in items:
            out.append(f"{label} {a} = {b}")


def _ser_perturbation(out, doc, name, p: Perturbation):
    out.append(f"[perturbation {name}]")
    out.append(f"dom {_name_of(doc, 'psmod', p.dom, lambda a, b: a == b)}")
    out.append(f"cod {_name_of(doc, 'psmod', p.cod, lambda a, b: a == b)}")
    for a, b in p.at0:
        out.append(f"at0 {a} = {b}")


def _ser_dictionary(out, doc, name, d):
    space_name, entries = d
    out.append(f"[dictionary {name}]")
    out.append(f"space {space_name}")
    for k in range(4):
        for cell, secname in entries[k]:
            out.append(f"dim{k} {cell} = {secname}")


def serialize(doc: Document) -> str:
    out = [VERSION_LINE]
    for s in doc.sections:
        out.append("")
        {"category": lambda: _ser_category(out, s.name, s.obj),
         "functor": lambda: _ser_functor(out, doc, s.name, s.obj),
         "pstransf": lambda: _ser_pstransf(out, doc, s.name, s.obj),
         "psmod": lambda: _ser_psmod(out, doc, s.name, s.obj),
         "perturbation": lambda: _ser_perturbation(out, doc, s.name, s.obj),
         "dictionary": lambda: _ser_dictionary(out, doc, s.name, s.obj),
         }[s.kind]()
    return "\n".join(out) + "\n"


# -- parsing ------------------------------------------------------------------

def _tokens(text):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        yield n, line.split()


def _eq_split(toks, n, want_lhs):
    if "=" not in toks:
        raise ParseError("expected '=' in table line", n)
    i = toks.index("=")
    lhs, rhs = toks[:i], toks[i + 1:]
    if len(lhs) != want_lhs or len(rhs) != 1:
        raise ParseError(f"malformed line: {' '.join(toks)}", n)
    return lhs, rhs[0]


class _CategoryBuilder:
    def __init__(self, name, line):
        self.name, self.line = name, line
        self.dims = {k: [] for k in range(4)}
        self.src, self.tgt, self.ids = {}, {}, {}
        self.tables = {t: {} for t in TABLE_ARITY}
        self.inv = {}

    def feed(self, n, toks):
        head = toks[0]
        if head == "cells":
            if len(toks) < 2 or not toks[1].endswith(":"):
                raise ParseError("malformed cells line", n)
            try:
                k = int(toks[1][:-1])
                self.dims[k].extend(toks[2:])
            except (ValueError, KeyError):
                raise ParseError("cells dimension must be 0..3", n) from None
        elif head in ("src", "tgt"):
            lhs, rhs = _eq_split(toks[1:], n, 1)
            (self.src if head == "src" else self.tgt)[lhs[0]] = rhs
        elif head == "id":
            lhs, rhs = _eq_split(toks[1:], n, 1)
            self.ids[lhs[0]] = rhs
        elif head in ("comp0", "comp1", "comp2", "tensor"):
            lhs, rhs = _eq_split(toks[1:], n, 2)
            self.tables[head][(lhs[0], lhs[1])] = rhs
        elif head == "whisk":
            if len(toks) < 2 or toks[1] not in _WHISK_NAMES:
                raise ParseError(f"unknown whisker kind in: {' '.join(toks)}", n)
            lhs, rhs = _eq_split(toks[2:], n, 2)
            self.tables[_WHISK_NAMES[toks[1]]][(lhs[0], lhs[1])] = rhs
        elif head == "inv":
            lhs, rhs = _eq_split(toks[1:], n, 1)
            self.inv[lhs[0]] = rhs
        else:
            raise ParseError(f"unknown category line {head!r}", n)

    def build(self):
        cells = {}
        for k in range(4):
            for c in self.dims[k]:
                if k == 0:
                    cells[c] = Cell(c, 0)
                else:
                    if c not in self.src or c not in self.tgt:
                        raise ParseError(
                            f"cell {c!r} is missing src/tgt", self.line)
                    cells[c] = Cell(c, k, self.src[c], self.tgt[c])
        inv2 = {a: b for a, b in self.inv.items()
                if a in cells and cells[a].dim == 2}
        inv3 = {a: b for a, b in self.inv.items()
                if a in cells and cells[a].dim == 3}
        try:
            return FiniteGrayCategory(self.name, cells,
                                      tuple(tuple(self.dims[k]) for k in range(4)),
                                      self.ids, self.tables, inv2, inv3)
        except StructuralError as exc:
            raise ParseError(str(exc), self.line) from None


class _MapBuilder:
    def __init__(self, kind, name, line):
        self.kind, self.name, self.line = kind, name, line
        self.dom = self.cod = None
        self.maps = {f"map{k}": {} for k in range(4)}
        self.at = {"at0": {}, "at1": {}, "at2": {}}
        self.coc = {}

    def feed(self, n, toks):
        head = toks[0]
        if head in ("dom", "cod"):
            if len(toks) != 2:
                raise ParseError("dom/cod line wants one name", n)
            setattr(self, head, toks[1])
        elif head in self.maps and self.kind == "functor":
            lhs, rhs = _eq_split(toks[1:], n, 1)
            self.maps[head][lhs[0]] = rhs
        elif head in self.at and self.kind in ("pstransf", "psmod", "perturbation"):
            lhs, rhs = _eq_split(toks[1:], n, 1)
            self.at[head][lhs[0]] = rhs
        elif head == "coc" and self.kind == "pstransf":
            lhs, rhs = _eq_split(toks[1:], n, 2)
            self.coc[(lhs[0], lhs[1])] = rhs
        else:
            raise ParseError(f"unexpected {head!r} in {self.kind} section", n)

    def build(self, doc):
        if self.dom is None or self.cod is None:
            raise ParseError(f"{self.kind} {self.name!r} needs dom and cod",
                             self.line)
        ref_kind = {"functor": "category", "pstransf": "functor",
                    "psmod": "pstransf", "perturbation": "psmod"}[self.kind]
        try:
            dom = doc.find(ref_kind, self.dom)
            cod = doc.find(ref_kind, self.cod)
        except StructuralError as exc:
            raise ParseError(str(exc), self.line) from None
        try:
            if self.kind == "functor":
                return GrayFunctor.of(dom, cod, *(self.maps[f"map{k}"]
                                                  for k in range(4)),
                                      name=self.name)
            if self.kind == "pstransf":
                return PseudoTransformation.of(dom, cod, self.at["at0"],
                                               self.at["at1"], self.at["at2"],
                                               self.coc)
            if self.kind == "psmod":
                return PseudoModification.of(dom, cod, self.at["at0"],
                                             self.at["at1"])
            return Perturbation.of(dom, cod, self.at["at0"])
        except StructuralError as exc:
            raise ParseError(str(exc), self.line) from None


class _DictBuilder:
    def __init__(self, name, line):
        self.name, self.line = name, line
        self.space = None
        self.entries = {k: [] for k in range(4)}

    def feed(self, n, toks):
        if toks[0] == "space":
            if len(toks) != 2:
                raise ParseError("space line wants one name", n)
            self.space = toks[1]
        elif toks[0] in ("dim0", "dim1", "dim2", "dim3"):
            lhs, rhs = _eq_split(toks[1:], n, 1)
            self.entries[int(toks[0][3])].append((lhs[0], rhs))
        else:
            raise ParseError(f"unexpected {toks[0]!r} in dictionary section", n)

    def build(self, doc):
        if self.space is None:
            raise ParseError("dictionary section needs a space line", self.line)
        return (self.space, {k: list(v) for k, v in self.entries.items()})


def parse(text: str) -> Document:
    doc = Document()
    builder = None
    lines = list(_tokens(text))
    if not lines or lines[0][1] != VERSION_LINE.split():
        raise ParseError(f"first line must be {VERSION_LINE!r}",
                         lines[0][0] if lines else 1)

    def finish():
        nonlocal builder
        if builder is None:
            return
        if isinstance(builder, _CategoryBuilder):
            doc.add("category", builder.name, builder.build())
        elif isinstance(builder, _MapBuilder):
            doc.add(builder.kind, builder.name, builder.build(doc))
        else:
            doc.add("dictionary", builder.name, builder.build(doc))
        builder = None

    for n, toks in lines[1:]:
        if toks[0].startswith("["):
            finish()
            header = " ".join(toks)
            if not header.endswith("]"):
                raise ParseError("unterminated section header", n)
            parts = header[1:-1].split()
            if len(parts) != 2 or parts[0] not in SECTION_KINDS:
                raise ParseError(f"bad section header {header!r}", n)
            kind, name = parts
            if kind == "category":
                builder = _CategoryBuilder(name, n)
            elif kind == "dictionary":
                builder = _DictBuilder(name, n)
            else:
                builder = _MapBuilder(kind, name, n)
        else:
            if builder is None:
                raise ParseError(f"content before any section: {' '.join(toks)}", n)
            builder.feed(n, toks)
    finish()
    return doc


# -- documents for built values ----------------------------------------------

def document_for_category(cat: FiniteGrayCategory, name=None) -> Document:
    return Document().add("category", name or cat.name, cat)


def document_for_space(space: MappingSpace) -> Document:
    """Serialize a built space: ambient categories, tables, the value
    sections for every cell, and the dictionary tying them together."""
    doc = Document()
    doc.add("category", space.dom_cat.name, space.dom_cat)
    if space.cod_cat is not space.dom_cat:
        doc.add("category", space.cod_cat.name, space.cod_cat)
    doc.add("category", space.space.name, space.space)
    kinds = {0: "functor", 1: "pstransf", 2: "psmod", 3: "perturbation"}
    entries = {k: [] for k in range(4)}
    for k in range(4):
        for c in space.space.dim_cells(k):
            doc.add(kinds[k], c, space.value_of(c))
            entries[k].append((c, c))
    doc.add("dictionary", "dict", (space.space.name, entries))
    return doc


def space_from_document(doc: Document, dict_name="dict") -> MappingSpace:
    space_name, entries = doc.find("dictionary", dict_name)
    space = doc.find("category", space_name)
    kinds = {0: "functor", 1: "pstransf", 2: "psmod", 3: "perturbation"}
    values = {}
    for k in range(4):
        for cell, secname in entries[k]:
            values[cell] = doc.find(kinds[k], secname)
    dom = values[space.dim_cells(0)[0]].dom
    cod = values[space.dim_cells(0)[0]].cod
    return MappingSpace(dom, cod, space, values)
