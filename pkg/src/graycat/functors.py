"""Strict functors between finite Gray-categories.

A functor is four total cell maps that commute with boundaries and preserve
units, whiskers, composites and tensors on the nose.  Enumeration is a
candidate product over non-identity cells with the images of identities
forced, filtered through the full validator.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from .core import (FiniteGrayCategory, TABLE_ARITY, ValidationReport,
                   _composable_pairs)
from .errors import SizeBoundError, StructuralError

DEFAULT_SIZE_BOUND = 10 ** 6


def size_bound() -> int:
    return int(os.environ.get("GRAYCAT_SIZE_BOUND", DEFAULT_SIZE_BOUND))


@dataclass(frozen=True)
class GrayFunctor:
    dom: FiniteGrayCategory
    cod: FiniteGrayCategory
    maps: tuple[tuple[tuple[str, str], ...], ...]  # per dimension, sorted
    name: str = field(default="", compare=False)

    @staticmethod
    def of(dom, cod, map0, map1, map2, map3, name=""):
        maps = tuple(tuple(sorted(m.items())) for m in (map0, map1, map2, map3))
        return GrayFunctor(dom, cod, maps, name)

    def __post_init__(self):
        for k, m in enumerate(self.maps):
            keys = {a for a, _ in m}
            if keys != set(self.dom.dim_cells(k)):
                raise StructuralError(
                    f"functor map{k} is not total on the domain cells")
            for _, b in m:
                if b not in self.cod.cells or self.cod.dim(b) != k:
                    raise StructuralError(f"functor map{k}: bad image {b!r}")

    def map(self, k: int) -> dict[str, str]:
        return dict(self.maps[k])

    def __call__(self, c: str) -> str:
        return dict(self.maps[self.dom.dim(c)])[c]

    def key(self):
        return ("functor", id(self.dom), id(self.cod), self.maps)


def identity_functor(cat: FiniteGrayCategory, name="id") -> GrayFunctor:
    return GrayFunctor.of(cat, cat,
                          *({c: c for c in cat.dim_cells(k)} for k in range(4)),
                          name=name)


def compose_functors(g: GrayFunctor, f: GrayFunctor, name="") -> GrayFunctor:
    if g.dom is not f.cod:
        raise StructuralError("compose_functors: domain mismatch")
    return GrayFunctor.of(
        f.dom, g.cod,
        *({c: g(f(c)) for c in f.dom.dim_cells(k)} for k in range(4)),
        name=name or f"{g.name}.{f.name}")


def validate_functor(F: GrayFunctor) -> ValidationReport:
    rep = ValidationReport()
    dom, cod = F.dom, F.cod
    for k in (1, 2, 3):
        for c in dom.dim_cells(k):
            rep.count("functor boundary", (c,), dom.nontrivial(c))
            want = (F(dom.src(c)), F(dom.tgt(c)))
            got = (cod.src(F(c)), cod.tgt(F(c)))
            if want != got:
                rep.fail("functor boundary", (c,), want, got)
    for k in (0, 1, 2):
        for c in dom.dim_cells(k):
            rep.check("functor unit", (c,), cod.ident(F(c)), F(dom.ident(c)),
                      dom.nontrivial(c))
    ops = {
        "comp0": (cod.comp0, "functor comp"),
        "comp1": (cod.comp1, "functor comp"),
        "comp2": (cod.comp2, "functor comp"),
        "wl12": (lambda a, b: cod.whisker("wl12", a, b), "functor whisker"),
        "wr21": (lambda a, b: cod.whisker("wr21", a, b), "functor whisker"),
        "wl13": (lambda a, b: cod.whisker("wl13", a, b), "functor whisker"),
        "wr31": (lambda a, b: cod.whisker("wr31", a, b), "functor whisker"),
        "wm23": (lambda a, b: cod.whisker("wm23", a, b), "functor whisker"),
        "wm32": (lambda a, b: cod.whisker("wm32", a, b), "functor whisker"),
        "tensor": (cod.tens, "functor tensor"),
    }
    for table, (op, axiom) in ops.items():
        for a, b in dom.tables[table].items():
            rep.check(axiom, (table,) + a, op(F(a[0]), F(a[1])), F(b),
                      dom.nontrivial(*a))
    return rep


def _candidate_images(dom, cod, forced):
    """Per-cell candidate lists for non-forced cells, boundary-filtered."""
    cands = {}
    for k in (0, 1, 2, 3):
        for c in dom.dim_cells(k):
            if c in forced:
                continue
            if k == 0:
                cands[c] = list(cod.dim_cells(0))
            else:
                opts = []
                for d in cod.dim_cells(k):
                    s, t = dom.src(c), dom.tgt(c)
                    # boundary images may themselves be search variables;
                    # only prefilter when both are already pinned
                    if s in forced and cod.src(d) != forced[s]:
                        continue
                    if t in forced and cod.tgt(d) != forced[t]:
                        continue
                    opts.append(d)
                cands[c] = opts
    return cands


def enumerate_functors(dom: FiniteGrayCategory, cod: FiniteGrayCategory,
                       bound: int | None = None) -> list[GrayFunctor]:
    """All strict functors dom -> cod, lexicographic in cell-image choices."""
    bound = size_bound() if bound is None else bound
    # identities are forced once their base cell is assigned, so search only
    # over non-identity cells, dimension by dimension
    free = [c for k in range(4) for c in dom.dim_cells(k) if not dom.is_id(c)]
    results = []

    def extend(i, forced):
        if i == len(free):
            maps = [dict() for _ in range(4)]
            for c, d in forced.items():
                maps[dom.dim(c)][c] = d
            try:
                F = GrayFunctor.of(dom, cod, *maps)
            except StructuralError:
                return
            if validate_functor(F).ok:
                results.append(F)
            return
        c = free[i]
        k = dom.dim(c)
        if k == 0:
            options = cod.dim_cells(0)
        else:
            s, t = forced[dom.src(c)], forced[dom.tgt(c)]
            options = [d for d in cod.dim_cells(k)
                       if cod.src(d) == s and cod.tgt(d) == t]
        for d in options:
            updates = {c: d}
            base, img = c, d
            while base in dom.ids:  # propagate forced identity images
                base, img = dom.ids[base], cod.ident(img)
                updates[base] = img
            forced.update(updates)
            extend(i + 1, forced)
            for u in updates:
                del forced[u]

    total = 1
    for c in free:
        total *= max(1, len(cod.dim_cells(dom.dim(c))))
        if total > bound:
            raise SizeBoundError(
                f"functor enumeration {dom.name} -> {cod.name}: "
                f"candidate space exceeds bound {bound}")
    extend(0, {})
    for n, F in enumerate(results):
        object.__setattr__(F, "name", f"F{n}")
    return results
