"""Pseudo-transformations, pseudo-modifications, perturbations.

Every axiom is evaluated as an explicit pasting in the codomain category's
tables; both sides of each diagram are folded step by step, so a formula
transcription error surfaces as a boundary failure on the shipped fixtures
rather than a silent wrong value.

Orientation conventions (fixed once, used by every formula downstream):
  - the 2-cell component of a transformation a: F -> G at f: x -> y runs
    from Gf #0 a_x to a_y #0 Ff;
  - the interchanger q (x) p runs from (g' #0 p) #1 (q #0 f) to
    (q #0 f') #1 (g #0 p).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import FiniteGrayCategory, ValidationReport
from .errors import ClosureError, CoherenceError, SizeBoundError, StructuralError
from .functors import GrayFunctor, size_bound


def _sorted_items(m):
    return tuple(sorted(m.items()))


@dataclass(frozen=True)
class PseudoTransformation:
    dom: GrayFunctor
    cod: GrayFunctor
    at0: tuple[tuple[str, str], ...]
    at1: tuple[tuple[str, str], ...]
    at2: tuple[tuple[str, str], ...]
    coc: tuple[tuple[tuple[str, str], str], ...]

    @staticmethod
    def of(dom, cod, at0, at1, at2, coc):
        return PseudoTransformation(dom, cod, _sorted_items(at0),
                                    _sorted_items(at1), _sorted_items(at2),
                                    _sorted_items(coc))

    def __post_init__(self):
        if self.dom.dom is not self.cod.dom or self.dom.cod is not self.cod.cod:
            raise StructuralError("transformation endpoints are not parallel")
        G = self.dom.dom
        want = (set(G.dim_cells(0)), set(G.dim_cells(1)), set(G.dim_cells(2)))
        got = tuple({k for k, _ in m} for m in (self.at0, self.at1, self.at2))
        if got != want:
            raise StructuralError("transformation component maps are not total")
        pairs = {(fp, f) for fp, f in
                 itertools.product(G.dim_cells(1), G.dim_cells(1))
                 if G.src(fp) == G.tgt(f)}
        if {k for k, _ in self.coc} != pairs:
            raise StructuralError("cocycle is not total on composable pairs")

    @property
    def source_cat(self) -> FiniteGrayCategory:
        return self.dom.dom

    @property
    def target_cat(self) -> FiniteGrayCategory:
        return self.dom.cod

    def a0(self, x):
        return dict(self.at0)[x]

    def a1(self, f):
        return dict(self.at1)[f]

    def a2(self, p):
        return dict(self.at2)[p]

    def a2coc(self, fp, f):
        return dict(self.coc)[(fp, f)]

    def key(self):
        return ("pstransf", self.dom.key(), self.cod.key(),
                self.at0, self.at1, self.at2, self.coc)


@dataclass(frozen=True)
class PseudoModification:
    dom: PseudoTransformation
    cod: PseudoTransformation
    at0: tuple[tuple[str, str], ...]
    at1: tuple[tuple[str, str], ...]

    @staticmethod
    def of(dom, cod, at0, at1):
        return PseudoModification(dom, cod, _sorted_items(at0), _sorted_items(at1))

    def __post_init__(self):
        if self.dom.dom != self.cod.dom or self.dom.cod != self.cod.cod:
            raise StructuralError("modification endpoints are not parallel")
        G = self.dom.source_cat
        if {k for k, _ in self.at0} != set(G.dim_cells(0)) or \
                {k for k, _ in self.at1} != set(G.dim_cells(1)):
            raise StructuralError("modification component maps are not total")

    @property
    def source_cat(self):
        return self.dom.source_cat

    @property
    def target_cat(self):
        return self.dom.target_cat

    def a0(self, x):
        return dict(self.at0)[x]

    def a1(self, f):
        return dict(self.at1)[f]

    def key(self):
        return ("psmod", self.dom.key(), self.cod.key(), self.at0, self.at1)


@dataclass(frozen=True)
class Perturbation:
    dom: PseudoModification
    cod: PseudoModification
    at0: tuple[tuple[str, str], ...]

    @staticmethod
    def of(dom, cod, at0):
        return Perturbation(dom, cod, _sorted_items(at0))

    def __post_init__(self):
        if self.dom.dom != self.cod.dom or self.dom.cod != self.cod.cod:
            raise StructuralError("perturbation endpoints are not parallel")
        G = self.dom.source_cat
        if {k for k, _ in self.at0} != set(G.dim_cells(0)):
            raise StructuralError("perturbation component map is not total")

    @property
    def source_cat(self):
        return self.dom.source_cat

    @property
    def target_cat(self):
        return self.dom.target_cat

    def a0(self, x):
        return dict(self.at0)[x]

    def key(self):
        return ("perturbation", self.dom.key(), self.cod.key(), self.at0)


def rank(x) -> int:
    return {GrayFunctor: 0, PseudoTransformation: 1,
            PseudoModification: 2, Perturbation: 3}[type(x)]


# -- boundary formulas -------------------------------------------------------

def pstransf_at1_boundary(F, G, a0, f):
    """(src, tgt) forced for the 2-cell component at a 1-cell f."""
    H = F.cod
    x, y = F.dom.src(f), F.dom.tgt(f)
    return (H.h0(G(f), a0[x]), H.h0(a0[y], F(f)))


def pstransf_at2_boundary(alpha, p):
    H = alpha.target_cat
    F, G = alpha.dom, alpha.cod
    f, fp = alpha.source_cat.src(p), alpha.source_cat.tgt(p)
    x, y = alpha.source_cat.boundary(p, 0)
    return (H.v1(H.h0(alpha.a0(y), F(p)), alpha.a1(f)),
            H.v1(alpha.a1(fp), H.h0(G(p), alpha.a0(x))))


def pstransf_coc_boundary(alpha, fp, f):
    H = alpha.target_cat
    F, G = alpha.dom, alpha.cod
    src = H.v1(H.h0(alpha.a1(fp), F(f)), H.h0(G(fp), alpha.a1(f)))
    return (src, alpha.a1(alpha.source_cat.comp0(fp, f)))


def psmod_at1_boundary(alpha, beta, a0, f):
    """A: alpha => beta; forced (src, tgt) of the 3-cell component at f."""
    H = alpha.target_cat
    F, G = alpha.dom, alpha.cod
    x, y = alpha.source_cat.src(f), alpha.source_cat.tgt(f)
    return (H.v1(beta.a1(f), H.h0(G(f), a0[x])),
            H.v1(H.h0(a0[y], F(f)), alpha.a1(f)))


# -- validators ---------------------------------------------------------------

def _structure_pstransf(alpha: PseudoTransformation, rep: ValidationReport):
    Gc, H = alpha.source_cat, alpha.target_cat
    F, G = alpha.dom, alpha.cod
    for x in Gc.dim_cells(0):
        c = alpha.a0(x)
        rep.check("pstransf 0-cell boundary", (x,),
                  (F(x), G(x)), (H.src(c), H.tgt(c)), not H.is_id(c))
    for f in Gc.dim_cells(1):
        c = alpha.a1(f)
        want = pstransf_at1_boundary(F, G, dict(alpha.at0), f)
        rep.check("pstransf 1-cell boundary", (f,), want,
                  (H.src(c), H.tgt(c)), Gc.nontrivial(f))
        rep.check("pstransf 1-cell invertible", (f,), True,
                  H.inv(c) is not None, Gc.nontrivial(f))
    for p in Gc.dim_cells(2):
        c = alpha.a2(p)
        want = pstransf_at2_boundary(alpha, p)
        rep.check("pstransf 2-cell boundary", (p,), want,
                  (H.src(c), H.tgt(c)), Gc.nontrivial(p))
        rep.check("pstransf 2-cell invertible", (p,), True,
                  H.inv(c) is not None, Gc.nontrivial(p))
    for (fp, f), c in alpha.coc:
        want = pstransf_coc_boundary(alpha, fp, f)
        rep.check("pstransf cocycle boundary", (fp, f), want,
                  (H.src(c), H.tgt(c)), Gc.nontrivial(fp, f))
        rep.check("pstransf cocycle invertible", (fp, f), True,
                  H.inv(c) is not None, Gc.nontrivial(fp, f))


def validate_pstransf(alpha: PseudoTransformation) -> ValidationReport:
    rep = ValidationReport()
    _structure_pstransf(alpha, rep)
    if not rep.ok:
        return rep
    Gc, H = alpha.source_cat, alpha.target_cat
    F, G = alpha.dom, alpha.cod
    a0, a1, a2, coc = alpha.a0, alpha.a1, alpha.a2, alpha.a2coc

    for x in Gc.dim_cells(0):
        rep.check("pstransf identity 1-cell", (x,),
                  H.ident(a0(x)), a1(Gc.ident(x)), not H.is_id(a0(x)))
    for f in Gc.dim_cells(1):
        rep.check("pstransf identity 2-cell", (f,),
                  H.ident(a1(f)), a2(Gc.ident(f)), Gc.nontrivial(f))

    # square of 3-cells over each 3-cell of the domain
    for g in Gc.dim_cells(3):
        p, pp = Gc.src(g), Gc.tgt(g)
        f, fp = Gc.src(p), Gc.tgt(p)
        x, y = Gc.boundary(g, 0)
        lhs = H.v2(a2(pp), H.v1(H.h0(a0(y), F(g)), a1(f)))
        rhs = H.v2(H.v1(a1(fp), H.h0(G(g), a0(x))), a2(p))
        rep.check("pstransf 3-cell square", (g,), lhs, rhs, Gc.nontrivial(g))

    # components at vertically composed 2-cells
    for pp in Gc.dim_cells(2):
        for p in Gc.dim_cells(2):
            if Gc.src(pp) != Gc.tgt(p):
                continue
            x = Gc.boundary(p, 0)[0]
            y = Gc.boundary(p, 0)[1]
            want = H.v2(H.v1(a2(pp), H.h0(G(p), a0(x))),
                        H.v1(H.h0(a0(y), F(pp)), a2(p)))
            rep.check("pstransf 2-cell composition", (pp, p),
                      want, a2(Gc.comp1(pp, p)), Gc.nontrivial(pp, p))

    # cocycle condition over composable triples
    for (fp, f), _ in alpha.coc:
        for fpp in Gc.dim_cells(1):
            if Gc.src(fpp) != Gc.tgt(fp):
                continue
            x = Gc.src(f)
            lhs = H.v2(coc(fpp, Gc.comp0(fp, f)),
                       H.v1(H.h0(a1(fpp), F(Gc.comp0(fp, f))),
                            H.h0(G(fpp), coc(fp, f))))
            rhs = H.v2(coc(Gc.comp0(fpp, fp), f),
                       H.v1(H.h0(coc(fpp, fp), F(f)),
                            H.h0(G(Gc.comp0(fpp, fp)), a1(f))))
            rep.check("pstransf cocycle condition", (fpp, fp, f), lhs, rhs,
                      Gc.nontrivial(fpp, fp, f))

    # cocycle normalization
    for (fp, f), c in alpha.coc:
        if Gc.is_id(fp):
            rep.check("pstransf cocycle normalization", (fp, f),
                      H.ident(a1(f)), c, Gc.nontrivial(f))
        if Gc.is_id(f):
            rep.check("pstransf cocycle normalization", (fp, f),
                      H.ident(a1(fp)), c, Gc.nontrivial(fp))

    # cocycle versus whiskering a 2-cell by an incoming 1-cell (c #0 f)
    for c2 in Gc.dim_cells(2):
        g0, g1 = Gc.src(c2), Gc.tgt(c2)
        for f in Gc.dim_cells(1):
            if Gc.tgt(f) != Gc.boundary(c2, 0)[0]:
                continue
            x = Gc.src(f)
            z = Gc.boundary(c2, 0)[1]
            whisk = Gc.whisker("wr21", c2, f)
            step1 = H.v1(H.h0(a2(c2), F(f)), H.h0(G(g0), a1(f)))
            step2 = H.v1(H.h0(a1(g1), F(f)),
                         H.inv_or_fail(H.tens(G(c2), a1(f))))
            step3 = H.v1(coc(g1, f), H.h0(G(whisk), a0(x)))
            step4 = H.v1(H.h0(a0(z), F(whisk)), coc(g0, f))
            rep.check("pstransf cocycle whisker incoming", (c2, f),
                      H.v2(step3, H.v2(step2, step1)),
                      H.v2(a2(whisk), step4), Gc.nontrivial(c2, f))

    # cocycle versus whiskering a 2-cell by an outgoing 1-cell (g #0 d)
    for d2 in Gc.dim_cells(2):
        f0, f1 = Gc.src(d2), Gc.tgt(d2)
        for g in Gc.dim_cells(1):
            if Gc.src(g) != Gc.boundary(d2, 0)[1]:
                continue
            x = Gc.boundary(d2, 0)[0]
            z = Gc.tgt(g)
            whisk = Gc.whisker("wl12", g, d2)
            step1 = H.v1(H.tens(a1(g), F(d2)), H.h0(G(g), a1(f0)))
            step2 = H.v1(H.h0(a1(g), F(f1)), H.h0(G(g), a2(d2)))
            step3 = H.v1(coc(g, f1), H.h0(G(whisk), a0(x)))
            step4 = H.v1(H.h0(a0(z), F(whisk)), coc(g, f0))
            rep.check("pstransf cocycle whisker outgoing", (g, d2),
                      H.v2(step3, H.v2(step2, step1)),
                      H.v2(a2(whisk), step4), Gc.nontrivial(g, d2))
    return rep


def validate_psmod(A: PseudoModification) -> ValidationReport:
    rep = ValidationReport()
    alpha, beta = A.dom, A.cod
    Gc, H = A.source_cat, A.target_cat
    F, G = alpha.dom, alpha.cod
    a0, a1 = A.a0, A.a1

    for x in Gc.dim_cells(0):
        c = a0(x)
        rep.check("psmod 0-cell boundary", (x,),
                  (alpha.a0(x), beta.a0(x)), (H.src(c), H.tgt(c)),
                  not H.is_id(c))
    for f in Gc.dim_cells(1):
        c = a1(f)
        want = psmod_at1_boundary(alpha, beta, dict(A.at0), f)
        rep.check("psmod 1-cell boundary", (f,), want,
                  (H.src(c), H.tgt(c)), Gc.nontrivial(f))
    if not rep.ok:
        return rep

    for x in Gc.dim_cells(0):
        rep.check("psmod identity unit", (x,),
                  H.ident(a0(x)), a1(Gc.ident(x)), not H.is_id(a0(x)))

    # compatibility with the cocycles of both boundary transformations
    for fp in Gc.dim_cells(1):
        for f in Gc.dim_cells(1):
            if Gc.src(fp) != Gc.tgt(f):
                continue
            x, z = Gc.src(f), Gc.tgt(fp)
            comp = Gc.comp0(fp, f)
            lhs = H.v2(H.v1(H.h0(a0(z), F(comp)), alpha.a2coc(fp, f)),
                       H.v2(H.v1(H.h0(a1(fp), F(f)), H.h0(G(fp), alpha.a1(f))),
                            H.v1(H.h0(beta.a1(fp), F(f)), H.h0(G(fp), a1(f)))))
            rhs = H.v2(a1(comp),
                       H.v1(beta.a2coc(fp, f), H.h0(G(comp), a0(x))))
            rep.check("psmod cocycle compatibility", (fp, f), lhs, rhs,
                      Gc.nontrivial(fp, f))

    # compatibility with 2-cells of the domain
    for g2 in Gc.dim_cells(2):
        f, fp = Gc.src(g2), Gc.tgt(g2)
        x, y = Gc.boundary(g2, 0)
        lhs = H.v2(H.v1(H.h0(a0(y), F(fp)), alpha.a2(g2)),
                   H.v2(H.v1(H.tens(a0(y), F(g2)), alpha.a1(f)),
                        H.v1(H.h0(beta.a0(y), F(g2)), a1(f))))
        rhs = H.v2(H.v1(a1(fp), H.h0(G(g2), alpha.a0(x))),
                   H.v2(H.v1(beta.a1(fp), H.inv_or_fail(H.tens(G(g2), a0(x)))),
                        H.v1(beta.a2(g2), H.h0(G(f), a0(x)))))
        rep.check("psmod 2-cell compatibility", (g2,), lhs, rhs,
                  Gc.nontrivial(g2))
    return rep


def validate_perturbation(P: Perturbation) -> ValidationReport:
    rep = ValidationReport()
    A, B = P.dom, P.cod
    alpha, beta = A.dom, A.cod
    Gc, H = P.source_cat, P.target_cat
    F, G = alpha.dom, alpha.cod

    for x in Gc.dim_cells(0):
        c = P.a0(x)
        rep.check("perturbation 0-cell boundary", (x,),
                  (A.a0(x), B.a0(x)), (H.src(c), H.tgt(c)), not H.is_id(c))
    if not rep.ok:
        return rep
    for f in Gc.dim_cells(1):
        x, y = Gc.src(f), Gc.tgt(f)
        lhs = H.v2(B.a1(f), H.v1(beta.a1(f), H.h0(G(f), P.a0(x))))
        rhs = H.v2(H.v1(H.h0(P.a0(y), F(f)), alpha.a1(f)), A.a1(f))
        rep.check("perturbation square", (f,), lhs, rhs, Gc.nontrivial(f))
    return rep


# -- identity constructors ----------------------------------------------------

def id_pstransf(F: GrayFunctor) -> PseudoTransformation:
    Gc, H = F.dom, F.cod
    at0 = {x: H.ident(F(x)) for x in Gc.dim_cells(0)}
    at1 = {f: H.ident(F(f)) for f in Gc.dim_cells(1)}
    at2 = {p: H.ident(F(p)) for p in Gc.dim_cells(2)}
    coc = {}
    for fp in Gc.dim_cells(1):
        for f in Gc.dim_cells(1):
            if Gc.src(fp) == Gc.tgt(f):
                coc[(fp, f)] = H.ident(H.ident(F(Gc.comp0(fp, f))))
    return PseudoTransformation.of(F, F, at0, at1, at2, coc)


def id_psmod(alpha: PseudoTransformation) -> PseudoModification:
    Gc, H = alpha.source_cat, alpha.target_cat
    return PseudoModification.of(
        alpha, alpha,
        {x: H.ident(alpha.a0(x)) for x in Gc.dim_cells(0)},
        {f: H.ident(alpha.a1(f)) for f in Gc.dim_cells(1)})


def id_pert(A: PseudoModification) -> Perturbation:
    Gc, H = A.source_cat, A.target_cat
    return Perturbation.of(A, A, {x: H.ident(A.a0(x)) for x in Gc.dim_cells(0)})


# -- brute-force enumerators --------------------------------------------------

def _product_guard(candidate_lists, what, bound):
    total = 1
    for opts in candidate_lists:
        total *= len(opts)
        if total > bound:
            raise SizeBoundError(f"{what}: candidate space exceeds bound {bound}")
    return total


def _assign(keys, choices):
    return dict(zip(keys, choices))


def enumerate_pstransf(F: GrayFunctor, G: GrayFunctor,
                       bound: int | None = None) -> list[PseudoTransformation]:
    """All pseudo-transformations F -> G, deterministic lexicographic order.

    Components at identity cells and normalized cocycle pairs are forced, so
    the search ranges only over the free slots; every candidate then runs
    through the full validator.
    """
    if F.dom is not G.dom or F.cod is not G.cod:
        raise StructuralError("enumerate_pstransf: functors are not parallel")
    bound = size_bound() if bound is None else bound
    Gc, H = F.dom, F.cod
    invertible2 = [c for c in H.dim_cells(2) if H.inv(c) is not None]
    invertible3 = [c for c in H.dim_cells(3) if H.inv(c) is not None]

    obj = list(Gc.dim_cells(0))
    obj_opts = [[c for c in H.dim_cells(1)
                 if H.src(c) == F(x) and H.tgt(c) == G(x)] for x in obj]
    free1 = [f for f in Gc.dim_cells(1) if not Gc.is_id(f)]
    free2 = [p for p in Gc.dim_cells(2) if not Gc.is_id(p)]
    pairs = [(fp, f) for fp in Gc.dim_cells(1) for f in Gc.dim_cells(1)
             if Gc.src(fp) == Gc.tgt(f)]
    free_pairs = [(fp, f) for fp, f in pairs
                  if not Gc.is_id(fp) and not Gc.is_id(f)]

    results = []
    _product_guard(obj_opts, f"pstransf {F.name}->{G.name} 0-cells", bound)
    for choice0 in itertools.product(*obj_opts):
        at0 = _assign(obj, choice0)
        opts1 = []
        for f in free1:
            want = pstransf_at1_boundary(F, G, at0, f)
            opts1.append([c for c in invertible2
                          if (H.src(c), H.tgt(c)) == want])
        _product_guard(opts1, "pstransf 1-cells", bound)
        for choice1 in itertools.product(*opts1):
            at1 = _assign(free1, choice1)
            for x in obj:
                at1[Gc.ident(x)] = H.ident(at0[x])
            stub = PseudoTransformation.of(
                F, G, at0, at1,
                {p: "?" for p in Gc.dim_cells(2)},
                {pr: "?" for pr in pairs})
            opts2 = []
            for p in free2:
                want = pstransf_at2_boundary(stub, p)
                opts2.append([c for c in invertible3
                              if (H.src(c), H.tgt(c)) == want])
            optsc = []
            for fp, f in free_pairs:
                want = pstransf_coc_boundary(stub, fp, f)
                optsc.append([c for c in invertible3
                              if (H.src(c), H.tgt(c)) == want])
            _product_guard(opts2 + optsc, "pstransf 2-cells/cocycle", bound)
            for choice2 in itertools.product(*opts2):
                at2 = _assign(free2, choice2)
                for f in Gc.dim_cells(1):
                    at2[Gc.ident(f)] = H.ident(at1[f])
                for choicec in itertools.product(*optsc):
                    coc = _assign(free_pairs, choicec)
                    for fp, f in pairs:
                        if Gc.is_id(fp):
                            coc[(fp, f)] = H.ident(at1[f])
                        elif Gc.is_id(f):
                            coc[(fp, f)] = H.ident(at1[fp])
                    cand = PseudoTransformation.of(F, G, at0, at1, at2, coc)
                    if validate_pstransf(cand).ok:
                        results.append(cand)
    return results


def enumerate_psmod(alpha: PseudoTransformation, beta: PseudoTransformation,
                    bound: int | None = None) -> list[PseudoModification]:
    if alpha.dom != beta.dom or alpha.cod != beta.cod:
        raise StructuralError("enumerate_psmod: transformations are not parallel")
    bound = size_bound() if bound is None else bound
    Gc, H = alpha.source_cat, alpha.target_cat
    obj = list(Gc.dim_cells(0))
    obj_opts = [[c for c in H.dim_cells(2)
                 if H.src(c) == alpha.a0(x) and H.tgt(c) == beta.a0(x)]
                for x in obj]
    free1 = [f for f in Gc.dim_cells(1) if not Gc.is_id(f)]
    results = []
    _product_guard(obj_opts, "psmod 0-cells", bound)
    for choice0 in itertools.product(*obj_opts):
        at0 = _assign(obj, choice0)
        opts1 = []
        for f in free1:
            want = psmod_at1_boundary(alpha, beta, at0, f)
            opts1.append([c for c in H.dim_cells(3)
                          if (H.src(c), H.tgt(c)) == want])
        _product_guard(opts1, "psmod 1-cells", bound)
        for choice1 in itertools.product(*opts1):
            at1 = _assign(free1, choice1)
            for x in obj:
                at1[Gc.ident(x)] = H.ident(at0[x])
            cand = PseudoModification.of(alpha, beta, at0, at1)
            if validate_psmod(cand).ok:
                results.append(cand)
    return results


def enumerate_pert(A: PseudoModification, B: PseudoModification,
                   bound: int | None = None) -> list[Perturbation]:
    if A.dom != B.dom or A.cod != B.cod:
        raise StructuralError("enumerate_pert: modifications are not parallel")
    bound = size_bound() if bound is None else bound
    Gc, H = A.source_cat, A.target_cat
    obj = list(Gc.dim_cells(0))
    obj_opts = [[c for c in H.dim_cells(3)
                 if H.src(c) == A.a0(x) and H.tgt(c) == B.a0(x)] for x in obj]
    results = []
    _product_guard(obj_opts, "perturbation 0-cells", bound)
    for choice0 in itertools.product(*obj_opts):
        cand = Perturbation.of(A, B, _assign(obj, choice0))
        if validate_perturbation(cand).ok:
            results.append(cand)
    return results
