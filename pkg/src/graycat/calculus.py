"""Composites and whiskers of transfors between fixed Gray-categories.

Each multi-stage component is an explicit left-to-right fold of table
operations in the codomain category, in the order the defining pasting
diagrams stack; under the fixed interchanger orientation the inverse markers
land where boundary compatibility forces them.
"""

from __future__ import annotations

from .errors import StructuralError
from .functors import GrayFunctor
from .transfors import (Perturbation, PseudoModification, PseudoTransformation)


def comp0_pstransf(b2: PseudoTransformation,
                   b1: PseudoTransformation) -> PseudoTransformation:
    """Composite of transformations (b2 after b1) along their shared functor."""
    if b1.cod != b2.dom:
        raise StructuralError("comp0_pstransf: codomain/domain mismatch")
    Gc, H = b1.source_cat, b1.target_cat
    G0, G2 = b1.dom, b2.cod
    at0 = {x: H.h0(b2.a0(x), b1.a0(x)) for x in Gc.dim_cells(0)}
    at1, at2, coc = {}, {}, {}
    for f in Gc.dim_cells(1):
        x, y = Gc.src(f), Gc.tgt(f)
        at1[f] = H.v1(H.h0(b2.a0(y), b1.a1(f)), H.h0(b2.a1(f), b1.a0(x)))
    for p in Gc.dim_cells(2):
        f, fp = Gc.src(p), Gc.tgt(p)
        x, y = Gc.boundary(p, 0)
        lower = H.v1(H.h0(b2.a0(y), b1.a2(p)), H.h0(b2.a1(f), b1.a0(x)))
        upper = H.v1(H.h0(b2.a0(y), b1.a1(fp)), H.h0(b2.a2(p), b1.a0(x)))
        at2[p] = H.v2(upper, lower)
    for (fp, f), _ in b1.coc:
        x, z = Gc.src(f), Gc.tgt(fp)
        swap = H.v1(
            H.h0(b2.a0(z), H.h0(b1.a1(fp), G0(f))),
            H.v1(H.inv_or_fail(H.tens(b2.a1(fp), b1.a1(f))),
                 H.h0(G2(fp), H.h0(b2.a1(f), b1.a0(x)))))
        collect = H.v1(H.h0(b2.a0(z), b1.a2coc(fp, f)),
                       H.h0(b2.a2coc(fp, f), b1.a0(x)))
        coc[(fp, f)] = H.v2(collect, swap)
    return PseudoTransformation.of(b1.dom, b2.cod, at0, at1, at2, coc)


def comp1_psmod(A2: PseudoModification,
                A1: PseudoModification) -> PseudoModification:
    """Vertical composite of modifications (A2 after A1)."""
    if A1.cod != A2.dom:
        raise StructuralError("comp1_psmod: codomain/domain mismatch")
    Gc, H = A1.source_cat, A1.target_cat
    P = A1.dom
    at0 = {x: H.v1(A2.a0(x), A1.a0(x)) for x in Gc.dim_cells(0)}
    at1 = {}
    for f in Gc.dim_cells(1):
        x, y = Gc.src(f), Gc.tgt(f)
        push = H.v1(A2.a1(f), H.h0(P.cod(f), A1.a0(x)))
        pull = H.v1(H.h0(A2.a0(y), P.dom(f)), A1.a1(f))
        at1[f] = H.v2(pull, push)
    return PseudoModification.of(A1.dom, A2.cod, at0, at1)


def whiskr_psmod(beta: PseudoTransformation,
                 A: PseudoModification) -> PseudoModification:
    """Whisker a modification by a transformation leaving its codomain."""
    alpha, alphap = A.dom, A.cod
    if beta.dom != alpha.cod:
        raise StructuralError("whiskr_psmod: incidence mismatch")
    Gc, H = A.source_cat, A.target_cat
    at0 = {x: H.h0(beta.a0(x), A.a0(x)) for x in Gc.dim_cells(0)}
    at1 = {}
    for f in Gc.dim_cells(1):
        x, y = Gc.src(f), Gc.tgt(f)
        untwist = H.v1(H.h0(beta.a0(y), alphap.a1(f)),
                       H.inv_or_fail(H.tens(beta.a1(f), A.a0(x))))
        push = H.v1(H.h0(beta.a0(y), A.a1(f)), H.h0(beta.a1(f), alpha.a0(x)))
        at1[f] = H.v2(push, untwist)
    return PseudoModification.of(comp0_pstransf(beta, alpha),
                                 comp0_pstransf(beta, alphap), at0, at1)


def whiskl_psmod(B: PseudoModification,
                 alpha: PseudoTransformation) -> PseudoModification:
    """Whisker a modification by a transformation entering its domain."""
    beta, betap = B.dom, B.cod
    if alpha.cod != beta.dom:
        raise StructuralError("whiskl_psmod: incidence mismatch")
    Gc, H = B.source_cat, B.target_cat
    at0 = {x: H.h0(B.a0(x), alpha.a0(x)) for x in Gc.dim_cells(0)}
    at1 = {}
    for f in Gc.dim_cells(1):
        x, y = Gc.src(f), Gc.tgt(f)
        push = H.v1(H.h0(betap.a0(y), alpha.a1(f)),
                    H.h0(B.a1(f), alpha.a0(x)))
        twist = H.v1(H.tens(B.a0(y), alpha.a1(f)),
                     H.h0(beta.a1(f), alpha.a0(x)))
        at1[f] = H.v2(twist, push)
    return PseudoModification.of(comp0_pstransf(beta, alpha),
                                 comp0_pstransf(betap, alpha), at0, at1)


def comp2_pert(D2: Perturbation, D1: Perturbation) -> Perturbation:
    """Componentwise composite of perturbations (D2 after D1)."""
    if D1.cod != D2.dom:
        raise StructuralError("comp2_pert: codomain/domain mismatch")
    Gc, H = D1.source_cat, D1.target_cat
    return Perturbation.of(D1.dom, D2.cod,
                           {x: H.v2(D2.a0(x), D1.a0(x))
                            for x in Gc.dim_cells(0)})


def whisk_pert(kind: str, outer, inner) -> Perturbation:
    """Componentwise whiskers of perturbations.

    kinds: 'l'  transformation #0 perturbation, 'r'  perturbation #0
    transformation, 'ml' modification #1 perturbation, 'mr' perturbation #1
    modification.
    """
    if kind == "l":
        beta, D = outer, inner
        if not isinstance(beta, PseudoTransformation) or \
                not isinstance(D, Perturbation):
            raise StructuralError("whisk_pert('l') wants (transformation, perturbation)")
        if beta.dom != D.dom.dom.cod:
            raise StructuralError("whisk_pert('l'): incidence mismatch")
        Gc, H = D.source_cat, D.target_cat
        return Perturbation.of(
            whiskr_psmod(beta, D.dom), whiskr_psmod(beta, D.cod),
            {x: H.h0(beta.a0(x), D.a0(x)) for x in Gc.dim_cells(0)})
    if kind == "r":
        D, alpha = outer, inner
        if not isinstance(D, Perturbation) or \
                not isinstance(alpha, PseudoTransformation):
            raise StructuralError("whisk_pert('r') wants (perturbation, transformation)")
        if alpha.cod != D.dom.dom.dom:
            raise StructuralError("whisk_pert('r'): incidence mismatch")
        Gc, H = D.source_cat, D.target_cat
        return Perturbation.of(
            whiskl_psmod(D.dom, alpha), whiskl_psmod(D.cod, alpha),
            {x: H.h0(D.a0(x), alpha.a0(x)) for x in Gc.dim_cells(0)})
    if kind == "ml":
        A, D = outer, inner
        if A.dom != D.dom.cod:
            raise StructuralError("whisk_pert('ml'): incidence mismatch")
        Gc, H = D.source_cat, D.target_cat
        return Perturbation.of(
            comp1_psmod(A, D.dom), comp1_psmod(A, D.cod),
            {x: H.v1(A.a0(x), D.a0(x)) for x in Gc.dim_cells(0)})
    if kind == "mr":
        D, A = outer, inner
        if D.dom.dom != A.cod:
            raise StructuralError("whisk_pert('mr'): incidence mismatch")
        Gc, H = D.source_cat, D.target_cat
        return Perturbation.of(
            comp1_psmod(D.dom, A), comp1_psmod(D.cod, A),
            {x: H.v1(D.a0(x), A.a0(x)) for x in Gc.dim_cells(0)})
    raise StructuralError(f"unknown perturbation whisker kind {kind!r}")


def tensor_psmod(B: PseudoModification, A: PseudoModification) -> Perturbation:
    """Interchanger of two modifications meeting at a functor, componentwise.

    The boundary is the usual interchange pasting; the value at each object
    is the codomain category's interchanger of the 0-cell components.
    """
    alpha, alphap = A.dom, A.cod
    beta, betap = B.dom, B.cod
    if alpha.cod != beta.dom:
        raise StructuralError("tensor_psmod: modifications do not meet at a functor")
    Gc, H = A.source_cat, A.target_cat
    src = comp1_psmod(whiskr_psmod(betap, A), whiskl_psmod(B, alpha))
    tgt = comp1_psmod(whiskl_psmod(B, alphap), whiskr_psmod(beta, A))
    return Perturbation.of(src, tgt, {x: H.tens(B.a0(x), A.a0(x))
                                      for x in Gc.dim_cells(0)})
