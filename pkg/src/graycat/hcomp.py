"""Horizontal composition of transfors across a middle Gray-category.

The sixteen rank cases dispatch on the pair of input ranks; the result rank
is min(3, r1 + r2).  Rank pairs summing past 3 are degenerate identity
families whose ambient boundaries are computed from the reduced composite.
The mixed rank-(1,1) case lands between the two one-sided composites, with
the direction forced by the orientation of the transformation components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import (comp0_pstransf, comp1_psmod, whiskl_psmod, whiskr_psmod)
from .core import FiniteGrayCategory, ValidationReport
from .errors import StructuralError
from .functors import GrayFunctor, compose_functors
from .transfors import (Perturbation, PseudoModification, PseudoTransformation,
                        id_pert, id_psmod, id_pstransf, rank,
                        validate_perturbation, validate_psmod,
                        validate_pstransf)

HPayload = GrayFunctor | PseudoTransformation | PseudoModification | Perturbation


@dataclass(frozen=True)
class HCell:
    """A mapping-space cell tagged with its ambient pair of categories."""
    payload: HPayload
    dom_cat: FiniteGrayCategory
    cod_cat: FiniteGrayCategory

    def __post_init__(self):
        if (ambient_pair(self.payload)) != (self.dom_cat, self.cod_cat):
            raise StructuralError("HCell tag does not match its payload")

    @property
    def rank(self):
        return rank(self.payload)


def ambient_pair(x: HPayload):
    F = x
    while not isinstance(F, GrayFunctor):
        F = F.dom
    return F.dom, F.cod


def _functor_of(x: HPayload) -> GrayFunctor:
    """The underlying domain functor at the bottom of a transfor tower."""
    while not isinstance(x, GrayFunctor):
        x = x.dom
    return x


def hcomp_func_transf(H: GrayFunctor, a: PseudoTransformation) -> PseudoTransformation:
    Gc = a.source_cat
    return PseudoTransformation.of(
        compose_functors(H, a.dom), compose_functors(H, a.cod),
        {x: H(a.a0(x)) for x in Gc.dim_cells(0)},
        {f: H(a.a1(f)) for f in Gc.dim_cells(1)},
        {p: H(a.a2(p)) for p in Gc.dim_cells(2)},
        {k: H(v) for k, v in a.coc})


def hcomp_transf_func(b: PseudoTransformation, G: GrayFunctor) -> PseudoTransformation:
    Gc = G.dom
    pairs = {(fp, f) for fp in Gc.dim_cells(1) for f in Gc.dim_cells(1)
             if Gc.src(fp) == Gc.tgt(f)}
    return PseudoTransformation.of(
        compose_functors(b.dom, G), compose_functors(b.cod, G),
        {x: b.a0(G(x)) for x in Gc.dim_cells(0)},
        {f: b.a1(G(f)) for f in Gc.dim_cells(1)},
        {p: b.a2(G(p)) for p in Gc.dim_cells(2)},
        {(fp, f): b.a2coc(G(fp), G(f)) for fp, f in pairs})


def lhc(b: PseudoTransformation, a: PseudoTransformation) -> PseudoTransformation:
    """One-sided composite through the codomain of the inner transformation."""
    H = b.dom
    Gp = a.cod
    return comp0_pstransf(hcomp_transf_func(b, Gp), hcomp_func_transf(H, a))


def rhc(b: PseudoTransformation, a: PseudoTransformation) -> PseudoTransformation:
    """One-sided composite through the domain of the inner transformation."""
    Hp = b.cod
    G = a.dom
    return comp0_pstransf(hcomp_func_transf(Hp, a), hcomp_transf_func(b, G))


def hcomp_mod(b: PseudoTransformation, a: PseudoTransformation) -> PseudoModification:
    """The mixed composite of two transformations: a modification from the
    domain-side pasting to the codomain-side pasting."""
    if b.source_cat is not a.target_cat:
        raise StructuralError("hcomp: middle category mismatch")
    Gc = a.source_cat
    K = b.target_cat
    H_, Hp = b.dom, b.cod
    G_, Gp = a.dom, a.cod
    at0 = {x: b.a1(a.a0(x)) for x in Gc.dim_cells(0)}
    at1 = {}
    for f in Gc.dim_cells(1):
        x, y = Gc.src(f), Gc.tgt(f)
        over = K.v1(K.h0(b.a0(Gp(y)), H_(a.a1(f))),
                    b.a2coc(Gp(f), a.a0(x)))
        across = b.a2(a.a1(f))
        under = K.v1(K.inv_or_fail(b.a2coc(a.a0(y), G_(f))),
                     K.h0(Hp(a.a1(f)), b.a0(G_(x))))
        at1[f] = K.v2(under, K.v2(across, over))
    return PseudoModification.of(rhc(b, a), lhc(b, a), at0, at1)


def hcomp_func_mod(H: GrayFunctor, A: PseudoModification) -> PseudoModification:
    Gc = A.source_cat
    return PseudoModification.of(
        hcomp_func_transf(H, A.dom), hcomp_func_transf(H, A.cod),
        {x: H(A.a0(x)) for x in Gc.dim_cells(0)},
        {f: H(A.a1(f)) for f in Gc.dim_cells(1)})


def hcomp_mod_func(B: PseudoModification, G: GrayFunctor) -> PseudoModification:
    Gc = G.dom
    return PseudoModification.of(
        hcomp_transf_func(B.dom, G), hcomp_transf_func(B.cod, G),
        {x: B.a0(G(x)) for x in Gc.dim_cells(0)},
        {f: B.a1(G(f)) for f in Gc.dim_cells(1)})


def _pert_beta_mod(b: PseudoTransformation, A: PseudoModification) -> Perturbation:
    alpha, alphap = A.dom, A.cod
    Gc = A.source_cat
    H_, Hp = b.dom, b.cod
    G_, Gp = alpha.dom, alpha.cod
    dom = comp1_psmod(whiskr_psmod(hcomp_transf_func(b, Gp),
                                   hcomp_func_mod(H_, A)),
                      hcomp_mod(b, alpha))
    cod = comp1_psmod(hcomp_mod(b, alphap),
                      whiskl_psmod(hcomp_func_mod(Hp, A),
                                   hcomp_transf_func(b, G_)))
    return Perturbation.of(dom, cod,
                           {x: b.a2(A.a0(x)) for x in Gc.dim_cells(0)})


def _pert_mod_alpha(B: PseudoModification, a: PseudoTransformation) -> Perturbation:
    beta, betap = B.dom, B.cod
    Gc = a.source_cat
    H_, Hp = beta.dom, beta.cod
    G_, Gp = a.dom, a.cod
    dom = comp1_psmod(hcomp_mod(betap, a),
                      whiskr_psmod(hcomp_func_transf(Hp, a),
                                   hcomp_mod_func(B, G_)))
    cod = comp1_psmod(whiskl_psmod(hcomp_mod_func(B, Gp),
                                   hcomp_func_transf(H_, a)),
                      hcomp_mod(beta, a))
    return Perturbation.of(dom, cod,
                           {x: B.a1(a.a0(x)) for x in Gc.dim_cells(0)})


def hcomp(left: HPayload, right: HPayload) -> HPayload:
    """The sixteen-case horizontal composite across the middle category."""
    lp, rp = ambient_pair(left), ambient_pair(right)
    if lp[0] is not rp[1]:
        raise StructuralError("hcomp: middle category mismatch")
    r1, r2 = rank(left), rank(right)
    if r1 + r2 > 3:
        return _degenerate(left, right)
    case = (r1, r2)
    if case == (0, 0):
        return compose_functors(left, right)
    if case == (0, 1):
        return hcomp_func_transf(left, right)
    if case == (0, 2):
        return hcomp_func_mod(left, right)
    if case == (0, 3):
        D = right
        return Perturbation.of(
            hcomp(left, D.dom), hcomp(left, D.cod),
            {x: left(D.a0(x)) for x in D.source_cat.dim_cells(0)})
    if case == (1, 0):
        return hcomp_transf_func(left, right)
    if case == (1, 1):
        return hcomp_mod(left, right)
    if case == (1, 2):
        return _pert_beta_mod(left, right)
    if case == (2, 0):
        return hcomp_mod_func(left, right)
    if case == (2, 1):
        return _pert_mod_alpha(left, right)
    if case == (3, 0):
        D, G = left, right
        return Perturbation.of(
            hcomp(D.dom, G), hcomp(D.cod, G),
            {x: D.a0(G(x)) for x in G.dom.dim_cells(0)})
    raise AssertionError(case)


def _degenerate(left, right):
    """Rank sums past 3 collapse to the identity perturbation on the reduced
    composite (reduce the right argument first, then the left)."""
    while rank(left) + rank(right) > 3:
        if rank(right) > 1:
            right = right.dom
        else:
            left = left.dom
    reduced = hcomp(left, right)
    if isinstance(reduced, Perturbation):
        return id_pert(reduced.dom)
    if isinstance(reduced, PseudoModification):
        return id_pert(reduced)
    raise AssertionError("degenerate reduction must land in rank >= 2")


# -- theorem checks -----------------------------------------------------------

def check_hcomp_modification(b, a) -> ValidationReport:
    """The mixed composite of two transformations is a modification."""
    return validate_psmod(hcomp_mod(b, a))


def check_pasteunit(b: PseudoTransformation, G: GrayFunctor) -> ValidationReport:
    """Horizontal composition with an identity transformation is the identity
    modification, by exact cell identity."""
    rep = ValidationReport()
    got = hcomp_mod(b, id_pstransf(G))
    want = id_psmod(hcomp_transf_func(b, G))
    nontriv = any(not b.target_cat.is_id(v) for _, v in b.at1)
    rep.check("pasteunit components", (b.dom.name, G.name), want, got, nontriv)
    return rep


def check_interchange(b2, b1, a) -> ValidationReport:
    """Compatibility of the horizontal and vertical composites: pasting the
    two squares equals the square of the composite."""
    rep = ValidationReport()
    Gp = a.cod
    G_ = a.dom
    lhs = comp1_psmod(
        whiskr_psmod(hcomp_transf_func(b2, Gp), hcomp_mod(b1, a)),
        whiskl_psmod(hcomp_mod(b2, a), hcomp_transf_func(b1, G_)))
    rhs = hcomp_mod(comp0_pstransf(b2, b1), a)
    nontriv = any(not b1.target_cat.is_id(v) for src in (b1.at1, b2.at1, a.at1)
                  for _, v in src)
    rep.check("interchange at0/at1", ("pasting",), rhs.at0, lhs.at0, nontriv)
    rep.check("interchange at0/at1", ("pasting-1",), rhs.at1, lhs.at1, nontriv)
    rep.check("interchange boundaries", ("dom",), rhs.dom, lhs.dom, nontriv)
    rep.check("interchange boundaries", ("cod",), rhs.cod, lhs.cod, nontriv)
    for side, built in (("pasted", lhs), ("composite", rhs)):
        sub = validate_psmod(built)
        rep.count("interchange sides validate", (side,), nontriv)
        if not sub.ok:
            rep.fail("interchange sides validate", (side,), "valid",
                     sub.summary())
    return rep


def check_hcomp_perturbations(x: HPayload, y: HPayload) -> ValidationReport:
    """Rank-3 mixed composites are perturbations."""
    r = (rank(x), rank(y))
    if r not in ((1, 2), (2, 1)):
        raise StructuralError(f"rank pair {r} is not a mixed rank-3 case")
    return validate_perturbation(hcomp(x, y))


def questioned_pair_entries(left: HPayload, right: HPayload) -> ValidationReport:
    """Resolve the two uncertain composable-pair table slots.

    A rank-2 composite is a modification and stores no pair-indexed datum, so
    the only candidate reading of the slots is the 1-cell component evaluated
    at the composite pair.  This check confirms that candidate agrees with
    the data the composite already carries, i.e. the slots are determined and
    redundant rather than independent choices.
    """
    rep = ValidationReport()
    r = (rank(left), rank(right))
    if r == (0, 2):
        H, A = left, right
        out = hcomp_func_mod(H, A)
        Gc = A.source_cat
        for fp in Gc.dim_cells(1):
            for f in Gc.dim_cells(1):
                if Gc.src(fp) != Gc.tgt(f):
                    continue
                comp = Gc.comp0(fp, f)
                rep.check("pair slot candidate (functor, modification)",
                          (fp, f), H(A.a1(comp)), out.a1(comp),
                          Gc.nontrivial(fp, f))
    elif r == (2, 0):
        B, G = left, right
        out = hcomp_mod_func(B, G)
        Gc = G.dom
        for fp in Gc.dim_cells(1):
            for f in Gc.dim_cells(1):
                if Gc.src(fp) != Gc.tgt(f):
                    continue
                comp = Gc.comp0(fp, f)
                rep.check("pair slot candidate (modification, functor)",
                          (fp, f), B.a1(G(comp)), out.a1(comp),
                          Gc.nontrivial(fp, f))
    else:
        raise StructuralError(f"rank pair {r} has no questioned pair slot")
    return rep


def check_hcomp_typing(left: HPayload, right: HPayload) -> ValidationReport:
    """The composite has rank min(3, r1 + r2) and passes that rank's validator."""
    from .functors import validate_functor
    rep = ValidationReport()
    r1, r2 = rank(left), rank(right)
    out = hcomp(left, right)
    expected = min(3, r1 + r2)
    rep.check("hcomp rank", (r1, r2), expected, rank(out))
    sub = {0: validate_functor, 1: validate_pstransf,
           2: validate_psmod, 3: validate_perturbation}[rank(out)](out)
    rep.count(f"hcomp typing ({r1},{r2})", (r1, r2), True)
    if not sub.ok:
        rep.fail(f"hcomp typing ({r1},{r2})", (r1, r2), "valid", sub.summary())
    return rep
