"""Mapping spaces of transfors, reified as table categories.

The cells of [G, H] are the brute-force enumerations of functors,
transformations, modifications and perturbations; the operation tables are
filled by the componentwise calculus, so building a space doubles as a
closure test for every operation.  A dictionary keeps the bijection between
table cells and transfor values.

The interchanger of two 2-cells of a built space is taken componentwise.  A
pure boundary search does not pin it down (identity labels also bound the
same pasting on the shipped fixtures), while the componentwise choice is the
one under which evaluation at an object is a strict functor; the builder
still verifies the boundary equation and fails loudly on a mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .calculus import (comp0_pstransf, comp1_psmod, comp2_pert, tensor_psmod,
                       whisk_pert, whiskl_psmod, whiskr_psmod)
from .core import Cell, FiniteGrayCategory, ValidationReport
from .errors import ClosureError, SizeBoundError, StructuralError
from .functors import (GrayFunctor, compose_functors, enumerate_functors,
                       identity_functor, validate_functor)
from .hcomp import hcomp, hcomp_func_transf, hcomp_mod
from .transfors import (Perturbation, PseudoModification, PseudoTransformation,
                        enumerate_pert, enumerate_psmod, enumerate_pstransf,
                        id_pert, id_psmod, id_pstransf, rank,
                        validate_perturbation, validate_psmod,
                        validate_pstransf)


@dataclass
class MappingSpace:
    dom_cat: FiniteGrayCategory
    cod_cat: FiniteGrayCategory
    space: FiniteGrayCategory
    values: dict[str, object]
    by_key: dict[tuple, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.by_key:
            self.by_key = {v.key(): c for c, v in self.values.items()}

    def cell_of(self, value) -> str:
        try:
            return self.by_key[value.key()]
        except KeyError:
            raise ClosureError(
                f"value of rank {rank(value)} is not a cell of the built "
                f"space [{self.dom_cat.name},{self.cod_cat.name}]") from None

    def value_of(self, cell: str):
        return self.values[cell]


def build_mapping_space(G: FiniteGrayCategory, H: FiniteGrayCategory,
                        bound: int | None = None) -> MappingSpace:
    functors = enumerate_functors(G, H, bound)
    transf, mods, perts = [], [], []
    for Fi in functors:
        for Fj in functors:
            transf.extend(enumerate_pstransf(Fi, Fj, bound))
    for a in transf:
        for b in transf:
            if a.dom == b.dom and a.cod == b.cod:
                mods.extend(enumerate_psmod(a, b, bound))
    for A in mods:
        for B in mods:
            if A.dom == B.dom and A.cod == B.cod:
                perts.extend(enumerate_pert(A, B, bound))

    values, names = {}, {}
    for prefix, items in (("F", functors), ("t", transf),
                          ("m", mods), ("p", perts)):
        for n, v in enumerate(items):
            cid = f"{prefix}{n}"
            values[cid] = v
            names[v.key()] = cid

    def cid(v):
        return names[v.key()]

    cells = {}
    for F in functors:
        cells[cid(F)] = Cell(cid(F), 0)
    for a in transf:
        cells[cid(a)] = Cell(cid(a), 1, cid(a.dom), cid(a.cod))
    for A in mods:
        cells[cid(A)] = Cell(cid(A), 2, cid(A.dom), cid(A.cod))
    for D in perts:
        cells[cid(D)] = Cell(cid(D), 3, cid(D.dom), cid(D.cod))
    order = ([cid(F) for F in functors], [cid(a) for a in transf],
             [cid(A) for A in mods], [cid(D) for D in perts])

    ids = {}
    for F in functors:
        ids[cid(F)] = cid(id_pstransf(F))
    for a in transf:
        ids[cid(a)] = cid(id_psmod(a))
    for A in mods:
        ids[cid(A)] = cid(id_pert(A))

    t = {k: {} for k in ("comp0", "comp1", "comp2", "wl12", "wr21", "wl13",
                         "wr31", "wm23", "wm32", "tensor")}
    for b2 in transf:
        for b1 in transf:
            if b1.cod == b2.dom:
                t["comp0"][(cid(b2), cid(b1))] = cid(comp0_pstransf(b2, b1))
    for A2 in mods:
        for A1 in mods:
            if A1.cod == A2.dom:
                t["comp1"][(cid(A2), cid(A1))] = cid(comp1_psmod(A2, A1))
    for D2 in perts:
        for D1 in perts:
            if D1.cod == D2.dom:
                t["comp2"][(cid(D2), cid(D1))] = cid(comp2_pert(D2, D1))
    for b in transf:
        for A in mods:
            if b.dom == A.dom.cod:
                t["wl12"][(cid(b), cid(A))] = cid(whiskr_psmod(b, A))
            if b.cod == A.dom.dom:
                t["wr21"][(cid(A), cid(b))] = cid(whiskl_psmod(A, b))
        for D in perts:
            if b.dom == D.dom.dom.cod:
                t["wl13"][(cid(b), cid(D))] = cid(whisk_pert("l", b, D))
            if b.cod == D.dom.dom.dom:
                t["wr31"][(cid(D), cid(b))] = cid(whisk_pert("r", D, b))
    for A in mods:
        for D in perts:
            if A.dom == D.dom.cod:
                t["wm23"][(cid(A), cid(D))] = cid(whisk_pert("ml", A, D))
            if A.cod == D.dom.dom:
                t["wm32"][(cid(D), cid(A))] = cid(whisk_pert("mr", D, A))
    for B in mods:
        for A in mods:
            if A.dom.cod == B.dom.dom:
                T = tensor_psmod(B, A)
                # loud check that the componentwise interchanger bounds the
                # interchange pasting it is meant to fill
                src = comp1_psmod(whiskr_psmod(B.cod, A), whiskl_psmod(B, A.dom))
                tgt = comp1_psmod(whiskl_psmod(B, A.cod), whiskr_psmod(B.dom, A))
                if T.dom != src or T.cod != tgt:
                    raise StructuralError(
                        "componentwise interchanger has the wrong boundary")
                t["tensor"][(cid(B), cid(A))] = cid(T)

    space = FiniteGrayCategory(f"[{G.name},{H.name}]", cells, order, ids, t)
    return MappingSpace(G, H, space, values)


# -- functoriality -----------------------------------------------------------

def postcompose_map(S1: MappingSpace, S2: MappingSpace,
                    G: GrayFunctor, name="") -> GrayFunctor:
    """[D, G]: the functor S1 -> S2 acting by postcomposition with G."""
    if G.dom is not S1.cod_cat or G.cod is not S2.cod_cat \
            or S1.dom_cat is not S2.dom_cat:
        raise StructuralError("postcompose_map: category mismatch")
    maps = [{c: S2.cell_of(hcomp(G, S1.value_of(c)))
             for c in S1.space.dim_cells(k)} for k in range(4)]
    return GrayFunctor.of(S1.space, S2.space, *maps,
                          name=name or f"[{S1.dom_cat.name},{G.name}]")


def precompose_map(F: GrayFunctor, S1: MappingSpace,
                   S2: MappingSpace, name="") -> GrayFunctor:
    """[F, H]: the functor S1 -> S2 acting by precomposition with F."""
    if F.cod is not S1.dom_cat or F.dom is not S2.dom_cat \
            or S1.cod_cat is not S2.cod_cat:
        raise StructuralError("precompose_map: category mismatch")
    maps = [{c: S2.cell_of(hcomp(S1.value_of(c), F))
             for c in S1.space.dim_cells(k)} for k in range(4)]
    return GrayFunctor.of(S1.space, S2.space, *maps,
                          name=name or f"[{F.name},{S1.cod_cat.name}]")


# -- the postcomposition transformation L ------------------------------------

@dataclass(frozen=True)
class LImage:
    input: object
    output: object

    @property
    def kind(self) -> int:
        return rank(self.output)


def _L_coc_pert(S2: MappingSpace, b: PseudoTransformation,
                ap: PseudoTransformation, a: PseudoTransformation) -> Perturbation:
    """The cocycle component of L(b) at a composable transformation pair."""
    H_, Hp = b.dom, b.cod
    Gc = a.source_cat
    src = comp1_psmod(
        whiskl_psmod(hcomp_mod(b, ap), hcomp_func_transf(H_, a)),
        whiskr_psmod(hcomp_func_transf(Hp, ap), hcomp_mod(b, a)))
    tgt = hcomp_mod(b, comp0_pstransf(ap, a))
    return Perturbation.of(src, tgt,
                           {x: b.a2coc(ap.a0(x), a.a0(x))
                            for x in Gc.dim_cells(0)})


def L_map(S1: MappingSpace, S2: MappingSpace, x) -> LImage:
    """Postcomposition by a cell of [H, K], as a cell datum one level up."""
    r = rank(x)
    if r == 0:
        return LImage(x, postcompose_map(S1, S2, x))
    if r == 1:
        b = x
        at0 = {c: S2.cell_of(hcomp(b, S1.value_of(c)))
               for c in S1.space.dim_cells(0)}
        at1 = {c: S2.cell_of(hcomp_mod(b, S1.value_of(c)))
               for c in S1.space.dim_cells(1)}
        at2 = {c: S2.cell_of(hcomp(b, S1.value_of(c)))
               for c in S1.space.dim_cells(2)}
        coc = {}
        for cp in S1.space.dim_cells(1):
            for c in S1.space.dim_cells(1):
                if S1.space.src(cp) != S1.space.tgt(c):
                    continue
                coc[(cp, c)] = S2.cell_of(
                    _L_coc_pert(S2, b, S1.value_of(cp), S1.value_of(c)))
        return LImage(x, PseudoTransformation.of(
            postcompose_map(S1, S2, b.dom), postcompose_map(S1, S2, b.cod),
            at0, at1, at2, coc))
    if r == 2:
        B = x
        lb = L_map(S1, S2, B.dom).output
        lbp = L_map(S1, S2, B.cod).output
        at0 = {c: S2.cell_of(hcomp(B, S1.value_of(c)))
               for c in S1.space.dim_cells(0)}
        at1 = {c: S2.cell_of(hcomp(B, S1.value_of(c)))
               for c in S1.space.dim_cells(1)}
        return LImage(x, PseudoModification.of(lb, lbp, at0, at1))
    D = x
    la = L_map(S1, S2, D.dom).output
    lb = L_map(S1, S2, D.cod).output
    at0 = {c: S2.cell_of(hcomp(D, S1.value_of(c)))
           for c in S1.space.dim_cells(0)}
    return LImage(x, Perturbation.of(la, lb, at0))


def check_L_welldef(S1: MappingSpace, S2: MappingSpace, hk: MappingSpace
                    ) -> ValidationReport:
    """Every postcomposition image validates at its asserted kind, and every
    cocycle component of a rank-1 image is itself a perturbation."""
    rep = ValidationReport()
    validators = {0: validate_functor, 1: validate_pstransf,
                  2: validate_psmod, 3: validate_perturbation}
    for k in range(4):
        for c in hk.space.dim_cells(k):
            x = hk.value_of(c)
            img = L_map(S1, S2, x)
            rep.count(f"L image rank {k}", (c,), True)
            sub = validators[img.kind](img.output)
            if not sub.ok:
                rep.fail(f"L image rank {k}", (c,), "valid", sub.summary())
            if k == 1:
                for cp in S1.space.dim_cells(1):
                    for cc in S1.space.dim_cells(1):
                        if S1.space.src(cp) != S1.space.tgt(cc):
                            continue
                        pert = _L_coc_pert(S2, x, S1.value_of(cp),
                                           S1.value_of(cc))
                        sub = validate_perturbation(pert)
                        rep.count("L cocycle perturbation", (c, cp, cc), True)
                        if not sub.ok:
                            rep.fail("L cocycle perturbation", (c, cp, cc),
                                     "valid", sub.summary())
    return rep


def check_L_homomorphism(S1: MappingSpace, S2: MappingSpace,
                         b2: PseudoTransformation,
                         b1: PseudoTransformation) -> ValidationReport:
    """Postcomposition respects vertical composition of transformations."""
    rep = ValidationReport()
    lhs = comp0_pstransf(L_map(S1, S2, b2).output, L_map(S1, S2, b1).output)
    rhs = L_map(S1, S2, comp0_pstransf(b2, b1)).output
    for part in ("at0", "at1", "at2", "coc"):
        rep.check(f"L homomorphism {part}", (part,),
                  getattr(rhs, part), getattr(lhs, part))
    rep.check("L homomorphism endpoints", ("dom",), rhs.dom, lhs.dom)
    rep.check("L homomorphism endpoints", ("cod",), rhs.cod, lhs.cod)
    return rep


def check_L_identity(S1: MappingSpace, S2: MappingSpace,
                     H: GrayFunctor) -> ValidationReport:
    rep = ValidationReport()
    rep.check("L of identity transformation", (H.name,),
              id_pstransf(postcompose_map(S1, S2, H)),
              L_map(S1, S2, id_pstransf(H)).output)
    return rep


# -- structural maps ----------------------------------------------------------

def eval_i(S: MappingSpace) -> GrayFunctor:
    """Evaluation at the unique object of the terminal domain."""
    one = S.dom_cat
    if [len(one.dim_cells(k)) for k in range(4)] != [1, 1, 1, 1]:
        raise StructuralError("eval_i needs the terminal category as domain")
    pt = one.dim_cells(0)[0]
    map0 = {c: S.value_of(c)(pt) for c in S.space.dim_cells(0)}
    maps = [{c: S.value_of(c).a0(pt) for c in S.space.dim_cells(k)}
            for k in (1, 2, 3)]
    return GrayFunctor.of(S.space, S.cod_cat, map0, *maps, name="eval")


def check_i_naturality(S_g: MappingSpace, S_h: MappingSpace,
                       F: GrayFunctor) -> ValidationReport:
    """Evaluation commutes with postcomposition."""
    rep = ValidationReport()
    lhs = compose_functors(F, eval_i(S_g))
    rhs = compose_functors(eval_i(S_h), postcompose_map(S_g, S_h, F))
    rep.check("evaluation naturality", (F.name,), lhs.maps, rhs.maps)
    return rep


def unit_j(S: MappingSpace) -> str:
    """The cell of an endo-space that names the identity functor."""
    if S.dom_cat is not S.cod_cat:
        raise StructuralError("unit_j needs an endo mapping space")
    return S.cell_of(identity_functor(S.dom_cat))


def check_j_extranatural(S_gg: MappingSpace, S_hh: MappingSpace,
                         S_gh: MappingSpace, F: GrayFunctor) -> ValidationReport:
    """Post- and precomposition send the two identity picks to the same cell."""
    rep = ValidationReport()
    via_post = postcompose_map(S_gg, S_gh, F)(unit_j(S_gg))
    via_pre = precompose_map(F, S_hh, S_gh)(unit_j(S_hh))
    rep.check("identity pick extranaturality", (F.name,), via_post, via_pre)
    return rep
