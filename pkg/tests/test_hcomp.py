"""Horizontal composition across a middle category and its theorems."""

import itertools

import pytest

from graycat import (check_hcomp_modification, check_hcomp_perturbations,
                     check_hcomp_typing, check_interchange, check_pasteunit,
                     comp0_pstransf, enumerate_functors, enumerate_psmod,
                     enumerate_pert, enumerate_pstransf, hcomp, id_psmod,
                     id_pstransf, identity_functor, lhc, rhc,
                     validate_perturbation, validate_psmod, validate_pstransf)
from graycat.errors import StructuralError
from graycat.hcomp import hcomp_func_transf, hcomp_mod, hcomp_transf_func
from graycat.transfors import PseudoTransformation, rank


def test_functor_composition_case(bc_endos):
    zero, ident = bc_endos
    out = hcomp(ident, zero)
    assert rank(out) == 0
    assert out.maps == zero.maps


def test_whisker_by_a_functor_restricts_components(bc, bc_endos, bc_transf):
    # the components of b composed with G are b's components at G-images
    G = bc_endos[1]
    b = bc_transf[1]
    out = hcomp_transf_func(b, G)
    for x in bc.dim_cells(0):
        assert out.a0(x) == b.a0(G(x))
    for f in bc.dim_cells(1):
        assert out.a1(f) == b.a1(G(f))


def test_postwhisker_by_a_functor_applies_it(bc, bc_endos, bc_transf):
    H = bc_endos[0]
    b = bc_transf[1]
    out = hcomp_func_transf(H, b)
    for p in bc.dim_cells(2):
        assert out.a2(p) == H(b.a2(p))
    assert validate_pstransf(out).ok


def test_mixed_composite_at_identity_1cells_is_the_identity(bc, bc_transf):
    # the only 1-cell of the bicharacter domain is an identity, so both
    # cocycle stages normalize away and the component collapses
    m = hcomp_mod(bc_transf[1], bc_transf[1])
    for f in bc.dim_cells(1):
        assert bc.is_id(m.a1(f))


def test_mixed_composite_is_a_modification_everywhere(bc, wpair, bc_transf):
    F = enumerate_functors(wpair, bc)[0]
    als = enumerate_pstransf(F, F)
    for b in bc_transf:
        for a in als:
            assert check_hcomp_modification(b, a).ok


def test_mixed_composite_direction_is_forced(bc_transf):
    m = hcomp_mod(bc_transf[1], bc_transf[1])
    assert m.dom == rhc(bc_transf[1], bc_transf[1])
    assert m.cod == lhc(bc_transf[1], bc_transf[1])


def test_one_sided_composites_expand_componentwise(bc, wpair, bc_transf):
    """Dual route: the one-sided composites against direct per-component
    evaluation of their data."""
    F = enumerate_functors(wpair, bc)[0]
    K = bc
    for b in bc_transf:
        for a in enumerate_pstransf(F, F)[:6]:
            H_, Hp = b.dom, b.cod
            G_, Gp = a.dom, a.cod
            left = lhc(b, a)
            right = rhc(b, a)
            assert validate_pstransf(left).ok and validate_pstransf(right).ok
            for x in wpair.dim_cells(0):
                assert left.a0(x) == K.h0(b.a0(Gp(x)), H_(a.a0(x)))
                assert right.a0(x) == K.h0(Hp(a.a0(x)), b.a0(G_(x)))
            for f in wpair.dim_cells(1):
                x, y = wpair.src(f), wpair.tgt(f)
                assert left.a1(f) == K.v1(K.h0(b.a0(Gp(y)), H_(a.a1(f))),
                                          K.h0(b.a1(Gp(f)), H_(a.a0(x))))
                assert right.a1(f) == K.v1(K.h0(Hp(a.a0(y)), b.a1(G_(f))),
                                           K.h0(Hp(a.a1(f)), b.a0(G_(x))))
            for p in wpair.dim_cells(2):
                f, fp = wpair.src(p), wpair.tgt(p)
                x, y = wpair.boundary(p, 0)
                stage0 = K.v1(K.h0(b.a0(Gp(y)), H_(a.a2(p))),
                              K.h0(b.a1(Gp(f)), H_(a.a0(x))))
                stage1 = K.v1(K.h0(b.a0(Gp(y)), H_(a.a1(fp))),
                              K.h0(b.a2(Gp(p)), H_(a.a0(x))))
                assert left.a2(p) == K.v2(stage1, stage0)
            for (fp, f), v in left.coc:
                x, z = wpair.src(f), wpair.tgt(fp)
                swap = K.v1(
                    K.h0(b.a0(Gp(z)), K.h0(H_(a.a1(fp)), H_(G_(f)))),
                    K.v1(K.inv_or_fail(K.tens(b.a1(Gp(fp)), H_(a.a1(f)))),
                         K.h0(Hp(Gp(fp)), K.h0(b.a1(Gp(f)), H_(a.a0(x))))))
                collect = K.v1(K.h0(b.a0(Gp(z)), H_(a.a2coc(fp, f))),
                               K.h0(b.a2coc(Gp(fp), Gp(f)), H_(a.a0(x))))
                assert v == K.v2(collect, swap)


def test_one_sided_unit_cases(bc, bc_endos, bc_transf):
    G = bc_endos[1]
    b = bc_transf[1]
    assert lhc(b, id_pstransf(G)) == hcomp_transf_func(b, G)
    assert rhc(b, id_pstransf(G)) == hcomp_transf_func(b, G)
    a = bc_transf[1]
    H = a.dom
    assert lhc(id_pstransf(H), a) == hcomp_func_transf(H, a)
    assert rhc(id_pstransf(H), a) == hcomp_func_transf(H, a)


def test_pasteunit_exactly(bc, one, w1, wpair, bc_transf):
    for Gc in (one, w1, wpair):
        for G in enumerate_functors(Gc, bc):
            for b in bc_transf:
                assert check_pasteunit(b, G).ok


def test_interchange_over_all_triples(bc, w1, bc_transf):
    F = enumerate_functors(w1, bc)[0]
    als = enumerate_pstransf(F, F)
    for b2, b1 in itertools.product(bc_transf, repeat=2):
        for a in als:
            assert check_interchange(b2, b1, a).ok


def test_interchange_unit_collapses(bc, bc_transf):
    ident = id_pstransf(bc_transf[0].dom)
    b = bc_transf[1]
    a = bc_transf[1]
    rep = check_interchange(ident, b, a)
    assert rep.ok
    rep = check_interchange(b, ident, a)
    assert rep.ok


def test_interchange_detects_an_injected_at2_corruption(bc_four, wpair):
    F = enumerate_functors(wpair, bc_four)[0]
    als = [a for a in enumerate_pstransf(F, F)
           if dict(a.at1)["f"] == "a1" and dict(a.at1)["g"] == "a1"]
    ident4 = identity_functor(bc_four)
    bs = enumerate_pstransf(ident4, ident4)
    b = bs[1]
    at2 = dict(b.at2)
    at2["a1"] = "a1u" + str((int(at2["a1"].split("u")[1]) + 1) % 4)
    bad = PseudoTransformation.of(b.dom, b.cod, dict(b.at0), dict(b.at1),
                                  at2, dict(b.coc))
    hits = [1 for b2, b1 in itertools.product([bad, bs[0]], repeat=2)
            if bad in (b2, b1)
            for a in als if not check_interchange(b2, b1, a).ok]
    assert hits


def test_rank3_composites_are_perturbations(bc, bc_transf):
    u1 = bc_transf[1]
    A = enumerate_psmod(u1, u1)[1]
    assert check_hcomp_perturbations(u1, A).ok
    assert check_hcomp_perturbations(A, u1).ok


def test_rank3_rejects_wrong_ranks(bc_transf):
    with pytest.raises(StructuralError):
        check_hcomp_perturbations(bc_transf[0], bc_transf[1])


def test_perturbation_case_detects_mutation(bc_four, wpair):
    F = enumerate_functors(wpair, bc_four)[0]
    a = [t for t in enumerate_pstransf(F, F)
         if dict(t.at1)["f"] == "a1" and dict(t.at1)["g"] == "a1"][0]
    ident4 = identity_functor(bc_four)
    b = enumerate_pstransf(ident4, ident4)[1]
    at2 = dict(b.at2)
    at2["a1"] = "a1u" + str((int(at2["a1"].split("u")[1]) + 1) % 4)
    bad = PseudoTransformation.of(b.dom, b.cod, dict(b.at0), dict(b.at1),
                                  at2, dict(b.coc))
    assert not validate_psmod(hcomp_mod(bad, a)).ok


def test_typing_runs_all_sixteen_cases(bc, bc_transf):
    u1 = bc_transf[1]
    A = enumerate_psmod(u1, u1)[1]
    D = enumerate_pert(A, A)[1]
    reps = [u1.dom, u1, A, D]
    seen = set()
    for left, right in itertools.product(reps, repeat=2):
        rep = check_hcomp_typing(left, right)
        assert rep.ok, rep.summary()
        seen.add((rank(left), rank(right)))
    assert len(seen) == 16


def test_degenerate_cases_are_identity_perturbations(bc, bc_transf):
    u1 = bc_transf[1]
    A = enumerate_psmod(u1, u1)[1]
    D = enumerate_pert(A, A)[1]
    out = hcomp(A, A)
    assert rank(out) == 3
    assert out.dom == out.cod
    H = out.target_cat
    assert all(H.is_id(v) for _, v in out.at0)
    out = hcomp(u1, D)
    assert rank(out) == 3 and out.dom == out.cod
    out = hcomp(D, D)
    assert rank(out) == 3 and out.dom == out.cod


def test_middle_category_mismatch_is_structural(bc, w1, bc_transf):
    F = enumerate_functors(w1, bc)[0]
    a = enumerate_pstransf(F, F)[0]
    with pytest.raises(StructuralError):
        hcomp(a, bc_transf[0])
