"""Built mapping spaces, functoriality, postcomposition, structural maps."""

import itertools

import pytest

from graycat import (GrayFunctor, L_map, build_mapping_space,
                     check_L_homomorphism, check_L_welldef, check_i_naturality,
                     check_j_extranatural, comp0_pstransf, compose_functors,
                     enumerate_functors, enumerate_psmod, enumerate_pert,
                     enumerate_pstransf, eval_i, fixtures, hcomp, id_pstransf,
                     identity_functor, postcompose_map, precompose_map,
                     unit_j, validate_functor, validate_gray_category,
                     validate_perturbation)
from graycat.errors import SizeBoundError, StructuralError
from graycat.mapspace import check_L_identity
from graycat.transfors import rank


def test_space_over_the_point_matches_the_target(space_one_bc, bc):
    counts = [len(space_one_bc.space.dim_cells(k)) for k in range(4)]
    assert counts == [len(bc.dim_cells(k)) for k in range(4)]
    assert validate_gray_category(space_one_bc.space).ok


def test_space_cell_counts_match_the_enumeration_oracles(space_w1_bc, w1, bc):
    counts = [len(space_w1_bc.space.dim_cells(k)) for k in range(4)]
    fs = enumerate_functors(w1, bc)
    ts = [t for Fi in fs for Fj in fs for t in enumerate_pstransf(Fi, Fj)]
    ms = [m for a in ts for b in ts
          if a.dom == b.dom and a.cod == b.cod
          for m in enumerate_psmod(a, b)]
    ps = [p for A in ms for B in ms
          if A.dom == B.dom and A.cod == B.cod
          for p in enumerate_pert(A, B)]
    assert counts == [len(fs), len(ts), len(ms), len(ps)] == [1, 2, 16, 64]


def test_built_spaces_validate(space_w1_bc, space_bc_bc):
    assert validate_gray_category(space_w1_bc.space).ok
    assert validate_gray_category(space_bc_bc.space).ok
    assert [len(space_bc_bc.space.dim_cells(k)) for k in range(4)] == [2, 4, 8, 16]


def test_dictionary_tables_agree_with_the_calculus(space_bc_bc):
    S = space_bc_bc
    for (c2, c1), r in S.space.tables["comp0"].items():
        assert S.value_of(r) == comp0_pstransf(S.value_of(c2), S.value_of(c1))
    for (b, a), r in S.space.tables["tensor"].items():
        T = S.value_of(r)
        H = T.target_cat
        for x, v in T.at0:
            assert v == H.tens(S.value_of(b).a0(x), S.value_of(a).a0(x))


def test_space_identities_name_identity_transfors(space_bc_bc):
    S = space_bc_bc
    for c in S.space.dim_cells(0):
        assert S.value_of(S.space.ids[c]) == id_pstransf(S.value_of(c))


def test_postcompose_functor_laws(space_one_bc, bc, bc_endos):
    S = space_one_bc
    zero, ident = bc_endos
    for G in bc_endos:
        got = postcompose_map(S, S, G)
        assert validate_functor(got).ok
    assert postcompose_map(S, S, identity_functor(bc)).maps == \
        identity_functor(S.space).maps
    lhs = compose_functors(postcompose_map(S, S, zero),
                           postcompose_map(S, S, ident))
    rhs = postcompose_map(S, S, compose_functors(zero, ident))
    assert lhs.maps == rhs.maps


def test_precompose_functor_laws(one, w1, bc, space_one_bc, space_w1_bc):
    collapse = enumerate_functors(w1, one)[0]
    got = precompose_map(collapse, space_one_bc, space_w1_bc)
    assert validate_functor(got).ok
    ident = identity_functor(w1)
    assert precompose_map(ident, space_w1_bc, space_w1_bc).maps == \
        identity_functor(space_w1_bc.space).maps
    # contravariance over a two-step collapse
    idc = compose_functors(collapse, ident)
    assert precompose_map(idc, space_one_bc, space_w1_bc).maps == \
        compose_functors(precompose_map(ident, space_w1_bc, space_w1_bc),
                         precompose_map(collapse, space_one_bc, space_w1_bc)).maps


def test_L_of_identity_is_the_identity(space_one_bc, space_bc_bc):
    for c in space_bc_bc.space.dim_cells(0):
        H = space_bc_bc.value_of(c)
        img = L_map(space_one_bc, space_one_bc, H).output
        assert validate_functor(img).ok
        assert check_L_identity(space_one_bc, space_one_bc, H).ok
    ident = identity_functor(space_one_bc.cod_cat)
    assert L_map(space_one_bc, space_one_bc, ident).output.maps == \
        identity_functor(space_one_bc.space).maps


def test_L_cocycle_components_restrict_the_input_cocycle(space_one_bc,
                                                         space_bc_bc):
    # the defining property of the postcomposition 2-cocycle: its component
    # at each object is the input cocycle at the 0-components
    from graycat.mapspace import _L_coc_pert
    S = space_one_bc
    for c in space_bc_bc.space.dim_cells(1):
        b = space_bc_bc.value_of(c)
        for cp_ in S.space.dim_cells(1):
            for cc in S.space.dim_cells(1):
                if S.space.src(cp_) != S.space.tgt(cc):
                    continue
                ap, a = S.value_of(cp_), S.value_of(cc)
                pert = _L_coc_pert(S, b, ap, a)
                for x, v in pert.at0:
                    assert v == b.a2coc(ap.a0(x), a.a0(x))
                assert validate_perturbation(pert).ok


def test_L_image_matches_under_evaluation(space_one_bc, space_bc_bc):
    # postcomposing over the point then evaluating returns the original cell
    S = space_one_bc
    ev = eval_i(S)
    for c in space_bc_bc.space.dim_cells(1):
        b = space_bc_bc.value_of(c)
        img = L_map(S, S, b).output
        pt = S.dom_cat.dim_cells(0)[0]
        for Fc in S.space.dim_cells(0):
            got = S.value_of(img.a0(Fc))
            assert got.a0(pt) == b.a0(S.value_of(Fc)(pt))


def test_L_welldef_over_the_point(space_one_bc, space_bc_bc):
    assert check_L_welldef(space_one_bc, space_one_bc, space_bc_bc).ok


def test_L_homomorphism_over_the_point(space_one_bc, space_bc_bc):
    ts = [space_bc_bc.value_of(c) for c in space_bc_bc.space.dim_cells(1)]
    pairs = [(b2, b1) for b2, b1 in itertools.product(ts, ts)
             if b1.cod == b2.dom]
    assert pairs
    for b2, b1 in pairs:
        assert check_L_homomorphism(space_one_bc, space_one_bc, b2, b1).ok


def test_L_welldef_detects_corrupted_input(space_one_bc, space_bc_bc):
    """A corrupted transformation either fails to postcompose into the built
    space at all, or its image fails the validator."""
    from graycat import validate_pstransf
    from graycat.errors import ClosureError
    from graycat.transfors import PseudoTransformation
    c = space_bc_bc.space.dim_cells(1)[1]
    b = space_bc_bc.value_of(c)
    at2 = dict(b.at2)
    at2["a1"] = "a1u0" if at2["a1"] == "a1u1" else "a1u1"
    bad = PseudoTransformation.of(b.dom, b.cod, dict(b.at0), dict(b.at1),
                                  at2, dict(b.coc))
    try:
        img = L_map(space_one_bc, space_one_bc, bad).output
    except ClosureError:
        return
    assert not validate_pstransf(img).ok


def test_eval_i_is_a_bijective_functor(space_one_bc, bc):
    ev = eval_i(space_one_bc)
    assert validate_functor(ev).ok
    for k in range(4):
        image = {dict(ev.maps[k])[c] for c in space_one_bc.space.dim_cells(k)}
        assert image == set(bc.dim_cells(k))


def test_eval_naturality(space_one_bc, bc_endos):
    for F in bc_endos:
        assert check_i_naturality(space_one_bc, space_one_bc, F).ok


def test_identity_pick_and_extranaturality(bc, one, w1, space_bc_bc):
    j = unit_j(space_bc_bc)
    assert space_bc_bc.value_of(j).maps == identity_functor(bc).maps
    for F in enumerate_functors(bc, bc):
        assert check_j_extranatural(space_bc_bc, space_bc_bc, space_bc_bc, F).ok
    S_w1w1 = build_mapping_space(w1, w1)
    S_11 = build_mapping_space(one, one)
    S_w1_1 = build_mapping_space(w1, one)
    for F in enumerate_functors(w1, one):
        assert check_j_extranatural(S_w1w1, S_11, S_w1_1, F).ok
    assert unit_j(S_w1w1) is not None


def test_eval_i_requires_point_domain(space_bc_bc):
    with pytest.raises(StructuralError):
        eval_i(space_bc_bc)


def test_size_bound_propagates(bc):
    with pytest.raises(SizeBoundError):
        build_mapping_space(bc, bc, bound=1)
