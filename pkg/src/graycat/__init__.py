"""Finite Gray-categories and their mapping-space calculus, machine-checked.

The package represents finite semistrict 3-categories as explicit operation
tables, the transfors between them (strict functors, pseudo-transformations,
pseudo-modifications, perturbations) as component families, and verifies the
defining axioms and the horizontal-composition theorems exhaustively on
finite fixtures.
"""

from .core import (Cell, FiniteGrayCategory, ValidationReport, Violation,
                   compose, identity, inverse, tensor,
                   validate_gray_category, whisker)
from .errors import (ClosureError, CoherenceError, GraycatError, ParseError,
                     SizeBoundError, StructuralError)
from .fixtures import (FiniteAbelianGroup, bc2, bc4, build_bicharacter_gray,
                       build_walking, cyclic, terminal_category, walking_pair,
                       walking_triple,
                       walking_whisker_left, walking_whisker_right)
from .functors import (GrayFunctor, compose_functors, enumerate_functors,
                       identity_functor, validate_functor)
from .transfors import (Perturbation, PseudoModification, PseudoTransformation,
                        enumerate_pert, enumerate_psmod, enumerate_pstransf,
                        id_pert, id_psmod, id_pstransf, validate_perturbation,
                        validate_psmod, validate_pstransf)
from .calculus import (comp0_pstransf, comp1_psmod, comp2_pert, tensor_psmod,
                       whisk_pert, whiskl_psmod, whiskr_psmod)
from .hcomp import (HCell, check_hcomp_modification, check_hcomp_perturbations,
                    check_hcomp_typing, check_interchange, check_pasteunit,
                    hcomp, lhc, rhc)
from .mapspace import (LImage, MappingSpace, L_map, build_mapping_space,
                       check_L_homomorphism, check_L_welldef, eval_i,
                       check_i_naturality, check_j_extranatural,
                       postcompose_map, precompose_map, unit_j)

__version__ = "0.1.0"
