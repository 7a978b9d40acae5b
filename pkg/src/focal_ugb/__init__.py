"""Exact toolkit for the focal polynomials of (universal) multiview ideals.

Modules
-------
fields        exact rationals and 62-bit prime fields
varspace      indexed variable spaces (multiview / universal / doubled)
poly          sparse multivariate polynomials, multihomogenization
orders        weighted monomial orders with product extensions
determinant   memoized symbolic Laplace expansion
groebner      multivariate division and the Buchberger S-pair check
cameras       generic cameras, focal matrices and focal enumeration
complexes     facets of the multiview / universal complexes
matroids      transversal / union matroid oracles
parametrize   cone parametrizations and Jacobian dominance certificates
lifting       constructive preimages for facet projections
verify        representative-facet pipeline and the n=4 base case
cli           seed-stamped command-line front-end
"""

from .cameras import (CameraConfig, Focal, enumerate_focals, focal_count,
                      focal_matrix, sample_generic_cameras, spread_and_profile)
from .complexes import (canonical_facet, census_delta_tilde,
                        count_facets_delta, count_facets_delta_tilde,
                        facets_bruteforce, facets_delta_n, facets_delta_tilde)
from .determinant import det_symbolic
from .fields import ALT_PRIME, DEFAULT_PRIME, GF_DEFAULT, QQ, PrimeField
from .groebner import buchberger_check, reduce, s_polynomial
from .lifting import (DegenerateTargetError, lift_preimage_multiview,
                      lift_preimage_universal)
from .matroids import (MinorMatroid, PartitionMatroid, TransversalMatroid,
                       UniformMatroid, UnionMatroid, delta_matroid,
                       delta_tilde_matroid, matroid_independent, matroid_minor,
                       matroid_rank)
from .orders import TermOrder, initial_monomial, sample_order
from .parametrize import (MultiviewCone, UniversalCone, jacobian_dominance)
from .poly import MultiPoly, dehomogenize, multihomogenize
from .varspace import VarSpace
from .verify import base_case_groebner, verify_hl

__version__ = "0.1.0"
