"""Exact verification of weak (monoidal) Hom-bialgebras, their Yetter-Drinfeld
modules and the braided structure those modules carry.

All arithmetic is over the rationals; structures are given by structure
constants in a fixed basis.
"""

from .bialgebra import (
    CONVENTIONS,
    HOM,
    MONOIDAL_HOM,
    CounitalMaps,
    DefinitionMismatch,
    MissingAntipode,
    PresentedBialgebra,
    counital_maps,
)
from .braided import (
    Morphism,
    associator,
    braided_suite,
    braiding,
    check_braiding_laws,
    check_group_laws,
    conjugate_module,
    group_inverse,
    group_mul,
    group_unit,
    pentagon,
    permutation_pool,
    tensor_yd,
    triangle,
    unit_constraints,
)
from .checks import (
    CheckReport,
    Witness,
    all_pass,
    check_antipode,
    check_automorphism,
    check_counital_identities,
    check_hom_algebra,
    check_hom_coalgebra,
    check_morphism,
    check_weak_compat,
    failures,
    weak_hom_bialgebra_suite,
    weak_hom_hopf_suite,
)
from .constructions import (
    FIXTURES,
    alpha_twist,
    build_fixture,
    dualize,
    example_2_10,
    groupoid_pair,
    h2_remark,
    object_permutation,
    trivial_1d,
    xi_square_twist,
    xi_square_untwist,
)
from .io import load, run_suite, save
from .yd import (
    AutomorphismPair,
    YDModule,
    build_entwining,
    certify_pair,
    check_entwined_module,
    check_entwining,
    check_yd,
    identity_pair,
    unit_object,
)

__version__ = "0.1.0"
