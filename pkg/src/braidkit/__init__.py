"""braidkit: exact symbolic computation with braided Hopf algebras.

Presented algebras by noncommutative rewriting, dual-quasitriangular
structures and the braidings they induce on comodules, and the standard
constructions built from them: transmutation, bosonisation, biproducts and
braided smash coproducts, all over exact Laurent-polynomial coefficients.
"""

from .scalar import ONE, Q, QINV, ZERO, Scalar
from .ncpoly import Alphabet, NcElement
from .rewrite import ConfluenceReport, Presentation, RewriteRule, normalize
from .structuremap import (
    BraidedHopf,
    ComoduleAlgebra,
    DqtFunctional,
    DqtHopf,
    GenTable,
    HopfAlgebra,
    braiding,
    braiding_inverse,
    induced_action,
)
from .braidedops import (
    BraidedTensorAlgebra,
    braided_antipode,
    braided_coproduct,
    braided_counit,
    braided_product,
)
from .constructions import (
    BiproductInput,
    BraidedSmashHopf,
    InducedAction,
    SmashHopf,
    TabledAction,
    TransmutedAlgebra,
    adjoint_coaction,
    biproduct,
    bosonise,
    braided_smash_coproduct,
    transmuted_product,
)
from .catalog import load
from .deffile import export_definition, parse_definition, parse_element, parse_scalar
from .verify import (
    CheckBounds,
    Report,
    verify_braided_hopf,
    verify_bundle,
    verify_comodule,
    verify_crossed_module,
    verify_dqt,
    verify_hopf,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "BiproductInput", "BraidedHopf", "BraidedSmashHopf",
    "BraidedTensorAlgebra", "CheckBounds", "ComoduleAlgebra",
    "ConfluenceReport", "DqtFunctional", "DqtHopf", "GenTable", "HopfAlgebra",
    "InducedAction", "NcElement", "ONE", "Presentation", "Q", "QINV",
    "Report", "RewriteRule", "Scalar", "SmashHopf", "TabledAction",
    "TransmutedAlgebra", "ZERO", "adjoint_coaction", "biproduct", "bosonise",
    "braided_antipode", "braided_coproduct", "braided_counit",
    "braided_product", "braided_smash_coproduct", "braiding",
    "braiding_inverse", "errors", "export_definition", "induced_action",
    "load", "normalize", "parse_definition", "parse_element", "parse_scalar",
    "transmuted_product", "verify_braided_hopf", "verify_bundle",
    "verify_comodule", "verify_crossed_module", "verify_dqt", "verify_hopf",
]
