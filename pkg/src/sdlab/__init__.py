"""Finite and symbolic checks for Boolean-algebra/space dualities.

The package verifies, instance by instance, the correspondences between
finite Boolean algebras, their hom spaces, algebras carrying a chosen point
family, witnessing maps into atomic algebras, and dense embeddings into
compact zero-dimensional Hausdorff spaces.  A symbolic cylinder tier
supplies the witnesses that the finite tier degenerates too far to show.
"""

from .boolalg import BoolAlg, BoolHom, FinBoolAlg, SetSubalgebra, enumerate_homs
from .errors import SdlabError
from .finspace import FinTopSpace, SpaceMap, discrete_space, generate_topology
from .harness import Report, SuiteConfig, run_suite
from .zalgebra import ZAlgebraInstance, z_instance
from .zmaps import ZMapInstance

__version__ = "0.1.0"

__all__ = [
    "BoolAlg",
    "BoolHom",
    "FinBoolAlg",
    "FinTopSpace",
    "Report",
    "SdlabError",
    "SetSubalgebra",
    "SpaceMap",
    "SuiteConfig",
    "ZAlgebraInstance",
    "ZMapInstance",
    "discrete_space",
    "enumerate_homs",
    "generate_topology",
    "run_suite",
    "z_instance",
    "__version__",
]
