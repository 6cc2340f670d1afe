"""Finite soft topologies and a lab that checks which separation axioms
survive the passage between soft and crisp topologies."""

from .errors import (
    BoundExceeded,
    ContextMismatch,
    DuplicateParameter,
    MissingParameter,
    NotABase,
    NotASubfamily,
    NotATopology,
    NotFound,
    SizeGuardExceeded,
    SoftTopoError,
    UnknownParameter,
    UnknownPoint,
    UnknownTheorem,
    ValidationError,
)
from .generators import (
    CrispSystem,
    associated,
    extended,
    extract_crisp,
    extract_system,
    formula1,
    formula2,
    product_base,
    union_single_set,
)
from .separation import Axiom, AxiomReport, Witness, check, check_crisp, check_soft
from .softset import (
    Context,
    PointSet,
    SoftSet,
    absolute_soft_set,
    from_product_subset,
    lower_cylinder,
    make_soft_set,
    null_soft_set,
    point_in,
    soft_complement,
    soft_intersection,
    soft_point,
    soft_subset,
    soft_union,
    to_product_subset,
    upper_cylinder,
)
from .topology import (
    Comparison,
    CrispTopology,
    SoftTopology,
    compare,
    generate_crisp,
    generate_soft,
    is_crisp_topology,
    is_soft_base,
    is_soft_closed_in_single_set_topology,
    is_soft_topology,
    minimal_base,
    soft_closed_family,
)

__version__ = "0.1.0"
