from nodal_kstab.local_model.bivariate import BivariateSeries, NewtonPolygon, weight_key
from nodal_kstab.local_model.chart import (
    branch_inverse,
    branch_parametrization,
    localize,
    multiplicity_at_node,
    psi_powers,
)
from nodal_kstab.local_model.forms import NODAL_CUBIC, X0, X1, X2, Form, monomials_of_degree
from nodal_kstab.local_model.lattice import colength
from nodal_kstab.local_model.valuation import (
    DEFAULT_TRUNCATION_CAP,
    MonomialValuation,
    WeightedOrder,
    initial_truncation,
    order_bound,
    required_truncation,
    vweight,
)

__all__ = [
    "BivariateSeries",
    "DEFAULT_TRUNCATION_CAP",
    "Form",
    "MonomialValuation",
    "NODAL_CUBIC",
    "NewtonPolygon",
    "WeightedOrder",
    "X0",
    "X1",
    "X2",
    "branch_inverse",
    "branch_parametrization",
    "colength",
    "initial_truncation",
    "localize",
    "monomials_of_degree",
    "multiplicity_at_node",
    "order_bound",
    "psi_powers",
    "required_truncation",
    "vweight",
    "weight_key",
]
