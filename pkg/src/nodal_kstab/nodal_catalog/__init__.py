from nodal_kstab.nodal_catalog.classify import DegenerationDescriptor, Verdict, classify
from nodal_kstab.nodal_catalog.curves import (
    DEFAULT_DN_MAX,
    DEFAULT_IRREDUCIBILITY_MAX,
    SingularCurve,
    construct_Dn,
    d_prime_route,
    forms_with_order,
    irreducibility_certificate,
    newton_polygon,
    ord_on_weights,
)
from nodal_kstab.nodal_catalog.piecewise import (
    A_invariant,
    S_exact,
    beyond_threshold_value,
    boundary_limit,
    locate_piece,
    piece_value,
)
from nodal_kstab.nodal_catalog.sequence import (
    Breakpoints,
    DSequence,
    breakpoint,
    breakpoints,
    d_sequence,
    fibonacci,
)

__all__ = [
    "A_invariant",
    "Breakpoints",
    "DEFAULT_DN_MAX",
    "DEFAULT_IRREDUCIBILITY_MAX",
    "DSequence",
    "DegenerationDescriptor",
    "S_exact",
    "SingularCurve",
    "Verdict",
    "beyond_threshold_value",
    "boundary_limit",
    "breakpoint",
    "breakpoints",
    "classify",
    "construct_Dn",
    "d_prime_route",
    "d_sequence",
    "fibonacci",
    "forms_with_order",
    "irreducibility_certificate",
    "locate_piece",
    "newton_polygon",
    "ord_on_weights",
    "piece_value",
]
