"""Exact K-stability invariants for monomial valuations at the node of the nodal cubic."""
from nodal_kstab.blowup_geom import invariant_record
from nodal_kstab.local_model import MonomialValuation, vweight
from nodal_kstab.nodal_catalog import S_exact, classify, construct_Dn, d_sequence
from nodal_kstab.scan import ScanConfig, delta_upper_bound, scan

__version__ = "0.1.0"

__all__ = [
    "MonomialValuation",
    "S_exact",
    "ScanConfig",
    "classify",
    "construct_Dn",
    "d_sequence",
    "delta_upper_bound",
    "invariant_record",
    "scan",
    "vweight",
]
