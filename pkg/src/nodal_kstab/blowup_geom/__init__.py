from nodal_kstab.blowup_geom.model import (
    BlowupModel,
    CurveClass,
    FujitaTriple,
    TCertificate,
    check_fujita,
    fujita_complete,
    nef_threshold_from_witness,
    strict_transform_class,
    t_certificate,
)
from nodal_kstab.blowup_geom.records import InvariantRecord, invariant_record

__all__ = [
    "BlowupModel",
    "CurveClass",
    "FujitaTriple",
    "InvariantRecord",
    "TCertificate",
    "check_fujita",
    "fujita_complete",
    "invariant_record",
    "nef_threshold_from_witness",
    "strict_transform_class",
    "t_certificate",
]
