from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from nodal_kstab.exceptions import LemmaViolationError
from nodal_kstab.exactnum.text import format_number
from nodal_kstab.local_model.forms import NODAL_CUBIC, Form
from nodal_kstab.nodal_catalog.curves import construct_Dn
from nodal_kstab.nodal_catalog.piecewise import S_exact
from nodal_kstab.blowup_geom.model import (
    BlowupModel,
    CurveClass,
    FujitaTriple,
    check_fujita,
    fujita_complete,
    strict_transform_class,
    t_certificate,
)
from nodal_kstab.utils.logger import get_logger
from nodal_kstab.utils.settings import Settings

logger = get_logger(__name__)


@dataclass(frozen=True)
class InvariantRecord:
    a: int
    b: int
    A: Fraction
    S: Fraction
    T: Optional[Fraction]
    epsilon: Optional[Fraction]
    witness_name: Optional[str]
    witness: Optional[CurveClass]
    provenance: str

    @property
    def t(self) -> Fraction:
        return Fraction(self.b, self.a)

    def to_json(self) -> dict:
        def text(x):
            return None if x is None else format_number(x)

        witness = None
        if self.witness is not None:
            witness = {"name": self.witness_name, **self.witness.to_json()}
        return {
            "a": self.a,
            "b": self.b,
            "t": format_number(self.t),
            "A": format_number(self.A),
            "T": text(self.T),
            "epsilon": text(self.epsilon),
            "S": format_number(self.S),
            "witness": witness,
            "provenance": self.provenance,
        }


def _witnesses(settings: Settings) -> Iterator[Tuple[str, Form, str]]:
    yield "C", NODAL_CUBIC, "verified"
    for n in range(1, settings.dn_max + 1):
        curve = construct_Dn(n, settings.dn_max, settings.irreducibility_max, settings.truncation_cap)
        yield f"D_{n}", curve.form, curve.provenance
        yield f"sigma(D_{n})", curve.form.swap_branches(), curve.provenance


def invariant_record(a: int, b: int, settings: Optional[Settings] = None) -> InvariantRecord:
    """A, T, epsilon and S of v_t for t = b/a, normalized by 1/a.

    The first catalogue curve (C, then D_n and its swap sigma(D_n)) whose
    strict transform has nonpositive self-intersection certifies T; Fujita's
    relation completes epsilon and S. Without such a curve S comes from the
    piecewise formula.
    """
    settings = settings or Settings()
    model = BlowupModel(a, b)
    v = model.valuation
    A = Fraction(model.log_discrepancy, a)
    logger.info(f"🔧 Invariant record | weights={v.weights}")

    for name, form, provenance in _witnesses(settings):
        witness = strict_transform_class(form, v, settings.truncation_cap)
        certificate = t_certificate(witness, irreducible=True)
        if certificate is None:
            continue
        triple: FujitaTriple = fujita_complete(certificate.T, a, b)
        check_fujita(witness, triple)
        normalized = triple.normalized(a)
        if normalized.S != S_exact(v.slope):
            raise LemmaViolationError(
                f"Fujita S = {normalized.S} disagrees with the piecewise value at t = {v.slope}"
            )
        logger.info(f"✅ T certified by {name} | kind={certificate.kind}, S={normalized.S}")
        return InvariantRecord(
            a, b, A, normalized.S, normalized.T, normalized.epsilon,
            name, witness, f"fujita:{name}:{certificate.kind}:{provenance}",
        )

    logger.warning(f"⚠️ No catalogue witness for {v.weights}; using the piecewise formula")
    return InvariantRecord(a, b, A, S_exact(v.slope), None, None, None, None, "piecewise-formula")
