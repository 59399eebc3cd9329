"""Classification of one ideal: every property, verified certificates and an audit.

The audit lists internal inconsistencies (failed certificate replays, broken
implications, duality mismatches, homology identities). It must stay empty; a
non-empty audit points at a bug, not at the input.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Union

from monodec.classify.certificates import CertificateKind, Decision
from monodec.classify.chordal import is_chordal_complement_oracle
from monodec.classify.decomposition import is_shellable, is_shelling_order, is_vertex_decomposable
from monodec.classify.duality import (
    is_cohen_macaulay,
    is_sequentially_cm,
    lq_to_shelling_order,
    shelling_to_lq_order,
)
from monodec.classify.exchange import find_wpm_order, is_matroidal, is_polymatroidal
from monodec.classify.quotients import find_lq_order, has_linear_quotients_under
from monodec.classify.splitting import SplitReading, is_vertex_splittable
from monodec.classify.verify import Subject, describe_certificate, verify_certificate
from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.complex import (
    SimplicialComplex,
    alexander_dual,
    dual_from_facets,
    stanley_reisner_complex,
)
from monodec.core.field import RATIONALS, FieldSpec
from monodec.core.ideal import MonomialIdeal, deg_ideal
from monodec.errors import ResourceCapError, Verdict
from monodec.homology.betti import (
    betti_table,
    euler_mismatches,
    generator_degree_mismatches,
    has_linear_resolution,
    hilbert_numerator,
    is_componentwise_linear,
)

LOGGER = logging.getLogger(__name__)

UNDECIDED = Verdict.UNDECIDED.value

# Keys a report can carry, in report order.
PROPERTY_KEYS = (
    "generators",
    "polymatroidal",
    "matroidal",
    "weakly_polymatroidal",
    "wpm_orders_covered",
    "linear_quotients",
    "vertex_splittable",
    "vertex_splittable_relaxed",
    "splitting_readings_agree",
    "regularity",
    "projective_dimension",
    "linear_resolution",
    "componentwise_linear",
    "complement_chordal",
    "dual",
    "dual_regularity",
    "cohen_macaulay",
    "sequentially_cm",
    "vertex_decomposable",
    "shellable",
    "dual_vertex_splittable",
    "dual_linear_quotients",
)

Value = Union[bool, int, str]


def format_value(value: Value) -> str:
    """Text form used by reports and corpus comparisons."""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass
class ClassificationReport:
    subject: str
    n: int
    field: str
    properties: dict[str, Value] = field(default_factory=dict)
    certificates: dict[str, Any] = field(default_factory=dict)
    audit: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def has_undecided(self) -> bool:
        return any(v == UNDECIDED for v in self.properties.values())

    def get(self, key: str) -> Optional[Value]:
        return self.properties.get(key)

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "n": self.n,
            "field": self.field,
            "properties": dict(self.properties),
            "certificates": dict(self.certificates),
            "audit": list(self.audit),
            "timings": dict(self.timings),
        }


def decision_value(decision: Decision) -> Value:
    if decision.verdict == Verdict.UNDECIDED:
        return UNDECIDED
    return decision.verdict == Verdict.TRUE


class _Classifier:
    def __init__(
        self, ideal: MonomialIdeal, field_: FieldSpec, caps: Caps, certify: bool, timed: bool
    ) -> None:
        self.ideal = ideal
        self.field = field_
        self.caps = caps
        self.certify = certify
        self.timed = timed
        self.report = ClassificationReport(ideal.format(), ideal.n, str(field_))
        self.decisions: dict[str, Decision] = {}

    # recording

    def _measure(self, key: str, fn: Callable[[], Any]) -> Any:
        start = time.perf_counter()
        try:
            return fn()
        finally:
            if self.timed:
                self.report.timings[key] = round(time.perf_counter() - start, 6)

    def value(self, key: str, fn: Callable[[], Value]) -> Value:
        try:
            result = self._measure(key, fn)
        except ResourceCapError as e:
            LOGGER.warning(f"{key}: {e}")
            result = UNDECIDED
        self.report.properties[key] = result
        return result

    def decision(self, key: str, fn: Callable[[], Decision], subject: Subject) -> Value:
        decision = self._measure(key, fn)
        self.decisions[key] = decision
        self.report.properties[key] = decision_value(decision)
        cert = decision.certificate
        if cert is not None:
            if cert.kind != CertificateKind.REFUTATION and not verify_certificate(cert, subject):
                self.flag(f"{key}: certificate fails replay")
            if self.certify:
                self.report.certificates[key] = cert.to_dict(subject.variables)
            else:
                self.report.certificates[key] = describe_certificate(cert, subject)
        return self.report.properties[key]

    def flag(self, message: str) -> None:
        LOGGER.error(f"Audit: {message} for {self.ideal}")
        self.report.audit.append(message)

    def known(self, key: str) -> Optional[bool]:
        value = self.report.properties.get(key)
        return value if isinstance(value, bool) else None

    def implies(self, premise: str, conclusion: str) -> None:
        if self.known(premise) is True and self.known(conclusion) is False:
            self.flag(f"{premise} holds but {conclusion} fails")

    def agree(self, keys: list[str]) -> None:
        values = {k: self.known(k) for k in keys if self.known(k) is not None}
        if len(set(values.values())) > 1:
            shown = ", ".join(f"{k}={format_value(v)}" for k, v in values.items())
            self.flag(f"expected agreement: {shown}")

    # properties

    def run(self) -> ClassificationReport:
        ideal = self.ideal
        self.report.properties["generators"] = len(ideal.gens) if not ideal.is_zero else 0
        if not ideal.is_proper_nonzero:
            self._degenerate()
            return self.report

        self.value("polymatroidal", lambda: is_polymatroidal(ideal))
        self.value("matroidal", lambda: is_matroidal(ideal))
        self.decision("weakly_polymatroidal", lambda: find_wpm_order(ideal, self.caps), ideal)
        wpm = self.decisions["weakly_polymatroidal"]
        if wpm.refuted:
            self.report.properties["wpm_orders_covered"] = wpm.orders_covered
        self.decision("linear_quotients", lambda: find_lq_order(ideal, self.caps), ideal)
        self.decision(
            "vertex_splittable",
            lambda: is_vertex_splittable(ideal, SplitReading.LITERAL, self.caps),
            ideal,
        )
        if not ideal.is_squarefree:
            self.decision(
                "vertex_splittable_relaxed",
                lambda: is_vertex_splittable(ideal, SplitReading.RELAXED, self.caps),
                ideal,
            )
            literal = self.known("vertex_splittable")
            relaxed = self.known("vertex_splittable_relaxed")
            if literal is not None and relaxed is not None:
                self.report.properties["splitting_readings_agree"] = literal == relaxed

        self._homology()
        if ideal.is_squarefree:
            self._complex_side()
        self._audit()
        return self.report

    def _degenerate(self) -> None:
        ideal = self.ideal
        self.decision(
            "vertex_splittable",
            lambda: is_vertex_splittable(ideal, SplitReading.LITERAL, self.caps),
            ideal,
        )
        complex_ = stanley_reisner_complex(ideal)
        self.decision(
            "vertex_decomposable", lambda: is_vertex_decomposable(complex_, self.caps), complex_
        )
        self.decision("shellable", lambda: is_shellable(complex_, self.caps), complex_)

    def _homology(self) -> None:
        ideal = self.ideal
        try:
            table = self._measure("betti", lambda: betti_table(ideal, self.field, self.caps))
        except ResourceCapError as e:
            LOGGER.warning(f"betti: {e}")
            for key in ("regularity", "projective_dimension", "linear_resolution"):
                self.report.properties[key] = UNDECIDED
            table = None
        if table is not None:
            self.report.properties["regularity"] = table.regularity
            self.report.properties["projective_dimension"] = table.projective_dimension
            self.value(
                "linear_resolution",
                lambda: has_linear_resolution(ideal, self.field, self.caps),
            )
            for j in generator_degree_mismatches(table):
                self.flag(f"beta_0,{j} differs from the number of degree-{j} generators")
            if len(ideal.gens) <= self.caps.max_hilbert_generators:
                numerator = hilbert_numerator(ideal, self.caps)
                for j in euler_mismatches(table, numerator):
                    self.flag(f"Euler characteristic mismatch in degree {j}")

        if ideal.is_squarefree:
            self.value(
                "componentwise_linear",
                lambda: is_componentwise_linear(ideal, self.field, self.caps),
            )
        if ideal.is_squarefree and ideal.degrees == (2,):
            self.value("complement_chordal", lambda: is_chordal_complement_oracle(ideal))

    def _complex_side(self) -> None:
        ideal = self.ideal
        dual = alexander_dual(ideal)
        if dual != dual_from_facets(ideal):
            self.flag("Alexander dual differs between minimal primes and facet complements")
        complex_ = stanley_reisner_complex(ideal)
        self.report.properties["dual"] = dual.format()
        self.value(
            "dual_regularity", lambda: betti_table(dual, self.field, self.caps).regularity
        )
        self.value("cohen_macaulay", lambda: is_cohen_macaulay(ideal, self.field, self.caps))
        self.value("sequentially_cm", lambda: is_sequentially_cm(ideal, self.field, self.caps))
        self.decision(
            "vertex_decomposable", lambda: is_vertex_decomposable(complex_, self.caps), complex_
        )
        self.decision("shellable", lambda: is_shellable(complex_, self.caps), complex_)
        self.decision(
            "dual_vertex_splittable",
            lambda: is_vertex_splittable(dual, SplitReading.LITERAL, self.caps),
            dual,
        )
        self.decision("dual_linear_quotients", lambda: find_lq_order(dual, self.caps), dual)
        self._translate_orders(complex_, dual)

    def _translate_orders(self, complex_: SimplicialComplex, dual: MonomialIdeal) -> None:
        shelling = self.decisions["shellable"].certificate
        if self.decisions["shellable"].holds and shelling.order:
            translated = shelling_to_lq_order(complex_, shelling.order)
            if not has_linear_quotients_under(dual, translated):
                self.flag("shelling order does not translate to linear quotients of the dual")
        quotients = self.decisions["dual_linear_quotients"].certificate
        if self.decisions["dual_linear_quotients"].holds:
            if not is_shelling_order(complex_, lq_to_shelling_order(complex_, quotients.order)):
                self.flag("linear-quotients order of the dual does not translate to a shelling")

    # audit

    def _audit(self) -> None:
        ideal = self.ideal
        splitting = "vertex_splittable" if ideal.is_squarefree else "vertex_splittable_relaxed"
        self.implies("vertex_splittable", "linear_quotients")
        self.implies("vertex_splittable_relaxed", "linear_quotients")
        self.implies("linear_quotients", "componentwise_linear")
        self.implies("linear_resolution", "componentwise_linear")
        self.implies("polymatroidal", splitting)
        self.implies("polymatroidal", "weakly_polymatroidal")
        if ideal.is_single_degree:
            self.implies("weakly_polymatroidal", "linear_quotients")
            self.implies("linear_quotients", "linear_resolution")

        regularity = self.report.properties.get("regularity")
        if self.known("linear_quotients") is True and isinstance(regularity, int):
            if regularity != deg_ideal(ideal):
                self.flag(f"linear quotients but regularity {regularity} != deg(I)")

        if ideal.degrees == (2,):
            keys = ["weakly_polymatroidal", splitting, "linear_quotients", "linear_resolution"]
            if ideal.is_squarefree:
                keys.append("complement_chordal")
            self.agree(keys)

        if ideal.is_squarefree:
            self.implies("vertex_decomposable", "shellable")
            self.implies("shellable", "sequentially_cm")
            self.implies("cohen_macaulay", "sequentially_cm")
            self.agree(["vertex_decomposable", "dual_vertex_splittable"])
            self.agree(["shellable", "dual_linear_quotients"])


def classify(
    ideal: MonomialIdeal,
    field_: FieldSpec = RATIONALS,
    caps: Caps = DEFAULT_CAPS,
    certify: bool = False,
    timed: bool = False,
) -> ClassificationReport:
    """Run every applicable property on the ideal and audit the results."""
    LOGGER.info(f"Classifying {ideal}")
    return _Classifier(ideal, field_, caps, certify, timed).run()

