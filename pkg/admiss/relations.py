"""
Numerical checks of the Galois action on the generator of an admissible
triple:

    sigma_c(delta) = delta A delta^-2      sigma_a(delta) = delta C delta^-2
    sigma_a(A) = A (b d^2) / A^2           C / A = (sigma_a(delta)/delta)(delta/sigma_c(delta))
"""

from dataclasses import dataclass, field

from quadext.elements import BiquadElement, elements_agree

from .triples import AdmissibleTriple


@dataclass
class RelationReport:
    results: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.results.values())


def galois_relations(t: AdmissibleTriple) -> RelationReport:
    delta, A, C = t.delta, t.A, t.C
    b_d2 = BiquadElement.constant(t.d * t.d * t.b_value, delta.a, delta.c)
    report = RelationReport()
    checks = {
        "sigma_c(delta) = delta A / delta^2": (delta.sigma_c(), delta * A / (delta * delta)),
        "sigma_a(delta) = delta C / delta^2": (delta.sigma_a(), delta * C / (delta * delta)),
        "sigma_a(A) = A b d^2 / A^2": (A.sigma_a(), A * b_d2 / (A * A)),
        "sigma_c(C) = C b d^2 / C^2": (C.sigma_c(), C * b_d2 / (C * C)),
        "C / A = (sigma_a(delta)/delta)(delta/sigma_c(delta))": (
            C / A,
            (delta.sigma_a() / delta) * (delta / delta.sigma_c()),
        ),
    }
    for name, (lhs, rhs) in checks.items():
        report.results[name] = elements_agree(lhs, rhs)
    return report
