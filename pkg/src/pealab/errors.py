"""Exception hierarchy.

Every exception carries the data needed to re-check the failure
(witness elements, violating triples) so callers and the CLI can print it.
"""


class PEAError(Exception):
    """Base class for all errors raised by pealab."""

    exit_code = 1


class UsageError(PEAError):
    exit_code = 2


class ParseError(UsageError):
    pass


class DuplicateLabel(UsageError):
    pass


class UnknownLabel(UsageError):
    pass


class UnknownZooName(UsageError):
    pass


class SizeLimitExceeded(UsageError):
    pass


class AxiomViolation(PEAError):
    def __init__(self, report):
        self.report = report
        head = "; ".join(str(v) for v in report.violations[:5])
        more = len(report.violations) - 5
        if more > 0:
            head += f"; ... ({more} more)"
        super().__init__(f"axiom violation: {head}")


class IntervalInfinite(PEAError):
    pass


class InvalidUnit(PEAError):
    pass


class AdditivityViolation(PEAError):
    def __init__(self, violations, labels=None):
        self.violations = list(violations)
        a, b, c, lhs, rhs = self.violations[0]
        if labels is not None:
            a, b, c = labels[a], labels[b], labels[c]
        super().__init__(
            f"{len(self.violations)} additivity violation(s), first at {a}+{b}={c}: {lhs} != {rhs}"
        )


class NotAMeasure(PEAError):
    pass


class EmptyStateSpace(PEAError):
    pass


class NotAdditive(PEAError):
    """The lattice formula produced a non-additive function (RDP hypothesis failed)."""

    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"join/meet formula is not additive at triple {witness}")


class NotJordan(PEAError):
    def __init__(self, witness, message):
        self.witness = witness
        super().__init__(message)


class NotAChain(PEAError):
    pass


class NotASimplex(PEAError):
    pass


class AlgebraMismatch(UsageError):
    pass


class RDPRequired(PEAError):
    pass


class NotCommutative(PEAError):
    pass


class InternalInconsistency(PEAError):
    exit_code = 3


class LPInfeasible(InternalInconsistency):
    pass
