"""Exception hierarchy. Internal-consistency failures subclass ConsistencyError."""


class DeligneError(Exception):
    pass


class ArrangementInputError(DeligneError, ValueError):
    pass


class ZeroNormal(ArrangementInputError):
    pass


class DuplicateHyperplane(ArrangementInputError):
    pass


class DimensionMismatch(ArrangementInputError):
    pass


class NotSimplicial(DeligneError):
    pass


class NotEssential(DeligneError):
    pass


class BudgetExceeded(DeligneError):
    pass


class EndpointMismatch(DeligneError, ValueError):
    pass


class NoClosure(DeligneError):
    pass


class NoJoin(DeligneError):
    pass


class RankDeficient(DeligneError, ValueError):
    pass


class OverlappingCones(DeligneError):
    pass


class ConeNotChamber(DeligneError):
    pass


class ConsistencyError(DeligneError):
    """A property guaranteed by the theory failed to hold on a computed object."""


class InconsistentLabeling(ConsistencyError):
    pass


class NonUniqueHead(ConsistencyError):
    pass


class AtomClassSplit(ConsistencyError):
    pass
