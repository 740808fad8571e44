"""Exception types shared across the package."""


class ArshortError(Exception):
    """Base class for all library errors."""


class InfiniteDimensional(ArshortError):
    pass


class InvalidRelation(ArshortError):
    pass


class ImproperIdeal(ArshortError):
    pass


class InternalInconsistency(ArshortError):
    """Two independent computations disagreed; this signals a bug."""


class ShapeMismatch(ArshortError):
    pass


class RelationViolated(ArshortError):
    def __init__(self, relation_index: int, relation_text: str):
        super().__init__(f"relation {relation_index} ({relation_text}) does not vanish")
        self.relation_index = relation_index
        self.relation_text = relation_text


class AlgebraMismatch(ArshortError):
    pass


class UndecidedDecomposition(ArshortError):
    pass


class IdealActsNonzero(ArshortError):
    pass


class IsProjective(ArshortError):
    pass


class PathNotInFragment(ArshortError):
    pass


class NotOneComponent(ArshortError):
    pass


class NotIndecomposable(ArshortError):
    pass


class NotHereditary(ArshortError):
    pass


class NotFaithful(ArshortError):
    pass


class HomTauObstruction(ArshortError):
    def __init__(self, pair):
        super().__init__(f"Hom(X, tau Y) != 0 for section pair {pair}")
        self.pair = pair


class NotHereditaryEnd(ArshortError):
    pass


class NotApplicable(ArshortError):
    def __init__(self, verdict):
        super().__init__("module is the middle of a short chain")
        self.verdict = verdict


class DeskScaleExceeded(ArshortError):
    pass


class NoSectionFound(ArshortError):
    pass


class InvalidSection(ArshortError):
    pass
