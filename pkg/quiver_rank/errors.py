class QuiverRankException(Exception):
    def __init__(self, value='Quiver rank computation failed.'):
        self.value = value

    def __str__(self):
        return repr(self.value)


class DimensionMismatchException(QuiverRankException):
    def __init__(self, value='Dimensions do not match.'):
        super().__init__(value)


class InconsistentSystemException(QuiverRankException):
    def __init__(self, value='Linear system has no solution.'):
        super().__init__(value)


class QuiverValidationException(QuiverRankException):
    def __init__(self, value='Quiver is malformed.'):
        super().__init__(value)


class DisconnectedQuiverException(QuiverRankException):
    def __init__(self, value='Quiver is not connected.'):
        super().__init__(value)


class PathCompositionException(QuiverRankException):
    def __init__(self, value='Paths are not composable.'):
        super().__init__(value)


class MorphismValidationException(QuiverRankException):
    def __init__(self, value='Map of quivers does not respect tails and heads.'):
        super().__init__(value)


class QuiverMismatchException(QuiverRankException):
    def __init__(self, value='Representations live over different quivers.'):
        super().__init__(value)


class NotIntertwiningException(QuiverRankException):
    def __init__(self, value='Family of matrices does not commute with the arrow maps.'):
        super().__init__(value)


class UndecidedException(QuiverRankException):
    """
    Raised when a bounded search (splitting or isomorphism) ends without an answer.
    `part` holds the representation the search was working on.
    """

    def __init__(self, value='Search budget exhausted without a decision.', part=None):
        super().__init__(value)
        self.part = part


class DslParseException(QuiverRankException):
    def __init__(self, value='Could not parse input.', line: int = 0, column: int = 0):
        super().__init__(value)
        self.line = line
        self.column = column

    def __str__(self):
        return f'line {self.line}, column {self.column}: {self.value}'
