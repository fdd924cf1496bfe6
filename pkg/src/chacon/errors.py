"""Exception hierarchy.  Every error raised by the library derives from
:class:`ChaconError`, which is a :class:`ValueError`."""


class ChaconError(ValueError):
    pass


class InvalidSymbolError(ChaconError):
    pass


class LevelAboveCapError(ChaconError):
    def __init__(self, level: int, cap: int):
        self.level = level
        self.cap = cap
        super().__init__(f"level {level} exceeds materialization cap {cap}")


class LengthMismatchError(ChaconError):
    def __init__(self, left: int, right: int):
        super().__init__(f"words have different lengths: {left} != {right}")


class EmptyWordError(ChaconError):
    pass


class NoZerosError(ChaconError):
    pass


class UnequalZeroCountError(ChaconError):
    pass


class NonPositiveShiftError(ChaconError):
    def __init__(self, shift: int):
        self.shift = shift
        super().__init__(f"shift must be a positive integer, got {shift}")


class EmptyRangeError(ChaconError):
    pass
