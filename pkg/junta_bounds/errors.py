# ──────────────────────────────────────────────────────────────
# junta_bounds/errors.py
# Exception types raised by the library; the tools layer turns them
# into {"status": "error", ...} dictionaries.
# ──────────────────────────────────────────────────────────────
import typing as t


class JuntaBoundsError(ValueError):
    """Base class for every error raised by junta_bounds."""


class NotBooleanValued(JuntaBoundsError):
    def __init__(self, point: int, value: int) -> None:
        super().__init__(f"polynomial takes value {value} at point {point:#x}")
        self.point = point
        self.value = value


class IndexOutOfRange(JuntaBoundsError, IndexError):
    def __init__(self, index: int, arity: int) -> None:
        super().__init__(f"variable index {index} outside 1..{arity}")
        self.index = index
        self.arity = arity


class ArityOverflow(JuntaBoundsError):
    def __init__(self, arity: int, limit: int) -> None:
        super().__init__(f"arity {arity} exceeds N_MAX={limit} (raise BF_NMAX to allow it)")
        self.arity = arity
        self.limit = limit


class ArityTooLargeForExact(JuntaBoundsError):
    def __init__(self, arity: int, limit: int) -> None:
        super().__init__(f"exact block sensitivity limited to n <= {limit}, got n={arity}")
        self.arity = arity
        self.limit = limit


class ArityTooLargeForSearch(JuntaBoundsError):
    def __init__(self, arity: int, limit: int) -> None:
        super().__init__(f"canonical search limited to n <= {limit}, got n={arity}")
        self.arity = arity
        self.limit = limit


class IInJ(JuntaBoundsError):
    def __init__(self, i: int, fixed_mask: int) -> None:
        super().__init__(f"variable {i} belongs to the fixed set {fixed_mask:#x}")
        self.i = i
        self.fixed_mask = fixed_mask


class ConstantFunction(JuntaBoundsError):
    """Raised where an operation has no meaning for a constant function."""


class IrrelevantVariable(JuntaBoundsError):
    def __init__(self, i: int) -> None:
        super().__init__(f"variable {i} is irrelevant")
        self.i = i


class NotAHittingSet(JuntaBoundsError):
    def __init__(self, mask: int, missed: int) -> None:
        super().__init__(f"set {mask:#x} misses maxonomial {missed:#x}")
        self.mask = mask
        self.missed = missed


class NotMinimum(JuntaBoundsError):
    def __init__(self, size: int, minimum: int) -> None:
        super().__init__(f"hitting set of size {size} is not minimum (h={minimum})")
        self.size = size
        self.minimum = minimum


class ParseError(JuntaBoundsError):
    def __init__(self, message: str, offset: int, text: t.Optional[str] = None) -> None:
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset
        self.text = text


class UnknownSuite(JuntaBoundsError):
    def __init__(self, name: str, known: t.Iterable[str]) -> None:
        super().__init__(f"unknown suite {name!r}; known suites: {', '.join(known)}")
        self.name = name


class PointOutOfRange(JuntaBoundsError, IndexError):
    def __init__(self, point: int, arity: int) -> None:
        super().__init__(f"point {point:#x} outside {{0,1}}^{arity}")
        self.point = point
        self.arity = arity
