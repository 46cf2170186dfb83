"""Exception types shared across the package."""


class PolycfError(Exception):
    """Base class for every error raised by this package."""


class _IndexedError(PolycfError):
    """Error tied to a specific term index."""

    def __init__(self, index, message):
        self.index = index
        super().__init__(f"{message} (index {index})")


class PoleAtArgument(PolycfError):
    """A rational function was evaluated where its denominator vanishes."""

    def __init__(self, argument):
        self.argument = argument
        super().__init__(f"denominator vanishes at n = {argument}")


class ZeroFunction(PolycfError):
    """The zero function has no leading coefficient and no inverse."""


class NoSuchTerm(_IndexedError):
    """Requested a term past the prefix of a CF that has no tail."""

    def __init__(self, index):
        super().__init__(index, "no such term: past prefix and no tail")


class ZeroPartialNumerator(_IndexedError):
    """A realized partial numerator a_n is zero."""

    def __init__(self, index):
        super().__init__(index, "partial numerator is zero")


class ZeroScaleFactor(_IndexedError):
    """A similarity scale factor r_n is zero."""

    def __init__(self, index):
        super().__init__(index, "scale factor is zero")


class RepeatedValue(_IndexedError):
    """Two consecutive sequence values coincide, so no CF term exists."""

    def __init__(self, index):
        super().__init__(index, "consecutive sequence values are equal")


class ZeroTerm(_IndexedError):
    """A series term or product factor that must be nonzero is zero."""

    def __init__(self, index):
        super().__init__(index, "term is zero")


class UnitTerm(_IndexedError):
    """A product factor equals 1, which the transform cannot represent."""

    def __init__(self, index):
        super().__init__(index, "product factor equals 1")


class DegenerateTerm(_IndexedError):
    """A perturbed term combination vanishes, so no CF term exists."""

    def __init__(self, index):
        super().__init__(index, "perturbed term combination vanishes")


class ZeroEvenDenominator(_IndexedError):
    """b_{2k} = 0, so the even contraction does not exist."""

    def __init__(self, index):
        super().__init__(index, "even-indexed partial denominator is zero")


class ZeroOddDenominator(_IndexedError):
    """b_{2k+1} = 0, so the odd contraction does not exist."""

    def __init__(self, index):
        super().__init__(index, "odd-indexed partial denominator is zero")


class TransformDoesNotExist(_IndexedError):
    """The Bauer-Muir existence quantity a_n - w_{n-1}(b_n + w_n) vanishes."""

    def __init__(self, index):
        super().__init__(index, "Bauer-Muir existence condition fails")


class NonzeroW0(PolycfError):
    """The extension requires w_0 = 0."""

    def __init__(self, value):
        self.value = value
        super().__init__(f"w_0 must be 0, got {value}")


class ZeroW(_IndexedError):
    """The extension requires w_n != 0 for n >= 1."""

    def __init__(self, index):
        super().__init__(index, "w_n must be nonzero for n >= 1")


class HypothesisViolation(PolycfError):
    """A named precondition fails hard enough that construction is impossible."""

    def __init__(self, name, detail=""):
        self.name = name
        self.detail = detail
        message = f"hypothesis violated: {name}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class NonIntegerTerms(_IndexedError):
    """Irrationality certification needs integer terms."""

    def __init__(self, index):
        super().__init__(index, "term is not an integer")


class EmptyRange(PolycfError):
    """A diagnostic was requested over an empty index range."""


class UnsupportedConstant(PolycfError):
    """No oracle is available for the requested constant."""

    def __init__(self, name):
        self.name = name
        super().__init__(f"no oracle for constant {name!r}")
