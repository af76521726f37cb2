"""Exception types shared across the package."""


class WeilforgeError(Exception):
    """Base class for all library errors."""


# --- field construction ---

class FieldSpecError(WeilforgeError):
    """Malformed field specification (bad prime, bad grammar, wrong degree)."""


class ReducibleModulus(FieldSpecError):
    """The defining polynomial of an extension factors over the base field."""


class DependentBasis(FieldSpecError):
    """A user-supplied basis is linearly dependent over the base field."""


class BasisNotUnital(FieldSpecError):
    """The first basis element of an extension must be 1."""


# --- rings and polynomials ---

class RingMismatch(WeilforgeError):
    """Operands live in different rings (or over different fields)."""


class ZeroPolynomial(WeilforgeError):
    """The operation needs a degree but the polynomial is zero."""


class UnboundVariable(WeilforgeError):
    """A substitution left a variable without an image."""


# --- Groebner / ideal machinery ---

class DegreeCapExceeded(WeilforgeError):
    """A basis computation hit its degree cap instead of terminating."""

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"degree cap {cap} exceeded")


class NotHomogeneous(WeilforgeError):
    """A homogeneous ideal or system was required."""


class NotLinear(WeilforgeError):
    """A linear form was required."""


class VariableNotLast(WeilforgeError):
    """Variable saturation needs the variable in the last (smallest) position."""


class ImproperIdeal(WeilforgeError):
    """The unit ideal was passed where a proper ideal is required."""


class NotZeroDimensionalTop(WeilforgeError):
    """The top-part ideal is not Artinian, so no degree of regularity exists."""


# --- Macaulay matrices ---

class EmptyMatrix(WeilforgeError):
    """No generator fits under the requested degree bound."""


class CapExceeded(WeilforgeError):
    """The solving-degree search exhausted its degree budget."""

    def __init__(self, cap, trace=None):
        self.cap = cap
        self.trace = trace or []
        super().__init__(f"no solving degree found up to degree {cap}")


# --- Betti tables ---

class CapTooSmall(WeilforgeError):
    """The Betti table is not closed under the requested degree cap."""

    def __init__(self, cap, suggested, message=None):
        self.cap = cap
        self.suggested = suggested
        super().__init__(message or f"cap {cap} leaves the table open; retry with {suggested}")


class OpenTable(WeilforgeError):
    """Invariants were requested from a Betti table that is not closed."""


# --- harness ---

class ParseError(WeilforgeError):
    """Syntax error in a system file or polynomial expression."""

    def __init__(self, message, line, col):
        self.line = line
        self.col = col
        super().__init__(f"{message} (line {line}, column {col})")


class UnknownVariable(ParseError):
    """An identifier in a polynomial is neither a ring variable nor the field generator."""


class InfeasibleSpec(WeilforgeError):
    """An instance specification cannot produce a system (r = 0, degree 0, ...)."""


class BudgetExceeded(WeilforgeError):
    """Exhaustive enumeration would exceed the configured point budget."""


class UnknownCheckId(WeilforgeError):
    """A verification run referenced a check id that is not registered."""
