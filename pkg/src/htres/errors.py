"""Exception hierarchy shared by all htres modules."""


class HTResError(Exception):
    """Base class for every error raised by htres."""


class ContextMismatch(HTResError, ValueError):
    """Two monomials live in polynomial rings with different variable counts."""


class ParseError(HTResError, ValueError):
    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class NotLinear(HTResError):
    """A colon ideal in the order is not generated by variables.

    ``witness`` is a minimal generator of the colon ideal of degree >= 2 and
    ``step`` the 1-based position in the order where it occurred.
    """

    def __init__(self, witness, step=None):
        self.witness = witness
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"colon ideal not linear{where}: minimal generator {witness}")


class NotDegreeIncreasing(HTResError):
    def __init__(self, step):
        self.step = step
        super().__init__(f"degree drops at step {step}")


class NotInIdeal(HTResError):
    pass


class NotRegular(HTResError):
    """The decomposition function fails q(g(y*u_j)) <= q(u_j).

    ``witness`` is the triple ``(j, y, z)``: 1-based step, the variable y in
    q(u_j) and a variable z in q(g(y*u_j)) outside q(u_j).
    """

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"decomposition function not regular, witness (j, y, z) = {witness}")


class TooLarge(HTResError):
    pass


class BoundaryNotComplex(HTResError):
    """Stored incidence signs do not square to zero."""
