"""Exception hierarchy shared by every module."""


class MonopathError(Exception):
    pass


class FormatError(MonopathError, ValueError):
    """Instance text does not follow its file grammar."""


class MalformedHeader(FormatError):
    pass


class MissingArc(FormatError):
    def __init__(self, u: int, v: int):
        super().__init__(f"no arc between {u} and {v}")
        self.u, self.v = u, v


class DuplicateArc(FormatError):
    def __init__(self, u: int, v: int):
        super().__init__(f"pair {{{u}, {v}}} given more than once")
        self.u, self.v = u, v


class ColourOutOfRange(FormatError):
    pass


class VertexOutOfRange(MonopathError, IndexError):
    pass


class NotFoundWithinCap(MonopathError):
    def __init__(self, cap: int):
        super().__init__(f"no duo of size <= {cap}")
        self.cap = cap


class BudgetExceeded(MonopathError):
    def __init__(self, remaining: int, budget: int):
        super().__init__(f"{remaining} items to enumerate exceeds budget {budget}")
        self.remaining = remaining
        self.budget = budget


class ColouringIncomplete(MonopathError, ValueError):
    pass
