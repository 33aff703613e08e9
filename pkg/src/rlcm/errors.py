"""Exception types shared by the library and the CLI."""


class UsageError(ValueError):
    """A caller passed arguments outside an operation's contract."""


class ConstructionError(ValueError):
    """A self-similar specification violates one of the Zappa-Szep axioms.

    ``axiom`` names the failing law (``"ZS1"`` .. ``"ZS8"`` or ``"bijection"``)
    and ``inputs`` holds the offending arguments so the failure can be replayed.
    """

    def __init__(self, axiom, inputs, detail=""):
        self.axiom = axiom
        self.inputs = inputs
        msg = f"{axiom} violated at {inputs!r}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class SpecParseError(ValueError):
    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}")
