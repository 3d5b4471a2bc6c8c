"""Exception hierarchy shared by the theories, the harness and the CLI."""


class SpecError(Exception):
    """Base class for all errors raised by specalg."""


class UndefinedOperation(SpecError):
    """An operator is not defined on the given arguments.

    Partial operators (mismatched alphabets or signatures, control conflicts,
    incompatible interfaces) raise a subclass of this.  The law evaluator
    turns it into an ``inapplicable`` verdict instead of a failure.
    """


class AlphabetMismatch(UndefinedOperation):
    def __init__(self, msg="alphabet mismatch"):
        super().__init__(msg)


class SignatureMismatch(UndefinedOperation):
    def __init__(self, msg="signature mismatch"):
        super().__init__(msg)


class ControlConflict(UndefinedOperation):
    def __init__(self, msg="control conflict"):
        super().__init__(msg)


class IncompatibleInterfaces(UndefinedOperation):
    def __init__(self, msg="incompatible interfaces"):
        super().__init__(msg)


class NondeterministicError(SpecError):
    def __init__(self, msg="deterministic MTS required"):
        super().__init__(msg)


class StateBlowUp(SpecError):
    def __init__(self, msg="state blow-up"):
        super().__init__(msg)


class EnumerationBoundError(SpecError):
    def __init__(self, msg="enumeration bound exceeded"):
        super().__init__(msg)


class ParseError(SpecError):
    """Raised by the spec-file parser; carries the offending line number."""

    def __init__(self, msg, line=None):
        self.line = line
        self.msg = msg
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
