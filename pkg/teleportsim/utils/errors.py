class TeleportSimError(Exception):
    def __init__(self, msg):
        self.msg = msg
        super().__init__(self.msg)

    def __str__(self):
        return self.msg


class ShapeError(TeleportSimError):
    pass


class SingularMatrixError(TeleportSimError):
    def __init__(self, msg, smallest_pivot):
        self.smallest_pivot = smallest_pivot
        super().__init__(f'{msg} (smallest pivot magnitude {smallest_pivot:.3e})')


class NumericalError(TeleportSimError):
    pass


class ContractError(TeleportSimError):
    pass


class DomainError(TeleportSimError):
    pass


class UnrecoverableOutcomeError(TeleportSimError):
    """Bob cannot reconstruct the input state for this measurement outcome."""


class DegenerateChannelError(UnrecoverableOutcomeError):
    pass


class ScenarioParseError(TeleportSimError):
    def __init__(self, msg, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        location = []
        if line is not None:
            location.append(f'line {line} column {column}')
        if path:
            location.append(f'field {path}')
        if location:
            msg = f'{msg} ({", ".join(location)})'
        super().__init__(msg)


class ScenarioValidationError(TeleportSimError):
    def __init__(self, msg, path=None):
        self.path = path
        super().__init__(f'{path}: {msg}' if path else msg)
