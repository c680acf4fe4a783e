"""Exception hierarchy.

``InputError`` subclasses flag data that violates an invariant (CLI exit 1);
``ContractError`` subclasses flag a protocol/contract failure (CLI exit 2).
"""


class QutritError(Exception):
    pass


class InputError(QutritError, ValueError):
    pass


class ContractError(QutritError):
    pass


class ZeroVector(InputError):
    pass


class BadProbabilitySum(InputError):
    pass


class NonUnitary(InputError):
    pass


class EmptyCounts(InputError):
    pass


class InconsistentInput(InputError):
    pass


class BadSetting(ContractError, ValueError):
    pass


class DegenerateMagnitudes(ContractError):
    pass


class SingularSystem(ContractError):
    pass


class MissingConfig(ContractError, KeyError):
    def __init__(self, config):
        self.config = config
        super().__init__(config)

    def __str__(self):
        return f"missing measurement configuration {self.config!r}"
