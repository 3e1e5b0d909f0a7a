from typing import Optional


class AlgebraError(Exception):

    def __init__(self, msg: str, witness: Optional[object] = None):
        super(AlgebraError, self).__init__(msg)
        self.message = msg
        self.witness = witness


class InvalidParameterError(AlgebraError):
    pass


class SizeLimitError(AlgebraError):

    def __init__(self, what: str, size: int, limit: int):
        super(SizeLimitError, self).__init__(f'{what} has {size} elements (limit: {limit})')
        self.size = size
        self.limit = limit


class AxiomError(AlgebraError):

    def __init__(self, axiom: str, witness: Optional[tuple] = None):
        super(AxiomError, self).__init__(f"Axiom '{axiom}' fails{f' at {witness}' if witness is not None else ''}", witness)
        self.axiom = axiom


class NoUnitError(AxiomError):

    def __init__(self):
        super(NoUnitError, self).__init__('no-unit')


class InvalidIdealError(AlgebraError):
    pass


class InvalidSubmoduleError(AlgebraError):
    pass


class ImproperSubmoduleError(AlgebraError):
    pass


class EmptySetError(AlgebraError):
    pass


class RingMismatchError(AlgebraError):
    pass


class DomainMismatchError(AlgebraError):
    pass


class NotIdempotentError(AlgebraError):
    pass


class InternalInconsistencyError(AlgebraError):
    pass


class ConfigError(Exception):

    def __init__(self, location: str, msg: str):
        super(ConfigError, self).__init__(f'{location}: {msg}')
        self.location = location
        self.message = msg
