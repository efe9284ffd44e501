"""Exception hierarchy; every error carries a machine-readable code and CLI exit status"""


class IsoperimetrixError(Exception):
    code = 'error'
    exit_code = 1

    def __init__(self, message, details=None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self):
        payload = {'code': self.code, 'message': self.message}
        if self.details:
            payload['details'] = self.details
        return payload


class SpecParseError(IsoperimetrixError):
    code = 'parse-error'
    exit_code = 3


class InvalidSpecError(IsoperimetrixError):
    code = 'invalid-spec'
    exit_code = 3


class InvalidInputError(IsoperimetrixError):
    code = 'invalid-input'
    exit_code = 4


class EmptySetError(InvalidInputError):
    code = 'empty-set-error'


class ResourceError(IsoperimetrixError):
    """A BFS would materialize more vertices than the configured cap"""
    code = 'resource-error'
    exit_code = 5


class StructuralError(IsoperimetrixError):
    """The oracle violated a graph invariant (asymmetry, self-loop, ...)"""
    code = 'structural-error'
    exit_code = 6


class UnsupportedShapeError(IsoperimetrixError):
    code = 'unsupported-shape'
    exit_code = 7


class UnsupportedOracleError(IsoperimetrixError):
    code = 'unsupported-oracle'
    exit_code = 7


class ConfigError(InvalidInputError):
    """An ISOPX_* environment setting that cannot be used"""
    code = 'config-error'
