from typing import Optional


class HiqecError(Exception):
    """Base error; carries the process exit code used by the CLI"""

    exit_code = 3

    def to_dict(self) -> dict:
        return {'error': str(self), 'exit_code': self.exit_code}


class ValidationError(HiqecError, ValueError):
    """Invalid input of any kind"""

    exit_code = 1


class DimensionError(ValidationError):
    """Length not a power of two, n out of range or inconsistent across inputs"""


class ParameterError(ValidationError):
    """A scalar parameter is outside its domain"""


class NormalizationError(ValidationError):
    """A wavefunction or probability vector is not unit normalized"""


class UndefinedSensitivityError(ValidationError):
    """Noiseless expectation value vanishes, so relative sensitivities do not exist"""


class FitError(ValidationError):
    """Not enough positive sensitivities to fit an exponential decay"""


class ResourceError(ValidationError):
    """Register too large for a dense computation"""


class InfeasibleError(HiqecError):
    """No distance assignment in range meets the error target"""

    exit_code = 2

    def __init__(self, message: str, binding_qubit: Optional[int] = None):
        super().__init__(message)
        self.binding_qubit = binding_qubit

    def to_dict(self) -> dict:
        data = super().to_dict()
        data['binding_qubit'] = self.binding_qubit
        return data


class ToleranceError(HiqecError):
    """A verification check deviated beyond tolerance"""

    exit_code = 3
