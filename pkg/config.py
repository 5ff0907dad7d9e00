import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    """Configuration class following Single Responsibility Principle"""

    # Register size limits
    HARD_MAX_QUBITS = 30
    MAX_QUBITS = min(int(os.environ.get('HIQEC_MAX_QUBITS', 24)), HARD_MAX_QUBITS)
    ORACLE_MAX_QUBITS = int(os.environ.get('HIQEC_ORACLE_MAX_QUBITS', 12))
    VERIFY_MAX_QUBITS = 10

    # Surface code fit (per-cycle logical error rate)
    P_TH = float(os.environ.get('HIQEC_P_TH', 0.0057))
    C0 = float(os.environ.get('HIQEC_C0', 0.03))
    D_MIN = int(os.environ.get('HIQEC_D_MIN', 3))
    D_MAX = int(os.environ.get('HIQEC_D_MAX', 51))

    # Numerical tolerances
    NORM_TOLERANCE = 1e-10
    EXPECTATION_TOLERANCE = 1e-12
    LOAD_NORM_SLACK = 0.01
    SENSITIVITY_THRESHOLD = 1e-12
    VERIFY_TOLERANCE = 1e-9

    # Sweeps
    SWEEP_WORKERS = int(os.environ.get('HIQEC_SWEEP_WORKERS', 1))

    # Output Configuration
    MACHINE_DIGITS = 12
    TEXT_DIGITS = 4
    OUTPUT_FORMATS = ['json', 'csv', 'text']
    LOG_LEVEL = os.environ.get('HIQEC_LOG_LEVEL', 'WARNING')
