"""Reference numbers for the four- and eight-qubit Gaussian examples"""

from decimal import Decimal


def half_unit(value):
    """Half a unit in the last printed digit of a reference value"""
    return 0.5 * 10.0 ** Decimal(str(value)).as_tuple().exponent


def polynomial_tolerance(order):
    """Coefficients are printed to three decimals; an order-k term also carries the constant's rounding times (4/3)^k"""
    return 0.0005 * (1.0 + (4.0 / 3.0) ** order)


def gamma_tolerance(expected):
    return max(0.01 * abs(expected), half_unit(expected))


# natural-ordered transform matrix on four qubits, row j is O_j
WALSH_MATRIX_4 = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1],
    [1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1],
    [1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1],
    [1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1],
    [1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1],
    [1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1],
    [1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1],
    [1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1],
    [1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1],
    [1, -1, -1, 1, 1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1],
    [1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1],
    [1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1, -1, -1],
    [1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1],
]

SEQUENCY_4 = [0, 15, 7, 8, 3, 12, 4, 11, 1, 14, 6, 9, 2, 13, 5, 10]

PAULI_STRINGS_4 = [
    'IIII', 'IIIZ', 'IIZI', 'IIZZ', 'IZII', 'IZIZ', 'IZZI', 'IZZZ',
    'ZIII', 'ZIIZ', 'ZIZI', 'ZIZZ', 'ZZII', 'ZZIZ', 'ZZZI', 'ZZZZ',
]

# four-qubit Gaussian, mu = 15/2, sigma = 8/3
GAUSSIAN_4 = {'n': 4, 'mu': 7.5, 'sigma': 8.0 / 3.0}

EXPECTATIONS_4 = [
    1.000, 0.0, 0.0, -0.001, 0.0, 0.059, 0.144, 0.0,
    0.0, -0.151, -0.318, 0.0, -0.742, 0.0, 0.0, 0.055,
]

ZERO_EXPECTATIONS_4 = [1, 2, 4, 7, 8, 11, 13, 14]

# noise polynomial coefficients keyed by the qubits of each monomial
NOISE_POLYNOMIAL_12 = {(): -0.742, (2,): 0.989, (3,): 0.989, (2, 3): -1.320}

NOISE_POLYNOMIAL_15 = {
    (): 0.055,
    (0,): -0.073, (1,): -0.073, (2,): -0.073, (3,): -0.073,
    (0, 1): 0.097, (0, 2): 0.097, (1, 2): 0.097, (0, 3): 0.097, (1, 3): 0.097, (2, 3): 0.097,
    (0, 1, 2): -0.130, (0, 1, 3): -0.130, (0, 2, 3): -0.130, (1, 2, 3): -0.130,
    (0, 1, 2, 3): 0.173,
}

# beta_j of phi^p on four qubits: j -> (sequency, q_s, {p: beta})
PHI_POWERS = [2, 4, 6, 8, 10, 12, 14, 16]

BETA_TABLE_4 = {
    0: (0, None, [0.378, 0.256, 0.205, 0.178, 0.161, 0.151, 0.144, 0.139]),
    3: (8, 0, [0.018, 0.039, 0.060, 0.077, 0.090, 0.100, 0.107, 0.111]),
    5: (12, 0, [0.036, 0.070, 0.085, 0.093, 0.100, 0.105, 0.110, 0.113]),
    6: (4, 1, [0.071, 0.136, 0.151, 0.152, 0.148, 0.144, 0.140, 0.137]),
    9: (14, 0, [0.071, 0.079, 0.087, 0.094, 0.100, 0.105, 0.110, 0.113]),
    10: (6, 1, [0.142, 0.150, 0.154, 0.153, 0.149, 0.144, 0.140, 0.137]),
    12: (2, 2, [0.284, 0.240, 0.202, 0.177, 0.161, 0.151, 0.144, 0.139]),
    15: (10, 0, [0.000, 0.030, 0.057, 0.077, 0.090, 0.100, 0.107, 0.111]),
}

# linear sensitivities of <phi^2>, qubit 0 first
GAMMA_4_UV_FIRST = [0.094, 0.378, 2.151, 2.890]

# eight-qubit Gaussian, mu = 127.5, sigma = 50/3
GAUSSIAN_8 = {'n': 8, 'mu': 127.5, 'sigma': 50.0 / 3.0}

GAMMA_8_IR_FIRST = [31.15, 13.91, 3.86, 0.64, 0.15, 0.038, 0.0096, 0.0024]

# surface code worked example, p = 1e-3 and 1e-5 per cycle
SURFACE_CODE_EXAMPLE = {'p': 1e-3, 'p_th': 0.0057, 'c0': 0.03, 'eps_per_cycle': 1e-5}

HOMOGENEOUS_DISTANCE = 13
HOMOGENEOUS_TOTAL = 1352

UNIFORM_D_IR_FIRST = [15, 15, 13, 11, 9, 7, 7, 5]
UNIFORM_TOTAL = 944
UNIFORM_ERROR = 4.9e-6

OPTIMIZED_D_IR_FIRST = [15, 13, 11, 11, 9, 7, 7, 5]
OPTIMIZED_TOTAL = 840
OPTIMIZED_ERROR = 9.4e-6
