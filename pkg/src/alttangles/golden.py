"""Published low-order coefficients, indexed from degree 0."""
from fractions import Fraction as Fr

A2_BARE = [1, 3, 18, 135, 1134, 10206, 96228]
G2_BARE = [1, 2, 9, 54, 378, 2916, 24057]
F_BARE = [0, Fr(1, 2), Fr(9, 8), Fr(9, 2), Fr(189, 8)]
ALPHA = [1, 2, 1, 2, 6, 22, 91]
GAMMA = [0, 1, 2, 6, 22, 91, 408]
F1 = [0, 0, Fr(1, 4), Fr(1, 3), Fr(3, 4), Fr(11, 5), Fr(91, 12)]
D = [0, 1, 0, 0, 0, 1, 10, 74, 492]
TEMPLATE_KERNEL = [0, 1, 2, 6, 22, 90]
G_OF_GAMMA = [0, 1, -2, 2, -2, 1, -2, -2, -8, -22, -68]
ZETA_OF_GAMMA = [0, 0, 0, 0, 0, 1, 0, 4, 6, 24, 66]
GAMMA_TILDE = [0, 1, 2, 4, 10, 29, 98, 372]

ALL = {
    "a2": A2_BARE,
    "G2": G2_BARE,
    "F": F_BARE,
    "alpha": ALPHA,
    "Gamma": GAMMA,
    "F1": F1,
    "D": D,
    "Gamma_template_kernel": TEMPLATE_KERNEL,
    "g_of_Gamma": G_OF_GAMMA,
    "zeta_of_Gamma": ZETA_OF_GAMMA,
    "Gamma_tilde": GAMMA_TILDE,
}
