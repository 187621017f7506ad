# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Published values the library is checked against.

Polynomials are written in x = ε0 - 1, y = ε1 - 1 and list B_{τ_j} - 1.
"""

from typing import Dict, Tuple

B_MINUS_ONE: Dict[int, Tuple[str, ...]] = {
    3: (
        "xy + 2xy(x+y)",
        "2xy(x+y) + x^2y^2",
    ),
    5: (
        "4x^4y^4 + x^4y^3 + 3x^4y^2 + 4x^4y + x^3y^4 + x^3y^3 + 2x^3y^2 + 4x^3y + 3x^2y^4 + 2x^2y^3"
        " + 3x^2y + 4xy^4 + 4xy^3 + 3xy^2",
        "2x^4y^4 + 2x^4y^3 + 4x^4y^2 + 4x^4y + 2x^3y^4 + 2x^3y^3 + 4x^3y^2 + x^3y + 4x^2y^4 + 4x^2y^3"
        " + x^2y^2 + 4x^2y + 4xy^4 + xy^3 + 4xy^2",
        "2x^4y^4 + 3x^4y^3 + 3x^4y^2 + 3x^3y^4 + 4x^3y^3 + 4x^3y^2 + 4x^3y + 3x^2y^4 + 4x^2y^3"
        " + 4x^2y^2 + x^2y + 4xy^3 + xy^2",
    ),
    7: (
        "x^6y^5 + 3x^6y^4 + 2x^6y^3 + 2x^6y^2 + 6x^6y + x^5y^6 + 2x^5y^5 + x^5y^4 + 4x^5y^3 + 6x^5y"
        " + 3x^4y^6 + x^4y^5 + 5x^4y^4 + 2x^4y^2 + 2x^3y^6 + 4x^3y^5 + 4x^3y^2 + 4x^3y + 2x^2y^6"
        " + 2x^2y^4 + 4x^2y^3 + 4x^2y^2 + 3x^2y + 6xy^6 + 6xy^5 + 4xy^3 + 3xy^2",
        "5x^6y^6 + 3x^6y^5 + 2x^6y^4 + 3x^6y^3 + 6x^6y^2 + 6x^6y + 3x^5y^6 + 3x^5y^5 + 4x^5y^4"
        " + 4x^5y^3 + 5x^5y^2 + x^5y + 2x^4y^6 + 4x^4y^5 + x^4y^4 + 4x^4y^3 + 5x^4y^2 + 6x^4y"
        " + 3x^3y^6 + 4x^3y^5 + 4x^3y^4 + 2x^3y^3 + 6x^3y^2 + x^3y + 6x^2y^6 + 5x^2y^5 + 5x^2y^4"
        " + 6x^2y^3 + x^2y^2 + 6x^2y + 6xy^6 + xy^5 + 6xy^4 + xy^3 + 6xy^2",
        "2x^6y^6 + 6x^6y^5 + 5x^6y^4 + x^6y^3 + 6x^5y^6 + x^5y^5 + 5x^5y^4 + 2x^5y^3 + 3x^5y^2"
        " + 6x^5y + 5x^4y^6 + 5x^4y^5 + 4x^4y^4 + 5x^4y^2 + 2x^4y + x^3y^6 + 2x^3y^5 + 3x^3y^3"
        " + x^3y^2 + 4x^3y + 3x^2y^5 + 5x^2y^4 + x^2y^3 + 4x^2y^2 + 3x^2y + 6xy^5 + 2xy^4 + 4xy^3 + 3xy^2",
        "4x^6y^5 + 2x^6y^3 + 4x^6y^2 + 4x^5y^6 + 4x^5y^5 + x^5y^4 + 6x^5y^3 + 3x^5y^2 + x^4y^5"
        " + 4x^4y^4 + 5x^4y^3 + 4x^4y^2 + 6x^4y + 2x^3y^6 + 6x^3y^5 + 5x^3y^4 + 2x^3y^3 + 2x^3y"
        " + 4x^2y^6 + 3x^2y^5 + 4x^2y^4 + 2x^2y^2 + 5x^2y + 6xy^4 + 2xy^3 + 5xy^2",
    ),
}

# B_q for the generators at p = 3 in the factored style
FACTORED_B: Dict[int, Tuple[str, ...]] = {
    3: ("1 + xy + 2xy(x+y)", "1 + 2xy(x+y) + x^2y^2"),
}

# dim M^Q and dim (M^Q ∩ H1(U))
INVARIANT_DIMENSIONS: Dict[int, Tuple[int, int]] = {3: (5, 3), 5: (11, 9), 7: (17, 15)}

# dim H^1(Q, M)
H1_DIMENSIONS: Dict[int, int] = {3: 9, 5: 33, 7: 68}

# dim ker(B_τi - 1), the same for every i >= 1
KERNEL_DIMENSIONS: Dict[int, int] = {5: 13, 7: 19}

# α(τ_j)
ALPHA: Dict[int, Tuple[int, ...]] = {5: (2, 1, 4)}

# γ̃(τ_j) ≡ k_j y0 y1 (y0 + y1) mod (y0, y1)^4
TILDE_GAMMA_CUBIC: Dict[int, Tuple[int, ...]] = {5: (3, 4, 1)}

# extra invariant vectors at p = 7
S2_P7 = "x^5y^3 - x^4y^4 + x^3y^5 + x^4y^5"
A2_P7 = "x^5y^2 - x^4y^3 + x^3y^4 - x^2y^5 + x^4y^4 - 2x^3y^5 - x^4y^5"

# (ell, extension degrees m) used for point counts at each prime
POINT_COUNT_FIELDS: Dict[int, Tuple[Tuple[int, Tuple[int, ...]], ...]] = {
    3: ((7, (1, 2, 3)), (13, (1,))),
    5: ((11, (1, 2)),),
    7: ((29, (1,)),),
    11: ((23, (1,)),),
    13: ((53, (1,)),),
}
