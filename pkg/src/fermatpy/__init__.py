# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import logging
from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("fermatpy")
except PackageNotFoundError:
    __version__ = "0.0.0+unknown"

logging.getLogger(__name__).addHandler(logging.NullHandler())

from .cohomology import D2Instance, build_complex, d2_kernel_test, h1_dimension  # noqa: E402
from .errors import FermatpyError, VerificationError  # noqa: E402
from .finite_field import FiniteField, residue_field  # noqa: E402
from .galois_action import CVector, b_unit, norm_of_b, tau  # noqa: E402
from .group_ring import Ring0Elt, Ring1Elt  # noqa: E402
from .homology import invariants_mq, module  # noqa: E402
from .linalg import FpMatrix, Subspace  # noqa: E402
from .render import parse_xy, to_xy_string  # noqa: E402
from .scalars import artin_schreier_ring, prime_field  # noqa: E402
from .zeta import CyclotomicInt, count_points, jacobi_sum  # noqa: E402

__all__ = [
    "CVector",
    "CyclotomicInt",
    "D2Instance",
    "FermatpyError",
    "FiniteField",
    "FpMatrix",
    "Ring0Elt",
    "Ring1Elt",
    "Subspace",
    "VerificationError",
    "__version__",
    "artin_schreier_ring",
    "b_unit",
    "build_complex",
    "count_points",
    "d2_kernel_test",
    "h1_dimension",
    "invariants_mq",
    "jacobi_sum",
    "module",
    "norm_of_b",
    "parse_xy",
    "prime_field",
    "residue_field",
    "tau",
    "to_xy_string",
]
