# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""Exceptions raised by fermatpy."""


class FermatpyError(Exception):
    pass


class ConfigurationError(FermatpyError, ValueError):
    pass


class DimensionMismatchError(FermatpyError, ValueError):
    """Operands live in different rings, over different primes or have incompatible shapes."""


class NotAUnitError(FermatpyError, ValueError):
    pass


class DescentError(FermatpyError, RuntimeError):
    """A coefficient that must lie in a smaller ring does not."""


class VerificationError(FermatpyError, AssertionError):
    """A runtime self-check of an algebraic identity failed."""

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        msg = f"identity check failed: {identity}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class PointCountCapError(FermatpyError, ValueError):
    pass


class MissingTableEntryError(FermatpyError, KeyError):
    pass


class NotNormalizedError(FermatpyError, ValueError):
    pass
