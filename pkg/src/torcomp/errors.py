"""Shared exception types.

Every error that a verifier or the CLI maps to an exit code lives here, so the
exit-code contract (0 pass / 1 math failure / 2 certificate failure / 3 input
error) has a single source of truth.
"""


class TorcompError(Exception):
    """Base class for all package errors."""


class OutsideClosedClass(TorcompError):
    """An operation on the symbolic p-local class left the class.

    The offending value is never approximated; callers receive the reason
    string recorded by the derivation engine.
    """


class NoStabilization(TorcompError):
    """A tower/colimit did not certify stabilization within the allowed range."""

    def __init__(self, k_max, detail=""):
        self.k_max = k_max
        super().__init__(f"no stabilization certificate by k_max={k_max}" +
                         (f": {detail}" if detail else ""))


class WindowTooSmall(TorcompError):
    """A degree window was too small to certify the requested data."""


class NotComputable(TorcompError):
    """No certificate class applies (lim/lim1 outside the supported towers)."""


class NotInvariant(TorcompError):
    """An ideal failed the Hopf-algebroid invariance criterion."""


class PreconditionFailed(TorcompError):
    """A finite witness violated a stated precondition (e.g. j-injectivity)."""


class EmptySequence(TorcompError):
    """A Koszul construction was requested on an empty sequence."""


class UnsupportedIdeal(TorcompError):
    """Graded tower route requires positive-degree generators."""


class InputError(TorcompError):
    """Malformed user input (files, ring/module expressions, flags)."""


class InternalCheckFailed(TorcompError):
    """Two internal routes that must agree did not; always a bug or spec defect."""
