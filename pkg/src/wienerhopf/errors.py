"""Exception hierarchy shared by all modules.

Every error carries an ``exit_code`` used by the CLI: 2 for violated
preconditions / malformed inputs, 3 for internal numerical inconsistencies
(results that contradict a certificate the code itself produced).
"""


class WienerHopfError(Exception):
    exit_code = 2


class RankMismatchError(WienerHopfError):
    """Group elements of different rank were combined."""


class GroupMismatchError(WienerHopfError):
    """Operands built over different ordered groups."""


class PreconditionError(WienerHopfError):
    """A documented operation precondition does not hold."""


class CapacityError(WienerHopfError):
    """Requested enumeration exceeds the stated cap or is infinite."""


class UnsupportedWindowError(WienerHopfError):
    """Order-prefix windows exist only for rank 1; use a box window."""


class AliasingError(WienerHopfError):
    """Quadrature node count below the Nyquist bound for the integrand."""


class ResolutionError(WienerHopfError):
    """Spectrum grid resolution below the 16x16 minimum."""


class ConditioningError(WienerHopfError):
    """Input too close to a degeneracy for certified computation."""


class NotFactorizableError(WienerHopfError):
    """Symbol has a root on the unit circle; no Wiener-Hopf splitting."""


class PossibleZeroError(WienerHopfError):
    """Sampled modulus stayed below the floor after maximal refinement."""
    exit_code = 3


class NumericalInconsistencyError(WienerHopfError):
    """A computed quantity violates an invariant it is guaranteed to satisfy."""
    exit_code = 3


class RootFindingError(WienerHopfError):
    """Simultaneous root iteration failed to converge."""
    exit_code = 3


class IndeterminateError(WienerHopfError):
    """Computed value sits inside the decision tolerance band."""
    exit_code = 3
