"""Exception hierarchy.

Everything raised on purpose derives from :class:`SpinorEPRError`. Errors that
describe an unphysical request (off-shell momenta, a propagator pole, ...)
derive from :class:`PhysicsDomainError`; the CLI maps those to exit code 3.
"""


class SpinorEPRError(ValueError):
    pass


class PhysicsDomainError(SpinorEPRError):
    pass


# linear algebra
class NotHermitian(SpinorEPRError):
    pass


class NegativeEigenvalue(SpinorEPRError):
    pass


class DimensionMismatch(SpinorEPRError):
    pass


class NotNormalized(SpinorEPRError):
    pass


class NotDensityMatrix(SpinorEPRError):
    pass


# spinors and transforms
class OffShell(PhysicsDomainError):
    pass


class NotNormalizedSpinor(SpinorEPRError):
    pass


class NonUnitAxis(SpinorEPRError):
    pass


# scattering
class SingularKinematics(PhysicsDomainError):
    pass


class MomentumNotConserved(PhysicsDomainError):
    pass


# reduction to potentials
class NonPositiveR(PhysicsDomainError):
    pass


class ZeroMomentumTransfer(PhysicsDomainError):
    pass


class ZeroSeparation(PhysicsDomainError):
    pass


class StepTooLarge(SpinorEPRError):
    pass


# dynamics
class NonPositiveInput(PhysicsDomainError):
    pass


class NotAtRest(PhysicsDomainError):
    pass


class IndefiniteInitialSpin(SpinorEPRError):
    pass


# entanglement
class ZeroState(SpinorEPRError):
    pass


class NonOrthogonalSpinBasis(PhysicsDomainError):
    pass
