class K3KitError(ValueError):
    """
    Errore di dominio della libreria. Ogni sottoclasse corrisponde a un
    codice di errore stabile, usato dalla CLI nella riga
    ``ERROR <code>: <detail>``.
    """

    @property
    def code(self):
        return type(self).__name__


# lattice-core

class EmptyDescriptor(K3KitError):
    pass


class MalformedDescriptor(K3KitError):
    pass


class LatticeMismatch(K3KitError):
    pass


class NotRoot(K3KitError):
    pass


class UnboundedConstraint(K3KitError):
    pass


class NotPrimitive(K3KitError):
    pass


class NotPositiveNorm(K3KitError):
    pass


class NotInHyperbolicSummand(K3KitError):
    pass


class ZeroVector(K3KitError):
    pass


class NotIntegral(K3KitError):
    pass


class BadConstraint(K3KitError):
    pass


# orbit-reduction

class VectorInLattice(K3KitError):
    pass


class NoUsableIsotropic(K3KitError):
    pass


class UnsupportedLattice(K3KitError):
    pass


class BudgetExceeded(K3KitError):
    pass


class ComponentUnreachable(BudgetExceeded):
    pass


class BadPolarization(K3KitError):
    pass


# period-domain

class NotPositivePlane(K3KitError):
    pass


class DegeneratePlane(K3KitError):
    pass


class NotIsometry(K3KitError):
    pass


class ImaginaryPartNotInCone(K3KitError):
    pass


class HypothesisViolated(K3KitError):
    pass


class PairNotHyperbolic(K3KitError):
    pass


# mirror-map

class NotBField(K3KitError):
    pass


class RiemannRelationViolated(K3KitError):
    pass


class NotPositiveFourPlane(K3KitError):
    pass


class NoHyperbolicSummand(K3KitError):
    pass


# curve-counting

class NotPolarization(K3KitError):
    pass


class NotHyperbolic(K3KitError):
    pass


class NegativeTruncation(K3KitError):
    pass


# spectral-eta

class LowerHalfPlane(K3KitError):
    pass


class PrecisionNotReached(K3KitError):
    pass


class InvalidPeriodPoint(K3KitError):
    pass


# shell

class UnsupportedFormat(K3KitError):
    pass
