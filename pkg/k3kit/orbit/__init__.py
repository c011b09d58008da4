from k3kit.orbit.generators import BlockAutomorphism, Generator, LiteralTransvection, Reflection, SignFlip, Transvection
from k3kit.orbit.word import IsometryWord
from k3kit.orbit.certificate import ReductionCertificate
from k3kit.orbit.norm_shift import approximate_norm_shift
from k3kit.orbit.reduction import HyperbolicSplit, canonicalize_root, gamma1_reduce, literal_transvection, transvection
from k3kit.orbit.discriminant import ComponentResult, discriminant_component, dual_polarization
from k3kit.orbit.sampling import random_isometry_word, random_root
