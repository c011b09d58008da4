from k3kit.period.frame import PeriodDomain
from k3kit.period.point import PeriodPoint, bergman_form, bergman_norm, gram_det, normalize_basis
from k3kit.period.automorphy import automorphy_residual, cocycle_residual, factor_of_automorphy
from k3kit.period.tube import TubePoint, tube_embed
from k3kit.period.split import SplitResult, recompose_h, split_h
