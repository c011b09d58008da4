from k3kit.counting.series import PowerSeries, divisor_sigma, euler_product, pentagonal_indices
from k3kit.counting.theta import e8_theta, theta_series
from k3kit.counting.profile import CountProfile, chamber_walls, count_roots_with_degree, restricted_profile
from k3kit.counting.products import TubeLineProduct, log_derivative_series, product_expansion
