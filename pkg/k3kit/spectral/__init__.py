from k3kit.spectral.eta import TorusModulus, eta_value
from k3kit.spectral.torus import DetReport, torus_det, zeta_derivative
from k3kit.spectral.assembly import k3_det_assembly
