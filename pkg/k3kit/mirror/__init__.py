from k3kit.mirror.bfield import BField, FourPlane, extend_bfield, four_plane
from k3kit.mirror.marked import MarkedMSurfaceData, marked_pair, mirror_swap, same_summands
