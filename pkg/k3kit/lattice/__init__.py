from k3kit.lattice.lattice import Lattice, Summand, direct_sum, k3_lattice, make_lattice
from k3kit.lattice.vector import ComplexVector, LatticeVector, is_primitive, pair
from k3kit.lattice.reflection import apply_matrix, is_isometry, reflect, reflection_matrix
from k3kit.lattice.enumeration import RootConstraint, enumerate_roots
from k3kit.lattice.complement import LatticeEmbedding, complement_of, orthogonal_complement
