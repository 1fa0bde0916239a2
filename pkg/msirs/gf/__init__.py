""" GF(2^m) arithmetic """

from .defs import MIN_M, MAX_M, DEFAULT_PRIMITIVE_POLYS
from .field import Field, field_new
