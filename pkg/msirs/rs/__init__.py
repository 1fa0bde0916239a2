""" Reed-Solomon codec for one component codeword """

from .poly import poly_add, poly_mul, poly_scale, poly_eval, poly_divmod, poly_derivative, poly_trim
from .code import RsCode, rs_code, generator_poly, encode, syndromes
from .decoder import DecodeStatus, DecodeResult, decode, berlekamp_massey, chien_search
