""" GF(2^m) constants """

# Supported symbol sizes
MIN_M = 3
MAX_M = 12

# Default primitive polynomials, one per symbol size, encoded as (m+1)-bit integers.
# Minimum-weight conventional choices; GF(2^9) uses x^9 + x^4 + 1.
DEFAULT_PRIMITIVE_POLYS = {
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x89,  # x^7 + x^3 + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
}
