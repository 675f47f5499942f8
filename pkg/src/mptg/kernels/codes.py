"""Bit flags naming the ordering conditions understood by the kernels."""

THREE_POINT = 1
FOUR_POINT = 2
FIVE_POINT_1 = 4
FIVE_POINT_2 = 8
SIX_POINT = 16
PROPER_MAXTOL = 32

MPTG = FOUR_POINT
PROPER_MPTG = THREE_POINT | FOUR_POINT | FIVE_POINT_1 | FIVE_POINT_2 | SIX_POINT

# cheapest first: the search evaluates tail checks in this order
ORDER = (THREE_POINT, FOUR_POINT, PROPER_MAXTOL, FIVE_POINT_2, FIVE_POINT_1, SIX_POINT)

ARITY = {
    THREE_POINT: 3,
    FOUR_POINT: 4,
    FIVE_POINT_1: 5,
    FIVE_POINT_2: 5,
    SIX_POINT: 6,
    PROPER_MAXTOL: 4,
}
