"""Default resource caps.

Everything here exists to make runaway computations fail loudly instead of
eating all memory.  The CLI overrides these from the environment variables
STACKYRR_CONDUCTOR_CAP and STACKYRR_TUPLE_CAP; library callers can either
mutate the module globals or pass explicit keyword arguments where offered.
"""

DEFAULT_CONDUCTOR_CAP = 1000
CONDUCTOR_CAP = DEFAULT_CONDUCTOR_CAP

# Largest group that group_from_permutations will close.
GROUP_ORDER_CAP = 10080

# Largest number of tuples a brute-force commuting-tuple enumeration may
# visit, and the largest iterated-fixed-point set that may be built.
DEFAULT_TUPLE_CAP = 10**8
TUPLE_CAP = DEFAULT_TUPLE_CAP
POINT_CAP = 10**6
