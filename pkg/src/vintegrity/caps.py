"""Default enumeration caps.

Each solver takes its cap as a keyword argument defaulting to one of these
constants; callers that accept the cost can raise them per call.
"""

# Hard ceiling on the exponential oracles (vertices for subset enumeration,
# edges for edge-subset enumeration).
DEFAULT_ORACLE_CAP = 22

# Twin-class count ceiling for the 2**nd enumeration.
DEFAULT_ND_CAP = 24

# Cluster-deletion-set size ceiling; the guess count grows like 2**(2**k).
DEFAULT_CVD_CAP = 6

# Total-weight ceiling for the solvers whose tables are indexed by weight.
DEFAULT_UNARY_CAP = 10**6
