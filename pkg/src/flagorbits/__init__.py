"""Classification of orthogonal-group orbit closures in the flag variety.

Orbits are indexed by involutions in the symmetric group.  The package
decides (rational) smoothness of an orbit closure from its indexing
involution via graph degrees on the Bruhat interval, cross-checks the
pattern-avoidance classification, and builds the symbolic Gram-matrix slice
that certifies the even-size degree criterion.
"""

from .errors import (
    DegenerateFlag,
    FlagOrbitsError,
    InInterval,
    MalformedInput,
    NotANeighbor,
    NotAnOrbitTable,
    NotInInterval,
    PositionOutOfRange,
    SizeMismatch,
    TooLarge,
)
from .perms import (
    Perm,
    compose,
    conjugate,
    enumerate_involutions,
    fixed_points,
    format_perm,
    identity,
    insert_fixed_point,
    inverse,
    involution_count,
    is_involution,
    parse_perm,
    two_cycles,
    w0,
    w0_class,
)
from .bruhat import Interval, bruhat_leq, codim, interval, max_rank, rank
from .orbit_graph import (
    NeighborSet,
    conjugate_degrees,
    degree_in,
    export_dot,
    neighbors,
    w0_degree,
)
from .patterns import (
    EVEN_FIXED_BETWEEN,
    PatternHit,
    PatternSpec,
    bad_patterns,
    conjectured_rationally_smooth,
    conjectured_smooth,
    contains,
    occurrences,
    pattern_singular,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
