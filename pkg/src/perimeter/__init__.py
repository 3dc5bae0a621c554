"""Integer partitions of fixed perimeter: statistics, boundary words,
bijections, counting recurrences and generating-function expansions."""

from .errors import CodecError, DomainError, PreconditionError
from .partitions import (
    BoundarySequence,
    LabeledPartition,
    Partition,
    format_labeled,
    format_partition,
    from_bits,
    parse_labeled,
    parse_partition,
    perimeter,
    stat_dif,
    stat_dist,
    stat_even,
    stat_even_star,
    stat_mod,
    stat_mod_prime,
    stat_rep,
    stat_rep_star,
    to_bits,
)
from .enumeration import (
    enum_extraordinary,
    enum_labeled_D,
    enum_labeled_M,
    enum_perimeter,
    enum_size,
)
from .bijections import orbit, phi_d, phi_d_inverse, xi, xi_complement
from .series import Polynomial, RationalExpr, TruncatedSeries, expand

__version__ = "0.1.0"
