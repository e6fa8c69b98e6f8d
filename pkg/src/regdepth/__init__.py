from regdepth.exceptions import (RegDepthError, InputError, UnsupportedCaseError,
                                 DimensionError, VerificationError, SearchBudgetExhausted)
from regdepth.geometry import (parse_scalar, make_point, make_points, Hyperplane, DoubleWedge,
                               AffineFlat, VerticalInfinity)
from regdepth.depth import (DepthCertificate, crossing_distance, regression_depth, tukey_depth,
                            certify_not_deeper)
from regdepth.constructions import (PartitionFamily, centerpoint, ham_sandwich_2d, ham_sandwich_3d,
                                    catline, six_sector_partition, is_transversal_triple,
                                    construct_deep_line_3d, construct_deep_plane_3d)
from regdepth.search import deepest_line_2d, deepest_flat_heuristic_3d, ApproxParams, approx_deepest
from regdepth.tverberg import (TverbergResult, tverberg_partition_2d, catline_tverberg_partition,
                               verify_flat_tverberg)
from regdepth.bounds import BoundsTable, TABLE
from regdepth.datagen import GeneratorSpec, generate
from regdepth.dataset import Dataset

__version__ = '0.1.0'
