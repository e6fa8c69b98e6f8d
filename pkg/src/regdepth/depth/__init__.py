from regdepth.depth.certificate import DepthCertificate
from regdepth.depth.engine import (crossing_distance, regression_depth, tukey_depth,
                                   flat_halfspace_depth, wedge_count)
from regdepth.depth.audit import certify_not_deeper
