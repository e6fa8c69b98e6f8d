from regdepth.search.deepest import deepest_line_2d, deepest_flat_heuristic_3d
from regdepth.search.approx import ApproxParams, epsilon_sample, approx_deepest
