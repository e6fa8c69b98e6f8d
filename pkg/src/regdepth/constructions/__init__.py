from regdepth.constructions.partition import PartitionFamily
from regdepth.constructions.centerpoint import centerpoint
from regdepth.constructions.hamsandwich import ham_sandwich_2d, ham_sandwich_3d, ham_sandwich_check
from regdepth.constructions.catline import catline, catline_partition
from regdepth.constructions.sixsector import SixSectorWitness, six_sector_partition, is_transversal_triple
from regdepth.constructions.deepflats import construct_deep_line_3d, construct_deep_plane_3d
