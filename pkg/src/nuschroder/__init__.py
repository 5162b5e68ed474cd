"""nu-Schroder paths, trees and forests, and the face poset of the nu-associahedron."""

from .bijections import (
    forest_to_tree,
    highpeaks_to_valleys,
    hroot,
    large_to_small,
    left_flush,
    right_flush,
    small_to_large,
    tree_to_forest,
    valleys_to_highpeaks,
)
from .enumeration import (
    doubling_check,
    enum_dyck,
    enum_large,
    enum_small,
    euler_alternating,
    narayana_counts,
    narayana_shift_check,
    rational_catalan,
    rational_large_count,
    rational_narayana,
    rational_small_count,
    sch_counts,
    total_small,
)
from .forests import Bipartition, CoveringForest, base_path_of, labels_of, validate_forest
from .kernels import BACKEND
from .morse import MorseMatching, build_matching, classify, contractibility_certificate
from .paths import (
    BasePath,
    DomainError,
    ParseError,
    Point,
    StepWord,
    area2,
    horiz,
    is_large,
    is_small,
    parse_nu,
    parse_word,
    rational_base,
)
from .poset import (
    FacePoset,
    adjoin_bounds,
    build_forest_poset,
    build_path_poset,
    build_tree_poset,
    check_isomorphism,
    eulerian_intervals_check,
    f_vector,
    is_lattice,
    path_contractions,
)
from .trees import NuTree, make_tree, validate_tree
