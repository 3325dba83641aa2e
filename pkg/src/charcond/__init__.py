"""Exact block-theoretic character computations for small finite groups.

Computes conductors of generalised characters, generalised decomposition
numbers and block data from ingested character-table datasets, and checks
the conductor identities and perfect-isometry properties on the shipped
corpus.
"""

from .blocks import Block, cartan_matrix, partition_blocks
from .cyclo import CycloNum, conductor, conductor_p, parse_cyclo
from .gendec import GendecMatrix, check_second_main, gendec_all
from .isometry import (BlockRef, IsometryCandidate, block_ref,
                       check_perfection, search_perfect_isometries)
from .tables import (CharTable, ClassFunction, GroupDataset, char_conductor,
                     default_corpus_dir, load_corpus, load_dataset,
                     virtual_character)

__all__ = [
    "Block", "BlockRef", "CharTable", "ClassFunction", "CycloNum",
    "GendecMatrix", "GroupDataset", "IsometryCandidate", "block_ref",
    "cartan_matrix", "char_conductor", "check_perfection",
    "check_second_main", "conductor", "conductor_p", "default_corpus_dir",
    "gendec_all", "load_corpus", "load_dataset", "parse_cyclo",
    "partition_blocks", "search_perfect_isometries", "virtual_character",
]

__version__ = "0.1.0"
