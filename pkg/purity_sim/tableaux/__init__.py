"""
tableaux/ — Partitions, tableaux, the RSK algorithm and independent combinatorial oracles.
"""
from purity_sim.tableaux.oracles import enumerate_ssyt, enumerate_syt, greene_union, lis_weak, num_syt
from purity_sim.tableaux.partition import Overhangs, Partition, Word, overhangs, partitions_of
from purity_sim.tableaux.rsk import RskResult, rsk, rsk_insert
from purity_sim.tableaux.tableau import SemistandardTableau, StandardTableau, restrict_below

__all__ = [
    "Overhangs",
    "Partition",
    "RskResult",
    "SemistandardTableau",
    "StandardTableau",
    "Word",
    "enumerate_ssyt",
    "enumerate_syt",
    "greene_union",
    "lis_weak",
    "num_syt",
    "overhangs",
    "partitions_of",
    "restrict_below",
    "rsk",
    "rsk_insert",
]
