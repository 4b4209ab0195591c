"""Exact genus 0 and genus 1 Hurwitz numbers by independent routes.

Closed formulas, the boundary recursion, brute-force factorization
counts (direct search and a cut-join/connectedness sieve), a clump-graph
census, an exact check of the potential PDEs, and the genus-2 relation
for the partition [1^d].
"""

from .closed_form import (
    HurwitzValue,
    geotree_convert,
    graph_count_genus1,
    hurwitz_closed,
    hurwitz_closed_genus0,
    hurwitz_closed_genus1,
    tree_count_genus0,
)
from .errors import (
    BudgetExceeded,
    ConsistencyError,
    HurwitzError,
    TableFormatError,
    UnsupportedGenusError,
    ValidationError,
)
from .factorization import (
    ClassVector,
    connected_sieve,
    cut_join_step,
    hurwitz_from_factorizations,
    total_factorization_count,
    transitive_factorization_count_dfs,
)
from .graphs import genus1_count_oracle, tree_count_oracle
from .partitions import (
    Partition,
    conjugacy_class_size,
    elementary_symmetric,
    make_partition,
    ordered_splittings,
    parse_partition,
    part_splittings,
    partitions_of,
    r_value,
)
from .recursion import HurwitzTable, genus2_conjecture, hurwitz_recursive, load_table, save_table
from .series import TruncatedSeries, build_potential, verify_pde

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "build_potential",
    "ClassVector",
    "conjugacy_class_size",
    "connected_sieve",
    "ConsistencyError",
    "cut_join_step",
    "elementary_symmetric",
    "genus1_count_oracle",
    "genus2_conjecture",
    "geotree_convert",
    "graph_count_genus1",
    "hurwitz_closed",
    "hurwitz_closed_genus0",
    "hurwitz_closed_genus1",
    "hurwitz_from_factorizations",
    "hurwitz_recursive",
    "HurwitzError",
    "HurwitzTable",
    "HurwitzValue",
    "load_table",
    "make_partition",
    "ordered_splittings",
    "parse_partition",
    "part_splittings",
    "Partition",
    "partitions_of",
    "r_value",
    "save_table",
    "TableFormatError",
    "total_factorization_count",
    "transitive_factorization_count_dfs",
    "tree_count_genus0",
    "tree_count_oracle",
    "TruncatedSeries",
    "UnsupportedGenusError",
    "ValidationError",
    "verify_pde",
]
