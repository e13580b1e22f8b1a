"""Exact graph-pebbling workbench.

Thin wrapper over the compiled core: graph builders (paths, cycles, complete
graphs, total graphs, Cartesian products), an exact t-pebbling solver with
move certificates, exhaustive pebbling-number search, and the 2t-property /
formula / product-bound checks.
"""

from ._core import (  # noqa: F401
    BudgetExceededError,
    Graph,
    IllegalMoveError,
    InvalidParameterError,
    Move,
    OversizeError,
    PebblingNumberReport,
    PerTargetNumber,
    PropertyReport,
    SolveResult,
    SolveStats,
    SpecParseError,
    __version__,
    build_complete,
    build_cycle,
    build_path,
    cartesian_product,
    check_2t_property,
    check_formula_tpn,
    check_product_bound,
    configurations,
    count_configurations,
    find_unsolvable,
    format_config,
    naive_solve,
    parse_graph_spec,
    pebbling_number,
    potential,
    solve,
    target_pebbling_number,
    total_graph,
    tpath_witness,
    verify_certificate,
)
