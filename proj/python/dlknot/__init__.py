"""Knot diagrams with double lines.

Thin wrapper over the compiled ``_core`` module; see ``help(dlknot._core)``.
Signs are passed as +1 / -1. Traces use the line-oriented text format of
the ``dlknot`` command line tool.
"""

from ._core import (  # noqa: F401
    Diagram,
    Move,
    apply,
    canonically_equal,
    degree,
    degree_k_family,
    distinguish_L_family,
    enumerate_moves,
    essential_count,
    essential_count_closed_form,
    essential_diagram,
    important_subsets,
    invert,
    link_to_diagram,
    linking_number,
    make_L,
    one_crossing,
    parities,
    parity_profile,
    parse,
    partner,
    project_winding_parity,
    remove_double_lines,
    replay,
    search,
    separability_check,
    serialize,
    strip_double_lines,
    stretch_family,
    winding_parity,
)
