"""Exact vertex and edge stability numbers of graph invariants."""

from ._graphstab import (
    BudgetError,
    CodecError,
    DomainError,
    Graph,
    InputError,
    bound,
    check,
    corpus,
    covering_number,
    decompose,
    disjoint_union,
    edge_stability,
    evaluate,
    invariants,
    threshold_stability,
    verify,
    vertex_stability,
)

__all__ = [
    "BudgetError",
    "CodecError",
    "DomainError",
    "Graph",
    "InputError",
    "bound",
    "check",
    "corpus",
    "covering_number",
    "decompose",
    "disjoint_union",
    "edge_stability",
    "evaluate",
    "invariants",
    "threshold_stability",
    "verify",
    "vertex_stability",
]
