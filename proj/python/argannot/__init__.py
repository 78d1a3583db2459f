"""Python bindings for the argannot annotation toolkit."""

from ._argannot import (
    Document,
    Error,
    Layer,
    SCHEME_VERSION,
    cohens_kappa,
    diff,
    disagreement_summary,
    lint,
    load_document,
    load_layer,
    merge,
    merge_segments,
    render_diff,
    report,
    scheme_catalog,
    segment_text,
    split_segment,
    text_descriptives,
    validate,
)

__all__ = [
    "Document",
    "Error",
    "Layer",
    "SCHEME_VERSION",
    "cohens_kappa",
    "diff",
    "disagreement_summary",
    "lint",
    "load_document",
    "load_layer",
    "merge",
    "merge_segments",
    "render_diff",
    "report",
    "scheme_catalog",
    "segment_text",
    "split_segment",
    "text_descriptives",
    "validate",
]
