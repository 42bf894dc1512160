"""The plain N^2 specialization of the morphism engine.

Grid degrees form a free commutative monoid, so the same lifting,
composition, and verification machinery applies with componentwise
addition in place of the Baumslag-Solitar product.  These wrappers fix
the mode and exist mostly for discoverability.
"""

from __future__ import annotations

from .category import (
    LambdaContext,
    VerificationReport,
    compose,
    verify_category,
    verify_factorization,
    verify_functor,
)
from .errors import PreconditionViolated
from .graphs import ColouredGraph, Path
from .morphisms import Morphism, lift_path
from .squares import CompleteCollection

GridContext = LambdaContext


def _require_grid(ops):
    if ops.name != "grid":
        raise PreconditionViolated("grid operation applied to a non-grid collection")


def lift_path_grid(g: ColouredGraph, collection: CompleteCollection, x: Path) -> Morphism:
    _require_grid(collection.ops)
    return lift_path(g, collection, x)


def compose_grid(ctx: GridContext, mu: Morphism, nu: Morphism) -> Morphism:
    _require_grid(ctx.ops)
    return compose(ctx, mu, nu)


def verify_grid(ctx: GridContext, max_len: int) -> VerificationReport:
    """All three law suites on a grid-mode context, merged into one report."""
    _require_grid(ctx.ops)
    laws = []
    for report in (
        verify_category(ctx, max_len),
        verify_functor(ctx, max_len),
        verify_factorization(ctx, max_len),
    ):
        laws.extend(report.laws)
    return VerificationReport(laws)
