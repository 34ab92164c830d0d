"""Exact integer linear algebra on top of sympy's DomainMatrix."""

from collections.abc import Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

IntMatrix = Sequence[Sequence[int]]


def _domain_matrix(rows: IntMatrix, column_count: int) -> DomainMatrix:
    return DomainMatrix(
        [[ZZ(int(x)) for x in row] for row in rows],
        (len(rows), column_count),
        ZZ,
    )


def integer_rank(rows: IntMatrix, column_count: int) -> int:
    """Rank over the rationals of an integer matrix given as rows."""
    if not rows or column_count == 0:
        return 0
    return int(_domain_matrix(rows, column_count).rank())


def nonzero_invariant_factors(rows: IntMatrix, column_count: int) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith normal form."""
    if not rows or column_count == 0:
        return ()
    factors = invariant_factors(_domain_matrix(rows, column_count))
    return tuple(int(f) for f in factors if f != 0)


def cokernel_invariants(
    rows: IntMatrix, column_count: int
) -> tuple[int, tuple[int, ...]]:
    """
    Free rank and torsion coefficients of Z^rows / image(M).

    The matrix maps Z^columns to Z^rows.
    """
    factors = nonzero_invariant_factors(rows, column_count)
    free_rank = len(rows) - len(factors)
    return free_rank, tuple(f for f in factors if abs(f) > 1)


def quaternion_rotation(q: tuple[int, int, int, int]) -> tuple[int, list[list[int]]]:
    """
    Rotation of a nonzero integer quaternion, scaled to integers.

    Returns (n, M) with n = |q|^2 and M = n * R(q), R the rotation matrix
    of conjugation by q / |q|.
    """
    w, x, y, z = q
    n = w * w + x * x + y * y + z * z
    if n == 0:
        raise ValueError("Zero quaternion has no rotation")
    matrix = [
        [w * w + x * x - y * y - z * z, 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), w * w - x * x + y * y - z * z, 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), w * w - x * x - y * y + z * z],
    ]
    return n, matrix
