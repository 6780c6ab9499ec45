"""Cost guards shared by the heavier computations."""

DEFAULT_MAX_CELLS = 20000
MAX_CHARACTER_TABLE_RANK = 6
MAX_SPRINGER_TABLE_RANK = 10


class CostBoundExceeded(RuntimeError):
    """Raised when a requested computation exceeds a configured size bound."""


def check_cells(n: int, d: int, max_cells: int = DEFAULT_MAX_CELLS) -> int:
    """Return N**d (N = 2n+1) after checking it against the cell ceiling."""
    cells = (2 * n + 1) ** d
    if cells > max_cells:
        raise CostBoundExceeded(
            f"tensor space of dimension {cells} exceeds the ceiling {max_cells}"
        )
    return cells
