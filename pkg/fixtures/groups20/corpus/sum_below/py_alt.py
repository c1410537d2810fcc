def sum_below(n):
    """Sum of the integers in [0, n)."""
    m = n if n > 0 else 0
    return m * (m - 1) // 2
