def odds_list(n):
    """Odd integers in [0, n)."""
    return list(range(1, n, 2))
