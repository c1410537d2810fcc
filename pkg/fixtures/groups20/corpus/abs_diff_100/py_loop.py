def abs_diff_100(n: int) -> int:
    d = n - 100
    if d < 0:
        d = -d
    return d
