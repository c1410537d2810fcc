def abs_diff_100(n):
    return abs(n - 100)
