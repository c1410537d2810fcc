def range_pairs(n):
    k = min(max(n, 0), 6)
    return {i: i * i for i in range(k)}
