def range_pairs(n: int) -> dict:
    k = min(max(n, 0), 6)
    pairs = {}
    for i in range(k):
        pairs[i] = i * i
    return pairs
