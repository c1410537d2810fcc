def square_of(k):
    return k * k


def range_pairs(n):
    k = min(max(n, 0), 6)
    return {i: square_of(i) for i in range(k)}
