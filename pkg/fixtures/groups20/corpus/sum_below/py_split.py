def half_product(m):
    return m * (m - 1) // 2


def sum_below(n):
    if n <= 0:
        return 0
    return half_product(n)
