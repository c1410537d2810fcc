def double_t(k):
    return k * (k + 1)


def triangular(n):
    if n <= 0:
        return 0
    return double_t(n) // 2
