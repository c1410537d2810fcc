from math import factorial


def factorial_small(n):
    k = min(n, 12)
    if k < 1:
        return 1
    return factorial(k)
