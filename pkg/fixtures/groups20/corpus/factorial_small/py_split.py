def clamp_twelve(k):
    if k > 12:
        return 12
    return k


def factorial_small(n):
    result = 1
    for i in range(2, clamp_twelve(n) + 1):
        result *= i
    return result
