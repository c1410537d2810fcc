def factorial_small(n: int) -> int:
    result = 1
    for i in range(2, min(n, 12) + 1):
        result *= i
    return result
