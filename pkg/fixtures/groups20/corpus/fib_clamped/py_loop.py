def fib_clamped(n: int) -> int:
    if n < 0:
        return 0
    k = min(n, 40)
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a
