def clamp_forty(k):
    if k > 40:
        return 40
    return k


def fib_clamped(n):
    if n < 0:
        return 0
    a, b = 0, 1
    for _ in range(clamp_forty(n)):
        a, b = b, a + b
    return a
