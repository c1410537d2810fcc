def fib_clamped(n):
    if n < 0:
        return 0
    k = 40 if n > 40 else n
    prev, cur = 0, 1
    i = 0
    while i < k:
        prev, cur = cur, prev + cur
        i += 1
    return prev
