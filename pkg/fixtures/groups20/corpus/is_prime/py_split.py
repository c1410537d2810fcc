def first_factor(k):
    if k < 2:
        return 1
    i = 2
    while i * i <= k:
        if k % i == 0:
            return i
        i += 1
    return k


def is_prime(n):
    return n >= 2 and first_factor(n) == n
