def count_divisors(n):
    m = abs(n)
    if m == 0:
        return 0
    return sum(1 for i in range(1, m + 1) if m % i == 0)
