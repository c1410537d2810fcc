def count_divisors(n: int) -> int:
    m = abs(n)
    if m == 0:
        return 0
    count = 0
    for i in range(1, m + 1):
        if m % i == 0:
            count += 1
    return count
