def digit_sum(n: int) -> int:
    m = abs(n)
    total = 0
    while m > 0:
        total += m % 10
        m //= 10
    return total
