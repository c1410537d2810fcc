def last_digit(k):
    return abs(k) % 10


def digit_sum(n):
    m = abs(n)
    total = 0
    while m > 0:
        total += last_digit(m)
        m //= 10
    return total
