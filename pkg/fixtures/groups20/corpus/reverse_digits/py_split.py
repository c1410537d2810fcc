def strip_sign(k):
    return abs(k)


def reverse_digits(n):
    m = strip_sign(n)
    rev = 0
    while m > 0:
        rev = rev * 10 + m % 10
        m //= 10
    if n < 0:
        return -rev
    return rev
