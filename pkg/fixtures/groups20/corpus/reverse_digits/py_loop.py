def reverse_digits(n: int) -> int:
    m = abs(n)
    rev = 0
    while m > 0:
        rev = rev * 10 + m % 10
        m //= 10
    return -rev if n < 0 else rev
