def remainder_by_twelve(k):
    return (k % 12 + 12) % 12


def gcd_twelve(n):
    a = 12
    b = remainder_by_twelve(n)
    while b:
        a, b = b, a % b
    return a
