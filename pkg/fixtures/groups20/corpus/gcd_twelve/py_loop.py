def gcd_twelve(n: int) -> int:
    a = abs(n)
    b = 12
    while b:
        a, b = b, a % b
    return a
