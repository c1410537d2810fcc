import math


def gcd_twelve(n):
    return math.gcd(abs(n), 12)
