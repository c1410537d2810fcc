def power_of_two(n: int) -> bool:
    if n <= 0:
        return False
    ones = 0
    k = n
    while k > 0:
        ones += k & 1
        k >>= 1
    return ones == 1
