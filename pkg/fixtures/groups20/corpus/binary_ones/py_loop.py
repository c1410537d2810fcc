def binary_ones(n: int) -> int:
    if n <= 0:
        return 0
    count = 0
    k = n
    while k > 0:
        count += k & 1
        k >>= 1
    return count
