def lowest_bit_cleared(k):
    return k & (k - 1)


def power_of_two(n):
    return n > 0 and lowest_bit_cleared(n) == 0
