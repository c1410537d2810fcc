def halve(k):
    return k >> 1


def binary_ones(n):
    count = 0
    k = n
    while k > 0:
        count += k & 1
        k = halve(k)
    return count
