def binary_ones(n):
    if n <= 0:
        return 0
    return bin(n).count("1")
