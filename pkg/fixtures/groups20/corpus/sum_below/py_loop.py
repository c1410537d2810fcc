def sum_below(n: int) -> int:
    total = 0
    for i in range(n):
        total += i
    return total
