def cumulative_list(n: int) -> list:
    sums = []
    total = 0
    for i in range(n):
        total += i
        sums.append(total)
    return sums
