def partial_sum(k):
    return k * (k - 1) // 2


def cumulative_list(n):
    return [partial_sum(i + 1) for i in range(n)]
