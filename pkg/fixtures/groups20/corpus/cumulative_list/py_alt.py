from itertools import accumulate


def cumulative_list(n):
    return list(accumulate(range(n)))
