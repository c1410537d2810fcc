def shift_base(k):
    return k - 100


def abs_diff_100(n):
    d = shift_base(n)
    if d < 0:
        return -d
    return d
