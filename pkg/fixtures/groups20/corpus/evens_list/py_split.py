def is_even(k):
    return k % 2 == 0


def evens_list(n):
    return [i for i in range(n) if is_even(i)]
