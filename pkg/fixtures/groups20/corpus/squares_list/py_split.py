def square(k):
    return k * k


def squares_list(n):
    return [square(i) for i in range(n)]
