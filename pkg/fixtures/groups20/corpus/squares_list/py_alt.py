def squares_list(n):
    return [i * i for i in range(n)]
